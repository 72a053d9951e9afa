#include "arbor/tree_io.hpp"

#include <charconv>
#include <vector>

namespace arbor {

namespace {

[[noreturn]] void syntax(int line, const std::string& msg) {
  throw TreeError(TreeErrc::Syntax, "line " + std::to_string(line) + ": " + msg);
}

std::vector<long> parse_ints(std::string_view line, int lineno) {
  std::vector<long> out;
  std::size_t i = 0;
  while (i < line.size()) {
    if (line[i] == ' ' || line[i] == '\t') {
      ++i;
      continue;
    }
    long value = 0;
    auto [ptr, ec] = std::from_chars(line.data() + i, line.data() + line.size(), value);
    if (ec != std::errc() || ptr == line.data() + i)
      syntax(lineno, "expected an integer near '" + std::string(line.substr(i)) + "'");
    i = static_cast<std::size_t>(ptr - line.data());
    if (i < line.size() && line[i] != ' ' && line[i] != '\t')
      syntax(lineno, "unexpected character '" + std::string(1, line[i]) + "'");
    out.push_back(value);
  }
  return out;
}

int parse_positive(std::string_view s, const char* what) {
  int v = 0;
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc() || ptr != s.data() + s.size() || s.empty())
    throw TreeError(TreeErrc::Syntax, std::string("bad ") + what + " '" + std::string(s) + "'");
  if (v < 1) throw TreeError(TreeErrc::InvalidOrder, std::string(what) + " must be positive");
  return v;
}

}  // namespace

Tree parse_tree(std::string_view text) {
  std::vector<std::string_view> lines;
  std::size_t start = 0;
  while (start <= text.size()) {
    auto end = text.find('\n', start);
    if (end == std::string_view::npos) end = text.size();
    auto line = text.substr(start, end - start);
    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
    lines.push_back(line);
    start = end + 1;
  }
  while (!lines.empty() && lines.back().find_first_not_of(" \t") == std::string_view::npos) lines.pop_back();
  if (lines.empty()) syntax(1, "empty input");

  auto header = parse_ints(lines[0], 1);
  if (header.size() != 1) syntax(1, "expected the vertex count alone on the first line");
  if (header[0] < 1 || header[0] > 1'000'000) syntax(1, "vertex count out of range");
  int n = static_cast<int>(header[0]);

  std::vector<Edge> edges;
  for (std::size_t i = 1; i < lines.size(); ++i) {
    int lineno = static_cast<int>(i + 1);
    auto vals = parse_ints(lines[i], lineno);
    if (vals.size() != 2) syntax(lineno, "expected two vertex labels \"u v\"");
    for (long x : vals)
      if (x < 0 || x >= n)
        throw TreeError(TreeErrc::LabelOutOfRange,
                        "line " + std::to_string(lineno) + ": label " + std::to_string(x) + " not in 0.." +
                            std::to_string(n - 1));
    edges.emplace_back(static_cast<int>(vals[0]), static_cast<int>(vals[1]));
  }
  return Tree::from_edges(n, edges);
}

std::string format_tree(const Tree& t) {
  std::string out = std::to_string(t.order()) + "\n";
  for (const auto& [u, v] : t.edges()) out += std::to_string(u) + " " + std::to_string(v) + "\n";
  return out;
}

Tree parse_tree_spec(std::string_view spec) {
  auto trimmed = spec;
  while (!trimmed.empty() && (trimmed.front() == ' ' || trimmed.front() == '\n')) trimmed.remove_prefix(1);
  if (trimmed.starts_with("P:")) return path(parse_positive(trimmed.substr(2), "path order"));
  if (trimmed.starts_with("S:")) return star(parse_positive(trimmed.substr(2), "star order"));
  if (trimmed.starts_with("SP:")) {
    std::vector<int> legs;
    auto rest = trimmed.substr(3);
    while (true) {
      auto comma = rest.find(',');
      legs.push_back(parse_positive(rest.substr(0, comma), "spider leg"));
      if (comma == std::string_view::npos) break;
      rest = rest.substr(comma + 1);
    }
    return spider(legs);
  }
  return parse_tree(spec);
}

}  // namespace arbor
