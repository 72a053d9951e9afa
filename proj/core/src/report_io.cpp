#include <cstdio>
#include <fstream>

#include "arbor/json_io.hpp"
#include "arbor/verifier.hpp"

namespace arbor {

using nlohmann::json;

namespace {

CheckKind kind_from(const std::string& s) {
  if (s == "theorem") return CheckKind::Theorem;
  if (s == "conjecture") return CheckKind::Conjecture;
  if (s == "observation") return CheckKind::Observation;
  throw std::invalid_argument("unknown check kind '" + s + "'");
}

json witness_to_json(const Witness& w) {
  json values = json::object();
  for (const auto& [k, v] : w.values) values[k] = v;
  return json{{"class_index", w.class_index}, {"canon_key", w.key.bytes}, {"tree", w.tree_text}, {"values", values}};
}

Witness witness_from_json(const json& j) {
  Witness w;
  w.class_index = j.at("class_index").get<std::uint64_t>();
  w.key.bytes = j.at("canon_key").get<std::string>();
  w.tree_text = j.at("tree").get<std::string>();
  for (const auto& [k, v] : j.at("values").items()) w.values.emplace_back(k, v.get<std::string>());
  return w;
}

std::string approx_str(const Rational& r) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.12f", r.approx());
  return buf;
}

}  // namespace

json report_to_json(const SweepReport& r) {
  json checks = json::array();
  for (const auto& c : r.checks) {
    json ws = json::array();
    for (const auto& w : c.witnesses) ws.push_back(witness_to_json(w));
    checks.push_back(json{{"name", c.name},
                          {"kind", to_string(c.kind)},
                          {"description", c.description},
                          {"status", to_string(c.status)},
                          {"violations", c.violations},
                          {"witnesses", std::move(ws)}});
  }
  json extremes = json::array();
  for (const auto& e : r.extremes)
    extremes.push_back(json{{"model", e.model},
                            {"min", rational_to_json(e.min)},
                            {"min_index", e.min_index},
                            {"min_key", e.min_key.bytes},
                            {"min_tree", e.min_tree},
                            {"max", rational_to_json(e.max)},
                            {"max_index", e.max_index},
                            {"max_key", e.max_key.bytes},
                            {"max_tree", e.max_tree}});
  json values = json::array();
  for (const auto& v : r.values)
    values.push_back(json{{"class_index", v.class_index},
                          {"canon_key", v.key.bytes},
                          {"model", v.model},
                          {"value", rational_to_json(v.value)}});
  json j{{"schema", kReportSchema},
         {"sweep", r.sweep},
         {"order", r.order},
         {"class_count", r.class_count},
         {"checks", std::move(checks)},
         {"extremes", std::move(extremes)},
         {"values", std::move(values)},
         {"exit_code", r.exit_code()},
         {"wall_time_s", r.wall_time_s}};
  if (r.k) j["k"] = *r.k;
  return j;
}

SweepReport report_from_json(const json& j) {
  if (j.at("schema").get<std::string>() != kReportSchema)
    throw std::invalid_argument("unsupported report schema " + j.at("schema").dump());
  SweepReport r;
  r.sweep = j.at("sweep").get<std::string>();
  r.order = j.at("order").get<int>();
  if (j.contains("k")) r.k = j.at("k").get<int>();
  r.class_count = j.at("class_count").get<std::uint64_t>();
  for (const auto& c : j.at("checks")) {
    CheckResult cr;
    cr.name = c.at("name").get<std::string>();
    cr.kind = kind_from(c.at("kind").get<std::string>());
    cr.description = c.at("description").get<std::string>();
    cr.status = c.at("status").get<std::string>() == "pass" ? CheckStatus::Pass : CheckStatus::Fail;
    cr.violations = c.at("violations").get<std::uint64_t>();
    for (const auto& w : c.at("witnesses")) cr.witnesses.push_back(witness_from_json(w));
    r.checks.push_back(std::move(cr));
  }
  for (const auto& e : j.at("extremes")) {
    Extreme x;
    x.model = e.at("model").get<std::string>();
    x.min = rational_from_json(e.at("min"));
    x.max = rational_from_json(e.at("max"));
    x.min_index = e.at("min_index").get<std::uint64_t>();
    x.max_index = e.at("max_index").get<std::uint64_t>();
    x.min_key.bytes = e.at("min_key").get<std::string>();
    x.max_key.bytes = e.at("max_key").get<std::string>();
    x.min_tree = e.at("min_tree").get<std::string>();
    x.max_tree = e.at("max_tree").get<std::string>();
    r.extremes.push_back(std::move(x));
  }
  for (const auto& v : j.at("values"))
    r.values.push_back(ValueRow{v.at("class_index").get<std::uint64_t>(), CanonKey{v.at("canon_key").get<std::string>()},
                                v.at("model").get<std::string>(), rational_from_json(v.at("value"))});
  r.wall_time_s = j.value("wall_time_s", 0.0);
  return r;
}

void export_report(const SweepReport& report, std::string_view format, std::ostream& out) {
  if (format == "json") {
    out << report_to_json(report).dump(2) << "\n";
  } else if (format == "csv") {
    out << "class_index,canon_key,model,num,den,approx\n";
    for (const auto& v : report.values)
      out << v.class_index << "," << v.key.bytes << "," << v.model << "," << v.value.num_str() << ","
          << v.value.den_str() << "," << approx_str(v.value) << "\n";
  } else {
    throw std::invalid_argument("unknown report format '" + std::string(format) + "' (expected json or csv)");
  }
  if (!out) throw std::runtime_error("failed writing report");
}

void export_report(const SweepReport& report, std::string_view format, const std::string& path) {
  if (format != "json" && format != "csv")
    throw std::invalid_argument("unknown report format '" + std::string(format) + "' (expected json or csv)");
  std::ofstream f(path, std::ios::binary);
  if (!f) throw std::runtime_error("cannot open '" + path + "' for writing");
  export_report(report, format, f);
  f.flush();
  if (!f) throw std::runtime_error("failed writing '" + path + "'");
}

}  // namespace arbor
