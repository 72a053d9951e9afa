#include "arbor/canonical.hpp"

#include <algorithm>

namespace arbor {

std::vector<Vertex> centers(const Tree& t) {
  int n = t.order();
  if (n <= 2) {
    std::vector<Vertex> all(n);
    for (int i = 0; i < n; ++i) all[i] = i;
    return all;
  }
  std::vector<int> deg(n);
  std::vector<Vertex> layer;
  for (Vertex v = 0; v < n; ++v) {
    deg[v] = t.degree(v);
    if (deg[v] == 1) layer.push_back(v);
  }
  int remaining = n;
  while (remaining > 2) {
    remaining -= static_cast<int>(layer.size());
    std::vector<Vertex> next;
    for (Vertex leaf : layer)
      for (Vertex w : t.neighbors(leaf))
        if (--deg[w] == 1) next.push_back(w);
    layer = std::move(next);
  }
  std::sort(layer.begin(), layer.end());
  return layer;
}

std::string rooted_encoding(const Tree& t, Vertex root) {
  t.check_vertex(root);
  int n = t.order();
  std::vector<Vertex> order{root};
  std::vector<Vertex> parent(n, -1);
  order.reserve(n);
  for (std::size_t i = 0; i < order.size(); ++i)
    for (Vertex y : t.neighbors(order[i]))
      if (y != parent[order[i]]) {
        parent[y] = order[i];
        order.push_back(y);
      }
  std::vector<std::string> enc(n);
  std::vector<std::vector<std::string*>> kids(n);
  for (auto it = order.rbegin(); it != order.rend(); ++it) {
    Vertex v = *it;
    auto& ch = kids[v];
    std::sort(ch.begin(), ch.end(), [](const std::string* a, const std::string* b) { return *a < *b; });
    std::size_t len = 2;
    for (auto* c : ch) len += c->size();
    std::string& s = enc[v];
    s.reserve(len);
    s.push_back('(');
    for (auto* c : ch) s += *c;
    s.push_back(')');
    if (parent[v] >= 0) kids[parent[v]].push_back(&s);
  }
  return std::move(enc[root]);
}

CanonKey canonical_key(const Tree& t) {
  auto c = centers(t);
  std::string best = rooted_encoding(t, c[0]);
  if (c.size() == 2) best = std::min(best, rooted_encoding(t, c[1]));
  return CanonKey{std::move(best)};
}

CanonKey rooted_key(const Tree& t, Vertex root) { return CanonKey{rooted_encoding(t, root)}; }

}  // namespace arbor
