#include "arbor/tree.hpp"

#include <algorithm>
#include <numeric>
#include <string>

namespace arbor {

const char* to_string(TreeErrc code) {
  switch (code) {
    case TreeErrc::InvalidOrder: return "InvalidOrder";
    case TreeErrc::LabelOutOfRange: return "LabelOutOfRange";
    case TreeErrc::SelfLoop: return "SelfLoop";
    case TreeErrc::DuplicateEdge: return "DuplicateEdge";
    case TreeErrc::WrongEdgeCount: return "WrongEdgeCount";
    case TreeErrc::NotConnected: return "NotConnected";
    case TreeErrc::InvalidSpider: return "InvalidSpider";
    case TreeErrc::VertexOutOfRange: return "VertexOutOfRange";
    case TreeErrc::Syntax: return "Syntax";
  }
  return "Unknown";
}

namespace {

std::string edge_str(const Edge& e) {
  return "(" + std::to_string(e.first) + "," + std::to_string(e.second) + ")";
}

}  // namespace

Tree Tree::from_edges(int n, std::span<const Edge> edges) {
  if (n < 1) throw TreeError(TreeErrc::InvalidOrder, "tree order must be positive, got " + std::to_string(n));
  std::vector<Edge> norm;
  norm.reserve(edges.size());
  for (const auto& e : edges) {
    for (Vertex x : {e.first, e.second})
      if (x < 0 || x >= n)
        throw TreeError(TreeErrc::LabelOutOfRange,
                        "edge " + edge_str(e) + ": label " + std::to_string(x) + " not in 0.." + std::to_string(n - 1));
    if (e.first == e.second) throw TreeError(TreeErrc::SelfLoop, "self-loop " + edge_str(e));
    norm.emplace_back(std::min(e.first, e.second), std::max(e.first, e.second));
  }
  std::vector<Edge> sorted = norm;
  std::sort(sorted.begin(), sorted.end());
  if (auto it = std::adjacent_find(sorted.begin(), sorted.end()); it != sorted.end())
    throw TreeError(TreeErrc::DuplicateEdge, "duplicate edge " + edge_str(*it));
  if (static_cast<int>(sorted.size()) != n - 1)
    throw TreeError(TreeErrc::WrongEdgeCount, "expected " + std::to_string(n - 1) + " edges, got " +
                                                  std::to_string(sorted.size()));
  Tree t = make_tree_unchecked(n, std::move(sorted));
  std::vector<char> seen(n, 0);
  std::vector<Vertex> stack{0};
  seen[0] = 1;
  int reached = 1;
  while (!stack.empty()) {
    Vertex x = stack.back();
    stack.pop_back();
    for (Vertex y : t.neighbors(x))
      if (!seen[y]) {
        seen[y] = 1;
        ++reached;
        stack.push_back(y);
      }
  }
  if (reached != n) {
    Vertex missing = static_cast<Vertex>(std::find(seen.begin(), seen.end(), 0) - seen.begin());
    throw TreeError(TreeErrc::NotConnected, "vertex " + std::to_string(missing) + " is not connected to vertex 0");
  }
  return t;
}

Tree make_tree_unchecked(int n, std::vector<Edge> edges) {
  Tree t;
  t.n_ = n;
  for (auto& e : edges)
    if (e.first > e.second) std::swap(e.first, e.second);
  std::sort(edges.begin(), edges.end());
  t.edges_ = std::move(edges);
  t.build_adjacency();
  return t;
}

void Tree::build_adjacency() {
  offsets_.assign(n_ + 1, 0);
  for (const auto& [u, v] : edges_) {
    ++offsets_[u + 1];
    ++offsets_[v + 1];
  }
  std::partial_sum(offsets_.begin(), offsets_.end(), offsets_.begin());
  adj_.assign(2 * edges_.size(), 0);
  std::vector<int> fill(offsets_.begin(), offsets_.end() - 1);
  for (const auto& [u, v] : edges_) {
    adj_[fill[u]++] = v;
    adj_[fill[v]++] = u;
  }
  for (int v = 0; v < n_; ++v) std::sort(adj_.begin() + offsets_[v], adj_.begin() + offsets_[v + 1]);
}

void Tree::check_vertex(Vertex v) const {
  if (!contains(v))
    throw TreeError(TreeErrc::VertexOutOfRange,
                    "vertex " + std::to_string(v) + " not in 0.." + std::to_string(n_ - 1));
}

Tree path(int n) {
  if (n < 1) throw TreeError(TreeErrc::InvalidOrder, "path order must be positive");
  std::vector<Edge> edges;
  for (int i = 0; i + 1 < n; ++i) edges.emplace_back(i, i + 1);
  return make_tree_unchecked(n, std::move(edges));
}

Tree star(int n) {
  if (n < 1) throw TreeError(TreeErrc::InvalidOrder, "star order must be positive");
  std::vector<Edge> edges;
  for (int i = 1; i < n; ++i) edges.emplace_back(0, i);
  return make_tree_unchecked(n, std::move(edges));
}

Tree spider(std::span<const int> legs) {
  if (legs.size() < 3)
    throw TreeError(TreeErrc::InvalidSpider, "a spider needs at least 3 legs, got " + std::to_string(legs.size()));
  std::vector<Edge> edges;
  int next = 1;
  for (int len : legs) {
    if (len < 1) throw TreeError(TreeErrc::InvalidSpider, "spider leg lengths must be positive");
    Vertex prev = 0;
    for (int i = 0; i < len; ++i) {
      edges.emplace_back(prev, next);
      prev = next++;
    }
  }
  return make_tree_unchecked(next, std::move(edges));
}

std::vector<Vertex> component_vertices(const Tree& t, Vertex removed, Vertex start) {
  std::vector<Vertex> out{start};
  std::vector<Vertex> parent{removed};
  for (std::size_t i = 0; i < out.size(); ++i) {
    Vertex x = out[i];
    for (Vertex y : t.neighbors(x))
      if (y != parent[i] && y != removed) {
        out.push_back(y);
        parent.push_back(x);
      }
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<Vertex> component_within(const Tree& t, std::span<const Vertex> within, Vertex removed, Vertex start) {
  std::vector<char> allowed(t.order(), 0);
  for (Vertex v : within) allowed[v] = 1;
  allowed[removed] = 0;
  std::vector<Vertex> out{start};
  allowed[start] = 0;
  for (std::size_t i = 0; i < out.size(); ++i)
    for (Vertex y : t.neighbors(out[i]))
      if (allowed[y]) {
        allowed[y] = 0;
        out.push_back(y);
      }
  std::sort(out.begin(), out.end());
  return out;
}

Component induced_subtree(const Tree& t, std::span<const Vertex> sorted_vertices) {
  std::vector<Vertex> to_original(sorted_vertices.begin(), sorted_vertices.end());
  auto local = [&](Vertex v) -> int {
    auto it = std::lower_bound(to_original.begin(), to_original.end(), v);
    return (it != to_original.end() && *it == v) ? static_cast<int>(it - to_original.begin()) : -1;
  };
  std::vector<Edge> edges;
  for (std::size_t i = 0; i < to_original.size(); ++i)
    for (Vertex y : t.neighbors(to_original[i])) {
      int j = local(y);
      if (j > static_cast<int>(i)) edges.emplace_back(static_cast<int>(i), j);
    }
  int k = static_cast<int>(to_original.size());
  return Component{make_tree_unchecked(k, std::move(edges)), std::move(to_original)};
}

std::vector<Component> remove_vertex(const Tree& t, Vertex v) {
  t.check_vertex(v);
  std::vector<Component> out;
  for (Vertex w : t.neighbors(v)) {
    auto verts = component_vertices(t, v, w);
    out.push_back(induced_subtree(t, verts));
  }
  return out;
}

}  // namespace arbor
