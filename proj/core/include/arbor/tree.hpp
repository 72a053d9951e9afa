#pragma once

#include <cstdint>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace arbor {

using Vertex = int;
using Edge = std::pair<Vertex, Vertex>;

enum class TreeErrc {
  InvalidOrder,
  LabelOutOfRange,
  SelfLoop,
  DuplicateEdge,
  WrongEdgeCount,
  NotConnected,
  InvalidSpider,
  VertexOutOfRange,
  Syntax,
};

const char* to_string(TreeErrc code);

/// Raised for every rejected tree or out-of-range vertex. The message names
/// the offending datum (edge, label, or input line).
class TreeError : public std::runtime_error {
 public:
  TreeError(TreeErrc code, const std::string& what) : std::runtime_error(what), code_(code) {}
  TreeErrc code() const { return code_; }

 private:
  TreeErrc code_;
};

/// Immutable undirected tree on vertices 0..n-1. Construction validates that
/// the edge list forms a tree; adjacency lists are sorted.
class Tree {
 public:
  /// Validating constructor (the build_tree operation).
  static Tree from_edges(int n, std::span<const Edge> edges);
  static Tree from_edges(int n, std::initializer_list<Edge> edges) {
    return from_edges(n, std::span<const Edge>(edges.begin(), edges.size()));
  }

  int order() const { return n_; }
  std::span<const Edge> edges() const { return edges_; }
  std::span<const Vertex> neighbors(Vertex v) const {
    return {adj_.data() + offsets_[v], adj_.data() + offsets_[v + 1]};
  }
  int degree(Vertex v) const { return offsets_[v + 1] - offsets_[v]; }
  bool is_leaf(Vertex v) const { return degree(v) == 1; }
  bool contains(Vertex v) const { return v >= 0 && v < n_; }
  /// Throws TreeError(VertexOutOfRange) unless contains(v).
  void check_vertex(Vertex v) const;

  friend bool operator==(const Tree& a, const Tree& b) { return a.n_ == b.n_ && a.edges_ == b.edges_; }

 private:
  friend Tree make_tree_unchecked(int n, std::vector<Edge> edges);
  Tree() = default;
  void build_adjacency();

  int n_ = 0;
  std::vector<Edge> edges_;  // normalized (u < v), sorted
  std::vector<int> offsets_;
  std::vector<Vertex> adj_;
};

/// Builds a tree without validation; callers guarantee the edges form a tree.
Tree make_tree_unchecked(int n, std::vector<Edge> edges);

Tree path(int n);
Tree star(int n);
/// Spider with head 0 and legs of the given lengths; needs at least three legs.
Tree spider(std::span<const int> legs);
inline Tree spider(std::initializer_list<int> legs) {
  return spider(std::span<const int>(legs.begin(), legs.size()));
}

/// A connected piece of a larger tree, relabeled 0..k-1 in increasing order of
/// the original labels.
struct Component {
  Tree tree;
  std::vector<Vertex> to_original;
};

/// Components of T minus v, one per neighbor of v in sorted neighbor order.
std::vector<Component> remove_vertex(const Tree& t, Vertex v);

/// Vertex set of the component of T minus `removed` that contains `start`, sorted.
/// `start` must differ from `removed`.
std::vector<Vertex> component_vertices(const Tree& t, Vertex removed, Vertex start);

/// Like component_vertices, but confined to the connected vertex set `within`
/// (sorted): the candidates still reachable from `start` once `removed` is gone.
std::vector<Vertex> component_within(const Tree& t, std::span<const Vertex> within, Vertex removed, Vertex start);

/// Induced subtree on a sorted, connected vertex set.
Component induced_subtree(const Tree& t, std::span<const Vertex> sorted_vertices);

}  // namespace arbor
