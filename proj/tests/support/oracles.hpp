#pragma once

// Independent reference implementations used only by the tests. Everything
// here works on a plain adjacency list and bitmask candidate sets and shares
// no code with the engine beyond the Tree and Rational types.

#include <cstdint>
#include <vector>

#include "arbor/rational.hpp"
#include "arbor/tree.hpp"

namespace oracle {

using arbor::Rational;
using Mask = std::uint32_t;

struct Graph {
  int n = 0;
  std::vector<std::vector<int>> adj;
};

Graph from_tree(const arbor::Tree& t);

/// Vertices of `cand` reachable from `start` without entering `removed`.
Mask component_containing(const Graph& g, Mask cand, int removed, int start);

/// Exhaustive evaluation of every play model by direct expectation over the
/// target and maximization over moves, with no cache of any kind.
struct Bundle {
  Rational oo;
  std::vector<Rational> oo_by_vertex;
  std::vector<int> oo_moves;
  Rational p;
  std::vector<Rational> p_by_vertex;
  std::vector<int> p_moves;
  Rational q;
  std::vector<Rational> q_by_vertex;
  Rational rr;
  std::vector<Rational> rr_by_vertex;
};
Bundle brute_bundle(const arbor::Tree& t);

/// Distribution of the number of uniform guesses until the target is hit,
/// enumerating every target and every guess sequence.
std::vector<Rational> brute_stopping(const arbor::Tree& t);

/// First-player win probability with the target fixed at `target`, read off
/// as the odd mass of the conditional stopping-time distribution.
Rational brute_fixed_target(const arbor::Tree& t, int target);

/// Limb numbers by sizing every component of every T minus v.
std::vector<int> brute_limbs(const arbor::Tree& t);

/// Every labeled tree on n vertices, decoded from all Prüfer sequences.
std::vector<arbor::Tree> prufer_trees(int n);

/// Backtracking search for an edge-preserving bijection.
bool isomorphic(const arbor::Tree& a, const arbor::Tree& b);

/// One representative per isomorphism class among all labeled trees on n vertices.
std::vector<arbor::Tree> prufer_classes(int n);

/// Relabels t by a permutation (new label of v is perm[v]).
arbor::Tree relabel(const arbor::Tree& t, const std::vector<int>& perm);

}  // namespace oracle
