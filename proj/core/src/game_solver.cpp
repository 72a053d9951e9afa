#include "arbor/game.hpp"

#include <algorithm>
#include <map>

#include "arbor/canonical.hpp"

namespace arbor {

const char* to_string(Model m) {
  switch (m) {
    case Model::Oo: return "oo";
    case Model::SemirandomFirst: return "semirandom-first";
    case Model::SemirandomSecond: return "semirandom-second";
    case Model::RandomRandom: return "random-random";
  }
  return "?";
}

std::optional<Model> parse_model(std::string_view name) {
  for (Model m : {Model::Oo, Model::SemirandomFirst, Model::SemirandomSecond, Model::RandomRandom})
    if (name == to_string(m)) return m;
  return std::nullopt;
}

Prob StoppingDist::total() const {
  Rational s(0);
  for (const auto& p : probs) s += p;
  return s;
}

Prob StoppingDist::odd_mass() const {
  Rational s(0);
  for (std::size_t i = 0; i < probs.size(); i += 2) s += probs[i];
  return s;
}

Rational StoppingDist::expectation() const {
  Rational s(0);
  for (std::size_t i = 0; i < probs.size(); ++i) s += Rational(static_cast<long>(i + 1)) * probs[i];
  return s;
}

std::vector<Vertex> argmax_set(const std::vector<Prob>& values) {
  std::vector<Vertex> out;
  if (values.empty()) return out;
  const Prob& best = *std::max_element(values.begin(), values.end());
  for (std::size_t i = 0; i < values.size(); ++i)
    if (values[i] == best) out.push_back(static_cast<Vertex>(i));
  return out;
}

std::vector<Vertex> min_odd_component_vertices(const Tree& t) {
  int n = t.order();
  std::vector<int> odd(n, 0);
  for (Vertex v = 0; v < n; ++v)
    for (Vertex w : t.neighbors(v))
      if (component_vertices(t, v, w).size() % 2 == 1) ++odd[v];
  int best = *std::min_element(odd.begin(), odd.end());
  std::vector<Vertex> out;
  for (Vertex v = 0; v < n; ++v)
    if (odd[v] == best) out.push_back(v);
  return out;
}

namespace {

struct Piece {
  Component comp;
  CanonKey key;
};

// Components of T minus v with their canonical keys.
std::vector<Piece> pieces(const Tree& t, Vertex v) {
  std::vector<Piece> out;
  for (Vertex w : t.neighbors(v)) {
    auto verts = component_vertices(t, v, w);
    Component c = induced_subtree(t, verts);
    CanonKey key = canonical_key(c.tree);
    out.push_back(Piece{std::move(c), std::move(key)});
  }
  return out;
}

Rational mean(const std::vector<Prob>& xs) {
  Rational s(0);
  for (const auto& x : xs) s += x;
  return s / Rational(static_cast<long>(xs.size()));
}

}  // namespace

GameSolver::GameSolver() : GameSolver(std::make_shared<MemoTable>()) {}

GameSolver::GameSolver(std::shared_ptr<MemoTable> memo, SolverLimits limits)
    : memo_(std::move(memo)),
      stopping_memo_(std::make_shared<ConcurrentMemo<std::vector<Prob>>>()),
      fixed_memo_(std::make_shared<ConcurrentMemo<Prob>>()),
      limits_(limits) {}

void GameSolver::check_budget() {
  if (limits_.max_classes != 0 && ++computed_ > limits_.max_classes)
    throw BudgetExceeded("evaluation exceeded the limit of " + std::to_string(limits_.max_classes) +
                         " cached subtree classes");
}

GameSolver::PerVertex GameSolver::per_vertex(const Tree& t) {
  int n = t.order();
  PerVertex pv;
  Rational inv_n(1, n);
  for (Vertex v = 0; v < n; ++v) {
    Rational s_oo(0), s_p(0), s_q(0), s_rr(0);
    for (const auto& piece : pieces(t, v)) {
      ClassValues cv = class_values(piece.comp.tree, piece.key);
      Rational size(piece.comp.tree.order());
      s_oo += size * cv.oo;
      s_p += size * cv.p_first;
      s_q += size * cv.q_second;
      s_rr += size * cv.rr;
    }
    pv.oo.push_back(Rational(1) - inv_n * s_oo);
    pv.p_first.push_back(inv_n * (Rational(1) + s_q));
    pv.q_second.push_back(inv_n * s_p);
    pv.rr.push_back(Rational(1) - inv_n * s_rr);
  }
  return pv;
}

ClassValues GameSolver::class_values(const Tree& t) { return class_values(t, canonical_key(t)); }

ClassValues GameSolver::class_values(const Tree& t, const CanonKey& key) {
  if (auto hit = memo_->find(key)) return *hit;
  check_budget();
  PerVertex pv = per_vertex(t);
  ClassValues cv{*std::max_element(pv.oo.begin(), pv.oo.end()),
                 *std::max_element(pv.p_first.begin(), pv.p_first.end()), mean(pv.q_second), mean(pv.rr)};
  memo_->insert(key, cv);
  return cv;
}

ValueBundle GameSolver::bundle(const Tree& t) {
  PerVertex pv = per_vertex(t);
  ValueBundle b;
  b.oo_value = *std::max_element(pv.oo.begin(), pv.oo.end());
  b.oo_moves = argmax_set(pv.oo);
  b.p_first = *std::max_element(pv.p_first.begin(), pv.p_first.end());
  b.p_first_moves = argmax_set(pv.p_first);
  b.q_second = mean(pv.q_second);
  b.rr_value = mean(pv.rr);
  b.oo_by_vertex = std::move(pv.oo);
  b.p_first_by_vertex = std::move(pv.p_first);
  b.q_second_by_vertex = std::move(pv.q_second);
  b.rr_by_vertex = std::move(pv.rr);
  memo_->insert(canonical_key(t), ClassValues{b.oo_value, b.p_first, b.q_second, b.rr_value});
  return b;
}

ModelValue GameSolver::value_oo(const Tree& t) {
  auto pv = per_vertex(t);
  auto moves = argmax_set(pv.oo);
  Prob best = pv.oo[moves.front()];
  return {best, std::move(pv.oo), std::move(moves)};
}

ModelValue GameSolver::value_semirandom_first(const Tree& t) {
  auto pv = per_vertex(t);
  auto moves = argmax_set(pv.p_first);
  Prob best = pv.p_first[moves.front()];
  return {best, std::move(pv.p_first), std::move(moves)};
}

ModelValue GameSolver::value_semirandom_second(const Tree& t) {
  auto pv = per_vertex(t);
  Prob m = mean(pv.q_second);
  return {m, std::move(pv.q_second), {}};
}

ModelValue GameSolver::value_random_random(const Tree& t) {
  auto pv = per_vertex(t);
  Prob m = mean(pv.rr);
  return {m, std::move(pv.rr), {}};
}

ModelValue GameSolver::value(const Tree& t, Model m) {
  switch (m) {
    case Model::Oo: return value_oo(t);
    case Model::SemirandomFirst: return value_semirandom_first(t);
    case Model::SemirandomSecond: return value_semirandom_second(t);
    case Model::RandomRandom: return value_random_random(t);
  }
  throw std::logic_error("unknown model");
}

StoppingDist GameSolver::stopping_time_distribution(const Tree& t) {
  return StoppingDist{stopping_probs(t, canonical_key(t))};
}

std::vector<Prob> GameSolver::stopping_probs(const Tree& t, const CanonKey& key) {
  if (auto hit = stopping_memo_->find(key)) return *hit;
  check_budget();
  int n = t.order();
  // Total weight sum_v |T'| per component class; the target lands in T' with
  // probability |T'|/n after the uniform guess v missed.
  std::map<CanonKey, std::pair<long, const Tree*>> weights;
  std::vector<std::vector<Piece>> all;
  all.reserve(n);
  for (Vertex v = 0; v < n; ++v) all.push_back(pieces(t, v));
  for (const auto& ps : all)
    for (const auto& piece : ps) {
      auto& slot = weights[piece.key];
      slot.first += piece.comp.tree.order();
      slot.second = &piece.comp.tree;
    }
  std::vector<Prob> probs(n, Rational(0));
  probs[0] = Rational(1, n);
  Rational n2(static_cast<long>(n) * n);
  for (const auto& [k, entry] : weights) {
    auto sub = stopping_probs(*entry.second, k);
    Rational w = Rational(entry.first) / n2;
    for (std::size_t i = 0; i < sub.size(); ++i) probs[i + 1] += w * sub[i];
  }
  stopping_memo_->insert(key, probs);
  return probs;
}

Prob GameSolver::fixed_target_value(const Tree& t, Vertex target) {
  t.check_vertex(target);
  return fixed_target(t, target, rooted_key(t, target));
}

Prob GameSolver::fixed_target(const Tree& t, Vertex target, const CanonKey& key) {
  if (auto hit = fixed_memo_->find(key)) return *hit;
  check_budget();
  int n = t.order();
  Rational sum(0);
  for (Vertex v = 0; v < n; ++v) {
    if (v == target) continue;
    auto verts = component_vertices(t, v, target);
    Component c = induced_subtree(t, verts);
    Vertex local = static_cast<Vertex>(std::lower_bound(verts.begin(), verts.end(), target) - verts.begin());
    sum += Rational(1) - fixed_target(c.tree, local, rooted_key(c.tree, local));
  }
  Prob f = Rational(1, n) * (Rational(1) + sum);
  fixed_memo_->insert(key, f);
  return f;
}

}  // namespace arbor
