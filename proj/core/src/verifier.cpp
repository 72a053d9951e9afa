#include "arbor/verifier.hpp"

#include <algorithm>
#include <chrono>
#include <map>
#include <mutex>

#include "arbor/closed_forms.hpp"
#include "arbor/enumerate.hpp"
#include "arbor/limbs.hpp"
#include "arbor/tree_io.hpp"

namespace arbor {

const char* to_string(CheckKind k) {
  switch (k) {
    case CheckKind::Theorem: return "theorem";
    case CheckKind::Conjecture: return "conjecture";
    case CheckKind::Observation: return "observation";
  }
  return "?";
}

const char* to_string(CheckStatus s) { return s == CheckStatus::Pass ? "pass" : "fail"; }

const CheckResult* SweepReport::find_check(std::string_view name) const {
  for (const auto& c : checks)
    if (c.name == name) return &c;
  return nullptr;
}

const Extreme* SweepReport::find_extreme(std::string_view model) const {
  for (const auto& e : extremes)
    if (e.model == model) return &e;
  return nullptr;
}

bool SweepReport::theorem_failed() const {
  return std::any_of(checks.begin(), checks.end(), [](const CheckResult& c) {
    return c.kind == CheckKind::Theorem && c.status == CheckStatus::Fail;
  });
}

bool SweepReport::conjecture_failed() const {
  return std::any_of(checks.begin(), checks.end(), [](const CheckResult& c) {
    return c.kind == CheckKind::Conjecture && c.status == CheckStatus::Fail;
  });
}

int SweepReport::exit_code() const {
  if (theorem_failed()) return 3;
  if (conjecture_failed()) return 2;
  return 0;
}

namespace {

struct CheckSpec {
  std::string name;
  CheckKind kind;
  std::string description;
};

struct ClassOutcome {
  std::vector<std::pair<int, Witness>> hits;  // (check index, witness)
  std::vector<Rational> model_values;         // aligned with SweepPlan::models
};

struct ClassContext {
  std::uint64_t index;
  const Tree& tree;
  const CanonKey& key;
  GameSolver& solver;

  Witness witness(std::vector<std::pair<std::string, std::string>> values) const {
    return Witness{index, key, format_tree(tree), std::move(values)};
  }
};

struct SweepPlan {
  std::string sweep;
  std::vector<CheckSpec> checks;
  std::vector<std::string> models;
  std::function<ClassOutcome(const ClassContext&)> per_class;
  /// Runs after the merge for whole-order checks.
  std::function<void(SweepReport&, GameSolver&)> finalize;
};

struct ExtremeAcc {
  bool set = false;
  Rational min, max;
  std::uint64_t min_index = 0, max_index = 0;
  CanonKey min_key, max_key;
  std::string min_tree, max_tree;

  void add(const Rational& v, std::uint64_t index, const CanonKey& key, const Tree& t) {
    if (!set || v < min || (v == min && index < min_index)) {
      min = v;
      min_index = index;
      min_key = key;
      min_tree = format_tree(t);
    }
    if (!set || v > max || (v == max && index < max_index)) {
      max = v;
      max_index = index;
      max_key = key;
      max_tree = format_tree(t);
    }
    set = true;
  }

  void merge(const ExtremeAcc& o) {
    if (!o.set) return;
    if (!set) {
      *this = o;
      return;
    }
    if (o.min < min || (o.min == min && o.min_index < min_index)) {
      min = o.min;
      min_index = o.min_index;
      min_key = o.min_key;
      min_tree = o.min_tree;
    }
    if (o.max > max || (o.max == max && o.max_index < max_index)) {
      max = o.max;
      max_index = o.max_index;
      max_key = o.max_key;
      max_tree = o.max_tree;
    }
  }
};

struct WorkerAcc {
  std::uint64_t classes = 0;
  std::vector<std::uint64_t> violations;
  std::vector<std::vector<Witness>> witnesses;
  std::vector<ExtremeAcc> extremes;
  std::vector<ValueRow> rows;
};

void keep_smallest(std::vector<Witness>& ws, std::size_t cap) {
  std::sort(ws.begin(), ws.end(), [](const Witness& a, const Witness& b) { return a.class_index < b.class_index; });
  if (ws.size() > cap) ws.resize(cap);
}

SweepReport run_sweep(int n, const SweepPlan& plan, const SweepOptions& opts) {
  auto started = std::chrono::steady_clock::now();
  const int threads = resolve_threads(opts.threads);
  auto memo = opts.memo ? opts.memo : std::make_shared<MemoTable>();
  const std::size_t nchecks = plan.checks.size();
  const std::size_t nmodels = plan.models.size();

  std::vector<WorkerAcc> acc(threads);
  std::vector<std::unique_ptr<GameSolver>> solvers;
  for (int w = 0; w < threads; ++w) {
    acc[w].violations.assign(nchecks, 0);
    acc[w].witnesses.resize(nchecks);
    acc[w].extremes.resize(nmodels);
    solvers.push_back(std::make_unique<GameSolver>(memo));
  }

  for_each_tree(n, threads, [&](std::uint64_t index, const Tree& t, int w) {
    WorkerAcc& a = acc[w];
    CanonKey key = canonical_key(t);
    ClassOutcome out = plan.per_class(ClassContext{index, t, key, *solvers[w]});
    ++a.classes;
    for (auto& [check, wit] : out.hits) {
      ++a.violations[check];
      a.witnesses[check].push_back(std::move(wit));
      if (a.witnesses[check].size() > 4 * opts.max_witnesses + 16) keep_smallest(a.witnesses[check], opts.max_witnesses);
    }
    for (std::size_t m = 0; m < nmodels && m < out.model_values.size(); ++m) {
      a.extremes[m].add(out.model_values[m], index, key, t);
      if (opts.keep_values) a.rows.push_back(ValueRow{index, key, plan.models[m], out.model_values[m]});
    }
  });

  SweepReport report;
  report.sweep = plan.sweep;
  report.order = n;
  std::vector<ExtremeAcc> extremes(nmodels);
  for (std::size_t c = 0; c < nchecks; ++c) {
    CheckResult r{plan.checks[c].name, plan.checks[c].kind, plan.checks[c].description, CheckStatus::Pass, 0, {}};
    for (auto& a : acc) {
      r.violations += a.violations[c];
      for (auto& wit : a.witnesses[c]) r.witnesses.push_back(std::move(wit));
    }
    keep_smallest(r.witnesses, opts.max_witnesses);
    report.checks.push_back(std::move(r));
  }
  for (auto& a : acc) {
    report.class_count += a.classes;
    for (std::size_t m = 0; m < nmodels; ++m) extremes[m].merge(a.extremes[m]);
    for (auto& row : a.rows) report.values.push_back(std::move(row));
  }
  std::map<std::string, std::size_t> model_rank;
  for (std::size_t m = 0; m < nmodels; ++m) model_rank[plan.models[m]] = m;
  std::sort(report.values.begin(), report.values.end(), [&](const ValueRow& a, const ValueRow& b) {
    return a.class_index != b.class_index ? a.class_index < b.class_index : model_rank[a.model] < model_rank[b.model];
  });
  for (std::size_t m = 0; m < nmodels; ++m) {
    const auto& e = extremes[m];
    if (!e.set) continue;
    report.extremes.push_back(
        Extreme{plan.models[m], e.min, e.max, e.min_index, e.max_index, e.min_key, e.max_key, e.min_tree, e.max_tree});
  }
  if (plan.finalize) plan.finalize(report, *solvers[0]);
  for (auto& c : report.checks)
    c.status = (c.kind != CheckKind::Observation && c.violations > 0) ? CheckStatus::Fail : CheckStatus::Pass;
  report.wall_time_s = std::chrono::duration<double>(std::chrono::steady_clock::now() - started).count();
  return report;
}

void require_order(int n, int min, const char* sweep) {
  if (n < min)
    throw InvalidRange(std::string(sweep) + " sweep needs n >= " + std::to_string(min) + ", got " + std::to_string(n));
}

// Records a whole-order failure (closed-form mismatch and the like) against a named tree.
void add_global_failure(SweepReport& report, std::string_view check, const Tree& t,
                        std::vector<std::pair<std::string, std::string>> values) {
  for (auto& c : report.checks)
    if (c.name == check) {
      ++c.violations;
      c.witnesses.push_back(Witness{0, canonical_key(t), format_tree(t), std::move(values)});
      return;
    }
}

int check_index(const SweepPlan& plan, std::string_view name) {
  for (std::size_t i = 0; i < plan.checks.size(); ++i)
    if (plan.checks[i].name == name) return static_cast<int>(i);
  throw std::logic_error("unknown check " + std::string(name));
}

// Leg lengths if `t` is a spider (exactly one vertex of degree > 2), else empty.
std::vector<int> spider_legs(const Tree& t) {
  Vertex head = -1;
  for (Vertex v = 0; v < t.order(); ++v)
    if (t.degree(v) > 2) {
      if (head >= 0) return {};
      head = v;
    }
  if (head < 0) return {};
  std::vector<int> legs;
  for (Vertex w : t.neighbors(head)) {
    int len = 1;
    Vertex prev = head, cur = w;
    while (t.degree(cur) == 2) {
      Vertex next = t.neighbors(cur)[0] == prev ? t.neighbors(cur)[1] : t.neighbors(cur)[0];
      prev = cur;
      cur = next;
      ++len;
    }
    legs.push_back(len);
  }
  std::sort(legs.rbegin(), legs.rend());
  return legs;
}

}  // namespace

SweepReport verify_semirandom_bounds(int n, const SweepOptions& opts) {
  require_order(n, 1, "semirandom");
  GameSolver ref(opts.memo ? opts.memo : std::make_shared<MemoTable>());
  const ClassValues path_v = ref.class_values(path(n));
  const ClassValues star_v = ref.class_values(star(n));
  const Rational q_floor = Rational(9, 16) - Rational(5, 16L * n);

  SweepPlan plan;
  plan.sweep = "semirandom";
  plan.checks = {
      {"semirandom_star_upper_bound", CheckKind::Theorem, "P(T) <= P(S_n) and Q(T) <= Q(S_n)"},
      {"semirandom_lower_bound_9_16", CheckKind::Theorem, "for n >= 4: P(T) > 9/16 and Q(T) >= 9/16 - 5/(16n)"},
      {"semirandom_path_lower_bound", CheckKind::Conjecture, "P(P_n) <= P(T) and Q(P_n) <= Q(T)"},
      {"semirandom_star_closed_form", CheckKind::Theorem, "recursion on S_n equals the star closed forms"},
      {"semirandom_path_closed_form", CheckKind::Theorem, "recursion on P_n equals p_n and q_n"},
  };
  plan.models = {"semirandom-first", "semirandom-second"};
  plan.per_class = [&](const ClassContext& ctx) {
    ClassOutcome out;
    ClassValues v = ctx.solver.class_values(ctx.tree);
    auto vals = [&] {
      return std::vector<std::pair<std::string, std::string>>{{"p_first", v.p_first.str()},
                                                              {"q_second", v.q_second.str()}};
    };
    if (v.p_first > star_v.p_first || v.q_second > star_v.q_second) out.hits.emplace_back(0, ctx.witness(vals()));
    if (n >= 4 && (v.p_first <= Rational(9, 16) || v.q_second < q_floor)) out.hits.emplace_back(1, ctx.witness(vals()));
    if (v.p_first < path_v.p_first || v.q_second < path_v.q_second) out.hits.emplace_back(2, ctx.witness(vals()));
    out.model_values = {v.p_first, v.q_second};
    return out;
  };
  plan.finalize = [&](SweepReport& r, GameSolver&) {
    if (star_v.p_first != star_p(n) || star_v.q_second != star_q(n))
      add_global_failure(r, "semirandom_star_closed_form", star(n),
                         {{"p_first", star_v.p_first.str()}, {"star_p", star_p(n).str()},
                          {"q_second", star_v.q_second.str()}, {"star_q", star_q(n).str()}});
    if (path_v.p_first != path_p(n) || path_v.q_second != path_q(n))
      add_global_failure(r, "semirandom_path_closed_form", path(n),
                         {{"p_first", path_v.p_first.str()}, {"path_p", path_p(n).str()},
                          {"q_second", path_v.q_second.str()}, {"path_q", path_q(n).str()}});
  };
  return run_sweep(n, plan, opts);
}

SweepReport verify_allrandom_bounds(int n, const SweepOptions& opts) {
  require_order(n, 2, "allrandom");
  GameSolver ref(opts.memo ? opts.memo : std::make_shared<MemoTable>());
  const Prob path_rr = ref.class_values(path(n)).rr;
  const Prob star_rr = ref.class_values(star(n)).rr;

  SweepPlan plan;
  plan.sweep = "allrandom";
  plan.checks = {
      {"allrandom_star_path_bounds", CheckKind::Conjecture, "P(S_n) <= P(T) <= P(P_n)"},
      {"allrandom_13_30_17_30", CheckKind::Theorem, "13/30 < P(T) < 17/30"},
      {"allrandom_star_closed_form", CheckKind::Theorem, "recursion on S_n equals 1/2 + [n odd]/(2n^2)"},
      {"allrandom_path_closed_form", CheckKind::Theorem, "recursion on P_n equals 1/2 + 1/(6n) (n >= 3)"},
  };
  plan.models = {"random-random"};
  plan.per_class = [&](const ClassContext& ctx) {
    ClassOutcome out;
    Prob rr = ctx.solver.class_values(ctx.tree).rr;
    std::vector<std::pair<std::string, std::string>> vals{{"random_random", rr.str()}};
    if (rr < star_rr || rr > path_rr) out.hits.emplace_back(0, ctx.witness(vals));
    if (rr <= Rational(13, 30) || rr >= Rational(17, 30)) out.hits.emplace_back(1, ctx.witness(vals));
    out.model_values = {rr};
    return out;
  };
  plan.finalize = [&](SweepReport& r, GameSolver&) {
    if (star_rr != rr_star(n))
      add_global_failure(r, "allrandom_star_closed_form", star(n),
                         {{"random_random", star_rr.str()}, {"closed_form", rr_star(n).str()}});
    if (path_rr != rr_path(n))
      add_global_failure(r, "allrandom_path_closed_form", path(n),
                         {{"random_random", path_rr.str()}, {"closed_form", rr_path(n).str()}});
  };
  return run_sweep(n, plan, opts);
}

SweepReport verify_limb_lemmas(int n, const SweepOptions& opts) {
  require_order(n, 2, "limbs");
  const CanonKey exception = canonical_key(spider({2, 2, 1}));
  const CanonKey path_key = canonical_key(path(n));

  SweepPlan plan;
  plan.sweep = "limbs";
  plan.checks = {
      {"limb_leaf_count", CheckKind::Theorem, "l_1 equals the number of leaves"},
      {"limb_at_least_two_leaves", CheckKind::Theorem, "l_1 >= 2"},
      {"limb_symmetry", CheckKind::Theorem, "l_k = l_{n-k}"},
      {"limb_sum", CheckKind::Theorem, "sum_k l_k = 2(n-1)"},
      {"limb_weighted_sum", CheckKind::Theorem, "sum_k k l_k = n(n-1)"},
      {"limb_leaves_dominate", CheckKind::Theorem, "l_1 >= l_k"},
      {"limb_odd_even_exception", CheckKind::Theorem,
       "l_1 + l_3 >= l_2 + l_4 except exactly for S_{2,2,1} at n = 6"},
      {"limb_two_leaves_path", CheckKind::Theorem, "l_1 = 2 implies T is a path"},
      {"limb_three_leaves_spider", CheckKind::Theorem, "l_1 = 3 implies T is a spider with three legs"},
      {"limb_spider_formula", CheckKind::Theorem, "spider limb numbers match the leg-count formula"},
      {"limb_odd_even_violators", CheckKind::Observation, "classes with l_1 + l_3 < l_2 + l_4"},
  };
  const int kException = check_index(plan, "limb_odd_even_exception");
  const int kViolators = check_index(plan, "limb_odd_even_violators");

  plan.per_class = [&, kException, kViolators](const ClassContext& ctx) {
    ClassOutcome out;
    const Tree& t = ctx.tree;
    LimbProfile lp = limb_profile(t);
    std::string profile;
    for (int x : lp.ell) profile += (profile.empty() ? "" : ",") + std::to_string(x);
    auto fail = [&](int check) { out.hits.emplace_back(check, ctx.witness({{"limb_profile", profile}})); };

    int leaves = 0;
    for (Vertex v = 0; v < n; ++v) leaves += t.is_leaf(v) ? 1 : 0;
    if (lp.at(1) != leaves) fail(0);
    if (lp.at(1) < 2) fail(1);
    long sum = 0, weighted = 0;
    bool symmetric = true, dominated = true;
    for (int k = 1; k <= n - 1; ++k) {
      symmetric = symmetric && lp.at(k) == lp.at(n - k);
      dominated = dominated && lp.at(1) >= lp.at(k);
      sum += lp.at(k);
      weighted += static_cast<long>(k) * lp.at(k);
    }
    if (!symmetric) fail(2);
    if (sum != 2L * (n - 1)) fail(3);
    if (weighted != static_cast<long>(n) * (n - 1)) fail(4);
    if (!dominated) fail(5);
    if (lp.at(1) + lp.at(3) < lp.at(2) + lp.at(4)) {
      fail(kViolators);
      if (!(n == 6 && ctx.key == exception)) fail(kException);
    }
    if (lp.at(1) == 2 && ctx.key != path_key) fail(7);
    auto legs = spider_legs(t);
    if (lp.at(1) == 3 && legs.size() != 3) fail(8);
    if (!legs.empty()) {
      bool ok = canonical_key(spider(legs)) == ctx.key;
      for (int k = 1; ok && k <= n - 1; ++k) ok = spider_limb_formula(legs, k) == lp.at(k);
      if (!ok) fail(9);
    }
    return out;
  };
  plan.finalize = [&, kViolators](SweepReport& r, GameSolver&) {
    if (n == 6 && r.checks[kViolators].violations == 0)
      add_global_failure(r, "limb_odd_even_exception", spider({2, 2, 1}), {{"expected_violator", "true"}});
  };
  return run_sweep(n, plan, opts);
}

SweepReport verify_alternating_inequality(int n, int k, const SweepOptions& opts) {
  if (k < 1) throw InvalidRange("alternating sweep needs k >= 1");
  if (n < 4 * k)
    throw InvalidRange("alternating inequality requires n >= 4k (n = " + std::to_string(n) +
                       ", k = " + std::to_string(k) + ")");
  SweepPlan plan;
  plan.sweep = "alternating";
  plan.checks = {{"limb_alternating_inequality", CheckKind::Theorem,
                  "l_1 + l_3 + ... + l_{2k-1} >= l_2 + l_4 + ... + l_{2k}"}};
  plan.per_class = [&](const ClassContext& ctx) {
    ClassOutcome out;
    LimbProfile lp = limb_profile(ctx.tree);
    long odd = 0, even = 0;
    for (int i = 1; i <= k; ++i) {
      odd += lp.at(2 * i - 1);
      even += lp.at(2 * i);
    }
    if (odd < even)
      out.hits.emplace_back(0, ctx.witness({{"odd_sum", std::to_string(odd)}, {"even_sum", std::to_string(even)}}));
    return out;
  };
  auto report = run_sweep(n, plan, opts);
  report.k = k;
  return report;
}

SweepReport verify_fixed_target(int n, const SweepOptions& opts) {
  require_order(n, 1, "fixed-target");
  SweepPlan plan;
  plan.sweep = "fixed-target";
  plan.checks = {
      {"fixed_target_leaf_fair", CheckKind::Theorem, "f(T, leaf) = 1/2 exactly"},
      {"fixed_target_at_least_half", CheckKind::Conjecture, "f(T, t) >= 1/2 for every target"},
      {"fixed_target_strict_advantage", CheckKind::Observation, "targets with f(T, t) > 1/2"},
  };
  plan.models = {"fixed-target-min", "fixed-target-max"};
  plan.per_class = [&](const ClassContext& ctx) {
    ClassOutcome out;
    std::optional<Rational> lo, hi;
    Vertex strict_at = -1;
    Rational strict_value;
    for (Vertex t = 0; t < n; ++t) {
      Prob f = ctx.solver.fixed_target_value(ctx.tree, t);
      std::vector<std::pair<std::string, std::string>> vals{{"target", std::to_string(t)}, {"value", f.str()}};
      if (ctx.tree.is_leaf(t) && f != Rational(1, 2)) out.hits.emplace_back(0, ctx.witness(vals));
      if (f < Rational(1, 2)) out.hits.emplace_back(1, ctx.witness(vals));
      if (f > Rational(1, 2) && strict_at < 0 && n > 1) {
        strict_at = t;
        strict_value = f;
      }
      if (!lo || f < *lo) lo = f;
      if (!hi || f > *hi) hi = f;
    }
    if (strict_at >= 0)
      out.hits.emplace_back(2, ctx.witness({{"target", std::to_string(strict_at)}, {"value", strict_value.str()}}));
    out.model_values = {*lo, *hi};
    return out;
  };
  return run_sweep(n, plan, opts);
}

SweepReport verify_oo_closed_form(int n, const SweepOptions& opts) {
  require_order(n, 1, "oo");
  const Prob expected = oo_closed_form(n);
  SweepPlan plan;
  plan.sweep = "oo";
  plan.checks = {
      {"oo_closed_form", CheckKind::Theorem, "optimal-vs-optimal value is 1/2 + [n odd]/(2n)"},
      {"oo_move_set", CheckKind::Theorem, "optimal first moves are the min-odd-components vertices"},
  };
  plan.models = {"oo"};
  plan.per_class = [&](const ClassContext& ctx) {
    ClassOutcome out;
    ModelValue mv = ctx.solver.value_oo(ctx.tree);
    if (mv.value != expected)
      out.hits.emplace_back(0, ctx.witness({{"oo", mv.value.str()}, {"closed_form", expected.str()}}));
    if (mv.moves != min_odd_component_vertices(ctx.tree)) {
      std::string moves;
      for (Vertex v : mv.moves) moves += (moves.empty() ? "" : ",") + std::to_string(v);
      out.hits.emplace_back(1, ctx.witness({{"argmax", moves}}));
    }
    out.model_values = {mv.value};
    return out;
  };
  return run_sweep(n, plan, opts);
}

bool is_sweep_name(std::string_view name) {
  return name == "semirandom" || name == "allrandom" || name == "limbs" || name == "alternating" ||
         name == "fixed-target" || name == "oo";
}

SweepReport run_named_sweep(std::string_view name, int n, std::optional<int> k, const SweepOptions& opts) {
  if (name == "semirandom") return verify_semirandom_bounds(n, opts);
  if (name == "allrandom") return verify_allrandom_bounds(n, opts);
  if (name == "limbs") return verify_limb_lemmas(n, opts);
  if (name == "alternating") {
    if (!k) throw InvalidRange("alternating sweep needs k");
    return verify_alternating_inequality(n, *k, opts);
  }
  if (name == "fixed-target") return verify_fixed_target(n, opts);
  if (name == "oo") return verify_oo_closed_form(n, opts);
  throw std::invalid_argument("unknown sweep '" + std::string(name) + "'");
}

}  // namespace arbor
