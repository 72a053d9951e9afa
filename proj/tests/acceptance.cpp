// Acceptance suite: one PASS/FAIL line per primary criterion.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <string>
#include <thread>

#include "arbor/canonical.hpp"
#include "arbor/closed_forms.hpp"
#include "arbor/enumerate.hpp"
#include "arbor/game.hpp"
#include "arbor/interval.hpp"
#include "arbor/simulate.hpp"
#include "arbor/tree_io.hpp"
#include "arbor/verifier.hpp"
#include "oracles.hpp"

using namespace arbor;

namespace {

Rational R(long a, long b = 1) { return Rational(a, b); }

struct Outcome {
  bool ok = true;
  std::string detail;
  void require(bool cond, const std::string& what) {
    if (!cond && ok) detail = what;
    ok = ok && cond;
  }
};

int failures = 0;

void criterion(const char* name, double budget_s, const std::function<void(Outcome&)>& body) {
  Outcome o;
  auto t0 = std::chrono::steady_clock::now();
  try {
    body(o);
  } catch (const std::exception& e) {
    o.ok = false;
    o.detail = std::string("exception: ") + e.what();
  }
  double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  if (budget_s > 0 && secs > budget_s) {
    if (o.ok) o.detail = "over time budget of " + std::to_string(budget_s) + " s";
    o.ok = false;
  }
  if (!o.ok) ++failures;
  std::printf("[%s] %-34s %8.2f s  %s\n", o.ok ? "PASS" : "FAIL", name, secs, o.detail.c_str());
  std::fflush(stdout);
}

bool passed(const SweepReport& r) { return r.exit_code() == 0; }

Tree forked_path() { return Tree::from_edges(9, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {0, 5}, {0, 6}, {4, 7}, {4, 8}}); }

}  // namespace

int main() {
  const int hw = resolve_threads(0);
  std::printf("arbor acceptance (%d hardware threads)\n", hw);

  criterion("path_values_n_le_7", 1.0, [](Outcome& o) {
    const Rational p[] = {R(1), R(1, 2), R(2, 3), R(7, 12), R(3, 5), R(53, 90), R(37, 63)};
    const Rational q[] = {R(0), R(1, 2), R(4, 9), R(1, 2), R(38, 75), R(14, 27), R(386, 735)};
    GameSolver s;
    for (int n = 1; n <= 7; ++n) {
      o.require(path_p(n) == p[n - 1] && path_q(n) == q[n - 1], "formula mismatch at n=" + std::to_string(n));
      ClassValues v = s.class_values(path(n));
      o.require(v.p_first == p[n - 1] && v.q_second == q[n - 1], "recursion mismatch at n=" + std::to_string(n));
    }
    o.detail = o.ok ? "p_n, q_n exact for n = 1..7" : o.detail;
  });

  criterion("oo_theorem_all_trees_n_le_12", 60.0, [&](Outcome& o) {
    SweepOptions opts;
    opts.threads = hw;
    std::uint64_t classes = 0;
    for (int n = 1; n <= 12; ++n) {
      SweepReport r = verify_oo_closed_form(n, opts);
      classes += r.class_count;
      o.require(passed(r), "sweep failed at n=" + std::to_string(n));
    }
    if (o.ok) o.detail = std::to_string(classes) + " classes, values and move sets exact";
  });

  criterion("closed_forms_vs_recursion_n_le_30", 60.0, [](Outcome& o) {
    GameSolver s;
    for (int n = 1; n <= 30; ++n) {
      ClassValues st = s.class_values(star(n)), pa = s.class_values(path(n));
      std::string at = " at n=" + std::to_string(n);
      o.require(st.p_first == star_p(n) && st.q_second == star_q(n), "star semirandom" + at);
      o.require(pa.p_first == path_p(n) && pa.q_second == path_q(n), "path semirandom" + at);
      o.require(st.rr == rr_star(n) && pa.rr == rr_path(n), "random-random" + at);
      o.require(st.oo == oo_closed_form(n) && pa.oo == oo_closed_form(n), "optimal" + at);
    }
    if (o.ok) o.detail = "stars and paths, all models";
  });

  criterion("forked_path_suboptimal_leaves", 1.0, [](Outcome& o) {
    GameSolver s;
    Tree t = forked_path();
    ModelValue v = s.value_semirandom_first(t);
    o.require(v.by_vertex[2] == R(1, 9) + R(8, 9) * R(9, 16), "center value");
    for (Vertex leaf : {5, 6, 7, 8})
      o.require(v.by_vertex[leaf] == R(1, 9) + R(8, 9) * R(12601, 23040), "leaf value");
    for (Vertex m : v.moves) o.require(!t.is_leaf(m), "a leaf is in the argmax set");
    if (o.ok) o.detail = "P(T,center) = " + v.by_vertex[2].str() + ", P(T,leaf) = " + v.by_vertex[5].str();
  });

  criterion("conjecture_sweeps_n_le_14", 600.0, [&](Outcome& o) {
    SweepOptions opts;
    opts.threads = hw;
    opts.memo = std::make_shared<MemoTable>();
    std::uint64_t classes = 0;
    for (int n = 1; n <= 14; ++n) {
      SweepReport semi = verify_semirandom_bounds(n, opts);
      classes += semi.class_count;
      o.require(passed(semi), "semirandom sweep failed at n=" + std::to_string(n));
      if (n >= 2) o.require(passed(verify_allrandom_bounds(n, opts)), "allrandom sweep failed at n=" + std::to_string(n));
    }
    if (o.ok) o.detail = std::to_string(classes) + " classes; both conjectures and theorem bounds hold";
  });

  criterion("limb_lemmas_n_le_12", 0, [&](Outcome& o) {
    SweepOptions opts;
    opts.threads = hw;
    std::vector<std::pair<int, CanonKey>> violators;
    for (int n = 2; n <= 12; ++n) {
      SweepReport r = verify_limb_lemmas(n, opts);
      o.require(passed(r), "limb sweep failed at n=" + std::to_string(n));
      for (const auto& w : r.find_check("limb_odd_even_violators")->witnesses) violators.emplace_back(n, w.key);
    }
    o.require(violators.size() == 1, std::to_string(violators.size()) + " violators");
    if (violators.size() == 1)
      o.require(violators[0].first == 6 && violators[0].second == canonical_key(spider({2, 2, 1})),
                "violator is not S_{2,2,1}");
    if (o.ok) o.detail = "(c)-(g) hold; sole violator S_{2,2,1} at n=6";
  });

  criterion("superadditivity_m_n_le_100", 0, [](Outcome& o) {
    std::vector<Rational> pq(201), sq(201);
    for (int n = 1; n <= 200; ++n) {
      pq[n] = R(n) * path_q(n);
      sq[n] = R(n) * star_q(n);
    }
    for (int m = 1; m <= 100; ++m)
      for (int n = 1; n <= 100; ++n) {
        o.require(pq[m] + pq[n] <= pq[m + n], "path fails at m=" + std::to_string(m) + ", n=" + std::to_string(n));
        o.require(sq[m] + sq[n] <= sq[m + n], "star fails at m=" + std::to_string(m) + ", n=" + std::to_string(n));
      }
    if (o.ok) o.detail = "n q_n and n star_q(n), 10000 pairs each";
  });

  criterion("brute_force_oracle_n_le_7", 0, [](Outcome& o) {
    GameSolver s;
    int classes = 0;
    for (int n = 1; n <= 7; ++n)
      for (const Tree& t : enumerate_trees(n)) {
        ++classes;
        ValueBundle b = s.bundle(t);
        oracle::Bundle x = oracle::brute_bundle(t);
        std::string at = " on " + canonical_key(t).bytes;
        o.require(b.oo_value == x.oo && b.oo_by_vertex == x.oo_by_vertex && b.oo_moves == x.oo_moves, "oo" + at);
        o.require(b.p_first == x.p && b.p_first_by_vertex == x.p_by_vertex && b.p_first_moves == x.p_moves,
                  "semirandom-first" + at);
        o.require(b.q_second == x.q && b.q_second_by_vertex == x.q_by_vertex, "semirandom-second" + at);
        o.require(b.rr_value == x.rr && b.rr_by_vertex == x.rr_by_vertex, "random-random" + at);
      }
    if (o.ok) o.detail = std::to_string(classes) + " classes, every bundle field";
  });

  criterion("stopping_time", 0, [](Outcome& o) {
    GameSolver s;
    for (int n = 1; n <= 10; ++n)
      for (const Tree& t : enumerate_trees(n)) {
        StoppingDist d = s.stopping_time_distribution(t);
        o.require(d.total() == R(1), "distribution does not sum to 1");
        o.require(d.odd_mass() == s.class_values(t).rr, "odd mass differs from random-random value");
      }
    Rational worst_star(0), worst_path(0);
    for (int n = 10; n <= 120; ++n) {
      Rational es = s.stopping_time_distribution(star(n)).expectation();
      o.require(es >= R(n, 3) - R(2) && es <= R(n, 3) + R(2), "star expectation at n=" + std::to_string(n));
      RationalInterval ln = ln_enclosure(n);
      Rational ep = s.stopping_time_distribution(path(n)).expectation();
      o.require(ep >= R(2) * ln.hi - R(3) && ep <= R(2) * ln.lo + R(3), "path expectation at n=" + std::to_string(n));
    }
    if (o.ok) o.detail = "odd mass = P_RR for n <= 10; E[tau] bounds for 10 <= n <= 120";
  });

  criterion("fixed_target", 0, [&](Outcome& o) {
    SweepOptions opts;
    opts.threads = hw;
    std::string conj = "at_least_half pass for n <= 10";
    for (int n = 1; n <= 12; ++n) {
      SweepReport r = verify_fixed_target(n, opts);
      o.require(r.find_check("fixed_target_leaf_fair")->status == CheckStatus::Pass,
                "leaf fairness fails at n=" + std::to_string(n));
      if (n <= 10 && r.find_check("fixed_target_at_least_half")->status != CheckStatus::Pass) {
        o.require(false, "at_least_half conjecture fails at n=" + std::to_string(n));
      }
    }
    if (o.ok) o.detail = "leaf targets exactly 1/2 for 2 <= n <= 12; " + conj;
  });

  criterion("monte_carlo_consistency", 0, [](Outcome& o) {
    struct Case {
      const char* tree;
      Model model;
    };
    const Case cases[] = {
        {"P:7", Model::RandomRandom},        {"S:5", Model::SemirandomFirst},    {"S:1", Model::RandomRandom},
        {"P:2", Model::Oo},                  {"P:9", Model::Oo},                 {"S:8", Model::Oo},
        {"SP:2,2,1", Model::Oo},             {"P:10", Model::SemirandomFirst},   {"S:6", Model::SemirandomFirst},
        {"SP:3,2,2", Model::SemirandomFirst}, {"P:8", Model::SemirandomSecond},  {"S:7", Model::SemirandomSecond},
        {"SP:2,2,2", Model::SemirandomSecond}, {"P:12", Model::RandomRandom},    {"S:9", Model::RandomRandom},
        {"SP:3,1,1", Model::RandomRandom},   {"SP:4,3,2,1", Model::SemirandomFirst}, {"P:15", Model::SemirandomSecond},
        {"SP:1,1,1,1,1", Model::Oo},         {"SP:5,5,5", Model::RandomRandom},
    };
    GameSolver s;
    int within = 0, total = 0;
    std::uint64_t seed = 1000;
    for (const Case& c : cases) {
      Tree t = parse_tree_spec(c.tree);
      McResult mc = monte_carlo(t, c.model, 100000, seed++, s);
      Prob exact = s.value(t, c.model).value;
      ++total;
      if (std::abs(mc.estimate - exact.approx()) <= 3 * mc.std_error) ++within;
    }
    McResult a = monte_carlo(path(7), Model::SemirandomFirst, 20000, 5, s);
    McResult b = monte_carlo(path(7), Model::SemirandomFirst, 20000, 5, s);
    o.require(a.wins == b.wins, "not deterministic for a fixed seed");
    o.require(total == 20 && within >= 19, std::to_string(within) + "/" + std::to_string(total) + " within 3 SE");
    if (o.ok) o.detail = std::to_string(within) + "/20 cases within 3 SE at 1e5 trials; reruns identical";
  });

  criterion("enumeration_counts", 0, [&](Outcome& o) {
    const std::uint64_t expect[] = {1, 1, 1, 2, 3, 6, 11, 23};
    for (int n = 1; n <= 8; ++n) {
      std::uint64_t brute = oracle::prufer_classes(n).size();
      o.require(brute == expect[n - 1], "Prüfer dedup count at n=" + std::to_string(n));
      o.require(count_trees(n) == brute, "enumerator count at n=" + std::to_string(n));
    }
    std::uint64_t one = count_trees(20, 1);
    std::uint64_t many = count_trees(20, std::max(2, hw));
    o.require(one == many, "n=20 count differs across thread counts");
    if (o.ok) o.detail = "n<=8 match Prüfer dedup; n=20 count " + std::to_string(one) + " with 1 and " +
                         std::to_string(std::max(2, hw)) + " threads";
  });

  std::printf("%s: %d criterion failure(s)\n", failures ? "FAILED" : "ALL PASSED", failures);
  return failures ? 1 : 0;
}
