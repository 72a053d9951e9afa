#include "doctest.h"

#include <filesystem>
#include <fstream>
#include <sstream>

#include "arbor/canonical.hpp"
#include "arbor/closed_forms.hpp"
#include "arbor/enumerate.hpp"
#include "arbor/limbs.hpp"
#include "arbor/tree_io.hpp"
#include "arbor/verifier.hpp"

using namespace arbor;

namespace {

Rational R(long a, long b = 1) { return Rational(a, b); }

bool all_pass(const SweepReport& r) {
  for (const auto& c : r.checks)
    if (c.status != CheckStatus::Pass) return false;
  return r.exit_code() == 0;
}

std::string stable_json(const SweepReport& r) {
  auto j = report_to_json(r);
  j.erase("wall_time_s");
  return j.dump();
}

}  // namespace

TEST_CASE("semirandom sweep examples") {
  SweepReport r6 = verify_semirandom_bounds(6);
  CHECK(all_pass(r6));
  CHECK(r6.class_count == 6);
  const Extreme* p = r6.find_extreme("semirandom-first");
  REQUIRE(p);
  CHECK(p->min == R(53, 90));
  CHECK(p->min_key == canonical_key(path(6)));
  // S_6 attains the maximum; S_{2,1,1,1} ties it, and ties report the first class.
  CHECK(p->max == star_p(6));
  GameSolver s;
  CHECK(s.class_values(spider({2, 1, 1, 1})).p_first == star_p(6));

  SweepReport r1 = verify_semirandom_bounds(1);
  CHECK(all_pass(r1));
  CHECK(r1.class_count == 1);
  CHECK(r1.find_extreme("semirandom-first")->max == R(1));

  SweepReport r9 = verify_semirandom_bounds(9);
  CHECK(all_pass(r9));
  for (const auto& c : r9.checks) CHECK(c.witnesses.empty());
}

TEST_CASE("allrandom sweep examples") {
  SweepReport r5 = verify_allrandom_bounds(5);
  CHECK(all_pass(r5));
  const Extreme* e = r5.find_extreme("random-random");
  REQUIRE(e);
  CHECK(e->min == R(1, 2) + R(1, 50));
  CHECK(e->min == rr_star(5));
  CHECK(e->max == R(1, 2) + R(1, 30));
  CHECK(e->max_key == canonical_key(path(5)));

  SweepReport r4 = verify_allrandom_bounds(4);
  CHECK(r4.find_extreme("random-random")->min == R(1, 2));
  CHECK(r4.find_extreme("random-random")->max == R(13, 24));
  CHECK(all_pass(verify_allrandom_bounds(10)));
  CHECK_THROWS_AS(verify_allrandom_bounds(1), InvalidRange);
}

TEST_CASE("limb sweep examples") {
  SweepReport r6 = verify_limb_lemmas(6);
  CHECK(all_pass(r6));
  const CheckResult* v = r6.find_check("limb_odd_even_violators");
  REQUIRE(v);
  CHECK(v->kind == CheckKind::Observation);
  CHECK(v->violations == 1);
  REQUIRE(v->witnesses.size() == 1);
  CHECK(v->witnesses[0].key == canonical_key(spider({2, 2, 1})));
  CHECK(canonical_key(parse_tree(v->witnesses[0].tree_text)) == canonical_key(spider({2, 2, 1})));

  for (int n : {5, 7}) {
    SweepReport r = verify_limb_lemmas(n);
    CHECK(all_pass(r));
    CHECK(r.find_check("limb_odd_even_violators")->violations == 0);
  }
  CHECK_THROWS_AS(verify_limb_lemmas(1), InvalidRange);
}

TEST_CASE("alternating inequality sweep") {
  CHECK(all_pass(verify_alternating_inequality(8, 2)));
  CHECK(all_pass(verify_alternating_inequality(4, 1)));
  CHECK(all_pass(verify_alternating_inequality(12, 3)));
  CHECK_THROWS_AS(verify_alternating_inequality(6, 2), InvalidRange);
  CHECK_THROWS_AS(verify_alternating_inequality(8, 0), InvalidRange);
  // Below the threshold S_{2,2,1} does violate the k = 2 inequality.
  LimbProfile p = limb_profile(spider({2, 2, 1}));
  CHECK(p.at(1) + p.at(3) < p.at(2) + p.at(4));
}

TEST_CASE("fixed-target sweep examples") {
  SweepReport r5 = verify_fixed_target(5);
  CHECK(all_pass(r5));
  CHECK(r5.find_check("fixed_target_leaf_fair")->violations == 0);

  SweepReport r3 = verify_fixed_target(3);
  const CheckResult* strict = r3.find_check("fixed_target_strict_advantage");
  REQUIRE(strict);
  REQUIRE(strict->witnesses.size() == 1);
  bool saw_value = false;
  for (const auto& [k, val] : strict->witnesses[0].values)
    if (k == "value") saw_value = val == "2/3";
  CHECK(saw_value);

  SweepReport r1 = verify_fixed_target(1);
  CHECK(all_pass(r1));
  CHECK(r1.find_extreme("fixed-target-max")->max == R(1));
}

TEST_CASE("optimal-play sweep examples") {
  SweepReport r7 = verify_oo_closed_form(7);
  CHECK(all_pass(r7));
  CHECK(r7.find_extreme("oo")->min == R(4, 7));
  CHECK(r7.find_extreme("oo")->max == R(4, 7));
  SweepReport r8 = verify_oo_closed_form(8);
  CHECK(r8.find_extreme("oo")->max == R(1, 2));
  CHECK(all_pass(verify_oo_closed_form(2)));
}

TEST_CASE("all sweeps pass through n = 10") {
  for (int n = 2; n <= 10; ++n) {
    CAPTURE(n);
    CHECK(all_pass(verify_semirandom_bounds(n)));
    CHECK(all_pass(verify_allrandom_bounds(n)));
    CHECK(all_pass(verify_limb_lemmas(n)));
    CHECK(all_pass(verify_oo_closed_form(n)));
    CHECK(all_pass(verify_fixed_target(n)));
  }
}

TEST_CASE("class counts agree with the enumerator") {
  for (int n = 1; n <= 10; ++n) CHECK(verify_oo_closed_form(n).class_count == count_trees(n));
}

TEST_CASE("reports are identical across thread counts") {
  for (const char* name : {"semirandom", "allrandom", "limbs", "fixed-target", "oo"}) {
    SweepOptions one;
    one.threads = 1;
    one.keep_values = true;
    SweepOptions four = one;
    four.threads = 4;
    CAPTURE(name);
    CHECK(stable_json(run_named_sweep(name, 10, std::nullopt, one)) ==
          stable_json(run_named_sweep(name, 10, std::nullopt, four)));
  }
}

TEST_CASE("named dispatch") {
  CHECK(is_sweep_name("alternating"));
  CHECK_FALSE(is_sweep_name("bogus"));
  CHECK(run_named_sweep("alternating", 8, 2).k == 2);
  CHECK_THROWS_AS(run_named_sweep("alternating", 8, std::nullopt), InvalidRange);
  CHECK_THROWS(run_named_sweep("bogus", 8, std::nullopt));
}

TEST_CASE("JSON export round-trips") {
  SweepOptions o;
  o.keep_values = true;
  SweepReport r = verify_semirandom_bounds(7, o);
  auto j = report_to_json(r);
  CHECK(j["schema"] == kReportSchema);
  CHECK(report_to_json(report_from_json(j)) == j);

  std::ostringstream a, b;
  export_report(r, "json", a);
  export_report(r, "json", b);
  CHECK(a.str() == b.str());
  CHECK(report_to_json(report_from_json(nlohmann::json::parse(a.str()))) == j);
}

TEST_CASE("empty report exports valid JSON") {
  SweepReport empty;
  empty.sweep = "none";
  std::ostringstream os;
  export_report(empty, "json", os);
  auto j = nlohmann::json::parse(os.str());
  CHECK(j["checks"].is_array());
  CHECK(j["checks"].empty());
  CHECK(j["exit_code"] == 0);
}

TEST_CASE("CSV export has one row per class and model") {
  SweepOptions o;
  o.keep_values = true;
  SweepReport r = verify_semirandom_bounds(6, o);
  std::ostringstream os;
  export_report(r, "csv", os);
  std::istringstream in(os.str());
  std::string line;
  std::getline(in, line);
  CHECK(line == "class_index,canon_key,model,num,den,approx");
  std::map<std::string, int> rows;
  while (std::getline(in, line)) {
    auto a = line.find(',');
    auto b = line.find(',', a + 1);
    auto c = line.find(',', b + 1);
    ++rows[line.substr(b + 1, c - b - 1)];
  }
  CHECK(rows.size() == 2);
  CHECK(rows["semirandom-first"] == 6);
  CHECK(rows["semirandom-second"] == 6);
}

TEST_CASE("export errors") {
  SweepReport r = verify_oo_closed_form(3);
  std::ostringstream os;
  CHECK_THROWS_AS(export_report(r, "xml", os), std::invalid_argument);
  CHECK_THROWS_AS(export_report(r, "json", std::string("/nonexistent-dir/x/report.json")), std::runtime_error);

  auto path = std::filesystem::temp_directory_path() / "arbor_test_report.json";
  export_report(r, "json", path.string());
  std::ifstream f(path);
  auto j = nlohmann::json::parse(f);
  CHECK(j["sweep"] == "oo");
  std::filesystem::remove(path);
}

TEST_CASE("exit codes") {
  SweepReport r;
  CHECK(r.exit_code() == 0);
  CheckResult c;
  c.kind = CheckKind::Conjecture;
  c.status = CheckStatus::Fail;
  r.checks.push_back(c);
  CHECK(r.exit_code() == 2);
  c.kind = CheckKind::Theorem;
  r.checks.push_back(c);
  CHECK(r.exit_code() == 3);
}
