#include "doctest.h"

#include "arbor/canonical.hpp"
#include "arbor/enumerate.hpp"
#include "arbor/limbs.hpp"
#include "oracles.hpp"

using namespace arbor;

namespace {

// All spiders of the given order with at least three legs (legs nonincreasing).
void spiders_of_order(int remaining, int max_leg, std::vector<int>& legs, std::vector<std::vector<int>>& out) {
  if (remaining == 0) {
    if (legs.size() >= 3) out.push_back(legs);
    return;
  }
  for (int l = std::min(remaining, max_leg); l >= 1; --l) {
    legs.push_back(l);
    spiders_of_order(remaining - l, l, legs, out);
    legs.pop_back();
  }
}

bool is_three_leg_spider(const Tree& t) {
  int n = t.order();
  std::vector<std::vector<int>> all;
  std::vector<int> legs;
  spiders_of_order(n - 1, n - 1, legs, all);
  for (const auto& l : all)
    if (l.size() == 3 && oracle::isomorphic(t, spider(l))) return true;
  return false;
}

}  // namespace

TEST_CASE("limb profile examples") {
  CHECK(limb_profile(spider({2, 2, 1})).ell == std::vector<int>{3, 2, 0, 2, 3});
  CHECK(limb_profile(path(4)).ell == std::vector<int>{2, 2, 2});
  CHECK(limb_profile(spider({3, 1, 1})).ell == std::vector<int>{3, 1, 2, 1, 3});
  CHECK(limb_profile(path(1)).ell.empty());
  CHECK(limb_profile(path(1)).at(1) == 0);
  CHECK(limb_profile(path(2)).ell == std::vector<int>{2});
}

TEST_CASE("limb profile agrees with the brute-force count") {
  for (int n = 1; n <= 9; ++n)
    for (const Tree& t : enumerate_trees(n)) CHECK(limb_profile(t).ell == oracle::brute_limbs(t));
}

TEST_CASE("paths have every limb number equal to two") {
  for (int n = 2; n <= 20; ++n)
    for (int k = 1; k < n; ++k) CHECK(limb_profile(path(n)).at(k) == 2);
}

TEST_CASE("limb identities (c)-(f) hold for all trees up to order 10") {
  for (int n = 2; n <= 10; ++n)
    for (const Tree& t : enumerate_trees(n)) {
      LimbProfile p = limb_profile(t);
      long sum = 0, weighted = 0;
      for (int k = 1; k < n; ++k) {
        CHECK(p.at(k) == p.at(n - k));
        CHECK(p.at(1) >= p.at(k));
        sum += p.at(k);
        weighted += static_cast<long>(k) * p.at(k);
      }
      CHECK(sum == 2 * (n - 1));
      CHECK(weighted == static_cast<long>(n) * (n - 1));
    }
}

TEST_CASE("l1 + l3 >= l2 + l4 fails only for S_{2,2,1}") {
  std::vector<CanonKey> violators;
  for (int n = 2; n <= 10; ++n)
    for (const Tree& t : enumerate_trees(n)) {
      LimbProfile p = limb_profile(t);
      if (p.at(1) + p.at(3) < p.at(2) + p.at(4)) violators.push_back(canonical_key(t));
    }
  REQUIRE(violators.size() == 1);
  CHECK(violators[0] == canonical_key(spider({2, 2, 1})));
}

TEST_CASE("two leaves means a path, three leaves means a three-legged spider") {
  for (int n = 3; n <= 10; ++n)
    for (const Tree& t : enumerate_trees(n)) {
      int l1 = limb_profile(t).at(1);
      if (l1 == 2) CHECK(oracle::isomorphic(t, path(n)));
      if (l1 == 3) CHECK(is_three_leg_spider(t));
    }
}

TEST_CASE("spider formula examples") {
  CHECK(spider_limb_formula(std::vector<int>{2, 2, 2}, 2) == 3);
  CHECK(spider_limb_formula(std::vector<int>{2, 2, 2}, 5) == 3);
  CHECK(spider_limb_formula(std::vector<int>{2, 2, 1}, 3) == 0);
  CHECK_THROWS_AS(spider_limb_formula(std::vector<int>{2, 2, 1}, 0), std::out_of_range);
  CHECK_THROWS_AS(spider_limb_formula(std::vector<int>{2, 2, 1}, 6), std::out_of_range);
  CHECK_THROWS_AS(spider_limb_formula(std::vector<int>{2, 2}, 1), TreeError);
}

TEST_CASE("spider formula matches limb_profile for all spiders up to order 12") {
  int checked = 0;
  for (int n = 4; n <= 12; ++n) {
    std::vector<std::vector<int>> all;
    std::vector<int> legs;
    spiders_of_order(n - 1, n - 1, legs, all);
    for (const auto& l : all) {
      LimbProfile p = limb_profile(spider(l));
      for (int k = 1; k < n; ++k) CHECK(spider_limb_formula(l, k) == p.at(k));
      ++checked;
    }
  }
  CHECK(checked > 100);
}
