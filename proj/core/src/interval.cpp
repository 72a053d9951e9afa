#include "arbor/interval.hpp"

#include <stdexcept>

namespace arbor {

RationalInterval exp_neg2_enclosure(const Rational& max_width) {
  // Terms 2^j/j! are nonincreasing from j = 1 on, so the alternating tail is
  // bounded by the first omitted term and consecutive partial sums bracket the limit.
  Rational term(1);
  Rational sum(1);
  for (unsigned j = 1;; ++j) {
    term *= Rational(-2, j);
    Rational next = sum + term;
    if (j >= 2) {
      Rational w = next > sum ? next - sum : sum - next;
      if (w < max_width) return next > sum ? RationalInterval{sum, next} : RationalInterval{next, sum};
    }
    sum = std::move(next);
  }
}

namespace {

// ln(x) for rational x in [1, 2): 2 * sum_k y^{2k+1}/(2k+1) with y = (x-1)/(x+1) <= 1/3.
RationalInterval ln_small(const Rational& x, const Rational& max_width) {
  Rational y = (x - Rational(1)) / (x + Rational(1));
  if (y.is_zero()) return {Rational(0), Rational(0)};
  Rational y2 = y * y;
  Rational power = y;
  Rational sum(0);
  for (long k = 0;; ++k) {
    sum += Rational(2) * power / Rational(2 * k + 1);
    power *= y2;
    // Remaining terms are at most 2 y^{2k+3} / ((2k+3)(1 - y^2)).
    Rational tail = Rational(2) * power / (Rational(2 * k + 3) * (Rational(1) - y2));
    if (tail < max_width) return {sum, sum + tail};
  }
}

}  // namespace

RationalInterval ln_enclosure(long x, const Rational& max_width) {
  if (x < 1) throw std::domain_error("ln_enclosure: argument must be >= 1");
  long k = 0;
  long pow2 = 1;
  while (pow2 * 2 <= x) {
    pow2 *= 2;
    ++k;
  }
  Rational per_part = max_width / Rational(2 * (k + 1));
  RationalInterval ln2 = ln_small(Rational(2), per_part);
  RationalInterval rest = ln_small(Rational(x, pow2), per_part);
  return Rational(k) * ln2 + rest;
}

}  // namespace arbor
