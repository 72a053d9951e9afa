#pragma once

#include "arbor/rational.hpp"

namespace arbor {

/// Closed rational interval [lo, hi] certified to contain some real constant.
struct RationalInterval {
  Rational lo;
  Rational hi;

  Rational width() const { return hi - lo; }
  bool contains(const Rational& x) const { return lo <= x && x <= hi; }

  friend RationalInterval operator+(const RationalInterval& a, const RationalInterval& b) {
    return {a.lo + b.lo, a.hi + b.hi};
  }
  /// Scaling by a nonnegative rational.
  friend RationalInterval operator*(const Rational& s, const RationalInterval& a) {
    return s >= Rational(0) ? RationalInterval{s * a.lo, s * a.hi} : RationalInterval{s * a.hi, s * a.lo};
  }
};

/// Encloses e^{-2} between two consecutive partial sums of sum_j (-2)^j / j!.
/// The returned width is below `max_width`.
RationalInterval exp_neg2_enclosure(const Rational& max_width = Rational(1, 10'000'000));

/// Encloses ln(x) for an integer x >= 1 using ln 2 and the artanh series.
RationalInterval ln_enclosure(long x, const Rational& max_width = Rational(1, 10'000'000));

}  // namespace arbor
