#include "arbor/closed_forms.hpp"

#include <stdexcept>

namespace arbor {

namespace {

void require_positive(int n, const char* what) {
  if (n < 1) throw std::domain_error(std::string(what) + ": order must be positive");
}

Rational signed_term(int n) { return pow(Rational(-2), static_cast<unsigned>(n)) / factorial(static_cast<unsigned>(n)); }

}  // namespace

Prob oo_closed_form(int n) {
  require_positive(n, "oo_closed_form");
  return Rational(1, 2) + (n % 2 == 1 ? Rational(1, 2L * n) : Rational(0));
}

Prob star_p(int n) {
  require_positive(n, "star_p");
  Rational v = Rational(2, 3) - Rational(1, 3L * n);
  if (n % 2 == 1) {
    unsigned m = static_cast<unsigned>(n - 1);
    v += Rational(2, 3L * n) * binomial(m, m / 2) / pow(Rational(2), m);
  }
  return v;
}

Prob star_q(int n) {
  require_positive(n, "star_q");
  Rational v = Rational(2, 3) - Rational(2, 3L * n);
  if (n % 2 == 0) {
    unsigned m = static_cast<unsigned>(n);
    v += Rational(2, 3L * n) * binomial(m, m / 2) / pow(Rational(2), m);
  }
  return v;
}

Rational exp_neg2_partial_sum(int n) {
  Rational sum(0);
  Rational term(1);
  for (int j = 0; j <= n; ++j) {
    if (j > 0) term *= Rational(-2, j);
    sum += term;
  }
  return sum;
}

Prob path_p(int n) {
  if (n < 0) throw std::domain_error("path_p: negative order");
  if (n == 0) return Rational(1, 2);
  return Rational(1, 2) - Rational(1, n) * signed_term(n) + Rational(n + 2, 2L * n) * exp_neg2_partial_sum(n);
}

Prob path_q(int n) {
  if (n < 0) throw std::domain_error("path_q: negative order");
  if (n == 0) return Rational(1, 2);
  return Rational(n - 1, 2L * n) - Rational(1, n) * signed_term(n) + Rational(n + 3, 2L * n) * exp_neg2_partial_sum(n);
}

Prob rr_star(int n) {
  require_positive(n, "rr_star");
  return Rational(1, 2) + (n % 2 == 1 ? Rational(1, 2L * n * n) : Rational(0));
}

Prob rr_path(int n) {
  require_positive(n, "rr_path");
  // n * P(P_n) = n/2 + 1/6 + d(n) with d(1) = 1/3, d(2) = -1/6, d(n) = 0 beyond.
  Rational correction = n == 1 ? Rational(1, 3) : (n == 2 ? Rational(-1, 6) : Rational(0));
  return (Rational(n, 2) + Rational(1, 6) + correction) / Rational(n);
}

}  // namespace arbor
