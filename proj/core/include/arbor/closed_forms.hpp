#pragma once

#include "arbor/rational.hpp"

namespace arbor {

/// Optimal-vs-optimal first-player value, identical for every tree of order n:
/// 1/2 + [n odd] / (2n).
Prob oo_closed_form(int n);

/// Optimal player moving first (p) or second (q) against a uniformly random
/// opponent on the star S_n; central binomial terms appear for odd (p) or
/// even (q) n.
Prob star_p(int n);
Prob star_q(int n);

/// The same two values on the path P_n, from the truncated series of e^{-2}.
/// Defined for n >= 0 with p_0 = q_0 = 1/2.
Prob path_p(int n);
Prob path_q(int n);

/// Random-vs-random first-player value on S_n: 1/2 + [n odd] / (2 n^2).
Prob rr_star(int n);
/// Random-vs-random first-player value on P_n: 1/2 + 1/(6n) for n >= 3
/// (1 and 1/2 for n = 1, 2).
Prob rr_path(int n);

/// Partial sum sum_{j=0}^{n} (-2)^j / j!.
Rational exp_neg2_partial_sum(int n);

}  // namespace arbor
