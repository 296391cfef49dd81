#pragma once

#include <vector>

#include "coverdepth/rational.hpp"

namespace coverdepth {

using IntegerSequence = std::vector<BigInt>;

// H_m = sum_{i=1}^m 1/i, with H_0 = 0.
Rational harmonic(unsigned m);

// Binomial coefficient; 0 outside 0 <= k <= n.
BigInt binomial(unsigned long n, long k);

// Gaussian binomial [m choose i]_q; 0 outside 0 <= i <= m. Computed by the
// q-Pascal recurrence with a per-q memo table (stays in integers throughout).
BigInt q_binomial(unsigned m, long i, unsigned q);

// gamma(q,m,n) = sum_{j=m}^n ( prod_{v=0}^{j-1} 1/(q^j - q^v) )
//                * q^(C(j,2)+C(j-m,2)) * [j choose m]_q,
// with the empty product at j = 0 equal to 1. Requires 0 <= m <= n, q >= 2.
Rational gamma_coeff(unsigned q, unsigned m, unsigned n);

// Checks q^(j*r) == sum_{i=0}^r [j,i]_q [r,i]_q prod_{s<i} (q^i - q^s).
bool verify_qjr_identity(unsigned j, unsigned r, unsigned q);

// Lower-triangular q-transform pair:
//   y_m = sum_{i=0}^m [m,i]_q x_i
//   x_i = sum_{m=0}^i (-1)^(i-m) q^C(i-m,2) [i,m]_q y_m
IntegerSequence forward_lower_q(const IntegerSequence& x, unsigned q);
IntegerSequence invert_lower_q(const IntegerSequence& y, unsigned q);

// Upper-triangular q-transform pair on sequences indexed 0..n:
//   y_i = sum_{j=i}^n [j,i]_q x_j
//   x_j = sum_{i=j}^n (-1)^(i-j) q^C(i-j,2) [i,j]_q y_i
IntegerSequence forward_upper_q(const IntegerSequence& x, unsigned q);
IntegerSequence invert_upper_q(const IntegerSequence& y, unsigned q);

}  // namespace coverdepth
