#pragma once

#include <vector>

#include "coverdepth/codes.hpp"
#include "coverdepth/rational.hpp"

namespace coverdepth {

// Counts W_0..W_n of codewords by Hamming weight.
struct WeightDistribution {
    size_t n = 0;
    std::vector<BigInt> counts;  // size n+1

    friend bool operator==(const WeightDistribution& a, const WeightDistribution& b) = default;
};

WeightDistribution weight_distribution(const LinearCode& c);

// Weight distribution of the dual of an [n, k]_q code with distribution w,
// via W_dual(X,Y) = q^-k W(X+(q-1)Y, X-Y). Throws if the transform does not
// divide exactly (i.e. w was not the distribution of a linear code).
WeightDistribution macwilliams_dual(const WeightDistribution& w, unsigned q, unsigned k);

// Table over all 2^n coordinate subsets S, counted by (|S|, dim C(S)).
// Single source for alpha, beta, beta-hat and the extended enumerator.
// Counts fit u64 comfortably under the n <= 28 guard.
class SupportCensus {
  public:
    SupportCensus(size_t n, size_t k) : n_(n), k_(k), table_(n + 1, std::vector<std::uint64_t>(k + 1, 0)) {}

    size_t n() const { return n_; }
    size_t k() const { return k_; }

    // #{ S : |S| = r, dim C(S) = j }, i.e. beta-hat_j(C, r).
    std::uint64_t at(size_t r, size_t j) const { return table_[r][j]; }
    std::uint64_t& cell(size_t r, size_t j) { return table_[r][j]; }

    // alpha(C, s): number of size-s information sets (= table[n-s][0]).
    BigInt alpha(size_t s) const;
    // beta_ell(C, s) = #{ S : |S| = s, dim C(S^c) = ell }; 0 off-range.
    BigInt beta(long ell, size_t s) const;

    void add(const SupportCensus& other);

  private:
    size_t n_, k_;
    std::vector<std::vector<std::uint64_t>> table_;
};

// Full 2^n subset census of dim C(S); guard n <= 28. Splits the mask space
// into contiguous chunks across threads; exact integer merge keeps the
// result independent of the split.
SupportCensus support_census(const LinearCode& c);

// B_t(U) polynomials of the extended weight enumerator, stored densely:
// b[t][j] = coefficient of U^j in B_t(U) = sum_J (U^{dim C(J^c)} - 1).
struct ExtendedEnumerator {
    size_t n = 0, k = 0;
    std::vector<std::vector<BigInt>> b;  // (n+1) x (k+1)

    BigInt evaluate_b(size_t t, const BigInt& u) const;
};

ExtendedEnumerator extended_enumerator(const SupportCensus& census);
ExtendedEnumerator extended_enumerator(const LinearCode& c);

// Weight distribution of the m-th extension code, read off the extended
// enumerator at U = q^m. m = 0 yields the zero-code delta distribution.
WeightDistribution extension_weight_distribution(const ExtendedEnumerator& e, unsigned q,
                                                 unsigned m);

// The extension code built directly: same generator entries over GF(q^m).
// Base field must be prime; serves as a brute-force cross-check for
// extension_weight_distribution.
LinearCode direct_extension_code(const LinearCode& c, unsigned m);

}  // namespace coverdepth
