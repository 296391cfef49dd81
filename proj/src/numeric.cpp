#include "coverdepth/numeric.hpp"

#include <map>
#include <mutex>
#include <stdexcept>

namespace coverdepth {

Rational harmonic(unsigned m) {
    Rational h;
    for (unsigned i = 1; i <= m; ++i) h += Rational(BigInt(1), BigInt(i));
    return h;
}

BigInt binomial(unsigned long n, long k) {
    if (k < 0 || static_cast<unsigned long>(k) > n) return 0;
    BigInt r;
    mpz_bin_uiui(r.get_mpz_t(), n, static_cast<unsigned long>(k));
    return r;
}

namespace {

// Per-q triangle of Gaussian binomials, grown on demand. Values are
// deterministic, so concurrent growth can only ever write identical rows.
class QBinomialCache {
  public:
    BigInt get(unsigned m, unsigned i, unsigned q) {
        std::lock_guard<std::mutex> lock(mu_);
        auto& tri = triangles_[q];
        while (tri.size() <= m) {
            const unsigned row = static_cast<unsigned>(tri.size());
            std::vector<BigInt> next(row + 1);
            next[0] = 1;
            next[row] = 1;
            // [m,i]_q = [m-1,i-1]_q + q^i [m-1,i]_q
            BigInt qi = q;
            for (unsigned j = 1; j < row; ++j) {
                next[j] = tri[row - 1][j - 1] + qi * tri[row - 1][j];
                qi *= q;
            }
            tri.push_back(std::move(next));
        }
        return tri[m][i];
    }

  private:
    std::mutex mu_;
    std::map<unsigned, std::vector<std::vector<BigInt>>> triangles_;
};

QBinomialCache& qbin_cache() {
    static QBinomialCache cache;
    return cache;
}

}  // namespace

BigInt q_binomial(unsigned m, long i, unsigned q) {
    if (q < 2) throw std::invalid_argument("q_binomial: q must be >= 2");
    if (i < 0 || static_cast<unsigned long>(i) > m) return 0;
    return qbin_cache().get(m, static_cast<unsigned>(i), q);
}

namespace {

unsigned long choose2(unsigned long x) { return x < 2 ? 0 : x * (x - 1) / 2; }

}  // namespace

Rational gamma_coeff(unsigned q, unsigned m, unsigned n) {
    if (q < 2) throw std::invalid_argument("gamma_coeff: q must be >= 2");
    if (m > n) throw std::invalid_argument("gamma_coeff: requires m <= n");
    Rational total;
    for (unsigned j = m; j <= n; ++j) {
        BigInt denom = 1;
        const BigInt qj = bigint_pow(q, j);
        for (unsigned nu = 0; nu < j; ++nu) denom *= qj - bigint_pow(q, nu);
        total += Rational(bigint_pow(q, choose2(j) + choose2(j - m)) * q_binomial(j, m, q),
                          denom);
    }
    return total;
}

bool verify_qjr_identity(unsigned j, unsigned r, unsigned q) {
    const BigInt lhs = bigint_pow(q, static_cast<unsigned long>(j) * r);
    BigInt rhs = 0;
    for (unsigned i = 0; i <= r; ++i) {
        BigInt prod = 1;
        const BigInt qi = bigint_pow(q, i);
        for (unsigned s = 0; s < i; ++s) prod *= qi - bigint_pow(q, s);
        rhs += q_binomial(j, i, q) * q_binomial(r, i, q) * prod;
    }
    return lhs == rhs;
}

IntegerSequence forward_lower_q(const IntegerSequence& x, unsigned q) {
    IntegerSequence y(x.size());
    for (size_t m = 0; m < x.size(); ++m)
        for (size_t i = 0; i <= m; ++i)
            y[m] += q_binomial(static_cast<unsigned>(m), static_cast<long>(i), q) * x[i];
    return y;
}

IntegerSequence invert_lower_q(const IntegerSequence& y, unsigned q) {
    IntegerSequence x(y.size());
    for (size_t i = 0; i < y.size(); ++i) {
        for (size_t m = 0; m <= i; ++m) {
            const unsigned d = static_cast<unsigned>(i - m);
            BigInt term = bigint_pow(q, choose2(d)) *
                          q_binomial(static_cast<unsigned>(i), static_cast<long>(m), q) * y[m];
            if (d % 2) term = -term;
            x[i] += term;
        }
    }
    return x;
}

IntegerSequence forward_upper_q(const IntegerSequence& x, unsigned q) {
    const size_t n = x.size();
    IntegerSequence y(n);
    for (size_t i = 0; i < n; ++i)
        for (size_t j = i; j < n; ++j)
            y[i] += q_binomial(static_cast<unsigned>(j), static_cast<long>(i), q) * x[j];
    return y;
}

IntegerSequence invert_upper_q(const IntegerSequence& y, unsigned q) {
    const size_t n = y.size();
    IntegerSequence x(n);
    for (size_t j = 0; j < n; ++j) {
        for (size_t i = j; i < n; ++i) {
            const unsigned d = static_cast<unsigned>(i - j);
            BigInt term = bigint_pow(q, choose2(d)) *
                          q_binomial(static_cast<unsigned>(i), static_cast<long>(j), q) * y[i];
            if (d % 2) term = -term;
            x[j] += term;
        }
    }
    return x;
}

}  // namespace coverdepth
