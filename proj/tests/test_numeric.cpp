#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <set>

#include "coverdepth/linalg.hpp"
#include "coverdepth/numeric.hpp"
#include "coverdepth/rng.hpp"

#include "test_support.hpp"

using namespace coverdepth;

TEST_CASE("harmonic numbers") {
    CHECK(harmonic(0) == Rational(0));
    CHECK(harmonic(1) == Rational(1));
    CHECK(harmonic(3) == Rational(11, 6));
    CHECK(harmonic(11) == Rational(83711, 27720));
    // lowest terms, positive denominator
    const Rational h = harmonic(11);
    CHECK(gcd(h.num(), h.den()) == 1);
    CHECK(h.den() > 0);
}

TEST_CASE("binomial coefficients against Pascal recurrence") {
    CHECK(binomial(5, 0) == 1);
    CHECK(binomial(4, 7) == 0);
    CHECK(binomial(4, -1) == 0);
    CHECK(binomial(11, 6) == 462);

    // oracle: Pascal triangle built independently
    std::vector<std::vector<BigInt>> tri(13);
    for (size_t n = 0; n < tri.size(); ++n) {
        tri[n].assign(n + 1, 1);
        for (size_t k = 1; k < n; ++k) tri[n][k] = tri[n - 1][k - 1] + tri[n - 1][k];
    }
    for (size_t n = 0; n < tri.size(); ++n)
        for (size_t k = 0; k <= n; ++k)
            CHECK(binomial(n, static_cast<long>(k)) == tri[n][k]);
}

namespace {

// Oracle: count i-dimensional subspaces of F_q^m by exhaustive enumeration
// of spans of i-subsets of nonzero vectors (distinct canonical rrefs).
std::size_t count_subspaces(unsigned q, unsigned m, unsigned i) {
    auto f = FiniteField::from_order(q);
    std::uint32_t qm = 1;
    for (unsigned t = 0; t < m; ++t) qm *= q;
    std::vector<std::vector<std::uint32_t>> vecs;
    for (std::uint32_t code = 1; code < qm; ++code) {
        std::vector<std::uint32_t> v(m);
        std::uint32_t t = code;
        for (unsigned d = 0; d < m; ++d) {
            v[d] = t % q;
            t /= q;
        }
        vecs.push_back(std::move(v));
    }
    if (i == 0) return 1;
    std::set<std::vector<std::uint32_t>> seen;
    // iterate i-subsets of vecs
    std::vector<bool> sel(vecs.size(), false);
    std::fill(sel.begin(), sel.begin() + i, true);
    do {
        SpanState span(f, m);
        for (size_t j = 0; j < vecs.size(); ++j)
            if (sel[j]) span.insert(vecs[j]);
        if (span.rank() == i) seen.insert(span.canonical_key());
    } while (std::prev_permutation(sel.begin(), sel.end()));
    return seen.size();
}

}  // namespace

TEST_CASE("gaussian binomials") {
    CHECK(q_binomial(3, 1, 2) == 7);
    CHECK(q_binomial(4, 2, 3) == 130);
    CHECK(q_binomial(5, 0, 2) == 1);
    CHECK(q_binomial(0, 0, 7) == 1);
    CHECK(q_binomial(3, 4, 2) == 0);
    CHECK(q_binomial(3, -1, 2) == 0);

    for (unsigned q : {2u, 3u})
        for (unsigned m = 0; m <= 4; ++m)
            for (unsigned i = 0; i <= m; ++i)
                CHECK(q_binomial(m, i, q) == BigInt(static_cast<unsigned long>(count_subspaces(q, m, i))));
}

TEST_CASE("gamma coefficient") {
    CHECK(gamma_coeff(2, 1, 1) == Rational(1));
    CHECK(gamma_coeff(2, 0, 1) == Rational(2));
    CHECK(gamma_coeff(3, 2, 2) == Rational(1, 16));
    CHECK_THROWS_AS(gamma_coeff(2, 3, 2), std::invalid_argument);
}

TEST_CASE("q^(jr) rank-enumeration identity") {
    CHECK(verify_qjr_identity(1, 1, 2));
    CHECK(verify_qjr_identity(0, 5, 3));
    CHECK(verify_qjr_identity(3, 4, 2));
    for (unsigned q : {2u, 3u, 4u, 5u})
        for (unsigned j = 0; j <= 6; ++j)
            for (unsigned r = 0; r <= 6; ++r) CHECK(verify_qjr_identity(j, r, q));
}

TEST_CASE("lower q-transform inversion") {
    SUBCASE("delta round-trip") {
        IntegerSequence x = {1, 0, 0};
        CHECK(invert_lower_q(forward_lower_q(x, 2), 2) == x);
    }
    SUBCASE("constant forward image") {
        // x = (c, 0, ..., 0) has y_m = c for all m
        IntegerSequence x = {7, 0, 0, 0, 0};
        const IntegerSequence y = forward_lower_q(x, 3);
        for (const BigInt& v : y) CHECK(v == 7);
        CHECK(invert_lower_q(y, 3) == x);
    }
    SUBCASE("random round-trips") {
        SplitMix64 rng(2024);
        for (int rep = 0; rep < 25; ++rep) {
            IntegerSequence x(6);
            for (auto& v : x) v = static_cast<long>(rng.uniform_below(2001)) - 1000;
            CHECK(invert_lower_q(forward_lower_q(x, 3), 3) == x);
        }
    }
}

TEST_CASE("upper q-transform inversion") {
    SUBCASE("top delta") {
        IntegerSequence x = {0, 0, 0, 1};
        CHECK(invert_upper_q(forward_upper_q(x, 2), 2) == x);
    }
    SUBCASE("length one") {
        IntegerSequence y = {5};
        CHECK(invert_upper_q(y, 2) == IntegerSequence{5});
    }
    SUBCASE("random round-trips") {
        SplitMix64 rng(77);
        for (int rep = 0; rep < 25; ++rep) {
            IntegerSequence x(7);
            for (auto& v : x) v = static_cast<long>(rng.uniform_below(2001)) - 1000;
            CHECK(invert_upper_q(forward_upper_q(x, 2), 2) == x);
        }
    }
}

TEST_CASE("rational arithmetic stays canonical") {
    const Rational a(BigInt(4), BigInt(-6));
    CHECK(a.num() == -2);
    CHECK(a.den() == 3);
    CHECK(a.to_string() == "-2/3");
    CHECK_THROWS_AS(Rational(BigInt(1), BigInt(0)), std::domain_error);
    CHECK_THROWS_AS(Rational(1) / Rational(0), std::domain_error);
    CHECK(Rational(1, 3) + Rational(1, 6) == Rational(1, 2));
    CHECK((Rational(22, 7) * Rational(7, 11)).to_string() == "2");
}
