#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "coverdepth/coverage.hpp"

#include "test_support.hpp"

using namespace coverdepth;
using namespace testsupport;

TEST_CASE("MDS lower bound") {
    CHECK(mds_lower_bound(3, 2) == Rational(5, 2));
    CHECK(mds_lower_bound(4, 4) == Rational(4) * harmonic(4));
    for (size_t n : {2u, 5u, 9u}) CHECK(mds_lower_bound(n, 1) == Rational(1));
    CHECK_THROWS_AS(mds_lower_bound(3, 0), std::invalid_argument);
    CHECK_THROWS_AS(mds_lower_bound(3, 4), std::invalid_argument);
}

TEST_CASE("census-formula expectation on the reference codes") {
    CHECK(expectation_exact(example_c1()) == Rational(1229, 210));
    CHECK(expectation_exact(example_c2()) == Rational(2633, 462));
    CHECK(expectation_exact(reed_solomon(7, 7, 3)) == mds_lower_bound(7, 3));
}

TEST_CASE("refined formula matches and hits the Golay values") {
    const Rational golay(21209, 2520);
    CHECK(expectation_refined(ternary_golay()) == golay);
    CHECK(std::fabs(golay.to_double() - 8.416) < 5e-4);

    const Rational golayx = expectation_refined(extended_ternary_golay());
    CHECK(golayx == expectation_exact(extended_ternary_golay()));
    CHECK(std::fabs(golayx.to_double() - 8.124) < 5e-4);

    // for MDS codes the correction sum is empty
    const auto rs = reed_solomon(5, 4, 2);
    CHECK(expectation_refined(rs) == mds_lower_bound(4, 2));
    CHECK(expectation_refined(example_c1()) == Rational(1229, 210));
}

TEST_CASE("dual-census route") {
    CHECK(expectation_via_dual(hamming_code(2, 3)) == expectation_exact(hamming_code(2, 3)));
    CHECK(expectation_via_dual(ternary_golay()) == Rational(21209, 2520));
    // dual of the full space is the zero code; route still returns the MDS value
    CHECK(expectation_via_dual(full_space(2, 4)) == mds_lower_bound(4, 4));
}

TEST_CASE("simplex closed form") {
    CHECK(expectation_simplex(2, 2) == Rational(5, 2));
    CHECK(expectation_simplex(2, 3) == Rational(47, 12));
    CHECK(expectation_simplex(2, 2) == expectation_exact(simplex_code(2, 2)));
    CHECK(expectation_simplex(2, 3) == expectation_exact(simplex_code(2, 3)));
    // the i = 1 summand is always zero: E > k strictly needs k >= 2 terms
    CHECK(expectation_simplex(5, 2) - Rational(2) == Rational(5 - 1, 25 - 5));
}

TEST_CASE("hamming closed form") {
    CHECK(expectation_hamming(2, 2) == Rational(1));
    CHECK(expectation_hamming(2, 3) == expectation_exact(hamming_code(2, 3)));
    CHECK(expectation_hamming(3, 2) == expectation_exact(hamming_code(3, 2)));
}

TEST_CASE("golay closed forms") {
    CHECK(expectation_golay(false) == Rational(21209, 2520));
    CHECK(expectation_golay(true) == Rational(2681, 330));
    CHECK(expectation_golay(false) == expectation_exact(ternary_golay()));
    CHECK(expectation_golay(true) == expectation_exact(extended_ternary_golay()));
}

TEST_CASE("weight-distribution pipeline") {
    CHECK(expectation_from_weights(example_c1()) == Rational(1229, 210));
    CHECK(expectation_from_weights(example_c2()) == Rational(2633, 462));
    CHECK(expectation_from_weights(ternary_golay()) == Rational(21209, 2520));
    for (auto code : {reed_solomon(7, 7, 3), reed_solomon(5, 4, 2)})
        CHECK(expectation_from_weights(code) ==
              mds_lower_bound(code.length(), code.dimension()));
}

TEST_CASE("Reed-Muller closed form") {
    CHECK(expectation_reed_muller(2, 2) == Rational(3));
    CHECK(expectation_reed_muller(3, 2) == Rational(5, 2));
    CHECK(expectation_reed_muller(3, 2) == mds_lower_bound(3, 2));
    CHECK(expectation_reed_muller(2, 4) == expectation_exact(reed_muller1(2, 4)));
    CHECK(expectation_reed_muller(2, 3) == expectation_exact(reed_muller1(2, 3)));
    CHECK(expectation_reed_muller(3, 3) == expectation_exact(reed_muller1(3, 3)));
}

TEST_CASE("chain oracle") {
    auto f2 = FiniteField::make(2, 1);
    SUBCASE("k = 1 codes with nonzero columns finish on the first draw") {
        auto rep = LinearCode::from_generator(MatrixGF::from_rows(f2, {{1, 1, 1, 1, 1}}));
        CHECK(expectation_chain_oracle(rep) == Rational(1));
    }
    SUBCASE("simplex(2,2) three-state chain") {
        CHECK(expectation_chain_oracle(simplex_code(2, 2)) == Rational(5, 2));
    }
    SUBCASE("reference code") {
        CHECK(expectation_chain_oracle(example_c1()) == Rational(1229, 210));
    }
    SUBCASE("state guard") {
        CHECK_THROWS_AS(expectation_chain_oracle(ternary_golay(), 10), std::runtime_error);
    }
    SUBCASE("zero and repeated columns are handled") {
        auto g = MatrixGF::from_rows(f2, {{1, 0, 1, 0, 0}, {0, 1, 1, 0, 0}});
        auto code = LinearCode::from_generator(g);
        CHECK(expectation_chain_oracle(code) == expectation_exact(code));
    }
}

TEST_CASE("Monte Carlo simulation") {
    SUBCASE("k = 1 all-nonzero columns gives mean exactly 1") {
        auto f3 = FiniteField::make(3, 1);
        auto rep = LinearCode::from_generator(MatrixGF::from_rows(f3, {{1, 2, 1}}));
        for (std::uint64_t seed : {0ULL, 7ULL, 123456789ULL}) {
            const auto mc = simulate(rep, {2000, seed});
            CHECK(mc.mean == 1.0);
            CHECK(mc.stderr_mean == 0.0);
        }
    }
    SUBCASE("simplex(2,2) within 3 standard errors of 5/2") {
        const auto mc = simulate(simplex_code(2, 2), {100000, 2024});
        CHECK(std::fabs(mc.mean - 2.5) < 3 * mc.stderr_mean);
    }
    SUBCASE("deterministic given the config") {
        const auto a = simulate(simplex_code(3, 2), {5000, 99});
        const auto b = simulate(simplex_code(3, 2), {5000, 99});
        CHECK(a.mean == b.mean);
        CHECK(a.stderr_mean == b.stderr_mean);
        const auto c = simulate(simplex_code(3, 2), {5000, 100});
        CHECK(a.mean != c.mean);
    }
    SUBCASE("config validation") {
        CHECK_THROWS_AS(simulate(simplex_code(2, 2), {0, 1}), std::invalid_argument);
        CHECK_THROWS_AS(simulate(simplex_code(2, 2), {10, 1, "mt19937"}), std::invalid_argument);
    }
}

TEST_CASE("generator-matrix invariance") {
    SplitMix64 rng(314);
    for (auto code : {example_c1(), simplex_code(3, 2), hamming_code(2, 3)}) {
        const Rational reference = expectation_exact(code);
        for (int rep = 0; rep < 5; ++rep) {
            auto a = random_invertible(code.field(), code.dimension(), rng);
            auto transformed = LinearCode::from_generator(a.multiply(code.generator()));
            CHECK(expectation_exact(transformed) == reference);
        }
    }
}

TEST_CASE("lower bound holds with equality exactly for MDS codes") {
    for (auto code : {example_c1(), example_c2(), simplex_code(2, 3), hamming_code(2, 3),
                      ternary_golay(), reed_solomon(7, 7, 3), reed_muller1(3, 2)}) {
        CAPTURE(code.family().label());
        const Rational e = expectation_exact(code);
        const Rational bound = mds_lower_bound(code.length(), code.dimension());
        const bool mds = code.minimum_distance() == code.length() - code.dimension() + 1;
        CHECK(e >= bound);
        CHECK((e == bound) == mds);
    }
}

TEST_CASE("verify_all_methods") {
    SUBCASE("hamming(2,3): every route agrees") {
        const auto rep = verify_all_methods(hamming_code(2, 3), {20000, 5});
        CHECK(rep.all_pass);
        CHECK(rep.values.size() == 6);  // exact, refined, weights, dual, chain, closed-form
        CHECK(rep.mc.has_value());
    }
    SUBCASE("reference code (no closed form)") {
        const auto rep = verify_all_methods(example_c2(), {20000, 5});
        CHECK(rep.all_pass);
        CHECK(rep.values.size() == 5);
    }
    SUBCASE("disagreement is reported with both methods and values") {
        // no library route disagrees, so check the report structure instead
        const auto rep = verify_all_methods(simplex_code(2, 2), {5000, 1});
        for (const auto& chk : rep.checks) {
            CHECK(!chk.lhs.empty());
            CHECK(!chk.rhs.empty());
            CHECK(!chk.detail.empty());
        }
    }
}

TEST_CASE("simplex empirically minimizes E among random [7,3]_2 codes") {
    // evidence probe for the optimal-coverage conjecture, not a theorem
    const Rational simplex_e = expectation_simplex(2, 3);
    SplitMix64 rng(271828);
    for (int rep = 0; rep < 100; ++rep) {
        const auto code = random_code(2, 3, 7, rng);
        CHECK(expectation_exact(code) >= simplex_e);
    }
}
