// Acceptance suite: one pass/fail line per criterion, nonzero exit on any
// failure. Tolerances and runtime limits are pinned in the checks below.

#include <chrono>
#include <cmath>
#include <functional>
#include <iostream>
#include <sstream>
#include <vector>

#include "coverdepth/coverage.hpp"
#include "coverdepth/numeric.hpp"
#include "coverdepth/serialize.hpp"

#include "test_support.hpp"

using namespace coverdepth;
using namespace testsupport;

namespace {

struct Criterion {
    int id;
    std::string title;
    std::function<void(std::ostringstream&)> body;  // throws or appends failures
};

struct Failure {
    std::string message;
};

void require(std::ostringstream& log, bool cond, const std::string& what) {
    if (!cond) log << "    FAILED: " << what << "\n";
}

std::vector<std::pair<std::string, LinearCode>> suite_codes() {
    std::vector<std::pair<std::string, LinearCode>> suite;
    suite.emplace_back("c1", example_c1());
    suite.emplace_back("c2", example_c2());
    for (auto [q, k] : {std::pair{2u, 2u}, {2u, 3u}, {2u, 4u}, {3u, 2u}, {3u, 3u}})
        suite.emplace_back("simplex(" + std::to_string(q) + "," + std::to_string(k) + ")",
                           simplex_code(q, k));
    for (auto [q, r] : {std::pair{2u, 2u}, {2u, 3u}, {3u, 2u}})
        suite.emplace_back("hamming(" + std::to_string(q) + "," + std::to_string(r) + ")",
                           hamming_code(q, r));
    suite.emplace_back("golay3", ternary_golay());
    suite.emplace_back("golay3x", extended_ternary_golay());
    suite.emplace_back("rm1(2,3)", reed_muller1(2, 3));
    suite.emplace_back("rs(7,7,3)", reed_solomon(7, 7, 3));
    return suite;
}

double seconds_since(std::chrono::steady_clock::time_point start) {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
}

// ---- criterion bodies -----------------------------------------------------

void criterion_golden_values(std::ostringstream& log) {
    const Rational want1(1229, 210), want2(2633, 462);
    for (auto [name, code, want] :
         {std::tuple{"C1", example_c1(), want1}, std::tuple{"C2", example_c2(), want2}}) {
        const auto start = std::chrono::steady_clock::now();
        require(log, expectation_exact(code) == want, std::string(name) + " exact");
        require(log, expectation_from_weights(code) == want, std::string(name) + " weights");
        require(log, expectation_chain_oracle(code) == want, std::string(name) + " chain");
        const double dt = seconds_since(start);
        require(log, dt < 5.0, std::string(name) + " runtime " + std::to_string(dt) + " s >= 5 s");
    }
}

void criterion_golay_decimals(std::ostringstream& log) {
    const auto start = std::chrono::steady_clock::now();
    const Rational plain_census = expectation_refined(ternary_golay());
    const Rational plain_closed = expectation_golay(false);
    require(log, plain_census == plain_closed, "golay3 census vs closed form");
    require(log, std::fabs(plain_closed.to_double() - 8.416) < 5e-4, "golay3 decimal 8.416");

    const Rational ext_census = expectation_refined(extended_ternary_golay());
    const Rational ext_closed = expectation_golay(true);
    require(log, ext_census == ext_closed, "golay3x census vs closed form");
    require(log, std::fabs(ext_closed.to_double() - 8.124) < 5e-4, "golay3x decimal 8.124");
    const double dt = seconds_since(start);
    require(log, dt < 30.0, "runtime " + std::to_string(dt) + " s >= 30 s");
}

void criterion_golay_weights(std::ostringstream& log) {
    const auto w = weight_distribution(ternary_golay());
    require(log, w.counts[5] == 132, "W_5 = 132");
    require(log, w.counts[6] == 132, "W_6 = 132");
    require(log, w.counts[8] == 330, "W_8 = 330");
    require(log, w.counts[9] == 110, "W_9 = 110");
    require(log, w.counts[11] == 24, "W_11 = 24");
    const auto dual = macwilliams_dual(w, 3, 6);
    require(log, dual.counts[6] == 132, "dual W_6 = 132");
    require(log, dual.counts[9] == 110, "dual W_9 = 110");
}

void criterion_closed_forms(std::ostringstream& log) {
    const auto start = std::chrono::steady_clock::now();
    for (auto [q, k] : {std::pair{2u, 2u}, {2u, 3u}, {2u, 4u}, {3u, 2u}, {3u, 3u}})
        require(log, expectation_simplex(q, k) == expectation_exact(simplex_code(q, k)),
                "simplex(" + std::to_string(q) + "," + std::to_string(k) + ")");
    for (auto [q, r] : {std::pair{2u, 2u}, {2u, 3u}, {3u, 2u}})
        require(log, expectation_hamming(q, r) == expectation_exact(hamming_code(q, r)),
                "hamming(" + std::to_string(q) + "," + std::to_string(r) + ")");
    for (auto [q, s] : {std::pair{2u, 2u}, {2u, 3u}, {2u, 4u}, {3u, 2u}, {3u, 3u}})
        require(log, expectation_reed_muller(q, s) == expectation_exact(reed_muller1(q, s)),
                "rm1(" + std::to_string(q) + "," + std::to_string(s) + ")");
    const double dt = seconds_since(start);
    require(log, dt < 120.0, "runtime " + std::to_string(dt) + " s >= 2 min");
}

void criterion_weight_pipeline(std::ostringstream& log) {
    for (const auto& [name, code] : suite_codes()) {
        if (code.length() > 12) continue;
        const SupportCensus census = support_census(code);
        require(log, expectation_from_weights(code, census) == expectation_exact(code, census),
                name);
    }
    SplitMix64 rng(60401);
    for (int rep = 0; rep < 25; ++rep) {
        const unsigned q = rep % 2 ? 3 : 2;
        const size_t n = 3 + rng.uniform_below(8);          // 3..10
        const size_t k = 2 + rng.uniform_below(n - 2);      // 2..n-1
        const auto code = random_code(q, k, n, rng);
        const SupportCensus census = support_census(code);
        require(log, expectation_from_weights(code, census) == expectation_exact(code, census),
                "random #" + std::to_string(rep) + " [" + std::to_string(n) + "," +
                    std::to_string(k) + "]_" + std::to_string(q));
    }
}

void criterion_duality(std::ostringstream& log) {
    for (const auto& [name, code] : suite_codes()) {
        if (code.length() > 12) continue;
        const auto census = support_census(code);
        const auto dual_census = support_census(code.dual());
        const size_t n = code.length();
        const long k = static_cast<long>(code.dimension());
        bool ok = true;
        for (size_t s = 0; s <= n && ok; ++s)
            for (long ell = 0; ell <= k && ok; ++ell)
                ok = census.beta(ell, s) ==
                     dual_census.beta(ell + static_cast<long>(s) - k, n - s);
        require(log, ok, name);
    }
}

void criterion_mds_bound(std::ostringstream& log) {
    for (const auto& [name, code] : suite_codes()) {
        const Rational e = expectation_exact(code);
        const Rational bound = mds_lower_bound(code.length(), code.dimension());
        const bool mds = code.minimum_distance() == code.length() - code.dimension() + 1;
        require(log, e >= bound, name + ": bound violated");
        require(log, (e == bound) == mds,
                name + ": equality must hold exactly for MDS codes");
    }
}

void criterion_inversions(std::ostringstream& log) {
    const auto start = std::chrono::steady_clock::now();
    for (unsigned q : {2u, 3u, 4u, 5u})
        for (unsigned j = 0; j <= 6; ++j)
            for (unsigned r = 0; r <= 6; ++r)
                require(log, verify_qjr_identity(j, r, q),
                        "q^(jr) identity at j=" + std::to_string(j) + " r=" + std::to_string(r) +
                            " q=" + std::to_string(q));
    SplitMix64 rng(1899);
    for (int rep = 0; rep < 100; ++rep) {
        const unsigned q = 2 + static_cast<unsigned>(rng.uniform_below(4));
        IntegerSequence x(1 + rng.uniform_below(10));
        for (auto& v : x) v = static_cast<long>(rng.uniform_below(4001)) - 2000;
        require(log, invert_lower_q(forward_lower_q(x, q), q) == x,
                "lower round-trip #" + std::to_string(rep));
        require(log, invert_upper_q(forward_upper_q(x, q), q) == x,
                "upper round-trip #" + std::to_string(rep));
    }
    const double dt = seconds_since(start);
    require(log, dt < 10.0, "runtime " + std::to_string(dt) + " s >= 10 s");
}

void criterion_extension_crosscheck(std::ostringstream& log) {
    SplitMix64 rng(424242);
    for (int rep = 0; rep < 10; ++rep) {
        const size_t k = 1 + rng.uniform_below(3);       // 1..3
        const size_t n = k + 1 + rng.uniform_below(8 - k);  // k+1..8
        const auto code = random_code(2, k, n, rng);
        const auto e = extended_enumerator(code);
        const auto via_enumerator = extension_weight_distribution(e, 2, 2);
        const auto direct = weight_distribution(direct_extension_code(code, 2));
        require(log, via_enumerator == direct,
                "random #" + std::to_string(rep) + " [" + std::to_string(n) + "," +
                    std::to_string(k) + "]_2 over GF(4)");
    }
}

void criterion_monte_carlo(std::ostringstream& log) {
    const auto code = simplex_code(3, 3);
    const double exact = expectation_simplex(3, 3).to_double();
    int hits = 0;
    for (std::uint64_t seed = 1; seed <= 20; ++seed) {
        const auto mc = simulate(code, {100000, seed});
        if (std::fabs(mc.mean - exact) < 4.0 * mc.stderr_mean) ++hits;
    }
    require(log, hits >= 18,
            "only " + std::to_string(hits) + "/20 seeds within 4 stderr");

    auto f5 = FiniteField::make(5, 1);
    const auto rep_code =
        LinearCode::from_generator(MatrixGF::from_rows(f5, {{1, 2, 3, 4}}));
    for (std::uint64_t seed : {1ULL, 99ULL}) {
        const auto mc = simulate(rep_code, {5000, seed});
        require(log, mc.mean == 1.0,
                "k=1 nonzero-column mean not exactly 1.0 at seed " + std::to_string(seed));
    }
}

void criterion_invariance(std::ostringstream& log) {
    SplitMix64 rng(5150);
    for (const auto& [name, code] : suite_codes()) {
        const Rational reference = expectation_exact(code);
        for (int rep = 0; rep < 20; ++rep) {
            const auto a = random_invertible(code.field(), code.dimension(), rng);
            const auto transformed = LinearCode::from_generator(a.multiply(code.generator()));
            if (expectation_exact(transformed) != reference) {
                require(log, false, name + " transform #" + std::to_string(rep));
                break;
            }
        }
    }
}

}  // namespace

int main() {
    const std::vector<Criterion> criteria = {
        {1, "golden values: E[C1] = 1229/210, E[C2] = 2633/462 by exact/weights/chain",
         criterion_golden_values},
        {2, "Golay decimals 8.416 / 8.124 and census vs closed-form rational agreement",
         criterion_golay_decimals},
        {3, "ternary Golay weight distribution and MacWilliams dual", criterion_golay_weights},
        {4, "closed form vs census: simplex, Hamming, Reed-Muller grids", criterion_closed_forms},
        {5, "weight-distribution pipeline equals census route on suite and random codes",
         criterion_weight_pipeline},
        {6, "beta duality via independent primal and dual censuses", criterion_duality},
        {7, "MDS lower bound with equality exactly on MDS codes", criterion_mds_bound},
        {8, "rank identity and q-inversion round-trips", criterion_inversions},
        {9, "extended enumerator at U = 4 vs direct GF(4) extension codes",
         criterion_extension_crosscheck},
        {10, "Monte Carlo calibration on simplex(3,3) and exact k=1 means",
         criterion_monte_carlo},
        {11, "expectation invariance under invertible row transformations",
         criterion_invariance},
    };

    int failures = 0;
    for (const auto& crit : criteria) {
        const auto start = std::chrono::steady_clock::now();
        std::ostringstream log;
        bool threw = false;
        std::string what;
        try {
            crit.body(log);
        } catch (const std::exception& e) {
            threw = true;
            what = e.what();
        }
        const double dt = seconds_since(start);
        const bool pass = !threw && log.str().empty();
        if (!pass) ++failures;
        std::printf("%s  criterion %2d: %s (%.2f s)\n", pass ? "PASS" : "FAIL", crit.id,
                    crit.title.c_str(), dt);
        if (threw) std::printf("    EXCEPTION: %s\n", what.c_str());
        if (!log.str().empty()) std::fputs(log.str().c_str(), stdout);
    }
    if (failures) std::printf("%d criterion(s) failed\n", failures);
    else std::printf("all %zu criteria passed\n", criteria.size());
    return failures == 0 ? 0 : 1;
}
