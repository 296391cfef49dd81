#pragma once

#include <optional>
#include <string>
#include <vector>

#include "coverdepth/enumeration.hpp"

namespace coverdepth {

// n(H_n - H_{n-k}): the coverage-depth optimum, attained exactly by MDS codes.
Rational mds_lower_bound(size_t n, size_t k);

// E[C] = n H_n - sum_{s=k}^{n-1} alpha(C,s) / C(n-1,s), from the census.
Rational expectation_exact(const LinearCode& c);
Rational expectation_exact(const LinearCode& c, const SupportCensus& census);

// Same value through the minimum-distance refinement:
// E[C] = n(H_n - H_{d-1}) - sum_{s=k}^{n-d} alpha(C,s) / C(n-1,s).
Rational expectation_refined(const LinearCode& c);
Rational expectation_refined(const LinearCode& c, const SupportCensus& census);

// E[C] from the dual code's census only:
// E[C] = n H_n - sum_{s=k}^{n-1} beta_{s-k}(C^dual, n-s) / C(n-1,s).
Rational expectation_via_dual(const LinearCode& c);
Rational expectation_via_dual(const LinearCode& c, const SupportCensus& dual_census);

// Closed form for the q-ary simplex code of dimension k.
Rational expectation_simplex(unsigned q, unsigned k);

// Closed form for the q-ary Hamming code of redundancy r.
Rational expectation_hamming(unsigned q, unsigned r);

// Closed form for the (extended) ternary Golay code; the weight coefficient
// it needs is taken from actual enumeration of the constructed code.
Rational expectation_golay(bool extended);

// The weight-distribution route: extension-code weight distributions
// (from the extended enumerator) combined with gamma(q,m,n).
Rational expectation_from_weights(const LinearCode& c);
Rational expectation_from_weights(const LinearCode& c, const SupportCensus& census);

// Closed form for the first-order q-ary Reed-Muller code of dimension s.
// The t-range cutoff floor(s-1-log_q(r)) is evaluated by integer comparison
// q^(s-1-t) >= r.
Rational expectation_reed_muller(unsigned q, unsigned s);

// Independent oracle: solves the absorbing chain on the lattice of subspaces
// spanned by column subsets. Touches no census, enumerator or harmonic
// machinery.
Rational expectation_chain_oracle(const LinearCode& c, size_t max_states = 1000000);

struct SimulationConfig {
    std::uint64_t trials = 100000;
    std::uint64_t seed = 1;
    std::string rng = "splitmix64";
};

struct MonteCarloResult {
    double mean = 0.0;
    double stderr_mean = 0.0;
    std::uint64_t trials = 0;
    std::uint64_t seed = 0;
    std::string rng;
};

// Uniform column draws with replacement until the span reaches rank k.
// Per-trial substreams are derived by counter, so the result depends only
// on the config, never on scheduling or thread count.
MonteCarloResult simulate(const LinearCode& c, const SimulationConfig& cfg);

// One expectation value, exact or sampled.
struct ExpectationResult {
    std::string method;
    std::optional<Rational> exact;
    std::optional<MonteCarloResult> mc;
};

struct MethodValue {
    std::string method;
    Rational value;
};

struct PairCheck {
    std::string lhs, rhs;
    bool pass = false;
    std::string detail;
};

struct VerificationReport {
    std::vector<MethodValue> values;
    std::optional<MonteCarloResult> mc;
    std::vector<PairCheck> checks;
    bool all_pass = true;
};

// Runs every exact method whose guard admits the code (plus the family
// closed form when the code was built by a constructor), asserts pairwise
// rational equality, then checks Monte Carlo agreement at 4 standard errors.
VerificationReport verify_all_methods(const LinearCode& c, const SimulationConfig& cfg = {});

}  // namespace coverdepth
