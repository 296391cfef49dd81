#include "coverdepth/coverage.hpp"

#include <cmath>
#include <map>
#include <stdexcept>
#include <thread>

#include "coverdepth/numeric.hpp"
#include "coverdepth/rng.hpp"
#include "coverdepth/runtime.hpp"

namespace coverdepth {

Rational mds_lower_bound(size_t n, size_t k) {
    if (k < 1 || k > n) throw std::invalid_argument("mds_lower_bound: requires 1 <= k <= n");
    return Rational(static_cast<long>(n)) *
           (harmonic(static_cast<unsigned>(n)) - harmonic(static_cast<unsigned>(n - k)));
}

namespace {

void require_positive_dimension(const LinearCode& c, const char* who) {
    if (c.dimension() == 0)
        throw std::invalid_argument(std::string(who) + ": zero-dimensional code");
}

}  // namespace

Rational expectation_exact(const LinearCode& c) {
    return expectation_exact(c, support_census(c));
}

Rational expectation_exact(const LinearCode& c, const SupportCensus& census) {
    require_positive_dimension(c, "expectation_exact");
    const size_t n = c.length(), k = c.dimension();
    Rational e = Rational(static_cast<long>(n)) * harmonic(static_cast<unsigned>(n));
    for (size_t s = k; s < n; ++s)
        e -= Rational(census.alpha(s), binomial(n - 1, static_cast<long>(s)));
    return e;
}

Rational expectation_refined(const LinearCode& c) {
    return expectation_refined(c, support_census(c));
}

Rational expectation_refined(const LinearCode& c, const SupportCensus& census) {
    require_positive_dimension(c, "expectation_refined");
    const size_t n = c.length(), k = c.dimension();
    const size_t d = c.minimum_distance();
    Rational e = Rational(static_cast<long>(n)) *
                 (harmonic(static_cast<unsigned>(n)) - harmonic(static_cast<unsigned>(d - 1)));
    for (size_t s = k; s + d <= n; ++s)
        e -= Rational(census.alpha(s), binomial(n - 1, static_cast<long>(s)));
    return e;
}

Rational expectation_via_dual(const LinearCode& c) {
    return expectation_via_dual(c, support_census(c.dual()));
}

Rational expectation_via_dual(const LinearCode& c, const SupportCensus& dual_census) {
    require_positive_dimension(c, "expectation_via_dual");
    const size_t n = c.length(), k = c.dimension();
    if (dual_census.n() != n || dual_census.k() != n - k)
        throw std::invalid_argument("expectation_via_dual: census is not the dual's");
    Rational e = Rational(static_cast<long>(n)) * harmonic(static_cast<unsigned>(n));
    for (size_t s = k; s < n; ++s)
        e -= Rational(dual_census.beta(static_cast<long>(s - k), n - s),
                      binomial(n - 1, static_cast<long>(s)));
    return e;
}

Rational expectation_simplex(unsigned q, unsigned k) {
    if (q < 2 || k < 2) throw std::invalid_argument("expectation_simplex: requires q >= 2, k >= 2");
    Rational e(static_cast<long>(k));
    const BigInt qk = bigint_pow(q, k);
    for (unsigned i = 1; i <= k; ++i) {
        const BigInt qi = bigint_pow(q, i - 1);
        e += Rational(qi - 1, qk - qi);
    }
    return e;
}

Rational expectation_hamming(unsigned q, unsigned r) {
    if (q < 2 || r < 2) throw std::invalid_argument("expectation_hamming: requires q >= 2, r >= 2");
    const BigInt qr = bigint_pow(q, r);
    const BigInt n_big = (qr - 1) / (q - 1);
    const size_t n = static_cast<size_t>(n_big.get_ui());
    Rational e = Rational(static_cast<long>(n)) * harmonic(static_cast<unsigned>(n));
    for (unsigned ell = 1; ell <= r; ++ell) {
        BigInt prod = 1;
        for (unsigned i = 0; i < ell; ++i) prod *= (qr - bigint_pow(q, i)) / (q - 1);
        BigInt fact = 1;
        for (unsigned i = 2; i <= ell; ++i) fact *= i;
        e -= Rational(prod, fact * binomial(n - 1, static_cast<long>(n - ell)));
    }
    return e;
}

Rational expectation_golay(bool extended) {
    if (extended) {
        const LinearCode c = extended_ternary_golay();
        const size_t n = 12, k = 6, d = 6;
        const BigInt w6 = weight_distribution(c).counts[k];
        return Rational(static_cast<long>(n)) * (harmonic(n) - harmonic(d - 1)) -
               Rational(binomial(n, static_cast<long>(k)) - w6 / 2,
                        binomial(n - 1, static_cast<long>(k)));
    }
    const LinearCode c = ternary_golay();
    const size_t n = 11, k = 6, d = 5;
    const WeightDistribution dual_w = macwilliams_dual(weight_distribution(c), 3, k);
    const BigInt w6 = dual_w.counts[k];
    return Rational(static_cast<long>(n)) * (harmonic(n) - harmonic(d - 1)) -
           Rational(binomial(n, static_cast<long>(k)) - w6 / 2,
                    binomial(n - 1, static_cast<long>(k)));
}

Rational expectation_from_weights(const LinearCode& c) {
    return expectation_from_weights(c, support_census(c));
}

Rational expectation_from_weights(const LinearCode& c, const SupportCensus& census) {
    require_positive_dimension(c, "expectation_from_weights");
    const size_t n = c.length(), k = c.dimension();
    const unsigned q = c.q();
    const size_t d = c.minimum_distance();

    const ExtendedEnumerator enumr = extended_enumerator(census);
    std::vector<WeightDistribution> ext(n + 1);
    std::vector<Rational> gammas(n + 1);
    for (size_t m = 0; m <= n; ++m) {
        ext[m] = extension_weight_distribution(enumr, q, static_cast<unsigned>(m));
        gammas[m] = gamma_coeff(q, static_cast<unsigned>(m), static_cast<unsigned>(n));
    }

    Rational e = Rational(static_cast<long>(n)) *
                 (harmonic(static_cast<unsigned>(n)) - harmonic(static_cast<unsigned>(d - 1)));
    for (size_t r = k; r + d <= n; ++r) {
        Rational inner;
        for (size_t ell = 0; ell + r <= n; ++ell) {
            Rational alt;
            for (size_t m = 0; m <= n; ++m) {
                Rational term = Rational(ext[m].counts[ell]) * gammas[m];
                if (m % 2)
                    alt -= term;
                else
                    alt += term;
            }
            inner += Rational(binomial(n - ell, static_cast<long>(r))) * alt;
        }
        e -= inner / Rational(binomial(n - 1, static_cast<long>(r)));
    }
    return e;
}

Rational expectation_reed_muller(unsigned q, unsigned s) {
    if (q < 2 || s < 2)
        throw std::invalid_argument("expectation_reed_muller: requires q >= 2, s >= 2");
    const BigInt n_big = bigint_pow(q, s - 1);
    const BigInt d_big = BigInt(q - 1) * bigint_pow(q, s - 2);
    const unsigned n = static_cast<unsigned>(n_big.get_ui());
    const unsigned d = static_cast<unsigned>(d_big.get_ui());

    Rational e = Rational(static_cast<long>(n)) * (harmonic(n) - harmonic(d - 1));

    std::vector<Rational> gammas(n + 1);
    for (unsigned i = 0; i <= n; ++i) gammas[i] = gamma_coeff(q, i, n);

    const BigInt r_hi = bigint_pow(q, s - 2);  // n - d = q^(s-2)
    for (BigInt r = s; r <= r_hi; ++r) {
        const unsigned long ru = r.get_ui();
        Rational inner;
        for (unsigned t = 0; t + 1 <= s; ++t) {
            // t admissible iff q^(s-1-t) >= r  (the floor(s-1-log_q r) cutoff)
            if (bigint_pow(q, s - 1 - t) < r) break;
            Rational alt;
            for (unsigned i = 0; i <= n; ++i) {
                BigInt prod = 1;
                const BigInt qi = bigint_pow(q, i);
                for (unsigned j = 0; j < t; ++j) prod *= qi - bigint_pow(q, j);
                if (prod == 0) continue;
                Rational term = Rational(prod) * gammas[i];
                if (i % 2)
                    alt -= term;
                else
                    alt += term;
            }
            const BigInt coeff = binomial(bigint_pow(q, s - 1 - t).get_ui(),
                                          static_cast<long>(ru)) *
                                 bigint_pow(q, t) * q_binomial(s - 1, t, q);
            inner += Rational(coeff) * alt;
        }
        e -= inner / Rational(binomial(n - 1, static_cast<long>(ru)));
    }
    return e;
}

Rational expectation_chain_oracle(const LinearCode& c, size_t max_states) {
    require_positive_dimension(c, "expectation_chain_oracle");
    const size_t n = c.length(), k = c.dimension();
    std::vector<std::vector<std::uint32_t>> cols(n);
    for (size_t j = 0; j < n; ++j) cols[j] = c.generator().column(j);

    std::map<std::vector<std::uint32_t>, Rational> memo;

    // E[V] = (n + sum over columns outside V of E[span(V + g_j)]) / (n - #inside)
    auto solve = [&](auto&& self, const SpanState& state) -> Rational {
        if (state.full()) return Rational(0);
        const auto key = state.canonical_key();
        if (auto it = memo.find(key); it != memo.end()) return it->second;
        if (memo.size() >= max_states)
            throw std::runtime_error("expectation_chain_oracle: state guard exceeded");
        size_t inside = 0;
        Rational sum;
        for (size_t j = 0; j < n; ++j) {
            SpanState next = state;
            if (!next.insert(cols[j]))
                ++inside;
            else
                sum += self(self, next);
        }
        Rational value = (Rational(static_cast<long>(n)) + sum) /
                         Rational(static_cast<long>(n - inside));
        memo.emplace(key, value);
        return value;
    };

    SpanState origin(c.field(), k);
    return solve(solve, origin);
}

MonteCarloResult simulate(const LinearCode& c, const SimulationConfig& cfg) {
    require_positive_dimension(c, "simulate");
    if (cfg.trials < 1) throw std::invalid_argument("simulate: trials must be >= 1");
    if (cfg.rng != kRngName)
        throw std::invalid_argument("simulate: unknown rng '" + cfg.rng + "'");
    const size_t n = c.length(), k = c.dimension();
    std::vector<std::vector<std::uint32_t>> cols(n);
    for (size_t j = 0; j < n; ++j) cols[j] = c.generator().column(j);

    const unsigned jobs =
        static_cast<unsigned>(std::min<std::uint64_t>(thread_budget(), cfg.trials));
    std::vector<std::uint64_t> sums(jobs, 0);
    std::vector<unsigned __int128> sumsqs(jobs, 0);

    auto run_block = [&](unsigned w) {
        std::uint64_t local_sum = 0;
        unsigned __int128 local_sq = 0;
        for (std::uint64_t trial = w; trial < cfg.trials; trial += jobs) {
            SplitMix64 rng = rng_substream(cfg.seed, trial);
            SpanState span(c.field(), k);
            std::uint64_t draws = 0;
            while (!span.full()) {
                const std::uint64_t j = rng.uniform_below(n);
                ++draws;
                span.insert(cols[j]);
            }
            local_sum += draws;
            local_sq += static_cast<unsigned __int128>(draws) * draws;
        }
        sums[w] = local_sum;
        sumsqs[w] = local_sq;
    };

    if (jobs <= 1) {
        run_block(0);
    } else {
        std::vector<std::thread> workers;
        for (unsigned w = 0; w < jobs; ++w) workers.emplace_back(run_block, w);
        for (auto& th : workers) th.join();
    }

    std::uint64_t sum = 0;
    unsigned __int128 sumsq = 0;
    for (unsigned w = 0; w < jobs; ++w) {
        sum += sums[w];
        sumsq += sumsqs[w];
    }

    MonteCarloResult out;
    out.trials = cfg.trials;
    out.seed = cfg.seed;
    out.rng = cfg.rng;
    const long double t = static_cast<long double>(cfg.trials);
    const long double mean = static_cast<long double>(sum) / t;
    out.mean = static_cast<double>(mean);
    if (cfg.trials > 1) {
        const long double var =
            (static_cast<long double>(sumsq) - t * mean * mean) / (t - 1.0L);
        out.stderr_mean = static_cast<double>(std::sqrt(std::max(var, 0.0L) / t));
    }
    return out;
}

namespace {

bool census_in_guard(const LinearCode& c) { return c.length() <= 28; }

bool enumeration_in_guard(const LinearCode& c) {
    double size = 1;
    for (size_t i = 0; i < c.dimension(); ++i) {
        size *= c.q();
        if (size > static_cast<double>(1ULL << 24)) return false;
    }
    return true;
}

std::optional<MethodValue> family_closed_form(const LinearCode& c) {
    const CodeFamily& fam = c.family();
    switch (fam.kind) {
        case CodeFamily::kSimplex:
            return MethodValue{"closed-form", expectation_simplex(fam.q, fam.param)};
        case CodeFamily::kHamming:
            return MethodValue{"closed-form", expectation_hamming(fam.q, fam.param)};
        case CodeFamily::kGolay:
            return MethodValue{"closed-form", expectation_golay(false)};
        case CodeFamily::kGolayExtended:
            return MethodValue{"closed-form", expectation_golay(true)};
        case CodeFamily::kReedMuller1:
            return MethodValue{"closed-form", expectation_reed_muller(fam.q, fam.param)};
        case CodeFamily::kReedSolomon:
        case CodeFamily::kFullSpace:
            // MDS constructions meet the lower bound with equality.
            return MethodValue{"closed-form", mds_lower_bound(c.length(), c.dimension())};
        case CodeFamily::kGeneric: break;
    }
    return std::nullopt;
}

}  // namespace

VerificationReport verify_all_methods(const LinearCode& c, const SimulationConfig& cfg) {
    VerificationReport report;

    if (census_in_guard(c)) {
        const SupportCensus census = support_census(c);
        report.values.push_back({"exact", expectation_exact(c, census)});
        if (enumeration_in_guard(c)) {
            report.values.push_back({"refined", expectation_refined(c, census)});
            report.values.push_back({"weights", expectation_from_weights(c, census)});
        }
        report.values.push_back({"dual", expectation_via_dual(c)});
    }
    try {
        report.values.push_back({"chain", expectation_chain_oracle(c)});
    } catch (const std::runtime_error&) {
        // state guard exceeded; chain oracle not applicable
    }
    if (auto cf = family_closed_form(c)) report.values.push_back(*cf);

    if (report.values.empty())
        throw std::runtime_error("verify_all_methods: no exact method applicable to this code");

    const MethodValue& ref = report.values.front();
    for (size_t i = 1; i < report.values.size(); ++i) {
        const MethodValue& other = report.values[i];
        PairCheck chk;
        chk.lhs = ref.method;
        chk.rhs = other.method;
        chk.pass = ref.value == other.value;
        chk.detail = ref.value.to_string() + " vs " + other.value.to_string();
        report.all_pass = report.all_pass && chk.pass;
        report.checks.push_back(std::move(chk));
    }

    report.mc = simulate(c, cfg);
    const double exact = ref.value.to_double();
    const double err = std::abs(report.mc->mean - exact);
    const double band = 4.0 * report.mc->stderr_mean;
    PairCheck mc_chk;
    mc_chk.lhs = ref.method;
    mc_chk.rhs = "mc";
    mc_chk.pass = err <= band || err == 0.0;
    mc_chk.detail = "mean " + std::to_string(report.mc->mean) + " within 4 stderr of " +
                    ref.value.to_string();
    report.all_pass = report.all_pass && mc_chk.pass;
    report.checks.push_back(std::move(mc_chk));

    return report;
}

}  // namespace coverdepth
