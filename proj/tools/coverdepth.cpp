// coverdepth: coverage-depth calculator for linear codes over finite fields.
//
// Subcommands:
//   expect   compute E[C] by a chosen method
//   weights  weight distribution, MacWilliams dual, extended enumerator
//   verify   cross-method verification and structural property checks
//   table    parameter sweeps of E[C] and the MDS lower bound
//
// All randomness is seeded and reported; JSON output is byte-stable across
// identical invocations. Errors go to stderr with a nonzero exit and nothing
// written to stdout.

#include <CLI11.hpp>

#include <cstdlib>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include "coverdepth/coverage.hpp"
#include "coverdepth/numeric.hpp"
#include "coverdepth/runtime.hpp"
#include "coverdepth/serialize.hpp"

namespace cd = coverdepth;

namespace {

struct CodeSourceOptions {
    std::string family;
    std::string code_path;
    unsigned q = 0, k = 0, r = 0, s = 0, n = 0;
    bool q_set = false, k_set = false, r_set = false, s_set = false, n_set = false;
};

void add_code_source_options(CLI::App* sub, CodeSourceOptions& o) {
    sub->add_option("--family", o.family,
                    "code family: simplex|hamming|golay3|golay3x|rm1|rs|full|file");
    sub->add_option("--code", o.code_path, "path to a .code generator file");
    sub->add_option("--q", o.q, "field size (prime power)")->check(CLI::PositiveNumber);
    sub->add_option("--k", o.k, "dimension parameter")->check(CLI::PositiveNumber);
    sub->add_option("--r", o.r, "redundancy parameter (hamming)")->check(CLI::PositiveNumber);
    sub->add_option("--s", o.s, "dimension parameter (rm1)")->check(CLI::PositiveNumber);
    sub->add_option("--n", o.n, "length parameter (rs, full)")->check(CLI::PositiveNumber);
    sub->parse_complete_callback([sub, &o]() {
        o.q_set = sub->count("--q") > 0;
        o.k_set = sub->count("--k") > 0;
        o.r_set = sub->count("--r") > 0;
        o.s_set = sub->count("--s") > 0;
        o.n_set = sub->count("--n") > 0;
    });
}

unsigned require_param(const CodeSourceOptions& o, bool set, unsigned v, const char* name) {
    if (!set)
        throw std::invalid_argument("family '" + o.family + "' requires --" + name);
    return v;
}

cd::LinearCode build_code(const CodeSourceOptions& o) {
    const bool has_family = !o.family.empty() && o.family != "file";
    const bool has_file = !o.code_path.empty();
    if (has_family && has_file)
        throw std::invalid_argument("give either --family or --code, not both");
    if (!has_family && !has_file)
        throw std::invalid_argument("no code source: give --family or --code");
    if (o.family == "file" && !has_file)
        throw std::invalid_argument("--family file requires --code PATH");

    if (has_file) return cd::load_code_file(o.code_path);

    const std::string& f = o.family;
    if (f == "simplex")
        return cd::simplex_code(require_param(o, o.q_set, o.q, "q"),
                                require_param(o, o.k_set, o.k, "k"));
    if (f == "hamming")
        return cd::hamming_code(require_param(o, o.q_set, o.q, "q"),
                                require_param(o, o.r_set, o.r, "r"));
    if (f == "golay3") return cd::ternary_golay();
    if (f == "golay3x") return cd::extended_ternary_golay();
    if (f == "rm1")
        return cd::reed_muller1(require_param(o, o.q_set, o.q, "q"),
                                require_param(o, o.s_set, o.s, "s"));
    if (f == "rs")
        return cd::reed_solomon(require_param(o, o.q_set, o.q, "q"),
                                require_param(o, o.n_set, o.n, "n"),
                                require_param(o, o.k_set, o.k, "k"));
    if (f == "full")
        return cd::full_space(require_param(o, o.q_set, o.q, "q"),
                              require_param(o, o.n_set, o.n, "n"));
    throw std::invalid_argument("unknown family '" + f + "'");
}

std::string code_json(const cd::LinearCode& c) {
    return "{\"family\": \"" + cd::json_escape(c.family().label()) +
           "\", \"n\": " + std::to_string(c.length()) +
           ", \"k\": " + std::to_string(c.dimension()) + ", \"field\": " + to_json(*c.field()) +
           "}";
}

std::string code_human(const cd::LinearCode& c) {
    return c.family().label() + " [" + std::to_string(c.length()) + "," +
           std::to_string(c.dimension()) + "] over " + c.field()->describe();
}

// ---------------------------------------------------------------- expect --

struct ExpectOptions {
    CodeSourceOptions source;
    std::string method = "exact";
    std::string format = "human";
    std::uint64_t trials = 100000;
    std::uint64_t seed = 1;
};

cd::Rational closed_form_for(const cd::LinearCode& c) {
    const cd::CodeFamily& fam = c.family();
    switch (fam.kind) {
        case cd::CodeFamily::kSimplex: return cd::expectation_simplex(fam.q, fam.param);
        case cd::CodeFamily::kHamming: return cd::expectation_hamming(fam.q, fam.param);
        case cd::CodeFamily::kGolay: return cd::expectation_golay(false);
        case cd::CodeFamily::kGolayExtended: return cd::expectation_golay(true);
        case cd::CodeFamily::kReedMuller1: return cd::expectation_reed_muller(fam.q, fam.param);
        case cd::CodeFamily::kReedSolomon:
        case cd::CodeFamily::kFullSpace:
            return cd::mds_lower_bound(c.length(), c.dimension());
        case cd::CodeFamily::kGeneric: break;
    }
    throw std::invalid_argument("method 'closed-form' needs a named code family");
}

cd::ExpectationResult run_method(const cd::LinearCode& c, const ExpectOptions& o) {
    cd::ExpectationResult res;
    res.method = o.method;
    if (o.method == "exact") res.exact = cd::expectation_exact(c);
    else if (o.method == "refined") res.exact = cd::expectation_refined(c);
    else if (o.method == "dual") res.exact = cd::expectation_via_dual(c);
    else if (o.method == "weights") res.exact = cd::expectation_from_weights(c);
    else if (o.method == "chain") res.exact = cd::expectation_chain_oracle(c);
    else if (o.method == "closed-form") res.exact = closed_form_for(c);
    else if (o.method == "mc") res.mc = cd::simulate(c, {o.trials, o.seed});
    else throw std::invalid_argument("unknown method '" + o.method + "'");
    return res;
}

int cmd_expect(const ExpectOptions& o) {
    const cd::LinearCode code = build_code(o.source);
    const cd::ExpectationResult res = run_method(code, o);

    std::ostringstream out;
    if (o.format == "json") {
        out << to_json(res) << "\n";
    } else if (o.format == "csv") {
        out << "method,num,den,approx,mc_mean,mc_stderr,mc_trials,mc_seed\n";
        out << cd::csv_quote(res.method) << ",";
        if (res.exact)
            out << res.exact->num().get_str() << "," << res.exact->den().get_str() << ","
                << cd::format_double(res.exact->to_double()) << ",,,,";
        else
            out << ",,," << cd::format_double(res.mc->mean) << ","
                << cd::format_double(res.mc->stderr_mean) << "," << res.mc->trials << ","
                << res.mc->seed;
        out << "\n";
    } else {
        out << "code: " << code_human(code) << "\n";
        out << "method: " << res.method << "\n";
        if (res.exact)
            out << "E[C] = " << res.exact->to_string() << " ~ "
                << cd::format_double(res.exact->to_double()) << "\n";
        else
            out << "mean = " << cd::format_double(res.mc->mean)
                << "  stderr = " << cd::format_double(res.mc->stderr_mean)
                << "  trials = " << res.mc->trials << "  seed = " << res.mc->seed
                << "  rng = " << res.mc->rng << "\n";
    }
    std::cout << out.str();
    return 0;
}

// --------------------------------------------------------------- weights --

struct WeightsOptions {
    CodeSourceOptions source;
    std::string format = "human";
    bool extended = false;
    std::vector<unsigned> m_values;
};

int cmd_weights(const WeightsOptions& o) {
    const cd::LinearCode code = build_code(o.source);
    const cd::WeightDistribution w = cd::weight_distribution(code);
    const cd::WeightDistribution dual_w =
        cd::macwilliams_dual(w, code.q(), static_cast<unsigned>(code.dimension()));

    std::optional<cd::ExtendedEnumerator> ext;
    std::vector<cd::WeightDistribution> ext_w;
    if (o.extended || !o.m_values.empty()) ext = cd::extended_enumerator(code);
    for (unsigned m : o.m_values)
        ext_w.push_back(cd::extension_weight_distribution(*ext, code.q(), m));

    std::ostringstream out;
    if (o.format == "json") {
        out << "{\"code\": " << code_json(code) << ", \"weights\": " << to_json(w)
            << ", \"dual_weights\": " << to_json(dual_w);
        out << ", \"extended\": " << (o.extended ? to_json(*ext) : "null");
        out << ", \"extensions\": [";
        for (size_t i = 0; i < ext_w.size(); ++i) {
            if (i) out << ", ";
            out << "{\"m\": " << o.m_values[i] << ", \"weights\": " << to_json(ext_w[i]) << "}";
        }
        out << "]}\n";
    } else if (o.format == "csv") {
        out << "weight,count,dual_count";
        for (unsigned m : o.m_values) out << ",ext_m" << m;
        out << "\n";
        for (size_t i = 0; i <= code.length(); ++i) {
            out << i << "," << w.counts[i].get_str() << "," << dual_w.counts[i].get_str();
            for (const auto& ew : ext_w) out << "," << ew.counts[i].get_str();
            out << "\n";
        }
    } else {
        out << "code: " << code_human(code) << "\n";
        out << "weights:";
        for (size_t i = 0; i <= code.length(); ++i)
            if (w.counts[i] != 0) out << " W_" << i << "=" << w.counts[i].get_str();
        out << "\ndual weights:";
        for (size_t i = 0; i <= code.length(); ++i)
            if (dual_w.counts[i] != 0) out << " W_" << i << "=" << dual_w.counts[i].get_str();
        out << "\n";
        if (o.extended) {
            out << "extended enumerator B_t(U) coefficients (U^0..U^k):\n";
            for (size_t t = 0; t < ext->b.size(); ++t) {
                out << "  B_" << t << ":";
                for (const auto& coef : ext->b[t]) out << " " << coef.get_str();
                out << "\n";
            }
        }
        for (size_t i = 0; i < ext_w.size(); ++i) {
            out << "extension m=" << o.m_values[i] << ":";
            for (size_t j = 0; j <= code.length(); ++j)
                if (ext_w[i].counts[j] != 0) out << " W_" << j << "=" << ext_w[i].counts[j].get_str();
            out << "\n";
        }
    }
    std::cout << out.str();
    return 0;
}

// ---------------------------------------------------------------- verify --

struct VerifyOptions {
    CodeSourceOptions source;
    std::string format = "human";
    std::uint64_t trials = 100000;
    std::uint64_t seed = 1;
};

struct NamedCheck {
    std::string name;
    bool pass;
    std::string detail;
};

// Structural property checks relevant to a single code, all census-backed.
std::vector<NamedCheck> structural_checks(const cd::LinearCode& c) {
    std::vector<NamedCheck> checks;
    const size_t n = c.length(), k = c.dimension();

    const cd::SupportCensus census = cd::support_census(c);
    {
        bool ok = true;
        for (size_t r = 0; r <= n && ok; ++r) {
            cd::BigInt sum = 0;
            for (size_t j = 0; j <= k; ++j) sum += census.at(r, j);
            ok = sum == cd::binomial(n, static_cast<long>(r));
        }
        checks.push_back({"census-row-sums", ok, "sum_j table[r][j] = C(n,r) for all r"});
    }
    {
        const cd::LinearCode dual = c.dual();
        const cd::SupportCensus dual_census = cd::support_census(dual);
        bool ok = true;
        for (size_t s = 0; s <= n && ok; ++s)
            for (long ell = 0; ell <= static_cast<long>(k) && ok; ++ell)
                ok = census.beta(ell, s) ==
                     dual_census.beta(ell + static_cast<long>(s) - static_cast<long>(k), n - s);
        checks.push_back({"beta-duality", ok, "beta_l(C,s) = beta_{l+s-k}(C*,n-s) for all l,s"});
    }
    {
        const cd::ExtendedEnumerator e = cd::extended_enumerator(census);
        bool ok = true;
        for (size_t t = 0; t <= n && ok; ++t) ok = e.evaluate_b(t, 1) == 0;
        // B_0(U) = U^k - 1 (J = empty set, C(J^c) is the whole code)
        for (size_t j = 0; j <= k && ok; ++j) {
            const cd::BigInt want = (j == 0) ? cd::BigInt(-1) : (j == k ? cd::BigInt(1) : cd::BigInt(0));
            ok = e.b[0][j] == want;
        }
        checks.push_back({"extended-enumerator-basics", ok, "B_t(1) = 0 and B_0(U) = U^k - 1"});
    }
    const bool enum_ok = [&] {
        double size = 1;
        for (size_t i = 0; i < k; ++i) {
            size *= c.q();
            if (size > static_cast<double>(1ULL << 24)) return false;
        }
        return true;
    }();
    if (enum_ok && k >= 1) {
        const cd::WeightDistribution w = cd::weight_distribution(c);
        const cd::WeightDistribution via_transform =
            cd::macwilliams_dual(w, c.q(), static_cast<unsigned>(k));
        const cd::WeightDistribution direct = cd::weight_distribution(c.dual());
        checks.push_back({"macwilliams-vs-dual-enumeration", via_transform == direct,
                          "transform of W(C) equals enumerated W(dual)"});

        const cd::ExtendedEnumerator e = cd::extended_enumerator(census);
        checks.push_back({"extension-m1-matches-plain",
                          cd::extension_weight_distribution(e, c.q(), 1) == w,
                          "extended enumerator at U = q reproduces W(C)"});

        const size_t d = c.minimum_distance();
        checks.push_back({"singleton-bound", d <= n - k + 1, "d <= n - k + 1"});

        const cd::Rational exact = cd::expectation_exact(c, census);
        const cd::Rational bound = cd::mds_lower_bound(n, k);
        const bool is_mds = d == n - k + 1;
        const bool ok = is_mds ? exact == bound : exact > bound;
        checks.push_back({"mds-lower-bound", ok,
                          "E[C] >= n(H_n - H_{n-k}), equality iff MDS"});
    }
    return checks;
}

int cmd_verify(const VerifyOptions& o) {
    const cd::LinearCode code = build_code(o.source);
    const cd::VerificationReport rep = cd::verify_all_methods(code, {o.trials, o.seed});
    std::vector<NamedCheck> checks;
    for (const auto& chk : rep.checks)
        checks.push_back({chk.lhs + "-vs-" + chk.rhs, chk.pass, chk.detail});
    for (auto& chk : structural_checks(code)) checks.push_back(std::move(chk));

    bool all_pass = true;
    for (const auto& chk : checks) all_pass = all_pass && chk.pass;

    std::ostringstream out;
    if (o.format == "json") {
        out << "{\"code\": " << code_json(code) << ", \"methods\": [";
        for (size_t i = 0; i < rep.values.size(); ++i) {
            if (i) out << ", ";
            out << "{\"method\": \"" << cd::json_escape(rep.values[i].method)
                << "\", \"value\": " << to_json(rep.values[i].value) << "}";
        }
        out << "], \"mc\": " << (rep.mc ? to_json(*rep.mc) : "null") << ", \"checks\": [";
        for (size_t i = 0; i < checks.size(); ++i) {
            if (i) out << ", ";
            out << "{\"name\": \"" << cd::json_escape(checks[i].name)
                << "\", \"pass\": " << (checks[i].pass ? "true" : "false") << ", \"detail\": \""
                << cd::json_escape(checks[i].detail) << "\"}";
        }
        out << "], \"pass\": " << (all_pass ? "true" : "false") << "}\n";
    } else if (o.format == "csv") {
        out << "check,pass,detail\n";
        for (const auto& chk : checks)
            out << cd::csv_quote(chk.name) << "," << (chk.pass ? "true" : "false") << ","
                << cd::csv_quote(chk.detail) << "\n";
    } else {
        out << "code: " << code_human(code) << "\n";
        for (const auto& v : rep.values)
            out << "  " << v.method << " = " << v.value.to_string() << " ~ "
                << cd::format_double(v.value.to_double()) << "\n";
        if (rep.mc)
            out << "  mc = " << cd::format_double(rep.mc->mean) << " +- "
                << cd::format_double(rep.mc->stderr_mean) << " (trials " << rep.mc->trials
                << ", seed " << rep.mc->seed << ")\n";
        for (const auto& chk : checks)
            out << (chk.pass ? "  PASS " : "  FAIL ") << chk.name << ": " << chk.detail << "\n";
        out << (all_pass ? "all checks passed\n" : "SOME CHECKS FAILED\n");
    }
    std::cout << out.str();
    return all_pass ? 0 : 1;
}

// ----------------------------------------------------------------- table --

struct TableOptions {
    std::string sweep;
    std::string format = "csv";
};

struct SweepSpec {
    std::string family;
    // parameter name -> list of values, in the order given
    std::vector<std::pair<std::string, std::vector<unsigned>>> params;
};

std::vector<unsigned> parse_values(const std::string& spec, const std::string& name) {
    std::vector<unsigned> vals;
    try {
        if (const size_t dots = spec.find(".."); dots != std::string::npos) {
            const unsigned long lo = std::stoul(spec.substr(0, dots));
            const unsigned long hi = std::stoul(spec.substr(dots + 2));
            for (unsigned long v = lo; v <= hi; ++v) vals.push_back(static_cast<unsigned>(v));
            return vals;  // empty when lo > hi
        }
        std::stringstream ss(spec);
        std::string tok;
        while (std::getline(ss, tok, '|')) vals.push_back(static_cast<unsigned>(std::stoul(tok)));
    } catch (const std::exception&) {
        throw std::invalid_argument("sweep: cannot parse values for '" + name + "': " + spec);
    }
    if (vals.empty()) throw std::invalid_argument("sweep: no values for '" + name + "'");
    return vals;
}

SweepSpec parse_sweep(const std::string& spec) {
    SweepSpec sw;
    std::stringstream ss(spec);
    std::string tok;
    if (!std::getline(ss, tok, ',') || tok.empty())
        throw std::invalid_argument("sweep: expected 'family,param=values,...'");
    sw.family = tok;
    if (sw.family == "file")
        throw std::invalid_argument("sweep: family 'file' cannot be swept");
    while (std::getline(ss, tok, ',')) {
        const size_t eq = tok.find('=');
        if (eq == std::string::npos)
            throw std::invalid_argument("sweep: expected 'param=values', got '" + tok + "'");
        const std::string name = tok.substr(0, eq);
        if (name != "q" && name != "k" && name != "r" && name != "s" && name != "n")
            throw std::invalid_argument("sweep: unknown parameter '" + name + "'");
        std::string vals = tok.substr(eq + 1);
        const bool open_range = vals.find("..") != std::string::npos && vals.back() == '.';
        if (open_range) throw std::invalid_argument("sweep: malformed range '" + vals + "'");
        sw.params.emplace_back(name, parse_values(vals, name));
    }
    return sw;
}

struct TableRow {
    std::vector<std::pair<std::string, unsigned>> params;
    std::string n, k;
    std::string exact, exact_approx;
    std::string closed, closed_approx;
    std::string mds, mds_approx;
    std::string agree;
    std::string error;
};

TableRow sweep_cell(const SweepSpec& sw, const std::vector<unsigned>& choice) {
    TableRow row;
    CodeSourceOptions src;
    src.family = sw.family;
    for (size_t i = 0; i < sw.params.size(); ++i) {
        const std::string& name = sw.params[i].first;
        const unsigned v = choice[i];
        row.params.emplace_back(name, v);
        if (name == "q") { src.q = v; src.q_set = true; }
        else if (name == "k") { src.k = v; src.k_set = true; }
        else if (name == "r") { src.r = v; src.r_set = true; }
        else if (name == "s") { src.s = v; src.s_set = true; }
        else if (name == "n") { src.n = v; src.n_set = true; }
    }

    auto note_error = [&row](const std::string& what) {
        if (!row.error.empty()) row.error += "; ";
        row.error += what;
    };

    std::optional<cd::LinearCode> code;
    try {
        code = build_code(src);
        row.n = std::to_string(code->length());
        row.k = std::to_string(code->dimension());
    } catch (const std::exception& e) {
        note_error(e.what());
    }

    std::optional<cd::Rational> closed;
    if (code) {
        try {
            closed = closed_form_for(*code);
            row.closed = closed->to_string();
            row.closed_approx = cd::format_double(closed->to_double());
        } catch (const std::exception& e) {
            note_error(e.what());
        }
    }

    std::optional<cd::Rational> exact;
    if (code) {
        try {
            exact = cd::expectation_exact(*code);
            row.exact = exact->to_string();
            row.exact_approx = cd::format_double(exact->to_double());
        } catch (const std::exception& e) {
            note_error(e.what());
        }
        try {
            const cd::Rational mds = cd::mds_lower_bound(code->length(), code->dimension());
            row.mds = mds.to_string();
            row.mds_approx = cd::format_double(mds.to_double());
        } catch (const std::exception& e) {
            note_error(e.what());
        }
    }
    if (exact && closed) row.agree = (*exact == *closed) ? "true" : "false";
    return row;
}

int cmd_table(const TableOptions& o) {
    const SweepSpec sw = parse_sweep(o.sweep);

    // cross product, last parameter varies fastest
    std::vector<std::vector<unsigned>> grid;
    std::vector<unsigned> choice(sw.params.size(), 0);
    const auto total = [&] {
        size_t t = 1;
        for (const auto& p : sw.params) t *= p.second.size();
        return t;
    }();
    for (size_t idx = 0; idx < total; ++idx) {
        size_t rem = idx;
        for (size_t i = sw.params.size(); i-- > 0;) {
            choice[i] = sw.params[i].second[rem % sw.params[i].second.size()];
            rem /= sw.params[i].second.size();
        }
        grid.push_back(choice);
    }

    std::vector<TableRow> rows;
    rows.reserve(grid.size());
    for (const auto& ch : grid) rows.push_back(sweep_cell(sw, ch));

    std::ostringstream out;
    const std::vector<std::string> value_cols = {
        "length", "dimension",  "exact", "exact_approx", "closed_form", "closed_approx",
        "mds",    "mds_approx", "agree", "error"};
    if (o.format == "json") {
        out << "{\"family\": \"" << cd::json_escape(sw.family) << "\", \"rows\": [";
        for (size_t i = 0; i < rows.size(); ++i) {
            const TableRow& r = rows[i];
            if (i) out << ", ";
            out << "{";
            for (const auto& [name, v] : r.params) out << "\"" << name << "\": " << v << ", ";
            out << "\"length\": \"" << r.n << "\", \"dimension\": \"" << r.k
                << "\", \"exact\": \"" << r.exact
                << "\", \"exact_approx\": \"" << r.exact_approx << "\", \"closed_form\": \""
                << r.closed << "\", \"closed_approx\": \"" << r.closed_approx << "\", \"mds\": \""
                << r.mds << "\", \"mds_approx\": \"" << r.mds_approx << "\", \"agree\": \""
                << r.agree << "\", \"error\": \"" << cd::json_escape(r.error) << "\"}";
        }
        out << "]}\n";
    } else {  // csv (default for table) or human: same tabular payload
        out << "family";
        for (const auto& p : sw.params) out << "," << p.first;
        for (const auto& c : value_cols) out << "," << c;
        out << "\n";
        for (const TableRow& r : rows) {
            out << cd::csv_quote(sw.family);
            for (const auto& [name, v] : r.params) out << "," << v;
            out << "," << r.n << "," << r.k << "," << cd::csv_quote(r.exact) << ","
                << r.exact_approx << "," << cd::csv_quote(r.closed) << "," << r.closed_approx
                << "," << cd::csv_quote(r.mds) << "," << r.mds_approx << "," << r.agree << ","
                << cd::csv_quote(r.error) << "\n";
        }
    }
    std::cout << out.str();
    return 0;
}

int parse_thread_env() {
    const char* env = std::getenv("COVERDEPTH_THREADS");
    if (env == nullptr || *env == '\0') return 0;
    char* end = nullptr;
    const long v = std::strtol(env, &end, 10);
    if (end == env || *end != '\0' || v < 1)
        throw std::invalid_argument("COVERDEPTH_THREADS must be a positive integer");
    cd::set_thread_cap(static_cast<unsigned>(v));
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"coverage depth of linear codes over finite fields"};
    app.require_subcommand(1);

    ExpectOptions expect_opts;
    CLI::App* expect = app.add_subcommand("expect", "compute E[C] by a chosen method");
    add_code_source_options(expect, expect_opts.source);
    expect->add_option("--method", expect_opts.method,
                       "exact|refined|dual|weights|closed-form|chain|mc");
    expect->add_option("--format", expect_opts.format, "json|csv|human")
        ->check(CLI::IsMember({"json", "csv", "human"}));
    expect->add_option("--trials", expect_opts.trials, "Monte Carlo trials");
    expect->add_option("--seed", expect_opts.seed, "Monte Carlo seed");

    WeightsOptions weights_opts;
    CLI::App* weights = app.add_subcommand("weights", "weight distributions and enumerators");
    add_code_source_options(weights, weights_opts.source);
    weights->add_option("--format", weights_opts.format, "json|csv|human")
        ->check(CLI::IsMember({"json", "csv", "human"}));
    weights->add_flag("--extended", weights_opts.extended, "print extended enumerator");
    weights->add_option("--m", weights_opts.m_values, "extension degrees to evaluate");

    VerifyOptions verify_opts;
    CLI::App* verify = app.add_subcommand("verify", "cross-method and structural checks");
    add_code_source_options(verify, verify_opts.source);
    verify->add_option("--format", verify_opts.format, "json|csv|human")
        ->check(CLI::IsMember({"json", "csv", "human"}));
    verify->add_option("--trials", verify_opts.trials, "Monte Carlo trials");
    verify->add_option("--seed", verify_opts.seed, "Monte Carlo seed");

    TableOptions table_opts;
    CLI::App* table = app.add_subcommand("table", "parameter sweep of E[C] and the MDS bound");
    table->add_option("--sweep", table_opts.sweep,
                      "spec: family,param=lo..hi or a|b|c (e.g. simplex,q=2,k=2..5)")
        ->required();
    table->add_option("--format", table_opts.format, "json|csv")
        ->check(CLI::IsMember({"json", "csv"}));

    CLI11_PARSE(app, argc, argv);

    try {
        parse_thread_env();
        if (expect->parsed()) return cmd_expect(expect_opts);
        if (weights->parsed()) return cmd_weights(weights_opts);
        if (verify->parsed()) return cmd_verify(verify_opts);
        if (table->parsed()) return cmd_table(table_opts);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 2;
}
