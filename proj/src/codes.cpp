#include "coverdepth/codes.hpp"

#include <algorithm>
#include <fstream>
#include <istream>
#include <mutex>
#include <ostream>
#include <sstream>
#include <stdexcept>

namespace coverdepth {

namespace {

constexpr std::uint64_t kEnumerationGuard = 1ULL << 24;  // max q^k for codeword streams
constexpr size_t kMaxLength = 64;                        // column bitmask width

std::uint64_t checked_pow(std::uint64_t base, unsigned exp, std::uint64_t limit) {
    std::uint64_t v = 1;
    for (unsigned i = 0; i < exp; ++i) {
        v *= base;
        if (v > limit) return limit + 1;
    }
    return v;
}

}  // namespace

std::string CodeFamily::label() const {
    switch (kind) {
        case kSimplex: return "simplex(q=" + std::to_string(q) + ",k=" + std::to_string(param) + ")";
        case kHamming: return "hamming(q=" + std::to_string(q) + ",r=" + std::to_string(param) + ")";
        case kGolay: return "golay3";
        case kGolayExtended: return "golay3x";
        case kReedMuller1: return "rm1(q=" + std::to_string(q) + ",s=" + std::to_string(param) + ")";
        case kReedSolomon: return "rs(q=" + std::to_string(q) + ",k=" + std::to_string(param) + ")";
        case kFullSpace: return "full(q=" + std::to_string(q) + ")";
        case kGeneric: break;
    }
    return "generic";
}

struct LinearCode::Impl {
    MatrixGF generator;
    size_t n, k;
    CodeFamily family;

    mutable std::mutex mu;
    mutable std::optional<MatrixGF> rref_cache;
    mutable std::optional<MatrixGF> dual_cache;
    mutable std::optional<size_t> min_distance_cache;

    explicit Impl(MatrixGF g) : generator(std::move(g)), n(generator.cols()), k(generator.rows()) {}
};

LinearCode LinearCode::from_generator(const MatrixGF& g) {
    if (g.cols() == 0) throw std::invalid_argument("from_generator: zero-length code");
    if (g.cols() > kMaxLength)
        throw std::invalid_argument("from_generator: length " + std::to_string(g.cols()) +
                                    " exceeds the bitmask limit of 64");
    if (g.rows() > g.cols()) throw std::invalid_argument("from_generator: more rows than columns");
    const size_t r = rref(g).rank;
    if (r != g.rows())
        throw std::invalid_argument("from_generator: generator is rank-deficient (rank " +
                                    std::to_string(r) + " of " + std::to_string(g.rows()) +
                                    " rows)");
    return LinearCode(std::make_shared<Impl>(g));
}

LinearCode tag_family(LinearCode code, CodeFamily family) {
    code.impl_->family = family;
    return code;
}

const FieldPtr& LinearCode::field() const { return impl_->generator.field(); }
size_t LinearCode::length() const { return impl_->n; }
size_t LinearCode::dimension() const { return impl_->k; }
const MatrixGF& LinearCode::generator() const { return impl_->generator; }
const CodeFamily& LinearCode::family() const { return impl_->family; }

const MatrixGF& LinearCode::canonical_rref() const {
    std::lock_guard<std::mutex> lock(impl_->mu);
    if (!impl_->rref_cache) impl_->rref_cache = rref(impl_->generator).matrix;
    return *impl_->rref_cache;
}

LinearCode LinearCode::dual() const {
    {
        std::lock_guard<std::mutex> lock(impl_->mu);
        if (!impl_->dual_cache) impl_->dual_cache = null_space(impl_->generator);
    }
    return LinearCode(std::make_shared<Impl>(*impl_->dual_cache));
}

void LinearCode::for_each_codeword(
    const std::function<void(std::span<const std::uint32_t>)>& fn) const {
    const FiniteField& F = *field();
    const size_t n = impl_->n, k = impl_->k;
    if (checked_pow(F.q(), static_cast<unsigned>(k), kEnumerationGuard) > kEnumerationGuard)
        throw std::runtime_error(
            "codeword enumeration guard exceeded (q^k > 2^24); use the transform-based methods");
    // depth-first over message digits, one generator-row update per level
    std::vector<std::vector<std::uint32_t>> partial(k + 1, std::vector<std::uint32_t>(n, 0));
    std::vector<std::uint32_t> digit(k, 0);
    size_t level = 0;
    for (;;) {
        if (level == k) {
            fn(partial[k]);
            // backtrack to the deepest level with an unfinished digit
            while (level > 0 && digit[level - 1] == F.q() - 1) --level;
            if (level == 0) break;
            ++digit[level - 1];
            const size_t i = level - 1;
            const std::uint32_t c = digit[i];
            auto row = impl_->generator.row(i);
            for (size_t j = 0; j < n; ++j)
                partial[i + 1][j] = F.add(partial[i][j], F.mul(c, row[j]));
            continue;
        }
        digit[level] = 0;
        partial[level + 1] = partial[level];
        ++level;
    }
}

std::vector<std::vector<std::uint32_t>> LinearCode::codewords() const {
    std::vector<std::vector<std::uint32_t>> out;
    for_each_codeword([&](std::span<const std::uint32_t> w) {
        out.emplace_back(w.begin(), w.end());
    });
    return out;
}

size_t LinearCode::minimum_distance() const {
    if (impl_->k == 0) throw std::invalid_argument("minimum_distance: zero code");
    {
        std::lock_guard<std::mutex> lock(impl_->mu);
        if (impl_->min_distance_cache) return *impl_->min_distance_cache;
    }
    size_t best = impl_->n + 1;
    for_each_codeword([&](std::span<const std::uint32_t> w) {
        size_t wt = 0;
        for (std::uint32_t v : w) wt += v != 0;
        if (wt != 0 && wt < best) best = wt;
    });
    std::lock_guard<std::mutex> lock(impl_->mu);
    impl_->min_distance_cache = best;
    return best;
}

bool LinearCode::same_code(const LinearCode& other) const {
    return same_row_space(impl_->generator, other.impl_->generator);
}

// ---- constructors ----

LinearCode simplex_code(unsigned q, unsigned k) {
    if (k < 2) throw std::invalid_argument("simplex_code: k must be >= 2");
    const FieldPtr F = FiniteField::from_order(q);
    const std::uint64_t total = checked_pow(q, k, 1ULL << 62);
    std::vector<std::vector<std::uint32_t>> cols;
    for (std::uint64_t codeval = 1; codeval < total; ++codeval) {
        std::vector<std::uint32_t> v(k);
        std::uint64_t t = codeval;
        for (unsigned i = 0; i < k; ++i) {
            v[i] = static_cast<std::uint32_t>(t % q);
            t /= q;
        }
        std::uint32_t first = 0;
        for (unsigned i = 0; i < k; ++i)
            if (v[i] != 0) {
                first = v[i];
                break;
            }
        if (first == 1) cols.push_back(std::move(v));
    }
    // integer encodings are increasing with codeval, so cols is already sorted
    const size_t n = cols.size();
    if (n > kMaxLength)
        throw std::invalid_argument("simplex_code: length " + std::to_string(n) +
                                    " exceeds the bitmask limit of 64");
    MatrixGF g(F, k, n);
    for (size_t j = 0; j < n; ++j)
        for (unsigned i = 0; i < k; ++i) g.set(i, j, cols[j][i]);
    return tag_family(LinearCode::from_generator(g), {CodeFamily::kSimplex, q, k});
}

LinearCode hamming_code(unsigned q, unsigned r) {
    const LinearCode simplex = simplex_code(q, r);
    return tag_family(simplex.dual(), {CodeFamily::kHamming, q, r});
}

namespace {

// Bordered circulant block of the standard-form generator [I | B].
constexpr unsigned kGolayB[6][6] = {
    {0, 1, 1, 1, 1, 1},
    {1, 0, 1, 2, 2, 1},
    {1, 1, 0, 1, 2, 2},
    {1, 2, 1, 0, 1, 2},
    {1, 2, 2, 1, 0, 1},
    {1, 1, 2, 2, 1, 0},
};

std::vector<BigInt> weight_counts(const LinearCode& c) {
    std::vector<BigInt> w(c.length() + 1, 0);
    c.for_each_codeword([&](std::span<const std::uint32_t> word) {
        size_t wt = 0;
        for (std::uint32_t v : word) wt += v != 0;
        w[wt] += 1;
    });
    return w;
}

void verify_distribution(const LinearCode& c, const std::vector<std::pair<size_t, long>>& expected,
                         const char* name) {
    const auto w = weight_counts(c);
    std::vector<BigInt> want(c.length() + 1, 0);
    for (auto [i, cnt] : expected) want[i] = cnt;
    if (w != want)
        throw std::logic_error(std::string(name) + ": generator failed weight-distribution check");
}

}  // namespace

LinearCode extended_ternary_golay() {
    const FieldPtr F = FiniteField::make(3, 1);
    MatrixGF g(F, 6, 12);
    for (unsigned i = 0; i < 6; ++i) {
        g.set(i, i, 1);
        for (unsigned j = 0; j < 6; ++j) g.set(i, 6 + j, kGolayB[i][j]);
    }
    LinearCode c = tag_family(LinearCode::from_generator(g), {CodeFamily::kGolayExtended, 3, 6});
    verify_distribution(c, {{0, 1}, {6, 264}, {9, 440}, {12, 24}}, "extended_ternary_golay");
    if (c.minimum_distance() != 6)
        throw std::logic_error("extended_ternary_golay: wrong minimum distance");
    return c;
}

LinearCode ternary_golay() {
    const FieldPtr F = FiniteField::make(3, 1);
    MatrixGF g(F, 6, 11);
    for (unsigned i = 0; i < 6; ++i) {
        g.set(i, i, 1);
        for (unsigned j = 0; j < 5; ++j) g.set(i, 6 + j, kGolayB[i][j]);
    }
    LinearCode c = tag_family(LinearCode::from_generator(g), {CodeFamily::kGolay, 3, 6});
    verify_distribution(c, {{0, 1}, {5, 132}, {6, 132}, {8, 330}, {9, 110}, {11, 24}},
                        "ternary_golay");
    if (c.minimum_distance() != 5) throw std::logic_error("ternary_golay: wrong minimum distance");
    return c;
}

LinearCode reed_muller1(unsigned q, unsigned s) {
    if (s < 2) throw std::invalid_argument("reed_muller1: s must be >= 2");
    const FieldPtr F = FiniteField::from_order(q);
    const std::uint64_t n = checked_pow(q, s - 1, 1ULL << 62);
    if (n > kMaxLength)
        throw std::invalid_argument("reed_muller1: length q^(s-1) = " + std::to_string(n) +
                                    " exceeds the bitmask limit of 64");
    MatrixGF g(F, s, static_cast<size_t>(n));
    for (std::uint64_t pt = 0; pt < n; ++pt) {
        g.set(0, static_cast<size_t>(pt), 1);  // constant functions
        std::uint64_t t = pt;
        for (unsigned i = 0; i + 1 < s; ++i) {
            g.set(i + 1, static_cast<size_t>(pt), static_cast<std::uint32_t>(t % q));
            t /= q;
        }
    }
    LinearCode c = tag_family(LinearCode::from_generator(g), {CodeFamily::kReedMuller1, q, s});
    const size_t want_d = static_cast<size_t>(q - 1) * static_cast<size_t>(checked_pow(q, s - 2, 1ULL << 62));
    if (c.minimum_distance() != want_d)
        throw std::logic_error("reed_muller1: wrong minimum distance");
    return c;
}

LinearCode reed_solomon(unsigned q, unsigned n, unsigned k) {
    if (n > q) throw std::invalid_argument("reed_solomon: requires n <= q");
    if (k < 1 || k > n) throw std::invalid_argument("reed_solomon: requires 1 <= k <= n");
    const FieldPtr F = FiniteField::from_order(q);
    MatrixGF g(F, k, n);
    for (unsigned j = 0; j < n; ++j) {
        const std::uint32_t x = j;  // evaluation points: the n smallest codes
        std::uint32_t pw = 1;
        for (unsigned i = 0; i < k; ++i) {
            g.set(i, j, pw);
            pw = F->mul(pw, x);
        }
    }
    LinearCode c = tag_family(LinearCode::from_generator(g), {CodeFamily::kReedSolomon, q, k});
    if (n <= 12) {
        // MDS certificate: every k columns independent
        std::vector<size_t> idx(k);
        std::vector<bool> sel(n, false);
        std::fill(sel.begin(), sel.begin() + k, true);
        do {
            size_t t = 0;
            for (size_t j = 0; j < n; ++j)
                if (sel[j]) idx[t++] = j;
            if (rank_of_columns(g, std::span<const size_t>(idx)) != k)
                throw std::logic_error("reed_solomon: MDS certificate failed");
        } while (std::prev_permutation(sel.begin(), sel.end()));
    }
    return c;
}

LinearCode full_space(unsigned q, unsigned n) {
    if (n < 1) throw std::invalid_argument("full_space: n must be >= 1");
    const FieldPtr F = FiniteField::from_order(q);
    MatrixGF g(F, n, n);
    for (unsigned i = 0; i < n; ++i) g.set(i, i, 1);
    return tag_family(LinearCode::from_generator(g), {CodeFamily::kFullSpace, q, n});
}

// ---- .code file format ----

namespace {

[[noreturn]] void parse_fail(const std::string& source, size_t line, const std::string& what) {
    throw std::runtime_error(source + ":" + std::to_string(line) + ": " + what);
}

}  // namespace

LinearCode parse_code_stream(std::istream& in, const std::string& source_name) {
    std::string line;
    size_t lineno = 0;
    unsigned q = 0, k = 0, n = 0;
    bool have_header = false;
    size_t header_line = 0;
    std::vector<std::vector<unsigned>> rows;

    while (std::getline(in, line)) {
        ++lineno;
        if (!line.empty() && line.back() == '\r') line.pop_back();
        std::string trimmed = line;
        const size_t pos = trimmed.find_first_not_of(" \t");
        if (pos == std::string::npos) continue;  // blank
        if (trimmed[pos] == '#') continue;       // comment

        std::istringstream ss(line);
        if (!have_header) {
            long lq = 0, lk = 0, ln = 0;
            if (!(ss >> lq >> lk >> ln)) parse_fail(source_name, lineno, "expected header 'q k n'");
            std::string extra;
            if (ss >> extra) parse_fail(source_name, lineno, "trailing tokens after header");
            if (lq < 2) parse_fail(source_name, lineno, "q must be >= 2");
            if (lk < 1) parse_fail(source_name, lineno, "k must be >= 1");
            if (ln < 1 || ln > static_cast<long>(kMaxLength))
                parse_fail(source_name, lineno, "n must be in [1, 64]");
            if (lk > ln) parse_fail(source_name, lineno, "k must not exceed n");
            q = static_cast<unsigned>(lq);
            k = static_cast<unsigned>(lk);
            n = static_cast<unsigned>(ln);
            have_header = true;
            header_line = lineno;
            continue;
        }
        if (rows.size() == k) parse_fail(source_name, lineno, "more generator rows than k");
        std::vector<unsigned> row;
        long v;
        while (ss >> v) {
            if (v < 0 || static_cast<unsigned long>(v) >= q)
                parse_fail(source_name, lineno,
                           "symbol " + std::to_string(v) + " outside [0, " + std::to_string(q) + ")");
            row.push_back(static_cast<unsigned>(v));
        }
        if (!ss.eof()) parse_fail(source_name, lineno, "non-numeric token in generator row");
        if (row.size() != n)
            parse_fail(source_name, lineno,
                       "expected " + std::to_string(n) + " symbols, found " +
                           std::to_string(row.size()));
        rows.push_back(std::move(row));
    }
    if (!have_header) parse_fail(source_name, lineno == 0 ? 1 : lineno, "missing header 'q k n'");
    if (rows.size() != k)
        parse_fail(source_name, header_line,
                   "expected " + std::to_string(k) + " generator rows, found " +
                       std::to_string(rows.size()));

    const FieldPtr F = FiniteField::from_order(q);  // rejects non prime powers
    return LinearCode::from_generator(MatrixGF::from_rows(F, rows));
}

LinearCode load_code_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error(path + ": cannot open");
    return parse_code_stream(in, path);
}

void write_code_file(const LinearCode& code, std::ostream& out) {
    out << code.q() << " " << code.dimension() << " " << code.length() << "\n";
    for (size_t i = 0; i < code.dimension(); ++i) {
        for (size_t j = 0; j < code.length(); ++j) {
            if (j) out << " ";
            out << code.generator().at(i, j);
        }
        out << "\n";
    }
}

}  // namespace coverdepth
