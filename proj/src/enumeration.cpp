#include "coverdepth/enumeration.hpp"

#include <algorithm>
#include <stdexcept>
#include <thread>

#include "coverdepth/numeric.hpp"
#include "coverdepth/runtime.hpp"

namespace coverdepth {

namespace {

constexpr size_t kCensusMaxLength = 28;  // 2^n subset iteration guard

}  // namespace

WeightDistribution weight_distribution(const LinearCode& c) {
    std::vector<std::uint64_t> counts(c.length() + 1, 0);
    c.for_each_codeword([&](std::span<const std::uint32_t> w) {
        size_t wt = 0;
        for (std::uint32_t v : w) wt += v != 0;
        ++counts[wt];
    });
    WeightDistribution out;
    out.n = c.length();
    out.counts.assign(counts.begin(), counts.end());
    return out;
}

WeightDistribution macwilliams_dual(const WeightDistribution& w, unsigned q, unsigned k) {
    const size_t n = w.n;
    if (w.counts.size() != n + 1)
        throw std::invalid_argument("macwilliams_dual: malformed distribution");
    // W'(X,Y) = q^-k W(X+(q-1)Y, X-Y); coefficient of X^(n-j) Y^j in
    // (X+(q-1)Y)^(n-i) (X-Y)^i is sum_h (-1)^h C(i,h) C(n-i,j-h) (q-1)^(j-h).
    std::vector<BigInt> dual(n + 1, 0);
    for (size_t i = 0; i <= n; ++i) {
        if (w.counts[i] == 0) continue;
        for (size_t j = 0; j <= n; ++j) {
            BigInt sum = 0;
            for (size_t h = 0; h <= std::min(i, j); ++h) {
                BigInt term = binomial(i, static_cast<long>(h)) *
                              binomial(n - i, static_cast<long>(j - h)) *
                              bigint_pow(BigInt(q - 1), static_cast<unsigned long>(j - h));
                if (h % 2)
                    sum -= term;
                else
                    sum += term;
            }
            dual[j] += w.counts[i] * sum;
        }
    }
    const BigInt size = bigint_pow(q, k);
    WeightDistribution out;
    out.n = n;
    out.counts.resize(n + 1);
    for (size_t j = 0; j <= n; ++j) {
        if (!mpz_divisible_p(dual[j].get_mpz_t(), size.get_mpz_t()))
            throw std::invalid_argument(
                "macwilliams_dual: transform not divisible by q^k; input is not the weight "
                "distribution of a linear code");
        out.counts[j] = dual[j] / size;
        if (out.counts[j] < 0)
            throw std::invalid_argument("macwilliams_dual: negative dual count");
    }
    return out;
}

BigInt SupportCensus::alpha(size_t s) const {
    if (s > n_) throw std::invalid_argument("alpha: s out of range");
    return BigInt(static_cast<unsigned long>(table_[n_ - s][0]));
}

BigInt SupportCensus::beta(long ell, size_t s) const {
    if (s > n_) throw std::invalid_argument("beta: s out of range");
    if (ell < 0 || static_cast<size_t>(ell) > k_) return 0;
    return BigInt(static_cast<unsigned long>(table_[n_ - s][static_cast<size_t>(ell)]));
}

void SupportCensus::add(const SupportCensus& other) {
    if (other.n_ != n_ || other.k_ != k_) throw std::invalid_argument("census shape mismatch");
    for (size_t r = 0; r <= n_; ++r)
        for (size_t j = 0; j <= k_; ++j) table_[r][j] += other.table_[r][j];
}

namespace {

// Row echelon basis with push/pop column semantics for the subset walk.
// Rows keep distinct pivots, sorted ascending, pivot entries scaled to 1;
// pushed rows are never modified, so backtracking is a plain removal.
class EchelonStack {
  public:
    EchelonStack(const FiniteField& f, size_t dim) : F(f), dim_(dim) {}

    // Returns true (and records the row) iff the column increases the rank.
    bool push(std::span<const std::uint32_t> col) {
        std::vector<std::uint32_t> w(col.begin(), col.end());
        for (size_t i = 0; i < rows_.size(); ++i) {
            const std::uint32_t c = w[pivots_[i]];
            if (c == 0) continue;
            for (size_t j = pivots_[i]; j < dim_; ++j) w[j] = F.sub(w[j], F.mul(c, rows_[i][j]));
        }
        size_t piv = dim_;
        for (size_t j = 0; j < dim_; ++j)
            if (w[j] != 0) {
                piv = j;
                break;
            }
        if (piv == dim_) return false;
        const std::uint32_t s = F.inv(w[piv]);
        if (s != 1)
            for (size_t j = piv; j < dim_; ++j) w[j] = F.mul(w[j], s);
        const size_t pos =
            static_cast<size_t>(std::lower_bound(pivots_.begin(), pivots_.end(), piv) -
                                pivots_.begin());
        pivots_.insert(pivots_.begin() + pos, piv);
        rows_.insert(rows_.begin() + pos, std::move(w));
        stack_.push_back(piv);
        return true;
    }

    void pop() {
        const size_t piv = stack_.back();
        stack_.pop_back();
        const size_t pos =
            static_cast<size_t>(std::lower_bound(pivots_.begin(), pivots_.end(), piv) -
                                pivots_.begin());
        pivots_.erase(pivots_.begin() + pos);
        rows_.erase(rows_.begin() + pos);
    }

    size_t rank() const { return rows_.size(); }

  private:
    const FiniteField& F;
    size_t dim_;
    std::vector<std::vector<std::uint32_t>> rows_;
    std::vector<size_t> pivots_;
    std::vector<size_t> stack_;  // pivots of pushed rows, in push order
};

// Walk subsets of columns [depth, n) on top of the current stack state,
// tallying table[n - |T|][k - rank(T)] at every leaf.
void census_walk(const MatrixGF& g, const std::vector<std::vector<std::uint32_t>>& cols,
                 size_t depth, size_t included, EchelonStack& stack, SupportCensus& out) {
    const size_t n = g.cols(), k = g.rows();
    if (depth == n) {
        ++out.cell(n - included, k - stack.rank());
        return;
    }
    census_walk(g, cols, depth + 1, included, stack, out);  // exclude column `depth`
    const bool pushed = stack.push(cols[depth]);
    census_walk(g, cols, depth + 1, included + 1, stack, out);
    if (pushed) stack.pop();
}

}  // namespace

SupportCensus support_census(const LinearCode& c) {
    const size_t n = c.length(), k = c.dimension();
    if (n > kCensusMaxLength)
        throw std::runtime_error("support_census: length " + std::to_string(n) +
                                 " exceeds the 2^n iteration guard (n <= 28)");
    const MatrixGF& g = c.generator();
    std::vector<std::vector<std::uint32_t>> cols(n);
    for (size_t j = 0; j < n; ++j) cols[j] = g.column(j);

    const unsigned jobs = std::min<unsigned>(thread_budget(), 64);
    if (n <= 16 || jobs <= 1) {
        SupportCensus out(n, k);
        EchelonStack stack(*c.field(), k);
        census_walk(g, cols, 0, 0, stack, out);
        return out;
    }

    // Fix the first `t` columns; workers each take a deterministic slice of
    // the 2^t prefixes and walk the remaining columns.
    const size_t t = std::min<size_t>(10, n - 8);
    const std::uint64_t prefixes = 1ULL << t;
    std::vector<SupportCensus> partial(jobs, SupportCensus(n, k));
    std::vector<std::thread> workers;
    for (unsigned w = 0; w < jobs; ++w) {
        workers.emplace_back([&, w]() {
            for (std::uint64_t pre = w; pre < prefixes; pre += jobs) {
                EchelonStack stack(*c.field(), k);
                size_t included = 0;
                for (size_t j = 0; j < t; ++j)
                    if (pre >> j & 1) {
                        stack.push(cols[j]);
                        ++included;
                    }
                census_walk(g, cols, t, included, stack, partial[w]);
            }
        });
    }
    for (auto& th : workers) th.join();
    SupportCensus out(n, k);
    for (const auto& p : partial) out.add(p);
    return out;
}

BigInt ExtendedEnumerator::evaluate_b(size_t t, const BigInt& u) const {
    BigInt acc = 0;
    BigInt power = 1;
    for (size_t j = 0; j < b[t].size(); ++j) {
        acc += b[t][j] * power;
        power *= u;
    }
    return acc;
}

ExtendedEnumerator extended_enumerator(const SupportCensus& census) {
    const size_t n = census.n(), k = census.k();
    ExtendedEnumerator e;
    e.n = n;
    e.k = k;
    e.b.assign(n + 1, std::vector<BigInt>(k + 1, 0));
    // B_t(U) = sum over |J| = t of (U^{dim C(J^c)} - 1), and |J^c| = n - t.
    for (size_t t = 0; t <= n; ++t) {
        BigInt total = 0;
        for (size_t j = 0; j <= k; ++j) {
            const BigInt cnt(static_cast<unsigned long>(census.at(n - t, j)));
            e.b[t][j] += cnt;
            total += cnt;
        }
        e.b[t][0] -= total;  // the "- 1" per subset
    }
    return e;
}

ExtendedEnumerator extended_enumerator(const LinearCode& c) {
    return extended_enumerator(support_census(c));
}

WeightDistribution extension_weight_distribution(const ExtendedEnumerator& e, unsigned q,
                                                 unsigned m) {
    const size_t n = e.n;
    const BigInt u = bigint_pow(q, m);
    WeightDistribution out;
    out.n = n;
    out.counts.assign(n + 1, 0);
    out.counts[0] = 1;  // X^n term
    for (size_t t = 0; t <= n; ++t) {
        const BigInt bt = e.evaluate_b(t, u);
        if (bt == 0) continue;
        // B_t(U) (X-Y)^t Y^(n-t): weight n-t+a picks up (-1)^a C(t,a)
        for (size_t a = 0; a <= t; ++a) {
            BigInt term = bt * binomial(t, static_cast<long>(a));
            if (a % 2) term = -term;
            out.counts[n - t + a] += term;
        }
    }
    for (const BigInt& cnt : out.counts)
        if (cnt < 0)
            throw std::logic_error(
                "extension_weight_distribution: negative coefficient; enumerator is inconsistent");
    return out;
}

LinearCode direct_extension_code(const LinearCode& c, unsigned m) {
    if (m < 1) throw std::invalid_argument("direct_extension_code: m must be >= 1");
    const FieldPtr base = c.field();
    if (base->e() != 1)
        throw std::invalid_argument("direct_extension_code: base field must be prime");
    const FieldPtr ext = FiniteField::make(base->p(), m);
    MatrixGF g(ext, c.dimension(), c.length());
    for (size_t i = 0; i < c.dimension(); ++i)
        for (size_t j = 0; j < c.length(); ++j)
            g.set(i, j, c.generator().at(i, j));  // prime-subfield codes embed identically
    return LinearCode::from_generator(g);
}

}  // namespace coverdepth
