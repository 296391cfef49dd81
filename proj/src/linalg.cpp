#include "coverdepth/linalg.hpp"

#include <algorithm>
#include <stdexcept>

namespace coverdepth {

MatrixGF::MatrixGF(FieldPtr field, size_t rows, size_t cols)
    : field_(std::move(field)), rows_(rows), cols_(cols), a_(rows * cols, 0) {
    if (!field_) throw std::invalid_argument("MatrixGF: null field");
}

MatrixGF MatrixGF::from_rows(const FieldPtr& field,
                             const std::vector<std::vector<unsigned>>& rows) {
    const size_t r = rows.size();
    const size_t c = r == 0 ? 0 : rows[0].size();
    MatrixGF m(field, r, c);
    for (size_t i = 0; i < r; ++i) {
        if (rows[i].size() != c) throw std::invalid_argument("MatrixGF: ragged rows");
        for (size_t j = 0; j < c; ++j) m.set(i, j, rows[i][j]);
    }
    return m;
}

void MatrixGF::set(size_t r, size_t c, std::uint32_t v) {
    if (v >= field_->q()) throw std::invalid_argument("MatrixGF: entry out of field range");
    a_[r * cols_ + c] = v;
}

std::vector<std::uint32_t> MatrixGF::column(size_t c) const {
    std::vector<std::uint32_t> col(rows_);
    for (size_t r = 0; r < rows_; ++r) col[r] = at(r, c);
    return col;
}

MatrixGF MatrixGF::transpose() const {
    MatrixGF t(field_, cols_, rows_);
    for (size_t r = 0; r < rows_; ++r)
        for (size_t c = 0; c < cols_; ++c) t.set(c, r, at(r, c));
    return t;
}

MatrixGF MatrixGF::multiply(const MatrixGF& rhs) const {
    if (!field_->same_as(*rhs.field_)) throw std::invalid_argument("MatrixGF: field mismatch");
    if (cols_ != rhs.rows_) throw std::invalid_argument("MatrixGF: shape mismatch");
    const FiniteField& F = *field_;
    MatrixGF out(field_, rows_, rhs.cols_);
    for (size_t i = 0; i < rows_; ++i)
        for (size_t j = 0; j < rhs.cols_; ++j) {
            std::uint32_t acc = 0;
            for (size_t t = 0; t < cols_; ++t) acc = F.add(acc, F.mul(at(i, t), rhs.at(t, j)));
            out.set(i, j, acc);
        }
    return out;
}

bool MatrixGF::is_zero() const {
    return std::all_of(a_.begin(), a_.end(), [](std::uint32_t v) { return v == 0; });
}

bool operator==(const MatrixGF& a, const MatrixGF& b) {
    return a.field_->same_as(*b.field_) && a.rows_ == b.rows_ && a.cols_ == b.cols_ &&
           a.a_ == b.a_;
}

RrefResult rref(const MatrixGF& m) {
    const FiniteField& F = *m.field();
    MatrixGF w = m;
    std::vector<size_t> pivots;
    size_t r = 0;
    for (size_t col = 0; col < w.cols() && r < w.rows(); ++col) {
        size_t piv = w.rows();
        for (size_t i = r; i < w.rows(); ++i)
            if (w.at(i, col) != 0) {
                piv = i;
                break;
            }
        if (piv == w.rows()) continue;
        if (piv != r)
            for (size_t j = 0; j < w.cols(); ++j) {
                const std::uint32_t t = w.at(r, j);
                w.set(r, j, w.at(piv, j));
                w.set(piv, j, t);
            }
        const std::uint32_t s = F.inv(w.at(r, col));
        if (s != 1)
            for (size_t j = 0; j < w.cols(); ++j) w.set(r, j, F.mul(w.at(r, j), s));
        for (size_t i = 0; i < w.rows(); ++i) {
            if (i == r) continue;
            const std::uint32_t c = w.at(i, col);
            if (c == 0) continue;
            for (size_t j = 0; j < w.cols(); ++j)
                w.set(i, j, F.sub(w.at(i, j), F.mul(c, w.at(r, j))));
        }
        pivots.push_back(col);
        ++r;
    }
    return {std::move(w), r, std::move(pivots)};
}

namespace {

size_t rank_of_column_list(const MatrixGF& m, const std::vector<size_t>& cols) {
    SpanState span(m.field(), m.rows());
    std::vector<std::uint32_t> v(m.rows());
    for (size_t c : cols) {
        for (size_t r = 0; r < m.rows(); ++r) v[r] = m.at(r, c);
        span.insert(v);
        if (span.full()) break;
    }
    return span.rank();
}

}  // namespace

size_t rank_of_columns(const MatrixGF& m, std::uint64_t mask) {
    if (m.cols() < 64 && (mask >> m.cols()) != 0)
        throw std::invalid_argument("rank_of_columns: mask selects out-of-range column");
    std::vector<size_t> cols;
    for (size_t c = 0; c < m.cols(); ++c)
        if (mask >> c & 1) cols.push_back(c);
    return rank_of_column_list(m, cols);
}

size_t rank_of_columns(const MatrixGF& m, std::span<const size_t> indices) {
    std::vector<size_t> cols;
    for (size_t c : indices) {
        if (c >= m.cols())
            throw std::invalid_argument("rank_of_columns: column index " + std::to_string(c) +
                                        " out of range");
        cols.push_back(c);
    }
    return rank_of_column_list(m, cols);
}

size_t kernel_dimension_on_support(const MatrixGF& m, std::uint64_t support_mask) {
    const size_t n = m.cols();
    if (n < 64 && (support_mask >> n) != 0)
        throw std::invalid_argument("kernel_dimension_on_support: mask out of range");
    const std::uint64_t all = n == 64 ? ~0ULL : ((1ULL << n) - 1);
    return m.rows() - rank_of_columns(m, all & ~support_mask);
}

bool same_row_space(const MatrixGF& a, const MatrixGF& b) {
    if (!a.field()->same_as(*b.field()) || a.cols() != b.cols())
        throw std::invalid_argument("same_row_space: incompatible matrices");
    const RrefResult ra = rref(a);
    const RrefResult rb = rref(b);
    if (ra.rank != rb.rank) return false;
    for (size_t i = 0; i < ra.rank; ++i)
        for (size_t j = 0; j < a.cols(); ++j)
            if (ra.matrix.at(i, j) != rb.matrix.at(i, j)) return false;
    return true;
}

MatrixGF null_space(const MatrixGF& m) {
    const FiniteField& F = *m.field();
    const RrefResult r = rref(m);
    const size_t n = m.cols();
    std::vector<bool> is_pivot(n, false);
    for (size_t c : r.pivots) is_pivot[c] = true;
    MatrixGF out(m.field(), n - r.rank, n);
    size_t row = 0;
    for (size_t f = 0; f < n; ++f) {
        if (is_pivot[f]) continue;
        out.set(row, f, 1);
        for (size_t i = 0; i < r.rank; ++i) out.set(row, r.pivots[i], F.neg(r.matrix.at(i, f)));
        ++row;
    }
    return out;
}

SpanState::SpanState(FieldPtr field, size_t ambient_dim)
    : field_(std::move(field)), dim_(ambient_dim) {
    if (!field_) throw std::invalid_argument("SpanState: null field");
}

void SpanState::reset() {
    basis_.clear();
    pivots_.clear();
}

std::vector<std::uint32_t> SpanState::reduce(std::span<const std::uint32_t> v) const {
    const FiniteField& F = *field_;
    std::vector<std::uint32_t> w(v.begin(), v.end());
    for (size_t i = 0; i < basis_.size(); ++i) {
        const std::uint32_t c = w[pivots_[i]];
        if (c == 0) continue;
        for (size_t j = 0; j < dim_; ++j) w[j] = F.sub(w[j], F.mul(c, basis_[i][j]));
    }
    return w;
}

bool SpanState::insert(std::span<const std::uint32_t> v) {
    if (v.size() != dim_) throw std::invalid_argument("SpanState: wrong vector length");
    const FiniteField& F = *field_;
    std::vector<std::uint32_t> w = reduce(v);
    size_t piv = dim_;
    for (size_t j = 0; j < dim_; ++j)
        if (w[j] != 0) {
            piv = j;
            break;
        }
    if (piv == dim_) return false;
    const std::uint32_t s = F.inv(w[piv]);
    if (s != 1)
        for (size_t j = 0; j < dim_; ++j) w[j] = F.mul(w[j], s);
    // clear the new pivot column from existing rows, keep rows sorted by pivot
    for (size_t i = 0; i < basis_.size(); ++i) {
        const std::uint32_t c = basis_[i][piv];
        if (c == 0) continue;
        for (size_t j = 0; j < dim_; ++j) basis_[i][j] = F.sub(basis_[i][j], F.mul(c, w[j]));
    }
    const auto pos = std::lower_bound(pivots_.begin(), pivots_.end(), piv) - pivots_.begin();
    pivots_.insert(pivots_.begin() + pos, piv);
    basis_.insert(basis_.begin() + pos, std::move(w));
    return true;
}

bool SpanState::contains(std::span<const std::uint32_t> v) const {
    if (v.size() != dim_) throw std::invalid_argument("SpanState: wrong vector length");
    const auto w = reduce(v);
    return std::all_of(w.begin(), w.end(), [](std::uint32_t x) { return x == 0; });
}

std::vector<std::uint32_t> SpanState::canonical_key() const {
    std::vector<std::uint32_t> key;
    key.reserve(1 + basis_.size() * dim_);
    key.push_back(static_cast<std::uint32_t>(basis_.size()));
    for (const auto& row : basis_) key.insert(key.end(), row.begin(), row.end());
    return key;
}

}  // namespace coverdepth
