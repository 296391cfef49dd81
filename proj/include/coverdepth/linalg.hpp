#pragma once

#include <cstdint>
#include <initializer_list>
#include <span>
#include <vector>

#include "coverdepth/gf.hpp"

namespace coverdepth {

// Dense matrix over a finite field, entries stored as element codes in
// row-major order. Immutable by convention once built.
class MatrixGF {
  public:
    MatrixGF(FieldPtr field, size_t rows, size_t cols);
    static MatrixGF from_rows(const FieldPtr& field,
                              const std::vector<std::vector<unsigned>>& rows);

    const FieldPtr& field() const { return field_; }
    size_t rows() const { return rows_; }
    size_t cols() const { return cols_; }

    std::uint32_t at(size_t r, size_t c) const { return a_[r * cols_ + c]; }
    void set(size_t r, size_t c, std::uint32_t v);

    std::span<const std::uint32_t> row(size_t r) const {
        return {a_.data() + r * cols_, cols_};
    }
    std::vector<std::uint32_t> column(size_t c) const;

    MatrixGF transpose() const;
    MatrixGF multiply(const MatrixGF& rhs) const;
    bool is_zero() const;

    friend bool operator==(const MatrixGF& a, const MatrixGF& b);

  private:
    FieldPtr field_;
    size_t rows_ = 0, cols_ = 0;
    std::vector<std::uint32_t> a_;
};

struct RrefResult {
    MatrixGF matrix;
    size_t rank;
    std::vector<size_t> pivots;
};

// Canonical reduced row echelon form (pivots 1, pivot columns cleared).
RrefResult rref(const MatrixGF& m);

// Rank of the submatrix formed by the columns selected in `mask` (bit j set
// selects column j). Column index sets are bitmasks, so cols <= 64.
size_t rank_of_columns(const MatrixGF& m, std::uint64_t mask);
size_t rank_of_columns(const MatrixGF& m, std::span<const size_t> indices);

// dim C(S) = rows - rank of the columns outside `support_mask`.
size_t kernel_dimension_on_support(const MatrixGF& m, std::uint64_t support_mask);

// True iff the row-spaces coincide (canonical rrefs agree on nonzero rows).
bool same_row_space(const MatrixGF& a, const MatrixGF& b);

// Basis of { x : M x^T = 0 } as rows of a (cols - rank) x cols matrix.
MatrixGF null_space(const MatrixGF& m);

// Incrementally built subspace of F_q^k with a fully reduced basis: each
// pivot column is zero in every other basis vector, pivots are scaled to 1
// and rows are kept sorted by pivot. That makes the basis a canonical
// representation of the span, usable directly as a memo key.
class SpanState {
  public:
    SpanState(FieldPtr field, size_t ambient_dim);

    // Returns true iff v was outside the span (rank increased).
    bool insert(std::span<const std::uint32_t> v);
    bool contains(std::span<const std::uint32_t> v) const;

    size_t rank() const { return basis_.size(); }
    size_t ambient_dim() const { return dim_; }
    bool full() const { return basis_.size() == dim_; }
    void reset();

    // Canonical serialization of the span: rank, then basis rows in pivot order.
    std::vector<std::uint32_t> canonical_key() const;

  private:
    std::vector<std::uint32_t> reduce(std::span<const std::uint32_t> v) const;

    FieldPtr field_;
    size_t dim_;
    std::vector<std::vector<std::uint32_t>> basis_;  // sorted by pivot column
    std::vector<size_t> pivots_;
};

}  // namespace coverdepth
