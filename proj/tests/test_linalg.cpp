#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <array>

#include "coverdepth/linalg.hpp"
#include "coverdepth/rng.hpp"

#include "test_support.hpp"

using namespace coverdepth;
using namespace testsupport;

TEST_CASE("rref basics") {
    auto f2 = FiniteField::make(2, 1);
    SUBCASE("identity is its own rref") {
        auto id = MatrixGF::from_rows(f2, {{1, 0, 0}, {0, 1, 0}, {0, 0, 1}});
        auto r = rref(id);
        CHECK(r.rank == 3);
        CHECK(r.matrix == id);
        CHECK(r.pivots == std::vector<size_t>{0, 1, 2});
    }
    SUBCASE("zero matrix") {
        MatrixGF z(f2, 2, 4);
        auto r = rref(z);
        CHECK(r.rank == 0);
        CHECK(r.matrix == z);
    }
    SUBCASE("example generator has rank 3") {
        CHECK(rref(example_c1().generator()).rank == 3);
    }
    SUBCASE("pivot normalization over GF(5)") {
        auto f5 = FiniteField::make(5, 1);
        auto m = MatrixGF::from_rows(f5, {{2, 4}, {3, 1}});
        auto r = rref(m);
        CHECK(r.rank == 2);
        CHECK(r.matrix == MatrixGF::from_rows(f5, {{1, 0}, {0, 1}}));
    }
}

TEST_CASE("rank_of_columns") {
    auto s22 = [] {
        auto f2 = FiniteField::make(2, 1);
        return MatrixGF::from_rows(f2, {{1, 0, 1}, {0, 1, 1}});  // simplex(2,2) columns
    }();
    CHECK(rank_of_columns(s22, std::uint64_t{0}) == 0);
    CHECK(rank_of_columns(s22, 0b011ULL) == 2);
    CHECK(rank_of_columns(s22, 0b101ULL) == 2);
    CHECK(rank_of_columns(s22, 0b110ULL) == 2);
    CHECK(rank_of_columns(s22, 0b111ULL) == 2);
    const std::array<size_t, 1> one{2};
    CHECK(rank_of_columns(s22, std::span<const size_t>(one)) == 1);
    const std::array<size_t, 1> bad{3};
    CHECK_THROWS_AS(rank_of_columns(s22, std::span<const size_t>(bad)), std::invalid_argument);
    CHECK_THROWS_AS(rank_of_columns(s22, 0b1000ULL), std::invalid_argument);
}

TEST_CASE("span_insert") {
    auto f3 = FiniteField::make(3, 1);
    SpanState s(f3, 3);
    const std::vector<std::uint32_t> zero{0, 0, 0};
    CHECK_FALSE(s.insert(zero));
    const std::vector<std::uint32_t> v{1, 2, 0};
    CHECK(s.insert(v));
    CHECK(s.rank() == 1);
    const std::vector<std::uint32_t> twice_v{2, 1, 0};  // 2*v over GF(3)
    CHECK_FALSE(s.insert(twice_v));
    CHECK_FALSE(s.insert(v));  // idempotent
    const std::vector<std::uint32_t> w{0, 0, 2};
    CHECK(s.insert(w));
    CHECK(s.rank() == 2);
    CHECK(s.contains(std::vector<std::uint32_t>{1, 2, 2}));
    CHECK_FALSE(s.contains(std::vector<std::uint32_t>{0, 1, 0}));
    CHECK_FALSE(s.full());
    CHECK(s.insert(std::vector<std::uint32_t>{0, 1, 0}));
    CHECK(s.full());
}

TEST_CASE("span reaches full rank from generator columns in any order") {
    SplitMix64 rng(5);
    auto code = random_code(3, 4, 9, rng);
    std::vector<size_t> order(code.length());
    for (size_t i = 0; i < order.size(); ++i) order[i] = i;
    for (int rep = 0; rep < 10; ++rep) {
        for (size_t i = order.size(); i > 1; --i)
            std::swap(order[i - 1], order[rng.uniform_below(i)]);
        SpanState s(code.field(), code.dimension());
        for (size_t j : order) s.insert(code.generator().column(j));
        CHECK(s.rank() == code.dimension());
    }
}

TEST_CASE("same_row_space") {
    auto f2 = FiniteField::make(2, 1);
    SUBCASE("row permutation") {
        auto g = example_c1().generator();
        auto permuted = MatrixGF::from_rows(f2, {
            {0, 0, 0, 1, 1, 1, 1, 0, 0, 0, 0, 0},
            {0, 0, 0, 0, 0, 0, 0, 1, 1, 1, 1, 1},
            {1, 1, 1, 0, 0, 0, 0, 0, 0, 0, 0, 0},
        });
        CHECK(same_row_space(g, permuted));
    }
    SUBCASE("left-multiplication by random invertible matrices") {
        SplitMix64 rng(11);
        auto f3 = FiniteField::make(3, 1);
        auto g = random_full_rank_matrix(f3, 3, 7, rng);
        for (int rep = 0; rep < 20; ++rep) {
            auto a = random_invertible(f3, 3, rng);
            CHECK(same_row_space(g, a.multiply(g)));
        }
    }
    SUBCASE("the two reference codes are inequivalent generators") {
        CHECK_FALSE(same_row_space(example_c1().generator(), example_c2().generator()));
    }
}

TEST_CASE("canonical rref characterizes the row space") {
    SplitMix64 rng(101);
    for (unsigned q : {2u, 3u, 4u}) {
        auto f = FiniteField::from_order(q);
        for (int rep = 0; rep < 30; ++rep) {
            const size_t rows = 1 + rng.uniform_below(6);
            const size_t cols = 1 + rng.uniform_below(8);
            auto a = random_matrix(f, rows, cols, rng);
            auto b = random_matrix(f, rows, cols, rng);
            const auto ra = rref(a), rb = rref(b);
            bool same_nonzero_rows = ra.rank == rb.rank;
            for (size_t i = 0; same_nonzero_rows && i < ra.rank; ++i)
                for (size_t j = 0; j < cols; ++j)
                    if (ra.matrix.at(i, j) != rb.matrix.at(i, j)) {
                        same_nonzero_rows = false;
                        break;
                    }
            CHECK(same_row_space(a, b) == same_nonzero_rows);
        }
    }
}

TEST_CASE("kernel dimension on support and rank-nullity") {
    auto f2 = FiniteField::make(2, 1);
    auto s22 = MatrixGF::from_rows(f2, {{1, 0, 1}, {0, 1, 1}});
    const std::uint64_t full = 0b111;
    CHECK(kernel_dimension_on_support(s22, full) == 2);
    CHECK(kernel_dimension_on_support(s22, 0) == 0);
    // {0,1} supports no nonzero codeword of simplex(2,2) spanned that way:
    // codewords are 101, 011, 110; support {0,2} holds 101
    CHECK(kernel_dimension_on_support(s22, 0b101) == 1);

    SUBCASE("rank-nullity exhaustive on random codes with n <= 10") {
        SplitMix64 rng(42);
        for (int rep = 0; rep < 6; ++rep) {
            const unsigned q = rep % 2 ? 3 : 2;
            const size_t n = 5 + rng.uniform_below(6);
            const size_t k = 1 + rng.uniform_below(std::min<size_t>(n, 5));
            auto code = random_code(q, k, n, rng);
            const auto& g = code.generator();
            const std::uint64_t all = (1ULL << n) - 1;
            for (std::uint64_t s = 0; s <= all; ++s)
                REQUIRE(rank_of_columns(g, s) + kernel_dimension_on_support(g, all & ~s) == k);
        }
    }
}

TEST_CASE("null_space rows are orthogonal to the original rows") {
    SplitMix64 rng(9);
    auto f3 = FiniteField::make(3, 1);
    auto g = random_full_rank_matrix(f3, 3, 8, rng);
    auto h = null_space(g);
    CHECK(h.rows() == 5);
    CHECK(g.multiply(h.transpose()).is_zero());
}
