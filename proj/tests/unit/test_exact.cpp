#include "doctest.h"

#include "amdesign/error.hpp"
#include "amdesign/exact.hpp"
#include "amdesign/rational_matrix.hpp"
#include "amdesign/subsets.hpp"

#include <random>

using namespace amdesign;

TEST_CASE("binomials") {
    CHECK(binomial(12, 5) == 792);
    CHECK(binomial(5, 7) == 0);
    CHECK(binomial(64, 32) == 1832624140942590534ULL);
    CHECK_THROWS_AS(binomial(100, 50), Error);
    CHECK(big_binomial(100, 50) == BigInt("100891344545564193334812497256"));
}

TEST_CASE("generalized binomial with negative upper index") {
    CHECK(generalized_binomial(1, 2) == 0);
    CHECK(generalized_binomial(0, 0) == 1);
    CHECK(generalized_binomial(0, 1) == 0);
    CHECK(generalized_binomial(-1, 3) == -1);  // (-1)^i
    CHECK(generalized_binomial(-2, 3) == -4);  // (-1)^i (i+1)
    CHECK(generalized_binomial(-3, 2) == 6);
}

TEST_CASE("exact powers") {
    CHECK(exact_log(243, 3) == 5);
    CHECK(exact_log(1, 3) == 0);
    CHECK_FALSE(exact_log(244, 3).has_value());
    CHECK_FALSE(exact_log(0, 3).has_value());
    CHECK(big_pow(-2, 5) == -32);
}

TEST_CASE("rational strings") {
    CHECK(to_string(Rational(6, 4)) == "3/2");
    CHECK(to_string(Rational(-4, 2)) == "-2");
    CHECK(parse_rational("-3/9") == Rational(-1, 3));
    CHECK_THROWS_AS(parse_rational("1/0"), Error);
    CHECK_THROWS_AS(parse_rational("abc"), Error);
}

TEST_CASE("colex ranking is a bijection onto [0, C(n,k))") {
    const BinomialTable binom(10);
    for (std::size_t k = 0; k <= 5; ++k) {
        std::uint64_t expected = 0;
        for (Mask m = full_mask(k); m < (Mask{1} << 10); m = next_same_popcount(m)) {
            CHECK(colex_rank(m, binom) == expected);
            CHECK(colex_unrank(expected, k, binom) == m);
            ++expected;
            if (k == 0) break;
        }
        CHECK(expected == (k == 0 ? 1 : binom(10, k)));
    }
}

namespace {

// Plain Gauss-Jordan over Q as a reference.
std::size_t naive_rank(std::vector<std::vector<Rational>> a) {
    std::size_t rank = 0;
    const std::size_t rows = a.size(), cols = rows ? a[0].size() : 0;
    for (std::size_t c = 0; c < cols && rank < rows; ++c) {
        std::size_t p = rank;
        while (p < rows && a[p][c] == 0) ++p;
        if (p == rows) continue;
        std::swap(a[p], a[rank]);
        for (std::size_t r = 0; r < rows; ++r) {
            if (r == rank || a[r][c] == 0) continue;
            const Rational f = a[r][c] / a[rank][c];
            for (std::size_t j = 0; j < cols; ++j) a[r][j] -= f * a[rank][j];
        }
        ++rank;
    }
    return rank;
}

}  // namespace

TEST_CASE("property: fraction-free rref matches naive elimination") {
    std::mt19937 rng(7);
    std::uniform_int_distribution<int> entry(-3, 3);
    std::uniform_int_distribution<int> den(1, 4);
    std::uniform_int_distribution<std::size_t> dim(1, 7);
    for (int trial = 0; trial < 80; ++trial) {
        const std::size_t rows = dim(rng), cols = dim(rng);
        RationalMatrix m(rows, cols);
        std::vector<std::vector<Rational>> copy(rows, std::vector<Rational>(cols));
        for (std::size_t r = 0; r < rows; ++r)
            for (std::size_t c = 0; c < cols; ++c) {
                const int v = trial % 2 == 0 ? entry(rng) % 2 : entry(rng);
                m(r, c) = copy[r][c] = Rational(v, den(rng));
            }
        const auto red = rref(m);
        CHECK(red.rank == naive_rank(copy));
        const auto kernel = nullspace_basis(m);
        CHECK(kernel.size() + red.rank == cols);
        for (const auto& v : kernel)
            for (std::size_t r = 0; r < rows; ++r) {
                Rational s = 0;
                for (std::size_t c = 0; c < cols; ++c) s += m(r, c) * v[c];
                CHECK(s == 0);
            }
        for (std::size_t i = 0; i < red.rank; ++i) CHECK(red.reduced(i, red.pivot_columns[i]) == 1);
    }
}
