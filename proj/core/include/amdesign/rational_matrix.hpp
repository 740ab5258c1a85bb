#pragma once

#include "amdesign/exact.hpp"

#include <cstddef>
#include <vector>

namespace amdesign {

/// Dense matrix over Q. Meant for small systems (tens to a few hundred columns).
class RationalMatrix {
public:
    RationalMatrix() = default;
    RationalMatrix(std::size_t rows, std::size_t cols);

    std::size_t rows() const noexcept { return rows_; }
    std::size_t cols() const noexcept { return cols_; }

    Rational& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
    const Rational& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

    friend bool operator==(const RationalMatrix&, const RationalMatrix&) = default;

private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<Rational> data_;
};

struct RationalRref {
    RationalMatrix reduced;
    std::size_t rank = 0;
    std::vector<std::size_t> pivot_columns;
};

/// Fraction-free forward elimination over the integers after clearing
/// denominators row by row, followed by exact back substitution.
RationalRref rref(const RationalMatrix& m);

/// Kernel basis; one vector per free column, with a 1 in that column.
std::vector<std::vector<Rational>> nullspace_basis(const RationalMatrix& m);

}  // namespace amdesign
