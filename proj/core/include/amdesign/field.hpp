#pragma once

// Prime-field arithmetic GF(p), p <= 13, and dense matrices over it.

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

namespace amdesign {

inline constexpr unsigned kMaxModulus = 13;

/// Throws Error(InvalidArgument) unless p is a prime no larger than kMaxModulus.
void require_supported_modulus(unsigned p);

class FieldElement {
public:
    FieldElement(std::uint64_t value, unsigned modulus);

    std::uint8_t value() const noexcept { return value_; }
    unsigned modulus() const noexcept { return modulus_; }

    FieldElement operator+(FieldElement rhs) const;
    FieldElement operator-(FieldElement rhs) const;
    FieldElement operator*(FieldElement rhs) const;
    FieldElement operator/(FieldElement rhs) const;
    FieldElement operator-() const;
    FieldElement inverse() const;

    bool is_zero() const noexcept { return value_ == 0; }
    friend bool operator==(FieldElement, FieldElement) = default;

private:
    void require_same_field(FieldElement rhs) const;

    std::uint8_t value_;
    std::uint8_t modulus_;
};

/// Row-major matrix of canonical residues mod p.
class Matrix {
public:
    Matrix() = default;
    Matrix(std::size_t rows, std::size_t cols, unsigned modulus);
    /// Entries are reduced mod p.
    Matrix(std::vector<std::vector<int>> const& rows, unsigned modulus);

    static Matrix identity(std::size_t n, unsigned modulus);

    std::size_t rows() const noexcept { return rows_; }
    std::size_t cols() const noexcept { return cols_; }
    unsigned modulus() const noexcept { return modulus_; }

    std::uint8_t operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }
    void set(std::size_t r, std::size_t c, std::uint64_t value);
    FieldElement at(std::size_t r, std::size_t c) const;

    std::span<const std::uint8_t> row(std::size_t r) const {
        return {data_.data() + r * cols_, cols_};
    }
    std::span<std::uint8_t> row(std::size_t r) { return {data_.data() + r * cols_, cols_}; }

    void append_row(std::span<const std::uint8_t> values);

    friend bool operator==(const Matrix&, const Matrix&) = default;

private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    unsigned modulus_ = 2;
    std::vector<std::uint8_t> data_;
};

struct RrefResult {
    Matrix reduced;
    std::size_t rank = 0;
    std::vector<std::size_t> pivot_columns;
};

/// Gauss-Jordan elimination; pivot is the leftmost nonzero column, topmost row.
RrefResult rref(const Matrix& m);

std::size_t rank(const Matrix& m);

/// Basis of {v : m v^T = 0}, one row per free column in ascending order.
Matrix nullspace_basis(const Matrix& m);

/// a * b^T
Matrix multiply_transpose(const Matrix& a, const Matrix& b);

bool is_zero(const Matrix& m);

}  // namespace amdesign
