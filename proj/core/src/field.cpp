#include "amdesign/field.hpp"

#include "amdesign/error.hpp"

#include <string>
#include <utility>

namespace amdesign {

namespace {

bool is_prime(unsigned p) {
    if (p < 2) return false;
    for (unsigned d = 2; d * d <= p; ++d)
        if (p % d == 0) return false;
    return true;
}

unsigned mod_inverse(unsigned a, unsigned p) {
    for (unsigned x = 1; x < p; ++x)
        if ((a * x) % p == 1) return x;
    throw Error(ErrorKind::InvalidArgument, "zero has no inverse");
}

}  // namespace

void require_supported_modulus(unsigned p) {
    if (!is_prime(p) || p > kMaxModulus)
        throw Error(ErrorKind::InvalidArgument,
                    "modulus " + std::to_string(p) + " is not a prime <= " + std::to_string(kMaxModulus));
}

FieldElement::FieldElement(std::uint64_t value, unsigned modulus)
    : value_(0), modulus_(static_cast<std::uint8_t>(modulus)) {
    require_supported_modulus(modulus);
    value_ = static_cast<std::uint8_t>(value % modulus);
}

void FieldElement::require_same_field(FieldElement rhs) const {
    if (rhs.modulus_ != modulus_) throw Error(ErrorKind::InvalidArgument, "field elements from different fields");
}

FieldElement FieldElement::operator+(FieldElement rhs) const {
    require_same_field(rhs);
    return {static_cast<std::uint64_t>(value_ + rhs.value_), modulus_};
}

FieldElement FieldElement::operator-(FieldElement rhs) const {
    require_same_field(rhs);
    return {static_cast<std::uint64_t>(value_ + modulus_ - rhs.value_), modulus_};
}

FieldElement FieldElement::operator*(FieldElement rhs) const {
    require_same_field(rhs);
    return {static_cast<std::uint64_t>(value_ * rhs.value_), modulus_};
}

FieldElement FieldElement::operator/(FieldElement rhs) const { return *this * rhs.inverse(); }

FieldElement FieldElement::operator-() const { return {static_cast<std::uint64_t>(modulus_ - value_), modulus_}; }

FieldElement FieldElement::inverse() const { return {mod_inverse(value_, modulus_), modulus_}; }

Matrix::Matrix(std::size_t rows, std::size_t cols, unsigned modulus)
    : rows_(rows), cols_(cols), modulus_(modulus), data_(rows * cols, 0) {
    require_supported_modulus(modulus);
}

Matrix::Matrix(std::vector<std::vector<int>> const& rows, unsigned modulus)
    : Matrix(rows.size(), rows.empty() ? 0 : rows.front().size(), modulus) {
    for (std::size_t r = 0; r < rows_; ++r) {
        if (rows[r].size() != cols_) throw Error(ErrorKind::DimensionMismatch, "ragged matrix rows");
        for (std::size_t c = 0; c < cols_; ++c) {
            const int p = static_cast<int>(modulus_);
            data_[r * cols_ + c] = static_cast<std::uint8_t>(((rows[r][c] % p) + p) % p);
        }
    }
}

Matrix Matrix::identity(std::size_t n, unsigned modulus) {
    Matrix m(n, n, modulus);
    for (std::size_t i = 0; i < n; ++i) m.set(i, i, 1);
    return m;
}

void Matrix::set(std::size_t r, std::size_t c, std::uint64_t value) {
    data_.at(r * cols_ + c) = static_cast<std::uint8_t>(value % modulus_);
}

FieldElement Matrix::at(std::size_t r, std::size_t c) const { return {data_.at(r * cols_ + c), modulus_}; }

void Matrix::append_row(std::span<const std::uint8_t> values) {
    if (rows_ == 0 && cols_ == 0) cols_ = values.size();
    if (values.size() != cols_) throw Error(ErrorKind::DimensionMismatch, "row length does not match matrix");
    for (auto v : values) data_.push_back(static_cast<std::uint8_t>(v % modulus_));
    ++rows_;
}

RrefResult rref(const Matrix& m) {
    RrefResult out{m, 0, {}};
    Matrix& a = out.reduced;
    const unsigned p = a.modulus();
    std::size_t pivot_row = 0;
    for (std::size_t col = 0; col < a.cols() && pivot_row < a.rows(); ++col) {
        std::size_t r = pivot_row;
        while (r < a.rows() && a(r, col) == 0) ++r;
        if (r == a.rows()) continue;
        if (r != pivot_row) {
            auto lhs = a.row(r);
            auto rhs = a.row(pivot_row);
            std::swap_ranges(lhs.begin(), lhs.end(), rhs.begin());
        }
        const unsigned inv = mod_inverse(a(pivot_row, col), p);
        for (auto& v : a.row(pivot_row)) v = static_cast<std::uint8_t>((v * inv) % p);
        for (std::size_t i = 0; i < a.rows(); ++i) {
            const unsigned factor = a(i, col);
            if (i == pivot_row || factor == 0) continue;
            auto target = a.row(i);
            auto source = a.row(pivot_row);
            for (std::size_t c = col; c < a.cols(); ++c)
                target[c] = static_cast<std::uint8_t>((target[c] + (p - factor) * source[c]) % p);
        }
        out.pivot_columns.push_back(col);
        ++pivot_row;
    }
    out.rank = pivot_row;
    return out;
}

std::size_t rank(const Matrix& m) { return rref(m).rank; }

Matrix nullspace_basis(const Matrix& m) {
    const auto reduced = rref(m);
    const unsigned p = m.modulus();
    std::vector<bool> is_pivot(m.cols(), false);
    for (auto c : reduced.pivot_columns) is_pivot[c] = true;

    Matrix basis(0, m.cols(), p);
    std::vector<std::uint8_t> v(m.cols());
    for (std::size_t free = 0; free < m.cols(); ++free) {
        if (is_pivot[free]) continue;
        std::fill(v.begin(), v.end(), 0);
        v[free] = 1;
        for (std::size_t i = 0; i < reduced.rank; ++i)
            v[reduced.pivot_columns[i]] = static_cast<std::uint8_t>((p - reduced.reduced(i, free)) % p);
        basis.append_row(v);
    }
    return basis;
}

Matrix multiply_transpose(const Matrix& a, const Matrix& b) {
    if (a.cols() != b.cols() || a.modulus() != b.modulus())
        throw Error(ErrorKind::DimensionMismatch, "incompatible matrices");
    Matrix out(a.rows(), b.rows(), a.modulus());
    for (std::size_t i = 0; i < a.rows(); ++i) {
        for (std::size_t j = 0; j < b.rows(); ++j) {
            std::uint64_t s = 0;
            for (std::size_t c = 0; c < a.cols(); ++c) s += a(i, c) * b(j, c);
            out.set(i, j, s);
        }
    }
    return out;
}

bool is_zero(const Matrix& m) {
    for (std::size_t r = 0; r < m.rows(); ++r)
        for (auto v : m.row(r))
            if (v != 0) return false;
    return true;
}

}  // namespace amdesign
