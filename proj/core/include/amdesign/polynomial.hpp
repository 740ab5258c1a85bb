#pragma once

#include "amdesign/exact.hpp"

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

namespace amdesign {

/// Homogeneous polynomial in x, y of fixed degree d:
///   sum_i coeff(i) x^(d-i) y^i
class HomogeneousPolynomial {
public:
    HomogeneousPolynomial() = default;
    explicit HomogeneousPolynomial(std::size_t degree);
    HomogeneousPolynomial(std::size_t degree, std::vector<BigInt> coeffs);

    /// (a x + b y)
    static HomogeneousPolynomial linear(std::int64_t a, std::int64_t b);
    /// x^(d-i) y^i
    static HomogeneousPolynomial monomial(std::size_t degree, std::size_t y_power, BigInt coeff = 1);

    std::size_t degree() const noexcept { return degree_; }
    /// Coefficient of x^(d-i) y^i.
    const BigInt& coeff(std::size_t y_power) const { return coeffs_.at(y_power); }
    BigInt& coeff(std::size_t y_power) { return coeffs_.at(y_power); }
    const std::vector<BigInt>& coeffs() const noexcept { return coeffs_; }

    bool is_zero() const;

    HomogeneousPolynomial pow(std::size_t e) const;

    HomogeneousPolynomial& operator+=(const HomogeneousPolynomial& rhs);
    HomogeneousPolynomial& operator-=(const HomogeneousPolynomial& rhs);
    HomogeneousPolynomial& operator*=(const BigInt& scalar);

    friend HomogeneousPolynomial operator+(HomogeneousPolynomial a, const HomogeneousPolynomial& b) {
        return a += b;
    }
    friend HomogeneousPolynomial operator-(HomogeneousPolynomial a, const HomogeneousPolynomial& b) {
        return a -= b;
    }
    friend HomogeneousPolynomial operator*(HomogeneousPolynomial a, const BigInt& s) { return a *= s; }
    friend HomogeneousPolynomial operator*(const HomogeneousPolynomial& a, const HomogeneousPolynomial& b);
    friend bool operator==(const HomogeneousPolynomial&, const HomogeneousPolynomial&) = default;

    /// Substitutes x -> x + (q-1) y, y -> x - y.
    HomogeneousPolynomial macwilliams_substitute(unsigned q) const;

    /// Human-readable form, e.g. "x^10*y^4 - 3*x^4*y^10".
    std::string to_string() const;

private:
    std::size_t degree_ = 0;
    std::vector<BigInt> coeffs_{BigInt(0)};
};

/// (x + (q-1) y)^a (x - y)^b
HomogeneousPolynomial macwilliams_term(unsigned q, std::size_t x_power, std::size_t y_power);

/// All 2x2 cross products a_i b_j - a_j b_i vanish (a and b are linearly dependent).
bool are_proportional(const std::vector<BigInt>& a, const std::vector<BigInt>& b);

/// lambda with a = lambda * b, when b is nonzero and the two are proportional.
std::optional<Rational> proportionality_scalar(const std::vector<BigInt>& a, const std::vector<BigInt>& b);

}  // namespace amdesign
