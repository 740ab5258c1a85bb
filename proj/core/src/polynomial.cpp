#include "amdesign/polynomial.hpp"

#include "amdesign/error.hpp"

#include <sstream>

namespace amdesign {

HomogeneousPolynomial::HomogeneousPolynomial(std::size_t degree)
    : degree_(degree), coeffs_(degree + 1, BigInt(0)) {}

HomogeneousPolynomial::HomogeneousPolynomial(std::size_t degree, std::vector<BigInt> coeffs)
    : degree_(degree), coeffs_(std::move(coeffs)) {
    if (coeffs_.size() != degree + 1)
        throw Error(ErrorKind::DimensionMismatch, "coefficient count must be degree + 1");
}

HomogeneousPolynomial HomogeneousPolynomial::linear(std::int64_t a, std::int64_t b) {
    return HomogeneousPolynomial(1, {BigInt(a), BigInt(b)});
}

HomogeneousPolynomial HomogeneousPolynomial::monomial(std::size_t degree, std::size_t y_power, BigInt coeff) {
    HomogeneousPolynomial p(degree);
    p.coeff(y_power) = std::move(coeff);
    return p;
}

bool HomogeneousPolynomial::is_zero() const {
    for (const auto& c : coeffs_)
        if (c != 0) return false;
    return true;
}

HomogeneousPolynomial operator*(const HomogeneousPolynomial& a, const HomogeneousPolynomial& b) {
    HomogeneousPolynomial out(a.degree_ + b.degree_);
    for (std::size_t i = 0; i <= a.degree_; ++i) {
        if (a.coeffs_[i] == 0) continue;
        for (std::size_t j = 0; j <= b.degree_; ++j) out.coeffs_[i + j] += a.coeffs_[i] * b.coeffs_[j];
    }
    return out;
}

HomogeneousPolynomial HomogeneousPolynomial::pow(std::size_t e) const {
    HomogeneousPolynomial result = monomial(0, 0, 1);
    HomogeneousPolynomial base = *this;
    while (e != 0) {
        if (e & 1) result = result * base;
        e >>= 1;
        if (e != 0) base = base * base;
    }
    return result;
}

HomogeneousPolynomial& HomogeneousPolynomial::operator+=(const HomogeneousPolynomial& rhs) {
    if (rhs.degree_ != degree_) throw Error(ErrorKind::DimensionMismatch, "adding polynomials of different degree");
    for (std::size_t i = 0; i <= degree_; ++i) coeffs_[i] += rhs.coeffs_[i];
    return *this;
}

HomogeneousPolynomial& HomogeneousPolynomial::operator-=(const HomogeneousPolynomial& rhs) {
    if (rhs.degree_ != degree_)
        throw Error(ErrorKind::DimensionMismatch, "subtracting polynomials of different degree");
    for (std::size_t i = 0; i <= degree_; ++i) coeffs_[i] -= rhs.coeffs_[i];
    return *this;
}

HomogeneousPolynomial& HomogeneousPolynomial::operator*=(const BigInt& scalar) {
    for (auto& c : coeffs_) c *= scalar;
    return *this;
}

HomogeneousPolynomial macwilliams_term(unsigned q, std::size_t x_power, std::size_t y_power) {
    return HomogeneousPolynomial::linear(1, static_cast<std::int64_t>(q) - 1).pow(x_power) *
           HomogeneousPolynomial::linear(1, -1).pow(y_power);
}

HomogeneousPolynomial HomogeneousPolynomial::macwilliams_substitute(unsigned q) const {
    HomogeneousPolynomial out(degree_);
    for (std::size_t i = 0; i <= degree_; ++i) {
        if (coeffs_[i] == 0) continue;
        out += macwilliams_term(q, degree_ - i, i) * coeffs_[i];
    }
    return out;
}

std::string HomogeneousPolynomial::to_string() const {
    std::ostringstream os;
    bool first = true;
    for (std::size_t i = 0; i <= degree_; ++i) {
        const BigInt& c = coeffs_[i];
        if (c == 0) continue;
        const std::size_t xe = degree_ - i;
        const std::size_t ye = i;
        BigInt mag = c < 0 ? BigInt(-c) : c;
        if (first) {
            if (c < 0) os << "-";
        } else {
            os << (c < 0 ? " - " : " + ");
        }
        first = false;
        const bool unit = mag == 1 && (xe != 0 || ye != 0);
        if (!unit) os << mag;
        auto emit = [&](char var, std::size_t e, bool need_star) {
            if (e == 0) return need_star;
            if (need_star) os << "*";
            os << var;
            if (e > 1) os << "^" << e;
            return true;
        };
        bool star = !unit;
        star = emit('x', xe, star);
        emit('y', ye, star);
    }
    if (first) os << "0";
    return os.str();
}

bool are_proportional(const std::vector<BigInt>& a, const std::vector<BigInt>& b) {
    if (a.size() != b.size()) throw Error(ErrorKind::DimensionMismatch, "vectors of different length");
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = i + 1; j < a.size(); ++j)
            if (a[i] * b[j] != a[j] * b[i]) return false;
    return true;
}

std::optional<Rational> proportionality_scalar(const std::vector<BigInt>& a, const std::vector<BigInt>& b) {
    if (!are_proportional(a, b)) return std::nullopt;
    for (std::size_t i = 0; i < b.size(); ++i)
        if (b[i] != 0) return make_rational(a[i], b[i]);
    return std::nullopt;
}

}  // namespace amdesign
