#include "amdesign/exact.hpp"

#include "amdesign/error.hpp"

#include <limits>

namespace amdesign {

std::uint64_t checked_add(std::uint64_t a, std::uint64_t b) {
    std::uint64_t r;
    if (__builtin_add_overflow(a, b, &r)) throw Error(ErrorKind::InvalidArgument, "64-bit overflow in addition");
    return r;
}

std::uint64_t checked_mul(std::uint64_t a, std::uint64_t b) {
    std::uint64_t r;
    if (__builtin_mul_overflow(a, b, &r)) throw Error(ErrorKind::InvalidArgument, "64-bit overflow in product");
    return r;
}

std::optional<std::uint64_t> checked_pow(std::uint64_t base, std::uint64_t exponent) {
    std::uint64_t r = 1;
    for (std::uint64_t i = 0; i < exponent; ++i) {
        if (__builtin_mul_overflow(r, base, &r)) return std::nullopt;
    }
    return r;
}

std::uint64_t binomial(std::uint64_t n, std::uint64_t k) {
    const BigInt r = big_binomial(n, k);
    if (r > std::numeric_limits<std::uint64_t>::max())
        throw Error(ErrorKind::InvalidArgument, "binomial coefficient exceeds 64 bits");
    return r.convert_to<std::uint64_t>();
}

BigInt big_binomial(std::uint64_t n, std::uint64_t k) {
    if (k > n) return 0;
    k = std::min(k, n - k);
    BigInt r = 1;
    for (std::uint64_t i = 0; i < k; ++i) r = r * (n - i) / (i + 1);
    return r;
}

BigInt generalized_binomial(std::int64_t m, std::uint64_t i) {
    BigInt num = 1;
    BigInt den = 1;
    for (std::uint64_t j = 0; j < i; ++j) {
        num *= BigInt(m) - BigInt(j);
        den *= BigInt(j + 1);
        if (num == 0) return 0;
    }
    return num / den;
}

BigInt big_pow(std::int64_t base, std::uint64_t exponent) {
    BigInt r = 1;
    BigInt b = base;
    while (exponent != 0) {
        if (exponent & 1) r *= b;
        exponent >>= 1;
        if (exponent != 0) b *= b;
    }
    return r;
}

std::optional<std::uint64_t> exact_log(const BigInt& value, std::uint64_t base) {
    if (base < 2 || value < 1) return std::nullopt;
    BigInt v = value;
    std::uint64_t k = 0;
    const BigInt b = base;
    while (v > 1) {
        BigInt q, r;
        boost::multiprecision::divide_qr(v, b, q, r);
        if (r != 0) return std::nullopt;
        v = q;
        ++k;
    }
    return k;
}

std::string to_string(const BigInt& v) { return v.str(); }

std::string to_string(const Rational& r) {
    const BigInt num = boost::multiprecision::numerator(r);
    const BigInt den = boost::multiprecision::denominator(r);
    if (den == 1) return num.str();
    return num.str() + "/" + den.str();
}

Rational parse_rational(const std::string& text) {
    try {
        const auto slash = text.find('/');
        if (slash == std::string::npos) return Rational(BigInt(text));
        const BigInt num(text.substr(0, slash));
        const BigInt den(text.substr(slash + 1));
        if (den == 0) throw Error(ErrorKind::InvalidArgument, "zero denominator in '" + text + "'");
        return make_rational(num, den);
    } catch (const std::runtime_error& e) {
        if (dynamic_cast<const Error*>(&e) != nullptr) throw;
        throw Error(ErrorKind::InvalidArgument, "not an exact number: '" + text + "'");
    }
}

Rational make_rational(const BigInt& num, const BigInt& den) {
    if (den == 0) throw Error(ErrorKind::InvalidArgument, "zero denominator");
    // boost's two-argument constructor rejects negative denominators
    return den < 0 ? Rational(BigInt(-num), BigInt(-den)) : Rational(num, den);
}

}  // namespace amdesign
