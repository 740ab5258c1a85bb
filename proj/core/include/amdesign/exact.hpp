#pragma once

// Exact integer and rational arithmetic shared by every module.

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <optional>
#include <string>

namespace amdesign {

using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

/// num/den in lowest terms; den may be negative but not zero.
Rational make_rational(const BigInt& num, const BigInt& den);

/// Binomial coefficient C(n, k) for small nonnegative arguments; 0 when k > n.
/// Throws on 64-bit overflow.
std::uint64_t binomial(std::uint64_t n, std::uint64_t k);

/// Exact C(n, k) without overflow concerns.
BigInt big_binomial(std::uint64_t n, std::uint64_t k);

/// Generalized binomial m(m-1)...(m-i+1)/i! for any integer m and i >= 0.
BigInt generalized_binomial(std::int64_t m, std::uint64_t i);

BigInt big_pow(std::int64_t base, std::uint64_t exponent);

/// k with value == base^k, if one exists (base >= 2, value >= 1).
std::optional<std::uint64_t> exact_log(const BigInt& value, std::uint64_t base);

/// Overflow-checked 64-bit helpers.
std::uint64_t checked_add(std::uint64_t a, std::uint64_t b);
std::uint64_t checked_mul(std::uint64_t a, std::uint64_t b);
std::optional<std::uint64_t> checked_pow(std::uint64_t base, std::uint64_t exponent);

/// "p/q" (or "p" when the denominator is 1).
std::string to_string(const Rational& r);
std::string to_string(const BigInt& v);
Rational parse_rational(const std::string& text);

}  // namespace amdesign
