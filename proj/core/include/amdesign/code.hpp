#pragma once

#include "amdesign/field.hpp"
#include "amdesign/polynomial.hpp"

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace amdesign {

/// 3^16 codewords.
inline constexpr std::uint64_t kDefaultBudget = 43'046'721;

struct EnumerationOptions {
    std::uint64_t budget = kDefaultBudget;
    /// 0 picks std::thread::hardware_concurrency().
    unsigned threads = 0;
};

/// Linear [n, k] code over GF(p) given by a full-rank k x n generator matrix.
class LinearCode {
public:
    /// Throws RankDeficient if the rows are dependent, InvalidArgument if k == 0.
    explicit LinearCode(Matrix generator, std::string name = {});

    std::size_t length() const noexcept { return generator_.cols(); }
    std::size_t dimension() const noexcept { return generator_.rows(); }
    unsigned modulus() const noexcept { return generator_.modulus(); }
    const Matrix& generator() const noexcept { return generator_; }
    const std::string& name() const noexcept { return name_; }

    /// p^k, if it fits in 64 bits.
    std::optional<std::uint64_t> size() const;

    /// message * G, written into `out` (length n).
    void encode(std::span<const std::uint8_t> message, std::span<std::uint8_t> out) const;

private:
    Matrix generator_;
    std::string name_;
};

/// Throws BudgetExceeded when p^k exceeds the budget.
std::uint64_t require_within_budget(const LinearCode& code, std::uint64_t budget);

/// Walks the codewords m G for messages m in lexicographic order over GF(p)^k,
/// optionally restricted to messages with a fixed leading prefix.
class CodewordCursor {
public:
    explicit CodewordCursor(const LinearCode& code, std::span<const std::uint8_t> prefix = {});

    std::span<const std::uint8_t> word() const noexcept { return word_; }
    std::span<const std::uint8_t> message() const noexcept { return message_; }
    std::size_t weight() const noexcept { return weight_; }

    /// Advances to the next message; false once the range is exhausted.
    bool next();

private:
    void add_row(std::size_t r);

    const LinearCode* code_;
    std::size_t fixed_;
    std::vector<std::uint8_t> message_;
    std::vector<std::uint8_t> word_;
    std::size_t weight_ = 0;
};

/// Calls fn(word, weight) once per codeword, in lexicographic message order.
template <class Fn>
void for_each_codeword(const LinearCode& code, const EnumerationOptions& options, Fn&& fn) {
    require_within_budget(code, options.budget);
    CodewordCursor cursor(code);
    do {
        fn(cursor.word(), cursor.weight());
    } while (cursor.next());
}

class WeightDistribution {
public:
    WeightDistribution() = default;
    /// counts[u] = number of codewords of weight u; size n + 1.
    explicit WeightDistribution(std::vector<std::uint64_t> counts);

    std::size_t length() const noexcept { return counts_.empty() ? 0 : counts_.size() - 1; }
    std::uint64_t count(std::size_t weight) const noexcept {
        return weight < counts_.size() ? counts_[weight] : 0;
    }
    const std::vector<std::uint64_t>& counts() const noexcept { return counts_; }

    std::uint64_t total() const;
    /// Weights u > 0 with A_u > 0, ascending.
    std::vector<std::size_t> nonzero_weights() const;
    std::optional<std::size_t> min_distance() const;

    /// sum_u A_u x^(n-u) y^u
    HomogeneousPolynomial enumerator() const;

    friend bool operator==(const WeightDistribution&, const WeightDistribution&) = default;

private:
    std::vector<std::uint64_t> counts_;
};

WeightDistribution weight_distribution(const LinearCode& code, const EnumerationOptions& options = {});

/// Generator = nullspace basis of code.generator(). Throws InvalidArgument for k == n.
LinearCode dual(const LinearCode& code);

/// Weight distribution of the dual of any [n, k] code over GF(p) with distribution `w`.
/// Throws NonIntegerCoefficient if the transform does not produce nonnegative integers.
WeightDistribution macwilliams_dual_enumerator(const WeightDistribution& w, std::size_t k, unsigned p);

/// True iff both codes generate the same row space.
bool same_code(const LinearCode& a, const LinearCode& b);

/// Ternary [11, 6, 5] Golay code: the cyclic code whose generator polynomial
/// has the quadratic residues mod 11 as root exponents.
LinearCode construct_golay();

/// construct_golay() with a zero-sum parity coordinate appended: [12, 6, 6].
LinearCode construct_extended_golay();

}  // namespace amdesign
