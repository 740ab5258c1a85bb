#pragma once

#include "amdesign/code.hpp"
#include "amdesign/design.hpp"
#include "amdesign/exact.hpp"
#include "amdesign/polynomial.hpp"
#include "amdesign/rational_matrix.hpp"

#include <cstddef>
#include <cstdint>
#include <vector>

namespace amdesign {

struct HarmonicLimits {
    std::size_t max_degree = 6;
    std::uint64_t max_subsets = 20'000;
};

/// Function on the k-subsets of {0..n-1}, values indexed by colex rank.
/// Harmonic means: for every (k-1)-subset S, the sum of f over the k-subsets
/// containing S is zero.
class HarmonicFunction {
public:
    HarmonicFunction(std::size_t n, std::size_t k, std::vector<std::int64_t> values);

    std::size_t points() const noexcept { return n_; }
    std::size_t degree() const noexcept { return k_; }
    const std::vector<std::int64_t>& values() const noexcept { return values_; }

    std::int64_t operator()(Mask subset) const;

    /// sum of f(T) over k-subsets T of `support`
    std::int64_t lift(Mask support) const;

private:
    std::size_t n_;
    std::size_t k_;
    BinomialTable binom_;
    std::vector<std::int64_t> values_;
};

/// Checks every down-operator equation exactly.
bool is_harmonic(const HarmonicFunction& f);

/// Basis of Harm_k of size C(n,k) - C(n,k-1): one function per standard
/// two-row tableau, f(T) = prod over column pairs (a, b) of +1 if a in T,
/// -1 if b in T, and 0 unless T meets every pair exactly once.
/// Requires 1 <= k <= n/2; throws SizeCapExceeded past the limits.
std::vector<HarmonicFunction> harm_basis(std::size_t n, std::size_t k, const HarmonicLimits& limits = {});

/// The down operator on k-subsets as an exact C(n,k-1) x C(n,k) matrix.
RationalMatrix down_operator(std::size_t n, std::size_t k);

/// c_w(f) = sum over weight-w codewords c of sum_{T subset supp(c), |T| = k} f(T).
struct HarmonicEnumerator {
    std::size_t n = 0;
    std::size_t k = 0;
    /// indexed by weight, size n + 1
    std::vector<BigInt> coeffs;

    /// sum_w c_w x^(n-w-k) y^(w-k), degree n - 2k
    HomogeneousPolynomial reduced() const;
    static HarmonicEnumerator from_reduced(std::size_t n, std::size_t k, const HomogeneousPolynomial& z);

    friend bool operator==(const HarmonicEnumerator&, const HarmonicEnumerator&) = default;
};

HarmonicEnumerator harmonic_enumerator(const LinearCode& code, const HarmonicFunction& f,
                                       const EnumerationOptions& options = {});

/// Reduced polynomial with x -> x + (p-1) y, y -> x - y. Proportional to the
/// dual code's enumerator for the same f.
HarmonicEnumerator dual_transform(const HarmonicEnumerator& z, unsigned p);

/// sum over blocks of f lifted to the block, for each f.
std::vector<BigInt> harmonic_block_sums(const SupportDesign& design, const std::vector<HarmonicFunction>& basis);

/// D_w is a t-design iff c_w(f) = 0 for every f in Harm_j, 1 <= j <= t.
/// Degrees above n/2 contribute nothing (Harm_j is zero there).
bool harmonic_design_check(const SupportDesign& design, std::size_t t, const HarmonicLimits& limits = {});

bool harmonic_design_check(const LinearCode& code, std::size_t weight, std::size_t t,
                           const HarmonicLimits& limits = {}, const EnumerationOptions& options = {});

/// Coefficient vectors c of sum_i c_i (x + (p-1) y)^(n-w_i-k) (x - y)^(w_i-k)
/// for which the listed monomials (given by y-power) vanish. Returns a kernel basis.
std::vector<std::vector<Rational>> forced_relations(std::size_t n, std::size_t k, unsigned p,
                                                    const std::vector<std::size_t>& weights,
                                                    const std::vector<std::size_t>& vanishing_y_powers);

}  // namespace amdesign
