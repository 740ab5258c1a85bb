#pragma once

#include "amdesign/code.hpp"
#include "amdesign/exact.hpp"

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace amdesign {

/// alpha_l = n - d_l - (t+1), beta_l = d_l - (t+1); either may be negative.
struct CriterionParams {
    std::size_t n = 0;
    std::size_t t = 0;
    /// d_1 < d_2 < d_3, as many as the case uses
    std::vector<std::size_t> weights;
    /// field size; the sums weight terms by (q-1)^i
    unsigned q = 3;

    std::int64_t alpha(std::size_t l) const;
    std::int64_t beta(std::size_t l) const;
    /// Some alpha_l or beta_l is negative.
    bool degenerate(std::size_t count) const;
};

/// sum_{i+j=w} (q-1)^i C(alpha_l, i) (-1)^j C(beta_l, j) for one l.
Rational binomial_convolution(std::int64_t alpha, std::int64_t beta, std::uint64_t w, unsigned q = 3);

/// case 1: S_1(w); case 2: S_1 - S_2; case 3: S_1 - (d3-d1)/(d3-d2) S_2 + (d2-d1)/(d3-d2) S_3.
/// Throws DegenerateDenominator when d_3 == d_2, InvalidArgument for a bad case.
Rational criterion_sum(int case_number, const CriterionParams& params, std::uint64_t w);

struct CandidateOutcome {
    std::size_t weight = 0;
    std::uint64_t blocks = 0;
    bool is_design = false;
    /// Every weight-sized subset occurs equally often, which makes every
    /// strength hold trivially.
    bool complete = false;
    std::optional<Rational> lambda;

    friend bool operator==(const CandidateOutcome&, const CandidateOutcome&) = default;
};

struct CriterionReport {
    int case_number = 0;
    CriterionParams params;
    std::vector<std::int64_t> alpha;
    std::vector<std::int64_t> beta;
    bool degenerate = false;
    /// value of the sum at w = 0..n
    std::vector<Rational> values;
    std::vector<std::size_t> roots;
    /// w + t + 1 for roots with w + t + 1 <= n
    std::vector<std::size_t> candidate_weights;
    /// candidates whose dual weight class is nonempty
    std::vector<std::size_t> actionable;
    /// counting-oracle (t+1)-design verdicts on the dual supports of `actionable`
    std::vector<CandidateOutcome> outcomes;
    /// Some actionable candidate failed the (t+1)-check.
    bool anomaly = false;
    std::vector<std::string> notes;
};

/// Throws WrongCase if the code has no admissible t or d_dual - t is not 1, 2 or 3.
CriterionReport scan_criterion(const LinearCode& code, const EnumerationOptions& options = {});

enum class IdentityVariant { TwoWeight, ThreeWeight, ThreeWeightFullLength };

std::string to_string(IdentityVariant v);

/// 1 + A_{d1} + ... against the sphere-size sums. `applicable` reports whether
/// the minimum-dual-distance hypothesis holds; both sides are computed regardless.
struct IdentityCheck {
    IdentityVariant variant = IdentityVariant::TwoWeight;
    BigInt lhs;
    BigInt rhs;
    bool holds = false;
    bool applicable = false;
    std::size_t d_dual = 0;
    std::size_t required_d_dual = 0;

    friend bool operator==(const IdentityCheck&, const IdentityCheck&) = default;
};

/// Requires two or three nonzero weights (NotApplicable otherwise).
IdentityCheck check_enumerator_identity(const WeightDistribution& code, const WeightDistribution& dual,
                                        unsigned p);
IdentityCheck check_enumerator_identity(const LinearCode& code, const EnumerationOptions& options = {});

/// sum_{i=0}^{ell} C(n, i) (q-1)^i
BigInt sphere_size(std::uint64_t n, std::uint64_t ell, std::uint64_t q);

struct DiophantineSolution {
    std::uint64_t n = 0;
    std::uint64_t k = 0;

    friend bool operator==(const DiophantineSolution&, const DiophantineSolution&) = default;
};

/// All 1 <= n <= n_max with sphere_size(n, ell, q) = q^k.
std::vector<DiophantineSolution> diophantine_scan(std::uint64_t q, std::uint64_t ell, std::uint64_t n_max);

}  // namespace amdesign
