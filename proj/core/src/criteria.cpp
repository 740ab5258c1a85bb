#include "amdesign/criteria.hpp"

#include "amdesign/am.hpp"
#include "amdesign/design.hpp"
#include "amdesign/error.hpp"

#include <algorithm>

namespace amdesign {

std::int64_t CriterionParams::alpha(std::size_t l) const {
    return static_cast<std::int64_t>(n) - static_cast<std::int64_t>(weights.at(l)) - static_cast<std::int64_t>(t + 1);
}

std::int64_t CriterionParams::beta(std::size_t l) const {
    return static_cast<std::int64_t>(weights.at(l)) - static_cast<std::int64_t>(t + 1);
}

bool CriterionParams::degenerate(std::size_t count) const {
    for (std::size_t l = 0; l < count; ++l)
        if (alpha(l) < 0 || beta(l) < 0) return true;
    return false;
}

Rational binomial_convolution(std::int64_t alpha, std::int64_t beta, std::uint64_t w, unsigned q) {
    BigInt sum = 0;
    for (std::uint64_t i = 0; i <= w; ++i) {
        const std::uint64_t j = w - i;
        BigInt term = big_pow(static_cast<std::int64_t>(q) - 1, i) * generalized_binomial(alpha, i) *
                      generalized_binomial(beta, j);
        if (j % 2 == 1) term = -term;
        sum += term;
    }
    return Rational(sum);
}

Rational criterion_sum(int case_number, const CriterionParams& params, std::uint64_t w) {
    if (case_number < 1 || case_number > 3)
        throw Error(ErrorKind::InvalidArgument, "criterion case must be 1, 2 or 3");
    if (params.weights.size() < static_cast<std::size_t>(case_number))
        throw Error(ErrorKind::InvalidArgument, "case " + std::to_string(case_number) + " needs " +
                                                    std::to_string(case_number) + " weights");
    auto term = [&](std::size_t l) { return binomial_convolution(params.alpha(l), params.beta(l), w, params.q); };
    switch (case_number) {
        case 1: return term(0);
        case 2: return term(0) - term(1);
        default: {
            const auto d1 = static_cast<std::int64_t>(params.weights[0]);
            const auto d2 = static_cast<std::int64_t>(params.weights[1]);
            const auto d3 = static_cast<std::int64_t>(params.weights[2]);
            if (d3 == d2) throw Error(ErrorKind::DegenerateDenominator, "case 3 needs d_3 != d_2");
            return term(0) - make_rational(d3 - d1, d3 - d2) * term(1) + make_rational(d2 - d1, d3 - d2) * term(2);
        }
    }
}

CriterionReport scan_criterion(const LinearCode& code, const EnumerationOptions& options) {
    const LinearCode dual_code = dual(code);
    const WeightDistribution wd = weight_distribution(code, options);
    const WeightDistribution dual_wd = weight_distribution(dual_code, options);
    const AMReport am = am_condition(wd, dual_wd);
    if (!am.t) throw Error(ErrorKind::WrongCase, "no t satisfies the AM-condition");
    const std::size_t t = *am.t;
    const std::size_t gap = am.d_dual - t;
    if (gap < 1 || gap > 3)
        throw Error(ErrorKind::WrongCase, "d_dual - t = " + std::to_string(gap) + " is not 1, 2 or 3");

    CriterionReport report;
    report.case_number = static_cast<int>(gap);
    report.params.n = am.n;
    report.params.t = t;
    report.params.q = code.modulus();
    // the AM window: weights not exceeding n - t, smallest first
    for (auto u : am.code_weights)
        if (u + t <= am.n && report.params.weights.size() < gap) report.params.weights.push_back(u);
    for (std::size_t l = 0; l < gap; ++l) {
        report.alpha.push_back(report.params.alpha(l));
        report.beta.push_back(report.params.beta(l));
    }
    report.degenerate = report.params.degenerate(gap);
    if (report.degenerate) report.notes.push_back("negative alpha or beta: binomials use the generalized definition");
    if (std::any_of(report.alpha.begin(), report.alpha.end(), [](auto a) { return a == 0; }))
        report.notes.push_back("alpha = 0: the sum reduces to a single binomial row and vanishes for most w");

    for (std::uint64_t w = 0; w <= am.n; ++w) {
        report.values.push_back(criterion_sum(report.case_number, report.params, w));
        if (report.values.back() == 0) {
            report.roots.push_back(w);
            if (w + t + 1 <= am.n) report.candidate_weights.push_back(w + t + 1);
        }
    }

    std::vector<SupportDesign> dual_designs;
    for (auto cand : report.candidate_weights)
        if (dual_wd.count(cand) > 0) report.actionable.push_back(cand);
    if (!report.actionable.empty()) dual_designs = support_designs(dual_code, options);

    for (auto cand : report.actionable) {
        const auto it = std::find_if(dual_designs.begin(), dual_designs.end(),
                                     [&](const SupportDesign& d) { return d.block_size == cand; });
        CandidateOutcome outcome;
        outcome.weight = cand;
        outcome.blocks = it->blocks.size();
        if (t + 1 <= cand) {
            const DesignVerdict verdict = is_t_design(*it, t + 1);
            outcome.is_design = verdict.is_design;
            outcome.lambda = verdict.lambda;
        }
        outcome.complete = is_complete_design(*it);
        if (!outcome.is_design) report.anomaly = true;
        report.outcomes.push_back(std::move(outcome));
    }
    if (!report.outcomes.empty() &&
        std::all_of(report.outcomes.begin(), report.outcomes.end(), [](const auto& o) { return o.complete; })) {
        report.notes.push_back("every actionable candidate is a complete design, so its strength is trivial");
    }
    if (report.anomaly) report.notes.push_back("ANOMALY: a candidate support design failed the (t+1)-check");
    return report;
}

std::string to_string(IdentityVariant v) {
    switch (v) {
        case IdentityVariant::TwoWeight: return "two-weight";
        case IdentityVariant::ThreeWeight: return "three-weight";
        case IdentityVariant::ThreeWeightFullLength: return "three-weight-full-length";
    }
    return "?";
}

BigInt sphere_size(std::uint64_t n, std::uint64_t ell, std::uint64_t q) {
    BigInt s = 0;
    for (std::uint64_t i = 0; i <= ell && i <= n; ++i) s += big_binomial(n, i) * big_pow(static_cast<std::int64_t>(q) - 1, i);
    return s;
}

IdentityCheck check_enumerator_identity(const WeightDistribution& code, const WeightDistribution& dual, unsigned p) {
    const auto weights = code.nonzero_weights();
    const std::size_t n = code.length();
    IdentityCheck check;
    check.d_dual = dual.min_distance().value_or(0);
    check.lhs = 1;
    for (auto u : weights) check.lhs += code.count(u);

    if (weights.size() == 2) {
        check.variant = IdentityVariant::TwoWeight;
        check.rhs = sphere_size(n, 2, p);
        check.required_d_dual = 5;
    } else if (weights.size() == 3 && weights.back() == n) {
        check.variant = IdentityVariant::ThreeWeightFullLength;
        check.rhs = BigInt(p) * sphere_size(n - 1, 2, p);
        check.required_d_dual = 6;
    } else if (weights.size() == 3) {
        check.variant = IdentityVariant::ThreeWeight;
        check.rhs = sphere_size(n, 3, p);
        check.required_d_dual = 7;
    } else {
        throw Error(ErrorKind::NotApplicable, "identity check needs two or three nonzero weights, found " +
                                                  std::to_string(weights.size()));
    }
    check.applicable = check.d_dual >= check.required_d_dual;
    check.holds = check.lhs == check.rhs;
    return check;
}

IdentityCheck check_enumerator_identity(const LinearCode& code, const EnumerationOptions& options) {
    return check_enumerator_identity(weight_distribution(code, options), weight_distribution(dual(code), options),
                                     code.modulus());
}

std::vector<DiophantineSolution> diophantine_scan(std::uint64_t q, std::uint64_t ell, std::uint64_t n_max) {
    if (q < 2) throw Error(ErrorKind::InvalidArgument, "q must be at least 2");
    if (ell < 1 || n_max < 1) throw Error(ErrorKind::InvalidArgument, "ell and n_max must be at least 1");
    std::vector<DiophantineSolution> out;
    for (std::uint64_t n = 1; n <= n_max; ++n) {
        if (const auto k = exact_log(sphere_size(n, ell, q), q)) out.push_back({n, *k});
    }
    return out;
}

}  // namespace amdesign
