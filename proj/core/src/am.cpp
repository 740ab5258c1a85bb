#include "amdesign/am.hpp"

#include "amdesign/error.hpp"

#include <sstream>

namespace amdesign {

AMReport am_condition(const WeightDistribution& code, const WeightDistribution& dual) {
    if (code.length() != dual.length())
        throw Error(ErrorKind::DimensionMismatch, "code and dual distributions have different lengths");
    AMReport report;
    report.n = code.length();
    report.code_weights = code.nonzero_weights();
    report.dual_weights = dual.nonzero_weights();
    report.d_dual = dual.min_distance().value_or(0);

    for (std::size_t t = 1; t < report.d_dual; ++t) {
        std::size_t count = 0;
        for (auto u : report.code_weights)
            if (u + t <= report.n) ++count;
        report.window.push_back({t, count});
        if (report.d_dual - t == count) report.admissible_t.push_back(t);
    }
    if (!report.admissible_t.empty()) report.t = report.admissible_t.back();
    return report;
}

AMReport am_condition(const LinearCode& code, const EnumerationOptions& options) {
    return am_condition(weight_distribution(code, options), weight_distribution(dual(code), options));
}

std::string to_string(TheoremId id) {
    switch (id) {
        case TheoremId::TwoWeight: return "1.1";
        case TheoremId::ThreeWeight: return "1.2";
        case TheoremId::ThreeWeightFullLength: return "1.3";
    }
    return "?";
}

TheoremId parse_theorem_id(const std::string& text) {
    if (text == "1.1") return TheoremId::TwoWeight;
    if (text == "1.2") return TheoremId::ThreeWeight;
    if (text == "1.3") return TheoremId::ThreeWeightFullLength;
    throw Error(ErrorKind::InvalidArgument, "unknown theorem id '" + text + "' (expected 1.1, 1.2 or 1.3)");
}

namespace {

bool matches(const WeightDistribution& w, std::size_t n, const std::vector<std::pair<std::size_t, std::uint64_t>>& expected) {
    if (w.length() != n) return false;
    std::uint64_t listed = 0;
    for (auto [u, a] : expected) {
        if (w.count(u) != a) return false;
        listed += a;
    }
    return listed == w.total();
}

}  // namespace

TheoremVerdict verify_theorem_instance(std::size_t k, unsigned p, const WeightDistribution& code,
                                       const WeightDistribution& dual, TheoremId theorem) {
    const std::string label = "statement " + to_string(theorem);
    if (p != 3) throw Error(ErrorKind::NotApplicable, label + " concerns ternary codes only");

    const AMReport am = am_condition(code, dual);
    const auto weights = am.code_weights;
    const std::size_t n = am.n;

    switch (theorem) {
        case TheoremId::TwoWeight:
            if (weights.size() != 2)
                throw Error(ErrorKind::NotApplicable, label + " needs a two-weight code; this code has " +
                                                          std::to_string(weights.size()) + " nonzero weights");
            break;
        case TheoremId::ThreeWeight:
            if (weights.size() != 3)
                throw Error(ErrorKind::NotApplicable, label + " needs a three-weight code; this code has " +
                                                          std::to_string(weights.size()) + " nonzero weights");
            break;
        case TheoremId::ThreeWeightFullLength:
            if (weights.size() != 3 || code.count(n) == 0)
                throw Error(ErrorKind::NotApplicable,
                            label + " needs a three-weight code containing a weight-n vector");
            break;
    }
    if (!am.t) throw Error(ErrorKind::NotApplicable, label + ": no t satisfies the AM-condition");

    TheoremVerdict v;
    v.theorem = theorem;
    v.applicable = true;
    v.n = n;
    v.k = k;
    v.d = weights.front();
    v.d_dual = am.d_dual;
    v.t = *am.t;

    std::ostringstream detail;
    switch (theorem) {
        case TheoremId::TwoWeight: {
            const bool golay_dual = n == 11 && k == 5 && v.d == 6 && matches(code, 11, {{0, 1}, {6, 132}, {9, 110}});
            if (v.d_dual == 5 && golay_dual && v.t == 4)
                v.branch = 1;
            else if (v.d_dual <= 4 && v.t <= 3)
                v.branch = 2;
            detail << "branch (1): d_dual = 5, [11,5,6] dual Golay parameters, t = 4; "
                   << "branch (2): d_dual <= 4 and t <= 3";
            break;
        }
        case TheoremId::ThreeWeight:
            if (v.d_dual <= 6 && v.t <= 5) v.branch = 1;
            detail << "conclusion: d_dual <= 6 and t <= 5";
            break;
        case TheoremId::ThreeWeightFullLength: {
            const bool golay =
                n == 12 && k == 6 && v.d == 6 && matches(code, 12, {{0, 1}, {6, 264}, {9, 440}, {12, 24}});
            if (v.d_dual == 6 && golay && v.t == 5)
                v.branch = 1;
            else if (v.d_dual <= 5 && v.t <= 4)
                v.branch = 2;
            detail << "branch (1): d_dual = 6, [12,6,6] extended Golay parameters, t = 5; "
                   << "branch (2): d_dual <= 5 and t <= 4";
            break;
        }
    }
    v.consistent = v.branch != 0;
    detail << "; observed [" << n << "," << k << "," << v.d << "], d_dual = " << v.d_dual << ", t = " << v.t;
    v.detail = detail.str();
    return v;
}

TheoremVerdict verify_theorem_instance(const LinearCode& code, TheoremId theorem, const EnumerationOptions& options) {
    if (code.modulus() != 3) throw Error(ErrorKind::NotApplicable, "statement " + to_string(theorem) + " concerns ternary codes only");
    return verify_theorem_instance(code.dimension(), code.modulus(), weight_distribution(code, options),
                                   weight_distribution(dual(code), options), theorem);
}

}  // namespace amdesign
