#pragma once

#include "amdesign/code.hpp"

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

namespace amdesign {

struct WindowCount {
    std::size_t t = 0;
    /// #{u : A_u > 0, 0 < u <= n - t}
    std::size_t weights = 0;

    friend bool operator==(const WindowCount&, const WindowCount&) = default;
};

/// Values of t with d_dual - t = #{u : A_u > 0, 0 < u <= n - t}, 1 <= t < d_dual.
/// When `t` is set, every support design of C and of its dual is a t-design.
struct AMReport {
    std::size_t n = 0;
    std::size_t d_dual = 0;
    std::vector<std::size_t> code_weights;
    std::vector<std::size_t> dual_weights;
    std::vector<std::size_t> admissible_t;
    std::optional<std::size_t> t;
    std::vector<WindowCount> window;

    friend bool operator==(const AMReport&, const AMReport&) = default;
};

AMReport am_condition(const WeightDistribution& code, const WeightDistribution& dual);

/// Enumerates the code and its dual.
AMReport am_condition(const LinearCode& code, const EnumerationOptions& options = {});

enum class TheoremId {
    TwoWeight,             // "1.1"
    ThreeWeight,           // "1.2"
    ThreeWeightFullLength  // "1.3"
};

std::string to_string(TheoremId id);
/// Accepts "1.1", "1.2", "1.3".
TheoremId parse_theorem_id(const std::string& text);

struct TheoremVerdict {
    TheoremId theorem = TheoremId::TwoWeight;
    bool applicable = false;
    /// 1 or 2 for the matched disjunct; 0 when none matched.
    int branch = 0;
    bool consistent = false;
    std::size_t n = 0;
    std::size_t k = 0;
    std::size_t d = 0;
    std::size_t d_dual = 0;
    std::size_t t = 0;
    std::string detail;

    friend bool operator==(const TheoremVerdict&, const TheoremVerdict&) = default;
};

/// Checks the conclusion of the classification statement against computed data.
/// Throws NotApplicable when the hypotheses (ternary, weight-class count,
/// full-length vector, admissible t) do not hold.
TheoremVerdict verify_theorem_instance(const LinearCode& code, TheoremId theorem,
                                       const EnumerationOptions& options = {});

TheoremVerdict verify_theorem_instance(std::size_t k, unsigned p, const WeightDistribution& code,
                                       const WeightDistribution& dual, TheoremId theorem);

}  // namespace amdesign
