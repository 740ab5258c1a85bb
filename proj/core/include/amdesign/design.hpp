#pragma once

#include "amdesign/code.hpp"
#include "amdesign/exact.hpp"
#include "amdesign/subsets.hpp"

#include <cstddef>
#include <cstdint>
#include <optional>
#include <vector>

namespace amdesign {

/// Blocks are the supports of all weight-w codewords; repeated blocks are kept,
/// so c and 2c contribute the same block twice over GF(3).
struct SupportDesign {
    std::size_t points = 0;
    std::size_t block_size = 0;
    std::vector<Mask> blocks;
};

/// Throws EmptyWeight if no codeword has weight w.
SupportDesign support_design(const LinearCode& code, std::size_t weight,
                             const EnumerationOptions& options = {});

/// All support designs of the nonzero weights at once (one enumeration).
std::vector<SupportDesign> support_designs(const LinearCode& code, const EnumerationOptions& options = {});

/// Two t-subsets that lie in a different number of blocks.
struct DesignWitness {
    std::vector<std::size_t> first;   // lexicographically smallest t-subset
    std::uint64_t first_count = 0;
    std::vector<std::size_t> second;  // smallest t-subset whose count differs
    std::uint64_t second_count = 0;

    friend bool operator==(const DesignWitness&, const DesignWitness&) = default;
};

struct DesignVerdict {
    std::size_t t = 0;
    bool is_design = false;
    /// block_count * C(w, t) / C(n, t); the common count when is_design.
    std::optional<Rational> lambda;
    std::optional<DesignWitness> witness;

    friend bool operator==(const DesignVerdict&, const DesignVerdict&) = default;
};

/// Number of blocks containing each t-subset, indexed by colex rank.
std::vector<std::uint64_t> subset_block_counts(const SupportDesign& design, std::size_t t);

/// Requires t <= block_size.
DesignVerdict is_t_design(const SupportDesign& design, std::size_t t);

/// Every w-subset occurs the same (positive) number of times.
bool is_complete_design(const SupportDesign& design);

inline constexpr std::size_t kDefaultProbe = 7;

struct WeightStrength {
    std::size_t weight = 0;
    std::uint64_t blocks = 0;
    std::size_t strength = 0;
    /// Strength reached t_max_probe; the true strength may be larger.
    bool capped = false;

    friend bool operator==(const WeightStrength&, const WeightStrength&) = default;
};

struct StrengthTable {
    std::size_t delta = 0;
    std::size_t s = 0;
    bool delta_capped = false;
    bool s_capped = false;
    std::size_t probe = kDefaultProbe;
    std::vector<WeightStrength> per_weight;

    friend bool operator==(const StrengthTable&, const StrengthTable&) = default;
};

/// Largest t <= min(w, probe) such that the design is a t'-design for all t' <= t.
WeightStrength design_strength(const SupportDesign& design, std::size_t t_max_probe);

/// delta(C) = min and s(C) = max of the per-weight strengths over nonzero weights.
StrengthTable delta_and_s(const LinearCode& code, std::size_t t_max_probe = kDefaultProbe,
                          const EnumerationOptions& options = {});

}  // namespace amdesign
