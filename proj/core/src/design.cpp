#include "amdesign/design.hpp"

#include "amdesign/error.hpp"

#include <algorithm>

namespace amdesign {

namespace {

void require_point_count(std::size_t n) {
    if (n > kMaxPoints)
        throw Error(ErrorKind::InvalidArgument, "support designs need n <= " + std::to_string(kMaxPoints));
}

Mask support_of(std::span<const std::uint8_t> word) {
    Mask m = 0;
    for (std::size_t i = 0; i < word.size(); ++i)
        if (word[i] != 0) m |= Mask{1} << i;
    return m;
}

// Next t-combination of {0..n-1} in lexicographic order; false after the last.
bool next_combination(std::vector<std::size_t>& idx, std::size_t n) {
    const std::size_t k = idx.size();
    std::size_t i = k;
    while (i > 0 && idx[i - 1] == n - k + i - 1) --i;
    if (i == 0) return false;
    ++idx[i - 1];
    for (std::size_t j = i; j < k; ++j) idx[j] = idx[j - 1] + 1;
    return true;
}

}  // namespace

SupportDesign support_design(const LinearCode& code, std::size_t weight, const EnumerationOptions& options) {
    require_point_count(code.length());
    SupportDesign design{code.length(), weight, {}};
    for_each_codeword(code, options, [&](std::span<const std::uint8_t> word, std::size_t w) {
        if (w == weight) design.blocks.push_back(support_of(word));
    });
    if (weight == 0 || design.blocks.empty())
        throw Error(ErrorKind::EmptyWeight, "no nonzero codeword has weight " + std::to_string(weight));
    return design;
}

std::vector<SupportDesign> support_designs(const LinearCode& code, const EnumerationOptions& options) {
    require_point_count(code.length());
    const std::size_t n = code.length();
    std::vector<SupportDesign> by_weight(n + 1);
    for (std::size_t w = 0; w <= n; ++w) by_weight[w] = SupportDesign{n, w, {}};
    for_each_codeword(code, options, [&](std::span<const std::uint8_t> word, std::size_t w) {
        if (w != 0) by_weight[w].blocks.push_back(support_of(word));
    });
    std::vector<SupportDesign> out;
    for (auto& d : by_weight)
        if (!d.blocks.empty()) out.push_back(std::move(d));
    return out;
}

std::vector<std::uint64_t> subset_block_counts(const SupportDesign& design, std::size_t t) {
    require_point_count(design.points);
    const BinomialTable binom(design.points);
    std::vector<std::uint64_t> counts(binom(design.points, t), 0);
    for (Mask block : design.blocks)
        for_each_subset_of(block, t, [&](Mask sub) { ++counts[colex_rank(sub, binom)]; });
    return counts;
}

DesignVerdict is_t_design(const SupportDesign& design, std::size_t t) {
    if (t > design.block_size)
        throw Error(ErrorKind::InvalidArgument, "t = " + std::to_string(t) + " exceeds the block size " +
                                                    std::to_string(design.block_size));
    const std::size_t n = design.points;
    const auto counts = subset_block_counts(design, t);
    const BinomialTable binom(n);

    DesignVerdict verdict;
    verdict.t = t;

    std::vector<std::size_t> idx(t);
    for (std::size_t i = 0; i < t; ++i) idx[i] = i;
    auto count_of = [&](const std::vector<std::size_t>& points) {
        return counts[colex_rank(from_points(points), binom)];
    };
    const std::uint64_t reference = count_of(idx);
    const std::vector<std::size_t> first = idx;
    while (next_combination(idx, n)) {
        const std::uint64_t c = count_of(idx);
        if (c != reference) {
            verdict.witness = DesignWitness{first, reference, idx, c};
            break;
        }
    }
    verdict.is_design = !verdict.witness.has_value();
    if (verdict.is_design) {
        verdict.lambda = Rational(BigInt(design.blocks.size()) * big_binomial(design.block_size, t),
                                  big_binomial(n, t));
    }
    return verdict;
}

bool is_complete_design(const SupportDesign& design) {
    const auto counts = subset_block_counts(design, design.block_size);
    return !counts.empty() && counts.front() > 0 &&
           std::all_of(counts.begin(), counts.end(), [&](auto c) { return c == counts.front(); });
}

WeightStrength design_strength(const SupportDesign& design, std::size_t t_max_probe) {
    WeightStrength s{design.block_size, design.blocks.size(), 0, false};
    const std::size_t limit = std::min(design.block_size, t_max_probe);
    for (std::size_t t = 1; t <= limit; ++t) {
        if (!is_t_design(design, t).is_design) break;
        s.strength = t;
    }
    s.capped = s.strength == t_max_probe;
    return s;
}

StrengthTable delta_and_s(const LinearCode& code, std::size_t t_max_probe, const EnumerationOptions& options) {
    if (t_max_probe < 1) throw Error(ErrorKind::InvalidArgument, "t_max_probe must be at least 1");
    StrengthTable table;
    table.probe = t_max_probe;
    for (const auto& design : support_designs(code, options)) table.per_weight.push_back(design_strength(design, t_max_probe));

    const auto [lo, hi] = std::minmax_element(table.per_weight.begin(), table.per_weight.end(),
                                              [](const auto& a, const auto& b) { return a.strength < b.strength; });
    table.delta = lo->strength;
    table.s = hi->strength;
    table.delta_capped = lo->capped;
    table.s_capped = hi->capped;
    return table;
}

}  // namespace amdesign
