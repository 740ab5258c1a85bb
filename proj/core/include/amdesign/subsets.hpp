#pragma once

// Subsets of {0, ..., n-1} as bitmasks, with colexicographic ranking.

#include <bit>
#include <cstddef>
#include <cstdint>
#include <vector>

namespace amdesign {

using Mask = std::uint64_t;

inline constexpr std::size_t kMaxPoints = 64;

/// Pascal table C(i, j) for 0 <= i, j <= n.
class BinomialTable {
public:
    explicit BinomialTable(std::size_t n);
    std::uint64_t operator()(std::size_t i, std::size_t j) const {
        return j > i ? 0 : table_[i * (n_ + 1) + j];
    }
    std::size_t size() const noexcept { return n_; }

private:
    std::size_t n_;
    std::vector<std::uint64_t> table_;
};

/// Colex rank: sum over the i-th smallest element e_i of C(e_i, i+1).
inline std::uint64_t colex_rank(Mask subset, const BinomialTable& binom) {
    std::uint64_t rank = 0;
    std::size_t i = 1;
    while (subset != 0) {
        const auto e = static_cast<std::size_t>(std::countr_zero(subset));
        rank += binom(e, i++);
        subset &= subset - 1;
    }
    return rank;
}

Mask colex_unrank(std::uint64_t rank, std::size_t size, const BinomialTable& binom);

/// Next mask with the same popcount (Gosper's hack); iterates k-subsets in colex order.
inline Mask next_same_popcount(Mask x) {
    const Mask c = x & (~x + 1);
    const Mask r = x + c;
    return (((r ^ x) >> 2) / c) | r;
}

inline Mask full_mask(std::size_t n) { return n >= 64 ? ~Mask{0} : (Mask{1} << n) - 1; }

/// Calls fn(sub) for every size-k subset of `set`, lexicographically by element.
template <class Fn>
void for_each_subset_of(Mask set, std::size_t k, Fn&& fn) {
    std::size_t elems[kMaxPoints];
    std::size_t m = 0;
    for (Mask s = set; s != 0; s &= s - 1) elems[m++] = static_cast<std::size_t>(std::countr_zero(s));
    if (k > m) return;
    if (k == 0) {
        fn(Mask{0});
        return;
    }
    std::size_t idx[kMaxPoints];
    for (std::size_t i = 0; i < k; ++i) idx[i] = i;
    while (true) {
        Mask sub = 0;
        for (std::size_t i = 0; i < k; ++i) sub |= Mask{1} << elems[idx[i]];
        fn(sub);
        // advance as a lexicographic combination of positions
        std::size_t i = k;
        while (i > 0 && idx[i - 1] == m - k + i - 1) --i;
        if (i == 0) return;
        ++idx[i - 1];
        for (std::size_t j = i; j < k; ++j) idx[j] = idx[j - 1] + 1;
    }
}

std::vector<std::size_t> to_points(Mask subset);
Mask from_points(const std::vector<std::size_t>& points);

}  // namespace amdesign
