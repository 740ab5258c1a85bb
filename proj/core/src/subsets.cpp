#include "amdesign/subsets.hpp"

#include "amdesign/error.hpp"
#include "amdesign/exact.hpp"

namespace amdesign {

BinomialTable::BinomialTable(std::size_t n) : n_(n), table_((n + 1) * (n + 1), 0) {
    for (std::size_t i = 0; i <= n; ++i) {
        table_[i * (n + 1)] = 1;
        for (std::size_t j = 1; j <= i; ++j) {
            table_[i * (n + 1) + j] =
                checked_add(table_[(i - 1) * (n + 1) + j - 1], j <= i - 1 ? table_[(i - 1) * (n + 1) + j] : 0);
        }
    }
}

Mask colex_unrank(std::uint64_t rank, std::size_t size, const BinomialTable& binom) {
    Mask subset = 0;
    for (std::size_t i = size; i >= 1; --i) {
        // largest e with C(e, i) <= rank
        std::size_t e = i - 1;
        while (e + 1 <= binom.size() && binom(e + 1, i) <= rank) ++e;
        subset |= Mask{1} << e;
        rank -= binom(e, i);
    }
    return subset;
}

std::vector<std::size_t> to_points(Mask subset) {
    std::vector<std::size_t> points;
    for (; subset != 0; subset &= subset - 1) points.push_back(static_cast<std::size_t>(std::countr_zero(subset)));
    return points;
}

Mask from_points(const std::vector<std::size_t>& points) {
    Mask m = 0;
    for (auto p : points) {
        if (p >= kMaxPoints) throw Error(ErrorKind::InvalidArgument, "point index out of range");
        m |= Mask{1} << p;
    }
    return m;
}

}  // namespace amdesign
