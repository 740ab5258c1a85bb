#include "amdesign/harmonic.hpp"

#include "amdesign/error.hpp"

#include <algorithm>

namespace amdesign {

HarmonicFunction::HarmonicFunction(std::size_t n, std::size_t k, std::vector<std::int64_t> values)
    : n_(n), k_(k), binom_(std::min(n, kMaxPoints)), values_(std::move(values)) {
    if (n > kMaxPoints || k > n) throw Error(ErrorKind::InvalidArgument, "harmonic function needs k <= n <= 64");
    if (values_.size() != binom_(n, k))
        throw Error(ErrorKind::DimensionMismatch, "expected C(n,k) = " + std::to_string(binom_(n, k)) + " values");
}

std::int64_t HarmonicFunction::operator()(Mask subset) const { return values_[colex_rank(subset, binom_)]; }

std::int64_t HarmonicFunction::lift(Mask support) const {
    std::int64_t s = 0;
    for_each_subset_of(support, k_, [&](Mask sub) { s += values_[colex_rank(sub, binom_)]; });
    return s;
}

bool is_harmonic(const HarmonicFunction& f) {
    const std::size_t n = f.points();
    const std::size_t k = f.degree();
    if (k == 0) return false;
    const Mask all = full_mask(n);
    bool ok = true;
    // every (k-1)-subset of the point set
    for_each_subset_of(all, k - 1, [&](Mask lower) {
        if (!ok) return;
        std::int64_t sum = 0;
        for (Mask rest = all & ~lower; rest != 0; rest &= rest - 1) sum += f(lower | (rest & (~rest + 1)));
        ok = sum == 0;
    });
    return ok;
}

std::vector<HarmonicFunction> harm_basis(std::size_t n, std::size_t k, const HarmonicLimits& limits) {
    if (k < 1 || 2 * k > n) throw Error(ErrorKind::InvalidArgument, "harmonic basis needs 1 <= k <= n/2");
    if (n > kMaxPoints) throw Error(ErrorKind::InvalidArgument, "harmonic basis needs n <= 64");
    if (k > limits.max_degree)
        throw Error(ErrorKind::SizeCapExceeded,
                    "degree " + std::to_string(k) + " exceeds the cap " + std::to_string(limits.max_degree));
    const BinomialTable binom(n);
    if (binom(n, k) > limits.max_subsets)
        throw Error(ErrorKind::SizeCapExceeded, "C(n,k) = " + std::to_string(binom(n, k)) + " exceeds the cap " +
                                                    std::to_string(limits.max_subsets));

    std::vector<HarmonicFunction> basis;
    const Mask all = full_mask(n);
    for_each_subset_of(all, k, [&](Mask second_row) {
        const auto bottom = to_points(second_row);
        const auto top = to_points(all & ~second_row);
        for (std::size_t i = 0; i < k; ++i)
            if (bottom[i] <= top[i]) return;  // not a standard tableau

        std::vector<std::int64_t> values(binom(n, k), 0);
        for (Mask choice = 0; choice < (Mask{1} << k); ++choice) {
            Mask subset = 0;
            std::int64_t sign = 1;
            for (std::size_t i = 0; i < k; ++i) {
                if (choice >> i & 1) {
                    subset |= Mask{1} << bottom[i];
                    sign = -sign;
                } else {
                    subset |= Mask{1} << top[i];
                }
            }
            values[colex_rank(subset, binom)] = sign;
        }
        basis.emplace_back(n, k, std::move(values));
    });
    return basis;
}

RationalMatrix down_operator(std::size_t n, std::size_t k) {
    if (k < 1 || k > n || n > kMaxPoints) throw Error(ErrorKind::InvalidArgument, "down operator needs 1 <= k <= n");
    const BinomialTable binom(n);
    RationalMatrix d(binom(n, k - 1), binom(n, k));
    for_each_subset_of(full_mask(n), k, [&](Mask upper) {
        const auto col = colex_rank(upper, binom);
        for (Mask rest = upper; rest != 0; rest &= rest - 1) {
            const Mask lower = upper & ~(rest & (~rest + 1));
            d(colex_rank(lower, binom), col) = 1;
        }
    });
    return d;
}

HomogeneousPolynomial HarmonicEnumerator::reduced() const {
    if (2 * k > n) throw Error(ErrorKind::InvalidArgument, "reduced form needs 2k <= n");
    HomogeneousPolynomial z(n - 2 * k);
    for (std::size_t w = 0; w < coeffs.size(); ++w) {
        if (coeffs[w] == 0) continue;
        if (w < k || w > n - k)
            throw Error(ErrorKind::InvalidArgument, "nonzero coefficient at weight " + std::to_string(w) +
                                                        " outside the reduced range [k, n-k]");
        z.coeff(w - k) = coeffs[w];
    }
    return z;
}

HarmonicEnumerator HarmonicEnumerator::from_reduced(std::size_t n, std::size_t k, const HomogeneousPolynomial& z) {
    if (2 * k > n || z.degree() != n - 2 * k)
        throw Error(ErrorKind::DimensionMismatch, "reduced polynomial must have degree n - 2k");
    HarmonicEnumerator out{n, k, std::vector<BigInt>(n + 1, BigInt(0))};
    for (std::size_t i = 0; i <= z.degree(); ++i) out.coeffs[i + k] = z.coeff(i);
    return out;
}

HarmonicEnumerator harmonic_enumerator(const LinearCode& code, const HarmonicFunction& f,
                                       const EnumerationOptions& options) {
    if (f.points() != code.length())
        throw Error(ErrorKind::DimensionMismatch, "harmonic function lives on " + std::to_string(f.points()) +
                                                      " points but the code has length " +
                                                      std::to_string(code.length()));
    const std::size_t n = code.length();
    std::vector<std::int64_t> sums(n + 1, 0);
    for_each_codeword(code, options, [&](std::span<const std::uint8_t> word, std::size_t w) {
        if (w < f.degree()) return;
        Mask support = 0;
        for (std::size_t i = 0; i < n; ++i)
            if (word[i] != 0) support |= Mask{1} << i;
        sums[w] += f.lift(support);
    });
    HarmonicEnumerator z{n, f.degree(), {}};
    for (auto s : sums) z.coeffs.emplace_back(s);
    return z;
}

HarmonicEnumerator dual_transform(const HarmonicEnumerator& z, unsigned p) {
    return HarmonicEnumerator::from_reduced(z.n, z.k, z.reduced().macwilliams_substitute(p));
}

std::vector<BigInt> harmonic_block_sums(const SupportDesign& design, const std::vector<HarmonicFunction>& basis) {
    std::vector<std::int64_t> sums(basis.size(), 0);
    if (basis.empty()) return {};
    const std::size_t k = basis.front().degree();
    const BinomialTable binom(design.points);
    std::vector<std::uint64_t> ranks;
    for (Mask block : design.blocks) {
        ranks.clear();
        for_each_subset_of(block, k, [&](Mask sub) { ranks.push_back(colex_rank(sub, binom)); });
        for (std::size_t i = 0; i < basis.size(); ++i) {
            if (basis[i].points() != design.points || basis[i].degree() != k)
                throw Error(ErrorKind::DimensionMismatch, "basis functions must share n and k");
            const auto& values = basis[i].values();
            std::int64_t s = 0;
            for (auto r : ranks) s += values[r];
            sums[i] += s;
        }
    }
    return {sums.begin(), sums.end()};
}

bool harmonic_design_check(const SupportDesign& design, std::size_t t, const HarmonicLimits& limits) {
    if (t > design.block_size)
        throw Error(ErrorKind::InvalidArgument, "t = " + std::to_string(t) + " exceeds the block size " +
                                                    std::to_string(design.block_size));
    const std::size_t top = std::min(t, design.points / 2);
    for (std::size_t j = 1; j <= top; ++j) {
        const auto sums = harmonic_block_sums(design, harm_basis(design.points, j, limits));
        if (std::any_of(sums.begin(), sums.end(), [](const BigInt& s) { return s != 0; })) return false;
    }
    return true;
}

bool harmonic_design_check(const LinearCode& code, std::size_t weight, std::size_t t, const HarmonicLimits& limits,
                           const EnumerationOptions& options) {
    return harmonic_design_check(support_design(code, weight, options), t, limits);
}

std::vector<std::vector<Rational>> forced_relations(std::size_t n, std::size_t k, unsigned p,
                                                    const std::vector<std::size_t>& weights,
                                                    const std::vector<std::size_t>& vanishing_y_powers) {
    if (2 * k > n) throw Error(ErrorKind::InvalidArgument, "forced_relations needs 2k <= n");
    const std::size_t degree = n - 2 * k;
    std::vector<HomogeneousPolynomial> terms;
    for (auto w : weights) {
        if (w < k || w + k > n)
            throw Error(ErrorKind::InvalidArgument, "weight " + std::to_string(w) + " outside [k, n-k]");
        terms.push_back(macwilliams_term(p, n - w - k, w - k));
    }
    RationalMatrix system(vanishing_y_powers.size(), terms.size());
    for (std::size_t r = 0; r < vanishing_y_powers.size(); ++r) {
        if (vanishing_y_powers[r] > degree) throw Error(ErrorKind::InvalidArgument, "monomial outside the degree");
        for (std::size_t c = 0; c < terms.size(); ++c) system(r, c) = Rational(terms[c].coeff(vanishing_y_powers[r]));
    }
    return nullspace_basis(system);
}

}  // namespace amdesign
