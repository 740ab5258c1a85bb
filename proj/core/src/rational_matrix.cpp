#include "amdesign/rational_matrix.hpp"

#include <boost/integer/common_factor_rt.hpp>

namespace amdesign {

RationalMatrix::RationalMatrix(std::size_t rows, std::size_t cols)
    : rows_(rows), cols_(cols), data_(rows * cols, Rational(0)) {}

RationalRref rref(const RationalMatrix& m) {
    const std::size_t rows = m.rows();
    const std::size_t cols = m.cols();

    // Clear denominators row by row.
    std::vector<BigInt> a(rows * cols);
    for (std::size_t r = 0; r < rows; ++r) {
        BigInt scale = 1;
        for (std::size_t c = 0; c < cols; ++c) {
            const BigInt den = boost::multiprecision::denominator(m(r, c));
            scale = scale / boost::multiprecision::gcd(scale, den) * den;
        }
        for (std::size_t c = 0; c < cols; ++c)
            a[r * cols + c] = boost::multiprecision::numerator(m(r, c)) * (scale / boost::multiprecision::denominator(m(r, c)));
    }

    // Bareiss elimination to row echelon form; every division is exact.
    std::vector<std::size_t> pivots;
    BigInt prev = 1;
    std::size_t pr = 0;
    for (std::size_t col = 0; col < cols && pr < rows; ++col) {
        std::size_t r = pr;
        while (r < rows && a[r * cols + col] == 0) ++r;
        if (r == rows) continue;
        if (r != pr)
            for (std::size_t c = 0; c < cols; ++c) std::swap(a[r * cols + c], a[pr * cols + c]);
        const BigInt pivot = a[pr * cols + col];
        for (std::size_t i = pr + 1; i < rows; ++i) {
            const BigInt factor = a[i * cols + col];
            for (std::size_t c = col; c < cols; ++c)
                a[i * cols + c] = (pivot * a[i * cols + c] - factor * a[pr * cols + c]) / prev;
            // Columns left of `col` in rows below the pivot are already zero.
        }
        prev = pivot;
        pivots.push_back(col);
        ++pr;
    }

    RationalRref out{RationalMatrix(rows, cols), pr, pivots};
    RationalMatrix& red = out.reduced;
    for (std::size_t i = 0; i < pr; ++i) {
        const BigInt& pivot = a[i * cols + pivots[i]];
        for (std::size_t c = 0; c < cols; ++c) red(i, c) = make_rational(a[i * cols + c], pivot);
    }
    for (std::size_t i = pr; i-- > 0;) {
        for (std::size_t above = 0; above < i; ++above) {
            const Rational factor = red(above, pivots[i]);
            if (factor == 0) continue;
            for (std::size_t c = pivots[i]; c < cols; ++c) red(above, c) -= factor * red(i, c);
        }
    }
    return out;
}

std::vector<std::vector<Rational>> nullspace_basis(const RationalMatrix& m) {
    const auto reduced = rref(m);
    std::vector<bool> is_pivot(m.cols(), false);
    for (auto c : reduced.pivot_columns) is_pivot[c] = true;
    std::vector<std::vector<Rational>> basis;
    for (std::size_t free = 0; free < m.cols(); ++free) {
        if (is_pivot[free]) continue;
        std::vector<Rational> v(m.cols(), Rational(0));
        v[free] = 1;
        for (std::size_t i = 0; i < reduced.rank; ++i) v[reduced.pivot_columns[i]] = -reduced.reduced(i, free);
        basis.push_back(std::move(v));
    }
    return basis;
}

}  // namespace amdesign
