#include "amdesign/code.hpp"

#include "amdesign/error.hpp"

#include <algorithm>
#include <array>
#include <stdexcept>
#include <vector>

namespace amdesign {

namespace {

constexpr unsigned kP = 3;
constexpr std::size_t kLength = 11;
constexpr std::size_t kExtDegree = 5;  // 3^5 - 1 = 242 = 2 * 11^2

// Polynomials over GF(3), lowest degree first.
using Poly = std::vector<unsigned>;

Poly poly_mod(Poly a, const Poly& m) {
    const std::size_t dm = m.size() - 1;  // m is monic
    for (std::size_t d = a.size(); d-- > dm;) {
        const unsigned c = a[d] % kP;
        if (c == 0) continue;
        for (std::size_t i = 0; i <= dm; ++i) a[d - dm + i] = (a[d - dm + i] + (kP - c) * m[i]) % kP;
    }
    a.resize(std::min(a.size(), dm));
    return a;
}

bool divides(const Poly& f, const Poly& m) {
    for (auto c : poly_mod(m, f))
        if (c != 0) return false;
    return true;
}

// Monic irreducible of degree 5: no monic factor of degree 1 or 2.
Poly find_irreducible() {
    for (unsigned code = 0; code < 243; ++code) {
        Poly m(kExtDegree + 1, 0);
        unsigned c = code;
        for (std::size_t i = 0; i < kExtDegree; ++i, c /= kP) m[i] = c % kP;
        m[kExtDegree] = 1;
        bool reducible = false;
        for (std::size_t deg = 1; deg <= 2 && !reducible; ++deg) {
            unsigned count = 1;
            for (std::size_t i = 0; i < deg; ++i) count *= kP;
            for (unsigned fc = 0; fc < count && !reducible; ++fc) {
                Poly f(deg + 1, 0);
                unsigned v = fc;
                for (std::size_t i = 0; i < deg; ++i, v /= kP) f[i] = v % kP;
                f[deg] = 1;
                reducible = divides(f, m);
            }
        }
        if (!reducible) return m;
    }
    throw std::logic_error("no irreducible quintic over GF(3)");
}

class ExtensionField {
public:
    using Element = std::array<unsigned, kExtDegree>;

    explicit ExtensionField(Poly modulus) : modulus_(std::move(modulus)) {}

    Element one() const { return {1, 0, 0, 0, 0}; }

    Element mul(const Element& a, const Element& b) const {
        Poly prod(2 * kExtDegree - 1, 0);
        for (std::size_t i = 0; i < kExtDegree; ++i)
            for (std::size_t j = 0; j < kExtDegree; ++j) prod[i + j] = (prod[i + j] + a[i] * b[j]) % kP;
        const Poly r = poly_mod(prod, modulus_);
        Element out{};
        for (std::size_t i = 0; i < r.size(); ++i) out[i] = r[i];
        return out;
    }

    Element pow(Element a, unsigned e) const {
        Element r = one();
        while (e != 0) {
            if (e & 1) r = mul(r, a);
            a = mul(a, a);
            e >>= 1;
        }
        return r;
    }

    static Element add(const Element& a, const Element& b) {
        Element out{};
        for (std::size_t i = 0; i < kExtDegree; ++i) out[i] = (a[i] + b[i]) % kP;
        return out;
    }

    static Element neg(const Element& a) {
        Element out{};
        for (std::size_t i = 0; i < kExtDegree; ++i) out[i] = (kP - a[i]) % kP;
        return out;
    }

private:
    Poly modulus_;
};

// Generator polynomial prod_{r in QR(11)} (x - beta^r) with beta of order 11.
Poly golay_generator_polynomial() {
    const ExtensionField field(find_irreducible());
    using Element = ExtensionField::Element;

    Element beta = field.one();
    for (unsigned code = 1; code < 243; ++code) {
        Element gamma{};
        unsigned c = code;
        for (std::size_t i = 0; i < kExtDegree; ++i, c /= kP) gamma[i] = c % kP;
        beta = field.pow(gamma, 22);
        if (beta != field.one()) break;
    }

    std::vector<unsigned> residues;
    for (unsigned i = 1; i < kLength; ++i) {
        const unsigned r = (i * i) % kLength;
        if (std::find(residues.begin(), residues.end(), r) == residues.end()) residues.push_back(r);
    }

    std::vector<Element> g{field.one()};
    for (unsigned r : residues) {
        const Element root = field.pow(beta, r);
        std::vector<Element> next(g.size() + 1, Element{});
        for (std::size_t i = 0; i < g.size(); ++i) {
            next[i + 1] = ExtensionField::add(next[i + 1], g[i]);
            next[i] = ExtensionField::add(next[i], ExtensionField::neg(field.mul(g[i], root)));
        }
        g = std::move(next);
    }

    Poly out;
    for (const auto& c : g) {
        for (std::size_t i = 1; i < kExtDegree; ++i)
            if (c[i] != 0) throw std::logic_error("QR generator polynomial left GF(3)");
        out.push_back(c[0]);
    }
    return out;
}

void require_min_distance(const LinearCode& code, std::size_t expected) {
    const auto d = weight_distribution(code, {.budget = kDefaultBudget, .threads = 1}).min_distance();
    if (!d || *d != expected)
        throw std::logic_error(code.name() + ": expected minimum distance " + std::to_string(expected));
}

}  // namespace

LinearCode construct_golay() {
    const Poly g = golay_generator_polynomial();
    const std::size_t k = kLength - (g.size() - 1);
    Matrix gen(k, kLength, kP);
    for (std::size_t r = 0; r < k; ++r)
        for (std::size_t i = 0; i < g.size(); ++i) gen.set(r, r + i, g[i]);
    LinearCode code(std::move(gen), "golay11");
    require_min_distance(code, 5);
    return code;
}

LinearCode construct_extended_golay() {
    const LinearCode base = construct_golay();
    const Matrix& g = base.generator();
    Matrix ext(g.rows(), g.cols() + 1, kP);
    for (std::size_t r = 0; r < g.rows(); ++r) {
        unsigned sum = 0;
        for (std::size_t c = 0; c < g.cols(); ++c) {
            ext.set(r, c, g(r, c));
            sum += g(r, c);
        }
        ext.set(r, g.cols(), (kP - sum % kP) % kP);
    }
    LinearCode code(std::move(ext), "golay12");
    require_min_distance(code, 6);
    return code;
}

}  // namespace amdesign
