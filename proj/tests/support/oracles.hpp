#pragma once

// Brute-force reference computations used only by the tests. Nothing here
// goes through the library's enumeration cursor, subset ranking or
// harmonic machinery.

#include "amdesign/code.hpp"
#include "amdesign/exact.hpp"

#include <algorithm>
#include <cstdint>
#include <map>
#include <random>
#include <set>
#include <vector>

namespace oracle {

using Word = std::vector<int>;

/// Every codeword, from sum_r m_r G_r over all messages (explicit base-p counter).
inline std::vector<Word> all_codewords(const amdesign::LinearCode& code) {
    const std::size_t n = code.length();
    const std::size_t k = code.dimension();
    const int p = static_cast<int>(code.modulus());
    std::uint64_t total = 1;
    for (std::size_t i = 0; i < k; ++i) total *= static_cast<std::uint64_t>(p);
    std::vector<Word> words;
    words.reserve(total);
    for (std::uint64_t index = 0; index < total; ++index) {
        std::uint64_t rest = index;
        Word w(n, 0);
        for (std::size_t r = k; r-- > 0;) {
            const int m = static_cast<int>(rest % static_cast<std::uint64_t>(p));
            rest /= static_cast<std::uint64_t>(p);
            for (std::size_t c = 0; c < n; ++c) w[c] = (w[c] + m * code.generator()(r, c)) % p;
        }
        words.push_back(std::move(w));
    }
    return words;
}

inline int weight(const Word& w) {
    return static_cast<int>(std::count_if(w.begin(), w.end(), [](int v) { return v != 0; }));
}

inline std::map<int, std::uint64_t> distribution(const std::vector<Word>& words) {
    std::map<int, std::uint64_t> d;
    for (const auto& w : words) ++d[weight(w)];
    return d;
}

inline std::map<int, std::uint64_t> distribution(const amdesign::LinearCode& code) {
    return distribution(all_codewords(code));
}

inline std::map<int, std::uint64_t> as_map(const amdesign::WeightDistribution& w) {
    std::map<int, std::uint64_t> d;
    for (std::size_t u = 0; u <= w.length(); ++u)
        if (w.count(u) != 0) d[static_cast<int>(u)] = w.count(u);
    return d;
}

inline std::set<int> support(const Word& w) {
    std::set<int> s;
    for (std::size_t i = 0; i < w.size(); ++i)
        if (w[i] != 0) s.insert(static_cast<int>(i));
    return s;
}

/// Blocks (as sorted point sets) of the weight-w supports.
inline std::vector<std::set<int>> blocks_of_weight(const amdesign::LinearCode& code, int w) {
    std::vector<std::set<int>> blocks;
    for (const auto& word : all_codewords(code))
        if (weight(word) == w) blocks.push_back(support(word));
    return blocks;
}

/// All t-subsets of {0..n-1} as sorted vectors, via recursion.
inline void subsets(int n, int t, int start, std::vector<int>& cur, std::vector<std::vector<int>>& out) {
    if (static_cast<int>(cur.size()) == t) {
        out.push_back(cur);
        return;
    }
    for (int i = start; i < n; ++i) {
        cur.push_back(i);
        subsets(n, t, i + 1, cur, out);
        cur.pop_back();
    }
}

inline std::vector<std::vector<int>> subsets(int n, int t) {
    std::vector<std::vector<int>> out;
    std::vector<int> cur;
    subsets(n, t, 0, cur, out);
    return out;
}

/// Count, for every t-subset, the blocks containing it; design iff all equal.
inline bool is_design(const std::vector<std::set<int>>& blocks, int n, int t, std::uint64_t* lambda = nullptr) {
    std::set<std::uint64_t> seen;
    for (const auto& s : subsets(n, t)) {
        std::uint64_t c = 0;
        for (const auto& b : blocks)
            if (std::all_of(s.begin(), s.end(), [&](int x) { return b.count(x) != 0; })) ++c;
        seen.insert(c);
        if (seen.size() > 1) return false;
    }
    if (lambda != nullptr) *lambda = *seen.begin();
    return true;
}

/// Coefficient of z^w in prod_l (1 + (q-1) z)^{a_l} (1 - z)^{b_l} scaled by factors,
/// via truncated power series (negative exponents by series inversion).
class Series {
public:
    explicit Series(std::size_t terms) : c_(terms, amdesign::Rational(0)) { c_[0] = 1; }

    static Series linear(std::size_t terms, std::int64_t slope) {
        Series s(terms);
        if (terms > 1) s.c_[1] = slope;
        return s;
    }

    Series operator*(const Series& o) const {
        Series r(c_.size());
        r.c_[0] = 0;
        for (std::size_t i = 0; i < c_.size(); ++i)
            for (std::size_t j = 0; i + j < c_.size(); ++j) r.c_[i + j] += c_[i] * o.c_[j];
        return r;
    }

    // 1 / s for s with constant term 1
    Series inverse() const {
        Series r(c_.size());
        for (std::size_t i = 1; i < c_.size(); ++i) {
            amdesign::Rational acc = 0;
            for (std::size_t j = 1; j <= i; ++j) acc += c_[j] * r.c_[i - j];
            r.c_[i] = -acc;
        }
        return r;
    }

    Series pow(std::int64_t e) const {
        Series base = e < 0 ? inverse() : *this;
        Series r(c_.size());
        for (std::int64_t i = 0; i < (e < 0 ? -e : e); ++i) r = r * base;
        return r;
    }

    const amdesign::Rational& operator[](std::size_t i) const { return c_[i]; }

private:
    std::vector<amdesign::Rational> c_;
};

inline amdesign::Rational generating_coefficient(std::int64_t alpha, std::int64_t beta, std::size_t w,
                                                 std::int64_t q = 3) {
    const std::size_t terms = w + 1;
    const Series s = Series::linear(terms, q - 1).pow(alpha) * Series::linear(terms, -1).pow(beta);
    return s[w];
}

/// Random k x n matrix over GF(p) of full row rank.
inline amdesign::Matrix random_full_rank(std::mt19937& rng, std::size_t k, std::size_t n, unsigned p) {
    std::uniform_int_distribution<unsigned> digit(0, p - 1);
    while (true) {
        amdesign::Matrix m(k, n, p);
        for (std::size_t r = 0; r < k; ++r)
            for (std::size_t c = 0; c < n; ++c) m.set(r, c, digit(rng));
        if (amdesign::rank(m) == k) return m;
    }
}

}  // namespace oracle
