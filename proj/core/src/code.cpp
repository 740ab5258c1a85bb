#include "amdesign/code.hpp"

#include "amdesign/error.hpp"
#include "amdesign/exact.hpp"

#include <algorithm>
#include <limits>
#include <thread>

namespace amdesign {

LinearCode::LinearCode(Matrix generator, std::string name) : generator_(std::move(generator)), name_(std::move(name)) {
    if (generator_.rows() == 0 || generator_.cols() == 0)
        throw Error(ErrorKind::InvalidArgument, "a code needs n >= k >= 1");
    const auto r = rank(generator_);
    if (r != generator_.rows())
        throw Error(ErrorKind::RankDeficient, "generator rows are dependent: rank " + std::to_string(r) + " < k = " +
                                                  std::to_string(generator_.rows()));
}

std::optional<std::uint64_t> LinearCode::size() const { return checked_pow(modulus(), dimension()); }

void LinearCode::encode(std::span<const std::uint8_t> message, std::span<std::uint8_t> out) const {
    if (message.size() != dimension() || out.size() != length())
        throw Error(ErrorKind::DimensionMismatch, "message/codeword length mismatch");
    const unsigned p = modulus();
    for (std::size_t c = 0; c < length(); ++c) {
        unsigned s = 0;
        for (std::size_t r = 0; r < dimension(); ++r) s += message[r] * generator_(r, c);
        out[c] = static_cast<std::uint8_t>(s % p);
    }
}

std::uint64_t require_within_budget(const LinearCode& code, std::uint64_t budget) {
    const auto size = code.size();
    if (!size || *size > budget)
        throw Error(ErrorKind::BudgetExceeded,
                    std::to_string(code.modulus()) + "^" + std::to_string(code.dimension()) +
                        " codewords exceed the enumeration budget of " + std::to_string(budget));
    return *size;
}

CodewordCursor::CodewordCursor(const LinearCode& code, std::span<const std::uint8_t> prefix)
    : code_(&code), fixed_(prefix.size()), message_(code.dimension(), 0), word_(code.length(), 0) {
    if (prefix.size() > code.dimension()) throw Error(ErrorKind::DimensionMismatch, "prefix longer than k");
    std::copy(prefix.begin(), prefix.end(), message_.begin());
    code.encode(message_, word_);
    weight_ = static_cast<std::size_t>(std::count_if(word_.begin(), word_.end(), [](auto v) { return v != 0; }));
}

void CodewordCursor::add_row(std::size_t r) {
    const unsigned p = code_->modulus();
    const auto row = code_->generator().row(r);
    for (std::size_t c = 0; c < word_.size(); ++c) {
        if (row[c] == 0) continue;
        const std::uint8_t before = word_[c];
        const auto after = static_cast<std::uint8_t>((before + row[c]) % p);
        word_[c] = after;
        weight_ += static_cast<std::size_t>(after != 0) - static_cast<std::size_t>(before != 0);
    }
}

bool CodewordCursor::next() {
    const unsigned p = code_->modulus();
    // Each digit increment adds its row once; wrapping p-1 -> 0 also adds it once.
    for (std::size_t i = message_.size(); i-- > fixed_;) {
        add_row(i);
        message_[i] = static_cast<std::uint8_t>((message_[i] + 1) % p);
        if (message_[i] != 0) return true;
    }
    return false;
}

WeightDistribution::WeightDistribution(std::vector<std::uint64_t> counts) : counts_(std::move(counts)) {}

std::uint64_t WeightDistribution::total() const {
    std::uint64_t s = 0;
    for (auto c : counts_) s = checked_add(s, c);
    return s;
}

std::vector<std::size_t> WeightDistribution::nonzero_weights() const {
    std::vector<std::size_t> out;
    for (std::size_t u = 1; u < counts_.size(); ++u)
        if (counts_[u] != 0) out.push_back(u);
    return out;
}

std::optional<std::size_t> WeightDistribution::min_distance() const {
    for (std::size_t u = 1; u < counts_.size(); ++u)
        if (counts_[u] != 0) return u;
    return std::nullopt;
}

HomogeneousPolynomial WeightDistribution::enumerator() const {
    HomogeneousPolynomial w(length());
    for (std::size_t u = 0; u < counts_.size(); ++u) w.coeff(u) = counts_[u];
    return w;
}

WeightDistribution weight_distribution(const LinearCode& code, const EnumerationOptions& options) {
    const std::uint64_t size = require_within_budget(code, options.budget);
    const std::size_t n = code.length();
    const unsigned p = code.modulus();

    unsigned threads = options.threads != 0 ? options.threads : std::max(1u, std::thread::hardware_concurrency());
    // Only split large codes; each chunk fixes the leading message digit.
    if (size < 100'000 || code.dimension() < 2) threads = 1;
    threads = std::min<unsigned>(threads, p);

    std::vector<std::vector<std::uint64_t>> partial(p, std::vector<std::uint64_t>(n + 1, 0));
    auto run_chunk = [&](unsigned digit) {
        const std::uint8_t prefix[1] = {static_cast<std::uint8_t>(digit)};
        CodewordCursor cursor(code, prefix);
        auto& counts = partial[digit];
        do {
            ++counts[cursor.weight()];
        } while (cursor.next());
    };

    if (threads <= 1) {
        CodewordCursor cursor(code);
        auto& counts = partial[0];
        do {
            ++counts[cursor.weight()];
        } while (cursor.next());
    } else {
        std::vector<std::jthread> workers;
        for (unsigned t = 0; t < threads; ++t) {
            workers.emplace_back([&, t] {
                for (unsigned digit = t; digit < p; digit += threads) run_chunk(digit);
            });
        }
    }

    std::vector<std::uint64_t> total(n + 1, 0);
    for (const auto& part : partial)
        for (std::size_t u = 0; u <= n; ++u) total[u] += part[u];
    return WeightDistribution(std::move(total));
}

LinearCode dual(const LinearCode& code) {
    if (code.dimension() == code.length())
        throw Error(ErrorKind::InvalidArgument, "the dual of the full space is the zero code");
    std::string name = code.name().empty() ? std::string{} : code.name() + "^perp";
    return LinearCode(nullspace_basis(code.generator()), std::move(name));
}

WeightDistribution macwilliams_dual_enumerator(const WeightDistribution& w, std::size_t k, unsigned p) {
    require_supported_modulus(p);
    const HomogeneousPolynomial transformed = w.enumerator().macwilliams_substitute(p);
    const BigInt size = big_pow(p, k);
    std::vector<std::uint64_t> counts(w.length() + 1, 0);
    for (std::size_t u = 0; u <= w.length(); ++u) {
        BigInt q, r;
        boost::multiprecision::divide_qr(transformed.coeff(u), size, q, r);
        if (r != 0 || q < 0 || q > std::numeric_limits<std::uint64_t>::max())
            throw Error(ErrorKind::NonIntegerCoefficient,
                        "transformed coefficient at weight " + std::to_string(u) + " is " +
                            to_string(make_rational(transformed.coeff(u), size)) +
                            "; the input is not the enumerator of a dimension-" + std::to_string(k) + " code");
        counts[u] = q.convert_to<std::uint64_t>();
    }
    return WeightDistribution(std::move(counts));
}

bool same_code(const LinearCode& a, const LinearCode& b) {
    if (a.modulus() != b.modulus() || a.length() != b.length() || a.dimension() != b.dimension()) return false;
    return rref(a.generator()).reduced == rref(b.generator()).reduced;
}

}  // namespace amdesign
