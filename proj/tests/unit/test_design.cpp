#include "doctest.h"

#include "amdesign/design.hpp"
#include "amdesign/error.hpp"
#include "oracles.hpp"

#include <random>

using namespace amdesign;

namespace {

std::vector<std::set<int>> as_sets(const SupportDesign& d) {
    std::vector<std::set<int>> out;
    for (Mask b : d.blocks) {
        std::set<int> s;
        for (auto x : to_points(b)) s.insert(static_cast<int>(x));
        out.push_back(s);
    }
    return out;
}

}  // namespace

TEST_CASE("extended Golay support designs") {
    const auto g = construct_extended_golay();
    const auto d12 = support_design(g, 12);
    CHECK(d12.blocks.size() == 24);
    for (Mask b : d12.blocks) CHECK(b == full_mask(12));
    CHECK(is_complete_design(d12));

    const auto d6 = support_design(g, 6);
    CHECK(d6.blocks.size() == 264);
    const auto v5 = is_t_design(d6, 5);
    CHECK(v5.is_design);
    CHECK(v5.lambda == Rational(2));
    const auto v6 = is_t_design(d6, 6);
    CHECK_FALSE(v6.is_design);
    REQUIRE(v6.witness.has_value());
    CHECK(v6.witness->first == std::vector<std::size_t>{0, 1, 2, 3, 4, 5});
    CHECK(v6.witness->first_count != v6.witness->second_count);
    CHECK_FALSE(v6.lambda.has_value());
}

TEST_CASE("dual Golay weight-6 design stops at strength 4") {
    const auto d = dual(construct_golay());
    const auto d6 = support_design(d, 6);
    CHECK(is_t_design(d6, 4).is_design);
    CHECK_FALSE(is_t_design(d6, 5).is_design);
    // weight 9: every 9-subset is covered by exactly one pair {c, 2c}
    const auto d9 = support_design(d, 9);
    CHECK(d9.blocks.size() == 110);
    CHECK(is_complete_design(d9));
}

TEST_CASE("argument checks") {
    const auto g = construct_golay();
    try {
        support_design(g, 7);
        FAIL("expected EmptyWeight");
    } catch (const Error& e) {
        CHECK(e.kind() == ErrorKind::EmptyWeight);
    }
    CHECK_THROWS_AS(is_t_design(support_design(g, 5), 6), Error);
}

TEST_CASE("strength tables") {
    const auto s12 = delta_and_s(construct_extended_golay());
    CHECK(s12.delta == 5);
    CHECK_FALSE(s12.delta_capped);
    const auto sd = delta_and_s(dual(construct_golay()));
    CHECK(sd.delta == 4);
    REQUIRE(sd.per_weight.size() == 2);
    CHECK(sd.per_weight[0].weight == 6);
    CHECK(sd.per_weight[0].strength == 4);

    // every block is the full point set: strength reaches min(w, probe) and is capped
    const auto rep = delta_and_s(LinearCode(Matrix({{1, 1, 1, 1, 1, 1, 1, 1, 1}}, 3)), 7);
    CHECK(rep.delta == 7);
    CHECK(rep.delta_capped);
}

TEST_CASE("property: verdicts match brute-force counting") {
    std::mt19937 rng(5);
    for (int trial = 0; trial < 30; ++trial) {
        const std::size_t n = 4 + rng() % 5;
        const std::size_t k = 1 + rng() % (n - 1);
        const LinearCode code(oracle::random_full_rank(rng, k, n, 3));
        for (const auto& design : support_designs(code)) {
            const auto blocks = as_sets(design);
            CHECK(blocks == oracle::blocks_of_weight(code, static_cast<int>(design.block_size)));
            // over GF(3), c and 2c share a support
            CHECK(design.blocks.size() % 2 == 0);
            bool previous = true;
            for (std::size_t t = 1; t <= design.block_size; ++t) {
                std::uint64_t lambda = 0;
                const bool expect = oracle::is_design(blocks, static_cast<int>(n), static_cast<int>(t), &lambda);
                const auto v = is_t_design(design, t);
                CHECK(v.is_design == expect);
                if (expect) {
                    CHECK(v.lambda == Rational(lambda));
                    CHECK_FALSE(v.witness.has_value());
                } else {
                    REQUIRE(v.witness.has_value());
                    CHECK(v.witness->first_count != v.witness->second_count);
                }
                if (v.is_design)
                    CHECK(*v.lambda * binomial(n, t) == design.blocks.size() * binomial(design.block_size, t));
                // a t-design is a t'-design for t' < t
                if (v.is_design) CHECK(previous);
                previous = v.is_design;
            }
        }
    }
}

TEST_CASE("subset counts sum to b C(w, t)") {
    const auto d = support_design(construct_golay(), 8);
    for (std::size_t t = 1; t <= 4; ++t) {
        const auto counts = subset_block_counts(d, t);
        CHECK(counts.size() == binomial(11, t));
        std::uint64_t sum = 0;
        for (auto c : counts) sum += c;
        CHECK(sum == d.blocks.size() * binomial(8, t));
    }
}
