#include "doctest.h"

#include "amdesign/am.hpp"
#include "amdesign/criteria.hpp"
#include "amdesign/design.hpp"
#include "amdesign/error.hpp"
#include "oracles.hpp"

#include <random>

using namespace amdesign;

TEST_CASE("criterion sums by hand") {
    const CriterionParams golay_dual{11, 4, {6}, 3};
    CHECK(golay_dual.alpha(0) == 0);
    CHECK(golay_dual.beta(0) == 1);
    CHECK(criterion_sum(1, golay_dual, 0) == 1);
    CHECK(criterion_sum(1, golay_dual, 1) == -1);
    CHECK(criterion_sum(1, golay_dual, 2) == 0);

    const CriterionParams golay{11, 4, {5, 6}, 3};
    CHECK(criterion_sum(2, golay, 1) == 3);
}

TEST_CASE("criterion argument checks") {
    const CriterionParams flat{12, 2, {4, 6, 6}, 3};
    try {
        criterion_sum(3, flat, 1);
        FAIL("expected DegenerateDenominator");
    } catch (const Error& e) {
        CHECK(e.kind() == ErrorKind::DegenerateDenominator);
    }
    CHECK_THROWS_AS(criterion_sum(4, flat, 1), Error);
    CHECK_THROWS_AS(criterion_sum(2, CriterionParams{11, 4, {6}, 3}, 0), Error);
}

TEST_CASE("property: sums equal generating-function coefficients") {
    std::mt19937 rng(2718);
    for (int trial = 0; trial < 60; ++trial) {
        const std::size_t n = 6 + rng() % 15;
        const std::size_t t = rng() % 5;
        std::set<std::size_t> ws;
        while (ws.size() < 3) ws.insert(1 + rng() % n);
        const std::vector<std::size_t> d(ws.begin(), ws.end());
        const unsigned q = trial % 3 == 0 ? 2 : 3;
        const CriterionParams params{n, t, d, q};
        for (std::uint64_t w = 0; w <= n; ++w) {
            std::vector<Rational> s;
            for (std::size_t l = 0; l < 3; ++l)
                s.push_back(oracle::generating_coefficient(params.alpha(l), params.beta(l), w, q));
            CHECK(criterion_sum(1, params, w) == s[0]);
            CHECK(criterion_sum(2, params, w) == s[0] - s[1]);
            const Rational d1(d[0]), d2(d[1]), d3(d[2]);
            CHECK(criterion_sum(3, params, w) ==
                  s[0] - (d3 - d1) / (d3 - d2) * s[1] + (d2 - d1) / (d3 - d2) * s[2]);
        }
        CHECK(params.degenerate(3) == (params.alpha(2) < 0 || params.beta(0) < 0));
        for (std::size_t l = 0; l < 3; ++l)
            CHECK(params.alpha(l) + params.beta(l) == static_cast<std::int64_t>(n) - 2 * static_cast<std::int64_t>(t + 1));
    }
}

TEST_CASE("dual Golay scan") {
    const auto code = dual(construct_golay());
    const auto r = scan_criterion(code);
    CHECK(r.case_number == 1);
    CHECK(r.alpha == std::vector<std::int64_t>{0});
    CHECK(r.beta == std::vector<std::int64_t>{1});
    CHECK(r.roots == std::vector<std::size_t>{2, 3, 4, 5, 6, 7, 8, 9, 10, 11});
    CHECK(r.actionable == std::vector<std::size_t>{8, 9, 11});
    REQUIRE(r.outcomes.size() == 3);
    const auto dual_code = dual(code);
    for (const auto& o : r.outcomes) {
        const auto design = support_design(dual_code, o.weight);
        CHECK(o.is_design == is_t_design(design, 5).is_design);
        CHECK(o.complete == is_complete_design(design));
        CHECK(o.blocks == design.blocks.size());
    }
    CHECK_FALSE(r.anomaly);
}

TEST_CASE("scan needs a small AM window") {
    std::mt19937 rng(4);
    int seen = 0;
    for (int trial = 0; trial < 200 && seen < 5; ++trial) {
        const LinearCode code(oracle::random_full_rank(rng, 3, 8, 3));
        const auto am = am_condition(code);
        if (am.t && am.d_dual - *am.t <= 3) continue;
        ++seen;
        try {
            scan_criterion(code);
            FAIL("expected WrongCase");
        } catch (const Error& e) {
            CHECK(e.kind() == ErrorKind::WrongCase);
        }
    }
    CHECK(seen > 0);
}

TEST_CASE("enumerator identities on the fixtures") {
    const auto two = check_enumerator_identity(dual(construct_golay()));
    CHECK(two.variant == IdentityVariant::TwoWeight);
    CHECK(two.lhs == 243);
    CHECK(two.rhs == 243);
    CHECK(two.holds);
    CHECK(two.applicable);

    const auto three = check_enumerator_identity(construct_extended_golay());
    CHECK(three.variant == IdentityVariant::ThreeWeightFullLength);
    CHECK(three.lhs == 729);
    CHECK(three.rhs == 729);
    CHECK(three.holds);
    CHECK(three.applicable);
}

TEST_CASE("identity hypothesis gate") {
    // two weights, but the dual has a weight-2 word
    const LinearCode code(Matrix({{1, 1, 0, 0}, {0, 0, 1, 1}}, 3));
    const auto r = check_enumerator_identity(code);
    CHECK_FALSE(r.applicable);
    CHECK(r.required_d_dual == 5);
}

TEST_CASE("diophantine scan") {
    CHECK(sphere_size(11, 2, 3) == 243);
    CHECK(sphere_size(3, 1, 2) == 4);
    const std::vector<DiophantineSolution> two{{1, 1}, {2, 2}, {11, 5}};
    CHECK(diophantine_scan(3, 2, 10000) == two);
    const auto small = diophantine_scan(3, 3, 500);
    const auto large = diophantine_scan(3, 3, 5000);
    REQUIRE(small.size() <= large.size());
    CHECK(std::equal(small.begin(), small.end(), large.begin()));
    const auto q2 = diophantine_scan(2, 1, 3);
    CHECK(std::find(q2.begin(), q2.end(), DiophantineSolution{3, 2}) != q2.end());
}
