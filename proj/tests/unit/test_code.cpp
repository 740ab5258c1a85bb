#include "doctest.h"

#include "amdesign/code.hpp"
#include "amdesign/error.hpp"
#include "oracles.hpp"

#include <random>

using namespace amdesign;

namespace {

LinearCode repetition(std::size_t n, unsigned p) {
    return LinearCode(Matrix(std::vector<std::vector<int>>{std::vector<int>(n, 1)}, p));
}

ErrorKind kind_of(auto&& fn) {
    try {
        fn();
    } catch (const Error& e) {
        return e.kind();
    }
    FAIL("no error thrown");
    return ErrorKind::InvalidArgument;
}

}  // namespace

TEST_CASE("construction preconditions") {
    CHECK(kind_of([] { LinearCode(Matrix({{1, 1, 0}, {2, 2, 0}}, 3)); }) == ErrorKind::RankDeficient);
    CHECK(kind_of([] { LinearCode(Matrix(0, 4, 3)); }) == ErrorKind::InvalidArgument);
    CHECK(kind_of([] { dual(LinearCode(Matrix::identity(3, 3))); }) == ErrorKind::InvalidArgument);
}

TEST_CASE("repetition codes") {
    const auto wd = weight_distribution(repetition(5, 3));
    CHECK(wd.counts() == std::vector<std::uint64_t>{1, 0, 0, 0, 0, 2});
    CHECK(wd.min_distance() == 5);
    const auto d = dual(repetition(5, 3));
    CHECK(d.dimension() == 4);
    CHECK(weight_distribution(d).total() == 81);
}

TEST_CASE("Golay fixtures") {
    const auto g11 = construct_golay();
    CHECK(g11.length() == 11);
    CHECK(g11.dimension() == 6);
    CHECK(g11.size() == 729);
    const auto w11 = weight_distribution(g11);
    CHECK(oracle::as_map(w11) == std::map<int, std::uint64_t>{{0, 1}, {5, 132}, {6, 132}, {8, 330}, {9, 110}, {11, 24}});
    CHECK(w11.min_distance() == 5);

    const auto g12 = construct_extended_golay();
    std::size_t words = 0;
    for_each_codeword(g12, {}, [&](auto, std::size_t) { ++words; });
    CHECK(words == 729);
    const auto w12 = weight_distribution(g12);
    CHECK(oracle::as_map(w12) == std::map<int, std::uint64_t>{{0, 1}, {6, 264}, {9, 440}, {12, 24}});
    CHECK(w12.nonzero_weights() == std::vector<std::size_t>{6, 9, 12});

    const auto d11 = dual(g11);
    CHECK(d11.dimension() == 5);
    CHECK(oracle::as_map(weight_distribution(d11)) == std::map<int, std::uint64_t>{{0, 1}, {6, 132}, {9, 110}});
    // dual of the [11,5,6] code is an [11,6,5] code, and it is the Golay code again
    const auto back = dual(d11);
    CHECK(back.dimension() == 6);
    CHECK(weight_distribution(back).min_distance() == 5);
    CHECK(same_code(back, g11));

    CHECK(same_code(dual(g12), g12));
}

TEST_CASE("budget is enforced") {
    EnumerationOptions tight;
    tight.budget = 100;
    try {
        weight_distribution(construct_golay(), tight);
        FAIL("expected BudgetExceeded");
    } catch (const Error& e) {
        CHECK(e.kind() == ErrorKind::BudgetExceeded);
    }
    tight.budget = 729;
    CHECK(weight_distribution(construct_golay(), tight).total() == 729);
}

TEST_CASE("cursor visits messages in lexicographic order") {
    const auto code = LinearCode(Matrix({{1, 0, 2, 1}, {0, 1, 1, 1}}, 3));
    CodewordCursor cur(code);
    std::vector<std::vector<std::uint8_t>> messages;
    do {
        messages.emplace_back(cur.message().begin(), cur.message().end());
        std::vector<std::uint8_t> expect(4, 0);
        code.encode(cur.message(), expect);
        CHECK(std::equal(expect.begin(), expect.end(), cur.word().begin()));
    } while (cur.next());
    REQUIRE(messages.size() == 9);
    for (std::size_t i = 1; i < messages.size(); ++i) CHECK(messages[i - 1] < messages[i]);
}

TEST_CASE("MacWilliams on fixtures") {
    const auto g11 = construct_golay();
    CHECK(macwilliams_dual_enumerator(weight_distribution(g11), 6, 3) == weight_distribution(dual(g11)));
    const auto g12 = construct_extended_golay();
    CHECK(macwilliams_dual_enumerator(weight_distribution(g12), 6, 3) == weight_distribution(g12));
}

TEST_CASE("MacWilliams of the zero code is the full space") {
    const WeightDistribution zero(std::vector<std::uint64_t>{1, 0, 0, 0});
    const auto full = macwilliams_dual_enumerator(zero, 0, 3);
    CHECK(full.counts() == std::vector<std::uint64_t>{1, 6, 12, 8});
}

TEST_CASE("MacWilliams rejects impossible input") {
    const WeightDistribution bogus(std::vector<std::uint64_t>{1, 1, 0, 0});
    try {
        macwilliams_dual_enumerator(bogus, 1, 3);
        FAIL("expected NonIntegerCoefficient");
    } catch (const Error& e) {
        CHECK(e.kind() == ErrorKind::NonIntegerCoefficient);
    }
}

TEST_CASE("property: random codes against brute force") {
    std::mt19937 rng(99);
    for (unsigned p : {2u, 3u, 5u}) {
        for (int trial = 0; trial < 25; ++trial) {
            const std::size_t n = 3 + rng() % 8;
            const std::size_t k = 1 + rng() % (p == 5 ? std::min<std::size_t>(n - 1, 4) : n - 1);
            const LinearCode code(oracle::random_full_rank(rng, k, n, p));
            const auto wd = weight_distribution(code);
            CHECK(oracle::as_map(wd) == oracle::distribution(code));

            std::uint64_t pk = 1;
            for (std::size_t i = 0; i < k; ++i) pk *= p;
            CHECK(wd.total() == pk);
            CHECK(wd.count(0) == 1);
            if (auto d = wd.min_distance()) CHECK(*d <= n - k + 1);

            const auto d = dual(code);
            CHECK(d.dimension() == n - k);
            CHECK(is_zero(multiply_transpose(code.generator(), d.generator())));
            const auto dwd = weight_distribution(d);
            CHECK(macwilliams_dual_enumerator(wd, k, p) == dwd);
            CHECK(macwilliams_dual_enumerator(dwd, n - k, p) == wd);
            CHECK(same_code(dual(d), code));
        }
    }
}

TEST_CASE("threaded and single-threaded enumeration agree") {
    EnumerationOptions one;
    one.threads = 1;
    EnumerationOptions four;
    four.threads = 4;
    const auto g = construct_extended_golay();
    CHECK(weight_distribution(g, one) == weight_distribution(g, four));
}
