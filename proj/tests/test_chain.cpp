#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "chain.hpp"
#include "error.hpp"
#include "helpers.hpp"

using namespace streamis;

namespace {

JumpInstance random_jump(std::mt19937_64& rng, int parties, int length) {
    JumpInstance j;
    j.parties = parties;
    j.length = length;
    j.start = std::uniform_int_distribution<int>(1, length)(rng);
    for (int t = 2; t <= parties; ++t) {
        std::vector<int> table(static_cast<std::size_t>(length));
        for (int& v : table)
            v = t == parties ? std::uniform_int_distribution<int>(0, 1)(rng)
                             : std::uniform_int_distribution<int>(1, length)(rng);
        j.tables.push_back(std::move(table));
    }
    return j;
}

}  // namespace

TEST_CASE("two parties degenerate to plain index") {
    JumpInstance j;
    j.parties = 2;
    j.length = 4;
    j.start = 3;
    j.tables = {{1, 0, 1, 0}};  // f_2 is Boolean
    ChainInstance c = jump_to_chain(j);
    CHECK(c.parties == 2);
    CHECK(c.indices == std::vector<int>{3});
    CHECK(c.vectors[0] == std::vector<std::uint8_t>{1, 0, 1, 0});
    CHECK(c.answer == 1);
}

TEST_CASE("three parties with identity and parity") {
    JumpInstance j;
    j.parties = 3;
    j.length = 4;
    j.tables.push_back({1, 2, 3, 4});  // f_2 identity
    j.tables.push_back({1, 0, 1, 0});  // f_3 = parity of index (odd -> 1)
    for (int alpha = 1; alpha <= 4; ++alpha) {
        j.start = alpha;
        ChainInstance c = jump_to_chain(j);
        CHECK(c.promise_holds());
        CHECK(c.answer == (alpha % 2 == 1 ? 1 : 0));
        CHECK(c.indices[0] == alpha);      // sigma_1 = alpha
        CHECK(c.indices[1] == alpha);      // sigma_2 = f_2(alpha)
        // X^(1)[x] = f_{2:3}(x) = parity of x; X^(2)[x] = f_3(x)
        CHECK(c.vectors[0] == c.vectors[1]);
    }
}

TEST_CASE("random instances satisfy the promise with z = f_{2:k}(alpha)") {
    std::mt19937_64 rng(2718);
    for (int trial = 0; trial < 200; ++trial) {
        int parties = std::uniform_int_distribution<int>(2, 6)(rng);
        int length = std::uniform_int_distribution<int>(1, 32)(rng);
        JumpInstance j = random_jump(rng, parties, length);
        ChainInstance c = jump_to_chain(j);
        CHECK(c.promise_holds());
        CHECK(c.answer == jump_compose(j, 2, parties, j.start));
        // every vector entry is the suffix composition at that index
        for (int i = 1; i <= parties - 1; ++i)
            for (int x = 1; x <= length; ++x)
                CHECK(c.vectors[static_cast<std::size_t>(i - 1)][static_cast<std::size_t>(x - 1)] ==
                      jump_compose(j, i + 1, parties, x));
    }
}

TEST_CASE("chain instance validation") {
    CHECK_THROWS_AS(make_chain_instance(3, 2, {{1, 0}, {0, 1}}, {1, 1}), Error);  // promise breaks
    auto ok = make_chain_instance(3, 2, {{1, 0}, {1, 1}}, {1, 2});
    CHECK(ok.answer == 1);
    CHECK_THROWS_AS(make_chain_instance(3, 2, {{1, 0}}, {1, 1}), Error);       // missing vector
    CHECK_THROWS_AS(make_chain_instance(3, 2, {{1, 0}, {1, 1}}, {1, 3}), Error);  // sigma range
    auto violating = make_chain_instance_unchecked(3, 2, {{1, 0}, {0, 1}}, {1, 1}, 1);
    CHECK_FALSE(violating.promise_holds());
}

TEST_CASE("jump validation") {
    JumpInstance j;
    j.parties = 3;
    j.length = 2;
    j.start = 1;
    j.tables = {{1, 2}, {0, 2}};  // final table must be Boolean
    CHECK_THROWS_AS(validate_jump(j), Error);
    j.tables = {{1, 3}, {0, 1}};  // middle table out of range
    CHECK_THROWS_AS(validate_jump(j), Error);
    j.tables = {{1, 2}, {0, 1}};
    CHECK_NOTHROW(validate_jump(j));
}
