#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "error.hpp"
#include "helpers.hpp"
#include "oracle.hpp"
#include "strips.hpp"

using namespace streamis;

TEST_CASE("strip assignment boundary cases") {
    const std::int64_t w = 2;
    PartitionShift origin{0, 0};
    auto key = strip_assign(make_ball2(1, 1, 1), origin, w);
    REQUIRE(key.has_value());
    CHECK(key->ix == 0);
    CHECK(key->iy == 0);

    // right edge lands exactly on the half-open boundary
    CHECK_FALSE(strip_assign(make_ball2(5, 1, 1), origin, w).has_value());
    // an edge exactly on a shifted boundary straddles two strips
    CHECK_FALSE(strip_assign(make_ball2(1, 1, 1), PartitionShift{2 * w, w}, w).has_value());
    // negative strip indices are fine
    auto neg = strip_assign(make_ball2(1, 1, 1), PartitionShift{2 * w, 0}, w);
    REQUIRE(neg.has_value());
    CHECK(neg->ix == -1);
    CHECK(neg->iy == 0);

    CHECK_THROWS_AS(strip_assign(make_ball2(1, 1, 2), origin, w), Error);   // non-unit radius
    CHECK_THROWS_AS(strip_assign(make_ball2(1, 1, 1), origin, 3), Error);   // odd w
    CHECK_THROWS_AS(strip_assign(make_ball1(1, 1), origin, w), Error);      // wrong dimension
}

TEST_CASE("every unit square is contained in exactly 2 of the 6 shifts") {
    const std::int64_t w = 4;
    auto shifts = partition_shifts(w);
    for (std::int64_t cx = 0; cx < 6 * w; ++cx)
        for (std::int64_t cy = 0; cy < 2 * w; ++cy) {
            Ball b = make_ball2(cx + 12 * w, cy + 12 * w, w / 2);
            int hits = 0;
            for (int si = 0; si < 6; ++si)
                if (strip_assign(b, shifts[si], w, si)) ++hits;
            CHECK(hits == 2);
        }
}

TEST_CASE("two squares in one strip are disjoint iff their x-gap exceeds w") {
    const std::int64_t w = 4;
    // strip [0,12) x [0,8): enumerate all contained center pairs
    for (std::int64_t x1 = w / 2; x1 + w / 2 < 3 * w; ++x1)
        for (std::int64_t y1 = w / 2; y1 + w / 2 < 2 * w; ++y1)
            for (std::int64_t x2 = w / 2; x2 + w / 2 < 3 * w; ++x2)
                for (std::int64_t y2 = w / 2; y2 + w / 2 < 2 * w; ++y2) {
                    Ball a = make_ball2(x1, y1, w / 2), b = make_ball2(x2, y2, w / 2);
                    bool disjoint = !intersects(a, b, Norm::linf);
                    CHECK(disjoint == (std::abs(x1 - x2) > w));
                }
}

TEST_CASE("strip summaries keep extremes with first-seen ties") {
    StripSummary s;
    s.add(make_ball2(5, 1, 1), 0);
    CHECK(s.stored() == 1);
    s.add(make_ball2(9, 1, 1), 1);
    CHECK(s.stored() == 2);
    s.add(make_ball2(5, 3, 1), 2);  // ties the leftmost; first seen wins
    CHECK(s.leftmost_idx == 0);
    s.add(make_ball2(2, 1, 1), 3);
    CHECK(s.leftmost_idx == 3);
    CHECK(s.rightmost_idx == 1);
}

TEST_CASE("strip solve picks one or both extremes") {
    const std::int64_t w = 2;
    StripSummary single;
    single.add(make_ball2(3, 1, 1), 7);
    CHECK(strip_solve(single, w).size() == 1);

    StripSummary both;
    both.add(make_ball2(1, 1, 1), 0);
    both.add(make_ball2(4, 1, 1), 1);
    CHECK(strip_solve(both, w).size() == 2);  // gap 3 > 2

    StripSummary tight;
    tight.add(make_ball2(1, 1, 1), 0);
    tight.add(make_ball2(3, 1, 1), 1);
    CHECK(strip_solve(tight, w).size() == 1);  // gap 2 means overlap
}

TEST_CASE("strip solve is optimal for squares confined to one strip") {
    std::mt19937_64 rng(2024);
    const std::int64_t w = 4;
    for (int trial = 0; trial < 25; ++trial) {
        BallStream s;
        s.p = Norm::linf;
        s.dim = 2;
        s.domain = 100;
        std::uniform_int_distribution<std::int64_t> cx(w / 2, 3 * w - w / 2 - 1);
        std::uniform_int_distribution<std::int64_t> cy(w / 2, 2 * w - w / 2 - 1);
        StripSummary sum;
        for (int i = 0; i < 20; ++i) {
            Ball b = make_ball2(cx(rng), cy(rng), w / 2);
            s.balls.push_back(b);
            sum.add(b, static_cast<std::size_t>(i));
        }
        auto solved = strip_solve(sum, w);
        auto alpha = exact_alpha(intersection_graph(s));
        CHECK(solved.size() == alpha.value);
    }
}

namespace {

void check_strip3_contract(const BallStream& s, std::size_t alpha_limit = 128) {
    auto r = unit_square_mis_3approx(s);
    Graph g = intersection_graph(s);
    VertexSet members(r.chosen.begin(), r.chosen.end());
    CHECK(is_independent(g, members));
    auto alpha = exact_alpha(g, alpha_limit);
    CHECK(3 * r.chosen.size() >= alpha.value);  // |output| >= ceil(alpha/3)
    CHECK(r.space.peak_items() <= 12 * std::max<std::size_t>(alpha.value, 1));
    // counting bound: the 6 per-shift exact solutions cover every MIS square twice
    std::size_t total = 0;
    for (std::size_t v : r.per_shift_size) total += v;
    CHECK(total >= 2 * alpha.value);
}

}  // namespace

TEST_CASE("single square and far-apart squares are returned whole") {
    BallStream s;
    s.p = Norm::linf;
    s.dim = 2;
    s.domain = 1000;
    s.balls.push_back(make_ball2(10, 10, 2));
    auto r = unit_square_mis_3approx(s);
    CHECK(r.chosen.size() == 1);

    s.balls.push_back(make_ball2(500, 500, 2));
    s.balls.push_back(make_ball2(900, 100, 2));
    r = unit_square_mis_3approx(s);
    CHECK(r.chosen.size() == 3);
}

TEST_CASE("strip3 contract on random unit square streams") {
    std::mt19937_64 rng(4096);
    for (int trial = 0; trial < 12; ++trial) {
        BallStream s = testutil::random_unit_squares(rng, 60, 2, 50 * 4);
        check_strip3_contract(s);
    }
}

TEST_CASE("strip3 accepts l1 streams via the rotation") {
    std::mt19937_64 rng(11);
    BallStream s;
    s.p = Norm::l1;
    s.dim = 2;
    s.domain = 120;
    std::uniform_int_distribution<std::int64_t> coord(3, 116);
    for (int i = 0; i < 50; ++i) s.balls.push_back(make_ball2(coord(rng), coord(rng), 3));
    auto r = unit_square_mis_3approx(s);
    Graph g = intersection_graph(s);
    VertexSet members(r.chosen.begin(), r.chosen.end());
    CHECK(is_independent(g, members));
    CHECK(3 * r.chosen.size() >= exact_alpha(g).value);
}

TEST_CASE("strip3 input validation") {
    BallStream bad;
    bad.p = Norm::l2;
    bad.dim = 2;
    bad.domain = 10;
    bad.balls.push_back(make_ball2(2, 2, 1));
    CHECK_THROWS_AS(unit_square_mis_3approx(bad), Error);

    BallStream dil;
    dil.p = Norm::linf;
    dil.dim = 2;
    dil.domain = 100;
    dil.balls.push_back(make_ball2(5, 5, 1));
    dil.balls.push_back(make_ball2(9, 9, 2));
    CHECK_THROWS_AS(unit_square_mis_3approx(dil), Error);
}

TEST_CASE("per-shift solutions equal the exact alpha of the shift substream") {
    std::mt19937_64 rng(31337);
    BallStream s = testutil::random_unit_squares(rng, 40, 2, 80);
    auto r = unit_square_mis_3approx(s);
    auto shifts = partition_shifts(4);
    for (int si = 0; si < 6; ++si) {
        BallStream sub;
        sub.p = s.p;
        sub.dim = s.dim;
        sub.domain = s.domain;
        for (const Ball& b : s.balls)
            if (strip_assign(b, shifts[si], 4, si)) sub.balls.push_back(b);
        auto alpha = exact_alpha(intersection_graph(sub));
        CHECK(r.per_shift_size[static_cast<std::size_t>(si)] == alpha.value);
    }
}
