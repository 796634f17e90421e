#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "error.hpp"
#include "geometry.hpp"
#include "helpers.hpp"

using namespace streamis;

TEST_CASE("linf boundary touch counts as intersection") {
    Ball a = make_ball2(0, 0, 1);
    Ball b = make_ball2(2, 0, 1);
    CHECK(intersects(a, b, Norm::linf));
    Ball c = make_ball2(3, 0, 1);
    CHECK_FALSE(intersects(a, c, Norm::linf));
}

TEST_CASE("diagonal neighbors under l1 and l2") {
    Ball a = make_ball2(0, 0, 1);
    Ball b = make_ball2(1, 1, 1);
    CHECK(intersects(a, b, Norm::l1));   // distance 2 <= 2
    CHECK(intersects(a, b, Norm::l2));   // squared distance 2 <= 4
    CHECK(intersects(a, b, Norm::linf)); // max coordinate gap 1 <= 2
}

TEST_CASE("dimension mismatch is an error") {
    Ball a = make_ball1(0, 1);
    Ball b = make_ball2(0, 0, 1);
    CHECK_THROWS_AS(intersects(a, b, Norm::linf), Error);
}

TEST_CASE("intersects is symmetric and reflexive for every norm") {
    std::mt19937_64 rng(7);
    std::uniform_int_distribution<std::int64_t> coord(0, 99), radius(1, 20);
    for (Norm p : {Norm::l1, Norm::l2, Norm::linf}) {
        for (int dim = 1; dim <= 3; ++dim) {
            for (int trial = 0; trial < 200; ++trial) {
                Ball a, b;
                a.dim = b.dim = dim;
                a.radius = radius(rng);
                b.radius = radius(rng);
                for (int i = 0; i < dim; ++i) {
                    a.center[i] = coord(rng);
                    b.center[i] = coord(rng);
                }
                CHECK(intersects(a, a, p));
                CHECK(intersects(a, b, p) == intersects(b, a, p));
            }
        }
    }
}

TEST_CASE("intersection graph basics") {
    BallStream s;
    s.p = Norm::linf;
    s.dim = 2;
    s.domain = 100;
    CHECK(intersection_graph(s).size() == 0);

    for (int i = 0; i < 3; ++i) s.balls.push_back(make_ball2(5, 5, 1));
    Graph k3 = intersection_graph(s);
    CHECK(k3.size() == 3);
    CHECK(k3.edge_count() == 3);

    s.balls.clear();
    s.balls.push_back(make_ball2(0, 0, 1));
    s.balls.push_back(make_ball2(2, 0, 1));
    s.balls.push_back(make_ball2(5, 0, 1));
    Graph path = intersection_graph(s);
    CHECK(path.edge_count() == 1);
    CHECK(path.has_edge(0, 1));
    CHECK_FALSE(path.has_edge(1, 2));
}

TEST_CASE("intersection graph agrees with pairwise intersects") {
    std::mt19937_64 rng(11);
    BallStream s = testutil::random_unit_squares(rng, 50, 2, 60);
    Graph g = intersection_graph(s);
    for (std::size_t i = 0; i < s.balls.size(); ++i)
        for (std::size_t j = i + 1; j < s.balls.size(); ++j)
            CHECK(g.has_edge(static_cast<VertexId>(i), static_cast<VertexId>(j)) ==
                  intersects(s.balls[i], s.balls[j], s.p));
}

TEST_CASE("l1 to linf rotation preserves the intersection graph") {
    std::mt19937_64 rng(13);
    BallStream s;
    s.p = Norm::l1;
    s.dim = 2;
    s.domain = 80;
    std::uniform_int_distribution<std::int64_t> coord(3, 76);
    for (int i = 0; i < 40; ++i) s.balls.push_back(make_ball2(coord(rng), coord(rng), 3));
    BallStream rotated = rotate_l1_to_linf(s);
    CHECK(rotated.p == Norm::linf);
    CHECK(rotated.domain == 2 * s.domain);
    Graph before = intersection_graph(s);
    Graph after = intersection_graph(rotated);
    for (std::size_t i = 0; i < s.balls.size(); ++i) {
        validate_ball(rotated, rotated.balls[i]);
        for (std::size_t j = i + 1; j < s.balls.size(); ++j)
            CHECK(before.has_edge(static_cast<VertexId>(i), static_cast<VertexId>(j)) ==
                  after.has_edge(static_cast<VertexId>(i), static_cast<VertexId>(j)));
    }
}

TEST_CASE("ball validation against stream bounds") {
    BallStream s;
    s.p = Norm::linf;
    s.dim = 2;
    s.domain = 10;
    CHECK_THROWS_AS(validate_ball(s, make_ball2(10, 0, 1)), Error);
    CHECK_THROWS_AS(validate_ball(s, make_ball2(0, 0, 0)), Error);
    CHECK_THROWS_AS(validate_ball(s, make_ball1(0, 1)), Error);
    CHECK_NOTHROW(validate_ball(s, make_ball2(9, 9, 9)));
}

TEST_CASE("dilation bookkeeping") {
    BallStream s;
    s.p = Norm::l2;
    s.dim = 2;
    s.domain = 100;
    s.balls.push_back(make_ball2(1, 1, 2));
    s.balls.push_back(make_ball2(5, 5, 6));
    auto [lo, hi] = s.radius_range();
    CHECK(lo == 2);
    CHECK(hi == 6);
    CHECK_FALSE(s.unit());
    s.balls.pop_back();
    CHECK(s.unit());
}
