#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <sstream>

#include "error.hpp"
#include "helpers.hpp"
#include "stream.hpp"

using namespace streamis;

namespace {

Graph path3() {
    Graph g(3);
    g.add_edge(0, 1);
    g.add_edge(1, 2);
    return g;
}

}  // namespace

TEST_CASE("independence and maximality basics") {
    Graph g = path3();
    CHECK(is_independent(g, {0}));
    CHECK(is_independent(g, {0, 2}));
    CHECK_FALSE(is_independent(g, {0, 1}));
    CHECK(is_maximal(g, {1}));
    CHECK_FALSE(is_maximal(g, {0}));  // 2 uncovered
    CHECK_THROWS_AS(is_maximal(g, {0, 1}), Error);

    Graph edgeless(4);
    CHECK_FALSE(is_maximal(edgeless, {}));
    CHECK_THROWS_AS(is_independent(g, {7}), Error);
}

TEST_CASE("delta maximality as an exact rational") {
    Graph g = path3();
    CHECK(delta_maximality(g, {1}) == Rational{1, 1});
    CHECK(delta_maximality(g, {0}) == Rational{2, 3});
    CHECK(delta_maximality(g, {}) == Rational{0, 1});
    Graph empty(0);
    CHECK_THROWS_AS(delta_maximality(empty, {}), Error);
}

TEST_CASE("graph invariants are enforced") {
    Graph g(3);
    g.add_edge(0, 1);
    CHECK_THROWS_AS(g.add_edge(0, 1), Error);  // duplicate
    CHECK_THROWS_AS(g.add_edge(1, 0), Error);  // duplicate, reversed
    CHECK_THROWS_AS(g.add_edge(2, 2), Error);  // loop
    CHECK_THROWS_AS(g.add_edge(0, 3), Error);  // range
}

TEST_CASE("complement involution") {
    std::mt19937_64 rng(3);
    for (int trial = 0; trial < 20; ++trial) {
        Graph g = testutil::random_graph(rng, 12, 0.4);
        Graph back = g.complement().complement();
        CHECK(back.edge_count() == g.edge_count());
        for (auto [u, v] : g.edges()) CHECK(back.has_edge(u, v));
    }
}

TEST_CASE("materialize explicit vertex streams") {
    EventStream s;
    s.model = StreamModel::vertex;
    s.events.push_back(VertexArrival{0, {}});
    s.events.push_back(VertexArrival{1, {0}});
    Graph g = materialize(s);
    CHECK(g.size() == 2);
    CHECK(g.has_edge(0, 1));

    EventStream bad = s;
    bad.events.push_back(VertexArrival{2, {5}});  // forward reference
    CHECK_THROWS_AS(materialize(bad), Error);

    EventStream mixed = s;
    mixed.events.push_back(EdgeArrival{0, 1});
    CHECK_THROWS_AS(materialize(mixed), Error);
}

TEST_CASE("materialize edge streams, duplicates rejected") {
    EventStream s;
    s.model = StreamModel::edge;
    s.edge_model_n = 4;
    const std::pair<VertexId, VertexId> k4[] = {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}};
    for (auto [u, v] : k4) s.events.push_back(EdgeArrival{u, v});
    Graph g = materialize(s);
    CHECK(g.size() == 4);
    CHECK(g.edge_count() == 6);

    s.events.push_back(EdgeArrival{2, 3});
    CHECK_THROWS_AS(materialize(s), Error);
}

TEST_CASE("complement stream flips K3 and the empty graph") {
    EventStream k3;
    k3.model = StreamModel::vertex;
    k3.events.push_back(VertexArrival{0, {}});
    k3.events.push_back(VertexArrival{1, {0}});
    k3.events.push_back(VertexArrival{2, {0, 1}});
    EventStream empty = complement_stream(k3);
    CHECK(materialize(empty).edge_count() == 0);
    EventStream k3_again = complement_stream(empty);
    CHECK(materialize(k3_again).edge_count() == 3);

    EventStream edges;
    edges.model = StreamModel::edge;
    edges.edge_model_n = 2;
    CHECK_THROWS_AS(complement_stream(edges), Error);
}

TEST_CASE("double complement is the identity on random streams") {
    std::mt19937_64 rng(17);
    for (int trial = 0; trial < 10; ++trial) {
        Graph g = testutil::random_graph(rng, 10, 0.5);
        EventStream s = testutil::to_vertex_stream(g);
        EventStream twice = complement_stream(complement_stream(s));
        Graph a = materialize(s), b = materialize(twice);
        CHECK(a.edge_count() == b.edge_count());
        for (auto [u, v] : a.edges()) CHECK(b.has_edge(u, v));
    }
}

TEST_CASE("stream files round-trip byte for byte") {
    std::mt19937_64 rng(23);

    EventStream vertex = testutil::to_vertex_stream(testutil::random_graph(rng, 15, 0.3));
    EventStream ball = EventStream::from_ball_stream(testutil::random_unit_squares(rng, 30, 2, 64));
    EventStream edge;
    edge.model = StreamModel::edge;
    edge.edge_model_n = 6;
    edge.events.push_back(EdgeArrival{0, 5});
    edge.events.push_back(EdgeArrival{1, 2});

    for (const EventStream& s : {vertex, ball, edge}) {
        std::ostringstream out;
        write_stream(s, out);
        std::istringstream in(out.str());
        EventStream parsed = parse_stream(in);
        CHECK(parsed == s);
        std::ostringstream out2;
        write_stream(parsed, out2);
        CHECK(out.str() == out2.str());
    }
}

TEST_CASE("weighted ball streams keep weights through files") {
    BallStream s;
    s.p = Norm::linf;
    s.dim = 2;
    s.domain = 50;
    s.balls.push_back(make_ball2(5, 5, 2, 17));
    s.balls.push_back(make_ball2(9, 9, 2, 1000));
    EventStream es = EventStream::from_ball_stream(s, true);
    std::ostringstream out;
    write_stream(es, out);
    CHECK(out.str().find("w=17") != std::string::npos);
    std::istringstream in(out.str());
    EventStream parsed = parse_stream(in);
    CHECK(parsed.weighted);
    CHECK(parsed.to_ball_stream().balls[1].weight == 1000);
}

TEST_CASE("malformed stream lines carry line numbers") {
    auto expect_error = [](const std::string& text, const char* needle) {
        std::istringstream in(text);
        try {
            parse_stream(in);
            FAIL_CHECK("expected a parse error for: " << text);
        } catch (const Error& e) {
            CHECK(e.code() == Errc::malformed_input);
            CHECK(std::string(e.what()).find(needle) != std::string::npos);
        }
    };
    expect_error("model edge\nn 2\ne 0 2\n", "line 3");
    expect_error("model vertex\nv 1 :\n", "line 2");
    expect_error("model vertex\nv 0 :\nv 1 : 1\n", "line 3");
    expect_error("model ball p=3 d=2 M=9\n", "line 1");
    expect_error("model ball p=inf d=2 M=9\nb 1 1\n", "line 2");
    expect_error("model edge\ne 0 1\n", "line 2");  // edge before n
    expect_error("bogus\n", "line 1");
}
