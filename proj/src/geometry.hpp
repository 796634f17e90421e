#pragma once

#include <array>
#include <cstdint>
#include <utility>
#include <vector>

#include "graph.hpp"

namespace streamis {

enum class Norm { l1, l2, linf };

const char* norm_name(Norm p);

// Closed l^p ball with integer center in [0, M)^d and integer radius in
// [1, M). Weight defaults to 1; only weighted ball streams carry other values.
struct Ball {
    std::array<std::int64_t, 3> center{0, 0, 0};
    int dim = 2;
    std::int64_t radius = 1;
    std::int64_t weight = 1;

    bool operator==(const Ball&) const = default;
};

Ball make_ball1(std::int64_t x, std::int64_t r, std::int64_t weight = 1);
Ball make_ball2(std::int64_t x, std::int64_t y, std::int64_t r, std::int64_t weight = 1);

// Boundary touch counts as intersection: ||c1 - c2||_p <= r1 + r2.
// All arithmetic is exact; l2 compares squared distances.
bool intersects(const Ball& a, const Ball& b, Norm p);

struct BallStream {
    Norm p = Norm::linf;
    int dim = 2;
    std::int64_t domain = 0;  // M
    std::vector<Ball> balls;

    // (r_min, r_max); requires a nonempty stream.
    std::pair<std::int64_t, std::int64_t> radius_range() const;
    bool unit() const;  // dilation 1
};

// Checks the ball against the stream's M/d invariants; throws on violation.
void validate_ball(const BallStream& s, const Ball& b);

// Vertex i <-> ball i in arrival order, edges by pairwise intersection.
Graph intersection_graph(const BallStream& s);

// Exact lattice rotation (x,y) -> (x+y, x-y+M) turning d=2 l1 balls into
// linf balls of the same radius; the domain doubles. Intersection-preserving.
BallStream rotate_l1_to_linf(const BallStream& s);

}  // namespace streamis
