#include "geometry.hpp"

#include <algorithm>
#include <cstdlib>
#include <string>

#include "error.hpp"

namespace streamis {

const char* norm_name(Norm p) {
    switch (p) {
        case Norm::l1: return "1";
        case Norm::l2: return "2";
        case Norm::linf: return "inf";
    }
    return "?";
}

Ball make_ball1(std::int64_t x, std::int64_t r, std::int64_t weight) {
    Ball b;
    b.center = {x, 0, 0};
    b.dim = 1;
    b.radius = r;
    b.weight = weight;
    return b;
}

Ball make_ball2(std::int64_t x, std::int64_t y, std::int64_t r, std::int64_t weight) {
    Ball b;
    b.center = {x, y, 0};
    b.dim = 2;
    b.radius = r;
    b.weight = weight;
    return b;
}

bool intersects(const Ball& a, const Ball& b, Norm p) {
    require(a.dim == b.dim, Errc::invalid_argument,
            "dimension mismatch: " + std::to_string(a.dim) + " vs " + std::to_string(b.dim));
    const std::int64_t reach = a.radius + b.radius;
    switch (p) {
        case Norm::linf: {
            for (int i = 0; i < a.dim; ++i)
                if (std::abs(a.center[i] - b.center[i]) > reach) return false;
            return true;
        }
        case Norm::l1: {
            std::int64_t d = 0;
            for (int i = 0; i < a.dim; ++i) d += std::abs(a.center[i] - b.center[i]);
            return d <= reach;
        }
        case Norm::l2: {
            // Squared integer distances; no rounding anywhere.
            __int128 d2 = 0;
            for (int i = 0; i < a.dim; ++i) {
                __int128 d = a.center[i] - b.center[i];
                d2 += d * d;
            }
            return d2 <= static_cast<__int128>(reach) * reach;
        }
    }
    fail(Errc::invalid_argument, "unknown norm");
}

std::pair<std::int64_t, std::int64_t> BallStream::radius_range() const {
    require(!balls.empty(), Errc::invalid_argument, "radius range of an empty stream");
    std::int64_t lo = balls.front().radius, hi = lo;
    for (const Ball& b : balls) {
        lo = std::min(lo, b.radius);
        hi = std::max(hi, b.radius);
    }
    return {lo, hi};
}

bool BallStream::unit() const {
    if (balls.empty()) return true;
    auto [lo, hi] = radius_range();
    return lo == hi;
}

void validate_ball(const BallStream& s, const Ball& b) {
    require(b.dim == s.dim, Errc::invalid_argument, "ball dimension mismatch");
    require(b.dim >= 1 && b.dim <= 3, Errc::invalid_argument, "supported dimensions are 1..3");
    require(b.radius >= 1 && b.radius < s.domain, Errc::invalid_argument,
            "radius out of [1, M): " + std::to_string(b.radius));
    for (int i = 0; i < b.dim; ++i)
        require(b.center[i] >= 0 && b.center[i] < s.domain, Errc::invalid_argument,
                "center coordinate out of [0, M): " + std::to_string(b.center[i]));
}

Graph intersection_graph(const BallStream& s) {
    Graph g(s.balls.size());
    for (std::size_t i = 0; i < s.balls.size(); ++i)
        for (std::size_t j = i + 1; j < s.balls.size(); ++j)
            if (intersects(s.balls[i], s.balls[j], s.p))
                g.add_edge(static_cast<VertexId>(i), static_cast<VertexId>(j));
    return g;
}

BallStream rotate_l1_to_linf(const BallStream& s) {
    require(s.p == Norm::l1, Errc::invalid_argument, "rotation applies to l1 streams");
    require(s.dim == 2, Errc::invalid_argument, "rotation applies to d=2");
    BallStream out;
    out.p = Norm::linf;
    out.dim = 2;
    out.domain = 2 * s.domain;
    out.balls.reserve(s.balls.size());
    for (const Ball& b : s.balls) {
        Ball r = b;
        r.center = {b.center[0] + b.center[1], b.center[0] - b.center[1] + s.domain, 0};
        out.balls.push_back(r);
    }
    return out;
}

}  // namespace streamis
