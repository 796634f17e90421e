#pragma once

// Test-only brute-force oracles and instance generators. These stay
// independent of the branch-and-bound implementation they cross-check.

#include <cstdint>
#include <random>
#include <vector>

#include "geometry.hpp"
#include "graph.hpp"
#include "stream.hpp"

namespace testutil {

using namespace streamis;

// Exhaustive 2^n scan; n <= 20 or so.
inline std::size_t brute_alpha(const Graph& g) {
    const std::size_t n = g.size();
    std::size_t best = 0;
    for (std::uint64_t mask = 0; mask < (std::uint64_t(1) << n); ++mask) {
        bool ok = true;
        for (std::size_t i = 0; i < n && ok; ++i) {
            if (!(mask >> i & 1)) continue;
            for (std::size_t j = i + 1; j < n && ok; ++j)
                if ((mask >> j & 1) && g.has_edge(static_cast<VertexId>(i), static_cast<VertexId>(j)))
                    ok = false;
        }
        if (ok) best = std::max(best, static_cast<std::size_t>(__builtin_popcountll(mask)));
    }
    return best;
}

inline std::size_t brute_omega(const Graph& g) { return brute_alpha(g.complement()); }

inline std::int64_t brute_alpha_weighted(const Graph& g, const std::vector<std::int64_t>& w) {
    const std::size_t n = g.size();
    std::int64_t best = 0;
    for (std::uint64_t mask = 0; mask < (std::uint64_t(1) << n); ++mask) {
        bool ok = true;
        std::int64_t total = 0;
        for (std::size_t i = 0; i < n && ok; ++i) {
            if (!(mask >> i & 1)) continue;
            total += w[i];
            for (std::size_t j = i + 1; j < n && ok; ++j)
                if ((mask >> j & 1) && g.has_edge(static_cast<VertexId>(i), static_cast<VertexId>(j)))
                    ok = false;
        }
        if (ok) best = std::max(best, total);
    }
    return best;
}

// Smallest k admitting a proper coloring, by exhaustive assignment; tiny n only.
inline std::size_t brute_chi(const Graph& g) {
    const std::size_t n = g.size();
    if (n == 0) return 0;
    for (std::size_t k = 1; k <= n; ++k) {
        std::vector<std::uint32_t> color(n, 0);
        std::uint64_t total = 1;
        for (std::size_t i = 0; i < n; ++i) total *= k;
        for (std::uint64_t code = 0; code < total; ++code) {
            std::uint64_t c = code;
            for (std::size_t i = 0; i < n; ++i) {
                color[i] = static_cast<std::uint32_t>(c % k);
                c /= k;
            }
            bool proper = true;
            for (auto [u, v] : g.edges())
                if (color[u] == color[v]) {
                    proper = false;
                    break;
                }
            if (proper) return k;
        }
    }
    return n;
}

inline Graph random_graph(std::mt19937_64& rng, std::size_t n, double p) {
    Graph g(n);
    std::uniform_real_distribution<double> coin(0.0, 1.0);
    for (std::size_t u = 0; u < n; ++u)
        for (std::size_t v = u + 1; v < n; ++v)
            if (coin(rng) < p) g.add_edge(static_cast<VertexId>(u), static_cast<VertexId>(v));
    return g;
}

inline EventStream to_vertex_stream(const Graph& g) {
    EventStream s;
    s.model = StreamModel::vertex;
    for (VertexId v = 0; v < g.size(); ++v) {
        VertexArrival ev;
        ev.id = v;
        for (VertexId u : g.neighbors(v))
            if (u < v) ev.back_neighbors.push_back(u);
        s.events.push_back(std::move(ev));
    }
    return s;
}

inline BallStream random_unit_intervals(std::mt19937_64& rng, std::size_t n, std::int64_t domain) {
    BallStream s;
    s.p = Norm::linf;
    s.dim = 1;
    s.domain = domain;
    std::uniform_int_distribution<std::int64_t> coord(1, domain - 2);
    for (std::size_t i = 0; i < n; ++i) s.balls.push_back(make_ball1(coord(rng), 1));
    return s;
}

inline BallStream random_unit_squares(std::mt19937_64& rng, std::size_t n, std::int64_t radius,
                                      std::int64_t domain) {
    BallStream s;
    s.p = Norm::linf;
    s.dim = 2;
    s.domain = domain;
    std::uniform_int_distribution<std::int64_t> coord(radius, domain - radius - 1);
    for (std::size_t i = 0; i < n; ++i)
        s.balls.push_back(make_ball2(coord(rng), coord(rng), radius));
    return s;
}

inline std::vector<std::uint8_t> random_bits(std::mt19937_64& rng, std::size_t n) {
    std::vector<std::uint8_t> out(n);
    for (auto& b : out) b = static_cast<std::uint8_t>(rng() & 1);
    return out;
}

}  // namespace testutil
