#pragma once

#include <vector>

#include "space.hpp"
#include "stream.hpp"

namespace streamis {

struct GreedyResult {
    VertexSet members;                // vertex ids (arrival indices for ball streams)
    std::vector<Ball> balls;          // retained balls when the input is implicit
    SpaceAccount space;
    std::size_t events_consumed = 0;
};

// One-pass greedy maximal independent set for vertex-arrival streams,
// explicit or implicit. Edge streams are rejected: greedy needs vertices.
// Retains nothing beyond the current independent set.
GreedyResult greedy_mis(const EventStream& s);

}  // namespace streamis
