#pragma once

#include <cstdint>
#include <vector>

#include "graph.hpp"

namespace streamis {

// Exponential-time exact oracles, desk scale. Instances over the configured
// limit are refused outright (Errc::oracle_limit) rather than approximated.
inline constexpr std::size_t kDefaultAlphaLimit = 60;
inline constexpr std::size_t kDefaultChiLimit = 30;

struct AlphaResult {
    std::size_t value = 0;
    VertexSet witness;
};

// Maximum independent set via branch-and-bound max clique on the complement,
// greedy-coloring upper bounds.
AlphaResult exact_alpha(const Graph& g, std::size_t limit = kDefaultAlphaLimit);

// omega(G) = alpha(complement of G).
AlphaResult exact_omega(const Graph& g, std::size_t limit = kDefaultAlphaLimit);

struct ChiResult {
    std::size_t value = 0;
    std::vector<std::uint32_t> coloring;  // proper, colors in [0, value)
};

// Exact chromatic number by iterative deepening over k, with a certificate.
ChiResult exact_chi(const Graph& g, std::size_t limit = kDefaultChiLimit);

struct WeightedAlphaResult {
    std::int64_t value = 0;
    VertexSet witness;
};

// Maximum-weight independent set; weights must be positive.
WeightedAlphaResult exact_alpha_weighted(const Graph& g, const std::vector<std::int64_t>& weights,
                                         std::size_t limit = kDefaultAlphaLimit);

// True iff s is a clique of g (used for gap certificates).
bool is_clique(const Graph& g, const VertexSet& s);

// True iff the coloring is proper and uses at most max_colors colors.
bool is_proper_coloring(const Graph& g, const std::vector<std::uint32_t>& coloring,
                        std::uint32_t max_colors);

// Greedy pass over the given vertex order; always returns a maximal IS.
VertexSet greedy_maximal_is(const Graph& g, const std::vector<VertexId>& order);

// Every maximal independent set, via pivoted clique enumeration on the
// complement. Only for small graphs (n <= 64).
std::vector<VertexSet> all_maximal_independent_sets(const Graph& g);

}  // namespace streamis
