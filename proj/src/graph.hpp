#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

namespace streamis {

using VertexId = std::uint32_t;

// Sorted, duplicate-free list of vertex ids.
using VertexSet = std::vector<VertexId>;

VertexSet make_vertex_set(std::vector<VertexId> ids);

// Simple undirected graph on dense 0-based vertex ids. Adjacency lists are
// kept sorted; no self-loops, no parallel edges.
class Graph {
public:
    Graph() = default;
    explicit Graph(std::size_t n) : adj_(n) {}

    std::size_t size() const { return adj_.size(); }
    std::size_t edge_count() const { return m_; }

    // Throws on self-loop, out-of-range endpoint, or duplicate edge.
    void add_edge(VertexId u, VertexId v);
    bool has_edge(VertexId u, VertexId v) const;
    const std::vector<VertexId>& neighbors(VertexId v) const;
    std::size_t degree(VertexId v) const { return neighbors(v).size(); }

    Graph complement() const;

    std::vector<std::pair<VertexId, VertexId>> edges() const;

private:
    std::vector<std::vector<VertexId>> adj_;
    std::size_t m_ = 0;
};

bool is_independent(const Graph& g, const VertexSet& s);

// Requires s independent; true iff every vertex outside s has a neighbor in s.
bool is_maximal(const Graph& g, const VertexSet& s);

struct Rational {
    std::int64_t num = 0;
    std::int64_t den = 1;
    bool operator==(const Rational&) const = default;
};

Rational make_rational(std::int64_t num, std::int64_t den);

// |s ∪ Γ(s)| / n as an exact reduced rational. Requires s independent, n > 0.
Rational delta_maximality(const Graph& g, const VertexSet& s);

}  // namespace streamis
