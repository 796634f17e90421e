#include "graph.hpp"

#include <algorithm>
#include <numeric>
#include <string>

#include "error.hpp"

namespace streamis {

VertexSet make_vertex_set(std::vector<VertexId> ids) {
    std::sort(ids.begin(), ids.end());
    ids.erase(std::unique(ids.begin(), ids.end()), ids.end());
    return ids;
}

void Graph::add_edge(VertexId u, VertexId v) {
    require(u != v, Errc::invalid_argument, "self-loop " + std::to_string(u));
    require(u < size() && v < size(), Errc::invalid_argument,
            "edge endpoint out of range: " + std::to_string(u) + " " + std::to_string(v));
    auto& nu = adj_[u];
    auto it = std::lower_bound(nu.begin(), nu.end(), v);
    require(it == nu.end() || *it != v, Errc::invalid_argument,
            "duplicate edge " + std::to_string(u) + "-" + std::to_string(v));
    nu.insert(it, v);
    auto& nv = adj_[v];
    nv.insert(std::lower_bound(nv.begin(), nv.end(), u), u);
    ++m_;
}

bool Graph::has_edge(VertexId u, VertexId v) const {
    if (u >= size() || v >= size()) return false;
    const auto& nu = adj_[u];
    return std::binary_search(nu.begin(), nu.end(), v);
}

const std::vector<VertexId>& Graph::neighbors(VertexId v) const {
    require(v < size(), Errc::invalid_argument, "vertex out of range: " + std::to_string(v));
    return adj_[v];
}

Graph Graph::complement() const {
    Graph c(size());
    for (VertexId u = 0; u < size(); ++u) {
        const auto& nu = adj_[u];
        std::size_t j = 0;
        for (VertexId v = u + 1; v < size(); ++v) {
            while (j < nu.size() && nu[j] < v) ++j;
            if (j < nu.size() && nu[j] == v) continue;
            c.add_edge(u, v);
        }
    }
    return c;
}

std::vector<std::pair<VertexId, VertexId>> Graph::edges() const {
    std::vector<std::pair<VertexId, VertexId>> out;
    out.reserve(m_);
    for (VertexId u = 0; u < size(); ++u)
        for (VertexId v : adj_[u])
            if (u < v) out.emplace_back(u, v);
    return out;
}

bool is_independent(const Graph& g, const VertexSet& s) {
    for (VertexId v : s)
        require(v < g.size(), Errc::invalid_argument, "vertex out of range: " + std::to_string(v));
    for (std::size_t i = 0; i < s.size(); ++i)
        for (std::size_t j = i + 1; j < s.size(); ++j)
            if (g.has_edge(s[i], s[j])) return false;
    return true;
}

namespace {

std::vector<char> closed_neighborhood_mask(const Graph& g, const VertexSet& s) {
    std::vector<char> covered(g.size(), 0);
    for (VertexId v : s) {
        covered[v] = 1;
        for (VertexId u : g.neighbors(v)) covered[u] = 1;
    }
    return covered;
}

}  // namespace

bool is_maximal(const Graph& g, const VertexSet& s) {
    require(is_independent(g, s), Errc::invalid_argument, "set is not independent");
    auto covered = closed_neighborhood_mask(g, s);
    return std::all_of(covered.begin(), covered.end(), [](char c) { return c != 0; });
}

Rational make_rational(std::int64_t num, std::int64_t den) {
    require(den != 0, Errc::invalid_argument, "zero denominator");
    std::int64_t g = std::gcd(num, den);
    if (g == 0) g = 1;
    return Rational{num / g, den / g};
}

Rational delta_maximality(const Graph& g, const VertexSet& s) {
    require(g.size() > 0, Errc::invalid_argument, "delta-maximality undefined on the empty graph");
    require(is_independent(g, s), Errc::invalid_argument, "set is not independent");
    auto covered = closed_neighborhood_mask(g, s);
    std::int64_t covered_count = std::count(covered.begin(), covered.end(), char(1));
    return make_rational(covered_count, static_cast<std::int64_t>(g.size()));
}

}  // namespace streamis
