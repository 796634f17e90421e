#include "oracle.hpp"

#include <algorithm>
#include <numeric>
#include <string>

#include "error.hpp"

namespace streamis {

namespace {

// Fixed-capacity bitset over dynamic word count; n stays desk-scale.
struct Bits {
    std::vector<std::uint64_t> w;

    explicit Bits(std::size_t nwords = 0) : w(nwords, 0) {}

    void set(std::size_t i) { w[i >> 6] |= std::uint64_t(1) << (i & 63); }
    void reset(std::size_t i) { w[i >> 6] &= ~(std::uint64_t(1) << (i & 63)); }
    bool test(std::size_t i) const { return (w[i >> 6] >> (i & 63)) & 1; }

    bool any() const {
        for (auto x : w)
            if (x) return true;
        return false;
    }
    std::size_t count() const {
        std::size_t c = 0;
        for (auto x : w) c += static_cast<std::size_t>(__builtin_popcountll(x));
        return c;
    }
    void and_with(const Bits& o) {
        for (std::size_t i = 0; i < w.size(); ++i) w[i] &= o.w[i];
    }
    int first() const {
        for (std::size_t i = 0; i < w.size(); ++i)
            if (w[i]) return static_cast<int>(i * 64 + static_cast<std::size_t>(__builtin_ctzll(w[i])));
        return -1;
    }
};

struct CliqueSolver {
    std::size_t n;
    std::size_t nwords;
    std::vector<Bits> adj;                  // adjacency of the graph we search cliques in
    std::vector<std::int64_t> weight;       // per-vertex weights (1 for unweighted)
    std::int64_t best = 0;
    std::vector<int> best_clique;
    std::vector<int> current;

    explicit CliqueSolver(const Graph& g, const std::vector<std::int64_t>* ws = nullptr)
        : n(g.size()), nwords((n + 63) / 64), adj(n, Bits(nwords)), weight(n, 1) {
        for (VertexId u = 0; u < n; ++u)
            for (VertexId v : g.neighbors(u)) adj[u].set(v);
        if (ws) weight = *ws;
    }

    // Greedy color classes over the candidate set; emits vertices in class
    // order with the cumulative class-max-weight bound at each position.
    void color_order(const Bits& cand, std::vector<int>& order, std::vector<std::int64_t>& bound) {
        order.clear();
        bound.clear();
        Bits rest = cand;
        std::int64_t acc = 0;
        while (rest.any()) {
            Bits cls = rest;
            std::int64_t cls_max = 0;
            std::vector<int> members;
            while (true) {
                int v = cls.first();
                if (v < 0) break;
                members.push_back(v);
                cls_max = std::max(cls_max, weight[static_cast<std::size_t>(v)]);
                cls.reset(static_cast<std::size_t>(v));
                rest.reset(static_cast<std::size_t>(v));
                // remove v's neighbors from this class
                for (std::size_t i = 0; i < nwords; ++i)
                    cls.w[i] &= ~adj[static_cast<std::size_t>(v)].w[i];
            }
            acc += cls_max;
            for (int v : members) {
                order.push_back(v);
                bound.push_back(acc);
            }
        }
    }

    void expand(Bits cand, std::int64_t cur_weight) {
        if (!cand.any()) {
            if (cur_weight > best) {
                best = cur_weight;
                best_clique = current;
            }
            return;
        }
        std::vector<int> order;
        std::vector<std::int64_t> bound;
        color_order(cand, order, bound);
        for (std::size_t idx = order.size(); idx-- > 0;) {
            if (cur_weight + bound[idx] <= best) return;
            int v = order[idx];
            current.push_back(v);
            Bits next = cand;
            next.and_with(adj[static_cast<std::size_t>(v)]);
            expand(next, cur_weight + weight[static_cast<std::size_t>(v)]);
            current.pop_back();
            cand.reset(static_cast<std::size_t>(v));
        }
    }

    void solve() {
        Bits all(nwords);
        for (std::size_t i = 0; i < n; ++i) all.set(i);
        expand(all, 0);
    }
};

VertexSet to_vertex_set(const std::vector<int>& ids) {
    VertexSet out;
    out.reserve(ids.size());
    for (int v : ids) out.push_back(static_cast<VertexId>(v));
    std::sort(out.begin(), out.end());
    return out;
}

void check_limit(const Graph& g, std::size_t limit, const char* what) {
    if (g.size() > limit)
        fail(Errc::oracle_limit, std::string(what) + " oracle refused: n=" +
                                     std::to_string(g.size()) + " exceeds limit " +
                                     std::to_string(limit));
}

}  // namespace

AlphaResult exact_alpha(const Graph& g, std::size_t limit) {
    check_limit(g, limit, "alpha");
    if (g.size() == 0) return {0, {}};
    CliqueSolver s(g.complement());
    s.solve();
    return {static_cast<std::size_t>(s.best), to_vertex_set(s.best_clique)};
}

AlphaResult exact_omega(const Graph& g, std::size_t limit) {
    check_limit(g, limit, "omega");
    if (g.size() == 0) return {0, {}};
    CliqueSolver s(g);
    s.solve();
    return {static_cast<std::size_t>(s.best), to_vertex_set(s.best_clique)};
}

WeightedAlphaResult exact_alpha_weighted(const Graph& g, const std::vector<std::int64_t>& weights,
                                         std::size_t limit) {
    check_limit(g, limit, "weighted alpha");
    require(weights.size() == g.size(), Errc::invalid_argument, "weight vector size mismatch");
    for (std::int64_t w : weights)
        require(w > 0, Errc::invalid_argument, "weights must be positive");
    if (g.size() == 0) return {0, {}};
    CliqueSolver s(g.complement(), &weights);
    s.solve();
    return {s.best, to_vertex_set(s.best_clique)};
}

bool is_clique(const Graph& g, const VertexSet& s) {
    for (std::size_t i = 0; i < s.size(); ++i)
        for (std::size_t j = i + 1; j < s.size(); ++j)
            if (!g.has_edge(s[i], s[j])) return false;
    return true;
}

bool is_proper_coloring(const Graph& g, const std::vector<std::uint32_t>& coloring,
                        std::uint32_t max_colors) {
    if (coloring.size() != g.size()) return false;
    for (std::uint32_t c : coloring)
        if (c >= max_colors) return false;
    for (auto [u, v] : g.edges())
        if (coloring[u] == coloring[v]) return false;
    return true;
}

namespace {

// Feasibility search: can g be properly colored with k colors? Vertices are
// taken highest-degree-first; first-use symmetry breaking caps the branching.
struct ColorSearch {
    const Graph& g;
    std::uint32_t k;
    std::vector<VertexId> order;
    std::vector<std::uint32_t> color;  // k = uncolored sentinel

    ColorSearch(const Graph& g_, std::uint32_t k_) : g(g_), k(k_), color(g_.size(), k_) {
        order.resize(g.size());
        std::iota(order.begin(), order.end(), 0);
        std::sort(order.begin(), order.end(),
                  [&](VertexId a, VertexId b) { return g.degree(a) > g.degree(b); });
    }

    bool run(std::size_t pos, std::uint32_t used) {
        if (pos == order.size()) return true;
        VertexId v = order[pos];
        std::uint64_t forbidden = 0;
        for (VertexId u : g.neighbors(v))
            if (color[u] < k) forbidden |= std::uint64_t(1) << color[u];
        std::uint32_t cap = std::min(k, used + 1);
        for (std::uint32_t c = 0; c < cap; ++c) {
            if (forbidden & (std::uint64_t(1) << c)) continue;
            color[v] = c;
            if (run(pos + 1, std::max(used, c + 1))) return true;
            color[v] = k;
        }
        return false;
    }
};

}  // namespace

VertexSet greedy_maximal_is(const Graph& g, const std::vector<VertexId>& order) {
    require(order.size() == g.size(), Errc::invalid_argument, "order must list every vertex once");
    std::vector<char> taken(g.size(), 0), seen(g.size(), 0);
    VertexSet out;
    for (VertexId v : order) {
        require(v < g.size() && !seen[v], Errc::invalid_argument, "order must be a permutation");
        seen[v] = 1;
        bool blocked = false;
        for (VertexId u : g.neighbors(v))
            if (taken[u]) {
                blocked = true;
                break;
            }
        if (!blocked) {
            taken[v] = 1;
            out.push_back(v);
        }
    }
    std::sort(out.begin(), out.end());
    return out;
}

namespace {

// Pivoted Bron-Kerbosch over "compatible" = non-adjacent masks, i.e. maximal
// cliques of the complement.
void enumerate_mis(std::uint64_t r, std::uint64_t p, std::uint64_t x,
                   const std::vector<std::uint64_t>& compat, std::vector<VertexSet>& out) {
    if (p == 0 && x == 0) {
        VertexSet s;
        for (std::uint64_t m = r; m;) {
            int v = __builtin_ctzll(m);
            s.push_back(static_cast<VertexId>(v));
            m &= m - 1;
        }
        out.push_back(std::move(s));
        return;
    }
    std::uint64_t px = p | x;
    int pivot = -1;
    int best_cover = -1;
    for (std::uint64_t m = px; m;) {
        int v = __builtin_ctzll(m);
        m &= m - 1;
        int cover = __builtin_popcountll(p & compat[static_cast<std::size_t>(v)]);
        if (cover > best_cover) {
            best_cover = cover;
            pivot = v;
        }
    }
    std::uint64_t cand = p & ~compat[static_cast<std::size_t>(pivot)];
    for (std::uint64_t m = cand; m;) {
        int v = __builtin_ctzll(m);
        m &= m - 1;
        std::uint64_t bit = std::uint64_t(1) << v;
        enumerate_mis(r | bit, p & compat[static_cast<std::size_t>(v)],
                      x & compat[static_cast<std::size_t>(v)], compat, out);
        p &= ~bit;
        x |= bit;
    }
}

}  // namespace

std::vector<VertexSet> all_maximal_independent_sets(const Graph& g) {
    require(g.size() <= 64, Errc::oracle_limit,
            "maximal-IS enumeration is limited to 64 vertices");
    std::vector<std::uint64_t> compat(g.size());
    for (VertexId v = 0; v < g.size(); ++v) {
        std::uint64_t mask = 0;
        for (VertexId u : g.neighbors(v)) mask |= std::uint64_t(1) << u;
        compat[v] = ~mask & ((g.size() == 64 ? ~std::uint64_t(0)
                                             : (std::uint64_t(1) << g.size()) - 1)) &
                    ~(std::uint64_t(1) << v);
    }
    std::vector<VertexSet> out;
    if (g.size() == 0) {
        out.push_back({});  // the empty set is maximal in the empty graph
        return out;
    }
    std::uint64_t all = g.size() == 64 ? ~std::uint64_t(0) : (std::uint64_t(1) << g.size()) - 1;
    enumerate_mis(0, all, 0, compat, out);
    return out;
}

ChiResult exact_chi(const Graph& g, std::size_t limit) {
    check_limit(g, limit, "chi");
    check_limit(g, 64, "chi");  // the search packs color sets into one word
    if (g.size() == 0) return {0, {}};
    if (g.edge_count() == 0) return {1, std::vector<std::uint32_t>(g.size(), 0)};
    // Clique number is a lower bound and chi <= n always terminates the loop.
    std::size_t lb = exact_omega(g, limit).value;
    for (std::uint32_t k = static_cast<std::uint32_t>(lb);; ++k) {
        ColorSearch search(g, k);
        if (search.run(0, 0)) {
            require(is_proper_coloring(g, search.color, k), Errc::verify_failed,
                    "internal: coloring certificate failed its own check");
            return {k, search.color};
        }
    }
}

}  // namespace streamis
