#include "gadgets.hpp"

#include <algorithm>
#include <cmath>
#include <set>
#include <string>

#include "error.hpp"

namespace streamis {

namespace {

void require_bits(const std::vector<std::uint8_t>& x) {
    for (std::uint8_t b : x)
        require(b <= 1, Errc::invalid_argument, "bit vector entries must be 0 or 1");
}

}  // namespace

// ---------------------------------------------------------------- maximal index

GadgetOutput gen_maximal_index_gadget(const std::vector<std::uint8_t>& x, int sigma) {
    require_bits(x);
    const std::size_t n = static_cast<std::size_t>(std::llround(std::sqrt(double(x.size()))));
    require(n >= 1 && n * n == x.size(), Errc::invalid_argument,
            "bit vector length must be a perfect square");
    require(sigma >= 1 && static_cast<std::size_t>(sigma) <= n * n, Errc::invalid_argument,
            "sigma out of [1, n^2]");

    // Vertex blocks A1 B1 A2 B2, n each.
    auto a1 = [&](std::size_t i) { return static_cast<VertexId>(i); };
    auto b1 = [&](std::size_t j) { return static_cast<VertexId>(n + j); };
    auto a2 = [&](std::size_t i) { return static_cast<VertexId>(2 * n + i); };
    auto b2 = [&](std::size_t j) { return static_cast<VertexId>(3 * n + j); };

    EventStream s;
    s.model = StreamModel::edge;
    s.edge_model_n = 4 * n;
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            if (x[i * n + j]) {
                s.events.push_back(EdgeArrival{a1(i), b1(j)});
                s.events.push_back(EdgeArrival{a2(i), b2(j)});
            }
    const std::size_t bob_offset = s.events.size();

    const std::size_t qi = static_cast<std::size_t>(sigma - 1) / n;
    const std::size_t qj = static_cast<std::size_t>(sigma - 1) % n;
    std::vector<VertexId> left, right;  // starred halves
    for (std::size_t i = 0; i < n; ++i) {
        if (i != qi) left.push_back(a1(i));
        if (i != qj) left.push_back(b1(i));
        if (i != qi) right.push_back(a2(i));
        if (i != qj) right.push_back(b2(i));
    }
    std::sort(left.begin(), left.end());
    std::sort(right.begin(), right.end());
    for (VertexId u : left)
        for (VertexId v : right) s.events.push_back(EdgeArrival{u, v});

    GadgetMetadata meta;
    meta.gadget = "maximal-index";
    meta.quantity = "decode";
    meta.promise_case = x[static_cast<std::size_t>(sigma - 1)] ? "high" : "low";
    meta.expected_low = {GapCmp::eq, 0};
    meta.expected_high = {GapCmp::eq, 1};
    meta.params = {{"n", static_cast<std::int64_t>(n)}, {"sigma", sigma},
                   {"xsigma", x[static_cast<std::size_t>(sigma - 1)]}};
    meta.phases = {{"alice", 0}, {"bob", bob_offset}};
    meta.landmarks = {{"pair1", {a1(qi), b1(qj)}}, {"pair2", {a2(qi), b2(qj)}}};
    return {std::move(s), std::move(meta)};
}

int decode_maximal_index(const Graph& g, const VertexSet& mis, const GadgetMetadata& meta) {
    require(is_maximal(g, mis), Errc::invalid_argument,
            "decode needs a maximal independent set");
    auto contains_pair = [&](const std::vector<VertexId>& pair) {
        return std::all_of(pair.begin(), pair.end(), [&](VertexId v) {
            return std::binary_search(mis.begin(), mis.end(), v);
        });
    };
    return (contains_pair(meta.landmark("pair1")) || contains_pair(meta.landmark("pair2"))) ? 0
                                                                                            : 1;
}

// ---------------------------------------------------------------- RS index

GadgetOutput gen_rs_index_gadget(int r, int s, const std::vector<std::vector<int>>& selected,
                                 int query) {
    require(r >= 1 && s >= 2 && s % 2 == 0, Errc::invalid_argument,
            "need r >= 1 and even s >= 2");
    require(selected.size() == static_cast<std::size_t>(r), Errc::invalid_argument,
            "expected one selection per matching");
    require(query >= 1 && query <= r, Errc::invalid_argument, "query out of [1, r]");
    std::vector<std::set<int>> sel(static_cast<std::size_t>(r));
    for (int q = 0; q < r; ++q) {
        for (int t : selected[static_cast<std::size_t>(q)]) {
            require(t >= 1 && t <= s, Errc::invalid_argument, "edge index out of [1, s]");
            sel[static_cast<std::size_t>(q)].insert(t);
        }
        require(sel[static_cast<std::size_t>(q)].size() == static_cast<std::size_t>(s) / 2,
                Errc::invalid_argument, "each selected subset must have size s/2");
    }

    const std::size_t per_copy = 2 * static_cast<std::size_t>(r) * static_cast<std::size_t>(s);
    auto left = [&](int copy, int q, int t) {
        return static_cast<VertexId>(static_cast<std::size_t>(copy) * per_copy +
                                     static_cast<std::size_t>(q - 1) * 2 * s + 2 * (t - 1));
    };
    auto right = [&](int copy, int q, int t) { return left(copy, q, t) + 1; };

    EventStream st;
    st.model = StreamModel::edge;
    st.edge_model_n = 2 * per_copy;
    // Alice: both copies of the complemented-matching graph.
    for (int copy = 0; copy < 2; ++copy)
        for (int q = 1; q <= r; ++q)
            for (int t = 1; t <= s; ++t)
                if (!sel[static_cast<std::size_t>(q - 1)].count(t))
                    st.events.push_back(EdgeArrival{left(copy, q, t), right(copy, q, t)});
    const std::size_t bob_offset = st.events.size();
    // Bob: complete join avoiding the queried matching's vertices.
    for (VertexId u = 0; u < per_copy; ++u) {
        int uq = static_cast<int>(u / (2 * static_cast<std::size_t>(s))) + 1;
        if (uq == query) continue;
        for (VertexId v = 0; v < per_copy; ++v) {
            int vq = static_cast<int>(v / (2 * static_cast<std::size_t>(s))) + 1;
            if (vq == query) continue;
            st.events.push_back(EdgeArrival{u, static_cast<VertexId>(per_copy + v)});
        }
    }

    GadgetMetadata meta;
    meta.gadget = "rs-index";
    meta.quantity = "rslearn";
    meta.promise_case = "high";
    meta.expected_low = {GapCmp::eq, 0};
    meta.expected_high = {GapCmp::eq, s / 2};
    meta.params = {{"r", r}, {"s", s}, {"query", query}};
    meta.phases = {{"alice", 0}, {"bob", bob_offset}};
    for (int t = 1; t <= s; ++t) {
        const bool in_sel = sel[static_cast<std::size_t>(query - 1)].count(t) != 0;
        meta.landmarks.emplace_back(
            (in_sel ? "sel_" : "unsel_") + std::to_string(t),
            std::vector<VertexId>{left(0, query, t), right(0, query, t), left(1, query, t),
                                  right(1, query, t)});
    }
    return {std::move(st), std::move(meta)};
}

// ---------------------------------------------------------------- clique gadget

namespace {

bool is_prime(std::int64_t v) {
    if (v < 2) return false;
    for (std::int64_t d = 2; d * d <= v; ++d)
        if (v % d == 0) return false;
    return true;
}

}  // namespace

std::vector<VertexId> CliqueGadget::clique_members(std::size_t q) const {
    require(q < clique_count(), Errc::invalid_argument, "clique index out of range");
    const std::int64_t a = static_cast<std::int64_t>(q) / p;
    const std::int64_t b = static_cast<std::int64_t>(q) % p;
    std::vector<VertexId> members;
    members.reserve(static_cast<std::size_t>(2 * c));
    for (std::int64_t i = 1; i <= 2 * c; ++i)
        members.push_back(static_cast<VertexId>((i - 1) * p + (a * i + b) % p));
    return members;
}

Graph CliqueGadget::union_graph(bool include_isolated) const {
    Graph g(include_isolated ? m : grouped());
    for (std::size_t q = 0; q < clique_count(); ++q) {
        auto members = clique_members(q);
        for (std::size_t i = 0; i < members.size(); ++i)
            for (std::size_t j = i + 1; j < members.size(); ++j)
                g.add_edge(members[i], members[j]);  // edge-disjointness keeps this clean
    }
    return g;
}

CliqueGadget clique_gadget(std::size_t m, int c) {
    require(c >= 1, Errc::invalid_argument, "c must be positive");
    require(8 * static_cast<std::size_t>(c) * static_cast<std::size_t>(c) < m,
            Errc::invalid_argument, "need c^2 < m/8");
    const std::int64_t lo = static_cast<std::int64_t>((m + 4 * c - 1) / (4 * c));
    const std::int64_t hi = static_cast<std::int64_t>(m / (2 * c));
    require(lo >= 2, Errc::invalid_argument, "need ceil(m/4c) >= 2");
    std::int64_t p = 0;
    for (std::int64_t v = lo; v <= hi; ++v)
        if (is_prime(v)) {
            p = v;
            break;
        }
    // Bertrand's postulate puts a prime in [lo, 2*lo-2] which sits inside the range.
    require(p != 0, Errc::verify_failed, "internal: no prime in the range");
    require(2 * c < p, Errc::invalid_argument, "need 2c < p for distinct evaluation points");
    return CliqueGadget{m, c, p};
}

GadgetOutput gen_clique_gadget_stream(std::size_t m, int c, bool include_isolated) {
    CliqueGadget cg = clique_gadget(m, c);
    Graph g = cg.union_graph(include_isolated);
    EventStream s;
    s.model = StreamModel::edge;
    s.edge_model_n = g.size();
    for (auto [u, v] : g.edges()) s.events.push_back(EdgeArrival{u, v});

    GadgetMetadata meta;
    meta.gadget = "clique";
    meta.quantity = "omega";
    meta.promise_case = "high";
    meta.expected_low = {GapCmp::eq, 2 * c};
    meta.expected_high = {GapCmp::eq, 2 * c};
    meta.params = {{"m", static_cast<std::int64_t>(m)},
                   {"c", c},
                   {"p", cg.p},
                   {"cliques", static_cast<std::int64_t>(cg.clique_count())},
                   {"isolated", include_isolated ? 1 : 0}};
    meta.phases = {{"alice", 0}};
    meta.landmarks = {{"clique_0", cg.clique_members(0)}};
    return {std::move(s), std::move(meta)};
}

// ---------------------------------------------------------------- chained clique

GadgetOutput gen_chained_clique_instance(const ChainInstance& chain, std::size_t n, int c,
                                         bool include_isolated) {
    require(c >= 1, Errc::invalid_argument, "c must be positive");
    require(chain.parties == 2 * c, Errc::invalid_argument, "chain must have 2c parties");
    require(n % static_cast<std::size_t>(2 * c) == 0, Errc::invalid_argument,
            "n must be divisible by 2c");
    const std::size_t m = n / static_cast<std::size_t>(2 * c);
    CliqueGadget cg = clique_gadget(m, c);
    require(static_cast<std::size_t>(chain.length) <= cg.clique_count(), Errc::invalid_argument,
            "chain vectors exceed the clique capacity p^2 = " +
                std::to_string(cg.clique_count()));

    const int parties = 2 * c;
    const std::size_t block = include_isolated ? m : cg.grouped();
    const std::size_t total = block * static_cast<std::size_t>(parties);
    auto base = [&](int party) { return static_cast<std::size_t>(party - 1) * block; };

    // Answer cliques, global ids.
    std::vector<std::vector<VertexId>> sigma_cliques(static_cast<std::size_t>(parties - 1));
    for (int i = 1; i < parties; ++i) {
        auto local = cg.clique_members(
            static_cast<std::size_t>(chain.indices[static_cast<std::size_t>(i - 1)] - 1));
        for (VertexId v : local)
            sigma_cliques[static_cast<std::size_t>(i - 1)].push_back(
                static_cast<VertexId>(v + base(i)));
    }
    std::vector<VertexId> final_clique;
    for (VertexId v : cg.clique_members(0))
        final_clique.push_back(static_cast<VertexId>(v + base(parties)));

    std::vector<std::vector<VertexId>> back(total);
    auto add_undirected = [&](VertexId u, VertexId v) { back[std::max(u, v)].push_back(std::min(u, v)); };

    for (int party = 1; party <= parties; ++party) {
        if (party < parties) {
            const auto& bits = chain.vectors[static_cast<std::size_t>(party - 1)];
            for (std::size_t j = 0; j < bits.size(); ++j) {
                if (!bits[j]) continue;
                auto members = cg.clique_members(j);
                for (std::size_t a = 0; a < members.size(); ++a)
                    for (std::size_t b = a + 1; b < members.size(); ++b)
                        add_undirected(static_cast<VertexId>(members[a] + base(party)),
                                       static_cast<VertexId>(members[b] + base(party)));
            }
        } else {
            for (std::size_t a = 0; a < final_clique.size(); ++a)
                for (std::size_t b = a + 1; b < final_clique.size(); ++b)
                    add_undirected(final_clique[a], final_clique[b]);
        }
        // Join every vertex of this party to all earlier answer cliques.
        for (int j = 1; j < party; ++j)
            for (std::size_t local = 0; local < block; ++local)
                for (VertexId u : sigma_cliques[static_cast<std::size_t>(j - 1)])
                    back[base(party) + local].push_back(u);
    }

    EventStream s;
    s.model = StreamModel::vertex;
    s.events.reserve(total);
    GadgetMetadata meta;
    for (int party = 1; party <= parties; ++party)
        meta.phases.emplace_back("party" + std::to_string(party), base(party));
    for (std::size_t v = 0; v < total; ++v) {
        VertexArrival ev;
        ev.id = static_cast<VertexId>(v);
        std::sort(back[v].begin(), back[v].end());
        back[v].erase(std::unique(back[v].begin(), back[v].end()), back[v].end());
        ev.back_neighbors = std::move(back[v]);
        s.events.push_back(std::move(ev));
    }

    std::vector<VertexId> witness;
    for (const auto& kc : sigma_cliques) witness.insert(witness.end(), kc.begin(), kc.end());
    witness.insert(witness.end(), final_clique.begin(), final_clique.end());
    std::sort(witness.begin(), witness.end());

    meta.gadget = "chained-clique";
    meta.quantity = "omega";
    meta.promise_case = chain.answer ? "high" : "low";
    meta.expected_low = {GapCmp::le, 4 * c - 1};
    meta.expected_high = {GapCmp::ge, 4 * c * c};
    meta.params = {{"n", static_cast<std::int64_t>(n)},
                   {"c", c},
                   {"p", cg.p},
                   {"parties", parties},
                   {"block", static_cast<std::int64_t>(block)},
                   {"chain_n", chain.length},
                   {"z", chain.answer},
                   {"isolated", include_isolated ? 1 : 0}};
    for (int i = 1; i < parties; ++i)
        meta.landmarks.emplace_back("sigma_clique_" + std::to_string(i),
                                    sigma_cliques[static_cast<std::size_t>(i - 1)]);
    meta.landmarks.emplace_back("final_clique", final_clique);
    meta.landmarks.emplace_back("clique_witness", witness);
    // decode table: the vertices of every encoded clique K^i_j
    for (int i = 1; i < parties; ++i)
        for (int j = 1; j <= chain.length; ++j) {
            std::vector<VertexId> ids;
            for (VertexId v : cg.clique_members(static_cast<std::size_t>(j - 1)))
                ids.push_back(static_cast<VertexId>(v + base(i)));
            meta.landmarks.emplace_back(
                "clique_" + std::to_string(i) + "_" + std::to_string(j), std::move(ids));
        }
    return {std::move(s), std::move(meta)};
}

std::vector<std::uint32_t> coloring_certificate(const GadgetOutput& g, int c) {
    const GadgetMetadata& meta = g.meta;
    require(meta.gadget == "chained-clique", Errc::invalid_argument,
            "coloring certificate applies to chained-clique instances");
    require(meta.param("c") == c, Errc::invalid_argument, "c does not match the instance");
    require(meta.param("z") == 0, Errc::invalid_argument,
            "all-ones instance refused: it contains a clique of size 4c^2, so no 4c-coloring exists");

    const int parties = static_cast<int>(meta.param("parties"));
    const std::size_t block = static_cast<std::size_t>(meta.param("block"));
    const std::int64_t p = meta.param("p");
    const std::size_t grouped = static_cast<std::size_t>(2 * c) * static_cast<std::size_t>(p);
    const std::size_t total = block * static_cast<std::size_t>(parties);

    // Colors 0..2c-2 for the answer cliques, then 2c shared layer colors.
    std::vector<std::uint32_t> color(total, 0);
    for (std::size_t v = 0; v < total; ++v) {
        const std::size_t local = v % block;
        const std::size_t layer = local < grouped ? local / static_cast<std::size_t>(p) : 0;
        color[v] = static_cast<std::uint32_t>(2 * c - 1 + layer);
    }
    for (int i = 1; i < parties; ++i)
        for (VertexId v : meta.landmark("sigma_clique_" + std::to_string(i)))
            color[v] = static_cast<std::uint32_t>(i - 1);

    Graph graph = materialize(g.stream);
    require(graph.size() == total, Errc::verify_failed, "instance size mismatch");
    require(is_proper_coloring(graph, color, static_cast<std::uint32_t>(4 * c)),
            Errc::verify_failed, "coloring certificate failed verification");
    return color;
}

// ---------------------------------------------------------------- interval gadget

GadgetOutput gen_explicit_interval_gadget(const std::vector<std::uint8_t>& x, int sigma) {
    require_bits(x);
    const std::size_t n = x.size();
    require(n >= 1, Errc::invalid_argument, "need n >= 1");
    require(sigma >= 1 && static_cast<std::size_t>(sigma) <= n, Errc::invalid_argument,
            "sigma out of [1, n]");

    auto a = [&](std::size_t i) { return static_cast<VertexId>(i); };          // i in [0, n)
    auto b = [&](std::size_t i) { return static_cast<VertexId>(n + i); };
    const VertexId vx = static_cast<VertexId>(2 * n);
    const VertexId vy = static_cast<VertexId>(2 * n + 1);
    const VertexId vz = static_cast<VertexId>(2 * n + 2);

    EventStream s;
    s.model = StreamModel::vertex;
    auto push_vertex = [&](VertexId id, std::vector<VertexId> backs) {
        std::sort(backs.begin(), backs.end());
        s.events.push_back(VertexArrival{id, std::move(backs)});
    };

    // First party: clique on A1, clique on B1, clique on A0 u B0 u {x}.
    for (std::size_t i = 0; i < n; ++i) {
        std::vector<VertexId> backs;
        for (std::size_t j = 0; j < i; ++j)
            if (x[i] == x[j]) backs.push_back(a(j));
        push_vertex(a(i), std::move(backs));
    }
    for (std::size_t i = 0; i < n; ++i) {
        std::vector<VertexId> backs;
        for (std::size_t j = 0; j < i; ++j)
            if (!x[i] && !x[j]) backs.push_back(b(j));
        if (!x[i])
            for (std::size_t j = 0; j < n; ++j)
                if (!x[j]) backs.push_back(a(j));
        if (x[i])
            for (std::size_t j = 0; j < i; ++j)
                if (x[j]) backs.push_back(b(j));
        push_vertex(b(i), std::move(backs));
    }
    {
        std::vector<VertexId> backs;
        for (std::size_t j = 0; j < n; ++j)
            if (!x[j]) {
                backs.push_back(a(j));
                backs.push_back(b(j));
            }
        push_vertex(vx, std::move(backs));
    }
    const std::size_t bob_offset = s.events.size();
    // Second party: y misses only a_sigma, z misses only b_sigma.
    {
        std::vector<VertexId> backs;
        for (std::size_t j = 0; j < n; ++j)
            if (j != static_cast<std::size_t>(sigma - 1)) backs.push_back(a(j));
        push_vertex(vy, std::move(backs));
    }
    {
        std::vector<VertexId> backs;
        for (std::size_t j = 0; j < n; ++j)
            if (j != static_cast<std::size_t>(sigma - 1)) backs.push_back(b(j));
        push_vertex(vz, std::move(backs));
    }

    GadgetMetadata meta;
    meta.gadget = "interval-index";
    meta.quantity = "alpha";
    meta.promise_case = x[static_cast<std::size_t>(sigma - 1)] ? "high" : "low";
    meta.expected_low = {GapCmp::eq, 3};
    meta.expected_high = {GapCmp::eq, 5};
    meta.params = {{"n", static_cast<std::int64_t>(n)},
                   {"sigma", sigma},
                   {"xsigma", x[static_cast<std::size_t>(sigma - 1)]}};
    meta.phases = {{"alice", 0}, {"bob", bob_offset}};
    meta.landmarks = {{"a_sigma", {a(static_cast<std::size_t>(sigma - 1))}},
                      {"b_sigma", {b(static_cast<std::size_t>(sigma - 1))}},
                      {"x", {vx}},
                      {"y", {vy}},
                      {"z", {vz}}};
    return {std::move(s), std::move(meta)};
}

// ---------------------------------------------------------------- strip region

GadgetOutput gen_strip_region_gadget(const std::vector<std::uint8_t>& x, int sigma,
                                     std::int64_t delta) {
    require_bits(x);
    const std::int64_t n = static_cast<std::int64_t>(x.size());
    require(n >= 1, Errc::invalid_argument, "need n >= 1");
    require(sigma >= 1 && sigma <= n, Errc::invalid_argument, "sigma out of [1, n]");
    require(delta >= 1, Errc::invalid_argument, "delta must be a positive integer");
    require((2 * n) % delta == 0, Errc::invalid_argument,
            "delta must divide 2n so that the square coordinates are integers");
    // the diagonal line must stay pairwise intersecting, else the gap collapses
    require(delta * (n - 1) <= 2 * n, Errc::invalid_argument,
            "delta too large for this n: the first party's squares would separate");

    const std::int64_t w = 4 * n / delta;
    const std::int64_t half = w / 2;  // 2n/delta
    const std::int64_t r = half;

    BallStream balls;
    balls.p = Norm::linf;
    balls.dim = 2;

    std::size_t alice_count = 0;
    for (std::int64_t i = 1; i <= n; ++i)
        if (x[static_cast<std::size_t>(i - 1)]) {
            balls.balls.push_back(make_ball2(half + 2 * i, half + 2 * n + 2 - 2 * i, r));
            ++alice_count;
        }
    balls.balls.push_back(make_ball2(3 * half + 2 * sigma + 1, half + 2 * n + 2 - 2 * sigma, r));
    balls.balls.push_back(make_ball2(half + 2 * sigma, 3 * half + 2 * n + 3 - 2 * sigma, r));

    std::int64_t max_coord = 0;
    for (const Ball& b : balls.balls)
        max_coord = std::max({max_coord, b.center[0], b.center[1]});
    balls.domain = std::max((2 + delta) * w, max_coord + r + 1);

    GadgetOutput out;
    out.stream = EventStream::from_ball_stream(balls);
    out.meta.gadget = "strip-region";
    out.meta.quantity = "alpha";
    out.meta.promise_case = x[static_cast<std::size_t>(sigma - 1)] ? "high" : "low";
    out.meta.expected_low = {GapCmp::eq, 2};
    out.meta.expected_high = {GapCmp::eq, 3};
    out.meta.params = {{"n", n},  {"sigma", sigma}, {"delta", delta},
                       {"w", w},  {"region", (2 + delta) * w},
                       {"xsigma", x[static_cast<std::size_t>(sigma - 1)]}};
    out.meta.phases = {{"alice", 0}, {"bob", alice_count}};
    return out;
}

// ---------------------------------------------------------------- square chain3

GadgetOutput gen_square_chain3_gadget(const ChainInstance& chain, int kreps) {
    require(chain.parties == 3, Errc::invalid_argument, "square gadget encodes Chain_3");
    const std::int64_t n = chain.length;
    require(n >= 2, Errc::invalid_argument, "need n >= 2");
    require(kreps >= 1 && kreps <= n, Errc::invalid_argument, "kreps out of [1, n]");
    const auto& x1 = chain.vectors[0];
    const auto& x2 = chain.vectors[1];
    const std::int64_t s1 = chain.indices[0];
    const std::int64_t s2 = chain.indices[1];

    // All coordinates doubled so the (j+3/2) columns land on integers; the
    // upper row is raised by one doubled unit to keep the two rows of squares
    // disjoint (rows exactly 2r apart would touch, and touching closed balls
    // intersect).
    const std::int64_t R = 4 * n * n;            // doubled radius 2n^2
    const std::int64_t step = 4 * n + 3;         // within-row spacing, undoubled
    const std::int64_t rep = 4 * n * n + 3 * n;  // repetition period, undoubled
    auto row_x = [&](std::int64_t i, std::int64_t j) { return 2 * (i * step + (j + 1) * rep); };
    auto col_x = [&](std::int64_t j) { return 2 * s1 * step + (2 * j + 3) * rep; };

    BallStream balls;
    balls.p = Norm::l1;
    balls.dim = 2;

    std::size_t party2_offset = 0, party3_offset = 0;
    for (std::int64_t i = 1; i <= n; ++i)
        if (x1[static_cast<std::size_t>(i - 1)])
            for (std::int64_t j = 1; j <= kreps; ++j) {
                balls.balls.push_back(make_ball2(row_x(i, j), 8 * n * n, R));
                balls.balls.push_back(make_ball2(row_x(i, j), 16 * n * n + 1, R));
            }
    party2_offset = balls.balls.size();
    for (std::int64_t i = 1; i <= n; ++i)
        if (x2[static_cast<std::size_t>(i - 1)])
            for (std::int64_t j = 1; j <= kreps; ++j)
                balls.balls.push_back(make_ball2(col_x(j), 12 * n * n - 2 * n + 4 * i, R));
    party3_offset = balls.balls.size();
    for (std::int64_t j = 1; j <= kreps; ++j) {
        balls.balls.push_back(make_ball2(col_x(j), 20 * n * n - 2 * n + 4 * s2 + 2, R));
        balls.balls.push_back(make_ball2(col_x(j), 4 * n * n - 2 * n + 4 * s2 - 2, R));
    }

    std::int64_t max_coord = 0;
    for (const Ball& b : balls.balls)
        max_coord = std::max({max_coord, b.center[0], b.center[1]});
    balls.domain = std::max<std::int64_t>(20 * n * n * n, max_coord + R + 1);

    GadgetOutput out;
    out.stream = EventStream::from_ball_stream(balls);
    out.meta.gadget = "square-chain3";
    out.meta.quantity = "alpha";
    out.meta.promise_case = chain.answer ? "high" : "low";
    // 2k+2 is attained exactly when the first party has a full pair of rows
    // left of sigma1 to fall back on; otherwise it is only an upper bound.
    bool ones_left_of_sigma1 = false;
    for (std::int64_t i = 1; i < s1; ++i)
        if (x1[static_cast<std::size_t>(i - 1)]) ones_left_of_sigma1 = true;
    out.meta.expected_low = {ones_left_of_sigma1 ? GapCmp::eq : GapCmp::le, 2 * kreps + 2};
    out.meta.expected_high = {GapCmp::eq, 5 * kreps};
    out.meta.params = {{"n", n},       {"k", kreps}, {"sigma1", s1},
                       {"sigma2", s2}, {"z", chain.answer}};
    out.meta.phases = {{"party1", 0}, {"party2", party2_offset}, {"party3", party3_offset}};
    return out;
}

// ---------------------------------------------------------------- verification

namespace {

bool compare(GapCmp cmp, std::int64_t observed, std::int64_t expected) {
    switch (cmp) {
        case GapCmp::eq: return observed == expected;
        case GapCmp::le: return observed <= expected;
        case GapCmp::ge: return observed >= expected;
    }
    return false;
}

}  // namespace

VerifyReport verify_gap(const GadgetOutput& g, std::size_t alpha_limit, std::size_t chi_limit) {
    const GadgetMetadata& meta = g.meta;
    const GapExpectation& want = meta.active_expectation();
    VerifyReport rep;
    rep.quantity = meta.quantity;
    rep.cmp = cmp_name(want.cmp);
    rep.expected = want.value;

    Graph graph = materialize(g.stream);

    if (meta.quantity == "alpha" || meta.quantity == "omega" || meta.quantity == "chi") {
        if (want.cmp == GapCmp::ge) {
            // Certificate route: the emitted witness proves the lower bound.
            const char* name = meta.quantity == "alpha" ? "alpha_witness" : "clique_witness";
            const auto& witness = meta.landmark(name);
            bool valid = meta.quantity == "alpha" ? is_independent(graph, witness)
                                                  : is_clique(graph, witness);
            rep.observed = static_cast<std::int64_t>(witness.size());
            rep.witness = witness;
            rep.pass = valid && compare(want.cmp, rep.observed, want.value);
            rep.detail = valid ? "witness verified" : "witness is not a valid certificate";
            return rep;
        }
        if (meta.quantity == "alpha") {
            auto res = exact_alpha(graph, alpha_limit);
            rep.observed = static_cast<std::int64_t>(res.value);
            rep.witness = res.witness;
        } else if (meta.quantity == "omega") {
            auto res = exact_omega(graph, alpha_limit);
            rep.observed = static_cast<std::int64_t>(res.value);
            rep.witness = res.witness;
        } else {
            auto res = exact_chi(graph, chi_limit);
            rep.observed = static_cast<std::int64_t>(res.value);
        }
        rep.pass = compare(want.cmp, rep.observed, want.value);
        rep.detail = rep.pass ? "exact oracle agrees" : "exact oracle disagrees";
        return rep;
    }

    if (meta.quantity == "decode") {
        // Every maximal IS must decode to the promised bit.
        for (const VertexSet& mis : all_maximal_independent_sets(graph)) {
            int bit = decode_maximal_index(graph, mis, meta);
            if (bit != want.value) {
                rep.observed = bit;
                rep.witness = mis;
                rep.pass = false;
                rep.detail = "a maximal IS decodes to the wrong bit";
                return rep;
            }
        }
        rep.observed = want.value;
        rep.pass = true;
        rep.detail = "every maximal IS decodes correctly";
        return rep;
    }

    if (meta.quantity == "rslearn") {
        // Every maximal IS covers all vertices, so every selected edge of the
        // queried matching must be learnable; unselected ones must not be.
        std::int64_t min_learned = -1;
        for (const VertexSet& mis : all_maximal_independent_sets(graph)) {
            std::int64_t learned = 0;
            for (const auto& [name, ids] : meta.landmarks) {
                const bool sel = name.rfind("sel_", 0) == 0;
                const bool unsel = name.rfind("unsel_", 0) == 0;
                if (!sel && !unsel) continue;
                require(ids.size() == 4, Errc::malformed_input,
                        "matching-pair landmark needs the four copy vertices");
                auto has = [&](VertexId v) {
                    return std::binary_search(mis.begin(), mis.end(), v);
                };
                bool first_pair = has(ids[0]) && has(ids[1]);
                bool second_pair = has(ids[2]) && has(ids[3]);
                if (sel) {
                    if (first_pair || second_pair) ++learned;
                } else if (first_pair || second_pair) {
                    rep.pass = false;
                    rep.witness = mis;
                    rep.detail = "an unselected matching edge was (falsely) learned";
                    return rep;
                }
            }
            if (min_learned < 0 || learned < min_learned) {
                min_learned = learned;
                if (learned < want.value) rep.witness = mis;
            }
        }
        rep.observed = min_learned;
        rep.pass = min_learned >= want.value;
        rep.detail = rep.pass ? "every maximal IS learns the full selection"
                              : "a maximal IS learns too few edges";
        return rep;
    }

    fail(Errc::invalid_argument, "unknown verification quantity '" + meta.quantity + "'");
}

}  // namespace streamis
