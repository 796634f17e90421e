#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "chain.hpp"
#include "metadata.hpp"
#include "oracle.hpp"

namespace streamis {

// ---- Index gadget on maximal independent sets (edge stream, two phases) ----

// Alice encodes the n*n bit matrix X as two disjoint bipartite copies; Bob
// joins everything except the vertex pairs addressed by sigma. Any maximal IS
// of the result reveals X_sigma. |x| must be a perfect square, sigma in [1,|x|].
GadgetOutput gen_maximal_index_gadget(const std::vector<std::uint8_t>& x, int sigma);

// 0 iff one of the addressed pairs is fully inside the maximal IS; equals
// X_sigma for every maximal IS of the gadget. Throws if mis is not maximal.
int decode_maximal_index(const Graph& g, const VertexSet& mis, const GadgetMetadata& meta);

// ---- RS-Index gadget (edge stream, two phases) ----

// Mechanics demonstrator on the vertex-disjoint (r,s)-RS graph: r disjoint
// induced matchings of size s on 2rs vertices. Each matching keeps the
// complement of its selected half; Bob joins the two copies except around the
// queried matching. selected[q] holds s/2 distinct 1-based edge indices.
GadgetOutput gen_rs_index_gadget(int r, int s, const std::vector<std::vector<int>>& selected,
                                 int query);

// ---- Erasure-code clique gadget ----

struct CliqueGadget {
    std::size_t m = 0;   // vertex budget, isolated leftovers included
    int c = 1;
    std::int64_t p = 0;  // smallest prime in [ceil(m/4c), floor(m/2c)]

    std::size_t grouped() const { return static_cast<std::size_t>(2 * c) * p; }
    std::size_t clique_count() const { return static_cast<std::size_t>(p) * p; }
    // Members of clique q = a*p + b: layer i in [1, 2c] contributes
    // (i-1)*p + (a*i + b) mod p. Cliques are pairwise edge-disjoint.
    std::vector<VertexId> clique_members(std::size_t q) const;
    // Union of all p^2 cliques (omega = 2c), optionally with the isolated
    // leftover vertices.
    Graph union_graph(bool include_isolated) const;
};

// Requires c >= 1, 8c^2 < m, ceil(m/4c) >= 2.
CliqueGadget clique_gadget(std::size_t m, int c);

// The full clique-gadget union as an edge stream with omega expectations.
GadgetOutput gen_clique_gadget_stream(std::size_t m, int c, bool include_isolated);

// ---- Chained clique instance (explicit vertex stream, per-party phases) ----

// Encodes a Chain_{2c} instance: parties 1..2c-1 write their vectors onto
// edge-disjoint cliques of their own vertex group, the final party emits one
// 2c-clique, and every party joins its vertices to all earlier answer cliques.
// All-ones answers create a 4c^2 clique; all-zeros caps omega at 4c-1.
// Requires chain.parties == 2c, n divisible by 2c, chain.length <= p^2.
GadgetOutput gen_chained_clique_instance(const ChainInstance& chain, std::size_t n, int c,
                                         bool include_isolated = true);

// 4c-coloring certificate for the all-zeros case: answer cliques are
// monochromatic, the rest is colored by layer. Refuses all-ones instances.
std::vector<std::uint32_t> coloring_certificate(const GadgetOutput& g, int c);

// ---- Geometric index gadgets ----

// Unit interval intersection graph as an explicit vertex stream: three cliques
// from X plus Bob's two selective non-neighbors. alpha = 5 if X_sigma else 3.
GadgetOutput gen_explicit_interval_gadget(const std::vector<std::uint8_t>& x, int sigma);

// w-by-w squares in a (2+delta)w region, diagonal line plus Bob's two squares.
// alpha = 3 if X_sigma else 2. delta must divide 2n so coordinates stay
// integral (w = 4n/delta).
GadgetOutput gen_strip_region_gadget(const std::vector<std::uint8_t>& x, int sigma,
                                     std::int64_t delta);

// Chain_3 reduction on a unit l1 ball stream, three party phases, kreps
// repetitions. alpha = 5k when the answer bit is 1 and 2k+2 when it is 0.
// Coordinates are doubled onto the integer lattice.
GadgetOutput gen_square_chain3_gadget(const ChainInstance& chain, int kreps);

// ---- Gap verification ----

struct VerifyReport {
    bool pass = false;
    std::string quantity;
    std::string cmp;
    std::int64_t expected = 0;
    std::int64_t observed = 0;
    VertexSet witness;
    std::string detail;
};

// Materializes the instance, computes the exact quantity (or checks the
// emitted certificate for ge-expectations), and compares against the claimed
// value for the instance's promise case.
VerifyReport verify_gap(const GadgetOutput& g, std::size_t alpha_limit = kDefaultAlphaLimit,
                        std::size_t chi_limit = kDefaultChiLimit);

}  // namespace streamis
