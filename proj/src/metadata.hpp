#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include "graph.hpp"
#include "stream.hpp"

namespace streamis {

// Comparison a gap verifier applies against the exact quantity.
enum class GapCmp { eq, le, ge };

const char* cmp_name(GapCmp c);
GapCmp parse_cmp(const std::string& s);

struct GapExpectation {
    GapCmp cmp = GapCmp::eq;
    std::int64_t value = 0;
    bool operator==(const GapExpectation&) const = default;
};

// Sidecar metadata emitted next to every gadget stream: named landmarks
// (vertex-id lists), the claimed parameter values for the two promise cases,
// phase offsets marking party boundaries, and scalar construction params.
struct GadgetMetadata {
    std::string gadget;
    std::string quantity = "alpha";   // alpha | omega | chi
    std::string promise_case = "high";  // which case this instance realizes
    GapExpectation expected_low, expected_high;
    std::vector<std::pair<std::string, std::int64_t>> params;
    std::vector<std::pair<std::string, std::size_t>> phases;  // name -> first event index
    std::vector<std::pair<std::string, std::vector<VertexId>>> landmarks;

    bool operator==(const GadgetMetadata&) const = default;

    std::int64_t param(const std::string& name) const;     // throws if absent
    bool has_param(const std::string& name) const;
    const std::vector<VertexId>& landmark(const std::string& name) const;
    bool has_landmark(const std::string& name) const;
    const GapExpectation& active_expectation() const;
};

struct GadgetOutput {
    EventStream stream;
    GadgetMetadata meta;
};

GadgetMetadata parse_metadata(std::istream& in);
GadgetMetadata load_metadata(const std::string& path);
void write_metadata(const GadgetMetadata& m, std::ostream& out);
void save_metadata(const GadgetMetadata& m, const std::string& path);

void save_gadget(const GadgetOutput& g, const std::string& stream_path,
                 const std::string& meta_path);

}  // namespace streamis
