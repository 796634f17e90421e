#pragma once

#include <iosfwd>
#include <string>
#include <variant>
#include <vector>

#include "geometry.hpp"
#include "graph.hpp"

namespace streamis {

enum class StreamModel { edge, vertex, ball };

const char* model_name(StreamModel m);

struct EdgeArrival {
    VertexId u = 0, v = 0;
    bool operator==(const EdgeArrival&) const = default;
};

struct VertexArrival {
    VertexId id = 0;
    std::vector<VertexId> back_neighbors;  // ids that arrived strictly earlier
    bool operator==(const VertexArrival&) const = default;
};

struct BallArrival {
    Ball ball;
    bool operator==(const BallArrival&) const = default;
};

using StreamEvent = std::variant<EdgeArrival, VertexArrival, BallArrival>;

// One stream = one model; mixing event kinds is a malformed input.
struct EventStream {
    StreamModel model = StreamModel::vertex;
    std::size_t edge_model_n = 0;              // declared vertex count (edge model)
    Norm p = Norm::linf;                       // ball model parameters
    int dim = 2;
    std::int64_t domain = 0;
    bool weighted = false;
    std::vector<StreamEvent> events;

    bool operator==(const EventStream&) const = default;

    BallStream to_ball_stream() const;  // requires ball model
    static EventStream from_ball_stream(const BallStream& s, bool weighted = false);
};

// The graph defined by the presented edges (or by intersection for balls).
// Validates the per-model event invariants and throws on violations.
Graph materialize(const EventStream& s);

// Explicit vertex streams only: each event's back-neighbors are replaced by
// their complement among the earlier ids.
EventStream complement_stream(const EventStream& s);

// Line-oriented text formats. Malformed lines raise Errc::malformed_input
// with the offending line number.
EventStream parse_stream(std::istream& in);
EventStream load_stream(const std::string& path);
void write_stream(const EventStream& s, std::ostream& out);
void save_stream(const EventStream& s, const std::string& path);

}  // namespace streamis
