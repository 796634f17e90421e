#include "stream.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>

#include "error.hpp"

namespace streamis {

const char* model_name(StreamModel m) {
    switch (m) {
        case StreamModel::edge: return "edge";
        case StreamModel::vertex: return "vertex";
        case StreamModel::ball: return "ball";
    }
    return "?";
}

BallStream EventStream::to_ball_stream() const {
    require(model == StreamModel::ball, Errc::invalid_argument, "not a ball stream");
    BallStream s;
    s.p = p;
    s.dim = dim;
    s.domain = domain;
    s.balls.reserve(events.size());
    for (const StreamEvent& e : events) {
        const auto* ball = std::get_if<BallArrival>(&e);
        require(ball != nullptr, Errc::malformed_input, "non-ball event in a ball stream");
        s.balls.push_back(ball->ball);
    }
    return s;
}

EventStream EventStream::from_ball_stream(const BallStream& s, bool weighted) {
    EventStream out;
    out.model = StreamModel::ball;
    out.p = s.p;
    out.dim = s.dim;
    out.domain = s.domain;
    out.weighted = weighted;
    out.events.reserve(s.balls.size());
    for (const Ball& b : s.balls) out.events.push_back(BallArrival{b});
    return out;
}

namespace {

void check_kind(const EventStream& s) {
    for (const StreamEvent& e : s.events) {
        bool ok = false;
        switch (s.model) {
            case StreamModel::edge: ok = std::holds_alternative<EdgeArrival>(e); break;
            case StreamModel::vertex: ok = std::holds_alternative<VertexArrival>(e); break;
            case StreamModel::ball: ok = std::holds_alternative<BallArrival>(e); break;
        }
        require(ok, Errc::malformed_input, "event kind does not match the stream model");
    }
}

}  // namespace

Graph materialize(const EventStream& s) {
    check_kind(s);
    switch (s.model) {
        case StreamModel::edge: {
            Graph g(s.edge_model_n);
            for (const StreamEvent& e : s.events) {
                const auto& edge = std::get<EdgeArrival>(e);
                g.add_edge(edge.u, edge.v);  // duplicates rejected there
            }
            return g;
        }
        case StreamModel::vertex: {
            Graph g(s.events.size());
            VertexId next = 0;
            for (const StreamEvent& e : s.events) {
                const auto& v = std::get<VertexArrival>(e);
                require(v.id == next, Errc::malformed_input,
                        "vertex ids must be dense and in arrival order, got " +
                            std::to_string(v.id) + " expected " + std::to_string(next));
                for (VertexId u : v.back_neighbors) {
                    require(u < v.id, Errc::malformed_input,
                            "back-neighbor " + std::to_string(u) + " does not precede vertex " +
                                std::to_string(v.id));
                    g.add_edge(v.id, u);
                }
                ++next;
            }
            return g;
        }
        case StreamModel::ball: {
            BallStream b = s.to_ball_stream();
            for (const Ball& ball : b.balls) validate_ball(b, ball);
            return intersection_graph(b);
        }
    }
    fail(Errc::invalid_argument, "unknown stream model");
}

EventStream complement_stream(const EventStream& s) {
    require(s.model == StreamModel::vertex, Errc::invalid_argument,
            "complement is defined for explicit vertex streams only");
    check_kind(s);
    EventStream out;
    out.model = StreamModel::vertex;
    out.events.reserve(s.events.size());
    VertexId next = 0;
    for (const StreamEvent& e : s.events) {
        const auto& v = std::get<VertexArrival>(e);
        require(v.id == next, Errc::malformed_input, "vertex ids must be dense, in arrival order");
        std::vector<char> present(v.id, 0);
        for (VertexId u : v.back_neighbors) {
            require(u < v.id, Errc::malformed_input, "back-neighbor does not precede vertex");
            present[u] = 1;
        }
        VertexArrival c;
        c.id = v.id;
        for (VertexId u = 0; u < v.id; ++u)
            if (!present[u]) c.back_neighbors.push_back(u);
        out.events.push_back(std::move(c));
        ++next;
    }
    return out;
}

namespace {

[[noreturn]] void bad_line(std::size_t lineno, const std::string& why) {
    fail(Errc::malformed_input, "line " + std::to_string(lineno) + ": " + why);
}

std::int64_t parse_int(const std::string& tok, std::size_t lineno) {
    try {
        std::size_t used = 0;
        long long v = std::stoll(tok, &used);
        if (used != tok.size()) bad_line(lineno, "trailing characters in number '" + tok + "'");
        return v;
    } catch (const Error&) {
        throw;
    } catch (...) {
        bad_line(lineno, "expected an integer, got '" + tok + "'");
    }
}

std::vector<std::string> split_ws(const std::string& line) {
    std::vector<std::string> out;
    std::istringstream is(line);
    std::string t;
    while (is >> t) out.push_back(t);
    return out;
}

// "key=value" -> value, or error.
std::string kv_value(const std::string& tok, const std::string& key, std::size_t lineno) {
    const std::string prefix = key + "=";
    if (tok.rfind(prefix, 0) != 0) bad_line(lineno, "expected " + key + "=..., got '" + tok + "'");
    return tok.substr(prefix.size());
}

}  // namespace

EventStream parse_stream(std::istream& in) {
    EventStream s;
    std::string line;
    std::size_t lineno = 0;
    bool have_header = false;
    bool have_edge_n = false;
    VertexId next_vertex = 0;

    while (std::getline(in, line)) {
        ++lineno;
        if (line.empty() || line[0] == '#') continue;
        auto tok = split_ws(line);
        if (tok.empty()) continue;

        if (!have_header) {
            if (tok[0] != "model") bad_line(lineno, "expected 'model' header");
            if (tok.size() < 2) bad_line(lineno, "missing model name");
            if (tok[1] == "edge") {
                if (tok.size() != 2) bad_line(lineno, "unexpected tokens after 'model edge'");
                s.model = StreamModel::edge;
            } else if (tok[1] == "vertex") {
                if (tok.size() != 2) bad_line(lineno, "unexpected tokens after 'model vertex'");
                s.model = StreamModel::vertex;
            } else if (tok[1] == "ball") {
                if (tok.size() != 5) bad_line(lineno, "ball header is 'model ball p=<1|2|inf> d=<d> M=<M>'");
                s.model = StreamModel::ball;
                std::string pv = kv_value(tok[2], "p", lineno);
                if (pv == "1") s.p = Norm::l1;
                else if (pv == "2") s.p = Norm::l2;
                else if (pv == "inf") s.p = Norm::linf;
                else bad_line(lineno, "norm must be 1, 2 or inf");
                s.dim = static_cast<int>(parse_int(kv_value(tok[3], "d", lineno), lineno));
                if (s.dim < 1 || s.dim > 3) bad_line(lineno, "supported dimensions are 1..3");
                s.domain = parse_int(kv_value(tok[4], "M", lineno), lineno);
                if (s.domain < 2) bad_line(lineno, "M must be at least 2");
            } else {
                bad_line(lineno, "unknown model '" + tok[1] + "'");
            }
            have_header = true;
            continue;
        }

        if (s.model == StreamModel::edge && tok[0] == "n") {
            if (have_edge_n) bad_line(lineno, "duplicate 'n' line");
            if (!s.events.empty()) bad_line(lineno, "'n' must precede edges");
            if (tok.size() != 2) bad_line(lineno, "usage: n <count>");
            std::int64_t n = parse_int(tok[1], lineno);
            if (n < 0) bad_line(lineno, "negative vertex count");
            s.edge_model_n = static_cast<std::size_t>(n);
            have_edge_n = true;
            continue;
        }

        if (tok[0] == "e") {
            if (s.model != StreamModel::edge) bad_line(lineno, "edge event in a non-edge stream");
            if (!have_edge_n) bad_line(lineno, "edge before the 'n' line");
            if (tok.size() != 3) bad_line(lineno, "usage: e <u> <v>");
            std::int64_t u = parse_int(tok[1], lineno), v = parse_int(tok[2], lineno);
            if (u < 0 || v < 0 || static_cast<std::size_t>(u) >= s.edge_model_n ||
                static_cast<std::size_t>(v) >= s.edge_model_n)
                bad_line(lineno, "edge endpoint out of range");
            if (u == v) bad_line(lineno, "self-loop");
            s.events.push_back(EdgeArrival{static_cast<VertexId>(u), static_cast<VertexId>(v)});
        } else if (tok[0] == "v") {
            if (s.model != StreamModel::vertex) bad_line(lineno, "vertex event in a non-vertex stream");
            if (tok.size() < 3 || tok[2] != ":") bad_line(lineno, "usage: v <id> : <earlier ids>");
            std::int64_t id = parse_int(tok[1], lineno);
            if (id < 0 || static_cast<VertexId>(id) != next_vertex)
                bad_line(lineno, "vertex ids must be dense 0-based in arrival order");
            VertexArrival v;
            v.id = static_cast<VertexId>(id);
            for (std::size_t i = 3; i < tok.size(); ++i) {
                std::int64_t u = parse_int(tok[i], lineno);
                if (u < 0 || u >= id) bad_line(lineno, "back-neighbor must precede the vertex");
                v.back_neighbors.push_back(static_cast<VertexId>(u));
            }
            std::sort(v.back_neighbors.begin(), v.back_neighbors.end());
            if (std::adjacent_find(v.back_neighbors.begin(), v.back_neighbors.end()) !=
                v.back_neighbors.end())
                bad_line(lineno, "duplicate back-neighbor");
            s.events.push_back(std::move(v));
            ++next_vertex;
        } else if (tok[0] == "b") {
            if (s.model != StreamModel::ball) bad_line(lineno, "ball event in a non-ball stream");
            bool has_weight = !tok.empty() && tok.back().rfind("w=", 0) == 0;
            std::size_t coords = tok.size() - 2 - (has_weight ? 1 : 0);
            if (coords != static_cast<std::size_t>(s.dim))
                bad_line(lineno, "usage: b <c1> ... <cd> <r> [w=<weight>]");
            Ball b;
            b.dim = s.dim;
            for (int i = 0; i < s.dim; ++i) b.center[i] = parse_int(tok[1 + i], lineno);
            b.radius = parse_int(tok[1 + s.dim], lineno);
            if (has_weight) {
                b.weight = parse_int(kv_value(tok.back(), "w", lineno), lineno);
                s.weighted = true;
            }
            for (int i = 0; i < s.dim; ++i)
                if (b.center[i] < 0 || b.center[i] >= s.domain)
                    bad_line(lineno, "center coordinate out of [0, M)");
            if (b.radius < 1 || b.radius >= s.domain) bad_line(lineno, "radius out of [1, M)");
            s.events.push_back(BallArrival{b});
        } else {
            bad_line(lineno, "unknown event '" + tok[0] + "'");
        }
    }
    require(have_header, Errc::malformed_input, "missing 'model' header");
    require(s.model != StreamModel::edge || have_edge_n, Errc::malformed_input,
            "edge stream is missing the 'n' line");
    return s;
}

EventStream load_stream(const std::string& path) {
    std::ifstream in(path);
    require(in.good(), Errc::io_error, "cannot open " + path);
    try {
        return parse_stream(in);
    } catch (const Error& e) {
        if (e.code() == Errc::malformed_input)
            fail(Errc::malformed_input, path + ": " + e.what());
        throw;
    }
}

void write_stream(const EventStream& s, std::ostream& out) {
    switch (s.model) {
        case StreamModel::edge:
            out << "model edge\n" << "n " << s.edge_model_n << "\n";
            break;
        case StreamModel::vertex:
            out << "model vertex\n";
            break;
        case StreamModel::ball:
            out << "model ball p=" << norm_name(s.p) << " d=" << s.dim << " M=" << s.domain
                << "\n";
            break;
    }
    for (const StreamEvent& e : s.events) {
        if (const auto* edge = std::get_if<EdgeArrival>(&e)) {
            out << "e " << edge->u << " " << edge->v << "\n";
        } else if (const auto* v = std::get_if<VertexArrival>(&e)) {
            out << "v " << v->id << " :";
            for (VertexId u : v->back_neighbors) out << " " << u;
            out << "\n";
        } else if (const auto* b = std::get_if<BallArrival>(&e)) {
            out << "b";
            for (int i = 0; i < b->ball.dim; ++i) out << " " << b->ball.center[i];
            out << " " << b->ball.radius;
            if (s.weighted) out << " w=" << b->ball.weight;
            out << "\n";
        }
    }
}

void save_stream(const EventStream& s, const std::string& path) {
    std::ofstream out(path);
    require(out.good(), Errc::io_error, "cannot write " + path);
    write_stream(s, out);
    out.flush();
    require(out.good(), Errc::io_error, "write failed for " + path);
}

}  // namespace streamis
