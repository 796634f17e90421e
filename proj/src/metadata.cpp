#include "metadata.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>

#include "error.hpp"

namespace streamis {

const char* cmp_name(GapCmp c) {
    switch (c) {
        case GapCmp::eq: return "eq";
        case GapCmp::le: return "le";
        case GapCmp::ge: return "ge";
    }
    return "?";
}

GapCmp parse_cmp(const std::string& s) {
    if (s == "eq") return GapCmp::eq;
    if (s == "le") return GapCmp::le;
    if (s == "ge") return GapCmp::ge;
    fail(Errc::malformed_input, "unknown comparison '" + s + "'");
}

std::int64_t GadgetMetadata::param(const std::string& name) const {
    for (const auto& [k, v] : params)
        if (k == name) return v;
    fail(Errc::invalid_argument, "missing gadget parameter '" + name + "'");
}

bool GadgetMetadata::has_param(const std::string& name) const {
    return std::any_of(params.begin(), params.end(),
                       [&](const auto& kv) { return kv.first == name; });
}

const std::vector<VertexId>& GadgetMetadata::landmark(const std::string& name) const {
    for (const auto& [k, v] : landmarks)
        if (k == name) return v;
    fail(Errc::invalid_argument, "missing gadget landmark '" + name + "'");
}

bool GadgetMetadata::has_landmark(const std::string& name) const {
    return std::any_of(landmarks.begin(), landmarks.end(),
                       [&](const auto& kv) { return kv.first == name; });
}

const GapExpectation& GadgetMetadata::active_expectation() const {
    return promise_case == "high" ? expected_high : expected_low;
}

GadgetMetadata parse_metadata(std::istream& in) {
    GadgetMetadata m;
    std::string line;
    std::size_t lineno = 0;
    bool have_gadget = false;
    auto bad = [&](const std::string& why) -> void {
        fail(Errc::malformed_input, "meta line " + std::to_string(lineno) + ": " + why);
    };
    while (std::getline(in, line)) {
        ++lineno;
        if (line.empty() || line[0] == '#') continue;
        std::istringstream is(line);
        std::string key;
        is >> key;
        if (key == "gadget") {
            if (!(is >> m.gadget)) bad("missing gadget name");
            have_gadget = true;
        } else if (key == "quantity") {
            if (!(is >> m.quantity)) bad("missing quantity");
            if (m.quantity != "alpha" && m.quantity != "omega" && m.quantity != "chi" &&
                m.quantity != "decode" && m.quantity != "rslearn")
                bad("quantity must be alpha, omega, chi, decode or rslearn");
        } else if (key == "case") {
            if (!(is >> m.promise_case)) bad("missing case");
            if (m.promise_case != "low" && m.promise_case != "high")
                bad("case must be low or high");
        } else if (key == "expect") {
            std::string which, cmp;
            std::int64_t value;
            if (!(is >> which >> cmp >> value)) bad("usage: expect <low|high> <eq|le|ge> <value>");
            GapExpectation e{parse_cmp(cmp), value};
            if (which == "low")
                m.expected_low = e;
            else if (which == "high")
                m.expected_high = e;
            else
                bad("expect needs low or high");
        } else if (key == "param") {
            std::string name;
            std::int64_t value;
            if (!(is >> name >> value)) bad("usage: param <name> <value>");
            m.params.emplace_back(name, value);
        } else if (key == "phase") {
            std::string name;
            std::int64_t offset;
            if (!(is >> name >> offset) || offset < 0) bad("usage: phase <name> <event offset>");
            m.phases.emplace_back(name, static_cast<std::size_t>(offset));
        } else if (key == "landmark") {
            std::string name;
            if (!(is >> name)) bad("usage: landmark <name> <ids...>");
            std::vector<VertexId> ids;
            std::int64_t v;
            while (is >> v) {
                if (v < 0) bad("negative vertex id");
                ids.push_back(static_cast<VertexId>(v));
            }
            m.landmarks.emplace_back(name, std::move(ids));
        } else {
            bad("unknown metadata key '" + key + "'");
        }
    }
    require(have_gadget, Errc::malformed_input, "metadata is missing the 'gadget' line");
    return m;
}

GadgetMetadata load_metadata(const std::string& path) {
    std::ifstream in(path);
    require(in.good(), Errc::io_error, "cannot open " + path);
    try {
        return parse_metadata(in);
    } catch (const Error& e) {
        if (e.code() == Errc::malformed_input) fail(Errc::malformed_input, path + ": " + e.what());
        throw;
    }
}

void write_metadata(const GadgetMetadata& m, std::ostream& out) {
    out << "gadget " << m.gadget << "\n";
    out << "quantity " << m.quantity << "\n";
    out << "case " << m.promise_case << "\n";
    out << "expect low " << cmp_name(m.expected_low.cmp) << " " << m.expected_low.value << "\n";
    out << "expect high " << cmp_name(m.expected_high.cmp) << " " << m.expected_high.value << "\n";
    for (const auto& [k, v] : m.params) out << "param " << k << " " << v << "\n";
    for (const auto& [k, v] : m.phases) out << "phase " << k << " " << v << "\n";
    for (const auto& [k, ids] : m.landmarks) {
        out << "landmark " << k;
        for (VertexId id : ids) out << " " << id;
        out << "\n";
    }
}

void save_metadata(const GadgetMetadata& m, const std::string& path) {
    std::ofstream out(path);
    require(out.good(), Errc::io_error, "cannot write " + path);
    write_metadata(m, out);
    out.flush();
    require(out.good(), Errc::io_error, "write failed for " + path);
}

void save_gadget(const GadgetOutput& g, const std::string& stream_path,
                 const std::string& meta_path) {
    save_stream(g.stream, stream_path);
    save_metadata(g.meta, meta_path);
}

}  // namespace streamis
