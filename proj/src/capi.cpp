#include "streamis.h"

#include <cstring>
#include <map>
#include <memory>
#include <string>
#include <vector>

#include "error.hpp"
#include "estimator.hpp"
#include "gadgets.hpp"
#include "greedy.hpp"
#include "metadata.hpp"
#include "oracle.hpp"
#include "record.hpp"
#include "stream.hpp"
#include "strips.hpp"
#include "weighted.hpp"

using namespace streamis;

struct streamis_stream {
    EventStream s;
};
struct streamis_graph {
    Graph g;
};
struct streamis_gadget {
    GadgetOutput g;
};
struct streamis_run {
    std::string alg;
    std::int64_t output = 0;
    std::int64_t weight = -1;
    std::size_t peak_items = 0;
    std::size_t current_items = 0;
    std::size_t registers = 0;
    std::size_t events = 0;
    std::vector<VertexId> members;
};

namespace {

thread_local std::string g_last_error;

streamis_status to_status(const Error& e) {
    g_last_error = e.what();
    switch (e.code()) {
        case Errc::invalid_argument: return STREAMIS_ERR_INVALID;
        case Errc::malformed_input: return STREAMIS_ERR_PARSE;
        case Errc::oracle_limit: return STREAMIS_ERR_LIMIT;
        case Errc::verify_failed: return STREAMIS_ERR_VERIFY;
        case Errc::io_error: return STREAMIS_ERR_IO;
    }
    return STREAMIS_ERR_INTERNAL;
}

template <typename F>
streamis_status guarded(F&& f) {
    try {
        f();
        return STREAMIS_OK;
    } catch (const Error& e) {
        return to_status(e);
    } catch (const std::exception& e) {
        g_last_error = e.what();
        return STREAMIS_ERR_INTERNAL;
    } catch (...) {
        g_last_error = "unknown error";
        return STREAMIS_ERR_INTERNAL;
    }
}

streamis_status invalid(const std::string& msg) {
    g_last_error = msg;
    return STREAMIS_ERR_INVALID;
}

std::vector<std::uint8_t> parse_bits(const char* s) {
    require(s != nullptr, Errc::invalid_argument, "null bit vector");
    std::vector<std::uint8_t> out;
    for (const char* c = s; *c; ++c) {
        require(*c == '0' || *c == '1', Errc::invalid_argument,
                "bit vectors are strings over {0,1}");
        out.push_back(static_cast<std::uint8_t>(*c - '0'));
    }
    require(!out.empty(), Errc::invalid_argument, "empty bit vector");
    return out;
}

std::vector<std::string> split(const std::string& s, char sep) {
    std::vector<std::string> out;
    std::size_t start = 0;
    while (true) {
        std::size_t at = s.find(sep, start);
        if (at == std::string::npos) {
            out.push_back(s.substr(start));
            return out;
        }
        out.push_back(s.substr(start, at - start));
        start = at + 1;
    }
}

std::vector<int> parse_ints(const std::string& s) {
    std::vector<int> out;
    for (const std::string& t : split(s, ',')) {
        require(!t.empty(), Errc::invalid_argument, "empty entry in integer list");
        out.push_back(std::stoi(t));
    }
    return out;
}

streamis_status copy_ids(const std::vector<VertexId>& ids, std::uint32_t* buf, size_t cap,
                         size_t* len) {
    if (len) *len = ids.size();
    if (buf) {
        if (cap < ids.size()) return invalid("witness buffer too small");
        std::memcpy(buf, ids.data(), ids.size() * sizeof(std::uint32_t));
    }
    return STREAMIS_OK;
}

streamis_status copy_string(const std::string& s, char* buf, size_t cap) {
    if (!buf || cap == 0) return STREAMIS_OK;
    std::size_t n = std::min(cap - 1, s.size());
    std::memcpy(buf, s.data(), n);
    buf[n] = '\0';
    return STREAMIS_OK;
}

}  // namespace

extern "C" {

uint32_t streamis_abi_version(void) { return 1; }

const char* streamis_last_error(void) { return g_last_error.c_str(); }

streamis_status streamis_stream_load(const char* path, streamis_stream** out) {
    if (!path || !out) return invalid("null argument");
    return guarded([&] { *out = new streamis_stream{load_stream(path)}; });
}

streamis_status streamis_stream_save(const streamis_stream* s, const char* path) {
    if (!s || !path) return invalid("null argument");
    return guarded([&] { save_stream(s->s, path); });
}

void streamis_stream_free(streamis_stream* s) { delete s; }

size_t streamis_stream_events(const streamis_stream* s) { return s ? s->s.events.size() : 0; }

int streamis_stream_model(const streamis_stream* s) {
    if (!s) return -1;
    return static_cast<int>(s->s.model);
}

int streamis_stream_weighted(const streamis_stream* s) { return s && s->s.weighted ? 1 : 0; }

streamis_status streamis_stream_prefix(const streamis_stream* s, size_t count,
                                       streamis_stream** out) {
    if (!s || !out) return invalid("null argument");
    return guarded([&] {
        require(count <= s->s.events.size(), Errc::invalid_argument,
                "prefix longer than the stream");
        EventStream p = s->s;
        p.events.resize(count);
        *out = new streamis_stream{std::move(p)};
    });
}

streamis_status streamis_materialize(const streamis_stream* s, streamis_graph** out) {
    if (!s || !out) return invalid("null argument");
    return guarded([&] { *out = new streamis_graph{materialize(s->s)}; });
}

void streamis_graph_free(streamis_graph* g) { delete g; }

size_t streamis_graph_order(const streamis_graph* g) { return g ? g->g.size() : 0; }

size_t streamis_graph_edges(const streamis_graph* g) { return g ? g->g.edge_count() : 0; }

streamis_status streamis_exact(const streamis_stream* s, const char* quantity, size_t limit,
                               int64_t* value, uint32_t* witness, size_t witness_cap,
                               size_t* witness_len) {
    if (!s || !quantity || !value) return invalid("null argument");
    return guarded([&] {
        Graph g = materialize(s->s);
        std::string q = quantity;
        if (q == "alpha") {
            auto r = exact_alpha(g, limit);
            *value = static_cast<int64_t>(r.value);
            copy_ids(r.witness, witness, witness_cap, witness_len);
        } else if (q == "omega") {
            auto r = exact_omega(g, limit);
            *value = static_cast<int64_t>(r.value);
            copy_ids(r.witness, witness, witness_cap, witness_len);
        } else if (q == "chi") {
            auto r = exact_chi(g, limit);
            *value = static_cast<int64_t>(r.value);
            std::vector<VertexId> ids(r.coloring.begin(), r.coloring.end());
            copy_ids(ids, witness, witness_cap, witness_len);
        } else if (q == "alpha-w") {
            require(s->s.model == StreamModel::ball, Errc::invalid_argument,
                    "alpha-w needs a ball stream with weights");
            BallStream balls = s->s.to_ball_stream();
            std::vector<std::int64_t> weights;
            for (const Ball& b : balls.balls) weights.push_back(b.weight);
            auto r = exact_alpha_weighted(g, weights, limit);
            *value = r.value;
            copy_ids(r.witness, witness, witness_cap, witness_len);
        } else {
            fail(Errc::invalid_argument, "unknown quantity '" + q + "'");
        }
    });
}

streamis_status streamis_run_alg(const streamis_stream* s, const char* alg, double eps,
                                 uint64_t seed, streamis_run** out) {
    if (!s || !alg || !out) return invalid("null argument");
    return guarded([&] {
        std::string a = alg;
        auto run = std::make_unique<streamis_run>();
        run->alg = a;
        run->events = s->s.events.size();
        if (a == "greedy") {
            auto r = greedy_mis(s->s);
            run->output = static_cast<std::int64_t>(r.members.size());
            run->peak_items = r.space.peak_items();
            run->current_items = r.space.current_items();
            run->members = r.members;
        } else if (a == "strip3") {
            auto r = unit_square_mis_3approx(s->s.to_ball_stream());
            run->output = static_cast<std::int64_t>(r.chosen.size());
            run->peak_items = r.space.peak_items();
            run->current_items = r.space.current_items();
            for (std::size_t idx : r.chosen) run->members.push_back(static_cast<VertexId>(idx));
        } else if (a == "estimator") {
            auto r = alpha_estimator_3eps(s->s.to_ball_stream(), eps, seed);
            run->output = static_cast<std::int64_t>(r.estimate);
            run->peak_items = r.space.peak_items();
            run->current_items = r.space.current_items();
            run->registers = r.space.peak_registers();
        } else if (a == "weighted") {
            auto r = weighted_unit_square_3eps(s->s.to_ball_stream(), eps);
            run->output = static_cast<std::int64_t>(r.chosen.size());
            run->weight = r.total_weight;
            run->peak_items = r.space.peak_items();
            run->current_items = r.space.current_items();
            for (std::size_t idx : r.chosen) run->members.push_back(static_cast<VertexId>(idx));
        } else {
            fail(Errc::invalid_argument, "unknown algorithm '" + a + "'");
        }
        *out = run.release();
    });
}

void streamis_run_free(streamis_run* r) { delete r; }

int64_t streamis_run_output(const streamis_run* r) { return r ? r->output : 0; }

int64_t streamis_run_weight(const streamis_run* r) { return r ? r->weight : -1; }

size_t streamis_run_peak_items(const streamis_run* r) { return r ? r->peak_items : 0; }

size_t streamis_run_current_items(const streamis_run* r) { return r ? r->current_items : 0; }

size_t streamis_run_registers(const streamis_run* r) { return r ? r->registers : 0; }

size_t streamis_run_events(const streamis_run* r) { return r ? r->events : 0; }

streamis_status streamis_run_members(const streamis_run* r, uint32_t* buf, size_t cap,
                                     size_t* len) {
    if (!r) return invalid("null argument");
    return copy_ids(r->members, buf, cap, len);
}

streamis_status streamis_run_check(const streamis_stream* s, const streamis_run* r,
                                   int* independent, int* maximal) {
    if (!s || !r || !independent || !maximal) return invalid("null argument");
    return guarded([&] {
        Graph g = materialize(s->s);
        VertexSet set(r->members.begin(), r->members.end());
        *independent = is_independent(g, set) ? 1 : 0;
        *maximal = *independent ? (is_maximal(g, set) ? 1 : 0) : 0;
    });
}

streamis_status streamis_gen_maximal_index(const char* xbits, int sigma, streamis_gadget** out) {
    if (!xbits || !out) return invalid("null argument");
    return guarded([&] {
        *out = new streamis_gadget{gen_maximal_index_gadget(parse_bits(xbits), sigma)};
    });
}

streamis_status streamis_gen_rs_index(int r, int s, const char* selected, int query,
                                      streamis_gadget** out) {
    if (!selected || !out) return invalid("null argument");
    return guarded([&] {
        std::vector<std::vector<int>> sel;
        for (const std::string& part : split(selected, ';')) sel.push_back(parse_ints(part));
        *out = new streamis_gadget{gen_rs_index_gadget(r, s, sel, query)};
    });
}

streamis_status streamis_gen_clique(uint64_t m, int c, int include_isolated,
                                    streamis_gadget** out) {
    if (!out) return invalid("null argument");
    return guarded([&] {
        *out = new streamis_gadget{gen_clique_gadget_stream(m, c, include_isolated != 0)};
    });
}

streamis_status streamis_gen_chained_clique(int c, uint64_t n, int chain_n, const char* xvectors,
                                            const char* sigmas, int include_isolated,
                                            streamis_gadget** out) {
    if (!xvectors || !sigmas || !out) return invalid("null argument");
    return guarded([&] {
        std::vector<std::vector<std::uint8_t>> vectors;
        for (const std::string& part : split(xvectors, ';'))
            vectors.push_back(parse_bits(part.c_str()));
        ChainInstance chain =
            make_chain_instance(2 * c, chain_n, std::move(vectors), parse_ints(sigmas));
        *out = new streamis_gadget{
            gen_chained_clique_instance(chain, n, c, include_isolated != 0)};
    });
}

streamis_status streamis_gen_interval(const char* xbits, int sigma, streamis_gadget** out) {
    if (!xbits || !out) return invalid("null argument");
    return guarded([&] {
        *out = new streamis_gadget{gen_explicit_interval_gadget(parse_bits(xbits), sigma)};
    });
}

streamis_status streamis_gen_strip_region(const char* xbits, int sigma, int64_t delta,
                                          streamis_gadget** out) {
    if (!xbits || !out) return invalid("null argument");
    return guarded([&] {
        *out = new streamis_gadget{gen_strip_region_gadget(parse_bits(xbits), sigma, delta)};
    });
}

streamis_status streamis_gen_square_chain3(const char* x1bits, const char* x2bits, int sigma1,
                                           int sigma2, int kreps, streamis_gadget** out) {
    if (!x1bits || !x2bits || !out) return invalid("null argument");
    return guarded([&] {
        auto x1 = parse_bits(x1bits);
        auto x2 = parse_bits(x2bits);
        const int length = static_cast<int>(x1.size());
        ChainInstance chain = make_chain_instance(3, length, {std::move(x1), std::move(x2)},
                                                  {sigma1, sigma2});
        *out = new streamis_gadget{gen_square_chain3_gadget(chain, kreps)};
    });
}

void streamis_gadget_free(streamis_gadget* g) { delete g; }

streamis_status streamis_gadget_save(const streamis_gadget* g, const char* stream_path,
                                     const char* meta_path) {
    if (!g || !stream_path || !meta_path) return invalid("null argument");
    return guarded([&] { save_gadget(g->g, stream_path, meta_path); });
}

streamis_status streamis_gadget_stream(const streamis_gadget* g, streamis_stream** out) {
    if (!g || !out) return invalid("null argument");
    return guarded([&] { *out = new streamis_stream{g->g.stream}; });
}

streamis_status streamis_verify(const char* stream_path, const char* meta_path,
                                size_t alpha_limit, int* pass, char* report, size_t report_cap) {
    if (!stream_path || !meta_path || !pass) return invalid("null argument");
    return guarded([&] {
        GadgetOutput g{load_stream(stream_path), load_metadata(meta_path)};
        VerifyReport r = verify_gap(g, alpha_limit);
        *pass = r.pass ? 1 : 0;
        std::string line = r.quantity + " " + r.cmp + " " + std::to_string(r.expected) +
                           " observed " + std::to_string(r.observed) + " : " +
                           (r.pass ? "pass" : "FAIL") + " (" + r.detail + ")";
        copy_string(line, report, report_cap);
    });
}

streamis_status streamis_trials_estimator(const streamis_stream* s, size_t trials, double eps,
                                          uint64_t seed0, int64_t alpha, size_t* successes) {
    if (!s || !successes) return invalid("null argument");
    return guarded([&] {
        TrialSummary t = estimator_trials(s->s.to_ball_stream(), trials, eps, seed0, alpha);
        *successes = t.successes;
    });
}

streamis_status streamis_check_bound(const char* expr, double alpha, double eps, double n,
                                     double w, double output, size_t peak_items, int* pass,
                                     double* bound) {
    if (!expr || !pass) return invalid("null argument");
    return guarded([&] {
        std::map<std::string, double> env{
            {"alpha", alpha}, {"eps", eps}, {"n", n}, {"W", w}, {"output", output}};
        double b = eval_bound(expr, env);
        if (bound) *bound = b;
        *pass = static_cast<double>(peak_items) <= b + 1e-9 ? 1 : 0;
    });
}

streamis_status streamis_file_digest(const char* path, char* hex, size_t cap) {
    if (!path || !hex) return invalid("null argument");
    return guarded([&] { copy_string(file_digest_hex(path), hex, cap); });
}

}  // extern "C"
