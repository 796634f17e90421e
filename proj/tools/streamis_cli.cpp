// Command-line front end for the streamis toolkit. Talks to the shared
// library strictly through the public C API.

#include <algorithm>
#include <chrono>
#include <cinttypes>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <map>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "streamis.h"

namespace {

int die(streamis_status st) {
    std::cerr << "error: " << streamis_last_error() << "\n";
    return st == STREAMIS_ERR_LIMIT ? 2 : 1;
}

struct StreamHandle {
    streamis_stream* s = nullptr;
    ~StreamHandle() { streamis_stream_free(s); }
};
struct GadgetHandle {
    streamis_gadget* g = nullptr;
    ~GadgetHandle() { streamis_gadget_free(g); }
};
struct RunHandle {
    streamis_run* r = nullptr;
    ~RunHandle() { streamis_run_free(r); }
};
struct GraphHandle {
    streamis_graph* g = nullptr;
    ~GraphHandle() { streamis_graph_free(g); }
};

std::string random_bits(std::mt19937_64& rng, std::size_t n) {
    std::string s(n, '0');
    for (char& c : s)
        if (rng() & 1) c = '1';
    return s;
}

struct RecordText {
    std::map<std::string, std::string> kv;
    std::vector<std::string> order;

    void set(const std::string& k, const std::string& v) {
        if (!kv.count(k)) order.push_back(k);
        kv[k] = v;
    }
    void print(std::ostream& out) const {
        out << "record run\n";
        for (const auto& k : order) out << k << " " << kv.at(k) << "\n";
    }
};

int cmd_gen(const std::string& gadget, GadgetHandle& gh, const std::string& out_path,
            const std::string& meta_path) {
    streamis_status st = streamis_gadget_save(gh.g, out_path.c_str(), meta_path.c_str());
    if (st != STREAMIS_OK) return die(st);
    std::cout << "record gen\ngadget " << gadget << "\nstream " << out_path << "\nmeta "
              << meta_path << "\n";
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"streamis: streaming independent-set algorithms, gadget generators and oracles"};
    app.require_subcommand(1);

    // ---- gen ----
    auto* gen = app.add_subcommand("gen", "generate a lower-bound gadget instance");
    gen->require_subcommand(1);
    std::string out_path = "gadget.stream", meta_path;
    std::uint64_t gseed = 0;

    auto add_output_opts = [&](CLI::App* cmd) {
        cmd->add_option("-o,--out", out_path, "output stream file");
        cmd->add_option("--meta", meta_path, "metadata sidecar (default: <out>.meta)");
    };

    // maximal-index
    auto* g_mi = gen->add_subcommand("maximal-index", "Index gadget on maximal IS (edge stream)");
    int mi_n = 2, mi_sigma = 1;
    std::string mi_x;
    g_mi->add_option("--n", mi_n, "side length; X has n^2 bits")->required();
    g_mi->add_option("--x", mi_x, "bit string of length n^2 (random when omitted)");
    g_mi->add_option("--sigma", mi_sigma, "queried index, 1-based")->required();
    g_mi->add_option("--seed", gseed, "seed for random bits");
    add_output_opts(g_mi);

    // rs-index
    auto* g_rs = gen->add_subcommand("rs-index", "RS-Index gadget (edge stream)");
    int rs_r = 2, rs_s = 4, rs_query = 1;
    std::string rs_selected;
    g_rs->add_option("--r", rs_r, "matching count")->required();
    g_rs->add_option("--s", rs_s, "matching size (even)")->required();
    g_rs->add_option("--selected", rs_selected,
                     "per-matching selected edges, e.g. '1,3;2,4' (random when omitted)");
    g_rs->add_option("--i", rs_query, "queried matching, 1-based")->required();
    g_rs->add_option("--seed", gseed, "seed for random selection");
    add_output_opts(g_rs);

    // clique
    auto* g_cl = gen->add_subcommand("clique", "edge-disjoint 2c-clique gadget (edge stream)");
    std::uint64_t cl_m = 16;
    int cl_c = 1;
    bool cl_drop = false;
    g_cl->add_option("--m", cl_m, "vertex budget")->required();
    g_cl->add_option("--c", cl_c, "half clique size")->required();
    g_cl->add_flag("--drop-isolated", cl_drop, "omit leftover isolated vertices");
    add_output_opts(g_cl);

    // chained-clique
    auto* g_cc = gen->add_subcommand("chained-clique",
                                     "Chain_{2c} clique instance (explicit vertex stream)");
    std::uint64_t cc_n = 132;
    int cc_c = 2, cc_chain_n = 8, cc_z = 1;
    std::string cc_x, cc_sigmas;
    bool cc_drop = false;
    g_cc->add_option("--c", cc_c)->required();
    g_cc->add_option("--n", cc_n, "total vertices, divisible by 2c")->required();
    g_cc->add_option("--chain-n", cc_chain_n, "chain vector length");
    g_cc->add_option("--x", cc_x, "2c-1 bit vectors joined by ';' (random when omitted)");
    g_cc->add_option("--sigmas", cc_sigmas, "2c-1 indices joined by ',' (random when omitted)");
    g_cc->add_option("--z", cc_z, "answer bit for randomized instances");
    g_cc->add_option("--seed", gseed, "seed for random bits");
    g_cc->add_flag("--drop-isolated", cc_drop, "omit leftover isolated vertices");
    add_output_opts(g_cc);

    // interval-gadget
    auto* g_iv = gen->add_subcommand("interval-gadget",
                                     "unit interval Index gadget (explicit vertex stream)");
    int iv_n = 4, iv_sigma = 1;
    std::string iv_x;
    g_iv->add_option("--n", iv_n)->required();
    g_iv->add_option("--x", iv_x, "bit string of length n (random when omitted)");
    g_iv->add_option("--sigma", iv_sigma)->required();
    g_iv->add_option("--seed", gseed);
    add_output_opts(g_iv);

    // strip-region
    auto* g_sr = gen->add_subcommand("strip-region",
                                     "confined-region square gadget (ball stream)");
    int sr_n = 2, sr_sigma = 1;
    std::int64_t sr_delta = 2;
    std::string sr_x;
    g_sr->add_option("--n", sr_n)->required();
    g_sr->add_option("--x", sr_x, "bit string of length n (random when omitted)");
    g_sr->add_option("--sigma", sr_sigma)->required();
    g_sr->add_option("--delta", sr_delta, "region slack; must divide 2n");
    g_sr->add_option("--seed", gseed);
    add_output_opts(g_sr);

    // square-chain3
    auto* g_sq = gen->add_subcommand("square-chain3", "Chain_3 unit square gadget (ball stream)");
    int sq_n = 2, sq_k = 1, sq_s1 = 1, sq_s2 = 1, sq_z = 1;
    std::string sq_x1, sq_x2;
    g_sq->add_option("--n", sq_n)->required();
    g_sq->add_option("--k", sq_k, "repetitions");
    g_sq->add_option("--x1", sq_x1, "first party bits (random when omitted)");
    g_sq->add_option("--x2", sq_x2, "second party bits (random when omitted)");
    g_sq->add_option("--sigma1", sq_s1)->required();
    g_sq->add_option("--sigma2", sq_s2)->required();
    g_sq->add_option("--z", sq_z, "answer bit for randomized instances");
    g_sq->add_option("--seed", gseed);
    add_output_opts(g_sq);

    // ---- run ----
    auto* run = app.add_subcommand("run", "run a streaming algorithm on a stream file");
    std::string run_alg, run_file, run_bound, run_record_path;
    double run_eps = 0.5;
    std::uint64_t run_seed = 0;
    std::size_t run_limit = 60;
    bool run_check = false, run_with_exact = false;
    run->add_option("alg", run_alg, "greedy | strip3 | estimator | weighted")->required();
    run->add_option("file", run_file)->required();
    run->add_option("--eps", run_eps);
    run->add_option("--seed", run_seed);
    run->add_flag("--check", run_check, "verify independence and maximality of the output");
    run->add_flag("--with-exact", run_with_exact, "also run the exact oracle for the ratio");
    run->add_option("--limit", run_limit, "exact-oracle vertex limit");
    run->add_option("--bound", run_bound,
                    "space bound over alpha, eps, n, W, output; checked against peak_items");
    run->add_option("--record", run_record_path, "also write the record to this file");
    std::string run_meta_path;
    run->add_option("--meta", run_meta_path,
                    "gadget metadata; reports the retained state size at each party "
                    "boundary (the one-way message size)");

    // ---- oracle ----
    auto* oracle = app.add_subcommand("oracle", "exact alpha/omega/chi/alpha-w of a stream file");
    std::string or_quantity, or_file;
    std::size_t or_limit = 60;
    oracle->add_option("quantity", or_quantity, "alpha | omega | chi | alpha-w")->required();
    oracle->add_option("file", or_file)->required();
    oracle->add_option("--limit", or_limit);

    // ---- verify ----
    auto* verify = app.add_subcommand("verify", "check a gadget's claimed gap");
    std::string vf_file, vf_meta;
    std::size_t vf_limit = 60;
    verify->add_option("file", vf_file)->required();
    verify->add_option("meta", vf_meta)->required();
    verify->add_option("--limit", vf_limit);

    // ---- trials ----
    auto* trials = app.add_subcommand("trials", "Monte-Carlo estimator trials");
    std::string tr_alg, tr_file;
    std::size_t tr_trials = 100;
    double tr_eps = 0.5;
    std::uint64_t tr_seed0 = 1;
    std::int64_t tr_alpha = -1;
    std::size_t tr_limit = 60;
    trials->add_option("alg", tr_alg, "estimator")->required();
    trials->add_option("file", tr_file)->required();
    trials->add_option("--trials", tr_trials);
    trials->add_option("--eps", tr_eps);
    trials->add_option("--seed0", tr_seed0);
    trials->add_option("--alpha", tr_alpha, "known exact alpha (oracle runs when omitted)");
    trials->add_option("--limit", tr_limit);

    // ---- report ----
    auto* report = app.add_subcommand("report", "merge run records into CSV and a table");
    std::vector<std::string> rp_files;
    std::string rp_out;
    report->add_option("records", rp_files, "record files from `run --record`")->required();
    report->add_option("-o,--out", rp_out, "CSV output file (stdout otherwise)");

    CLI11_PARSE(app, argc, argv);

    std::mt19937_64 rng(gseed);

    auto bits_length_ok = [](const std::string& bits, std::size_t want, const char* which) {
        if (bits.empty() || bits.size() == want) return true;
        std::cerr << "error: " << which << " has " << bits.size() << " bits, expected " << want
                  << "\n";
        return false;
    };

    if (gen->parsed()) {
        if (meta_path.empty()) meta_path = out_path + ".meta";
        GadgetHandle gh;
        streamis_status st = STREAMIS_ERR_INVALID;
        std::string name;
        if (g_mi->parsed()) {
            name = "maximal-index";
            if (!bits_length_ok(mi_x, std::size_t(mi_n) * std::size_t(mi_n), "--x")) return 1;
            if (mi_x.empty()) mi_x = random_bits(rng, std::size_t(mi_n) * std::size_t(mi_n));
            st = streamis_gen_maximal_index(mi_x.c_str(), mi_sigma, &gh.g);
        } else if (g_rs->parsed()) {
            name = "rs-index";
            if (rs_selected.empty()) {
                // uniform s/2-subsets per matching
                std::ostringstream os;
                for (int q = 0; q < rs_r; ++q) {
                    std::vector<int> all(static_cast<std::size_t>(rs_s));
                    for (int t = 0; t < rs_s; ++t) all[static_cast<std::size_t>(t)] = t + 1;
                    std::shuffle(all.begin(), all.end(), rng);
                    if (q) os << ";";
                    for (int t = 0; t < rs_s / 2; ++t)
                        os << (t ? "," : "") << all[static_cast<std::size_t>(t)];
                }
                rs_selected = os.str();
            }
            st = streamis_gen_rs_index(rs_r, rs_s, rs_selected.c_str(), rs_query, &gh.g);
        } else if (g_cl->parsed()) {
            name = "clique";
            st = streamis_gen_clique(cl_m, cl_c, cl_drop ? 0 : 1, &gh.g);
        } else if (g_cc->parsed()) {
            name = "chained-clique";
            int parties = 2 * cc_c;
            if (cc_sigmas.empty()) {
                std::ostringstream os;
                for (int i = 0; i < parties - 1; ++i)
                    os << (i ? "," : "")
                       << std::uniform_int_distribution<int>(1, cc_chain_n)(rng);
                cc_sigmas = os.str();
            }
            if (cc_x.empty()) {
                std::vector<int> sigmas;
                {
                    std::istringstream is(cc_sigmas);
                    std::string t;
                    while (std::getline(is, t, ',')) sigmas.push_back(std::stoi(t));
                }
                std::ostringstream os;
                for (int i = 0; i < parties - 1; ++i) {
                    std::string bits = random_bits(rng, static_cast<std::size_t>(cc_chain_n));
                    bits[static_cast<std::size_t>(sigmas[static_cast<std::size_t>(i)] - 1)] =
                        cc_z ? '1' : '0';
                    os << (i ? ";" : "") << bits;
                }
                cc_x = os.str();
            }
            st = streamis_gen_chained_clique(cc_c, cc_n, cc_chain_n, cc_x.c_str(),
                                             cc_sigmas.c_str(), cc_drop ? 0 : 1, &gh.g);
        } else if (g_iv->parsed()) {
            name = "interval-gadget";
            if (!bits_length_ok(iv_x, static_cast<std::size_t>(iv_n), "--x")) return 1;
            if (iv_x.empty()) iv_x = random_bits(rng, static_cast<std::size_t>(iv_n));
            st = streamis_gen_interval(iv_x.c_str(), iv_sigma, &gh.g);
        } else if (g_sr->parsed()) {
            name = "strip-region";
            if (!bits_length_ok(sr_x, static_cast<std::size_t>(sr_n), "--x")) return 1;
            if (sr_x.empty()) sr_x = random_bits(rng, static_cast<std::size_t>(sr_n));
            st = streamis_gen_strip_region(sr_x.c_str(), sr_sigma, sr_delta, &gh.g);
        } else if (g_sq->parsed()) {
            name = "square-chain3";
            if (!bits_length_ok(sq_x1, static_cast<std::size_t>(sq_n), "--x1") ||
                !bits_length_ok(sq_x2, static_cast<std::size_t>(sq_n), "--x2"))
                return 1;
            if (sq_x1.empty()) {
                sq_x1 = random_bits(rng, static_cast<std::size_t>(sq_n));
                sq_x1[static_cast<std::size_t>(sq_s1 - 1)] = sq_z ? '1' : '0';
            }
            if (sq_x2.empty()) {
                sq_x2 = random_bits(rng, static_cast<std::size_t>(sq_n));
                sq_x2[static_cast<std::size_t>(sq_s2 - 1)] = sq_z ? '1' : '0';
            }
            st = streamis_gen_square_chain3(sq_x1.c_str(), sq_x2.c_str(), sq_s1, sq_s2, sq_k,
                                            &gh.g);
        }
        if (st != STREAMIS_OK) return die(st);
        return cmd_gen(name, gh, out_path, meta_path);
    }

    if (run->parsed()) {
        StreamHandle sh;
        streamis_status st = streamis_stream_load(run_file.c_str(), &sh.s);
        if (st != STREAMIS_OK) return die(st);
        RunHandle rh;
        auto t0 = std::chrono::steady_clock::now();
        st = streamis_run_alg(sh.s, run_alg.c_str(), run_eps, run_seed, &rh.r);
        if (st != STREAMIS_OK) return die(st);
        auto ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                      std::chrono::steady_clock::now() - t0)
                      .count();

        char digest[32] = {0};
        streamis_file_digest(run_file.c_str(), digest, sizeof digest);

        RecordText rec;
        rec.set("alg", run_alg);
        rec.set("input", run_file);
        rec.set("digest", digest);
        rec.set("seed", std::to_string(run_seed));
        rec.set("output", std::to_string(streamis_run_output(rh.r)));
        if (streamis_run_weight(rh.r) >= 0)
            rec.set("weight", std::to_string(streamis_run_weight(rh.r)));

        std::int64_t exact = -1;
        if (run_with_exact) {
            const char* q = streamis_stream_weighted(sh.s) ? "alpha-w" : "alpha";
            st = streamis_exact(sh.s, q, run_limit, &exact, nullptr, 0, nullptr);
            if (st != STREAMIS_OK) return die(st);
            std::int64_t out_value = streamis_run_weight(rh.r) >= 0 ? streamis_run_weight(rh.r)
                                                                    : streamis_run_output(rh.r);
            rec.set("exact", std::to_string(exact));
            if (out_value > 0) {
                std::ostringstream os;
                os << double(exact) / double(out_value);
                rec.set("ratio", os.str());
            }
        }
        rec.set("peak_items", std::to_string(streamis_run_peak_items(rh.r)));
        rec.set("registers", std::to_string(streamis_run_registers(rh.r)));
        rec.set("events", std::to_string(streamis_run_events(rh.r)));
        rec.set("ms", std::to_string(ms));

        if (!run_meta_path.empty()) {
            // replay the algorithm on each party prefix; the retained state
            // size at the boundary is the one-way message size
            std::ifstream meta(run_meta_path);
            if (!meta.good()) {
                std::cerr << "error: cannot open " << run_meta_path << "\n";
                return 1;
            }
            std::string line;
            std::vector<std::pair<std::string, std::size_t>> phases;
            while (std::getline(meta, line)) {
                std::istringstream is(line);
                std::string key, name;
                std::size_t offset;
                if (is >> key >> name >> offset && key == "phase") phases.emplace_back(name, offset);
            }
            for (std::size_t i = 0; i < phases.size(); ++i) {
                std::size_t end = i + 1 < phases.size() ? phases[i + 1].second
                                                        : streamis_run_events(rh.r);
                StreamHandle prefix;
                st = streamis_stream_prefix(sh.s, end, &prefix.s);
                if (st != STREAMIS_OK) return die(st);
                RunHandle pr;
                st = streamis_run_alg(prefix.s, run_alg.c_str(), run_eps, run_seed, &pr.r);
                if (st != STREAMIS_OK) return die(st);
                rec.set("state_after_" + phases[i].first,
                        std::to_string(streamis_run_current_items(pr.r)));
            }
        }

        int rc = 0;
        if (run_check) {
            int indep = 0, maximal = 0;
            st = streamis_run_check(sh.s, rh.r, &indep, &maximal);
            if (st != STREAMIS_OK) return die(st);
            rec.set("independent", indep ? "yes" : "no");
            rec.set("maximal", maximal ? "yes" : "no");
            if (!indep) rc = 1;
        }
        if (!run_bound.empty()) {
            if (run_bound.find("alpha") != std::string::npos && exact < 0) {
                std::cerr << "error: the bound references alpha; pass --with-exact\n";
                return 1;
            }
            int pass = 0;
            double bound = 0;
            st = streamis_check_bound(run_bound.c_str(), double(exact), run_eps,
                                      double(streamis_run_events(rh.r)), 0.0,
                                      double(streamis_run_output(rh.r)),
                                      streamis_run_peak_items(rh.r), &pass, &bound);
            if (st != STREAMIS_OK) return die(st);
            rec.set("bound", std::to_string(bound));
            rec.set("bound_ok", pass ? "yes" : "no");
            if (!pass) rc = 1;
        }
        rec.print(std::cout);
        if (!run_record_path.empty()) {
            std::ofstream f(run_record_path);
            rec.print(f);
        }
        return rc;
    }

    if (oracle->parsed()) {
        StreamHandle sh;
        streamis_status st = streamis_stream_load(or_file.c_str(), &sh.s);
        if (st != STREAMIS_OK) return die(st);
        std::int64_t value = 0;
        std::size_t wlen = 0;
        std::vector<std::uint32_t> witness(4096);
        st = streamis_exact(sh.s, or_quantity.c_str(), or_limit, &value, witness.data(),
                            witness.size(), &wlen);
        if (st != STREAMIS_OK) return die(st);
        std::cout << "record oracle\nquantity " << or_quantity << "\ninput " << or_file
                  << "\nvalue " << value << "\nwitness";
        for (std::size_t i = 0; i < wlen && i < witness.size(); ++i) std::cout << " " << witness[i];
        std::cout << "\n";
        return 0;
    }

    if (verify->parsed()) {
        int pass = 0;
        char line[512] = {0};
        streamis_status st =
            streamis_verify(vf_file.c_str(), vf_meta.c_str(), vf_limit, &pass, line, sizeof line);
        if (st != STREAMIS_OK) return die(st);
        std::cout << "record verify\ninput " << vf_file << "\nresult " << line << "\n";
        return pass ? 0 : 1;
    }

    if (trials->parsed()) {
        if (tr_alg != "estimator") {
            std::cerr << "error: trials supports the estimator\n";
            return 1;
        }
        StreamHandle sh;
        streamis_status st = streamis_stream_load(tr_file.c_str(), &sh.s);
        if (st != STREAMIS_OK) return die(st);
        if (tr_alpha < 0) {
            st = streamis_exact(sh.s, "alpha", tr_limit, &tr_alpha, nullptr, 0, nullptr);
            if (st != STREAMIS_OK) return die(st);
        }
        std::size_t successes = 0;
        st = streamis_trials_estimator(sh.s, tr_trials, tr_eps, tr_seed0, tr_alpha, &successes);
        if (st != STREAMIS_OK) return die(st);
        double rate = tr_trials ? double(successes) / double(tr_trials) : 0.0;
        std::cout << "record trials\nalg estimator\ninput " << tr_file << "\ntrials " << tr_trials
                  << "\nsuccesses " << successes << "\nsuccess_rate " << rate << "\nalpha "
                  << tr_alpha << "\n";
        return 0;
    }

    if (report->parsed()) {
        std::ostringstream csv;
        csv << "alg,input,seed,output,exact,ratio,peak_items,ms\n";
        std::vector<std::map<std::string, std::string>> rows;
        for (const std::string& path : rp_files) {
            std::ifstream f(path);
            if (!f.good()) {
                std::cerr << "error: cannot open " << path << "\n";
                return 1;
            }
            std::map<std::string, std::string> kv;
            std::string line;
            while (std::getline(f, line)) {
                auto at = line.find(' ');
                if (at == std::string::npos) continue;
                kv[line.substr(0, at)] = line.substr(at + 1);
            }
            rows.push_back(kv);
            auto get = [&](const char* k) { return kv.count(k) ? kv[k] : ""; };
            csv << get("alg") << "," << get("input") << "," << get("seed") << "," << get("output")
                << "," << get("exact") << "," << get("ratio") << "," << get("peak_items") << ","
                << get("ms") << "\n";
        }
        if (rp_out.empty()) {
            std::cout << csv.str();
        } else {
            std::ofstream f(rp_out);
            f << csv.str();
            std::cout << "wrote " << rp_out << "\n";
        }
        std::printf("%-10s %-24s %8s %8s %8s %10s\n", "alg", "input", "output", "exact", "ratio",
                    "peak");
        for (auto& kv : rows) {
            auto get = [&](const char* k) { return kv.count(k) ? kv[k] : std::string("-"); };
            std::printf("%-10s %-24s %8s %8s %8s %10s\n", get("alg").c_str(),
                        get("input").c_str(), get("output").c_str(), get("exact").c_str(),
                        get("ratio").c_str(), get("peak_items").c_str());
        }
        return 0;
    }

    return 0;
}
