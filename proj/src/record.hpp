#pragma once

#include <cstdint>
#include <iosfwd>
#include <map>
#include <string>

#include "geometry.hpp"

namespace streamis {

// One algorithm run, as emitted to stdout and consumed by `report`.
struct RunRecord {
    std::string alg;
    std::string input;
    std::string digest;          // fnv1a-64 of the input file, hex
    std::uint64_t seed = 0;
    std::int64_t output = 0;     // set size or estimate
    std::int64_t weight = -1;    // total output weight, -1 when not weighted
    std::int64_t exact = -1;     // oracle value when it ran, else -1
    double ratio = 0.0;          // exact / output, >= 1 when both present
    std::size_t peak_items = 0;
    std::size_t registers = 0;
    std::size_t events = 0;
    std::int64_t ms = 0;

    static constexpr const char* csv_header = "alg,input,seed,output,exact,ratio,peak_items,ms";
    std::string csv_row() const;
    void write_text(std::ostream& out) const;
};

RunRecord parse_record(std::istream& in);
RunRecord load_record(const std::string& path);

std::string file_digest_hex(const std::string& path);

// Tiny arithmetic evaluator for symbolic space bounds: numbers, the variables
// supplied in env (alpha, eps, n, W, output, ...), + - * / ^, parentheses and
// ceil(...). Unknown identifiers are an error.
double eval_bound(const std::string& expr, const std::map<std::string, double>& env);

// peak_items <= bound, evaluated.
bool enforce_space(const RunRecord& r, const std::string& expr,
                   const std::map<std::string, double>& env);

struct TrialSummary {
    std::size_t trials = 0;
    std::size_t successes = 0;  // seeds with alpha/(3+eps) <= estimate <= alpha
    double success_rate() const { return trials == 0 ? 0.0 : double(successes) / double(trials); }
};

// Runs the estimator over seeds seed0..seed0+trials-1 against a known alpha.
TrialSummary estimator_trials(const BallStream& s, std::size_t trials, double eps,
                              std::uint64_t seed0, std::int64_t alpha);

}  // namespace streamis
