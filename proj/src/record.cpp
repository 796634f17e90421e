#include "record.hpp"

#include <cctype>
#include <cmath>
#include <fstream>
#include <sstream>

#include "error.hpp"
#include "estimator.hpp"

namespace streamis {

std::string RunRecord::csv_row() const {
    std::ostringstream os;
    os << alg << "," << input << "," << seed << "," << output << ",";
    if (exact >= 0) os << exact;
    os << ",";
    if (exact >= 0 && output > 0) os << ratio;
    os << "," << peak_items << "," << ms;
    return os.str();
}

void RunRecord::write_text(std::ostream& out) const {
    out << "record run\n";
    out << "alg " << alg << "\n";
    out << "input " << input << "\n";
    out << "digest " << digest << "\n";
    out << "seed " << seed << "\n";
    out << "output " << output << "\n";
    if (weight >= 0) out << "weight " << weight << "\n";
    if (exact >= 0) {
        out << "exact " << exact << "\n";
        out << "ratio " << ratio << "\n";
    }
    out << "peak_items " << peak_items << "\n";
    out << "registers " << registers << "\n";
    out << "events " << events << "\n";
    out << "ms " << ms << "\n";
}

RunRecord parse_record(std::istream& in) {
    RunRecord r;
    std::string line;
    bool have_header = false;
    std::size_t lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        if (line.empty() || line[0] == '#') continue;
        std::istringstream is(line);
        std::string key;
        is >> key;
        auto value_or_fail = [&](auto& target) {
            if (!(is >> target))
                fail(Errc::malformed_input,
                     "record line " + std::to_string(lineno) + ": missing value for " + key);
        };
        if (key == "record") {
            std::string kind;
            value_or_fail(kind);
            require(kind == "run", Errc::malformed_input, "unsupported record kind " + kind);
            have_header = true;
        } else if (key == "alg") value_or_fail(r.alg);
        else if (key == "input") value_or_fail(r.input);
        else if (key == "digest") value_or_fail(r.digest);
        else if (key == "seed") value_or_fail(r.seed);
        else if (key == "output") value_or_fail(r.output);
        else if (key == "weight") value_or_fail(r.weight);
        else if (key == "exact") value_or_fail(r.exact);
        else if (key == "ratio") value_or_fail(r.ratio);
        else if (key == "peak_items") value_or_fail(r.peak_items);
        else if (key == "registers") value_or_fail(r.registers);
        else if (key == "events") value_or_fail(r.events);
        else if (key == "ms") value_or_fail(r.ms);
        else fail(Errc::malformed_input, "record line " + std::to_string(lineno) +
                                             ": unknown key " + key);
    }
    require(have_header, Errc::malformed_input, "missing 'record run' line");
    return r;
}

RunRecord load_record(const std::string& path) {
    std::ifstream in(path);
    require(in.good(), Errc::io_error, "cannot open " + path);
    return parse_record(in);
}

std::string file_digest_hex(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    require(in.good(), Errc::io_error, "cannot open " + path);
    std::uint64_t h = 1469598103934665603ull;  // fnv offset basis
    char c;
    while (in.get(c)) {
        h ^= static_cast<unsigned char>(c);
        h *= 1099511628211ull;
    }
    std::ostringstream os;
    os << std::hex << h;
    return os.str();
}

namespace {

struct ExprParser {
    const std::string& s;
    std::size_t pos = 0;
    const std::map<std::string, double>& env;

    void skip() {
        while (pos < s.size() && std::isspace(static_cast<unsigned char>(s[pos]))) ++pos;
    }
    bool eat(char c) {
        skip();
        if (pos < s.size() && s[pos] == c) {
            ++pos;
            return true;
        }
        return false;
    }

    double expr() {
        double v = term();
        while (true) {
            if (eat('+')) v += term();
            else if (eat('-')) v -= term();
            else return v;
        }
    }
    double term() {
        double v = power();
        while (true) {
            if (eat('*')) v *= power();
            else if (eat('/')) {
                double d = power();
                require(d != 0.0, Errc::invalid_argument, "division by zero in bound");
                v /= d;
            } else return v;
        }
    }
    double power() {
        double v = factor();
        if (eat('^')) return std::pow(v, power());
        return v;
    }
    double factor() {
        skip();
        require(pos < s.size(), Errc::invalid_argument, "unexpected end of bound expression");
        if (eat('(')) {
            double v = expr();
            require(eat(')'), Errc::invalid_argument, "missing ')' in bound expression");
            return v;
        }
        if (std::isdigit(static_cast<unsigned char>(s[pos])) || s[pos] == '.') {
            std::size_t used = 0;
            double v = std::stod(s.substr(pos), &used);
            pos += used;
            return v;
        }
        if (std::isalpha(static_cast<unsigned char>(s[pos])) || s[pos] == '_') {
            std::size_t start = pos;
            while (pos < s.size() &&
                   (std::isalnum(static_cast<unsigned char>(s[pos])) || s[pos] == '_'))
                ++pos;
            std::string name = s.substr(start, pos - start);
            if (name == "ceil") {
                require(eat('('), Errc::invalid_argument, "ceil needs parentheses");
                double v = expr();
                require(eat(')'), Errc::invalid_argument, "missing ')' after ceil");
                return std::ceil(v - 1e-9);
            }
            if (name == "max") {
                require(eat('('), Errc::invalid_argument, "max needs parentheses");
                double a = expr();
                require(eat(','), Errc::invalid_argument, "max needs two arguments");
                double b = expr();
                require(eat(')'), Errc::invalid_argument, "missing ')' after max");
                return std::max(a, b);
            }
            auto it = env.find(name);
            require(it != env.end(), Errc::invalid_argument,
                    "unknown variable '" + name + "' in bound expression");
            return it->second;
        }
        fail(Errc::invalid_argument, std::string("unexpected character '") + s[pos] + "' in bound");
    }
};

}  // namespace

double eval_bound(const std::string& expr, const std::map<std::string, double>& env) {
    ExprParser p{expr, 0, env};
    double v = p.expr();
    p.skip();
    require(p.pos == p.s.size(), Errc::invalid_argument, "trailing characters in bound expression");
    return v;
}

bool enforce_space(const RunRecord& r, const std::string& expr,
                   const std::map<std::string, double>& env) {
    return static_cast<double>(r.peak_items) <= eval_bound(expr, env) + 1e-9;
}

TrialSummary estimator_trials(const BallStream& s, std::size_t trials, double eps,
                              std::uint64_t seed0, std::int64_t alpha) {
    require(alpha >= 0, Errc::invalid_argument, "trials need the exact alpha");
    TrialSummary out;
    out.trials = trials;
    for (std::size_t t = 0; t < trials; ++t) {
        auto res = alpha_estimator_3eps(s, eps, seed0 + t);
        double est = static_cast<double>(res.estimate);
        if (est * (3.0 + eps) >= static_cast<double>(alpha) - 1e-9 &&
            est <= static_cast<double>(alpha) + 1e-9)
            ++out.successes;
    }
    return out;
}

}  // namespace streamis
