#pragma once

#include <stdexcept>
#include <string>

namespace streamis {

enum class Errc {
    invalid_argument = 1,  // contract violation by the caller
    malformed_input = 2,   // unparsable or inconsistent stream/metadata file
    oracle_limit = 3,      // instance exceeds the configured exact-oracle limit
    verify_failed = 4,     // a certificate or gap check did not hold
    io_error = 5,
};

class Error : public std::runtime_error {
public:
    Error(Errc code, const std::string& msg) : std::runtime_error(msg), code_(code) {}
    Errc code() const { return code_; }

private:
    Errc code_;
};

[[noreturn]] inline void fail(Errc code, const std::string& msg) { throw Error(code, msg); }

inline void require(bool ok, Errc code, const std::string& msg) {
    if (!ok) fail(code, msg);
}

}  // namespace streamis
