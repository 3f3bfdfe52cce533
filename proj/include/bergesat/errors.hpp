#ifndef BERGESAT_ERRORS_HPP
#define BERGESAT_ERRORS_HPP

#include <stdexcept>
#include <string>
#include <utility>

namespace bergesat {

enum class errc {
    edge_out_of_range,
    wrong_arity,
    duplicate_vertex_in_edge,
    duplicate_edge,
    parse_error,
    not_divisible,
    invalid_params,
    trials_exhausted,
    pattern_too_large,
    budget_exceeded,
    no_feasible_a,
};

inline const char* errc_name(errc c) noexcept {
    switch (c) {
        case errc::edge_out_of_range: return "edge_out_of_range";
        case errc::wrong_arity: return "wrong_arity";
        case errc::duplicate_vertex_in_edge: return "duplicate_vertex_in_edge";
        case errc::duplicate_edge: return "duplicate_edge";
        case errc::parse_error: return "parse_error";
        case errc::not_divisible: return "not_divisible";
        case errc::invalid_params: return "invalid_params";
        case errc::trials_exhausted: return "trials_exhausted";
        case errc::pattern_too_large: return "pattern_too_large";
        case errc::budget_exceeded: return "budget_exceeded";
        case errc::no_feasible_a: return "no_feasible_a";
    }
    return "unknown";
}

/// Library-wide exception type. `code()` identifies the failure class so
/// callers (and tests) can dispatch without parsing the message.
class Error : public std::runtime_error {
public:
    Error(errc code, const std::string& message)
        : std::runtime_error(std::string(errc_name(code)) + ": " + message), code_(code) {}

    errc code() const noexcept { return code_; }

private:
    errc code_;
};

[[noreturn]] inline void raise(errc code, const std::string& message) {
    throw Error(code, message);
}

} // namespace bergesat

#endif // BERGESAT_ERRORS_HPP
