#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace lob {

/// Failure categories shared by every module. The CLI maps them to exit codes.
enum class ErrorKind {
    Domain,        ///< argument outside the operation's domain
    Precondition,  ///< caller broke a stated precondition
    Infeasible,    ///< no triangle/configuration exists for the input
    Degenerate,    ///< input collapses to a lower-dimensional figure
    Similarity,    ///< AAA in Euclidean geometry: shape without size
    Sampling,      ///< rejection sampler ran out of attempts
};

inline constexpr std::string_view to_string(ErrorKind k) noexcept {
    switch (k) {
        case ErrorKind::Domain: return "domain";
        case ErrorKind::Precondition: return "precondition";
        case ErrorKind::Infeasible: return "infeasible";
        case ErrorKind::Degenerate: return "degenerate";
        case ErrorKind::Similarity: return "similarity";
        case ErrorKind::Sampling: return "sampling";
    }
    return "unknown";
}

class Error : public std::runtime_error {
public:
    Error(ErrorKind kind, const std::string& what)
        : std::runtime_error(std::string(to_string(kind)) + ": " + what), kind_(kind) {}

    ErrorKind kind() const noexcept { return kind_; }

private:
    ErrorKind kind_;
};

[[noreturn]] inline void fail(ErrorKind kind, const std::string& what) { throw Error(kind, what); }

}  // namespace lob
