#ifndef BEEPATH_DIAGNOSTIC_HPP
#define BEEPATH_DIAGNOSTIC_HPP

#include <ostream>
#include <string>
#include <vector>

namespace beepath {

enum class Severity { Error, Warning };

/// A positioned message produced by the lexer, parser, or semantic analysis.
/// Lines and columns are 1-based and always point into the source text.
struct Diagnostic {
    Severity severity = Severity::Error;
    std::string message;
    int line = 1;
    int column = 1;
};

inline bool has_errors(const std::vector<Diagnostic>& diags) {
    for (const auto& d : diags)
        if (d.severity == Severity::Error) return true;
    return false;
}

inline std::string to_string(const Diagnostic& d) {
    std::string s = d.severity == Severity::Error ? "error" : "warning";
    return std::to_string(d.line) + ":" + std::to_string(d.column) + ": " + s + ": " + d.message;
}

inline std::ostream& operator<<(std::ostream& os, const Diagnostic& d) {
    return os << to_string(d);
}

}  // namespace beepath

#endif
