#pragma once

#include <set>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>

namespace curvelab {

/// Error codes surfaced by every module. The CLI renders them verbatim.
enum class Errc {
    NotThroughOrigin,
    PrecisionExhausted,
    NotYGeneral,
    HypothesisViolated,
    SharedComponent,
    NotNormalForm,
    Smooth,
    ExtensionRequired,
    NonIsolated,
    NotIrreducible,
    OddMilnor,
    InvalidBranch,
    NotAParametrization,
    DegenerateCase,
    ZeroOnCircle,
    NonConvergent,
    NotAVertex,
    DegenerateVertex,
    NotPrimitive,
    ClosedFormMismatch,
    InvalidArgument,
    ParseError,
    ConstantComponent,
    Internal,
};

inline std::string_view errc_name(Errc c) {
    switch (c) {
    case Errc::NotThroughOrigin: return "NotThroughOrigin";
    case Errc::PrecisionExhausted: return "PrecisionExhausted";
    case Errc::NotYGeneral: return "NotYGeneral";
    case Errc::HypothesisViolated: return "HypothesisViolated";
    case Errc::SharedComponent: return "SharedComponent";
    case Errc::NotNormalForm: return "NotNormalForm";
    case Errc::Smooth: return "Smooth";
    case Errc::ExtensionRequired: return "ExtensionRequired";
    case Errc::NonIsolated: return "NonIsolated";
    case Errc::NotIrreducible: return "NotIrreducible";
    case Errc::OddMilnor: return "OddMilnor";
    case Errc::InvalidBranch: return "InvalidBranch";
    case Errc::NotAParametrization: return "NotAParametrization";
    case Errc::DegenerateCase: return "DegenerateCase";
    case Errc::ZeroOnCircle: return "ZeroOnCircle";
    case Errc::NonConvergent: return "NonConvergent";
    case Errc::NotAVertex: return "NotAVertex";
    case Errc::DegenerateVertex: return "DegenerateVertex";
    case Errc::NotPrimitive: return "NotPrimitive";
    case Errc::ClosedFormMismatch: return "ClosedFormMismatch";
    case Errc::InvalidArgument: return "InvalidArgument";
    case Errc::ParseError: return "ParseError";
    case Errc::ConstantComponent: return "ConstantComponent";
    case Errc::Internal: return "Internal";
    }
    return "Unknown";
}

/// Input errors map to exit code 2, everything else to 1.
inline bool is_input_error(Errc c) {
    return c == Errc::ParseError || c == Errc::ConstantComponent || c == Errc::InvalidArgument;
}

class Error : public std::runtime_error {
public:
    Error(Errc code, const std::string& message)
        : std::runtime_error(std::string(errc_name(code)) + ": " + message), code_(code), detail_(message) {}

    Errc code() const noexcept { return code_; }
    const std::string& detail() const noexcept { return detail_; }

private:
    Errc code_;
    std::string detail_;
};

class ParseError : public Error {
public:
    ParseError(std::size_t line, std::size_t column, std::set<std::string> expected, const std::string& found)
        : Error(Errc::ParseError, format(line, column, expected, found)),
          line_(line), column_(column), expected_(std::move(expected)) {}

    std::size_t line() const noexcept { return line_; }
    std::size_t column() const noexcept { return column_; }
    const std::set<std::string>& expected() const noexcept { return expected_; }

private:
    static std::string format(std::size_t line, std::size_t column, const std::set<std::string>& expected,
                              const std::string& found) {
        std::string s = "line " + std::to_string(line) + ", column " + std::to_string(column) + ": expected ";
        bool first = true;
        for (const auto& e : expected) {
            if (!first) s += " | ";
            s += e;
            first = false;
        }
        return s + ", found " + found;
    }

    std::size_t line_;
    std::size_t column_;
    std::set<std::string> expected_;
};

[[noreturn]] inline void fail(Errc code, const std::string& message) { throw Error(code, message); }

} // namespace curvelab
