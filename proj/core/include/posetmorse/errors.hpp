#pragma once

#include <stdexcept>
#include <string>

namespace posetmorse {

enum class ErrorCode {
    DuplicateElement,
    UnknownElement,
    CoverCycle,
    RedundantCover,
    NotGraded,
    EmptyComplex,
    NotAComplex,
    NotInfiniteCyclic,
    NotACover,
    NotCellular,
    NotMorse,
    InadmissiblePair,
    SolveFailure,
    ChainRuleViolation,
    StabilizationOverrun,
    BasisDegenerate,
    DegenerateStage,
    SyntaxError,
    Usage,
};

const char* error_code_name(ErrorCode code);

/// Domain exception with a stable code; parse errors also carry a 1-based line number.
class Error : public std::runtime_error {
public:
    Error(ErrorCode code, const std::string& message, int line = -1)
        : std::runtime_error(message), code_(code), line_(line) {}

    ErrorCode code() const { return code_; }
    int line() const { return line_; }

private:
    ErrorCode code_;
    int line_;
};

[[noreturn]] inline void fail(ErrorCode code, const std::string& message, int line = -1) {
    throw Error(code, message, line);
}

}  // namespace posetmorse
