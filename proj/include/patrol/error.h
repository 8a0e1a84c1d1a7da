#pragma once

#include <stdexcept>
#include <string>

namespace patrol {

enum class ErrorKind {
    ParseError,
    ValidationError,
    InvalidTrajectory,
    EmptyS00,
    EmptyIntersection,
    DegenerateIntersection,
    NotApplicable,
    ConditionsFail,
    InfeasibleCertified,
    NoCycle,
    NeverVisited,
    Unbounded,
    BadEpsilon,
    BadArgument,
};

const char* to_string(ErrorKind kind);

class Error : public std::runtime_error {
public:
    Error(ErrorKind kind, const std::string& what)
        : std::runtime_error(std::string(to_string(kind)) + ": " + what), kind_(kind), message_(what) {}

    ErrorKind kind() const noexcept { return kind_; }
    /// The message without the kind prefix.
    const std::string& message() const noexcept { return message_; }

private:
    ErrorKind kind_;
    std::string message_;
};

}  // namespace patrol
