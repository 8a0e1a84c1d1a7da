#include "patrol/error.h"

namespace patrol {

const char* to_string(ErrorKind kind) {
    switch (kind) {
        case ErrorKind::ParseError: return "ParseError";
        case ErrorKind::ValidationError: return "ValidationError";
        case ErrorKind::InvalidTrajectory: return "InvalidTrajectory";
        case ErrorKind::EmptyS00: return "EmptyS00";
        case ErrorKind::EmptyIntersection: return "EmptyIntersection";
        case ErrorKind::DegenerateIntersection: return "DegenerateIntersection";
        case ErrorKind::NotApplicable: return "NotApplicable";
        case ErrorKind::ConditionsFail: return "ConditionsFail";
        case ErrorKind::InfeasibleCertified: return "InfeasibleCertified";
        case ErrorKind::NoCycle: return "NoCycle";
        case ErrorKind::NeverVisited: return "NeverVisited";
        case ErrorKind::Unbounded: return "Unbounded";
        case ErrorKind::BadEpsilon: return "BadEpsilon";
        case ErrorKind::BadArgument: return "BadArgument";
    }
    return "Error";
}

}  // namespace patrol
