#include "hecke/errors.hpp"

namespace hecke
{

std::string_view to_string(ErrorKind kind) noexcept
{
    switch (kind) {
        case ErrorKind::DegenerateLattice:
            return "DegenerateLattice";
        case ErrorKind::WrongOrientation:
            return "WrongOrientation";
        case ErrorKind::ShellTooLarge:
            return "ShellTooLarge";
        case ErrorKind::TooCloseToPole:
            return "TooCloseToPole";
        case ErrorKind::ToleranceNotReached:
            return "ToleranceNotReached";
        case ErrorKind::BadModulus:
            return "BadModulus";
        case ErrorKind::ConsistencyFailure:
            return "ConsistencyFailure";
        case ErrorKind::SlowConvergence:
            return "SlowConvergence";
        case ErrorKind::OutsideStrip:
            return "OutsideStrip";
        case ErrorKind::BadExponent:
            return "BadExponent";
        case ErrorKind::ParseError:
            return "ParseError";
    }
    return "Unknown";
}

} // namespace hecke
