#include "giantwg/error.hpp"

namespace giantwg {

const char* to_string(ErrorKind kind) noexcept {
    switch (kind) {
    case ErrorKind::InvalidArgument: return "invalid argument";
    case ErrorKind::DegeneratePoint: return "degenerate point";
    case ErrorKind::GapClosed: return "gap closed";
    case ErrorKind::MalformedLabel: return "malformed label";
    case ErrorKind::SingularSum: return "singular sum";
    case ErrorKind::BranchAmbiguity: return "branch ambiguity";
    case ErrorKind::OutOfBand: return "out of band";
    case ErrorKind::DegenerateSplitting: return "degenerate splitting";
    case ErrorKind::InvariantViolation: return "invariant violation";
    case ErrorKind::NonPhysicalInput: return "non-physical input";
    case ErrorKind::StructureViolation: return "structure violation";
    case ErrorKind::PositionOutOfRange: return "position out of range";
    case ErrorKind::NormDrift: return "norm drift";
    case ErrorKind::GridMismatch: return "grid mismatch";
    }
    return "unknown";
}

Error::Error(ErrorKind kind, const std::string& message)
    : std::runtime_error(std::string(to_string(kind)) + ": " + message), kind_(kind) {}

} // namespace giantwg
