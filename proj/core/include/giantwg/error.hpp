// error.hpp — Exception type shared by all giantwg modules

#pragma once

#include <stdexcept>
#include <string>

namespace giantwg {

enum class ErrorKind {
    InvalidArgument,
    DegeneratePoint,     // f(k) vanishes, phase undefined
    GapClosed,           // winding number requested at delta ~ 0
    MalformedLabel,
    SingularSum,         // finite-L kernel hits z^2 = omega_k^2
    BranchAmbiguity,     // neither or both poles inside the unit circle
    OutOfBand,
    DegenerateSplitting, // Dtilde ~ 0, eigenbasis rates undefined
    InvariantViolation,  // density matrix left the physical set during integration
    NonPhysicalInput,
    StructureViolation,  // X-state closed form applied to a non-X state
    PositionOutOfRange,
    NormDrift,
    GridMismatch,
};

const char* to_string(ErrorKind kind) noexcept;

class Error : public std::runtime_error {
public:
    Error(ErrorKind kind, const std::string& message);

    ErrorKind kind() const noexcept { return kind_; }

private:
    ErrorKind kind_;
};

} // namespace giantwg
