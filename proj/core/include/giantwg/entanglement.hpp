// entanglement.hpp — Wootters concurrence and entanglement features of a trajectory

#pragma once

#include <optional>
#include <vector>

#include "giantwg/dynamics.hpp"
#include "giantwg/types.hpp"

namespace giantwg {

struct ConcurrenceTrace {
    std::vector<double> times;
    std::vector<double> values;
};

// max(0, l1 - l2 - l3 - l4) with l_i the descending square roots of the
// eigenvalues of rho * rho~, rho~ = (sy x sy) rho* (sy x sy).
// Throws NonPhysicalInput when an eigenvalue is below -1e-8.
double concurrence(const DensityMatrix& rho);

// Closed form for X states with vanishing outer coherence:
// 2 max(0, |rho_eg,ge| - sqrt(rho_ee,ee rho_gg,gg)). Throws StructureViolation otherwise.
double concurrence_xstate(const DensityMatrix& rho);

ConcurrenceTrace concurrence_trace(const DensityTrajectory& trajectory);

// First sampled time with C > threshold, all earlier samples <= threshold.
std::optional<double> onset_time(const ConcurrenceTrace& trace, double threshold = 1e-4);

struct EntanglementFeatures {
    double max_value = 0.0;
    double time_of_max = 0.0;
    std::optional<double> onset;
    double final_value = 0.0;
};

EntanglementFeatures features(const ConcurrenceTrace& trace, double threshold = 1e-4);

} // namespace giantwg
