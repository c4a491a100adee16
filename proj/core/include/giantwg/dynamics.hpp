// dynamics.hpp — Two-atom Lindblad master equation and its collective-state representation

#pragma once

#include <string>
#include <vector>

#include <Eigen/Dense>

#include "giantwg/self_energy.hpp"
#include "giantwg/ssh_band.hpp"
#include "giantwg/types.hpp"

namespace giantwg {

// Single-excitation block of H = sum_j w'_j s+_j s-_j + J12 (s+_1 s-_2 + h.c.),
// w'_j = Delta + J_jj. Amplitudes are over (|eg>, |ge>) with the |ge>
// component chosen non-negative, matching the (eta_+-/J12, 2) form.
struct EigenSystem {
    double lambda_plus = 0.0;
    double lambda_minus = 0.0;
    double Dtilde = 0.0;
    double Nplus = 0.0;  // [(eta_+/J12)^2 + 4]^{-1/2}, 0 in the decoupled limit
    double Nminus = 0.0;
    Eigen::Vector2cd vplus = Eigen::Vector2cd::Zero();
    Eigen::Vector2cd vminus = Eigen::Vector2cd::Zero();
    double omega1p = 0.0;
    double omega2p = 0.0;
};

EigenSystem eigen_system(const SelfEnergySet& se, double Delta);

// Transition rates and couplings of the populations/coherences in the
// collective basis {|ee>, |psi+>, |psi->, |gg>}.
struct RateSet {
    double Gep = 0.0; // |ee> -> |psi+>
    double Gem = 0.0; // |ee> -> |psi->
    double Gpg = 0.0; // |psi+> -> |gg>
    double Gmg = 0.0; // |psi-> -> |gg>
    double Gpp = 0.0; // diagonal damping coefficient of rho_++ (negative)
    double Gmm = 0.0;
    double Gpm = 0.0; // = Gamma_-+
    double Gx = 0.0;
    double D1 = 0.0;
    double D2 = 0.0;
    double eta_plus = 0.0;
    double eta_minus = 0.0;
    double zeta = 0.0;
    double Dtilde = 0.0;
};

// Throws DegenerateSplitting when Dtilde < 1e-14.
RateSet transition_rates(const SelfEnergySet& se);

struct Hygiene {
    double max_trace_drift = 0.0;
    double max_hermiticity_error = 0.0;
    double min_eigenvalue = 1.0;

    void absorb(const Hygiene& other);
};

Hygiene inspect_density(const DensityMatrix& rho, double reference_trace = 1.0);

struct DensityTrajectory {
    std::vector<double> times;
    std::vector<DensityMatrix> states;
    Hygiene hygiene;
};

struct EvolveOptions {
    double tmax = 100.0;
    double dt = 1e-3;
    int stride = 100; // store every `stride` steps (plus t = 0 and t = tmax)
    double xi = 1.0;  // dt must not exceed 1e-2 / xi
};

// 16 x 16 superoperator acting on column-stacked rho for
//   drho/dt = i[rho, H] + sum_ij G_ij (s-_i rho s+_j - {s+_j s-_i, rho}/2).
Eigen::Matrix<cplx, 16, 16> lindblad_generator(const SelfEnergySet& se, double Delta);

// Fixed-step classical RK4 in the bare basis. No trace renormalization; each
// stored sample is checked and InvariantViolation is thrown if the trace drifts
// by more than 1e-6 or an eigenvalue drops below -1e-6.
DensityTrajectory evolve(const DensityMatrix& rho0, const SelfEnergySet& se, double Delta,
                         const EvolveOptions& options);

// Same dynamics integrated through the collective-basis equations of motion
// for (rho_ee, rho_++, rho_--, rho_+-, rho_-+, rho_gg) with the transition_rates
// coefficients, mapped back to the bare basis. rho0 must have no coherence
// between excitation sectors (StructureViolation otherwise).
DensityTrajectory evolve_eigenbasis(const DensityMatrix& rho0, const SelfEnergySet& se, double Delta,
                                    const EvolveOptions& options);

struct ValidityReport {
    bool ok = true;
    std::string reason;
};

// Born-Markov guard: 2|delta|xi + 5g < |Delta| < 2xi - 5g and g <= 0.1 xi.
ValidityReport validity_check(double Delta, const SshParams& p, double g);

} // namespace giantwg
