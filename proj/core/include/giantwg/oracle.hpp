// oracle.hpp — Exact single-excitation evolution of two giant atoms on a finite SSH lattice

#pragma once

#include <Eigen/Dense>
#include <Eigen/SparseCore>

#include "giantwg/coupling.hpp"
#include "giantwg/dynamics.hpp"
#include "giantwg/entanglement.hpp"
#include "giantwg/ssh_band.hpp"
#include "giantwg/types.hpp"

namespace giantwg {

enum class Boundary { Periodic, Open };

// Basis ordering: 0 = |eg>|vac>, 1 = |ge>|vac>, 2 + 2l = a_l, 3 + 2l = b_l.
constexpr int lattice_a(int cell) { return 2 + 2 * cell; }
constexpr int lattice_b(int cell) { return 3 + 2 * cell; }

struct LatticeState {
    int L = 0;
    Eigen::VectorXcd amplitudes; // length 2L + 2
};

// |eg>|vac> or |ge>|vac>; the doubly excited start has no single-excitation image.
LatticeState atomic_state(InitialState init, int L);

// Shifts the configuration so its four points straddle the middle cell L/2.
CouplingConfig centered(const CouplingConfig& config, int L);

// Rotating-frame Hamiltonian: Delta on both atoms, t1 inside each cell
// (a_l - b_l), t2 between cells (b_l - a_{l+1}), g from every coupling point to
// its A or B cavity. Periodic boundary closes b_{L-1} - a_0.
// Throws PositionOutOfRange unless L is even, L >= 100 and every coupling
// point lies in [L/4, 3L/4].
Eigen::SparseMatrix<double, Eigen::RowMajor> build_hamiltonian(const CouplingConfig& config, double Delta,
                                                               const SshParams& p, int L,
                                                               Boundary boundary = Boundary::Periodic);

struct ExactOptions {
    double tmax = 80.0;
    double dt = 5e-4;
    int stride = 200;
    Boundary boundary = Boundary::Periodic;
};

struct ExactTrajectory {
    DensityTrajectory reduced;      // two-atom density matrix per sample
    double max_norm_drift = 0.0;    // max | ||psi|| - 1 |
    double max_energy_drift = 0.0;  // max |<H>(t) - <H>(0)|
};

// Fixed-step RK4 on i dpsi/dt = H psi. Throws NormDrift when | ||psi|| - 1 | > 1e-6.
ExactTrajectory evolve_exact(const CouplingConfig& config, double Delta, const SshParams& p, int L,
                             const LatticeState& psi0, const ExactOptions& options = {});

// Reflections off the finite ring stay away for roughly 0.4 L / xi.
double default_horizon(double tmax, int L, double xi = 1.0);

// Linear interpolation of both traces onto the union of their sample times in
// [0, horizon]; returns the sup-norm difference. Throws GridMismatch if a trace
// does not cover [0, horizon].
double compare(const ConcurrenceTrace& master, const ConcurrenceTrace& exact, double horizon);

} // namespace giantwg
