// self_energy.hpp — Collective self-energies of two giant atoms in the SSH waveguide
//
// Sigma_ij(z) is assembled from three lattice kernels
//   A_n(z) = (g^2/L) sum_k z e^{ikn} / (z^2 - w_k^2)
//   B_n(z) = (g^2/L) sum_k w_k e^{i(kn - phi_k)} / (z^2 - w_k^2)
//   C_n(z) = (g^2/L) sum_k w_k e^{i(kn + phi_k)} / (z^2 - w_k^2)
// evaluated either as finite momentum sums or in closed form (L -> infinity)
// through the two poles y+ y- = 1 of the integrand in y = e^{+-ik}.

#pragma once

#include <complex>
#include <string>

#include "giantwg/coupling.hpp"
#include "giantwg/ssh_band.hpp"

namespace giantwg {

enum class KernelKind { A, B, C };

const char* to_string(KernelKind kind) noexcept;

// Discrete k-sum over k = 2 pi m / L, m = 0..L-1. Throws SingularSum if any
// |z^2 - w_k^2| < 1e-14.
std::complex<double> kernel_finite(KernelKind kind, int n, std::complex<double> z,
                                   const SshParams& p, int L, double g);

struct Poles {
    std::complex<double> plus;
    std::complex<double> minus;
};

// Roots of y^2 - [(z^2 - t1^2 - t2^2)/(t1 t2)] y + 1, principal square root.
Poles poles(std::complex<double> z, const SshParams& p);

// Thermodynamic-limit kernel. The unit-step factors select the pole strictly
// inside the unit circle; throws BranchAmbiguity when |y+| is within 1e-12 of 1.
std::complex<double> kernel_closed(KernelKind kind, int n, std::complex<double> z,
                                   const SshParams& p, double g);

struct SigmaMatrix {
    std::complex<double> s11;
    std::complex<double> s12;
    std::complex<double> s21; // evaluated independently from the transposed kernel sum
    std::complex<double> s22;
};

SigmaMatrix sigma(const CouplingConfig& config, std::complex<double> z, const SshParams& p);

// Same assembly on finite-L kernels.
SigmaMatrix sigma_finite(const CouplingConfig& config, std::complex<double> z,
                         const SshParams& p, int L);

// Sigma_ij(Delta + i0+) = J_ij - i Gamma_ij / 2, in energy units.
struct SelfEnergySet {
    double J11 = 0.0;
    double J22 = 0.0;
    double J12 = 0.0;
    double G11 = 0.0;
    double G22 = 0.0;
    double G12 = 0.0;

    // Dimensionless xi J / g^2, xi Gamma / g^2.
    SelfEnergySet scaled(double g, double xi) const;
    // Inverse of scaled().
    SelfEnergySet unscaled(double g, double xi) const;
    // Exchange atom labels 1 <-> 2.
    SelfEnergySet swapped() const;
};

// Largest violation of positive semidefiniteness of [[G11, G12], [G12, G22]]
// (0 when PSD).
double dissipation_psd_violation(const SelfEnergySet& se);

struct SelfEnergyDiagnostics {
    double sigma12_asymmetry = 0.0; // |S12 - S21| / |S12|
    bool near_edge = false;
    std::string message;
};

// Evaluates Sigma at z = Delta + i eps_over_xi * xi. Throws OutOfBand unless
// 2|delta|xi < |Delta| < 2xi. Points closer than `margin_in_g` * g to a band
// edge, or with a Sigma_12 / Sigma_21 asymmetry above 1e-6, are flagged in
// `diagnostics`.
SelfEnergySet rates_and_shifts(const CouplingConfig& config, double Delta, const SshParams& p,
                               double eps_over_xi = 1e-8, SelfEnergyDiagnostics* diagnostics = nullptr,
                               double margin_in_g = 5.0);

} // namespace giantwg
