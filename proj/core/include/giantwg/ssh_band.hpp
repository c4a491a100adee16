// ssh_band.hpp — Band structure, Bloch phase and winding number of the SSH waveguide

#pragma once

#include <complex>

namespace giantwg {

// Waveguide parameters. Hoppings t1 = xi(1+delta) (intracell) and
// t2 = xi(1-delta) (intercell); the bare cavity frequency is the energy zero.
class SshParams {
public:
    SshParams(double xi, double delta);

    double xi() const noexcept { return xi_; }
    double delta() const noexcept { return delta_; }
    double t1() const noexcept { return xi_ * (1.0 + delta_); }
    double t2() const noexcept { return xi_ * (1.0 - delta_); }

private:
    double xi_;
    double delta_;
};

// f(k) = t1 + t2 e^{-ik}
std::complex<double> coupling_fk(double k, const SshParams& p);

// omega_k = |f(k)|; the upper band is +omega_k, the lower band -omega_k.
double dispersion(double k, const SshParams& p);

// arg f(k), quadrant-resolved. Throws DegeneratePoint where omega_k < 1e-12 xi.
double phase(double k, const SshParams& p);

struct BandEdges {
    double inner; // 2|delta| xi
    double outer; // 2 xi
};

BandEdges band_edges(const SshParams& p);

// True when |energy| lies inside [inner, outer].
bool in_band(double energy, const SshParams& p);

// Accumulated (1/2pi) * sum of unwrapped phase increments of f(k) over the
// Brillouin zone, sampled at `samples` uniform points. Not rounded.
double winding_integral(const SshParams& p, int samples = 100000);

// Rounded winding_integral: 1 for delta < 0, 0 for delta > 0.
// Throws GapClosed for |delta| < 1e-9.
int winding_number(const SshParams& p, int samples = 100000);

} // namespace giantwg
