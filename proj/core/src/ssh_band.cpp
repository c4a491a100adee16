#include "giantwg/ssh_band.hpp"

#include <cmath>
#include <numbers>

#include "giantwg/error.hpp"

namespace giantwg {

SshParams::SshParams(double xi, double delta) : xi_(xi), delta_(delta) {
    if (!(xi > 0.0) || !std::isfinite(xi)) {
        throw Error(ErrorKind::InvalidArgument, "xi must be positive and finite");
    }
    if (!(std::abs(delta) < 1.0)) {
        throw Error(ErrorKind::InvalidArgument, "dimerization must satisfy |delta| < 1");
    }
}

std::complex<double> coupling_fk(double k, const SshParams& p) {
    return p.t1() + p.t2() * std::polar(1.0, -k);
}

double dispersion(double k, const SshParams& p) {
    const double t1 = p.t1();
    const double t2 = p.t2();
    // max(0, .) absorbs rounding at the gap-closing point k = pi, delta = 0
    return std::sqrt(std::max(0.0, t1 * t1 + t2 * t2 + 2.0 * t1 * t2 * std::cos(k)));
}

double phase(double k, const SshParams& p) {
    if (dispersion(k, p) < 1e-12 * p.xi()) {
        throw Error(ErrorKind::DegeneratePoint, "f(k) vanishes, phase undefined");
    }
    return std::atan2(-p.t2() * std::sin(k), p.t1() + p.t2() * std::cos(k));
}

BandEdges band_edges(const SshParams& p) {
    return {2.0 * std::abs(p.delta()) * p.xi(), 2.0 * p.xi()};
}

bool in_band(double energy, const SshParams& p) {
    const auto edges = band_edges(p);
    const double e = std::abs(energy);
    return e >= edges.inner && e <= edges.outer;
}

double winding_integral(const SshParams& p, int samples) {
    if (samples < 3) {
        throw Error(ErrorKind::InvalidArgument, "winding integral needs at least 3 samples");
    }
    constexpr double pi = std::numbers::pi;
    const double dk = 2.0 * pi / samples;
    double total = 0.0;
    double prev = std::arg(coupling_fk(-pi, p));
    for (int m = 1; m <= samples; ++m) {
        const double cur = std::arg(coupling_fk(-pi + m * dk, p));
        double step = cur - prev;
        step -= 2.0 * pi * std::round(step / (2.0 * pi));
        total += step;
        prev = cur;
    }
    // f(k) = t1 + t2 e^{-ik} winds clockwise as k increases; report the
    // conventional positive orientation.
    return -total / (2.0 * pi);
}

int winding_number(const SshParams& p, int samples) {
    if (std::abs(p.delta()) < 1e-9) {
        throw Error(ErrorKind::GapClosed, "winding number undefined when the gap closes");
    }
    return static_cast<int>(std::lround(winding_integral(p, samples)));
}

} // namespace giantwg
