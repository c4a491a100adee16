#include "giantwg/self_energy.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <sstream>

#include "giantwg/error.hpp"

namespace giantwg {

using cplx = std::complex<double>;

namespace {

cplx ipow(cplx y, int n) {
    cplx out{1.0, 0.0};
    cplx base = y;
    for (unsigned e = static_cast<unsigned>(n); e != 0; e >>= 1) {
        if (e & 1U) out *= base;
        base *= base;
    }
    return out;
}

// Sum over point pairs of Sigma_ij per the alpha/beta selection rules:
// same sublattice -> A_n, A then B -> B_n, B then A -> C_n, with n = n_q - n_p
// the signed distance from the row point p to the column point q.
template <class Kernel>
cplx pair_sum(const CouplingConfig& c, std::initializer_list<int> rows, std::initializer_list<int> cols,
              Kernel&& kernel) {
    cplx total{0.0, 0.0};
    for (int p : rows) {
        for (int q : cols) {
            const int n = c.distance(p, q);
            const int same = c.alpha(p) * c.alpha(q) + c.beta(p) * c.beta(q);
            if (same) total += kernel(KernelKind::A, n);
            if (c.alpha(p) && c.beta(q)) total += kernel(KernelKind::B, n);
            if (c.beta(p) && c.alpha(q)) total += kernel(KernelKind::C, n);
        }
    }
    return total;
}

template <class Kernel>
SigmaMatrix assemble(const CouplingConfig& c, Kernel&& kernel) {
    SigmaMatrix s;
    // Diagonal blocks follow the compact form 2[A_0 + (a_i a_j + b_i b_j) A_n
    // + a_i b_j B_n + a_j b_i C_n]; the double sum over both points of one atom
    // reduces to this because the kernels are even under (n, k) -> (-n, -k).
    auto self = [&](int i, int j) {
        const int n = c.distance(i, j);
        cplx v = kernel(KernelKind::A, 0);
        v += static_cast<double>(c.alpha(i) * c.alpha(j) + c.beta(i) * c.beta(j)) * kernel(KernelKind::A, n);
        if (c.alpha(i) && c.beta(j)) v += kernel(KernelKind::B, n);
        if (c.alpha(j) && c.beta(i)) v += kernel(KernelKind::C, n);
        return 2.0 * v;
    };
    s.s11 = self(0, 1);
    s.s22 = self(2, 3);
    s.s12 = pair_sum(c, {0, 1}, {2, 3}, kernel);
    s.s21 = pair_sum(c, {2, 3}, {0, 1}, kernel);
    return s;
}

} // namespace

const char* to_string(KernelKind kind) noexcept {
    switch (kind) {
    case KernelKind::A: return "A";
    case KernelKind::B: return "B";
    case KernelKind::C: return "C";
    }
    return "?";
}

cplx kernel_finite(KernelKind kind, int n, cplx z, const SshParams& p, int L, double g) {
    if (L < 2) throw Error(ErrorKind::InvalidArgument, "finite kernel needs L >= 2");
    const double dk = 2.0 * std::numbers::pi / L;
    const cplx z2 = z * z;
    cplx sum{0.0, 0.0};
    for (int m = 0; m < L; ++m) {
        const double k = m * dk;
        const cplx f = coupling_fk(k, p);
        const double w2 = std::norm(f);
        const cplx denom = z2 - w2;
        if (std::abs(denom) < 1e-14) {
            throw Error(ErrorKind::SingularSum, "z^2 coincides with a lattice mode energy");
        }
        const cplx wave = std::polar(1.0, k * n);
        cplx num;
        switch (kind) {
        case KernelKind::A: num = z * wave; break;
        case KernelKind::B: num = wave * std::conj(f); break; // w e^{-i phi} = f*
        case KernelKind::C: num = wave * f; break;
        }
        sum += num / denom;
    }
    return g * g * sum / static_cast<double>(L);
}

Poles poles(cplx z, const SshParams& p) {
    const double xi2 = p.xi() * p.xi();
    const double d2 = p.delta() * p.delta();
    const cplx z2 = z * z;
    const cplx disc = std::sqrt(z2 * z2 - 4.0 * xi2 * (1.0 + d2) * z2 + 16.0 * xi2 * xi2 * d2);
    const cplx mid = z2 - 2.0 * xi2 * (1.0 + d2);
    const double den = 2.0 * xi2 * (1.0 - d2);
    // the roots of (den/2) y^2 - mid y + den/2 multiply to 1; take the smaller one from the
    // larger-magnitude sum to avoid cancellation in mid - disc
    const cplx sp = mid + disc, sm = mid - disc;
    if (std::abs(sp) >= std::abs(sm)) return {sp / den, den / sp};
    return {den / sm, sm / den};
}

cplx kernel_closed(KernelKind kind, int n, cplx z, const SshParams& p, double g) {
    const double xi = p.xi();
    const double delta = p.delta();
    const double xi2 = xi * xi;
    const double d2 = delta * delta;
    const cplx z2 = z * z;
    const cplx root = std::sqrt(z2 * z2 - 4.0 * xi2 * (1.0 + d2) * z2 + 16.0 * xi2 * xi2 * d2);
    const auto [yp, ym] = poles(z, p);

    const double rp = std::abs(yp);
    if (std::abs(rp - 1.0) < 1e-12 || std::abs(std::abs(ym) - 1.0) < 1e-12) {
        throw Error(ErrorKind::BranchAmbiguity, "pole on the unit circle; z lies on the band");
    }
    const bool plus_inside = rp < 1.0; // Theta_+(y+) = 1, Theta_-(y+) = 0

    const int an = std::abs(n);
    auto residue = [&](cplx y) -> cplx {
        switch (kind) {
        case KernelKind::A: return z * ipow(y, an);
        case KernelKind::B: return xi * ((1.0 + delta) * ipow(y, an) + (1.0 - delta) * ipow(y, std::abs(n + 1)));
        case KernelKind::C: return xi * ((1.0 + delta) * ipow(y, an) + (1.0 - delta) * ipow(y, std::abs(n - 1)));
        }
        return {};
    };
    const cplx bracket = plus_inside ? residue(yp) : -residue(ym);
    return -g * g * bracket / root;
}

SigmaMatrix sigma(const CouplingConfig& config, cplx z, const SshParams& p) {
    const double g = config.g();
    return assemble(config, [&](KernelKind kind, int n) { return kernel_closed(kind, n, z, p, g); });
}

SigmaMatrix sigma_finite(const CouplingConfig& config, cplx z, const SshParams& p, int L) {
    const double g = config.g();
    return assemble(config, [&](KernelKind kind, int n) { return kernel_finite(kind, n, z, p, L, g); });
}

SelfEnergySet SelfEnergySet::scaled(double g, double xi) const {
    const double s = xi / (g * g);
    return {J11 * s, J22 * s, J12 * s, G11 * s, G22 * s, G12 * s};
}

SelfEnergySet SelfEnergySet::unscaled(double g, double xi) const {
    const double s = (g * g) / xi;
    return {J11 * s, J22 * s, J12 * s, G11 * s, G22 * s, G12 * s};
}

SelfEnergySet SelfEnergySet::swapped() const { return {J22, J11, J12, G22, G11, G12}; }

double dissipation_psd_violation(const SelfEnergySet& se) {
    const double tr = se.G11 + se.G22;
    const double disc = std::sqrt(std::max(0.0, 0.25 * (se.G11 - se.G22) * (se.G11 - se.G22) + se.G12 * se.G12));
    const double min_eig = 0.5 * tr - disc;
    return std::max(0.0, -min_eig);
}

SelfEnergySet rates_and_shifts(const CouplingConfig& config, double Delta, const SshParams& p,
                               double eps_over_xi, SelfEnergyDiagnostics* diagnostics, double margin_in_g) {
    const auto edges = band_edges(p);
    const double a = std::abs(Delta);
    if (!(a > edges.inner && a < edges.outer)) {
        std::ostringstream os;
        os << "detuning " << Delta << " outside the bands [" << edges.inner << ", " << edges.outer << "]";
        throw Error(ErrorKind::OutOfBand, os.str());
    }
    if (!(eps_over_xi > 0.0)) {
        throw Error(ErrorKind::InvalidArgument, "eps must be positive");
    }

    const cplx z{Delta, eps_over_xi * p.xi()};
    const SigmaMatrix s = sigma(config, z, p);
    const cplx s12 = 0.5 * (s.s12 + s.s21);

    SelfEnergySet se;
    se.J11 = s.s11.real();
    se.J22 = s.s22.real();
    se.J12 = s12.real();
    se.G11 = -2.0 * s.s11.imag();
    se.G22 = -2.0 * s.s22.imag();
    se.G12 = -2.0 * s12.imag();

    if (diagnostics) {
        const double scale = std::max(std::abs(s.s12), 1e-300);
        diagnostics->sigma12_asymmetry = std::abs(s.s12 - s.s21) / scale;
        const double margin = margin_in_g * config.g();
        diagnostics->near_edge = a < edges.inner + margin || a > edges.outer - margin;
        std::ostringstream os;
        if (diagnostics->near_edge) {
            os << "detuning within " << margin_in_g << "g of a band edge; Born-Markov reduction is unreliable";
        }
        if (diagnostics->sigma12_asymmetry > 1e-6) {
            if (!os.str().empty()) os << "; ";
            os << "Sigma12/Sigma21 asymmetry " << diagnostics->sigma12_asymmetry;
        }
        diagnostics->message = os.str();
    }
    return se;
}

} // namespace giantwg
