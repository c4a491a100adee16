#include "giantwg/dynamics.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include <Eigen/Eigenvalues>

#include "giantwg/error.hpp"

namespace giantwg {

namespace {

using Super = Eigen::Matrix<cplx, 16, 16>;
using SuperVec = Eigen::Matrix<cplx, 16, 1>;

Eigen::Matrix4cd lowering(int atom) {
    Eigen::Matrix2cd sm = Eigen::Matrix2cd::Zero();
    sm(1, 0) = 1.0; // |g><e| with e = 0, g = 1
    const Eigen::Matrix2cd id = Eigen::Matrix2cd::Identity();
    Eigen::Matrix4cd out = Eigen::Matrix4cd::Zero();
    const Eigen::Matrix2cd& left = atom == 0 ? sm : id;
    const Eigen::Matrix2cd& right = atom == 0 ? id : sm;
    for (int a = 0; a < 2; ++a)
        for (int b = 0; b < 2; ++b)
            out.block<2, 2>(2 * a, 2 * b) = left(a, b) * right;
    return out;
}

Eigen::Matrix4cd system_hamiltonian(const SelfEnergySet& se, double Delta) {
    const Eigen::Matrix4cd s1 = lowering(0);
    const Eigen::Matrix4cd s2 = lowering(1);
    Eigen::Matrix4cd h = (Delta + se.J11) * s1.adjoint() * s1 + (Delta + se.J22) * s2.adjoint() * s2;
    h += se.J12 * (s1.adjoint() * s2 + s2.adjoint() * s1);
    return h;
}

template <int N>
Eigen::Matrix<cplx, N, N> rk4_step_map(const Eigen::Matrix<cplx, N, N>& generator, double dt) {
    using M = Eigen::Matrix<cplx, N, N>;
    const M hl = dt * generator;
    const M hl2 = hl * hl;
    const M hl3 = hl2 * hl;
    const M hl4 = hl3 * hl;
    return M::Identity() + hl + hl2 / 2.0 + hl3 / 6.0 + hl4 / 24.0;
}

void check_options(const EvolveOptions& o) {
    if (!(o.dt > 0.0) || !(o.tmax >= 0.0) || o.stride < 1) {
        throw Error(ErrorKind::InvalidArgument, "evolve needs dt > 0, tmax >= 0 and stride >= 1");
    }
    if (o.dt * o.xi > 1e-2 * (1.0 + 1e-12)) {
        throw Error(ErrorKind::InvalidArgument, "time step must satisfy dt <= 1e-2 / xi");
    }
}

long step_count(const EvolveOptions& o) {
    return static_cast<long>(std::ceil(o.tmax / o.dt - 1e-9));
}

void record(DensityTrajectory& traj, double t, const DensityMatrix& rho) {
    const Hygiene h = inspect_density(rho);
    if (h.max_trace_drift > 1e-6 || h.min_eigenvalue < -1e-6) {
        std::ostringstream os;
        os << "at t = " << t << ": trace drift " << h.max_trace_drift << ", min eigenvalue " << h.min_eigenvalue;
        throw Error(ErrorKind::InvariantViolation, os.str());
    }
    traj.hygiene.absorb(h);
    traj.times.push_back(t);
    traj.states.push_back(rho);
}

DensityMatrix unvec(const SuperVec& v) { return Eigen::Map<const Eigen::Matrix4cd>(v.data()); }

} // namespace

EigenSystem eigen_system(const SelfEnergySet& se, double Delta) {
    EigenSystem es;
    es.omega1p = Delta + se.J11;
    es.omega2p = Delta + se.J22;
    const double diff = se.J11 - se.J22;
    es.Dtilde = std::sqrt(diff * diff + 4.0 * se.J12 * se.J12);
    es.lambda_plus = 0.5 * (es.omega1p + es.omega2p + es.Dtilde);
    es.lambda_minus = 0.5 * (es.omega1p + es.omega2p - es.Dtilde);

    if (std::abs(se.J12) < 1e-12 * (std::abs(diff) + 1e-30)) {
        // decoupled: bare states, the higher-energy one is psi+
        const bool first_higher = diff >= 0.0;
        es.vplus = first_higher ? Eigen::Vector2cd(1.0, 0.0) : Eigen::Vector2cd(0.0, 1.0);
        es.vminus = first_higher ? Eigen::Vector2cd(0.0, 1.0) : Eigen::Vector2cd(1.0, 0.0);
        return es;
    }

    Eigen::Matrix2d block;
    block << es.omega1p, se.J12, se.J12, es.omega2p;
    Eigen::SelfAdjointEigenSolver<Eigen::Matrix2d> solver;
    solver.computeDirect(block);
    Eigen::Vector2d vm = solver.eigenvectors().col(0); // ascending eigenvalues
    Eigen::Vector2d vp = solver.eigenvectors().col(1);
    if (vm(1) < 0.0) vm = -vm;
    if (vp(1) < 0.0) vp = -vp;
    es.vplus = vp.cast<cplx>();
    es.vminus = vm.cast<cplx>();

    const double eta_p = diff + es.Dtilde;
    const double eta_m = diff - es.Dtilde;
    const double a = std::abs(se.J12);
    es.Nplus = a / std::sqrt(eta_p * eta_p + 4.0 * a * a);
    es.Nminus = a / std::sqrt(eta_m * eta_m + 4.0 * a * a);
    return es;
}

RateSet transition_rates(const SelfEnergySet& se) {
    const double J11 = se.J11, J22 = se.J22, J12 = se.J12;
    const double G11 = se.G11, G22 = se.G22, G12 = se.G12;
    RateSet r;
    const double diff = J11 - J22;
    r.Dtilde = std::sqrt(diff * diff + 4.0 * J12 * J12);
    if (r.Dtilde < 1e-14) {
        throw Error(ErrorKind::DegenerateSplitting, "J11 = J22 and J12 = 0; collective basis undefined");
    }
    const double Dt = r.Dtilde;
    const double ep = diff + Dt;
    const double em = diff - Dt;
    r.eta_plus = ep;
    r.eta_minus = em;
    const double root = 2.0 * std::abs(J12); // sqrt(-eta+ eta-)

    // J12 * zeta stays finite as J12 -> 0 (limit taken from J12 > 0).
    double j12_zeta;
    if (ep != 0.0 && em != 0.0) {
        r.zeta = std::sqrt(-em / ep) - std::sqrt(-ep / em);
        j12_zeta = J12 * r.zeta;
    } else {
        r.zeta = diff > 0.0 ? -INFINITY : INFINITY;
        j12_zeta = -diff;
    }

    const double den = 2.0 * Dt;
    r.Gep = (ep * G22 - em * G11 + 4.0 * J12 * G12) / den;
    r.Gem = (-em * G22 + ep * G11 - 4.0 * J12 * G12) / den;
    r.Gpg = (ep * G11 - em * G22 + 4.0 * J12 * G12) / den;
    r.Gmg = (-em * G11 + ep * G22 - 4.0 * J12 * G12) / den;
    r.Gpp = (em * G22 - ep * G11 - 4.0 * J12 * G12) / den;
    r.Gmm = (-ep * G22 + em * G11 + 4.0 * J12 * G12) / den;
    r.Gpm = ((G11 - G22) * root + 2.0 * G12 * j12_zeta) / (4.0 * Dt);
    r.Gx = ((G11 - G22) * root - 2.0 * G12 * j12_zeta) / den;
    r.D1 = (diff * root + 2.0 * J12 * j12_zeta) / den;
    r.D2 = (diff * diff + 4.0 * J12 * J12) / Dt;
    return r;
}

void Hygiene::absorb(const Hygiene& other) {
    max_trace_drift = std::max(max_trace_drift, other.max_trace_drift);
    max_hermiticity_error = std::max(max_hermiticity_error, other.max_hermiticity_error);
    min_eigenvalue = std::min(min_eigenvalue, other.min_eigenvalue);
}

Hygiene inspect_density(const DensityMatrix& rho, double reference_trace) {
    Hygiene h;
    h.max_trace_drift = std::abs(rho.trace() - reference_trace);
    h.max_hermiticity_error = (rho - rho.adjoint()).cwiseAbs().maxCoeff();
    const Eigen::Matrix4cd herm = 0.5 * (rho + rho.adjoint());
    Eigen::SelfAdjointEigenSolver<Eigen::Matrix4cd> solver(herm, Eigen::EigenvaluesOnly);
    h.min_eigenvalue = solver.eigenvalues().minCoeff();
    return h;
}

Eigen::Matrix<cplx, 16, 16> lindblad_generator(const SelfEnergySet& se, double Delta) {
    const Eigen::Matrix4cd h = system_hamiltonian(se, Delta);
    const Eigen::Matrix4cd s[2] = {lowering(0), lowering(1)};
    const double gamma[2][2] = {{se.G11, se.G12}, {se.G12, se.G22}};
    const cplx I{0.0, 1.0};

    Super gen;
    for (int col = 0; col < 16; ++col) {
        Eigen::Matrix4cd e = Eigen::Matrix4cd::Zero();
        e(col % 4, col / 4) = 1.0;
        Eigen::Matrix4cd out = I * (e * h - h * e);
        for (int i = 0; i < 2; ++i) {
            for (int j = 0; j < 2; ++j) {
                if (gamma[i][j] == 0.0) continue;
                const Eigen::Matrix4cd jump = s[j].adjoint() * s[i];
                out += gamma[i][j] * (s[i] * e * s[j].adjoint() - 0.5 * (jump * e + e * jump));
            }
        }
        gen.col(col) = Eigen::Map<const SuperVec>(out.data());
    }
    return gen;
}

DensityTrajectory evolve(const DensityMatrix& rho0, const SelfEnergySet& se, double Delta,
                         const EvolveOptions& options) {
    check_options(options);
    const Super step = rk4_step_map<16>(lindblad_generator(se, Delta), options.dt);
    const long n = step_count(options);

    DensityTrajectory traj;
    traj.times.reserve(static_cast<std::size_t>(n / options.stride + 2));
    SuperVec v = Eigen::Map<const SuperVec>(rho0.data());
    record(traj, 0.0, rho0);
    SuperVec next;
    for (long i = 1; i <= n; ++i) {
        next.noalias() = step * v;
        v = next;
        if (i % options.stride == 0 || i == n) record(traj, i * options.dt, unvec(v));
    }
    return traj;
}

DensityTrajectory evolve_eigenbasis(const DensityMatrix& rho0, const SelfEnergySet& se, double Delta,
                                    const EvolveOptions& options) {
    check_options(options);
    for (int k : {kEG, kGE, kGG}) {
        if (std::abs(rho0(kEE, k)) > 1e-12 || std::abs(rho0(k, kEE)) > 1e-12) {
            throw Error(ErrorKind::StructureViolation, "initial state mixes excitation sectors");
        }
    }
    for (int k : {kEG, kGE}) {
        if (std::abs(rho0(kGG, k)) > 1e-12 || std::abs(rho0(k, kGG)) > 1e-12) {
            throw Error(ErrorKind::StructureViolation, "initial state mixes excitation sectors");
        }
    }

    const RateSet r = transition_rates(se);
    const EigenSystem es = eigen_system(se, Delta);
    const cplx I{0.0, 1.0};
    const double half_total = 0.5 * (se.G11 + se.G22);

    // state x = (ee, ++, --, +-, -+, gg)
    enum { EE, PP, MM, PM, MP, GG };
    using Gen6 = Eigen::Matrix<cplx, 6, 6>;
    Gen6 m = Gen6::Zero();
    m(EE, EE) = -(se.G11 + se.G22);

    m(PP, MP) = I * r.D1;
    m(PP, PM) = -I * r.D1;
    m(PP, EE) = r.Gep;
    m(PP, PP) = r.Gpp;
    m(PP, PM) += r.Gpm;
    m(PP, MP) += r.Gpm;

    m(MM, PM) = I * r.D1;
    m(MM, MP) = -I * r.D1;
    m(MM, EE) = r.Gem;
    m(MM, MM) = r.Gmm;
    m(MM, PM) += r.Gpm;
    m(MM, MP) += r.Gpm;

    m(PM, PM) = -(half_total + I * r.D2);
    m(PM, PP) = r.Gpm - I * r.D1;
    m(PM, MM) = r.Gpm + I * r.D1;
    m(PM, EE) = r.Gx;

    m(MP, MP) = -(half_total - I * r.D2);
    m(MP, PP) = r.Gpm + I * r.D1;
    m(MP, MM) = r.Gpm - I * r.D1;
    m(MP, EE) = r.Gx;

    m(GG, PP) = r.Gpg;
    m(GG, MM) = r.Gmg;
    m(GG, PM) = -2.0 * r.Gpm;
    m(GG, MP) = -2.0 * r.Gpm;

    const Gen6 step = rk4_step_map<6>(m, options.dt);

    const Eigen::Matrix2cd single = rho0.block<2, 2>(kEG, kEG);
    Eigen::Matrix<cplx, 6, 1> x;
    x(EE) = rho0(kEE, kEE);
    x(PP) = es.vplus.dot(single * es.vplus);
    x(MM) = es.vminus.dot(single * es.vminus);
    x(PM) = es.vplus.dot(single * es.vminus);
    x(MP) = es.vminus.dot(single * es.vplus);
    x(GG) = rho0(kGG, kGG);

    auto to_bare = [&](const Eigen::Matrix<cplx, 6, 1>& y) {
        DensityMatrix rho = DensityMatrix::Zero();
        rho(kEE, kEE) = y(EE);
        rho(kGG, kGG) = y(GG);
        rho.block<2, 2>(kEG, kEG) = y(PP) * es.vplus * es.vplus.adjoint() + y(MM) * es.vminus * es.vminus.adjoint() +
                                    y(PM) * es.vplus * es.vminus.adjoint() + y(MP) * es.vminus * es.vplus.adjoint();
        return rho;
    };

    const long n = step_count(options);
    DensityTrajectory traj;
    record(traj, 0.0, to_bare(x));
    Eigen::Matrix<cplx, 6, 1> next;
    for (long i = 1; i <= n; ++i) {
        next.noalias() = step * x;
        x = next;
        if (i % options.stride == 0 || i == n) record(traj, i * options.dt, to_bare(x));
    }
    return traj;
}

ValidityReport validity_check(double Delta, const SshParams& p, double g) {
    ValidityReport rep;
    const auto edges = band_edges(p);
    const double a = std::abs(Delta);
    std::ostringstream os;
    if (!(a > edges.inner + 5.0 * g && a < edges.outer - 5.0 * g)) {
        rep.ok = false;
        os << "|Delta| = " << a << " not inside (" << edges.inner + 5.0 * g << ", " << edges.outer - 5.0 * g
           << "): too close to a band edge";
    }
    if (g > 0.1 * p.xi()) {
        if (!rep.ok) os << "; ";
        rep.ok = false;
        os << "g/xi = " << g / p.xi() << " exceeds the weak-coupling bound 0.1";
    }
    rep.reason = os.str();
    return rep;
}

} // namespace giantwg
