#include "giantwg/oracle.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>
#include <vector>

#include "giantwg/error.hpp"

namespace giantwg {

namespace {

using SparseH = Eigen::SparseMatrix<double, Eigen::RowMajor>;

double interpolate(const ConcurrenceTrace& tr, double t) {
    const auto it = std::lower_bound(tr.times.begin(), tr.times.end(), t);
    if (it == tr.times.end()) return tr.values.back();
    const auto hi = static_cast<std::size_t>(it - tr.times.begin());
    if (hi == 0 || *it == t) return tr.values[hi];
    const std::size_t lo = hi - 1;
    const double w = (t - tr.times[lo]) / (tr.times[hi] - tr.times[lo]);
    return (1.0 - w) * tr.values[lo] + w * tr.values[hi];
}

void check_cover(const ConcurrenceTrace& tr, double horizon, const char* name) {
    if (tr.times.empty() || tr.times.size() != tr.values.size() || tr.times.front() > 1e-12 ||
        tr.times.back() < horizon - 1e-9) {
        std::ostringstream os;
        os << name << " trace does not cover [0, " << horizon << "]";
        throw Error(ErrorKind::GridMismatch, os.str());
    }
}

DensityMatrix reduce(const Eigen::VectorXcd& psi) {
    DensityMatrix rho = DensityMatrix::Zero();
    const cplx ceg = psi(0);
    const cplx cge = psi(1);
    rho(kEG, kEG) = std::norm(ceg);
    rho(kGE, kGE) = std::norm(cge);
    rho(kEG, kGE) = ceg * std::conj(cge);
    rho(kGE, kEG) = std::conj(rho(kEG, kGE));
    rho(kGG, kGG) = psi.tail(psi.size() - 2).squaredNorm();
    return rho;
}

} // namespace

LatticeState atomic_state(InitialState init, int L) {
    if (init != InitialState::EG && init != InitialState::GE) {
        throw Error(ErrorKind::InvalidArgument, "lattice oracle covers the single-excitation sector only");
    }
    if (L < 1) throw Error(ErrorKind::InvalidArgument, "L must be positive");
    LatticeState s;
    s.L = L;
    s.amplitudes = Eigen::VectorXcd::Zero(2 * L + 2);
    s.amplitudes(init == InitialState::EG ? 0 : 1) = 1.0;
    return s;
}

CouplingConfig centered(const CouplingConfig& config, int L) {
    const int span = config.position(3) - config.position(0);
    const int base = L / 2 - span / 2;
    return config.translated(base - config.position(0));
}

SparseH build_hamiltonian(const CouplingConfig& config, double Delta, const SshParams& p, int L,
                          Boundary boundary) {
    if (L < 100 || L % 2 != 0) {
        throw Error(ErrorKind::PositionOutOfRange, "lattice size must be even and at least 100");
    }
    for (int pos : config.positions()) {
        if (4 * pos < L || 4 * pos > 3 * L) {
            std::ostringstream os;
            os << "coupling cell " << pos << " outside [L/4, 3L/4] for L = " << L;
            throw Error(ErrorKind::PositionOutOfRange, os.str());
        }
    }

    std::vector<Eigen::Triplet<double>> trip;
    trip.reserve(static_cast<std::size_t>(4 * L + 16));
    auto bond = [&trip](int i, int j, double v) {
        trip.emplace_back(i, j, v);
        trip.emplace_back(j, i, v);
    };
    trip.emplace_back(0, 0, Delta);
    trip.emplace_back(1, 1, Delta);
    for (int l = 0; l < L; ++l) {
        bond(lattice_a(l), lattice_b(l), p.t1());
        if (l + 1 < L) {
            bond(lattice_a(l + 1), lattice_b(l), p.t2());
        } else if (boundary == Boundary::Periodic) {
            bond(lattice_a(0), lattice_b(l), p.t2());
        }
    }
    for (int i = 0; i < 4; ++i) {
        const int atom = i < 2 ? 0 : 1;
        const int cell = config.position(i);
        const int site = config.alpha(i) ? lattice_a(cell) : lattice_b(cell);
        bond(atom, site, config.g());
    }

    SparseH h(2 * L + 2, 2 * L + 2);
    h.setFromTriplets(trip.begin(), trip.end()); // duplicates (shared cavity) are summed
    return h;
}

ExactTrajectory evolve_exact(const CouplingConfig& config, double Delta, const SshParams& p, int L,
                             const LatticeState& psi0, const ExactOptions& options) {
    if (psi0.L != L || psi0.amplitudes.size() != 2 * L + 2) {
        throw Error(ErrorKind::InvalidArgument, "initial lattice state has the wrong dimension");
    }
    if (!(options.dt > 0.0) || !(options.tmax >= 0.0) || options.stride < 1) {
        throw Error(ErrorKind::InvalidArgument, "evolve_exact needs dt > 0, tmax >= 0 and stride >= 1");
    }
    if (std::abs(psi0.amplitudes.norm() - 1.0) > 1e-9) {
        throw Error(ErrorKind::InvalidArgument, "initial lattice state is not normalized");
    }
    const SparseH h = build_hamiltonian(config, Delta, p, L, options.boundary);

    // psi = x + i y; dpsi/dt = -i H psi  =>  dx/dt = H y, dy/dt = -H x
    Eigen::VectorXd x = psi0.amplitudes.real();
    Eigen::VectorXd y = psi0.amplitudes.imag();
    const Eigen::Index n = x.size();
    Eigen::VectorXd kx[4], ky[4];
    for (int s = 0; s < 4; ++s) {
        kx[s].resize(n);
        ky[s].resize(n);
    }
    Eigen::VectorXd tx(n), ty(n);

    auto energy = [&h](const Eigen::VectorXd& a, const Eigen::VectorXd& b) {
        return a.dot(h * a) + b.dot(h * b);
    };
    const double e0 = energy(x, y);
    const double dt = options.dt;

    ExactTrajectory out;
    auto sample = [&](double t) {
        const double nd = std::abs(std::sqrt(x.squaredNorm() + y.squaredNorm()) - 1.0);
        if (nd > 1e-6) {
            std::ostringstream os;
            os << "norm drift " << nd << " at t = " << t;
            throw Error(ErrorKind::NormDrift, os.str());
        }
        out.max_norm_drift = std::max(out.max_norm_drift, nd);
        out.max_energy_drift = std::max(out.max_energy_drift, std::abs(energy(x, y) - e0));
        Eigen::VectorXcd psi(n);
        psi.real() = x;
        psi.imag() = y;
        const DensityMatrix rho = reduce(psi);
        out.reduced.hygiene.absorb(inspect_density(rho));
        out.reduced.times.push_back(t);
        out.reduced.states.push_back(rho);
    };

    const long steps = static_cast<long>(std::ceil(options.tmax / dt - 1e-9));
    sample(0.0);
    for (long i = 1; i <= steps; ++i) {
        kx[0].noalias() = h * y;
        ky[0].noalias() = -(h * x);
        tx = x + 0.5 * dt * kx[0];
        ty = y + 0.5 * dt * ky[0];
        kx[1].noalias() = h * ty;
        ky[1].noalias() = -(h * tx);
        tx = x + 0.5 * dt * kx[1];
        ty = y + 0.5 * dt * ky[1];
        kx[2].noalias() = h * ty;
        ky[2].noalias() = -(h * tx);
        tx = x + dt * kx[2];
        ty = y + dt * ky[2];
        kx[3].noalias() = h * ty;
        ky[3].noalias() = -(h * tx);
        x += (dt / 6.0) * (kx[0] + 2.0 * kx[1] + 2.0 * kx[2] + kx[3]);
        y += (dt / 6.0) * (ky[0] + 2.0 * ky[1] + 2.0 * ky[2] + ky[3]);
        if (i % options.stride == 0 || i == steps) sample(i * dt);
    }
    return out;
}

double default_horizon(double tmax, int L, double xi) { return std::min(tmax, 0.4 * L / xi); }

double compare(const ConcurrenceTrace& master, const ConcurrenceTrace& exact, double horizon) {
    if (!(horizon >= 0.0)) throw Error(ErrorKind::GridMismatch, "horizon must be non-negative");
    check_cover(master, horizon, "master");
    check_cover(exact, horizon, "exact");

    std::vector<double> grid;
    for (const auto* tr : {&master, &exact}) {
        for (double t : tr->times) {
            if (t <= horizon + 1e-12) grid.push_back(std::min(t, horizon));
        }
    }
    grid.push_back(horizon);
    std::sort(grid.begin(), grid.end());
    grid.erase(std::unique(grid.begin(), grid.end()), grid.end());

    double worst = 0.0;
    for (double t : grid) worst = std::max(worst, std::abs(interpolate(master, t) - interpolate(exact, t)));
    return worst;
}

} // namespace giantwg
