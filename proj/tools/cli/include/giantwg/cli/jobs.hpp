// jobs.hpp — Computations behind the giantwg subcommands

#pragma once

#include <cstddef>
#include <functional>
#include <string>
#include <vector>

#include "giantwg/cli/csv.hpp"
#include "giantwg/cli/experiment.hpp"
#include "giantwg/cli/svg.hpp"
#include "giantwg/dynamics.hpp"
#include "giantwg/entanglement.hpp"
#include "giantwg/oracle.hpp"
#include "giantwg/self_energy.hpp"

namespace giantwg::cli {

// Runs fn(0..n-1) on up to `threads` workers. The first exception is rethrown
// after all workers stop.
void parallel_for(std::size_t n, int threads, const std::function<void(std::size_t)>& fn);

CouplingConfig point_config(const Point& point);
SelfEnergySet point_self_energy(const Point& point, double eps = 1e-8);

struct PointRun {
    Point point;
    DensityTrajectory trajectory;
    ConcurrenceTrace concurrence;
};

PointRun run_dynamics_point(const Point& point, double tmax, double dt, int stride);

// xi_t, rho_ee, rho_egeg, rho_gege, re_rho_egge, im_rho_egge, rho_gg, concurrence
Table dynamics_table(const DensityTrajectory& trajectory, const ConcurrenceTrace& concurrence);

// k, omega_upper, omega_lower, phase over k in [-pi, pi].
Table run_band(double delta, int samples);
// {"delta", "inner_edge", "outer_edge", "winding_number"} (winding omitted at delta = 0)
std::string band_report_json(double delta);

// Scaled xi J / g^2 and xi Gamma / g^2 per (coupling, d, delta). When `json`
// is given it receives an array of reports with raw and scaled values.
Table run_selfenergy(const ExperimentSpec& spec, std::string* json = nullptr);

// Scaled xi Gamma_e+-/g^2 and xi Gamma_+-g/g^2 for all 16 configurations.
Table run_rates_table(int d, const std::vector<double>& deltas, double Delta);

struct OracleRun {
    PointRun master;
    ExactTrajectory exact;
    ConcurrenceTrace exact_concurrence;
    double sup_norm = 0.0;
    double horizon = 0.0;
};

// Master equation (dt, stride) against the lattice (dt = 5e-4) on a shared
// sample interval; comparison over default_horizon(tmax, L).
OracleRun run_oracle_point(const Point& point, int L, double tmax, double dt, double sample_interval);
std::string oracle_report_json(const OracleRun& run, int L);

struct FigureOptions {
    double tmax = 2000.0;
    double dt = 1e-2;
    double sample_interval = 1.0;
    int threads = 1;
};

struct FigurePanel {
    std::string coupling;
    std::vector<Point> curves;
    std::vector<ConcurrenceTrace> traces;
};

// fig4: 16 panels x {d = 1, 2} x {delta = +-0.3} x {eg, ge}; fig5: same with {ee}.
// g = 0.05, Delta = 1.
std::vector<FigurePanel> compute_figure(const std::string& name, const FigureOptions& options);

// One CSV and one SVG per panel; removes everything it wrote if any step fails.
std::vector<std::string> write_figure(const std::string& name, const std::vector<FigurePanel>& panels,
                                      const std::string& out_dir);

struct SweepResult {
    Table table; // coupling, d, delta, init, feature, value
    std::vector<std::string> skipped;
    std::size_t points = 0;
};

// Features: max_C, t_max_C, onset, C_tmax. Invalid points are skipped with a
// logged reason; rows are ordered as expand_points() regardless of threads.
SweepResult run_sweep(const ExperimentSpec& spec);

} // namespace giantwg::cli
