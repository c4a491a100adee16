// experiment.hpp — Experiment description shared by the config file and the command line

#pragma once

#include <string>
#include <vector>

#include "giantwg/cli/toml_lite.hpp"
#include "giantwg/types.hpp"

namespace giantwg::cli {

enum class JobKind { Band, SelfEnergy, Rates, Dynamics, Oracle, Figure, Sweep };

const char* to_string(JobKind job) noexcept;
JobKind parse_job(const std::string& name);

InitialState parse_init(const std::string& name);
const char* to_string(InitialState init) noexcept;

// All physical inputs are ratios to xi (xi = 1): delta, g/xi, Delta/xi, xi t.
struct ExperimentSpec {
    JobKind job = JobKind::Dynamics;
    std::vector<std::string> couplings{"AABB"}; // "all" expands to the 16 labels
    std::vector<int> distances{1};
    std::vector<double> deltas{0.3};
    double g = 0.05;
    double detuning = 1.0;
    double eps = 1e-8; // z = Delta + i eps xi
    std::vector<InitialState> inits{InitialState::EG};
    double tmax = 100.0;
    double dt = 1e-3;
    double sample_interval = 0.1;
    int lattice_size = 400;
    int band_samples = 401;
    std::string figure = "fig4";
    std::string out_dir = "out";
    int threads = 1;

    int stride() const;
    std::vector<std::string> expanded_couplings() const;
};

// Defaults for a job kind: time settings differ between short single runs and
// figure/sweep jobs that cover the slow collective dynamics.
ExperimentSpec defaults_for(JobKind job);

// [waveguide] delta; [atoms] coupling, d, g_over_xi (or g), detuning; [run]
// job, init, tmax, dt, sample, eps, L, figure, out, threads, band_samples. Unknown keys are rejected.
ExperimentSpec spec_from_toml(const TomlTable& table, ExperimentSpec base = {});

// Checks every value against the library's own preconditions. Per-point
// physics (band membership of Delta) is checked here for single-point jobs;
// sweeps skip such points instead. Throws giantwg::Error.
void validate(const ExperimentSpec& spec);

// One fully specified parameter point.
struct Point {
    std::string coupling;
    int d = 1;
    double delta = 0.3;
    double g = 0.05;
    double detuning = 1.0;
    InitialState init = InitialState::EG;

    std::string tag() const; // e.g. AABB_d1_delta+0.3_eg
};

// Cartesian product in the order coupling, d, delta, init.
std::vector<Point> expand_points(const ExperimentSpec& spec);

} // namespace giantwg::cli
