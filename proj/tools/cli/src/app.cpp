#include "giantwg/cli/app.hpp"

#include <filesystem>
#include <optional>
#include <ostream>

#include <CLI11.hpp>

#include "giantwg/cli/experiment.hpp"
#include "giantwg/cli/jobs.hpp"
#include "giantwg/error.hpp"

namespace giantwg::cli {

namespace {

namespace fs = std::filesystem;

// Raw flag values; an option only overrides the spec when it was given.
struct Flags {
    std::vector<std::string> coupling;
    std::vector<int> d;
    std::vector<double> delta;
    double g = 0.0;
    double detuning = 0.0;
    double eps = 0.0;
    std::vector<std::string> init;
    double tmax = 0.0;
    double dt = 0.0;
    double sample = 0.0;
    int L = 0;
    int samples = 0;
    std::string name;
};

struct Bound {
    CLI::Option* coupling = nullptr;
    CLI::Option* d = nullptr;
    CLI::Option* delta = nullptr;
    CLI::Option* g = nullptr;
    CLI::Option* detuning = nullptr;
    CLI::Option* eps = nullptr;
    CLI::Option* init = nullptr;
    CLI::Option* tmax = nullptr;
    CLI::Option* dt = nullptr;
    CLI::Option* sample = nullptr;
    CLI::Option* L = nullptr;
    CLI::Option* samples = nullptr;
    CLI::Option* name = nullptr;
};

bool given(const CLI::Option* o) { return o != nullptr && o->count() > 0; }

void apply(const Flags& f, const Bound& b, ExperimentSpec& s) {
    if (given(b.coupling)) s.couplings = f.coupling;
    if (given(b.d)) s.distances = f.d;
    if (given(b.delta)) s.deltas = f.delta;
    if (given(b.g)) s.g = f.g;
    if (given(b.detuning)) s.detuning = f.detuning;
    if (given(b.eps)) s.eps = f.eps;
    if (given(b.init)) {
        s.inits.clear();
        for (const auto& name : f.init) s.inits.push_back(parse_init(name));
    }
    if (given(b.tmax)) s.tmax = f.tmax;
    if (given(b.dt)) s.dt = f.dt;
    if (given(b.sample)) s.sample_interval = f.sample;
    if (given(b.L)) s.lattice_size = f.L;
    if (given(b.samples)) s.band_samples = f.samples;
    if (given(b.name)) s.figure = f.name;
}

std::string out_path(const ExperimentSpec& s, const std::string& file) { return (fs::path(s.out_dir) / file).string(); }

std::string delta_tag(double delta) { return std::string("delta") + (delta >= 0 ? "+" : "") + format_real(delta); }

int run_job(const ExperimentSpec& s, std::ostream& out, std::ostream& err) {
    switch (s.job) {
    case JobKind::Band:
        for (double delta : s.deltas) {
            const std::string stem = "band_" + delta_tag(delta);
            write_text(out_path(s, stem + ".csv"), run_band(delta, s.band_samples).to_csv());
            const std::string report = band_report_json(delta);
            write_text(out_path(s, stem + ".json"), report);
            out << report;
        }
        return 0;
    case JobKind::SelfEnergy: {
        std::string json;
        const std::string csv = run_selfenergy(s, &json).to_csv();
        write_text(out_path(s, "selfenergy.csv"), csv);
        write_text(out_path(s, "selfenergy.json"), json);
        out << json;
        return 0;
    }
    case JobKind::Rates:
        for (int d : s.distances) {
            const std::string csv = run_rates_table(d, s.deltas, s.detuning).to_csv();
            write_text(out_path(s, "rates_d" + std::to_string(d) + ".csv"), csv);
            out << csv;
        }
        return 0;
    case JobKind::Dynamics: {
        const auto points = expand_points(s);
        std::vector<PointRun> runs(points.size());
        parallel_for(points.size(), s.threads,
                     [&](std::size_t i) { runs[i] = run_dynamics_point(points[i], s.tmax, s.dt, s.stride()); });
        for (const auto& run : runs) {
            const auto valid = validity_check(run.point.detuning, SshParams(1.0, run.point.delta), run.point.g);
            if (!valid.ok) err << "[dynamics] warning " << run.point.tag() << ": " << valid.reason << "\n";
            const std::string file = out_path(s, "dynamics_" + run.point.tag() + ".csv");
            write_text(file, dynamics_table(run.trajectory, run.concurrence).to_csv());
            const auto f = features(run.concurrence);
            out << file << ": max_C=" << format_real(f.max_value) << " at xi_t=" << format_real(f.time_of_max)
                << ", C(tmax)=" << format_real(f.final_value) << "\n";
        }
        return 0;
    }
    case JobKind::Oracle: {
        const auto points = expand_points(s);
        std::vector<OracleRun> runs(points.size());
        parallel_for(points.size(), s.threads, [&](std::size_t i) {
            runs[i] = run_oracle_point(points[i], s.lattice_size, s.tmax, s.dt, s.sample_interval);
        });
        for (const auto& run : runs) {
            const std::string tag = run.master.point.tag();
            write_text(out_path(s, "oracle_" + tag + ".csv"),
                       dynamics_table(run.exact.reduced, run.exact_concurrence).to_csv());
            write_text(out_path(s, "dynamics_" + tag + ".csv"),
                       dynamics_table(run.master.trajectory, run.master.concurrence).to_csv());
            const std::string report = oracle_report_json(run, s.lattice_size);
            write_text(out_path(s, "oracle_" + tag + ".json"), report);
            out << report;
        }
        return 0;
    }
    case JobKind::Figure: {
        const FigureOptions options{s.tmax, s.dt, s.sample_interval, s.threads};
        const auto files = write_figure(s.figure, compute_figure(s.figure, options), s.out_dir);
        out << "wrote " << files.size() << " files to " << s.out_dir << "\n";
        return 0;
    }
    case JobKind::Sweep: {
        const SweepResult r = run_sweep(s);
        write_text(out_path(s, "sweep.csv"), r.table.to_csv());
        out << "sweep: " << r.points - r.skipped.size() << " of " << r.points << " points succeeded\n";
        if (r.points > 0 && r.skipped.size() == r.points) {
            err << "sweep: every point failed\n";
            return 1;
        }
        return 0;
    }
    }
    return 2;
}

} // namespace

int run_app(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
    CLI::App app{"Entanglement dynamics of two giant atoms coupled to an SSH coupled-cavity waveguide"};
    app.require_subcommand(0, 1);
    app.fallthrough();

    std::string config_path;
    std::string out_dir;
    int threads = 1;
    long long seed = 0;
    auto* o_config = app.add_option("--config", config_path, "TOML experiment file")->check(CLI::ExistingFile);
    auto* o_out = app.add_option("--out", out_dir, "output directory");
    auto* o_threads = app.add_option("--threads", threads, "worker threads")->check(CLI::PositiveNumber);
    app.add_option("--seed", seed, "reserved; all jobs are deterministic");
    (void)o_config;

    Flags f;
    struct Sub {
        JobKind job;
        CLI::App* app;
        Bound bound;
    };
    std::vector<Sub> subs;
    auto add = [&](JobKind job, const std::string& help) {
        subs.push_back(Sub{job, app.add_subcommand(to_string(job), help), {}});
        return &subs.back();
    };
    subs.reserve(7);

    auto point_flags = [&f](Sub* sub, bool lists) {
        auto* a = sub->app;
        Bound& b = sub->bound;
        b.coupling = a->add_option("--coupling", f.coupling, lists ? "labels such as ABBA, or all" : "label such as ABBA");
        b.d = a->add_option("--d", f.d, "coupling-point spacing in unit cells");
        b.delta = a->add_option("--delta", f.delta, "dimerization parameter(s)");
        b.g = a->add_option("--g", f.g, "coupling strength g/xi");
        b.detuning = a->add_option("--detuning", f.detuning, "atomic detuning Delta/xi");
    };
    auto time_flags = [&f](Sub* sub) {
        auto* a = sub->app;
        Bound& b = sub->bound;
        b.tmax = a->add_option("--tmax", f.tmax, "final time xi t");
        b.dt = a->add_option("--dt", f.dt, "time step xi dt (<= 1e-2)");
        b.sample = a->add_option("--sample", f.sample, "output sampling interval in xi t");
    };

    {
        Sub* s = add(JobKind::Band, "dispersion, phase and band edges");
        s->bound.delta = s->app->add_option("--delta", f.delta, "dimerization parameter(s)");
        s->bound.samples = s->app->add_option("--samples", f.samples, "k samples over [-pi, pi]");
    }
    {
        Sub* s = add(JobKind::SelfEnergy, "Lamb shifts and decay rates, raw and scaled by xi/g^2");
        point_flags(s, true);
        s->bound.eps = s->app->add_option("--eps", f.eps, "imaginary offset of z in units of xi");
    }
    {
        Sub* s = add(JobKind::Rates, "transition-rate table for all sixteen configurations");
        s->bound.d = s->app->add_option("--d", f.d, "coupling-point spacing(s)");
        s->bound.delta = s->app->add_option("--delta", f.delta, "dimerization parameters");
        s->bound.detuning = s->app->add_option("--detuning", f.detuning, "atomic detuning Delta/xi");
    }
    {
        Sub* s = add(JobKind::Dynamics, "master-equation trajectory and concurrence");
        point_flags(s, true);
        s->bound.init = s->app->add_option("--init", f.init, "initial state: ee, eg or ge");
        time_flags(s);
    }
    {
        Sub* s = add(JobKind::Oracle, "exact finite-lattice evolution compared with the master equation");
        point_flags(s, true);
        s->bound.init = s->app->add_option("--init", f.init, "initial state: eg or ge");
        s->bound.L = s->app->add_option("--L", f.L, "number of unit cells (even, >= 100)");
        time_flags(s);
    }
    {
        Sub* s = add(JobKind::Figure, "concurrence panels for all sixteen configurations");
        s->bound.name = s->app->add_option("--name", f.name, "fig4 (eg/ge starts) or fig5 (ee start)");
        time_flags(s);
    }
    {
        Sub* s = add(JobKind::Sweep, "entanglement features over a parameter grid");
        point_flags(s, true);
        s->bound.init = s->app->add_option("--init", f.init, "initial states");
        time_flags(s);
    }

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        return app.exit(e, out, err);
    }

    try {
        std::optional<TomlTable> table;
        if (!config_path.empty()) table = load_toml(config_path);

        const Sub* chosen = nullptr;
        for (const auto& s : subs) {
            if (s.app->parsed()) chosen = &s;
        }
        JobKind job;
        if (chosen) {
            job = chosen->job;
        } else if (table) {
            job = spec_from_toml(*table).job;
        } else {
            err << app.help();
            return 2;
        }

        ExperimentSpec spec = defaults_for(job);
        if (table) spec = spec_from_toml(*table, spec);
        spec.job = job;
        if (chosen) apply(f, chosen->bound, spec);
        if (given(o_out)) spec.out_dir = out_dir;
        if (given(o_threads)) spec.threads = threads;

        validate(spec);
        return run_job(spec, out, err);
    } catch (const Error& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    }
}

} // namespace giantwg::cli
