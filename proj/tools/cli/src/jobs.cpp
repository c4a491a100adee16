#include "giantwg/cli/jobs.hpp"

#include <atomic>
#include <cmath>
#include <exception>
#include <filesystem>
#include <iostream>
#include <mutex>
#include <numbers>
#include <optional>
#include <thread>

#include <nlohmann/json.hpp>

#include "giantwg/coupling.hpp"
#include "giantwg/error.hpp"
#include "giantwg/ssh_band.hpp"

namespace giantwg::cli {

void parallel_for(std::size_t n, int threads, const std::function<void(std::size_t)>& fn) {
    const std::size_t workers = std::min<std::size_t>(n, static_cast<std::size_t>(std::max(1, threads)));
    if (workers <= 1) {
        for (std::size_t i = 0; i < n; ++i) fn(i);
        return;
    }
    std::atomic<std::size_t> next{0};
    std::atomic<bool> stop{false};
    std::exception_ptr first;
    std::mutex mu;
    std::vector<std::thread> pool;
    for (std::size_t w = 0; w < workers; ++w) {
        pool.emplace_back([&] {
            for (std::size_t i = next++; i < n && !stop; i = next++) {
                try {
                    fn(i);
                } catch (...) {
                    std::lock_guard lock(mu);
                    if (!first) first = std::current_exception();
                    stop = true;
                }
            }
        });
    }
    for (auto& t : pool) t.join();
    if (first) std::rethrow_exception(first);
}

CouplingConfig point_config(const Point& point) {
    return parse_config(point.coupling, Geometry{point.d, 0}, point.g);
}

SelfEnergySet point_self_energy(const Point& point, double eps) {
    return rates_and_shifts(point_config(point), point.detuning, SshParams(1.0, point.delta), eps);
}

PointRun run_dynamics_point(const Point& point, double tmax, double dt, int stride) {
    PointRun run;
    run.point = point;
    const SelfEnergySet se = point_self_energy(point);
    run.trajectory = evolve(basis_projector(point.init), se, point.detuning, EvolveOptions{tmax, dt, stride, 1.0});
    run.concurrence = concurrence_trace(run.trajectory);
    return run;
}

Table dynamics_table(const DensityTrajectory& trajectory, const ConcurrenceTrace& concurrence) {
    Table t;
    t.header = {"xi_t", "rho_ee", "rho_egeg", "rho_gege", "re_rho_egge", "im_rho_egge", "rho_gg", "concurrence"};
    for (std::size_t i = 0; i < trajectory.states.size(); ++i) {
        const auto& r = trajectory.states[i];
        t.add_row({format_real(trajectory.times[i]), format_real(r(kEE, kEE).real()), format_real(r(kEG, kEG).real()),
                   format_real(r(kGE, kGE).real()), format_real(r(kEG, kGE).real()), format_real(r(kEG, kGE).imag()),
                   format_real(r(kGG, kGG).real()), format_real(concurrence.values[i])});
    }
    return t;
}

Table run_band(double delta, int samples) {
    const SshParams p(1.0, delta);
    Table t;
    t.header = {"k", "omega_upper", "omega_lower", "phase"};
    for (int i = 0; i < samples; ++i) {
        const double k = -std::numbers::pi + 2.0 * std::numbers::pi * i / (samples - 1);
        const double w = dispersion(k, p);
        std::string ph = "nan";
        if (w > 1e-12) ph = format_real(phase(k, p));
        t.add_row({format_real(k), format_real(w), format_real(-w), ph});
    }
    return t;
}

std::string band_report_json(double delta) {
    const SshParams p(1.0, delta);
    const auto edges = band_edges(p);
    nlohmann::ordered_json j;
    j["delta"] = delta;
    j["inner_edge"] = edges.inner;
    j["outer_edge"] = edges.outer;
    if (std::abs(delta) >= 1e-9) j["winding_number"] = winding_number(p);
    return j.dump(2) + "\n";
}

Table run_selfenergy(const ExperimentSpec& spec, std::string* json) {
    nlohmann::ordered_json reports = nlohmann::ordered_json::array();
    Table t;
    t.header = {"coupling", "d", "delta", "detuning", "J11", "J22", "J12", "G11", "G22", "G12"};
    for (const auto& label : spec.expanded_couplings()) {
        for (int d : spec.distances) {
            for (double delta : spec.deltas) {
                const Point pt{label, d, delta, spec.g, spec.detuning, InitialState::EG};
                const SelfEnergySet raw = point_self_energy(pt, spec.eps);
                const SelfEnergySet s = raw.scaled(spec.g, 1.0);
                nlohmann::ordered_json j;
                j["coupling"] = label;
                j["d"] = d;
                j["delta"] = delta;
                j["g"] = spec.g;
                j["detuning"] = spec.detuning;
                j["eps"] = spec.eps;
                j["J11"] = raw.J11, j["J22"] = raw.J22, j["J12"] = raw.J12;
                j["G11"] = raw.G11, j["G22"] = raw.G22, j["G12"] = raw.G12;
                j["scaled"] = {{"J11", s.J11}, {"J22", s.J22}, {"J12", s.J12},
                               {"G11", s.G11}, {"G22", s.G22}, {"G12", s.G12}};
                reports.push_back(std::move(j));
                t.add_row({label, std::to_string(d), format_real(delta), format_real(spec.detuning),
                           format_real(s.J11), format_real(s.J22), format_real(s.J12), format_real(s.G11),
                           format_real(s.G22), format_real(s.G12)});
            }
        }
    }
    if (json) *json = reports.dump(2) + "\n";
    return t;
}

Table run_rates_table(int d, const std::vector<double>& deltas, double Delta) {
    if (deltas.empty()) throw Error(ErrorKind::InvalidArgument, "delta list is empty");
    constexpr double g = 0.05; // scaled rates do not depend on g
    Table t;
    t.header = {"coupling", "d", "delta", "Gamma_e+", "Gamma_e-", "Gamma_+g", "Gamma_-g"};
    for (const auto& label : enumerate_all()) {
        for (double delta : deltas) {
            const Point pt{label, d, delta, g, Delta, InitialState::EG};
            const RateSet r = transition_rates(point_self_energy(pt).scaled(g, 1.0));
            t.add_row({label, std::to_string(d), format_real(delta), format_real(r.Gep), format_real(r.Gem),
                       format_real(r.Gpg), format_real(r.Gmg)});
        }
    }
    return t;
}

OracleRun run_oracle_point(const Point& point, int L, double tmax, double dt, double sample_interval) {
    OracleRun run;
    const int stride = static_cast<int>(std::max(1L, std::lround(sample_interval / dt)));
    run.master = run_dynamics_point(point, tmax, dt, stride);

    constexpr double exact_dt = 5e-4;
    const int exact_stride = static_cast<int>(std::max(1L, std::lround(sample_interval / exact_dt)));
    const CouplingConfig config = centered(point_config(point), L);
    run.exact = evolve_exact(config, point.detuning, SshParams(1.0, point.delta), L, atomic_state(point.init, L),
                             ExactOptions{tmax, exact_dt, exact_stride, Boundary::Periodic});
    run.exact_concurrence = concurrence_trace(run.exact.reduced);
    run.horizon = default_horizon(tmax, L);
    run.sup_norm = compare(run.master.concurrence, run.exact_concurrence, run.horizon);
    return run;
}

std::string oracle_report_json(const OracleRun& run, int L) {
    nlohmann::ordered_json j;
    j["sup_norm"] = run.sup_norm;
    j["horizon"] = run.horizon;
    j["L"] = L;
    j["coupling"] = run.master.point.coupling;
    j["d"] = run.master.point.d;
    j["delta"] = run.master.point.delta;
    j["g"] = run.master.point.g;
    j["detuning"] = run.master.point.detuning;
    j["init"] = to_string(run.master.point.init);
    j["max_norm_drift"] = run.exact.max_norm_drift;
    j["max_energy_drift"] = run.exact.max_energy_drift;
    return j.dump(2) + "\n";
}

std::vector<FigurePanel> compute_figure(const std::string& name, const FigureOptions& options) {
    std::vector<InitialState> inits;
    if (name == "fig4") {
        inits = {InitialState::EG, InitialState::GE};
    } else if (name == "fig5") {
        inits = {InitialState::EE};
    } else {
        throw Error(ErrorKind::InvalidArgument, "unknown figure '" + name + "' (fig4 or fig5)");
    }

    std::vector<FigurePanel> panels;
    std::vector<std::pair<std::size_t, std::size_t>> jobs;
    for (const auto& label : enumerate_all()) {
        FigurePanel panel;
        panel.coupling = label;
        for (auto init : inits)
            for (int d : {1, 2})
                for (double delta : {0.3, -0.3}) panel.curves.push_back(Point{label, d, delta, 0.05, 1.0, init});
        panel.traces.resize(panel.curves.size());
        for (std::size_t c = 0; c < panel.curves.size(); ++c) jobs.emplace_back(panels.size(), c);
        panels.push_back(std::move(panel));
    }

    const int stride = static_cast<int>(std::max(1L, std::lround(options.sample_interval / options.dt)));
    parallel_for(jobs.size(), options.threads, [&](std::size_t i) {
        auto& panel = panels[jobs[i].first];
        const std::size_t c = jobs[i].second;
        panel.traces[c] = run_dynamics_point(panel.curves[c], options.tmax, options.dt, stride).concurrence;
    });
    return panels;
}

std::vector<std::string> write_figure(const std::string& name, const std::vector<FigurePanel>& panels,
                                      const std::string& out_dir) {
    std::vector<std::string> written;
    try {
        for (const auto& panel : panels) {
            Table t;
            t.header.push_back("xi_t");
            std::vector<Series> series;
            for (std::size_t c = 0; c < panel.curves.size(); ++c) {
                const Point& pt = panel.curves[c];
                t.header.push_back("C_" + pt.tag());
                std::string legend = "d=" + std::to_string(pt.d) + (pt.delta > 0 ? ", delta=+0.3" : ", delta=-0.3");
                if (name == "fig4") legend += std::string(", ") + to_string(pt.init);
                series.push_back(Series{legend, panel.traces[c].times, panel.traces[c].values});
            }
            const auto& grid = panel.traces.front().times;
            for (std::size_t i = 0; i < grid.size(); ++i) {
                std::vector<std::string> row{format_real(grid[i])};
                for (const auto& tr : panel.traces) {
                    if (tr.times.size() != grid.size()) throw Error(ErrorKind::GridMismatch, "panel curves differ in length");
                    row.push_back(format_real(tr.values[i]));
                }
                t.add_row(std::move(row));
            }
            const std::string stem = (std::filesystem::path(out_dir) / (name + "_" + panel.coupling)).string();
            written.push_back(stem + ".csv");
            write_text(written.back(), t.to_csv());
            const std::string ylabel = name == "fig4" ? "C(t)" : "C_ee(t)";
            written.push_back(stem + ".svg");
            write_text(written.back(), render_line_chart(name + " " + panel.coupling, "xi t", ylabel, series));
        }
    } catch (...) {
        std::error_code ec;
        for (const auto& f : written) std::filesystem::remove(f, ec);
        throw;
    }
    return written;
}

SweepResult run_sweep(const ExperimentSpec& spec) {
    if (spec.deltas.empty()) throw Error(ErrorKind::InvalidArgument, "delta list is empty");
    const std::vector<Point> points = expand_points(spec);
    SweepResult result;
    result.points = points.size();
    result.table.header = {"coupling", "d", "delta", "init", "feature", "value"};

    std::vector<std::optional<EntanglementFeatures>> feats(points.size());
    std::vector<std::string> reasons(points.size());
    const int stride = spec.stride();
    parallel_for(points.size(), spec.threads, [&](std::size_t i) {
        const Point& pt = points[i];
        try {
            const auto valid = validity_check(pt.detuning, SshParams(1.0, pt.delta), pt.g);
            if (!valid.ok) {
                reasons[i] = pt.tag() + ": " + valid.reason;
                return;
            }
            feats[i] = features(run_dynamics_point(pt, spec.tmax, spec.dt, stride).concurrence);
        } catch (const Error& e) {
            reasons[i] = pt.tag() + ": " + e.what();
        }
    });

    for (std::size_t i = 0; i < points.size(); ++i) {
        const Point& pt = points[i];
        if (!feats[i]) {
            std::cerr << "[sweep] skipped " << reasons[i] << "\n";
            result.skipped.push_back(reasons[i]);
            continue;
        }
        const auto& f = *feats[i];
        const std::string onset = f.onset ? format_real(*f.onset) : "none";
        const std::vector<std::string> base{pt.coupling, std::to_string(pt.d), format_real(pt.delta), to_string(pt.init)};
        for (const auto& [name, value] : std::vector<std::pair<std::string, std::string>>{
                 {"max_C", format_real(f.max_value)},
                 {"t_max_C", format_real(f.time_of_max)},
                 {"onset", onset},
                 {"C_tmax", format_real(f.final_value)}}) {
            auto row = base;
            row.push_back(name);
            row.push_back(value);
            result.table.add_row(std::move(row));
        }
    }
    return result;
}

} // namespace giantwg::cli
