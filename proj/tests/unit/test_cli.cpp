#include <doctest.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <set>
#include <sstream>

#include "giantwg/cli/app.hpp"
#include "giantwg/cli/csv.hpp"
#include "giantwg/cli/experiment.hpp"
#include "giantwg/cli/jobs.hpp"
#include "giantwg/cli/svg.hpp"
#include "giantwg/cli/toml_lite.hpp"
#include "giantwg/coupling.hpp"
#include "giantwg/error.hpp"

using namespace giantwg;
using namespace giantwg::cli;
namespace fs = std::filesystem;

namespace {

fs::path scratch(const std::string& name) {
    const char* env = std::getenv("GIANTWG_TEST_TMP");
    const fs::path root = env ? fs::path(env) : fs::temp_directory_path() / "giantwg_cli_tests";
    const fs::path dir = root / name;
    fs::remove_all(dir);
    fs::create_directories(dir);
    return dir;
}

std::string slurp(const fs::path& p) {
    std::ifstream f(p, std::ios::binary);
    std::ostringstream os;
    os << f.rdbuf();
    return os.str();
}

int run(std::vector<std::string> args, std::string* out_text = nullptr) {
    args.insert(args.begin(), "giantwg");
    std::vector<const char*> argv;
    for (auto& a : args) argv.push_back(a.c_str());
    std::ostringstream out, err;
    const int rc = run_app(static_cast<int>(argv.size()), argv.data(), out, err);
    if (out_text) *out_text = out.str();
    return rc;
}

} // namespace

TEST_CASE("toml subset reader") {
    const auto t = parse_toml(R"(# experiment
[waveguide]
delta = [0.3, -0.3]   # both phases

[atoms]
coupling = ["ABBA", "AABB"]
d = 2
g_over_xi = 0.05
[run]
job = "sweep"
flag = true
)");
    REQUIRE(t.count("waveguide"));
    CHECK(t.at("waveguide").at("delta").is_array);
    CHECK(std::get<double>(t.at("waveguide").at("delta").items[1]) == -0.3);
    CHECK(std::get<std::string>(t.at("atoms").at("coupling").items[0]) == "ABBA");
    CHECK(std::get<bool>(t.at("run").at("flag").items[0]));
    CHECK_THROWS_AS(parse_toml("[atoms]\nd = \n"), Error);
    CHECK_THROWS_AS(parse_toml("[atoms\n"), Error);
    CHECK_THROWS_AS(parse_toml("x = 1\nx = 2\n"), Error);
    CHECK_THROWS_AS(parse_toml("x = [1, 2\n"), Error);
    CHECK_THROWS_AS(parse_toml("x = 1.2.3\n"), Error);
}

TEST_CASE("experiment spec from toml and validation") {
    const auto t = parse_toml(R"([waveguide]
delta = [0.3, -0.3]
[atoms]
coupling = ["all"]
d = [1, 2]
g_over_xi = 0.04
detuning = 1.1
[run]
job = "sweep"
init = ["ee", "eg"]
tmax = 50
dt = 0.01
)");
    const auto s = spec_from_toml(t);
    CHECK(s.job == JobKind::Sweep);
    CHECK(s.deltas.size() == 2);
    CHECK(s.distances == std::vector<int>{1, 2});
    CHECK(s.g == 0.04);
    CHECK(s.detuning == 1.1);
    CHECK(s.inits.size() == 2);
    CHECK(s.expanded_couplings().size() == 16);
    CHECK(expand_points(s).size() == 16 * 2 * 2 * 2);
    CHECK_NOTHROW(validate(s));

    CHECK_THROWS_AS(spec_from_toml(parse_toml("[atoms]\nbogus = 1\n")), Error);
    CHECK_THROWS_AS(spec_from_toml(parse_toml("[extra]\nx = 1\n")), Error);
    CHECK_THROWS_AS(spec_from_toml(parse_toml("[atoms]\ng = 0.1\ng_over_xi = 0.1\n")), Error);

    auto invalid = [](auto mutate) {
        ExperimentSpec s = defaults_for(JobKind::Dynamics);
        mutate(s);
        CHECK_THROWS_AS(validate(s), Error);
    };
    invalid([](ExperimentSpec& s) { s.deltas.clear(); });
    invalid([](ExperimentSpec& s) { s.deltas = {1.2}; });
    invalid([](ExperimentSpec& s) { s.couplings = {"ABXA"}; });
    invalid([](ExperimentSpec& s) { s.distances = {0}; });
    invalid([](ExperimentSpec& s) { s.dt = 0.05; });
    invalid([](ExperimentSpec& s) { s.g = -1; });
    invalid([](ExperimentSpec& s) { s.detuning = 0.5; });
    invalid([](ExperimentSpec& s) {
        s.job = JobKind::Oracle;
        s.inits = {InitialState::EE};
    });
    invalid([](ExperimentSpec& s) {
        s.job = JobKind::Oracle;
        s.lattice_size = 101;
    });
}

TEST_CASE("csv formatting is fixed and LF-terminated") {
    CHECK(format_real(0.1) == "0.1");
    CHECK(format_real(1.0 / 3.0) == "0.333333333333");
    CHECK(format_real(-0.0) == "0");
    CHECK(format_real(1.5e-7) == "1.5e-07");
    Table t;
    t.header = {"a", "b"};
    t.add_row({"1", "2"});
    CHECK(t.to_csv() == "a,b\n1,2\n");
    CHECK_THROWS_AS(t.add_row({"1"}), Error);
}

TEST_CASE("svg chart") {
    const auto svg = render_line_chart("t <1>", "x", "y", {Series{"s1", {0, 1, 2}, {0, 0.5, 0.2}}, Series{"s2", {0, 2}, {0.1, 0.1}}});
    CHECK(svg.find("<svg") == 0);
    CHECK(svg.find("t &lt;1&gt;") != std::string::npos);
    CHECK(svg.find("polyline") != std::string::npos);
    CHECK(svg.find("s2") != std::string::npos);
    std::vector<Series> many(9, Series{"s", {0}, {0}});
    CHECK_THROWS_AS(render_line_chart("", "", "", many), Error);
}

TEST_CASE("rates table: sixteen rows per delta and configuration identities") {
    const auto t = run_rates_table(1, {0.3, -0.3}, 1.0);
    REQUIRE(t.rows.size() == 32);
    auto row = [&](const std::string& label, const std::string& delta) {
        for (const auto& r : t.rows)
            if (r[0] == label && r[2] == delta) return r;
        FAIL("missing row");
        return t.rows.front();
    };
    for (const char* delta : {"0.3", "-0.3"}) {
        auto a = row("AAAA", delta), b = row("BBBB", delta);
        for (std::size_t k = 3; k < 7; ++k) CHECK(a[k] == b[k]);
    }
    auto p = row("AAAA", "0.3"), m = row("AAAA", "-0.3");
    for (std::size_t k = 3; k < 7; ++k) CHECK(std::stod(p[k]) == doctest::Approx(std::stod(m[k])).epsilon(1e-10));
    // direct agreement with the library
    const auto r = transition_rates(point_self_energy(Point{"ABBA", 1, 0.3, 0.05, 1.0, InitialState::EG}).scaled(0.05, 1.0));
    CHECK(row("ABBA", "0.3")[3] == format_real(r.Gep));
    CHECK(row("ABBA", "0.3")[6] == format_real(r.Gmg));
}

TEST_CASE("figure panels: counts and AAAA eg/ge coincidence") {
    const FigureOptions quick{30.0, 1e-2, 1.0, 2};
    const auto fig4 = compute_figure("fig4", quick);
    REQUIRE(fig4.size() == 16);
    for (const auto& p : fig4) CHECK(p.curves.size() == 8);
    const auto& aaaa = fig4.front();
    REQUIRE(aaaa.coupling == "AAAA");
    for (std::size_t c = 0; c < 4; ++c) {
        REQUIRE(aaaa.curves[c].init == InitialState::EG);
        REQUIRE(aaaa.curves[c + 4].init == InitialState::GE);
        const auto& a = aaaa.traces[c].values;
        const auto& b = aaaa.traces[c + 4].values;
        for (std::size_t i = 0; i < a.size(); ++i) CHECK(std::abs(a[i] - b[i]) < 1e-12);
    }
    const auto fig5 = compute_figure("fig5", quick);
    for (const auto& p : fig5) CHECK(p.curves.size() == 4);
    CHECK_THROWS_AS(compute_figure("fig6", quick), Error);

    const auto dir = scratch("figure");
    const auto files = write_figure("fig5", fig5, dir.string());
    CHECK(files.size() == 32);
    for (const auto& f : files) CHECK(fs::exists(f));
    const auto csv = slurp(dir / "fig5_ABBA.csv");
    CHECK(csv.rfind("xi_t,C_ABBA_d1_delta+0.3_ee,C_ABBA_d1_delta-0.3_ee,C_ABBA_d2_delta+0.3_ee,C_ABBA_d2_delta-0.3_ee\n", 0) == 0);
}

TEST_CASE("figure output is removed when a later panel fails") {
    auto panels = compute_figure("fig5", FigureOptions{5.0, 1e-2, 1.0, 1});
    panels[3].traces[1].times.pop_back();
    panels[3].traces[1].values.pop_back();
    const auto dir = scratch("figure_fail");
    CHECK_THROWS_AS(write_figure("fig5", panels, dir.string()), Error);
    CHECK(fs::is_empty(dir));
}

TEST_CASE("sweep: rows, determinism, mirror pairs and failures") {
    ExperimentSpec s = defaults_for(JobKind::Sweep);
    s.couplings = {"all"};
    s.inits = {InitialState::EE};
    s.tmax = 300;
    s.threads = 1;
    const auto one = run_sweep(s);
    CHECK(one.points == 16);
    CHECK(one.skipped.empty());
    CHECK(one.table.rows.size() == 16 * 4);
    s.threads = 3;
    CHECK(run_sweep(s).table.to_csv() == one.table.to_csv());

    auto feature = [&](const std::string& label, const std::string& name) {
        for (const auto& r : one.table.rows)
            if (r[0] == label && r[4] == name) return r[5];
        return std::string("missing");
    };
    for (const auto& label : enumerate_all()) {
        const auto m = mirror_label(label);
        for (const char* name : {"max_C", "C_tmax", "t_max_C"}) {
            CHECK(std::abs(std::stod(feature(label, name)) - std::stod(feature(m, name))) < 1e-6);
        }
        const auto on = feature(label, "onset"), om = feature(m, "onset");
        if (on == "none" || om == "none") {
            CHECK(on == om);
        } else {
            CHECK(std::abs(std::stod(on) - std::stod(om)) < 1e-6);
        }
    }

    ExperimentSpec empty = s;
    empty.deltas.clear();
    CHECK_THROWS_AS(run_sweep(empty), Error);

    ExperimentSpec bad = s;
    bad.couplings = {"ABBA"};
    bad.detuning = 1.95; // inside the band but within 5g of its edge
    const auto failed = run_sweep(bad);
    CHECK(failed.points == 1);
    CHECK(failed.skipped.size() == 1);
    CHECK(failed.table.rows.empty());
}

TEST_CASE("dynamics rows are reproducible from the library") {
    const Point pt{"BAAB", 2, -0.3, 0.05, 1.0, InitialState::GE};
    const auto a = run_dynamics_point(pt, 50, 1e-2, 100);
    const auto t = dynamics_table(a.trajectory, a.concurrence);
    CHECK(t.header.size() == 8);
    CHECK(t.header[7] == "concurrence");
    const auto b = run_dynamics_point(pt, 50, 1e-2, 100);
    CHECK(dynamics_table(b.trajectory, b.concurrence).to_csv() == t.to_csv());
    CHECK(t.rows.back()[7] == format_real(concurrence(a.trajectory.states.back())));
}

TEST_CASE("command-line front end") {
    const auto dir = scratch("app");
    std::string out;
    CHECK(run({"band", "--delta", "-0.3", "--out", dir.string()}, &out) == 0);
    CHECK(out.find("\"winding_number\": 1") != std::string::npos);
    CHECK(fs::exists(dir / "band_delta-0.3.csv"));
    CHECK(slurp(dir / "band_delta-0.3.csv").rfind("k,omega_upper,omega_lower,phase\n", 0) == 0);

    CHECK(run({"selfenergy", "--coupling", "ABBA", "--d", "2", "--out", dir.string()}, &out) == 0);
    CHECK(fs::exists(dir / "selfenergy.json"));

    CHECK(run({"dynamics", "--coupling", "ABBA", "--d", "2", "--init", "ee", "--tmax", "20", "--out", dir.string()}) == 0);
    const auto dyn = slurp(dir / "dynamics_ABBA_d2_delta+0.3_ee.csv");
    CHECK(dyn.rfind("xi_t,rho_ee,rho_egeg,rho_gege,re_rho_egge,im_rho_egge,rho_gg,concurrence\n", 0) == 0);
    CHECK(dyn.find('\r') == std::string::npos);

    CHECK(run({"dynamics", "--delta", "0.95"}) == 2);          // Delta outside the band
    CHECK(run({"dynamics", "--dt", "0.1"}) == 2);              // step too large
    CHECK(run({"dynamics", "--coupling", "ABCA"}) == 2);
    CHECK(run({"nonsense"}) != 0);

    const auto cfg = dir / "sweep.toml";
    std::ofstream(cfg) << "[waveguide]\ndelta = [0.3]\n[atoms]\ncoupling = [\"ABBA\", \"BAAB\"]\nd = 2\n[run]\njob = \"sweep\"\n"
                          "init = [\"ee\"]\ntmax = 100\nout = \""
                       << (dir / "sw").string() << "\"\n";
    CHECK(run({"--config", cfg.string()}) == 0);
    const auto sweep = slurp(dir / "sw" / "sweep.csv");
    CHECK(sweep.rfind("coupling,d,delta,init,feature,value\n", 0) == 0);
    CHECK(std::count(sweep.begin(), sweep.end(), '\n') == 1 + 2 * 4);

    const auto all_bad = dir / "bad.toml";
    std::ofstream(all_bad) << "[atoms]\ncoupling = [\"ABBA\"]\ndetuning = 1.95\n[run]\njob = \"sweep\"\ntmax = 10\nout = \""
                           << (dir / "bad").string() << "\"\n";
    CHECK(run({"--config", all_bad.string()}) == 1);
}
