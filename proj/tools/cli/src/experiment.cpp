#include "giantwg/cli/experiment.hpp"

#include <cmath>
#include <set>
#include <sstream>

#include "giantwg/coupling.hpp"
#include "giantwg/error.hpp"
#include "giantwg/ssh_band.hpp"

namespace giantwg::cli {

namespace {

[[noreturn]] void bad(const std::string& what) { throw Error(ErrorKind::InvalidArgument, what); }

double as_number(const TomlValue& v, const std::string& key) {
    if (v.is_array || v.items.size() != 1 || !std::holds_alternative<double>(v.items[0])) {
        bad("'" + key + "' must be a number");
    }
    return std::get<double>(v.items[0]);
}

int as_int(const TomlValue& v, const std::string& key) {
    const double x = as_number(v, key);
    if (x != std::floor(x)) bad("'" + key + "' must be an integer");
    return static_cast<int>(x);
}

std::string as_string(const TomlValue& v, const std::string& key) {
    if (v.is_array || v.items.size() != 1 || !std::holds_alternative<std::string>(v.items[0])) {
        bad("'" + key + "' must be a string");
    }
    return std::get<std::string>(v.items[0]);
}

std::vector<double> as_numbers(const TomlValue& v, const std::string& key) {
    std::vector<double> out;
    for (const auto& item : v.items) {
        if (!std::holds_alternative<double>(item)) bad("'" + key + "' must hold numbers");
        out.push_back(std::get<double>(item));
    }
    return out;
}

std::vector<std::string> as_strings(const TomlValue& v, const std::string& key) {
    std::vector<std::string> out;
    for (const auto& item : v.items) {
        if (!std::holds_alternative<std::string>(item)) bad("'" + key + "' must hold strings");
        out.push_back(std::get<std::string>(item));
    }
    return out;
}

} // namespace

const char* to_string(JobKind job) noexcept {
    switch (job) {
    case JobKind::Band: return "band";
    case JobKind::SelfEnergy: return "selfenergy";
    case JobKind::Rates: return "rates";
    case JobKind::Dynamics: return "dynamics";
    case JobKind::Oracle: return "oracle";
    case JobKind::Figure: return "figure";
    case JobKind::Sweep: return "sweep";
    }
    return "?";
}

JobKind parse_job(const std::string& name) {
    for (JobKind j : {JobKind::Band, JobKind::SelfEnergy, JobKind::Rates, JobKind::Dynamics, JobKind::Oracle,
                      JobKind::Figure, JobKind::Sweep}) {
        if (name == to_string(j)) return j;
    }
    bad("unknown job kind '" + name + "'");
}

InitialState parse_init(const std::string& name) {
    if (name == "ee") return InitialState::EE;
    if (name == "eg") return InitialState::EG;
    if (name == "ge") return InitialState::GE;
    if (name == "gg") return InitialState::GG;
    bad("unknown initial state '" + name + "' (expected ee, eg or ge)");
}

const char* to_string(InitialState init) noexcept {
    switch (init) {
    case InitialState::EE: return "ee";
    case InitialState::EG: return "eg";
    case InitialState::GE: return "ge";
    case InitialState::GG: return "gg";
    }
    return "?";
}

int ExperimentSpec::stride() const {
    const long s = std::lround(sample_interval / dt);
    return static_cast<int>(std::max(1L, s));
}

std::vector<std::string> ExperimentSpec::expanded_couplings() const {
    std::vector<std::string> out;
    for (const auto& c : couplings) {
        if (c == "all") {
            for (auto& l : enumerate_all()) out.push_back(l);
        } else {
            out.push_back(c);
        }
    }
    return out;
}

ExperimentSpec defaults_for(JobKind job) {
    ExperimentSpec s;
    s.job = job;
    switch (job) {
    case JobKind::Oracle:
        s.tmax = 80.0;
        s.dt = 1e-3;
        s.sample_interval = 0.5;
        break;
    case JobKind::Dynamics:
    case JobKind::Sweep:
        s.tmax = 1000.0;
        s.dt = 1e-2;
        s.sample_interval = 1.0;
        break;
    case JobKind::Figure:
        s.tmax = 2000.0;
        s.dt = 1e-2;
        s.sample_interval = 1.0;
        break;
    default: break;
    }
    return s;
}

ExperimentSpec spec_from_toml(const TomlTable& table, ExperimentSpec s) {
    static const std::map<std::string, std::set<std::string>> known = {
        {"waveguide", {"delta"}},
        {"atoms", {"coupling", "d", "g", "g_over_xi", "detuning"}},
        {"run", {"job", "init", "tmax", "dt", "sample", "eps", "L", "figure", "out", "threads", "band_samples"}},
    };
    for (const auto& [section, entries] : table) {
        const auto it = known.find(section);
        if (it == known.end()) bad("unknown config section [" + section + "]");
        for (const auto& [key, value] : entries) {
            (void)value;
            if (!it->second.count(key)) bad("unknown key '" + key + "' in [" + section + "]");
        }
    }
    auto get = [&table](const std::string& section, const std::string& key) -> const TomlValue* {
        const auto sec = table.find(section);
        if (sec == table.end()) return nullptr;
        const auto it = sec->second.find(key);
        return it == sec->second.end() ? nullptr : &it->second;
    };

    if (auto v = get("waveguide", "delta")) s.deltas = as_numbers(*v, "delta");
    if (auto v = get("atoms", "coupling")) s.couplings = as_strings(*v, "coupling");
    if (auto v = get("atoms", "d")) {
        s.distances.clear();
        for (double x : as_numbers(*v, "d")) {
            if (x != std::floor(x)) bad("'d' must hold integers");
            s.distances.push_back(static_cast<int>(x));
        }
    }
    if (get("atoms", "g") && get("atoms", "g_over_xi")) bad("give either 'g' or 'g_over_xi', not both");
    if (auto v = get("atoms", "g")) s.g = as_number(*v, "g");
    if (auto v = get("atoms", "g_over_xi")) s.g = as_number(*v, "g_over_xi");
    if (auto v = get("atoms", "detuning")) s.detuning = as_number(*v, "detuning");
    if (auto v = get("run", "job")) s.job = parse_job(as_string(*v, "job"));
    if (auto v = get("run", "init")) {
        s.inits.clear();
        for (const auto& name : as_strings(*v, "init")) s.inits.push_back(parse_init(name));
    }
    if (auto v = get("run", "tmax")) s.tmax = as_number(*v, "tmax");
    if (auto v = get("run", "dt")) s.dt = as_number(*v, "dt");
    if (auto v = get("run", "sample")) s.sample_interval = as_number(*v, "sample");
    if (auto v = get("run", "eps")) s.eps = as_number(*v, "eps");
    if (auto v = get("run", "L")) s.lattice_size = as_int(*v, "L");
    if (auto v = get("run", "figure")) s.figure = as_string(*v, "figure");
    if (auto v = get("run", "out")) s.out_dir = as_string(*v, "out");
    if (auto v = get("run", "threads")) s.threads = as_int(*v, "threads");
    if (auto v = get("run", "band_samples")) s.band_samples = as_int(*v, "band_samples");
    return s;
}

void validate(const ExperimentSpec& s) {
    if (s.deltas.empty()) bad("delta list is empty");
    for (double d : s.deltas) (void)SshParams(1.0, d); // throws on |delta| >= 1
    if (s.threads < 1) bad("threads must be >= 1");

    if (s.job == JobKind::Band) {
        if (s.band_samples < 2) bad("band_samples must be >= 2");
        return;
    }
    if (s.job == JobKind::Figure) {
        if (s.figure != "fig4" && s.figure != "fig5") bad("figure must be fig4 or fig5");
    }
    if (s.job != JobKind::Figure && s.job != JobKind::Rates) {
        if (s.couplings.empty()) bad("coupling list is empty");
        for (const auto& label : s.expanded_couplings()) (void)parse_config(label, Geometry{}, 1.0);
    }
    if (s.distances.empty()) bad("d list is empty");
    for (int d : s.distances) (void)Geometry{d, 0}.positions();
    if (!(s.g > 0.0)) bad("g must be positive");
    if (!(s.eps > 0.0)) bad("eps must be positive");

    const bool time_job = s.job == JobKind::Dynamics || s.job == JobKind::Oracle || s.job == JobKind::Figure ||
                          s.job == JobKind::Sweep;
    if (time_job) {
        if (!(s.tmax > 0.0)) bad("tmax must be positive");
        if (!(s.dt > 0.0) || s.dt > 1e-2) bad("dt must lie in (0, 1e-2]");
        if (!(s.sample_interval >= s.dt)) bad("sample interval must be >= dt");
        if (s.inits.empty() && s.job != JobKind::Figure) bad("init list is empty");
    }
    if (s.job == JobKind::Oracle) {
        if (s.lattice_size < 100 || s.lattice_size % 2 != 0) bad("L must be even and >= 100");
        for (auto init : s.inits) {
            if (init != InitialState::EG && init != InitialState::GE) bad("oracle supports init eg or ge only");
        }
        for (int d : s.distances) {
            if (4 * (3 * d + 1) > s.lattice_size) bad("L too small for coupling distance d");
        }
    }
    if (s.job != JobKind::Sweep) {
        for (double d : s.deltas) {
            const auto edges = band_edges(SshParams(1.0, d));
            const double a = std::abs(s.detuning);
            if (!(a > edges.inner && a < edges.outer)) {
                std::ostringstream os;
                os << "detuning " << s.detuning << " outside the band (" << edges.inner << ", " << edges.outer
                   << ") for delta = " << d;
                throw Error(ErrorKind::OutOfBand, os.str());
            }
        }
    }
}

std::string Point::tag() const {
    std::ostringstream os;
    os << coupling << "_d" << this->d << "_delta" << (delta >= 0 ? "+" : "") << delta << "_" << to_string(init);
    return os.str();
}

std::vector<Point> expand_points(const ExperimentSpec& spec) {
    std::vector<Point> out;
    for (const auto& label : spec.expanded_couplings())
        for (int d : spec.distances)
            for (double delta : spec.deltas)
                for (auto init : spec.inits) out.push_back(Point{label, d, delta, spec.g, spec.detuning, init});
    return out;
}

} // namespace giantwg::cli
