#include "config.hpp"

#include <charconv>
#include <fstream>
#include <functional>
#include <map>
#include <set>
#include <sstream>

#include "ddlab/errors.hpp"
#include "ddlab/stochastic.hpp"
#include "format.hpp"

namespace ddlab::app {

namespace {

constexpr std::pair<Experiment, std::string_view> experiment_names[] = {
    {Experiment::simulate, "simulate"}, {Experiment::beables, "beables"},
    {Experiment::spectrum, "spectrum"}, {Experiment::wigner, "wigner"},
    {Experiment::brownian, "brownian"}, {Experiment::phase, "phase"},
    {Experiment::check, "check"},
};

std::string_view trim(std::string_view s) {
    const auto first = s.find_first_not_of(" \t\r");
    if (first == std::string_view::npos) return {};
    const auto last = s.find_last_not_of(" \t\r");
    return s.substr(first, last - first + 1);
}

double to_double(std::string_view v, std::size_t line, std::string_view key) {
    double out = 0.0;
    const auto r = std::from_chars(v.data(), v.data() + v.size(), out);
    if (v.empty() || r.ec != std::errc{} || r.ptr != v.data() + v.size()) {
        throw ParseError(line, "'" + std::string(key) + "' expects a number, got '" + std::string(v) + "'");
    }
    return out;
}

std::uint64_t to_u64(std::string_view v, std::size_t line, std::string_view key) {
    std::uint64_t out = 0;
    const auto r = std::from_chars(v.data(), v.data() + v.size(), out);
    if (v.empty() || r.ec != std::errc{} || r.ptr != v.data() + v.size()) {
        throw ParseError(line, "'" + std::string(key) + "' expects a non-negative integer, got '" +
                                   std::string(v) + "'");
    }
    return out;
}

std::size_t to_size(std::string_view v, std::size_t line, std::string_view key) {
    return static_cast<std::size_t>(to_u64(v, line, key));
}

std::vector<std::size_t> to_levels(std::string_view v, std::size_t line, std::string_view key) {
    std::vector<std::size_t> out;
    while (true) {
        const auto comma = v.find(',');
        out.push_back(to_size(trim(v.substr(0, comma)), line, key));
        if (comma == std::string_view::npos) break;
        v.remove_prefix(comma + 1);
    }
    return out;
}

std::string levels_text(const std::vector<std::size_t>& levels) {
    std::string s;
    for (std::size_t i = 0; i < levels.size(); ++i) {
        if (i) s += ',';
        s += std::to_string(levels[i]);
    }
    return s;
}

// One entry per accepted key: how to set it from text and how to print it.
struct Field {
    std::function<void(std::string_view, std::size_t)> set;
    std::function<std::string()> get;
};

using FieldTable = std::map<std::string, Field, std::less<>>;

FieldTable fields_for(ExperimentConfig& c) {
    FieldTable t;
    auto real = [&t](std::string name, double& ref) {
        t[name] = {[&ref, name](std::string_view v, std::size_t l) { ref = to_double(v, l, name); },
                   [&ref] { return format_double(ref); }};
    };
    auto count = [&t](std::string name, std::size_t& ref) {
        t[name] = {[&ref, name](std::string_view v, std::size_t l) { ref = to_size(v, l, name); },
                   [&ref] { return std::to_string(ref); }};
    };
    auto text = [&t](std::string name, std::string& ref) {
        t[name] = {[&ref](std::string_view v, std::size_t) { ref = std::string(v); },
                   [&ref] { return ref; }};
    };

    t["experiment"] = {[&c](std::string_view v, std::size_t l) {
                           if (v.empty()) throw ParseError(l, "experiment must not be empty");
                           const auto e = parse_experiment(v);
                           if (!e) throw ParseError(l, "unknown experiment '" + std::string(v) + "'");
                           c.experiment = *e;
                       },
                       [&c] { return std::string(experiment_name(c.experiment)); }};
    t["seed"] = {[&c](std::string_view v, std::size_t l) { c.seed = to_u64(v, l, "seed"); },
                 [&c] { return std::to_string(c.seed); }};
    count("threads", c.threads);
    text("output_dir", c.output_dir);

    real("params.m", c.params.m);
    real("params.gamma", c.params.gamma);
    real("params.k", c.params.k);
    real("params.hbar", c.params.hbar);
    real("params.kB", c.params.kB);

    real("initial.x1", c.initial.x1);
    real("initial.x2", c.initial.x2);
    real("initial.p1", c.initial.p1);
    real("initial.p2", c.initial.p2);

    t["integrator.method"] = {[&c](std::string_view v, std::size_t l) {
                                  const auto m = dynamics::parse_method(v);
                                  if (!m) throw ParseError(l, "unknown integrator method '" + std::string(v) + "'");
                                  c.integrator.method = *m;
                              },
                              [&c] { return std::string(dynamics::method_name(c.integrator.method)); }};
    real("integrator.dt", c.integrator.dt);
    real("integrator.t_end", c.integrator.t_end);

    count("spectrum.n_levels", c.spectrum.n_levels);
    count("spectrum.n_points", c.spectrum.grid.n_points);
    real("spectrum.radius", c.spectrum.grid.radius);
    real("spectrum.alpha", c.spectrum.alpha);

    t["wigner.levels"] = {[&c](std::string_view v, std::size_t l) { c.wigner.levels = to_levels(v, l, "wigner.levels"); },
                          [&c] { return levels_text(c.wigner.levels); }};
    count("wigner.dim", c.wigner.dim);
    real("wigner.t", c.wigner.t);
    real("wigner.x_min", c.wigner.axes.x_min);
    real("wigner.x_max", c.wigner.axes.x_max);
    count("wigner.nx", c.wigner.axes.nx);
    real("wigner.p_min", c.wigner.axes.p_min);
    real("wigner.p_max", c.wigner.axes.p_max);
    count("wigner.np", c.wigner.axes.np);
    count("wigner.ny", c.wigner.axes.ny);

    real("brownian.temperature", c.brownian.temperature);
    real("brownian.dt", c.brownian.dt);
    count("brownian.n_steps", c.brownian.n_steps);
    count("brownian.n_paths", c.brownian.n_paths);
    real("brownian.x0", c.brownian.x0);
    real("brownian.v0", c.brownian.v0);
    count("brownian.max_lag", c.brownian.max_lag);
    count("brownian.n_sample_paths", c.brownian.n_sample_paths);

    text("phase.source", c.phase.source);
    text("phase.forward", c.phase.forward);
    text("phase.backward", c.phase.backward);
    return t;
}

const std::set<std::string, std::less<>> sections = {"params", "initial", "integrator", "spectrum",
                                                     "wigner", "brownian", "phase"};

}  // namespace

ParseError::ParseError(std::size_t line, const std::string& what)
    : std::runtime_error(line ? "line " + std::to_string(line) + ": " + what : what), line_(line) {}

std::string_view experiment_name(Experiment e) noexcept {
    for (const auto& [tag, name] : experiment_names) {
        if (tag == e) return name;
    }
    return "unknown";
}

std::optional<Experiment> parse_experiment(std::string_view name) noexcept {
    for (const auto& [tag, n] : experiment_names) {
        if (n == name) return tag;
    }
    return std::nullopt;
}

ExperimentConfig parse_config(std::string_view text) {
    ExperimentConfig cfg;
    FieldTable table = fields_for(cfg);
    std::set<std::string, std::less<>> seen;
    std::string section;
    std::size_t lineno = 0;
    bool have_experiment = false;

    while (!text.empty()) {
        ++lineno;
        const auto nl = text.find('\n');
        std::string_view line = text.substr(0, nl);
        text.remove_prefix(nl == std::string_view::npos ? text.size() : nl + 1);

        if (const auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
        line = trim(line);
        if (line.empty()) continue;

        if (line.front() == '[') {
            if (line.back() != ']') throw ParseError(lineno, "unterminated section header");
            const std::string_view name = trim(line.substr(1, line.size() - 2));
            if (!sections.contains(name)) throw ParseError(lineno, "unknown section [" + std::string(name) + "]");
            section = std::string(name);
            continue;
        }

        const auto eq = line.find('=');
        if (eq == std::string_view::npos) throw ParseError(lineno, "expected 'key = value'");
        const std::string_view key = trim(line.substr(0, eq));
        const std::string_view value = trim(line.substr(eq + 1));
        if (key.empty()) throw ParseError(lineno, "missing key before '='");

        const std::string full = section.empty() ? std::string(key) : section + "." + std::string(key);
        const auto it = table.find(full);
        if (it == table.end()) throw ParseError(lineno, "unknown key '" + full + "'");
        if (!seen.insert(full).second) throw ParseError(lineno, "duplicate key '" + full + "'");
        it->second.set(value, lineno);
        if (full == "experiment") have_experiment = true;
    }
    if (!have_experiment) throw ParseError(0, "missing required key 'experiment'");
    validate(cfg);
    return cfg;
}

void validate(const ExperimentConfig& cfg) {
    if (cfg.threads < 1) throw ParamError("threads must be ≥ 1");
    switch (cfg.experiment) {
    case Experiment::brownian: {
        stochastic::LangevinSpec spec;
        spec.params = cfg.params;
        spec.temperature = cfg.brownian.temperature;
        spec.dt = cfg.brownian.dt;
        spec.n_steps = cfg.brownian.n_steps;
        spec.n_paths = cfg.brownian.n_paths;
        spec.x0 = cfg.brownian.x0;
        spec.v0 = cfg.brownian.v0;
        spec.max_lag = cfg.brownian.max_lag;
        spec.n_sample_paths = cfg.brownian.n_sample_paths;
        spec.threads = cfg.threads;
        spec.validate();
        return;
    }
    case Experiment::check:
        return;  // criteria carry their own parameters
    default:
        break;
    }
    cfg.params.validate();

    switch (cfg.experiment) {
    case Experiment::simulate:
    case Experiment::beables:
        cfg.integrator.validate();
        if (!is_finite(cfg.initial)) throw ParamError("initial state must be finite");
        break;
    case Experiment::spectrum:
        if (cfg.spectrum.n_levels < 1) throw ParamError("n_levels must be ≥ 1");
        if (cfg.spectrum.grid.n_points < 2 * (cfg.spectrum.n_levels + 2)) {
            throw ParamError("n_points must be ≥ 2 (n_levels + 2)");
        }
        if (!(cfg.spectrum.grid.radius >= 0.0)) throw ParamError("radius must be ≥ 0");
        if (!std::isfinite(cfg.spectrum.alpha)) throw ParamError("alpha must be finite");
        cfg.params.omega();
        break;
    case Experiment::wigner:
        if (cfg.wigner.dim < 1) throw ParamError("dim must be ≥ 1");
        for (std::size_t n : cfg.wigner.levels) {
            if (n >= cfg.wigner.dim) throw ParamError("wigner level " + std::to_string(n) + " must be < dim");
        }
        if (!std::isfinite(cfg.wigner.t)) throw ParamError("wigner t must be finite");
        cfg.params.omega();
        break;
    case Experiment::phase:
        if (cfg.phase.source == "trajectory") {
            cfg.integrator.validate();
            if (!is_finite(cfg.initial)) throw ParamError("initial state must be finite");
        } else if (cfg.phase.source == "files") {
            if (cfg.phase.forward.empty() || cfg.phase.backward.empty()) {
                throw ParamError("phase.source = files needs phase.forward and phase.backward");
            }
        } else {
            throw ParamError("phase.source must be 'trajectory' or 'files'");
        }
        break;
    default:
        break;
    }
}

void resolve_paths(ExperimentConfig& cfg, const std::filesystem::path& base_dir) {
    if (cfg.experiment != Experiment::phase || cfg.phase.source != "files") return;
    for (std::string* f : {&cfg.phase.forward, &cfg.phase.backward}) {
        std::filesystem::path p(*f);
        if (p.is_relative()) p = base_dir / p;
        if (!std::filesystem::exists(p)) throw ParamError("path file not found: " + p.string());
        *f = p.string();
    }
}

ExperimentConfig load_config(const std::filesystem::path& file) {
    std::ifstream in(file, std::ios::binary);
    if (!in) throw ParseError(0, "cannot open config file '" + file.string() + "'");
    std::ostringstream buf;
    buf << in.rdbuf();
    ExperimentConfig cfg = parse_config(buf.str());
    resolve_paths(cfg, file.parent_path());
    return cfg;
}

std::string serialize_config(const ExperimentConfig& cfg) {
    ExperimentConfig copy = cfg;
    const FieldTable table = fields_for(copy);
    std::ostringstream os;
    std::string current;
    // top-level keys first; sections follow in table (alphabetical) order
    for (const auto& [key, field] : table) {
        if (key.find('.') != std::string::npos) continue;
        if (key == "output_dir" && copy.output_dir.empty()) continue;
        os << key << " = " << field.get() << '\n';
    }
    for (const auto& [key, field] : table) {
        const auto dot = key.find('.');
        if (dot == std::string::npos) continue;
        const std::string sec = key.substr(0, dot);
        if (sec != current) {
            os << "\n[" << sec << "]\n";
            current = sec;
        }
        const std::string value = field.get();
        if (value.empty()) continue;
        os << key.substr(dot + 1) << " = " << value << '\n';
    }
    return os.str();
}

}  // namespace ddlab::app
