#include "run.hpp"

#include <cmath>
#include <fstream>
#include <ostream>

#include "criteria.hpp"
#include "ddlab/beables.hpp"
#include "ddlab/errors.hpp"
#include "ddlab/hamiltonian.hpp"
#include "ddlab/interference.hpp"
#include "ddlab/stochastic.hpp"
#include "format.hpp"

namespace ddlab::app {

namespace {

namespace fs = std::filesystem;

Json meta(const ExperimentConfig& cfg) {
    return Json{{"tool", "ddlab"}, {"version", tool_version}, {"command", experiment_name(cfg.experiment)}};
}

Json params_json(const OscillatorParams& p) {
    return Json{{"m", p.m}, {"gamma", p.gamma}, {"k", p.k}, {"hbar", p.hbar}, {"kB", p.kB}};
}

void write_trajectory(const dynamics::Trajectory& tr, const fs::path& file) {
    const OscillatorParams& p = tr.params;
    const bool under = p.underdamped();
    CsvTable t{{"t", "x1", "x2", "p1", "p2", "H", "C", "J2"}, {}};
    t.rows.reserve(tr.size());
    for (std::size_t i = 0; i < tr.size(); ++i) {
        const DoubledState& s = tr.states[i];
        const SectorState& q = tr.sector_states[i];
        t.rows.push_back({tr.times[i], s.x1, s.x2, s.p1, s.p2, hamiltonian(q, p),
                          under ? invariant_c(q, p) : std::nan(""), invariant_j2(q)});
    }
    write_csv_file(file, t);
}

void run_beables(const ExperimentConfig& cfg, const dynamics::Trajectory& tr, const fs::path& out) {
    const OscillatorParams& p = cfg.params;
    const beables::BeableValues b = beables::compute_beables(tr.sector_states.front(), p);
    const beables::SplitHamiltonian sp = beables::split_hamiltonian(b, p);
    const beables::Thermodynamics th = beables::thermodynamics(b, p);
    const auto field = beables::thooft_velocity_field(b);

    double dc = 0.0, dj = 0.0;
    for (const SectorState& s : tr.sector_states) {
        const beables::BeableValues bi = beables::compute_beables(s, p);
        dc = std::max(dc, std::abs(bi.C - b.C));
        dj = std::max(dj, std::abs(bi.J2 - b.J2));
    }
    Json j{{"meta", meta(cfg)},
           {"params", params_json(p)},
           {"C", b.C},
           {"J2", b.J2},
           {"Gamma", b.Gamma},
           {"Omega", b.Omega},
           {"physical", beables::is_physical(b)},
           {"thooft_hamiltonian", beables::thooft_hamiltonian(b, p)},
           {"velocity_field", {field.f1, field.f2}},
           {"H_I", sp.h_one},
           {"H_II", sp.h_two},
           {"thermodynamics", {{"S", th.S}, {"U", th.U}, {"T", th.T}, {"F", th.F}}},
           {"max_abs_drift", {{"C", dc}, {"J2", dj}}}};
    write_json_file(out / "beables.json", j);
}

void run_spectrum(const ExperimentConfig& cfg, const fs::path& out) {
    const OscillatorParams& p = cfg.params;
    const std::vector<double> levels = quantum::radial_spectrum(p, cfg.spectrum.n_levels, cfg.spectrum.grid);
    Json rows = Json::array();
    for (std::size_t j = 0; j < levels.size(); ++j) {
        const double ladder = p.hbar * p.omega() * (2.0 * static_cast<double>(j) + 1.0);
        const double geo = quantum::geometric_spectrum(2 * j, cfg.spectrum.alpha, p);
        rows.push_back(Json{{"j", j},
                            {"radial", levels[j]},
                            {"ladder", ladder},
                            {"geometric", geo},
                            {"radial_relative_error", std::abs(levels[j] - ladder) / ladder},
                            {"geometric_relative_error", std::abs(geo - ladder) / ladder}});
    }
    Json j{{"meta", meta(cfg)},
           {"params", params_json(p)},
           {"n_points", cfg.spectrum.grid.n_points},
           {"alpha", cfg.spectrum.alpha},
           {"eigenvalues", levels},
           {"comparison", rows}};
    write_json_file(out / "spectrum.json", j);
}

void run_wigner(const ExperimentConfig& cfg, const fs::path& out, std::ostream& log) {
    const OscillatorParams& p = cfg.params;
    quantum::DensityMatrix rho = quantum::superposition(cfg.wigner.levels, cfg.wigner.dim);
    if (cfg.wigner.t != 0.0) rho = quantum::evolve_density(rho, p, cfg.wigner.t);
    const quantum::WignerGrid w = quantum::wigner_transform(rho, p, cfg.wigner.axes);
    CsvTable t{{"x", "p", "W"}, {}};
    t.rows.reserve(w.x_axis.size() * w.p_axis.size());
    for (std::size_t ix = 0; ix < w.x_axis.size(); ++ix) {
        for (std::size_t ip = 0; ip < w.p_axis.size(); ++ip) {
            t.rows.push_back({w.x_axis[ix], w.p_axis[ip],
                              w.values(static_cast<Eigen::Index>(ip), static_cast<Eigen::Index>(ix))});
        }
    }
    write_csv_file(out / "wigner.csv", t);
    log << "wigner: normalization " << w.normalization() << ", max |Im W| " << w.max_imag << '\n';
}

void run_brownian(const ExperimentConfig& cfg, const fs::path& out) {
    stochastic::LangevinSpec spec;
    spec.params = cfg.params;
    spec.temperature = cfg.brownian.temperature;
    spec.dt = cfg.brownian.dt;
    spec.n_steps = cfg.brownian.n_steps;
    spec.n_paths = cfg.brownian.n_paths;
    spec.seed = cfg.seed;
    spec.x0 = cfg.brownian.x0;
    spec.v0 = cfg.brownian.v0;
    spec.max_lag = cfg.brownian.max_lag;
    spec.n_sample_paths = cfg.brownian.n_sample_paths;
    spec.threads = cfg.threads;
    const stochastic::LangevinResult res = stochastic::langevin_ensemble(spec);

    Json lags = Json::array();
    for (std::size_t l = 0; l < res.noise_autocov.size(); ++l) {
        lags.push_back(Json{{"lag", l}, {"mean", res.noise_autocov[l].mean}, {"se", res.noise_autocov[l].se}});
    }
    const double kt = spec.temperature;
    Json expected{{"noise_variance", res.noise_variance}, {"mean_v2", kt / spec.params.m}};
    if (spec.params.k > 0.0) {
        expected["mean_x2"] = kt / spec.params.k;
    } else if (spec.params.gamma > 0.0) {
        expected["diffusion_slope"] = 2.0 * kt / spec.params.gamma;
    }
    Json j{{"meta", meta(cfg)},
           {"params", params_json(spec.params)},
           {"temperature", kt},
           {"dt", spec.dt},
           {"n_steps", spec.n_steps},
           {"n_paths", spec.n_paths},
           {"seed", spec.seed},
           {"final", {{"mean_x2", res.mean_x2.back()}, {"se_x2", res.se_x2.back()},
                      {"mean_v2", res.mean_v2.back()}, {"se_v2", res.se_v2.back()}}},
           {"expected", expected},
           {"noise_autocov", lags},
           {"times", res.times},
           {"mean_x2", res.mean_x2},
           {"se_x2", res.se_x2},
           {"mean_v2", res.mean_v2},
           {"se_v2", res.se_v2},
           {"sample_paths", res.sample_paths}};
    write_json_file(out / "brownian.json", j);
}

interference::PlanarPath load_path(const std::string& file) {
    std::ifstream in(file, std::ios::binary);
    if (!in) throw ParamError("cannot open path file '" + file + "'");
    return interference::read_path_csv(in);
}

void run_phase(const ExperimentConfig& cfg, const fs::path& out) {
    const OscillatorParams& p = cfg.params;
    interference::PathPair pair;
    if (cfg.phase.source == "files") {
        pair.forward = load_path(cfg.phase.forward);
        pair.backward = load_path(cfg.phase.backward);
    } else {
        pair = interference::loop_from_trajectory(dynamics::simulate(cfg.initial, p, cfg.integrator));
        for (const auto& [name, path] : {std::pair{"forward.csv", &pair.forward}, {"backward.csv", &pair.backward}}) {
            std::ofstream os(out / name, std::ios::binary | std::ios::trunc);
            interference::write_path_csv(os, *path);
        }
    }
    const double area = interference::enclosed_area(pair);
    const double l2 = interference::dissipation_length_sq(p);
    const interference::StokesResult st = interference::stokes_check(pair, l2);
    Json j{{"meta", meta(cfg)},
           {"params", params_json(p)},
           {"source", cfg.phase.source},
           {"area", area},
           {"L2", l2},
           {"theta", interference::interference_phase(area, p)},
           {"stokes", {{"line_integral", st.line_integral},
                       {"area_integral", st.area_integral},
                       {"discrepancy", st.discrepancy}}}};
    write_json_file(out / "phase.json", j);
}

int run_check(const ExperimentConfig& cfg, const fs::path& out, std::ostream& log) {
    const CriteriaOptions opts{cfg.seed, cfg.threads};
    Json list = Json::array();
    bool all = true;
    for (int id = 1; id <= criteria_count; ++id) {
        const CriterionResult r = run_criterion(id, opts);
        log << summary_line(r) << '\n';
        all = all && r.ok();
        list.push_back(criterion_json(r));
    }
    bool numeric = true;
    for (const Json& c : list) numeric = numeric && c["passed"].get<bool>();
    Json j{{"meta", meta(cfg)}, {"seed", cfg.seed}, {"all_passed", numeric}, {"criteria", list}};
    write_json_file(out / "check.json", j);
    return all ? exit_ok : exit_check_failed;
}

}  // namespace

int run(const ExperimentConfig& cfg, const fs::path& out_dir, std::ostream& log) {
    validate(cfg);
    fs::create_directories(out_dir);
    switch (cfg.experiment) {
    case Experiment::simulate:
        write_trajectory(dynamics::simulate(cfg.initial, cfg.params, cfg.integrator), out_dir / "trajectory.csv");
        return exit_ok;
    case Experiment::beables: {
        const dynamics::Trajectory tr = dynamics::simulate(cfg.initial, cfg.params, cfg.integrator);
        write_trajectory(tr, out_dir / "trajectory.csv");
        run_beables(cfg, tr, out_dir);
        return exit_ok;
    }
    case Experiment::spectrum:
        run_spectrum(cfg, out_dir);
        return exit_ok;
    case Experiment::wigner:
        run_wigner(cfg, out_dir, log);
        return exit_ok;
    case Experiment::brownian:
        run_brownian(cfg, out_dir);
        return exit_ok;
    case Experiment::phase:
        run_phase(cfg, out_dir);
        return exit_ok;
    case Experiment::check:
        return run_check(cfg, out_dir, log);
    }
    return exit_ok;
}

}  // namespace ddlab::app
