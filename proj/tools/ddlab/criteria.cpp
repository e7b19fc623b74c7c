#include "criteria.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <numbers>
#include <random>
#include <sstream>
#include <stdexcept>

#include "ddlab/beables.hpp"
#include "ddlab/charts.hpp"
#include "ddlab/dynamics.hpp"
#include "ddlab/hamiltonian.hpp"
#include "ddlab/interference.hpp"
#include "ddlab/quantum.hpp"
#include "ddlab/stochastic.hpp"

namespace ddlab::app {

namespace {

constexpr double pi = std::numbers::pi;

std::string sci(double v) {
    std::ostringstream os;
    os.precision(3);
    os << std::scientific << v;
    return os.str();
}

// Least-squares slope of y against x.
double ls_slope(const std::vector<double>& x, const std::vector<double>& y) {
    const double n = static_cast<double>(x.size());
    double sx = 0.0, sy = 0.0;
    for (std::size_t i = 0; i < x.size(); ++i) {
        sx += x[i];
        sy += y[i];
    }
    const double mx = sx / n, my = sy / n;
    double sxy = 0.0, sxx = 0.0;
    for (std::size_t i = 0; i < x.size(); ++i) {
        sxy += (x[i] - mx) * (y[i] - my);
        sxx += (x[i] - mx) * (x[i] - mx);
    }
    return sxy / sxx;
}

double rel(double a, double b) { return std::abs(a - b) / std::abs(b); }

CriterionResult named(int id, std::string name) {
    CriterionResult r;
    r.id = id;
    r.name = std::move(name);
    return r;
}

// ------------------------------------------------------------ 1: gauge form

CriterionResult gauge_equivalence(const CriteriaOptions& o) {
    CriterionResult r = named(1, "gauge equivalence");
    r.budget_seconds = 1.0;
    std::mt19937_64 rng(o.seed);
    std::uniform_real_distribution<double> coord(-10.0, 10.0);
    std::uniform_real_distribution<double> mass(0.5, 2.0), damp(0.0, 2.0), spring(0.5, 3.0);
    double worst = 0.0;
    for (int set = 0; set < 100; ++set) {
        const OscillatorParams p = make_params(mass(rng), damp(rng), spring(rng));
        for (int i = 0; i < 10000; ++i) {
            const DoubledState s{coord(rng), coord(rng), coord(rng), coord(rng)};
            const double h = hamiltonian(s, p);
            const double err = std::abs(gauge_hamiltonian(s, p) - h) / std::max(1.0, std::abs(h));
            worst = std::max(worst, err);
        }
    }
    r.metrics["max_relative_error"] = worst;
    r.metrics["tolerance"] = 1e-12;
    r.passed = worst < 1e-12;
    r.detail = "max |H_gauge - H|/max(1,|H|) = " + sci(worst) + " over 1e2 x 1e4 states";
    return r;
}

// ------------------------------------------------------------ 2: conservation

CriterionResult conservation(const CriteriaOptions&) {
    CriterionResult r = named(2, "closed-system conservation");
    r.budget_seconds = 10.0;
    const DoubledState s0{1.0, 0.4, 0.3, -0.6};
    bool ok = true;
    Json runs = Json::array();
    double worst_h = 0.0, worst_cj = 0.0, worst_exact = 0.0;
    for (double g : {0.0, 0.1, 0.2, 0.4}) {
        const OscillatorParams p = make_params(1.0, g, 1.0);
        const double tau = p.period();
        const dynamics::Trajectory tr =
            dynamics::simulate(s0, p, {dynamics::Method::RK4, tau / 1000.0, 100.0 * tau});
        const SectorState q0 = to_sector(s0);
        const double h0 = hamiltonian(q0, p), c0 = invariant_c(q0, p), j0 = invariant_j2(q0);
        double dh = 0.0, dc = 0.0, dj = 0.0, eh = 0.0, ec = 0.0, ej = 0.0;
        for (std::size_t i = 0; i < tr.size(); ++i) {
            const SectorState& s = tr.sector_states[i];
            dh = std::max(dh, rel(hamiltonian(s, p), h0));
            dc = std::max(dc, rel(invariant_c(s, p), c0));
            dj = std::max(dj, rel(invariant_j2(s), j0));
            const SectorState e = dynamics::exact_solution(q0, p, tr.times[i]);
            eh = std::max(eh, rel(hamiltonian(e, p), h0));
            ec = std::max(ec, rel(invariant_c(e, p), c0));
            ej = std::max(ej, rel(invariant_j2(e), j0));
        }
        const double exact = std::max({eh, ec, ej});
        ok = ok && dh < 1e-8 && dc < 1e-5 && dj < 1e-5 && exact < 1e-10;
        worst_h = std::max(worst_h, dh);
        worst_cj = std::max({worst_cj, dc, dj});
        worst_exact = std::max(worst_exact, exact);
        runs.push_back(Json{{"gamma_over_m", g}, {"rk4_h_drift", dh}, {"rk4_c_drift", dc},
                            {"rk4_j2_drift", dj}, {"exact_drift", exact}, {"steps", tr.size() - 1}});
    }
    r.metrics["runs"] = runs;
    r.passed = ok;
    r.detail = "RK4 H drift " + sci(worst_h) + " (<1e-8), C/J2 drift " + sci(worst_cj) +
               " (<1e-5), exact-flow drift " + sci(worst_exact) + " (<1e-10)";
    return r;
}

// ------------------------------------------------------------ 3: action chart

CriterionResult thooft_form(const CriteriaOptions& o) {
    CriterionResult r = named(3, "'t hooft form");
    const OscillatorParams p = make_params(1.0, 0.2, 1.0);
    const double Omega = p.omega(), Gamma = p.damping_rate();
    const DoubledState s0{1.2, 0.0, 0.4, 0.0};
    const double z0 = 2.0 * invariant_c(s0, p) / (p.m * Omega);

    std::vector<double> ts, q1s, q2s;
    const int samples = 400;
    for (int i = 0; i <= samples; ++i) {
        const double t = p.period() * i / samples;
        const DoubledState s = dynamics::exact_solution(s0, p, t);
        if (s.x1 * s.x1 - s.x2 * s.x2 < 1e-2 * z0) continue;
        const ChartPoint a = to_chart(s, Chart::ACTION, p);
        double q1 = a.coords[0];
        if (!q1s.empty()) q1 += 2.0 * pi * std::round((q1s.back() - q1) / (2.0 * pi));
        ts.push_back(t);
        q1s.push_back(q1);
        q2s.push_back(a.coords[1]);
    }
    const double slope1 = ls_slope(ts, q1s);
    const double slope2 = ls_slope(ts, q2s);
    const double e1 = rel(slope1, 2.0 * Omega);
    const double e2 = rel(slope2, -2.0 * Gamma);

    // finite-difference brackets at random in-patch states
    std::mt19937_64 rng(o.seed + 3);
    std::uniform_real_distribution<double> coord(-2.0, 2.0);
    auto action = [&p](int i) {
        return [&p, i](const DoubledState& s) { return to_chart(s, Chart::ACTION, p).coords[static_cast<std::size_t>(i)]; };
    };
    double bracket_err = 0.0;
    int tested = 0;
    while (tested < 20) {
        const DoubledState s{coord(rng), coord(rng), coord(rng), coord(rng)};
        const double c = invariant_c(s, p);
        const double z = s.x1 * s.x1 - s.x2 * s.x2;
        if (c <= 0.05 || z <= 0.05) continue;
        const double q1 = to_chart(s, Chart::ACTION, p).coords[0];
        if (q1 < -pi + 0.05 || q1 > pi - 0.05) continue;  // stay off the angle cut
        for (int i = 0; i < 4; ++i) {
            for (int j = i + 1; j < 4; ++j) {
                // coordinates 0,1 are q1,q2; 2,3 are C,J2
                const double expected = (j == i + 2) ? 1.0 : 0.0;
                const double b = dynamics::poisson_bracket(action(i), action(j), s);
                bracket_err = std::max(bracket_err, std::abs(b - expected));
            }
        }
        ++tested;
    }
    r.metrics["q1_slope"] = slope1;
    r.metrics["q1_expected"] = 2.0 * Omega;
    r.metrics["q2_slope"] = slope2;
    r.metrics["q2_expected"] = -2.0 * Gamma;
    r.metrics["samples_used"] = ts.size();
    r.metrics["max_bracket_error"] = bracket_err;
    r.passed = e1 < 1e-4 && e2 < 1e-4 && bracket_err < 1e-5;
    r.detail = "slope errors q1 " + sci(e1) + ", q2 " + sci(e2) + " (<1e-4); bracket error " +
               sci(bracket_err) + " (<1e-5)";
    return r;
}

// ------------------------------------------------------------ 4: split and ledger

CriterionResult split_identities(const CriteriaOptions& o) {
    CriterionResult r = named(4, "split hamiltonian and free energy");
    std::mt19937_64 rng(o.seed + 4);
    std::uniform_real_distribution<double> coord(-10.0, 10.0), unit(0.0, 1.0);
    double split_err = 0.0, free_err = 0.0;
    bool t_exact = true;
    int accepted = 0;
    while (accepted < 10000) {
        const double m = 0.5 + 1.5 * unit(rng), k = 0.5 + 1.5 * unit(rng);
        const double g = 0.9 * 2.0 * std::sqrt(m * k) * unit(rng);
        const OscillatorParams p = make_params(m, g, k, 0.5 + unit(rng));
        const DoubledState s{coord(rng), coord(rng), coord(rng), coord(rng)};
        if (invariant_c(s, p) <= 0.0) continue;
        ++accepted;
        const beables::BeableValues b = beables::compute_beables(s, p);
        const double h = hamiltonian(s, p);
        const beables::SplitHamiltonian sp = beables::split_hamiltonian(b, p);
        // roundoff scale of an identity is its largest operand
        split_err = std::max(split_err, std::abs(h - (sp.h_one - sp.h_two)) /
                                            std::max({1.0, std::abs(h), sp.h_one, sp.h_two}));
        const beables::Thermodynamics th = beables::thermodynamics(b, p);
        const double u = 2.0 * b.Omega * b.C;
        const double ts = 2.0 * b.Gamma * b.J2;
        const double scale = std::max({1.0, std::abs(u), std::abs(ts)});
        free_err = std::max({free_err, std::abs(th.F - (u - ts)) / scale, std::abs(th.F - h) / scale});
        t_exact = t_exact && th.T == p.hbar * (p.gamma / (2.0 * p.m));
    }
    r.metrics["split_error"] = split_err;
    r.metrics["free_energy_error"] = free_err;
    r.metrics["temperature_exact"] = t_exact;
    r.passed = split_err < 1e-12 && free_err < 1e-12 && t_exact;
    r.detail = "H vs H_I - H_II " + sci(split_err) + ", F vs 2 Omega C - 2 Gamma J2 " + sci(free_err) +
               " (<1e-12); T = hbar Gamma " + (t_exact ? "exact" : "NOT exact");
    return r;
}

// ------------------------------------------------------------ 5: spectrum

CriterionResult spectrum(const CriteriaOptions&) {
    CriterionResult r = named(5, "radial spectrum");
    r.budget_seconds = 30.0;
    const OscillatorParams p = make_params(1.0, 0.4, 1.0);
    const double hw = p.hbar * p.omega();
    const std::vector<double> levels = quantum::radial_spectrum(p, 5, {4000, 0.0});
    double radial_err = 0.0, geo_err = 0.0;
    Json rows = Json::array();
    for (std::size_t j = 0; j < 5; ++j) {
        const double ladder = hw * (2.0 * static_cast<double>(j) + 1.0);
        const double geo = quantum::geometric_spectrum(2 * j, 2.0, p);
        radial_err = std::max(radial_err, rel(levels[j], ladder));
        geo_err = std::max(geo_err, rel(geo, ladder));
        rows.push_back(Json{{"j", j}, {"radial", levels[j]}, {"ladder", ladder}, {"geometric_alpha2", geo}});
    }
    r.metrics["levels"] = rows;
    r.metrics["max_radial_error"] = radial_err;
    r.metrics["max_geometric_error"] = geo_err;
    r.passed = radial_err < 1e-3 && levels[0] > 0.0 && geo_err < 1e-12;
    r.detail = "radial vs hbar Omega (2j+1): " + sci(radial_err) + " (<1e-3); E0 = " + sci(levels[0]) +
               " > 0; alpha=2 geometric ladder " + sci(geo_err);
    return r;
}

// ------------------------------------------------------------ 6: Bohr frequencies

CriterionResult bohr(const CriteriaOptions&) {
    CriterionResult r = named(6, "bohr frequencies");
    const OscillatorParams p = make_params(1.0, 0.4, 1.0);
    const std::vector<std::size_t> lv{0, 1, 2, 3, 4, 5};
    const quantum::DensityMatrix rho = quantum::superposition(lv);
    const auto peaks = quantum::bohr_peaks(rho, p, 6, 64);
    std::size_t inside = 0;
    double worst = 0.0;
    for (const auto& pk : peaks) {
        if (pk.within_bin()) ++inside;
        worst = std::max(worst, std::abs(pk.measured - pk.expected) / pk.bin_width);
    }
    r.metrics["peaks"] = peaks.size();
    r.metrics["within_one_bin"] = inside;
    r.metrics["worst_offset_in_bins"] = worst;
    r.passed = inside == peaks.size();
    r.detail = std::to_string(inside) + "/" + std::to_string(peaks.size()) +
               " peaks within one bin (worst offset " + sci(worst) + " bins)";
    return r;
}

// ------------------------------------------------------------ 7: Wigner

CriterionResult wigner(const CriteriaOptions&) {
    CriterionResult r = named(7, "wigner function");
    const OscillatorParams p = make_params(1.0, 0.0, 1.0);
    const quantum::WignerAxes axes{};
    const quantum::WignerGrid w0 = quantum::wigner_transform(quantum::basis_state(0), p, axes);
    const quantum::WignerGrid w1 = quantum::wigner_transform(quantum::basis_state(1), p, axes);
    const double imag = std::max(w0.max_imag, w1.max_imag);
    const double norm = std::max(std::abs(w0.normalization() - 1.0), std::abs(w1.normalization() - 1.0));
    const double min0 = w0.values.minCoeff();
    const Eigen::Index cx = static_cast<Eigen::Index>(axes.nx / 2), cp = static_cast<Eigen::Index>(axes.np / 2);
    const double origin1 = w1.values(cp, cx);
    // tail values sit at the roundoff floor of the quadrature
    const double floor = 1e-12;
    r.metrics["max_imag"] = imag;
    r.metrics["normalization_error"] = norm;
    r.metrics["ground_min"] = min0;
    r.metrics["excited_origin"] = origin1;
    r.passed = imag < 1e-10 && norm < 1e-6 && min0 > -floor && origin1 < 0.0;
    r.detail = "Im residual " + sci(imag) + ", normalization " + sci(norm) + ", ground min " + sci(min0) +
               ", W1(0,0) = " + sci(origin1);
    return r;
}

// ------------------------------------------------------------ 8: fluctuation-dissipation

CriterionResult fluctuation_dissipation(const CriteriaOptions& o) {
    CriterionResult r = named(8, "fluctuation dissipation");
    r.budget_seconds = 60.0;
    stochastic::LangevinSpec spec;
    spec.params = make_params(1.0, 1.0, 1.0);
    spec.temperature = 1.0;
    spec.dt = 0.01;
    spec.n_steps = 3000;
    spec.n_paths = 10000;
    spec.seed = o.seed;
    spec.max_lag = 4;
    spec.threads = o.threads;
    const stochastic::LangevinResult res = stochastic::langevin_ensemble(spec);

    const double kt = spec.temperature;
    const double x2 = res.mean_x2.back(), se_x = res.se_x2.back();
    const double v2 = res.mean_v2.back(), se_v = res.se_v2.back();
    const double x_target = kt / spec.params.k, v_target = kt / spec.params.m;
    bool ok = std::abs(x2 - x_target) <= 3.0 * se_x && rel(x2, x_target) < 0.05 &&
              std::abs(v2 - v_target) <= 3.0 * se_v;
    Json lags = Json::array();
    double worst_z = 0.0;
    for (std::size_t l = 0; l < res.noise_autocov.size(); ++l) {
        const double target = l == 0 ? res.noise_variance : 0.0;
        const auto& est = res.noise_autocov[l];
        const double zscore = std::abs(est.mean - target) / est.se;
        worst_z = std::max(worst_z, zscore);
        ok = ok && zscore <= 3.0;
        lags.push_back(Json{{"lag", l}, {"mean", est.mean}, {"se", est.se}, {"expected", target}});
    }
    r.metrics["mean_x2"] = x2;
    r.metrics["se_x2"] = se_x;
    r.metrics["mean_v2"] = v2;
    r.metrics["se_v2"] = se_v;
    r.metrics["noise_autocov"] = lags;
    r.passed = ok;
    r.detail = "<x^2> = " + sci(x2) + " +- " + sci(se_x) + " (target 1), <v^2> = " + sci(v2) + " +- " +
               sci(se_v) + ", worst noise z-score " + sci(worst_z);
    return r;
}

// ------------------------------------------------------------ 9: dissipative phase

interference::PathPair circle_pair(std::size_t half) {
    interference::PathPair pair;
    for (std::size_t i = 0; i <= half; ++i) {
        const double a = pi * static_cast<double>(i) / static_cast<double>(half);
        pair.forward.points.push_back({std::cos(a), std::sin(a)});
        pair.backward.points.push_back({std::cos(a), -std::sin(a)});
    }
    // exact shared endpoints
    pair.forward.points.back() = pair.backward.points.back() = {-1.0, 0.0};
    return pair;
}

CriterionResult dissipative_phase(const CriteriaOptions&) {
    CriterionResult r = named(9, "dissipative phase");
    const interference::PathPair circle = circle_pair(5000);
    const double area = interference::enclosed_area(circle);
    double phase_err = 0.0, stokes = 0.0;
    for (double g : {0.5, 1.0, 2.0}) {
        for (double hb : {1.0, 0.5}) {
            const OscillatorParams p = make_params(1.0, g, 1.0, hb);
            phase_err = std::max(phase_err, rel(interference::interference_phase(area, p), pi * g / hb));
            stokes = std::max(stokes,
                              interference::stokes_check(circle, interference::dissipation_length_sq(p)).discrepancy);
        }
    }

    std::vector<double> lg, lphase, larea;
    Json sweep = Json::array();
    for (double g : {0.05, 0.1, 0.2}) {
        const OscillatorParams p = make_params(1.0, g, 1.0);
        const double tau = p.period();
        const auto tr = dynamics::simulate({1.0, 0.0, 0.0, 0.0}, p, {dynamics::Method::RK4, tau / 1000.0, tau});
        const double a = interference::enclosed_area(interference::loop_from_trajectory(tr));
        const double th = interference::interference_phase(a, p);
        lg.push_back(std::log(g));
        larea.push_back(std::log(std::abs(a)));
        lphase.push_back(std::log(std::abs(th)));
        sweep.push_back(Json{{"gamma", g}, {"area", a}, {"phase", th}});
    }
    const double exponent = ls_slope(lg, lphase);
    r.metrics["circle_area"] = area;
    r.metrics["max_phase_error"] = phase_err;
    r.metrics["max_stokes_discrepancy"] = stokes;
    r.metrics["sweep"] = sweep;
    r.metrics["phase_exponent"] = exponent;
    const double area_exponent = ls_slope(lg, larea);
    r.metrics["area_exponent"] = area_exponent;
    r.passed = phase_err < 1e-6 && stokes < 1e-6 && std::abs(exponent - 1.0) <= 0.1;
    r.detail = "circle phase error " + sci(phase_err) + " (<1e-6), stokes " + sci(stokes) +
               " (<1e-6), gamma-sweep phase exponent " + sci(exponent) + " (target 1.0 +- 0.1; loop area exponent " +
               sci(area_exponent) + ")";
    return r;
}

// ------------------------------------------------------------ 10: imaginary action

CriterionResult imaginary_action(const CriteriaOptions& o) {
    CriterionResult r = named(10, "imaginary action");
    using stochastic::NoiseKernel;
    std::vector<double> ones(1001, 1.0);
    const double closed = stochastic::imaginary_action(ones, 1e-3, NoiseKernel::delta(2.0), 1.0);
    const double closed_err = std::abs(closed - 1.0);

    // autocorrelation of a bump: positive semidefinite by construction
    const double dt = 0.01;
    const int K = 20;
    std::vector<double> g(2 * K + 1);
    for (int i = -K; i <= K; ++i) g[static_cast<std::size_t>(i + K)] = std::exp(-0.5 * std::pow(i * dt / 0.05, 2));
    std::vector<double> table(4 * K + 1);
    for (int j = 0; j <= 2 * K; ++j) {
        double acc = 0.0;
        for (int i = 0; i + j < static_cast<int>(g.size()); ++i) acc += g[static_cast<std::size_t>(i)] * g[static_cast<std::size_t>(i + j)];
        table[static_cast<std::size_t>(2 * K + j)] = table[static_cast<std::size_t>(2 * K - j)] = acc;
    }
    const NoiseKernel sampled = NoiseKernel::sampled(table, dt);

    std::mt19937_64 rng(o.seed + 10);
    std::normal_distribution<double> normal;
    std::uniform_real_distribution<double> hbar_dist(0.1, 5.0);
    double min_value = 0.0;
    bool scaling = true;
    for (int path = 0; path < 100; ++path) {
        std::vector<double> y(201);
        for (double& v : y) v = normal(rng);
        const double hb = hbar_dist(rng);
        const double s1 = stochastic::imaginary_action(y, dt, sampled, hb);
        const double s2 = stochastic::imaginary_action(y, dt, sampled, 0.5 * hb);
        const double d1 = stochastic::imaginary_action(y, dt, NoiseKernel::delta(1.5), hb);
        const double d2 = stochastic::imaginary_action(y, dt, NoiseKernel::delta(1.5), 0.5 * hb);
        min_value = std::min(min_value, s1);
        scaling = scaling && s2 == 2.0 * s1 && d2 == 2.0 * d1;
    }
    const bool psd = sampled.is_positive_semidefinite(201);
    r.metrics["delta_closed_form_error"] = closed_err;
    r.metrics["min_sampled_value"] = min_value;
    r.metrics["kernel_psd"] = psd;
    r.metrics["exact_hbar_scaling"] = scaling;
    r.passed = closed_err < 1e-10 && min_value >= -1e-10 && scaling && psd;
    r.detail = "closed form error " + sci(closed_err) + " (<1e-10), min Im S " + sci(min_value) +
               ", 1/hbar scaling " + (scaling ? "exact" : "NOT exact");
    return r;
}

}  // namespace

CriterionResult run_criterion(int id, const CriteriaOptions& opts) {
    using Fn = CriterionResult (*)(const CriteriaOptions&);
    static constexpr Fn table[] = {gauge_equivalence, conservation,           thooft_form,
                                   split_identities,  spectrum,               bohr,
                                   wigner,            fluctuation_dissipation, dissipative_phase,
                                   imaginary_action};
    if (id < 1 || id > criteria_count) throw std::out_of_range("no criterion " + std::to_string(id));
    const auto start = std::chrono::steady_clock::now();
    CriterionResult r;
    try {
        r = table[id - 1](opts);
    } catch (const std::exception& e) {
        r = named(id, "criterion " + std::to_string(id));
        r.passed = false;
        r.detail = std::string("error: ") + e.what();
    }
    r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    return r;
}

std::vector<CriterionResult> run_all_criteria(const CriteriaOptions& opts) {
    std::vector<CriterionResult> out;
    for (int id = 1; id <= criteria_count; ++id) out.push_back(run_criterion(id, opts));
    return out;
}

Json criterion_json(const CriterionResult& r) {
    return Json{{"id", r.id}, {"name", r.name}, {"passed", r.passed}, {"detail", r.detail}, {"metrics", r.metrics}};
}

std::string summary_line(const CriterionResult& r) {
    std::ostringstream os;
    os << (r.ok() ? "[PASS] " : "[FAIL] ") << r.id << " " << r.name << ": " << r.detail;
    os.precision(3);
    os << std::fixed << " (" << r.seconds << " s";
    if (r.budget_seconds > 0.0) os << ", budget " << r.budget_seconds << " s";
    os << ")";
    return os.str();
}

}  // namespace ddlab::app
