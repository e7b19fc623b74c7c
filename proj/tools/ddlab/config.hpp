#pragma once

#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "ddlab/dynamics.hpp"
#include "ddlab/params.hpp"
#include "ddlab/phase_space.hpp"
#include "ddlab/quantum.hpp"

namespace ddlab::app {

enum class Experiment { simulate, beables, spectrum, wigner, brownian, phase, check };

std::string_view experiment_name(Experiment e) noexcept;
std::optional<Experiment> parse_experiment(std::string_view name) noexcept;

// Malformed config text. `line` is 1-based, 0 when the problem is not tied to
// a line (e.g. a missing key).
class ParseError : public std::runtime_error {
public:
    ParseError(std::size_t line, const std::string& what);
    std::size_t line() const noexcept { return line_; }

private:
    std::size_t line_;
};

struct SpectrumConfig {
    std::size_t n_levels{5};
    quantum::RadialGrid grid{};
    double alpha{2.0};

    friend bool operator==(const SpectrumConfig&, const SpectrumConfig&) = default;
};

struct WignerConfig {
    std::vector<std::size_t> levels{0};  // equal-weight superposition
    std::size_t dim{quantum::default_dim};
    double t{0.0};                       // evolve before transforming
    quantum::WignerAxes axes{};

    friend bool operator==(const WignerConfig&, const WignerConfig&) = default;
};

struct BrownianConfig {
    double temperature{1.0};
    double dt{0.01};
    std::size_t n_steps{3000};
    std::size_t n_paths{10000};
    double x0{0.0};
    double v0{0.0};
    std::size_t max_lag{4};
    std::size_t n_sample_paths{0};

    friend bool operator==(const BrownianConfig&, const BrownianConfig&) = default;
};

// Either a trajectory-derived loop (initial state + integrator) or two CSV
// path files.
struct PhaseConfig {
    std::string source{"trajectory"};  // "trajectory" | "files"
    std::string forward;
    std::string backward;

    friend bool operator==(const PhaseConfig&, const PhaseConfig&) = default;
};

struct ExperimentConfig {
    Experiment experiment{Experiment::check};
    OscillatorParams params{};
    DoubledState initial{1.0, 0.0, 0.0, 0.0};
    dynamics::IntegratorSpec integrator{};
    SpectrumConfig spectrum{};
    WignerConfig wigner{};
    BrownianConfig brownian{};
    PhaseConfig phase{};
    std::string output_dir;  // empty: --out, then DDLAB_OUT, then "."
    std::uint64_t seed{0};
    std::size_t threads{1};

    friend bool operator==(const ExperimentConfig&, const ExperimentConfig&) = default;
};

// Strict parser: `key = value`, `#` comments, `[section]` headers. Unknown or
// repeated keys and unparsable values are ParseErrors. Values are validated
// against the library's own preconditions (ddlab::ParamError propagates with
// the library's message).
ExperimentConfig parse_config(std::string_view text);

// Resolves relative path-file names against base_dir and checks that they exist.
void resolve_paths(ExperimentConfig& cfg, const std::filesystem::path& base_dir);

ExperimentConfig load_config(const std::filesystem::path& file);

// Canonical text form; parse_config(serialize_config(c)) == c.
std::string serialize_config(const ExperimentConfig& cfg);

// Checks every numeric field against module preconditions.
void validate(const ExperimentConfig& cfg);

}  // namespace ddlab::app
