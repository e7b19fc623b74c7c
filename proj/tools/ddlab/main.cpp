#include <chrono>
#include <cstdlib>
#include <iostream>

#include <CLI11.hpp>

#include "config.hpp"
#include "ddlab/errors.hpp"
#include "run.hpp"

namespace app = ddlab::app;

int main(int argc, char** argv) {
    CLI::App cli{"ddlab: doubled dissipative oscillator lab"};
    cli.set_version_flag("--version", std::string(app::tool_version));

    std::string command;
    std::string config_file;
    std::string out_dir;
    std::uint64_t seed = 0;
    std::size_t threads = 0;
    cli.add_option("command", command, "simulate | beables | spectrum | wigner | brownian | phase | check")
        ->required();
    cli.add_option("--config", config_file, "experiment config file (optional for check)");
    auto* out_opt = cli.add_option("--out", out_dir, "output directory (default: config output_dir, $DDLAB_OUT, .)");
    auto* seed_opt = cli.add_option("--seed", seed, "RNG seed (overrides the config)");
    auto* threads_opt = cli.add_option("--threads", threads, "worker threads (overrides the config)")
                            ->check(CLI::PositiveNumber);

    try {
        cli.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int rc = cli.exit(e);
        return rc == 0 ? 0 : app::exit_config;
    }

    const auto start = std::chrono::steady_clock::now();
    try {
        const auto experiment = app::parse_experiment(command);
        if (!experiment) throw app::ParseError(0, "unknown command '" + command + "'");

        app::ExperimentConfig cfg;
        if (!config_file.empty()) {
            cfg = app::load_config(config_file);
            if (cfg.experiment != *experiment) {
                throw app::ParseError(0, "command '" + command + "' does not match experiment '" +
                                             std::string(app::experiment_name(cfg.experiment)) + "' in " +
                                             config_file);
            }
        } else if (*experiment == app::Experiment::check) {
            cfg.experiment = app::Experiment::check;
        } else {
            throw app::ParseError(0, "--config is required for '" + command + "'");
        }
        if (*seed_opt) cfg.seed = seed;
        if (*threads_opt) cfg.threads = threads;

        std::filesystem::path out = ".";
        if (*out_opt) {
            out = out_dir;
        } else if (!cfg.output_dir.empty()) {
            out = cfg.output_dir;
        } else if (const char* env = std::getenv("DDLAB_OUT"); env && *env) {
            out = env;
        }

        const int rc = app::run(cfg, out, std::cerr);
        const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        std::cerr << "ddlab " << command << ": " << (rc == 0 ? "ok" : "invariant failure") << " in " << secs
                  << " s, outputs in " << out.string() << '\n';
        return rc;
    } catch (const app::ParseError& e) {
        std::cerr << "ddlab: config error: " << e.what() << '\n';
        return app::exit_config;
    } catch (const ddlab::ParamError& e) {
        std::cerr << "ddlab: config error: " << e.what() << '\n';
        return app::exit_config;
    } catch (const ddlab::StepError& e) {
        std::cerr << "ddlab: StepError: " << e.what() << '\n';
        return app::exit_numeric;
    } catch (const ddlab::Error& e) {
        std::cerr << "ddlab: numeric error: " << e.what() << '\n';
        return app::exit_numeric;
    } catch (const std::exception& e) {
        std::cerr << "ddlab: " << e.what() << '\n';
        return app::exit_numeric;
    }
}
