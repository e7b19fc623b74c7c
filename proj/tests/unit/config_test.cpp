#include <gtest/gtest.h>

#include <filesystem>
#include <fstream>
#include <string>

#include "config.hpp"
#include "ddlab/errors.hpp"

using namespace ddlab;
using namespace ddlab::app;

namespace {

std::size_t parse_error_line(const std::string& text) {
    try {
        parse_config(text);
    } catch (const ParseError& e) {
        return e.line();
    }
    ADD_FAILURE() << "no ParseError for:\n" << text;
    return 0;
}

std::string param_error(const std::string& text) {
    try {
        parse_config(text);
    } catch (const ParamError& e) {
        return e.what();
    }
    ADD_FAILURE() << "no ParamError for:\n" << text;
    return {};
}

}  // namespace

TEST(config, minimal_check) {
    const ExperimentConfig c = parse_config("experiment = check\n");
    EXPECT_EQ(c.experiment, Experiment::check);
    EXPECT_EQ(c.seed, 0u);
    EXPECT_EQ(c.threads, 1u);
}

TEST(config, experiment_names) {
    for (Experiment e : {Experiment::simulate, Experiment::beables, Experiment::spectrum, Experiment::wigner,
                         Experiment::brownian, Experiment::phase, Experiment::check}) {
        EXPECT_EQ(parse_experiment(experiment_name(e)), e);
    }
    EXPECT_FALSE(parse_experiment("simulation"));
}

TEST(config, full_simulate) {
    const ExperimentConfig c = parse_config(R"(# comment
experiment = simulate
seed = 42
threads = 2

[params]
m = 2
gamma = 0.3   # trailing comment
k = 5
hbar = 0.5

[initial]
x1 = 1
x2 = -0.5
p1 = 0.25
p2 = 0

[integrator]
method = SPLITTING
dt = 0.001
t_end = 10
)");
    EXPECT_EQ(c.experiment, Experiment::simulate);
    EXPECT_EQ(c.seed, 42u);
    EXPECT_EQ(c.threads, 2u);
    EXPECT_EQ(c.params, make_params(2.0, 0.3, 5.0, 0.5));
    EXPECT_EQ(c.initial.x2, -0.5);
    EXPECT_EQ(c.integrator.method, dynamics::Method::SPLITTING);
    EXPECT_EQ(c.integrator.dt, 0.001);
}

TEST(config, missing_or_empty_experiment) {
    EXPECT_EQ(parse_error_line("[params]\nm = 1\n"), 0u);
    EXPECT_EQ(parse_error_line("experiment =\n"), 1u);
    EXPECT_EQ(parse_error_line("experiment = fly\n"), 1u);
}

TEST(config, unknown_duplicate_and_malformed_lines) {
    EXPECT_EQ(parse_error_line("experiment = simulate\n\n[params]\nm = 1\ngamm = 0.2\n"), 5u);
    EXPECT_EQ(parse_error_line("experiment = simulate\n[params]\nm = 1\nm = 2\n"), 4u);
    EXPECT_EQ(parse_error_line("experiment = simulate\n[nope]\n"), 2u);
    EXPECT_EQ(parse_error_line("experiment = simulate\n[params\n"), 2u);
    EXPECT_EQ(parse_error_line("experiment = simulate\njust text\n"), 2u);
    EXPECT_EQ(parse_error_line("experiment = simulate\n[params]\nm = one\n"), 3u);
    EXPECT_EQ(parse_error_line("experiment = simulate\nthreads = -1\n"), 2u);
    EXPECT_EQ(parse_error_line("experiment = simulate\n[integrator]\nmethod = euler\n"), 3u);
}

TEST(config, parse_error_message_carries_line) {
    try {
        parse_config("experiment = simulate\n[params]\ngamm = 1\n");
        FAIL();
    } catch (const ParseError& e) {
        EXPECT_NE(std::string(e.what()).find("line 3"), std::string::npos);
        EXPECT_NE(std::string(e.what()).find("params.gamm"), std::string::npos);
    }
}

TEST(config, library_preconditions) {
    EXPECT_EQ(param_error("experiment = simulate\n[params]\ngamma = -1\n"), "gamma must be ≥ 0");
    EXPECT_EQ(param_error("experiment = simulate\n[params]\nm = 0\n"), "m must be > 0");
    EXPECT_EQ(param_error("experiment = simulate\nthreads = 0\n"), "threads must be ≥ 1");
    EXPECT_FALSE(param_error("experiment = simulate\n[integrator]\ndt = 0\n").empty());
    EXPECT_FALSE(param_error("experiment = wigner\n[wigner]\nlevels = 0, 40\ndim = 32\n").empty());
    EXPECT_FALSE(param_error("experiment = phase\n[phase]\nsource = files\n").empty());
    EXPECT_FALSE(param_error("experiment = brownian\n[brownian]\nn_steps = 4\nmax_lag = 4\n").empty());
}

TEST(config, wigner_levels_list) {
    const ExperimentConfig c = parse_config("experiment = wigner\n[wigner]\nlevels = 0, 1, 3\n");
    EXPECT_EQ(c.wigner.levels, (std::vector<std::size_t>{0, 1, 3}));
}

TEST(config, serialize_round_trip) {
    ExperimentConfig c;
    c.experiment = Experiment::brownian;
    c.seed = 18446744073709551615ull;
    c.threads = 3;
    c.params = make_params(1.5, 0.1 + 0.2, 2.0 / 3.0);
    c.brownian.temperature = 0.7;
    c.brownian.n_paths = 128;
    c.brownian.n_sample_paths = 2;
    c.wigner.levels = {0, 2};
    c.output_dir = "out dir";
    const std::string text = serialize_config(c);
    const ExperimentConfig back = parse_config(text);
    EXPECT_EQ(back, c);
    EXPECT_EQ(serialize_config(back), text);
}

TEST(config, default_round_trip_for_every_experiment) {
    for (Experiment e : {Experiment::simulate, Experiment::beables, Experiment::spectrum, Experiment::wigner,
                         Experiment::brownian, Experiment::phase, Experiment::check}) {
        ExperimentConfig c;
        c.experiment = e;
        EXPECT_EQ(parse_config(serialize_config(c)), c) << experiment_name(e);
    }
}

TEST(config, load_and_resolve_paths) {
    const auto dir = std::filesystem::temp_directory_path() / "ddlab_config_test";
    std::filesystem::create_directories(dir);
    {
        std::ofstream(dir / "f.csv") << "X,Y\n0,0\n1,0\n1,1\n";
        std::ofstream(dir / "b.csv") << "X,Y\n0,0\n0,1\n1,1\n";
        std::ofstream(dir / "p.cfg") << "experiment = phase\n[params]\ngamma = 0.5\n[phase]\nsource = files\n"
                                        "forward = f.csv\nbackward = b.csv\n";
    }
    const ExperimentConfig c = load_config(dir / "p.cfg");
    EXPECT_EQ(std::filesystem::path(c.phase.forward), dir / "f.csv");
    EXPECT_EQ(std::filesystem::path(c.phase.backward), dir / "b.csv");

    std::ofstream(dir / "q.cfg") << "experiment = phase\n[phase]\nsource = files\nforward = nope.csv\nbackward = b.csv\n";
    EXPECT_THROW(load_config(dir / "q.cfg"), ParamError);
    EXPECT_THROW(load_config(dir / "missing.cfg"), ParseError);
    std::filesystem::remove_all(dir);
}
