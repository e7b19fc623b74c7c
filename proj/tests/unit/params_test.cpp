#include <gtest/gtest.h>

#include <cmath>
#include <numbers>

#include "ddlab/errors.hpp"
#include "ddlab/params.hpp"

using namespace ddlab;

TEST(params, defaults_are_valid) {
    EXPECT_NO_THROW(OscillatorParams{}.validate());
}

TEST(params, each_invalid_field_is_named) {
    auto message = [](OscillatorParams p) {
        try {
            p.validate();
        } catch (const ParamError& e) {
            return std::string(e.what());
        }
        return std::string("no error");
    };
    EXPECT_EQ(message({0.0, 0.0, 1.0, 1.0, 1.0}), "m must be > 0");
    EXPECT_EQ(message({1.0, -1.0, 1.0, 1.0, 1.0}), "gamma must be ≥ 0");
    EXPECT_EQ(message({1.0, 0.0, 0.0, 1.0, 1.0}), "k must be > 0");
    EXPECT_EQ(message({1.0, 0.0, 1.0, -2.0, 1.0}), "hbar must be > 0");
    EXPECT_EQ(message({1.0, 0.0, 1.0, 1.0, 0.0}), "kB must be > 0");
    EXPECT_EQ(message({NAN, 0.0, 1.0, 1.0, 1.0}), "m must be > 0");
}

TEST(params, make_params_validates) {
    EXPECT_THROW(make_params(1.0, -0.1, 1.0), ParamError);
    EXPECT_EQ(make_params(2.0, 0.3, 1.5).m, 2.0);
}

TEST(params, omega_and_period) {
    const OscillatorParams p = make_params(1.0, 0.2, 1.0);
    EXPECT_DOUBLE_EQ(p.damping_rate(), 0.1);
    EXPECT_DOUBLE_EQ(p.omega(), std::sqrt(1.0 - 0.01));
    EXPECT_DOUBLE_EQ(p.period(), 2.0 * std::numbers::pi / std::sqrt(0.99));
}

TEST(params, overdamped_has_no_omega) {
    const OscillatorParams p = make_params(1.0, 3.0, 1.0);
    EXPECT_FALSE(p.underdamped());
    EXPECT_THROW(p.omega(), DomainError);
    EXPECT_THROW(p.period(), DomainError);
    // critical damping is excluded too
    EXPECT_THROW(make_params(1.0, 2.0, 1.0).omega(), DomainError);
}
