#include <gtest/gtest.h>

#include <cmath>
#include <numbers>
#include <random>

#include "ddlab/charts.hpp"
#include "ddlab/dynamics.hpp"
#include "ddlab/errors.hpp"
#include "ddlab/hamiltonian.hpp"
#include "test_util.hpp"

using namespace ddlab;

namespace {

const double s2 = std::sqrt(0.5);

DoubledState round_trip(const DoubledState& s, Chart c, const OscillatorParams& p) {
    return from_chart(chart_convert({Chart::X12, as_array(s)}, c, p), p);
}

}  // namespace

TEST(charts, names_round_trip) {
    for (Chart c : {Chart::XY, Chart::X12, Chart::XPM, Chart::HYPERBOLIC, Chart::ACTION}) {
        EXPECT_EQ(parse_chart(chart_name(c)), c);
    }
    EXPECT_FALSE(parse_chart("polar").has_value());
}

TEST(charts, x12_to_xy_is_a_rotation) {
    const OscillatorParams p = make_params(1.0, 0.0, 1.0);
    const ChartPoint xy = chart_convert({Chart::X12, {1.0, 0.0, 0.0, 0.0}}, Chart::XY, p);
    EXPECT_NEAR(xy.coords[0], s2, 1e-15);
    EXPECT_NEAR(xy.coords[1], s2, 1e-15);
    EXPECT_EQ(xy.coords[2], 0.0);
    EXPECT_EQ(xy.coords[3], 0.0);
    // momenta follow the same rotation
    const ChartPoint m = chart_convert({Chart::X12, {0.0, 0.0, 1.0, 1.0}}, Chart::XY, p);
    EXPECT_NEAR(m.coords[2], 2.0 * s2, 1e-15);
    EXPECT_NEAR(m.coords[3], 0.0, 1e-15);
}

TEST(charts, xpm_is_a_relabeling) {
    const OscillatorParams p = make_params(1.0, 0.2, 1.0);
    const ChartPoint pm = chart_convert({Chart::X12, {1.0, 2.0, 3.0, 4.0}}, Chart::XPM, p);
    EXPECT_EQ(pm.coords, (std::array<double, 4>{1.0, 2.0, 3.0, 4.0}));
}

TEST(charts, hyperbolic_round_trip) {
    const OscillatorParams p = make_params(1.0, 0.2, 1.0);
    const DoubledState s{2.0, 1.0, 0.3, -0.1};
    EXPECT_LT(test::max_abs_diff(round_trip(s, Chart::HYPERBOLIC, p), s), 1e-12);
    const ChartPoint h = to_chart(s, Chart::HYPERBOLIC, p);
    EXPECT_NEAR(h.coords[0], std::sqrt(3.0), 1e-15);
    EXPECT_NEAR(h.coords[1], std::atanh(0.5), 1e-15);
    // p_u is twice J2
    EXPECT_NEAR(h.coords[3], 2.0 * invariant_j2(s), 1e-14);
}

TEST(charts, hyperbolic_rejects_other_branches) {
    const OscillatorParams p = make_params(1.0, 0.2, 1.0);
    EXPECT_THROW(to_chart({1.0, 2.0, 0.0, 0.0}, Chart::HYPERBOLIC, p), DomainError);
    EXPECT_THROW(to_chart({-2.0, 1.0, 0.0, 0.0}, Chart::HYPERBOLIC, p), DomainError);
    EXPECT_THROW(from_chart({Chart::HYPERBOLIC, {0.0, 0.1, 0.0, 0.0}}, p), DomainError);
}

TEST(charts, all_round_trips_on_random_states) {
    std::mt19937_64 rng(21);
    const OscillatorParams p = make_params(1.2, 0.4, 0.8);
    int action_tested = 0;
    for (int i = 0; i < 2000; ++i) {
        DoubledState s = test::random_state(rng, -3.0, 3.0);
        s.x1 = std::abs(s.x1) + std::abs(s.x2) + 0.05;  // inside the hyperbolic patch
        for (Chart c : {Chart::XY, Chart::X12, Chart::XPM, Chart::HYPERBOLIC}) {
            EXPECT_LT(test::max_abs_diff(round_trip(s, c, p), s), 1e-12 * std::max(1.0, std::abs(s.x1)));
        }
        if (invariant_c(s, p) > 1e-3) {
            const DoubledState back = round_trip(s, Chart::ACTION, p);
            EXPECT_LT(test::max_abs_diff(back, s), 1e-9) << i;
            ++action_tested;
        }
    }
    EXPECT_GT(action_tested, 200);
}

TEST(charts, action_requires_positive_c_and_patch) {
    const OscillatorParams p = make_params(1.0, 0.2, 1.0);
    // C < 0: momentum dominated by p2
    EXPECT_THROW(to_chart({0.1, 0.0, 0.0, 2.0}, Chart::ACTION, p), DomainError);
    // x1^2 < x2^2
    EXPECT_THROW(to_chart({0.1, 1.0, 3.0, 0.0}, Chart::ACTION, p), DomainError);
    EXPECT_THROW(from_chart({Chart::ACTION, {0.0, 0.0, -1.0, 0.0}}, p), DomainError);
}

TEST(charts, action_momenta_are_the_beables) {
    const OscillatorParams p = make_params(1.0, 0.3, 1.0);
    const DoubledState s{1.5, 0.2, 0.4, -0.1};
    const ChartPoint a = to_chart(s, Chart::ACTION, p);
    EXPECT_NEAR(a.coords[2], invariant_c(s, p), 1e-14);
    EXPECT_NEAR(a.coords[3], invariant_j2(s), 1e-14);
}

TEST(charts, action_chart_is_canonical) {
    std::mt19937_64 rng(22);
    const OscillatorParams p = make_params(1.0, 0.2, 1.0);
    auto coord = [&p](std::size_t i) {
        return [&p, i](const DoubledState& s) { return to_chart(s, Chart::ACTION, p).coords[i]; };
    };
    int tested = 0;
    while (tested < 10) {
        const DoubledState s = test::random_state(rng, -2.0, 2.0);
        if (invariant_c(s, p) < 0.05 || s.x1 * s.x1 - s.x2 * s.x2 < 0.05) continue;
        const double q1 = to_chart(s, Chart::ACTION, p).coords[0];
        if (std::abs(std::abs(q1) - std::numbers::pi) < 0.05) continue;
        for (std::size_t i = 0; i < 4; ++i) {
            for (std::size_t j = i + 1; j < 4; ++j) {
                const double want = (j == i + 2) ? 1.0 : 0.0;
                EXPECT_NEAR(dynamics::poisson_bracket(coord(i), coord(j), s), want, 1e-5)
                    << "bracket (" << i << "," << j << ")";
            }
        }
        ++tested;
    }
}

TEST(charts, action_angles_advance_linearly) {
    const OscillatorParams p = make_params(1.0, 0.2, 1.0);
    const DoubledState s0{1.5, 0.3, 0.2, -0.1};
    const ChartPoint a0 = to_chart(s0, Chart::ACTION, p);
    const double t = 0.3;
    const ChartPoint a1 = to_chart(dynamics::exact_solution(s0, p, t), Chart::ACTION, p);
    EXPECT_NEAR(a1.coords[0] - a0.coords[0], 2.0 * p.omega() * t, 1e-9);
    EXPECT_NEAR(a1.coords[1] - a0.coords[1], -2.0 * p.damping_rate() * t, 1e-9);
}
