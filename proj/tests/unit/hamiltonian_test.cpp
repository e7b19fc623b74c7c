#include <gtest/gtest.h>

#include <random>

#include "ddlab/dynamics.hpp"
#include "ddlab/errors.hpp"
#include "ddlab/hamiltonian.hpp"
#include "test_util.hpp"

using namespace ddlab;

namespace {

// Independent evaluation of H from its two sector energies, written out here.
double h_oracle(const DoubledState& s, const OscillatorParams& p) {
    const double a = s.p1 - 0.5 * p.gamma * s.x2;
    const double b = s.p2 + 0.5 * p.gamma * s.x1;
    return a * a / (2.0 * p.m) + 0.5 * p.k * s.x1 * s.x1 - b * b / (2.0 * p.m) - 0.5 * p.k * s.x2 * s.x2;
}

}  // namespace

TEST(hamiltonian, zero_state) {
    const OscillatorParams p = make_params(1.0, 0.2, 1.0);
    EXPECT_EQ(hamiltonian(DoubledState{}, p), 0.0);
    EXPECT_EQ(gauge_hamiltonian(DoubledState{}, p), 0.0);
}

TEST(hamiltonian, single_sector_potential) {
    EXPECT_DOUBLE_EQ(hamiltonian(DoubledState{1.0, 0.0, 0.0, 0.0}, make_params(1.0, 0.0, 1.0)), 0.5);
}

TEST(hamiltonian, unit_state_matches_closed_form) {
    const OscillatorParams p = make_params(1.0, 0.2, 1.0);
    const DoubledState s{1.0, 1.0, 1.0, 1.0};
    // (0.9^2 - 1.1^2)/2 + 0.5 - 0.5
    EXPECT_NEAR(hamiltonian(s, p), -0.2, 1e-15);
    EXPECT_NEAR(gauge_hamiltonian(s, p), -0.2, 1e-15);
}

TEST(hamiltonian, gauge_form_agrees_on_random_states) {
    std::mt19937_64 rng(11);
    const OscillatorParams p = make_params(1.0, 0.3, 2.0);
    for (int i = 0; i < 10000; ++i) {
        const DoubledState s = test::random_state(rng, -10.0, 10.0);
        const double h = hamiltonian(s, p);
        EXPECT_LT(std::abs(gauge_hamiltonian(s, p) - h), 1e-12 * std::max(1.0, std::abs(h)));
        ASSERT_NEAR(h, h_oracle(s, p), 1e-12 * std::max(1.0, std::abs(h)));
    }
}

TEST(hamiltonian, gauge_fields_vanish_without_damping) {
    const OscillatorParams p = make_params(1.0, 0.0, 1.0);
    const GaugeFields g = gauge_fields({1.0, 2.0, 3.0, 4.0}, p);
    EXPECT_EQ(g.A1, 0.0);
    EXPECT_EQ(g.A2, 0.0);
    EXPECT_DOUBLE_EQ(g.Phi1, 0.5);
    EXPECT_DOUBLE_EQ(g.Phi2, 2.0);
}

TEST(hamiltonian, sector_chart_form_agrees) {
    std::mt19937_64 rng(12);
    const OscillatorParams p = make_params(1.3, 0.7, 0.9);
    for (int i = 0; i < 1000; ++i) {
        const DoubledState s = test::random_state(rng, -3.0, 3.0);
        EXPECT_NEAR(hamiltonian(to_sector(s), p), hamiltonian(s, p), 1e-12);
        EXPECT_NEAR(invariant_c(to_sector(s), p), invariant_c(s, p), 1e-12);
        EXPECT_NEAR(invariant_j2(to_sector(s)), invariant_j2(s), 1e-12);
    }
}

TEST(hamiltonian, sector_round_trip) {
    const DoubledState s{0.3, -1.2, 2.5, 0.7};
    EXPECT_LT(test::max_abs_diff(to_doubled(to_sector(s)), s), 1e-15);
}

TEST(hamiltonian, pseudoeuclidean_sign_flip) {
    std::mt19937_64 rng(13);
    const OscillatorParams p = make_params(1.0, 0.4, 1.5);
    for (int i = 0; i < 1000; ++i) {
        const DoubledState s = test::random_state(rng, -5.0, 5.0);
        const DoubledState swapped{s.x2, s.x1, -s.p2, -s.p1};
        EXPECT_NEAR(hamiltonian(swapped, p), -hamiltonian(s, p), 1e-12);
    }
}

TEST(hamiltonian, sector_energies_exchange_while_difference_is_fixed) {
    const OscillatorParams p = make_params(1.0, 0.2, 1.0);
    const DoubledState s0{1.0, 0.2, 0.0, 0.3};
    const SectorEnergies e0 = sector_energies(s0, p);
    const SectorEnergies e1 = sector_energies(dynamics::exact_solution(s0, p, 5.0), p);
    EXPECT_GT(std::abs(e1.h1 - e0.h1), 1e-3);
    EXPECT_GT(std::abs(e1.h2 - e0.h2), 1e-3);
    EXPECT_NEAR(e1.h1 - e1.h2, e0.h1 - e0.h2, 1e-12);
}

TEST(hamiltonian, velocities_pm_examples) {
    const OscillatorParams p0 = make_params(2.0, 0.0, 1.0);
    const auto [vp, vm] = velocities_pm({Chart::XPM, {0.0, 0.0, 1.0, 0.0}}, p0);
    EXPECT_DOUBLE_EQ(vp, 0.5);
    EXPECT_DOUBLE_EQ(vm, 0.0);
    const auto [zp, zm] = velocities_pm({Chart::XPM, {0.0, 0.0, 0.0, 0.0}}, make_params(1.0, 0.4, 1.0));
    EXPECT_EQ(zp, 0.0);
    EXPECT_EQ(zm, 0.0);
    EXPECT_THROW(velocities_pm({Chart::X12, {}}, p0), DomainError);
}

TEST(hamiltonian, velocities_pm_match_hamilton_equations) {
    const OscillatorParams p = make_params(1.5, 0.4, 1.0);
    const DoubledState s{0.4, -0.3, 1.1, 0.2};
    const DoubledState d = time_derivative(s, p);
    const auto [vp, vm] = velocities_pm(to_chart(s, Chart::XPM, p), p);
    EXPECT_NEAR(vp, d.x1, 1e-15);
    EXPECT_NEAR(vm, d.x2, 1e-15);
}

TEST(hamiltonian, velocity_bracket_is_gamma_over_m_squared) {
    std::mt19937_64 rng(14);
    for (double m : {1.0, 2.0}) {
        const OscillatorParams p = make_params(m, 0.4, 1.0);
        auto v = [&p](int i) {
            return [&p, i](const DoubledState& s) {
                const auto pv = velocities_pm(to_chart(s, Chart::XPM, p), p);
                return i == 0 ? pv.first : pv.second;
            };
        };
        for (int i = 0; i < 50; ++i) {
            const DoubledState s = test::random_state(rng, -3.0, 3.0);
            EXPECT_NEAR(dynamics::poisson_bracket(v(0), v(1), s), 0.4 / (m * m), 1e-8);
        }
    }
}

TEST(hamiltonian, invariant_c_needs_omega) {
    EXPECT_THROW(invariant_c(DoubledState{1.0, 0.0, 0.0, 0.0}, make_params(1.0, 5.0, 1.0)), DomainError);
}
