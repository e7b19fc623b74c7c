#include <gtest/gtest.h>

#include <cmath>
#include <random>

#include "ddlab/beables.hpp"
#include "ddlab/dynamics.hpp"
#include "ddlab/errors.hpp"
#include "ddlab/hamiltonian.hpp"
#include "test_util.hpp"

using namespace ddlab;
using namespace ddlab::beables;

TEST(beables, unit_displacement) {
    const OscillatorParams p = make_params(1.0, 0.0, 1.0);
    const BeableValues b = compute_beables(DoubledState{1.0, 0.0, 0.0, 0.0}, p);
    EXPECT_DOUBLE_EQ(b.C, 0.25);  // Omega / 4 with Omega = 1
    EXPECT_EQ(b.J2, 0.0);
    EXPECT_EQ(b.Gamma, 0.0);
    EXPECT_EQ(b.Omega, 1.0);
}

TEST(beables, j2_vanishes_at_origin_of_positions) {
    const OscillatorParams p = make_params(1.0, 0.3, 1.0);
    EXPECT_EQ(compute_beables(DoubledState{0.0, 0.0, 1.0, 0.2}, p).J2, 0.0);
}

TEST(beables, j2_velocity_form_matches_canonical_form) {
    std::mt19937_64 rng(41);
    const OscillatorParams p = make_params(1.4, 0.6, 1.2);
    int n = 0;
    while (n < 1000) {
        const DoubledState s = test::random_state(rng, -4.0, 4.0);
        if (invariant_c(s, p) <= 0.0) continue;
        ++n;
        const BeableValues b = compute_beables(s, p);
        EXPECT_NEAR(b.J2, 0.5 * (s.x1 * s.p2 + s.x2 * s.p1), 1e-12 * std::max(1.0, std::abs(b.J2)));
    }
}

TEST(beables, rejects_nonpositive_c) {
    const OscillatorParams p = make_params(1.0, 0.2, 1.0);
    EXPECT_THROW(compute_beables(DoubledState{0.0, 1.0, 0.0, 0.0}, p), DomainError);
    EXPECT_THROW(compute_beables(DoubledState{}, p), DomainError);
    EXPECT_THROW(compute_beables(DoubledState{1.0, 0.0, 0.0, 0.0}, make_params(1.0, 3.0, 1.0)), DomainError);
}

TEST(beables, constant_along_simulation) {
    const OscillatorParams p = make_params(1.0, 0.2, 1.0);
    const double tau = p.period();
    const auto tr = dynamics::simulate({1.0, 0.4, 0.3, -0.6}, p, {dynamics::Method::RK4, tau / 1000.0, 50.0 * tau});
    const BeableValues b0 = compute_beables(tr.sector_states.front(), p);
    for (const SectorState& s : tr.sector_states) {
        const BeableValues b = compute_beables(s, p);
        ASSERT_LT(std::abs(b.C - b0.C), 1e-6 * std::abs(b0.C));
        ASSERT_LT(std::abs(b.J2 - b0.J2), 1e-6 * std::abs(b0.J2));
    }
}

TEST(beables, velocity_field_is_constant) {
    const OscillatorParams p = make_params(1.0, 0.2, 1.0);
    const ThooftVelocityField f = thooft_velocity_field(compute_beables(DoubledState{1.0, 0.1, 0.3, 0.2}, p));
    EXPECT_DOUBLE_EQ(f.f1, 2.0 * p.omega());
    EXPECT_DOUBLE_EQ(f.f2, -2.0 * p.damping_rate());
}

TEST(beables, thooft_hamiltonian_on_constraint_surface) {
    const OscillatorParams p = make_params(1.0, 0.2, 1.0);
    const BeableValues b{0.7, 0.0, p.damping_rate(), p.omega()};
    EXPECT_DOUBLE_EQ(thooft_hamiltonian(b, p), 2.0 * p.omega() * 0.7);
    const SplitHamiltonian sp = split_hamiltonian(b, p);
    EXPECT_DOUBLE_EQ(sp.h_one, 2.0 * p.omega() * 0.7);
    EXPECT_EQ(sp.h_two, 0.0);
}

TEST(beables, thooft_hamiltonian_equals_h) {
    std::mt19937_64 rng(42);
    const OscillatorParams p = make_params(1.0, 0.4, 1.0);
    int n = 0;
    while (n < 2000) {
        const DoubledState s = test::random_state(rng, -5.0, 5.0);
        if (invariant_c(s, p) <= 0.0) continue;
        ++n;
        const BeableValues b = compute_beables(s, p);
        const double h = hamiltonian(s, p);
        const double scale = std::max(1.0, std::abs(h));
        EXPECT_NEAR(thooft_hamiltonian(b, p), h, 1e-10 * scale);
        const SplitHamiltonian sp = split_hamiltonian(b, p);
        EXPECT_NEAR(sp.h_one - sp.h_two, thooft_hamiltonian(b, p),
                    1e-12 * std::max({scale, sp.h_one, sp.h_two}));
        EXPECT_GE(sp.h_one, 0.0);
        EXPECT_GE(sp.h_two, 0.0);
    }
}

TEST(beables, thermodynamics_examples) {
    const OscillatorParams p = make_params(1.0, 0.2, 1.0, 1.0);
    const Thermodynamics th0 = thermodynamics({0.5, 0.0, p.damping_rate(), p.omega()}, p);
    EXPECT_DOUBLE_EQ(th0.T, 0.1);
    EXPECT_EQ(th0.S, 0.0);
    EXPECT_EQ(th0.F, th0.U);
    // entropy may be negative; it is not clamped
    const Thermodynamics th1 = thermodynamics({0.5, -0.3, p.damping_rate(), p.omega()}, p);
    EXPECT_DOUBLE_EQ(th1.S, -0.6);
    EXPECT_NEAR(th1.F, 2.0 * p.omega() * 0.5 - 2.0 * p.damping_rate() * -0.3, 1e-15);
}

TEST(beables, physical_states) {
    EXPECT_TRUE(is_physical({1.0, 0.0, 0.1, 1.0}));
    EXPECT_FALSE(is_physical({1.0, 1.0, 0.1, 1.0}, 1e-9));
    EXPECT_THROW(is_physical({1.0, 0.0, 0.1, 1.0}, 0.0), ParamError);
}

TEST(beables, constraint_surface_is_invariant) {
    const OscillatorParams p = make_params(1.0, 0.3, 1.0);
    const DoubledState s0{1.3, 0.0, 0.2, 0.0};
    for (double t = 0.0; t < 50.0; t += 0.5) {
        EXPECT_TRUE(is_physical(compute_beables(to_sector(dynamics::exact_solution(s0, p, t)) , p), 1e-8)) << t;
    }
}

TEST(beables, physical_radial_motion_is_periodic) {
    // on J2 = 0: r(t + tau) = r(t) and u(t + tau) = u(t) - Gamma tau
    const OscillatorParams p = make_params(1.0, 0.2, 1.0);
    const DoubledState s0{1.2, 0.3, 0.4, -0.1};  // x1 p2 + x2 p1 = 0
    ASSERT_NEAR(invariant_j2(s0), 0.0, 1e-15);
    const double tau = p.period();
    for (double t : {0.3, 1.7, 4.0}) {
        const DoubledState a = dynamics::exact_solution(s0, p, t);
        const DoubledState b = dynamics::exact_solution(s0, p, t + tau);
        const double ra = a.x1 * a.x1 - a.x2 * a.x2, rb = b.x1 * b.x1 - b.x2 * b.x2;
        EXPECT_NEAR(rb, ra, 1e-6);
        if (ra > 1e-3) {
            EXPECT_NEAR(std::atanh(b.x2 / b.x1), std::atanh(a.x2 / a.x1) - p.damping_rate() * tau, 1e-6);
        }
    }
}
