#include <algorithm>
#include <cmath>

#include "doctest.h"
#include "gmcusp/corner_riemann.hpp"
#include "support/generators.hpp"
#include "support/oracles.hpp"

using namespace gmcusp;
using gmcusp::testing::StateGenerator;
using gmcusp::testing::relative_difference;

namespace {

const GasModel kGas;

CornerStates uniform(const PrimitiveState& s) { return {s, s, s, s}; }

testing::FourStates four(const CornerStates& c) { return {c.lu, c.ld, c.ru, c.rd}; }

testing::RectangleSpeeds rectangle(const WaveSpeeds2D& w) { return {w.s_l, w.s_r, w.s_d, w.s_u, w.a_bar}; }

double lambda_min(const PrimitiveState& s, Axis axis) { return s.velocity(axis) - sound_speed(s, kGas); }
double lambda_max(const PrimitiveState& s, Axis axis) { return s.velocity(axis) + sound_speed(s, kGas); }

}  // namespace

TEST_CASE("roe average") {
    const PrimitiveState s{0.8, 0.3, -0.2, 1.7};
    const RoeAverage same = roe_average(s, s, kGas);
    CHECK(same.u == doctest::Approx(s.u).epsilon(1e-15));
    CHECK(same.v == doctest::Approx(s.v).epsilon(1e-15));
    CHECK(same.a == doctest::Approx(sound_speed(s, kGas)).epsilon(1e-14));

    // sqrt(rho) weights 1 and 2.
    const RoeAverage mixed = roe_average({1.0, 0.0, 0.0, 1.0}, {4.0, 3.0, 0.0, 1.0}, kGas);
    CHECK(mixed.u == doctest::Approx(2.0).epsilon(1e-15));
    CHECK(mixed.rho == doctest::Approx(2.0).epsilon(1e-15));

    StateGenerator gen(31);
    for (int n = 0; n < 1000; ++n) {
        const PrimitiveState l = gen.state();
        const PrimitiveState r = gen.state();
        const RoeAverage avg = roe_average(l, r, kGas);
        CHECK(avg.u >= std::min(l.u, r.u) - 1e-13);
        CHECK(avg.u <= std::max(l.u, r.u) + 1e-13);
        CHECK(avg.a > 0.0);
    }
}

TEST_CASE("corner wave speeds: examples") {
    SUBCASE("quiescent corner takes both degenerate branches") {
        const WaveSpeeds2D w = corner_wave_speeds(uniform({1.4, 0, 0, 1}), kGas);
        CHECK(w.degenerate_x);
        CHECK(w.degenerate_y);
        CHECK(w.s_l == doctest::Approx(-1.0));
        CHECK(w.s_r == doctest::Approx(1.0));
        CHECK(w.s_d == doctest::Approx(-1.0));
        CHECK(w.s_u == doctest::Approx(1.0));
    }
    SUBCASE("supersonic along x with v = 0") {
        const WaveSpeeds2D w = corner_wave_speeds(uniform({1.4, 3, 0, 1}), kGas);
        CHECK_FALSE(w.degenerate_x);
        CHECK(w.degenerate_y);
        CHECK(w.s_l == 0.0);
        CHECK(w.s_r == doctest::Approx(4.0));
        CHECK(w.s_d == doctest::Approx(-1.0));
        CHECK(w.s_u == doctest::Approx(1.0));
    }
}

TEST_CASE("corner wave speeds enclose the sampled eigenvalues") {
    StateGenerator gen(32);
    for (int n = 0; n < 1000; ++n) {
        const CornerStates c = gen.corner();
        const WaveSpeeds2D w = bounding_wave_speeds(c, kGas);
        CHECK(w.s_l <= 0.0);
        CHECK(w.s_r >= 0.0);
        CHECK(w.s_d <= 0.0);
        CHECK(w.s_u >= 0.0);
        CHECK(w.s_l < w.s_r);
        CHECK(w.s_d < w.s_u);
        for (const PrimitiveState* s : {&c.lu, &c.ld}) CHECK(lambda_min(*s, Axis::X) >= w.s_l);
        for (const PrimitiveState* s : {&c.ru, &c.rd}) CHECK(lambda_max(*s, Axis::X) <= w.s_r);
        for (const PrimitiveState* s : {&c.ld, &c.rd}) CHECK(lambda_min(*s, Axis::Y) >= w.s_d);
        for (const PrimitiveState* s : {&c.lu, &c.ru}) CHECK(lambda_max(*s, Axis::Y) <= w.s_u);

        const RoeAverage top = roe_average(c.lu, c.ru, kGas);
        const RoeAverage bottom = roe_average(c.ld, c.rd, kGas);
        CHECK(top.u + top.a <= w.s_r);
        CHECK(bottom.u - bottom.a >= w.s_l);
    }
}

TEST_CASE("degenerate override uses exactly -/+ a_bar") {
    StateGenerator gen(33);
    for (int n = 0; n < 500; ++n) {
        CornerStates c = gen.corner();
        for (PrimitiveState* s : {&c.lu, &c.ld, &c.ru, &c.rd}) s->u = 0.0;
        const WaveSpeeds2D w = corner_wave_speeds(c, kGas);
        const CornerVelocities vel = corner_convection_velocities(c, w);
        CHECK(vel.u_bar == 0.0);
        const double a_bar = 0.25 * (sound_speed(c.lu, kGas) + sound_speed(c.ld, kGas) + sound_speed(c.ru, kGas) +
                                     sound_speed(c.rd, kGas));
        CHECK(w.a_bar == doctest::Approx(a_bar).epsilon(1e-15));
        if (vel.v_bar != 0.0) {
            CHECK(w.degenerate_x);
            CHECK(w.s_l == -w.a_bar);
            CHECK(w.s_r == w.a_bar);
        }
    }
}

TEST_CASE("convection velocities") {
    StateGenerator gen(34);
    SUBCASE("identical states give their velocity") {
        for (int n = 0; n < 200; ++n) {
            const PrimitiveState s = gen.state();
            const CornerStates c = uniform(s);
            const WaveSpeeds2D w = corner_wave_speeds(c, kGas);
            const CornerVelocities v = corner_convection_velocities(c, w);
            CHECK(v.u_bar == doctest::Approx(s.u).epsilon(1e-14));
            CHECK(v.v_bar == doctest::Approx(s.v).epsilon(1e-14));
        }
    }
    SUBCASE("supersonic +x uses only the left states") {
        CornerStates c{{1.4, 3, 0.2, 1}, {1.4, 3, -0.1, 1}, {0.5, -2, 0.3, 0.2}, {3.0, 7, 0.0, 9.0}};
        WaveSpeeds2D w = corner_wave_speeds(c, kGas);
        w.s_l = 0.0;
        const CornerVelocities v = corner_convection_velocities(c, w);
        CHECK(v.regime_x == Regime::SupersonicPlus);
        CHECK(v.u_bar == doctest::Approx(3.0).epsilon(1e-15));
    }
    SUBCASE("supersonic -x uses only the right states") {
        CornerStates c{{0.5, 2, 0.3, 0.2}, {3.0, -7, 0.0, 9.0}, {1.4, -3, 0.2, 1}, {1.4, -3, -0.1, 1}};
        WaveSpeeds2D w = corner_wave_speeds(c, kGas);
        w.s_r = 0.0;
        const CornerVelocities v = corner_convection_velocities(c, w);
        CHECK(v.regime_x == Regime::SupersonicMinus);
        CHECK(v.u_bar == doctest::Approx(-3.0).epsilon(1e-15));
    }
    SUBCASE("subsonic average formula") {
        const CornerStates c{{1, 0.1, 0.2, 1}, {1, 0.3, 0.1, 1}, {1, 0.2, -0.1, 1}, {1, 0.5, 0.4, 1}};
        WaveSpeeds2D w{-1.0, 1.5, -0.5, 2.0, 1.0, false, false};
        const CornerVelocities v = corner_convection_velocities(c, w);
        CHECK(v.regime_x == Regime::Subsonic);
        CHECK(v.regime_y == Regime::Subsonic);
        // (u_LU S_U - u_LD S_D + u_RU S_U - u_RD S_D) / (2 (S_U - S_D))
        CHECK(v.u_bar == doctest::Approx((0.1 * 2.0 + 0.3 * 0.5 + 0.2 * 2.0 + 0.5 * 0.5) / 5.0).epsilon(1e-15));
        // (v_RU S_R - v_LU S_L + v_RD S_R - v_LD S_L) / (2 (S_R - S_L))
        CHECK(v.v_bar == doctest::Approx((-0.1 * 1.5 + 0.2 * 1.0 + 0.4 * 1.5 + 0.1 * 1.0) / 5.0).epsilon(1e-15));
    }
    SUBCASE("scaling the transverse speeds leaves u_bar unchanged") {
        for (int n = 0; n < 200; ++n) {
            const CornerStates c = gen.corner();
            WaveSpeeds2D w = corner_wave_speeds(c, kGas);
            const CornerVelocities v0 = corner_convection_velocities(c, w);
            const double k = gen.log_uniform(0.1, 10.0);
            w.s_u *= k;
            w.s_d *= k;
            const CornerVelocities v1 = corner_convection_velocities(c, w);
            CHECK(v1.u_bar == doctest::Approx(v0.u_bar).epsilon(1e-13).scale(1.0));
        }
    }
}

TEST_CASE("corner convective flux") {
    StateGenerator gen(35);
    for (int n = 0; n < 300; ++n) {
        const PrimitiveState s = gen.state();
        const CornerStates c = uniform(s);
        const WaveSpeeds2D w = corner_wave_speeds(c, kGas);
        const CornerVelocities v = corner_convection_velocities(c, w);
        CHECK(relative_difference(corner_convective_flux(c, w, v, Axis::X), convective_flux(s, Axis::X)) < 1e-13);
        CHECK(relative_difference(corner_convective_flux(c, w, v, Axis::Y), convective_flux(s, Axis::Y)) < 1e-13);
    }

    const CornerStates rest{{1, 0, 0, 1}, {2, 0, 0, 3}, {0.5, 0, 0, 0.1}, {4, 0, 0, 2}};
    const WaveSpeeds2D w = corner_wave_speeds(rest, kGas);
    const CornerVelocities v = corner_convection_velocities(rest, w);
    CHECK(corner_convective_flux(rest, w, v, Axis::X) == FluxVector{});
    CHECK(corner_convective_flux(rest, w, v, Axis::Y) == FluxVector{});

    // Supersonic along x with the v_bar = 0 override on the y speeds.
    const PrimitiveState fast{1.4, 3, 0, 1};
    const CornerStates c = uniform(fast);
    const WaveSpeeds2D ws = corner_wave_speeds(c, kGas);
    REQUIRE(ws.s_u == doctest::Approx(1.0));
    REQUIRE(ws.s_d == doctest::Approx(-1.0));
    const FluxVector f = corner_convective_flux(c, ws, corner_convection_velocities(c, ws), Axis::X);
    CHECK(relative_difference(f, 3.0 * advected_quantities(fast)) < 1e-15);
}

TEST_CASE("corner convective flux upwinds by the sign of u_bar") {
    const CornerStates c{{1.0, 0.5, 0.1, 1.0}, {1.2, 0.4, 0.0, 1.1}, {0.7, 0.6, 0.2, 0.9}, {0.9, 0.3, -0.1, 1.0}};
    const WaveSpeeds2D w{-1.0, 1.5, -0.8, 1.2, 1.0, false, false};
    const CornerVelocities v = corner_convection_velocities(c, w);
    REQUIRE(v.u_bar > 0.0);
    const FluxVector expected =
        v.u_bar * (1.2 * advected_quantities(c.lu) - (-0.8) * advected_quantities(c.ld)) * (1.0 / 2.0);
    CHECK(relative_difference(corner_convective_flux(c, w, v, Axis::X), expected) < 1e-15);
}

TEST_CASE("corner pressure flux") {
    SUBCASE("identical states") {
        StateGenerator gen(36);
        for (int n = 0; n < 300; ++n) {
            const PrimitiveState s = gen.state();
            const CornerStates c = uniform(s);
            const WaveSpeeds2D w = corner_wave_speeds(c, kGas);
            CHECK(relative_difference(corner_pressure_flux(c, w, kGas, Axis::X), pressure_flux(s, kGas, Axis::X)) <
                  1e-14);
            CHECK(relative_difference(corner_pressure_flux(c, w, kGas, Axis::Y), pressure_flux(s, kGas, Axis::Y)) <
                  1e-14);
        }
    }
    SUBCASE("four-state stationary contact") {
        StateGenerator gen(37);
        for (int n = 0; n < 300; ++n) {
            const double p = gen.log_uniform(0.01, 100.0);
            const CornerStates c{{gen.log_uniform(0.01, 100.0), 0, 0, p},
                                 {gen.log_uniform(0.01, 100.0), 0, 0, p},
                                 {gen.log_uniform(0.01, 100.0), 0, 0, p},
                                 {gen.log_uniform(0.01, 100.0), 0, 0, p}};
            const WaveSpeeds2D w = corner_wave_speeds(c, kGas);
            CHECK(relative_difference(corner_pressure_flux(c, w, kGas, Axis::X), FluxVector{{0, p, 0, 0}}) < 1e-15);
            CHECK(relative_difference(corner_pressure_flux(c, w, kGas, Axis::Y), FluxVector{{0, 0, p, 0}}) < 1e-15);
        }
    }
}

TEST_CASE("corner pressure flux equals the balance form with the isentropic substitute") {
    StateGenerator gen(38);
    for (int n = 0; n < 1000; ++n) {
        CornerStates c = gen.corner();
        if (n % 4 == 0) {
            const double p = c.lu.p;
            for (PrimitiveState* s : {&c.ld, &c.ru, &c.rd}) {
                const double q = std::sqrt(c.lu.q2());
                const double angle = gen.uniform(0.0, 6.283185307179586);
                *s = {s->rho, q * std::cos(angle), q * std::sin(angle), p};
            }
        }
        const WaveSpeeds2D w = corner_wave_speeds(c, kGas);
        const FluxVector ox = testing::balance_x_pressure_flux(four(c), rectangle(w), kGas.gamma());
        const FluxVector oy = testing::balance_y_pressure_flux(four(c), rectangle(w), kGas.gamma());
        double scale = 0.0;
        for (const PrimitiveState* s : {&c.lu, &c.ld, &c.ru, &c.rd})
            scale = std::max({scale, testing::max_abs(pressure_flux(*s, kGas, Axis::X)),
                              testing::max_abs(pressure_flux(*s, kGas, Axis::Y))});
        CHECK(testing::max_abs(corner_pressure_flux(c, w, kGas, Axis::X) - ox) <= 1e-12 * scale);
        CHECK(testing::max_abs(corner_pressure_flux(c, w, kGas, Axis::Y) - oy) <= 1e-12 * scale);
    }
}

TEST_CASE("transverse pressure coupling is active") {
    // Equal pressure, different v per quadrant: G2 differs between quadrants
    // only through p v in the energy row.
    const CornerStates c{{1.0, 0.2, 0.5, 1.0}, {1.3, 0.2, -0.4, 1.0}, {0.8, 0.2, 0.1, 1.0}, {1.1, 0.2, 0.3, 1.0}};
    const WaveSpeeds2D w = corner_wave_speeds(c, kGas);
    testing::RectangleSpeeds r = rectangle(w);
    const FluxVector with_cross = testing::balance_x_pressure_flux(four(c), r, 1.4);
    const double area = (r.s_r - r.s_l) * (r.s_u - r.s_d);
    const double g = 1.4 / 0.4;
    const double cross = -2.0 * r.s_r * r.s_l / area * g * (0.1 - 0.5 + -0.4 - 0.3);
    CHECK(std::abs(cross) > 1e-3);
    CHECK(corner_pressure_flux(c, w, kGas, Axis::X)[3] == doctest::Approx(with_cross[3]).epsilon(1e-13));
}

TEST_CASE("corner flux") {
    StateGenerator gen(39);
    SUBCASE("consistency") {
        for (int n = 0; n < 1000; ++n) {
            const PrimitiveState s = gen.state();
            const CornerFlux f = corner_flux(uniform(s), kGas);
            CHECK(relative_difference(f.f_star, testing::exact_x_flux(s, 1.4)) < 1e-13);
            CHECK(relative_difference(f.g_star, testing::exact_y_flux(s, 1.4)) < 1e-13);
        }
    }
    SUBCASE("stationary contact") {
        const CornerFlux f = corner_flux({{1, 0, 0, 2}, {0.1, 0, 0, 2}, {5, 0, 0, 2}, {0.3, 0, 0, 2}}, kGas);
        CHECK(relative_difference(f.f_star, FluxVector{{0, 2, 0, 0}}) < 1e-15);
        CHECK(relative_difference(f.g_star, FluxVector{{0, 0, 2, 0}}) < 1e-15);
    }
    SUBCASE("transposing the corner swaps the fluxes") {
        for (int n = 0; n < 1000; ++n) {
            const CornerStates c = gen.corner();
            const CornerFlux f = corner_flux(c, kGas);
            const CornerFlux t = corner_flux(transpose(c), kGas);
            CHECK(relative_difference(t.f_star, swap_xy(f.g_star)) < 1e-13);
            CHECK(relative_difference(t.g_star, swap_xy(f.f_star)) < 1e-13);
        }
    }
    SUBCASE("supersonic corner is one-sided") {
        for (int n = 0; n < 500; ++n) {
            PrimitiveState s = gen.state();
            s.u = 3.0 * sound_speed(s, kGas);
            s.v = gen.uniform(-0.1, 0.1) * sound_speed(s, kGas);
            const CornerFlux f = corner_flux(uniform(s), kGas);
            CHECK(relative_difference(f.f_star, testing::exact_x_flux(s, 1.4)) < 1e-14);
        }
    }
}

TEST_CASE("transpose is an involution") {
    const CornerStates c{{1, 2, 3, 4}, {5, 6, 7, 8}, {9, 10, 11, 12}, {13, 14, 15, 16}};
    const CornerStates t = transpose(c);
    CHECK(t.lu == swap_xy(c.rd));
    CHECK(t.ld == swap_xy(c.ld));
    CHECK(t.ru == swap_xy(c.ru));
    CHECK(t.rd == swap_xy(c.lu));
    const CornerStates tt = transpose(t);
    CHECK(tt.lu == c.lu);
    CHECK(tt.rd == c.rd);
    const WaveSpeeds2D w{-1, 2, -3, 4, 5, true, false};
    const WaveSpeeds2D wt = transpose(w);
    CHECK(wt.s_l == -3);
    CHECK(wt.s_r == 4);
    CHECK(wt.s_d == -1);
    CHECK(wt.s_u == 2);
    CHECK(wt.degenerate_y);
    CHECK_FALSE(wt.degenerate_x);
}
