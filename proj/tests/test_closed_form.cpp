#include <doctest.h>

#include <cmath>

#include "slet/closed_form.hpp"
#include "slet/engine.hpp"
#include "slet/errors.hpp"

using namespace slet;
using namespace slet::closed_form;

TEST_CASE("power_law examples") {
    const auto osc = power_law(1.0, 2.0, 0, 0);
    CHECK(osc.lbar == doctest::Approx(1.5));
    CHECK(osc.E0 == doctest::Approx(3.0));
    CHECK(osc.w == doctest::Approx(4.0));
    REQUIRE(osc.flags.size() == 1);
    CHECK(osc.flags[0] == kHigherOrderAsPrinted);

    const auto lin = power_law(1.0, 1.0, 0, 0);
    CHECK(lin.lbar == doctest::Approx((std::sqrt(3.0) + 1.0) / 2.0));
    CHECK(lin.E0 == doctest::Approx(2.3267002771068674).epsilon(1e-13));
    CHECK(lin.E2_over_lbar2 == doctest::Approx(-0.03464).epsilon(1e-3));
    CHECK(lin.E_total == doctest::Approx(lin.E0 + lin.E2_over_lbar2 + lin.E3_over_lbar3));
    CHECK_THROWS_AS(power_law(1.0, 0.0, 0, 0), UsageError);
}

TEST_CASE("logarithmic examples") {
    const auto r = logarithmic(1.0, 1.0, 0, 0);
    CHECK(r.lbar == doctest::Approx((1.0 + std::sqrt(2.0)) / 2.0));
    CHECK(r.E0 == doctest::Approx(std::log(r.lbar * std::sqrt(2.0)) + 0.5));
    CHECK(r.E0 == doctest::Approx(1.0348).epsilon(1e-5));
    CHECK(r.E2_over_lbar2 == doctest::Approx(1.0 / (72.0 * r.lbar * r.lbar)));
    CHECK(r.E2_over_lbar2 == doctest::Approx(0.009530).epsilon(1e-3));
    CHECK(r.w == doctest::Approx(2.0 * std::sqrt(2.0)));
    for (int l = 0; l <= 2; ++l)
        for (int n = 0; n <= 2; ++n) {
            const double shift = logarithmic(1.0, 3.0, l, n).E_total - logarithmic(1.0, 1.0, l, n).E_total;
            CHECK(shift == doctest::Approx(-std::log(3.0)));
        }
}

TEST_CASE("exact limits") {
    CHECK(coulomb3d(1, 2) == doctest::Approx(-1.0 / 16.0));
    CHECK(oscillator3d(2.0, 1, 0) == doctest::Approx(5.0));
    CHECK(landau(2.0, 1, -1) == doctest::Approx(6.0));
    const auto z = donor_zero_field(0, 0);
    CHECK(z.published == doctest::Approx(-1.0));
    CHECK(z.derived == doctest::Approx(-4.0));
    for (int l = 0; l <= 3; ++l)
        for (int n = 0; n <= 3; ++n)
            for (double B : {0.5, 3.0}) CHECK(power_law(B * B / 4.0, 2.0, l, n).E0 == doctest::Approx(oscillator3d(B, l, n)).epsilon(1e-14));
}

TEST_CASE("engine agrees with closed forms") {
    auto engine = [](Potential pot, int l, int n) {
        Problem p;
        p.potential = std::move(pot);
        p.l = l;
        p.n_radial = n;
        return solve(p);
    };
    for (double nu : {0.5, 1.0, 2.0, 3.0, 4.0})
        for (int l = 0; l <= 3; ++l)
            for (int n = 0; n <= 3; ++n) {
                INFO("nu=" << nu << " l=" << l << " n=" << n);
                const auto b = engine(Potential::builtin(Family::power, {{"A", 1.0}, {"nu", nu}}), l, n);
                const auto c = power_law(1.0, nu, l, n);
                CHECK(b.lbar == doctest::Approx(c.lbar).epsilon(1e-10));
                CHECK(b.r0 == doctest::Approx(c.r0).epsilon(1e-10));
                CHECK(b.w == doctest::Approx(c.w).epsilon(1e-10));
                CHECK(b.E0 == doctest::Approx(c.E0).epsilon(1e-10));
            }
    for (int l = 0; l <= 3; ++l)
        for (int n = 0; n <= 3; ++n) {
            const auto b = engine(Potential::builtin(Family::log, {{"A", 1.0}, {"b", 1.0}}), l, n);
            const auto c = logarithmic(1.0, 1.0, l, n);
            CHECK(b.lbar == doctest::Approx(c.lbar).epsilon(1e-10));
            CHECK(b.r0 == doctest::Approx(c.r0).epsilon(1e-10));
            CHECK(b.E0 == doctest::Approx(c.E0).epsilon(1e-10));
            CHECK(b.E2_over_lbar2 == doctest::Approx(c.E2_over_lbar2).epsilon(1e-8));
        }
}
