#include <doctest.h>

#include <cmath>

#include "slet/closed_form.hpp"
#include "slet/engine.hpp"
#include "slet/errors.hpp"

using namespace slet;

namespace {

Problem make(Dim dim, Potential pot, int l, int n) {
    Problem p;
    p.dim = dim;
    p.potential = std::move(pot);
    p.l = l;
    p.n_radial = n;
    return p;
}

Potential linear() { return Potential::builtin(Family::power, {{"A", 1.0}, {"nu", 1.0}}); }
Potential log_pot() { return Potential::builtin(Family::log, {{"A", 1.0}, {"b", 1.0}}); }

void check_breakdown_invariants(const Problem& p, const Breakdown& b) {
    CHECK(b.lbar == doctest::Approx(p.l - b.beta).epsilon(1e-15));
    CHECK(b.lbar > 0.0);
    CHECK(b.Q == doctest::Approx(b.lbar * b.lbar).epsilon(1e-15));
    CHECK(std::fabs(b.E1) <= 1e-10 * std::fabs(b.E0));
    CHECK(std::fabs(b.residual) < 1e-10 * b.lbar);
    for (int j = 0; j < 4; ++j) CHECK(b.coeffs.e[j] == doctest::Approx(b.coeffs.eps[j] / std::pow(b.w, (j + 1) / 2.0)));
    for (int i = 0; i < 6; ++i) CHECK(b.coeffs.d[i] == doctest::Approx(b.coeffs.dlt[i] / std::pow(b.w, (i + 1) / 2.0)));
    if (p.solver.term_order == TermOrder::through_E3)
        CHECK(b.E_total == doctest::Approx(b.E0 + b.E2_over_lbar2 + b.E3_over_lbar3).epsilon(1e-15));
}

}  // namespace

TEST_CASE("omega") {
    for (double r : {0.3, 1.0, 7.0}) {
        CHECK(omega(Potential::builtin(Family::coulomb), r) == doctest::Approx(2.0));
        CHECK(omega(Potential::builtin(Family::harmonic, {{"B", 2.0}}), r) == doctest::Approx(4.0));
        CHECK(omega(log_pot(), r) == doctest::Approx(2.0 * std::sqrt(2.0)));
    }
    CHECK_THROWS_AS(omega(Potential::from_text("2/r"), 1.0), NoBoundStateError);
    // V = -r^-3 + r^-2.5: V' > 0 at r = 0.9 but 3 + r V''/V' < 0 there
    CHECK_THROWS_AS(omega(Potential::from_text("-r^-3 + r^-2.5"), 0.9), InvalidExpansionPointError);
}

TEST_CASE("beta_shift") {
    CHECK(beta_shift(Dim::D3, 0, 2.0) == doctest::Approx(-1.0));
    CHECK(beta_shift(Dim::D3, 0, 4.0) == doctest::Approx(-1.5));
    CHECK(beta_shift(Dim::D2, 0, 4.0) == doctest::Approx(-1.0));
    CHECK(beta_shift(Dim::D3, 2, 2.0) == doctest::Approx(-3.0));
    CHECK_THROWS_AS(beta_shift(Dim::D3, 0, 0.0), UsageError);
}

TEST_CASE("solve_r0 examples") {
    auto coulomb = solve_r0(make(Dim::D3, Potential::builtin(Family::coulomb), 0, 0));
    CHECK(coulomb.r0 == doctest::Approx(1.0).epsilon(1e-11));
    REQUIRE(coulomb.candidates.size() == 1);
    CHECK(coulomb.candidates[0].is_minimum);

    auto osc = solve_r0(make(Dim::D3, Potential::builtin(Family::harmonic, {{"B", 2.0}}), 0, 0));
    CHECK(osc.r0 == doctest::Approx(std::sqrt(1.5)).epsilon(1e-11));

    auto lin = solve_r0(make(Dim::D3, linear(), 0, 0));
    const double lbar = (std::sqrt(3.0) + 1.0) / 2.0;
    CHECK(lin.r0 == doctest::Approx(std::cbrt(2.0 * lbar * lbar)).epsilon(1e-11));
    CHECK(lin.r0 == doctest::Approx(1.551133518071245).epsilon(1e-12));
}

TEST_CASE("solve_r0 failures") {
    Problem narrow = make(Dim::D3, Potential::builtin(Family::coulomb), 0, 0);
    narrow.solver.bracket_lo = 2.0;
    narrow.solver.bracket_hi = 10.0;
    CHECK_THROWS_AS(solve_r0(narrow), NoRootError);
    CHECK_THROWS_AS(solve_r0(make(Dim::D3, Potential::from_text("2/r"), 0, 0)), NoBoundStateError);
    // attractive everywhere but V'' / V' makes the radicand negative everywhere
    CHECK_THROWS_AS(solve_r0(make(Dim::D3, Potential::from_text("-exp(-4*r)*r^-3"), 0, 0)),
                    InvalidExpansionPointError);
    Problem bad = make(Dim::D3, Potential::builtin(Family::coulomb), -1, 0);
    CHECK_THROWS_AS(solve_r0(bad), UsageError);
    Problem donor = make(Dim::D2, Potential::builtin(Family::donor, {{"gamma", 1.0}, {"m", -2.0}}), 1, 0);
    CHECK_THROWS_AS(solve_r0(donor), UsageError);
}

TEST_CASE("anharmonic coefficients") {
    SUBCASE("3D coulomb ground state") {
        const auto c = anharmonic_coeffs(Dim::D3, -1.0, 1.0, 1.0, Potential::builtin(Family::coulomb).eval_jet(1.0), 2.0);
        const double eps[] = {2, -3, -2, 3};
        const double e[] = {std::sqrt(2.0), -1.5, -1.0 / std::sqrt(2.0), 0.75};
        for (int j = 0; j < 4; ++j) {
            CHECK(c.eps[j] == doctest::Approx(eps[j]));
            CHECK(c.e[j] == doctest::Approx(e[j]));
        }
        CHECK(alpha1(0, 2.0, c.e) == doctest::Approx(0.0).scale(1.0));
    }
    SUBCASE("3D oscillator ground state") {
        const double r0 = std::sqrt(1.5);
        const auto jet = Potential::builtin(Family::harmonic, {{"B", 2.0}}).eval_jet(r0);
        const auto c = anharmonic_coeffs(Dim::D3, -1.5, r0, 2.25, jet, 4.0);
        const double eps[] = {4, -6, -4, 5};
        const double e[] = {2, -1.5, -0.5, 0.3125};
        for (int j = 0; j < 4; ++j) {
            CHECK(c.eps[j] == doctest::Approx(eps[j]));
            CHECK(c.e[j] == doctest::Approx(e[j]));
        }
        CHECK(alpha1(0, 4.0, c.e) == doctest::Approx(-0.75));
    }
    SUBCASE("2D with zero shift") {
        const auto c = anharmonic_coeffs(Dim::D2, 0.0, 1.3, 0.7, log_pot().eval_jet(1.3), 2.5);
        CHECK(c.eps[0] == 0.0);
        CHECK(c.eps[1] == 0.0);
        CHECK(c.dlt[2] == 0.0);
        CHECK(c.dlt[3] == 0.0);
        CHECK(c.dlt[0] == doctest::Approx(0.5));
    }
}

TEST_CASE("linear potential breakdown matches independent high-precision evaluation") {
    // Reference values from an mpmath evaluation at 30 digits with numerical derivatives.
    const auto p = make(Dim::D3, linear(), 0, 0);
    const auto b = solve(p);
    check_breakdown_invariants(p, b);
    CHECK(b.w == doctest::Approx(3.4641016151377544).epsilon(1e-13));
    CHECK(b.beta == doctest::Approx(-1.3660254037844386).epsilon(1e-13));
    CHECK(b.E0 == doctest::Approx(2.3267002771068674).epsilon(1e-12));
    CHECK(b.alpha1 == doctest::Approx(-0.4722222222222222).epsilon(1e-11));
    CHECK(b.alpha2 == doctest::Approx(0.001336458956457467).epsilon(1e-9));
    CHECK(b.E2_over_lbar2 == doctest::Approx(0.011545138153334343).epsilon(1e-10));
    CHECK(b.E3_over_lbar3 == doctest::Approx(0.00040662912772294516).epsilon(1e-9));
    CHECK(b.E_total == doctest::Approx(2.338652044387925).epsilon(1e-12));
    const double e[] = {1.8612097182041991, -1.5, -0.6204032394013997, 0.4166666666666667};
    for (int j = 0; j < 4; ++j) CHECK(b.coeffs.e[j] == doctest::Approx(e[j]).epsilon(1e-12));
}

TEST_CASE("log potential second and third orders") {
    // n = 0: (beta(1+beta) + alpha1) = 1/36 and the third-order term matches the closed form.
    const auto b = solve(make(Dim::D3, log_pot(), 0, 0));
    CHECK(b.beta * (1 + b.beta) + b.alpha1 == doctest::Approx(1.0 / 36.0).epsilon(1e-10));
    CHECK(b.E2_over_lbar2 == doctest::Approx(0.009531826402989439).epsilon(1e-10));
    CHECK(b.E3_over_lbar3 == doctest::Approx(0.0004653012193904382).epsilon(1e-9));
    for (int n = 1; n <= 3; ++n) {
        const auto bn = solve(make(Dim::D3, log_pot(), 0, n));
        const auto cf = closed_form::logarithmic(1.0, 1.0, 0, n);
        CHECK(bn.E3_over_lbar3 == doctest::Approx(cf.E3_over_lbar3).epsilon(1e-8));
    }
}

TEST_CASE("exactness for coulomb and oscillator") {
    for (int l = 0; l <= 5; ++l)
        for (int n = 0; n <= 5; ++n) {
            const auto p = make(Dim::D3, Potential::builtin(Family::coulomb), l, n);
            const auto b = solve(p);
            check_breakdown_invariants(p, b);
            CHECK(b.E_total == doctest::Approx(closed_form::coulomb3d(l, n)).epsilon(1e-12).scale(1.0));
            CHECK(std::fabs(b.beta * (1 + b.beta) + b.alpha1) < 1e-9);
            CHECK(std::fabs(b.alpha2) < 1e-9);

            const auto q = make(Dim::D3, Potential::builtin(Family::harmonic, {{"B", 1.5}}), l, n);
            const auto c = solve(q);
            CHECK(c.E_total == doctest::Approx(closed_form::oscillator3d(1.5, l, n)).epsilon(1e-12));
            CHECK(std::fabs(c.alpha2) < 1e-9);
        }
}

TEST_CASE("published third-order coefficient breaks exactness beyond the ground state") {
    const auto b = solve(make(Dim::D3, Potential::builtin(Family::coulomb), 0, 1));
    const double published = alpha2(1, b.w, b.coeffs.e, b.coeffs.d, Alpha2Form::published);
    CHECK(std::fabs(b.alpha2) < 1e-12);
    CHECK(std::fabs(published) > 0.1);
    // both forms coincide at n = 0, where 1 + n = 1 + 2n
    const auto g = solve(make(Dim::D3, linear(), 0, 0));
    CHECK(alpha2(0, g.w, g.coeffs.e, g.coeffs.d, Alpha2Form::published) == doctest::Approx(g.alpha2));
}

TEST_CASE("2D landau exactness and zero-field donor") {
    for (double g : {0.5, 1.0, 5.0})
        for (int m = -3; m <= 3; ++m)
            for (int n = 0; n <= 3; ++n) {
                const auto pot = Potential::expression(Expr::parse("m*gamma + gamma^2*r^2/4"), {{"m", double(m)}, {"gamma", g}});
                const auto p = make(Dim::D2, pot, std::abs(m), n);
                const auto b = solve(p);
                check_breakdown_invariants(p, b);
                CHECK(b.E_total == doctest::Approx(closed_form::landau(g, n, m)).epsilon(1e-12));
            }
    const auto z = solve(make(Dim::D2, Potential::builtin(Family::donor, {{"gamma", 0.0}, {"m", 0.0}}), 0, 0));
    CHECK(z.E_total == doctest::Approx(-4.0).epsilon(1e-12));
    const auto z1 = solve(make(Dim::D2, Potential::builtin(Family::donor, {{"gamma", 0.0}, {"m", 1.0}}), 1, 1));
    CHECK(z1.E_total == doctest::Approx(closed_form::donor_zero_field(1, 1).derived).epsilon(1e-12));
}

TEST_CASE("term order selects series truncation") {
    auto p = make(Dim::D3, linear(), 1, 1);
    const auto full = solve(p);
    p.solver.term_order = TermOrder::through_E2;
    CHECK(solve(p).E_total == doctest::Approx(full.E0 + full.E2_over_lbar2));
    p.solver.term_order = TermOrder::E0_only;
    CHECK(solve(p).E_total == full.E0);
}

TEST_CASE("power-law scale covariance") {
    for (double nu : {0.5, 1.0, 3.0})
        for (double A : {0.3, 4.0}) {
            const auto unit = solve(make(Dim::D3, Potential::builtin(Family::power, {{"A", 1.0}, {"nu", nu}}), 1, 2));
            const auto scaled = solve(make(Dim::D3, Potential::builtin(Family::power, {{"A", A}, {"nu", nu}}), 1, 2));
            CHECK(scaled.E_total == doctest::Approx(std::pow(A, 2.0 / (nu + 2.0)) * unit.E_total).epsilon(1e-9));
        }
}

TEST_CASE("energies increase with the radial quantum number for confining potentials") {
    const Potential pots[] = {
        Potential::builtin(Family::power, {{"A", 1.0}, {"nu", 0.5}}),
        Potential::builtin(Family::power, {{"A", 1.0}, {"nu", 3.0}}),
        log_pot(),
        Potential::builtin(Family::harmonic, {{"B", 1.0}}),
    };
    for (const auto& pot : pots)
        for (int l = 0; l <= 2; ++l) {
            double prev = -1e300;
            for (int n = 0; n <= 4; ++n) {
                const double e = solve(make(Dim::D3, pot, l, n)).E_total;
                CHECK(e > prev);
                prev = e;
            }
        }
    for (double g : {0.5, 5.0}) {
        double prev = -1e300;
        for (int n = 0; n <= 4; ++n) {
            const double e =
                solve(make(Dim::D2, Potential::builtin(Family::donor, {{"gamma", g}, {"m", -1.0}}), 1, n)).E_total;
            CHECK(e > prev);
            prev = e;
        }
    }
}

TEST_CASE("multiple roots: lowest admissible minimum is selected") {
    // A well with a shelf: two expansion points satisfy the root equation.
    const auto p = make(Dim::D3, Potential::from_text("r^2 - 3*exp(-(r-3)^2)"), 2, 0);
    const auto b = solve(p);
    CHECK(b.candidates.size() >= 1);
    for (const auto& c : b.candidates)
        if (c.is_minimum) CHECK(b.E0 <= c.E0 + 1e-15);
    check_breakdown_invariants(p, b);
}
