#include <doctest.h>

#include <cmath>
#include <random>

#include "slet/errors.hpp"
#include "slet/jet.hpp"

using slet::Jet;

namespace {

void check_coeffs(const Jet& j, const Jet::Coeffs& expect, double tol = 1e-14) {
    for (std::size_t k = 0; k < Jet::kSize; ++k) {
        INFO("coefficient " << k);
        CHECK(j[k] == doctest::Approx(expect[k]).epsilon(tol).scale(1.0));
    }
}

Jet random_jet(std::mt19937& rng, bool nonzero_value = true) {
    std::uniform_real_distribution<double> u(-2.0, 2.0);
    Jet::Coeffs c{};
    for (auto& v : c) v = u(rng);
    if (nonzero_value) c[0] = (c[0] < 0 ? -1.0 : 1.0) * (0.5 + std::fabs(c[0]));
    return Jet(c);
}

bool close(const Jet& a, const Jet& b, double tol) {
    for (std::size_t k = 0; k < Jet::kSize; ++k) {
        const double scale = std::max({1.0, std::fabs(a[k]), std::fabs(b[k])});
        if (std::fabs(a[k] - b[k]) > tol * scale) return false;
    }
    return true;
}

}  // namespace

TEST_CASE("seed") {
    check_coeffs(Jet::seed(2.0), {2, 1, 0, 0, 0, 0, 0});
    check_coeffs(Jet::seed(1.0), {1, 1, 0, 0, 0, 0, 0});
    CHECK_THROWS_AS(Jet::seed(-1.0), slet::DomainError);
    CHECK_THROWS_AS(Jet::seed(0.0), slet::DomainError);
    CHECK_THROWS_AS(Jet::seed(std::nan("")), slet::DomainError);
}

TEST_CASE("arithmetic examples") {
    check_coeffs(Jet::seed(3) * Jet::seed(3), {9, 6, 1, 0, 0, 0, 0});
    check_coeffs(Jet::constant(1) / Jet::seed(2), {0.5, -0.25, 0.125, -0.0625, 0.03125, -0.015625, 0.0078125});
    CHECK_THROWS_AS(Jet::seed(1) / Jet::constant(0), slet::SingularityError);
    check_coeffs(Jet::seed(3) - Jet::seed(3), {0, 0, 0, 0, 0, 0, 0});
}

TEST_CASE("elementary functions") {
    check_coeffs(log(Jet::seed(1)), {0, 1, -0.5, 1.0 / 3, -0.25, 0.2, -1.0 / 6});
    check_coeffs(pow(Jet::seed(3), 2.0), {9, 6, 1, 0, 0, 0, 0});
    CHECK_THROWS_AS(sqrt(Jet::constant(-1)), slet::SingularityError);
    CHECK_THROWS_AS(log(Jet::constant(0)), slet::SingularityError);
    CHECK_THROWS_AS(pow(Jet::constant(-2), 0.5), slet::SingularityError);

    // exp(r) about 0 is 1/k!
    Jet::Coeffs c{};
    c[1] = 1.0;
    check_coeffs(exp(Jet(c)), {1, 1, 0.5, 1.0 / 6, 1.0 / 24, 1.0 / 120, 1.0 / 720});
    // sin and cos about 0
    check_coeffs(sin(Jet(c)), {0, 1, 0, -1.0 / 6, 0, 1.0 / 120, 0});
    check_coeffs(cos(Jet(c)), {1, 0, -0.5, 0, 1.0 / 24, 0, -1.0 / 720});
    // sqrt(1 + h) binomial series
    check_coeffs(sqrt(Jet::seed(1)), {1, 0.5, -0.125, 0.0625, -0.0390625, 0.02734375, -0.0205078125});
    // r^-2 at 1 equals 1/(r*r)
    CHECK(close(pow(Jet::seed(1.0), -2), Jet::constant(1) / (Jet::seed(1.0) * Jet::seed(1.0)), 1e-15));
}

TEST_CASE("derivative extraction") {
    const Jet coulomb = Jet::constant(-2.0) / Jet::seed(1.0);
    CHECK(coulomb.derivative(3) == doctest::Approx(12.0));
    const Jet sq = Jet::seed(5.0) * Jet::seed(5.0);
    CHECK(sq.derivative(2) == doctest::Approx(2.0));
    const Jet lg = log(Jet::seed(2.0) / 1.0);
    CHECK(lg.derivative(1) == doctest::Approx(0.5));
    CHECK_THROWS_AS(sq.derivative(7), slet::UsageError);
    CHECK_THROWS_AS(sq.derivative(-1), slet::UsageError);
    // k! a_k for every order of 1/r at r0 = 1: (-1)^k k!
    const Jet inv = Jet::constant(1.0) / Jet::seed(1.0);
    double fact = 1.0;
    for (int k = 0; k <= 6; ++k) {
        if (k) fact *= k;
        CHECK(inv.derivative(k) == doctest::Approx((k % 2 ? -1.0 : 1.0) * fact));
    }
}

TEST_CASE("ring axioms on random jets") {
    std::mt19937 rng(20261015);
    for (int trial = 0; trial < 200; ++trial) {
        const Jet a = random_jet(rng), b = random_jet(rng, false), c = random_jet(rng, false);
        CHECK(close(a * (b / a), b, 1e-12));
        CHECK(close(a + b, b + a, 1e-12));
        CHECK(close(a * b, b * a, 1e-12));
        CHECK(close((a + b) + c, a + (b + c), 1e-12));
        CHECK(close((a * b) * c, a * (b * c), 1e-12));
        CHECK(close(a * (b + c), a * b + a * c, 1e-12));
    }
}

TEST_CASE("function identities on random jets") {
    std::mt19937 rng(7);
    for (int trial = 0; trial < 100; ++trial) {
        Jet a = random_jet(rng);
        if (a[0] < 0) a = -a;
        CHECK(close(exp(log(a)), a, 1e-12));
        CHECK(close(sqrt(a) * sqrt(a), a, 1e-12));
        CHECK(close(sin(a) * sin(a) + cos(a) * cos(a), Jet::constant(1.0), 1e-12));
        CHECK(close(pow(a, 3), a * a * a, 1e-12));
        CHECK(close(pow(a, 1.5), a * sqrt(a), 1e-12));
    }
}
