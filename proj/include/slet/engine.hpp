#pragma once

#include <array>
#include <string_view>
#include <vector>

#include "slet/jet.hpp"
#include "slet/potential.hpp"

namespace slet {

/// Spherical (3D, centrifugal l(l+1)/r^2) or cylindrical (2D, (4l^2-1)/(4 rho^2)) radial problem.
enum class Dim { D3, D2 };

/// How many terms of the 1/lbar energy series enter E_total. The first-order term
/// vanishes by construction of the shift, so the choices are E0, E0+E2, E0+E2+E3.
enum class TermOrder { E0_only, through_E2, through_E3 };

std::string_view dim_name(Dim d);
std::string_view term_order_name(TermOrder t);

struct SolverSettings {
    double bracket_lo = 1e-3;  ///< expansion-point search window
    double bracket_hi = 1e3;
    int scan_points = 400;     ///< log-spaced scan resolution
    double root_tol = 1e-12;   ///< relative bisection tolerance
    TermOrder term_order = TermOrder::through_E3;

    /// Throws UsageError unless 0 < lo < hi, scan_points >= 16, 0 < root_tol <= 1e-6.
    void validate() const;

    friend bool operator==(const SolverSettings&, const SolverSettings&) = default;
};

struct Problem {
    Dim dim = Dim::D3;
    int l = 0;         ///< angular momentum in 3D; |m| in 2D
    int n_radial = 0;  ///< radial quantum number (node count)
    Potential potential = Potential::builtin(Family::coulomb);
    SolverSettings solver{};

    /// Throws UsageError for negative quantum numbers, a bad solver window or a 2D
    /// donor whose m parameter disagrees with l = |m|.
    void validate() const;
};

/// One root of the expansion-point equation.
struct Candidate {
    double r0 = 0.0;
    double lbar = 0.0;
    double E0 = 0.0;
    double curvature = 0.0;  ///< numerical d^2 E0/dr^2 at fixed lbar
    bool is_minimum = false;

    friend bool operator==(const Candidate&, const Candidate&) = default;
};

struct RootSolution {
    double r0 = 0.0;
    std::vector<Candidate> candidates;
};

/// Anharmonic expansion coefficients: eps_j, delta_i and their w-scaled forms
/// e_j = eps_j / w^(j/2), d_i = delta_i / w^(i/2).
struct AnharmonicCoeffs {
    std::array<double, 4> eps{};
    std::array<double, 6> dlt{};
    std::array<double, 4> e{};
    std::array<double, 6> d{};

    friend bool operator==(const AnharmonicCoeffs&, const AnharmonicCoeffs&) = default;
};

struct Breakdown {
    double r0 = 0.0;
    double w = 0.0;
    double beta = 0.0;
    double lbar = 0.0;
    double Q = 0.0;
    double E0 = 0.0;
    double E1 = 0.0;  ///< reported as a self-check; zero up to roundoff
    double E2_over_lbar2 = 0.0;
    double E3_over_lbar3 = 0.0;
    double E_total = 0.0;
    double alpha1 = 0.0;
    double alpha2 = 0.0;
    AnharmonicCoeffs coeffs{};
    double residual = 0.0;  ///< sqrt(r0^3 V'(r0)/2) - lbar
    std::vector<Candidate> candidates;

    friend bool operator==(const Breakdown&, const Breakdown&) = default;
};

/// w = 2 sqrt(3 + r V''(r)/V'(r)).
/// Throws NoBoundStateError if V'(r) <= 0, InvalidExpansionPointError if the radicand is <= 0.
double omega(const Potential& potential, double r);

/// The shift that makes the first-order energy vanish:
///   D3: -[2 + (2n+1) w]/4      D2: -(n + 1/2) w / 2
double beta_shift(Dim dim, int n_radial, double w);

/// Scans the window for roots of sqrt(r^3 V'/2) - l + beta(w(r)), bisects each, and
/// keeps the root whose E0 = lbar^2/r^2 + V(r) is smallest among those that are minima.
RootSolution solve_r0(const Problem& problem);

AnharmonicCoeffs anharmonic_coeffs(Dim dim, double beta, double r0, double Q, const Jet& potjet, double w);

/// Second-order anharmonic aggregate.
double alpha1(int n_radial, double w, const std::array<double, 4>& e);

/// Which integer multiplies e1^2 e4 in the w^-2 group of the third-order aggregate.
/// `published` uses 24(1+n), which breaks Coulomb/oscillator exactness for n >= 1;
/// `standard` uses 24(1+2n), which restores it. Only diagnostics use `published`.
enum class Alpha2Form { standard, published };

/// Third-order anharmonic aggregate.
double alpha2(int n_radial, double w, const std::array<double, 4>& e, const std::array<double, 6>& d,
              Alpha2Form form = Alpha2Form::standard);

/// Full energy breakdown for one state.
Breakdown solve(const Problem& problem);

}  // namespace slet
