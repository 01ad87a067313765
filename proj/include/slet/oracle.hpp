#pragma once

#include <vector>

#include "slet/engine.hpp"
#include "slet/potential.hpp"

namespace slet::oracle {

struct OracleConfig {
    double box_radius = 40.0;  ///< effective Bohr radii
    int grid_points = 4000;
    double eig_tol = 1e-5;     ///< effective Rydbergs
    bool convergence_check = true;

    /// Throws UsageError unless R > 0, N >= 100, eig_tol > 0.
    void validate() const;
};

/// Box radius used for donor states at field gamma: 12/sqrt(gamma) clamped to [5, 40].
double donor_box_radius(double gamma);

struct OracleResult {
    int k = 0;
    double energy = 0.0;               ///< grid N, box R
    double energy_refined = 0.0;       ///< grid 2N, box R
    double energy_extrapolated = 0.0;  ///< Richardson (4 refined - energy)/3
    double box_shift = 0.0;            ///< energy(1.5R, same spacing) - energy
    bool converged = false;            ///< |refined - energy| < tol and |box_shift| < tol

    friend bool operator==(const OracleResult&, const OracleResult&) = default;
};

/// Symmetric tridiagonal matrix: diag[0..n), off[0..n-1).
struct Tridiagonal {
    std::vector<double> diag;
    std::vector<double> off;
};

/// V(r) plus the centrifugal term: l(l+1)/r^2 in 3D, (4l^2-1)/(4r^2) in 2D.
double effective_potential(Dim dim, int l, const Potential& potential, double r);

/// Discretized radial Hamiltonian on a box of radius R with N interior points.
///
/// 3D: three-point second difference for u(r) on r_i = i R/(N+1), Dirichlet at 0 and R.
/// 2D: the u = sqrt(rho) R form is singular at the origin for l = 0 and a vertex grid
/// converges only logarithmically there, so the 2D operator is the flux-conservative
/// cell-centred discretization of -(1/rho)(rho R')' + (l^2/rho^2 + V) R on
/// rho_i = (i - 1/2) h, h = R/N, wall on the face rho = R, symmetrized by the
/// rho_i mass weights.
/// Both share the spectrum of the continuous radial problem as N grows.
Tridiagonal build_operator(Dim dim, int l, const Potential& potential, double box_radius, int grid_points);

/// Number of eigenvalues strictly below x, from the signs of the LDL^T pivots.
int sturm_count(const Tridiagonal& t, double x);

/// k-th smallest eigenvalue (k from 0) by bisection on the Sturm count inside the
/// Gershgorin interval, to absolute tolerance `tol`.
double kth_eigenvalue(const Tridiagonal& t, int k, double tol);

/// k-th eigenvalue for fixed l with grid-doubling and box-enlargement evidence.
/// k equals the radial quantum number for single-well problems.
OracleResult eigenvalue(Dim dim, int l, int k, const Potential& potential, const OracleConfig& config = {});

}  // namespace slet::oracle
