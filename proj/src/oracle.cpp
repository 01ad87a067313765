#include "slet/oracle.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "slet/errors.hpp"

namespace slet::oracle {

void OracleConfig::validate() const {
    if (!(box_radius > 0.0) || !std::isfinite(box_radius)) throw UsageError("oracle box radius must be positive");
    if (grid_points < 100) throw UsageError("oracle grid must have at least 100 points");
    if (!(eig_tol > 0.0)) throw UsageError("oracle tolerance must be positive");
}

double donor_box_radius(double gamma) {
    if (!(gamma > 0.0)) return 40.0;
    return std::clamp(12.0 / std::sqrt(gamma), 5.0, 40.0);
}

double effective_potential(Dim dim, int l, const Potential& potential, double r) {
    if (!(r > 0.0)) throw DomainError("effective potential requires r > 0");
    const double ll = l;
    const double centrifugal = dim == Dim::D3 ? ll * (ll + 1.0) / (r * r) : (4.0 * ll * ll - 1.0) / (4.0 * r * r);
    return potential.value(r) + centrifugal;
}

Tridiagonal build_operator(Dim dim, int l, const Potential& potential, double R, int N) {
    if (!(R > 0.0) || N < 2) throw UsageError("operator needs R > 0 and at least two grid points");
    Tridiagonal t;
    t.diag.resize(static_cast<std::size_t>(N));
    t.off.resize(static_cast<std::size_t>(N - 1));
    if (dim == Dim::D3) {
        const double h = R / (N + 1);
        const double kin = 1.0 / (h * h);
        for (int i = 0; i < N; ++i) t.diag[i] = 2.0 * kin + effective_potential(dim, l, potential, (i + 1) * h);
        std::fill(t.off.begin(), t.off.end(), -kin);
    } else {
        const double h = R / N;
        const double kin = 1.0 / (h * h);
        const double ll = static_cast<double>(l) * l;
        // (rho_{i+1/2} + rho_{i-1/2}) / rho_i = 2 on this grid, including the first cell
        // where rho_{1/2} = 0 carries the zero-flux condition at the origin.
        for (int i = 0; i < N; ++i) {
            const double rho = (i + 0.5) * h;
            t.diag[i] = 2.0 * kin + ll / (rho * rho) + potential.value(rho);
        }
        // Antisymmetric ghost cell puts the wall exactly on the outer face rho = R.
        t.diag[N - 1] += 2.0 * kin * R / ((N - 0.5) * h);
        for (int i = 0; i + 1 < N; ++i) {
            const double rho = (i + 0.5) * h, next = (i + 1.5) * h, face = (i + 1.0) * h;
            t.off[i] = -kin * face / std::sqrt(rho * next);
        }
    }
    for (double v : t.diag)
        if (!std::isfinite(v)) throw NumericError("discretized operator has a non-finite entry");
    return t;
}

int sturm_count(const Tridiagonal& t, double x) {
    constexpr double tiny = std::numeric_limits<double>::min() / std::numeric_limits<double>::epsilon();
    int count = 0;
    double q = 1.0;
    for (std::size_t i = 0; i < t.diag.size(); ++i) {
        const double e2 = i == 0 ? 0.0 : t.off[i - 1] * t.off[i - 1];
        q = t.diag[i] - x - (i == 0 ? 0.0 : e2 / q);
        if (q == 0.0) q = -tiny;
        if (q < 0.0) ++count;
    }
    return count;
}

double kth_eigenvalue(const Tridiagonal& t, int k, double tol) {
    const int n = static_cast<int>(t.diag.size());
    if (k < 0 || k >= n) throw UsageError("eigenvalue index out of range");
    double lo = std::numeric_limits<double>::infinity(), hi = -lo;
    for (int i = 0; i < n; ++i) {
        const double radius = (i > 0 ? std::fabs(t.off[i - 1]) : 0.0) + (i + 1 < n ? std::fabs(t.off[i]) : 0.0);
        lo = std::min(lo, t.diag[i] - radius);
        hi = std::max(hi, t.diag[i] + radius);
    }
    const double pad = 4 * std::numeric_limits<double>::epsilon() * std::max(std::fabs(lo), std::fabs(hi)) + tol;
    lo -= pad;
    hi += pad;
    if (sturm_count(t, lo) > k || sturm_count(t, hi) <= k) throw NumericError("Gershgorin bracket does not hold the eigenvalue");
    for (int it = 0; it < 500; ++it) {
        const double mid = 0.5 * (lo + hi);
        if (hi - lo <= tol || mid == lo || mid == hi) break;
        if (sturm_count(t, mid) > k)
            hi = mid;
        else
            lo = mid;
    }
    return 0.5 * (lo + hi);
}

namespace {

double solve_on(Dim dim, int l, int k, const Potential& pot, double R, int N, double tol) {
    const Tridiagonal t = build_operator(dim, l, pot, R, N);
    return kth_eigenvalue(t, k, tol);
}

// Grid size on the box radius `scale * R` that keeps the spacing of (R, N).
int same_spacing(Dim dim, int N, double scale) {
    if (dim == Dim::D3) return static_cast<int>(std::lround(scale * (N + 1.0))) - 1;
    return static_cast<int>(std::lround(scale * N));
}

}  // namespace

OracleResult eigenvalue(Dim dim, int l, int k, const Potential& potential, const OracleConfig& config) {
    config.validate();
    if (l < 0) throw UsageError("l must be a non-negative integer");
    if (k < 0) throw UsageError("eigenvalue index must be non-negative");

    // Bisect well below eig_tol so the extrapolated value is not limited by the bracket width.
    auto tol_for = [&](double guess) { return std::min(config.eig_tol / 4.0, 1e-13 * std::max(1.0, std::fabs(guess))); };

    const double R = config.box_radius;
    const int N = config.grid_points;
    OracleResult out;
    out.k = k;
    const double rough = solve_on(dim, l, k, potential, R, N, config.eig_tol / 4.0);
    const double tol = tol_for(rough);
    out.energy = solve_on(dim, l, k, potential, R, N, tol);
    if (!config.convergence_check) {
        out.energy_refined = out.energy_extrapolated = out.energy;
        return out;
    }
    const int N2 = dim == Dim::D3 ? 2 * N + 1 : 2 * N;  // exact halving of the spacing
    out.energy_refined = solve_on(dim, l, k, potential, R, N2, tol);
    out.energy_extrapolated = (4.0 * out.energy_refined - out.energy) / 3.0;
    out.box_shift = solve_on(dim, l, k, potential, 1.5 * R, same_spacing(dim, N, 1.5), tol) - out.energy;
    out.converged = std::fabs(out.energy_refined - out.energy) < config.eig_tol && std::fabs(out.box_shift) < config.eig_tol;
    return out;
}

}  // namespace slet::oracle
