#include "slet/closed_form.hpp"

#include <cmath>
#include <cstdlib>

#include "slet/errors.hpp"

namespace slet::closed_form {

std::string_view form_family_name(FormFamily f) {
    switch (f) {
        case FormFamily::power: return "power";
        case FormFamily::log: return "log";
        case FormFamily::coulomb: return "coulomb";
        case FormFamily::harmonic: return "harmonic";
        case FormFamily::donor_zero_field: return "donor_zero_field";
        case FormFamily::landau: return "landau";
    }
    return "?";
}

namespace {

void check_quantum_numbers(int l, int n) {
    if (l < 0 || n < 0) throw UsageError("quantum numbers must be non-negative");
}

}  // namespace

ClosedFormResult power_law(double A, double nu, int l, int n_r) {
    if (!(A > 0.0) || !(nu > 0.0)) throw UsageError("power_law requires A > 0 and nu > 0");
    check_quantum_numbers(l, n_r);
    const double n = n_r;
    const double root = std::sqrt(nu + 2.0);

    ClosedFormResult r;
    r.family = FormFamily::power;
    r.w = 2.0 * root;
    r.lbar = ((2.0 * n + 1.0) * root + (2.0 * l + 1.0)) / 2.0;
    r.r0 = std::pow(2.0 * r.lbar * r.lbar / (A * nu), 1.0 / (nu + 2.0));

    const double coupling = std::pow(2.0 * A * nu, 2.0 / (nu + 2.0));
    const double two_l = 2.0 * r.lbar;
    const double lscale = std::pow(two_l, (nu - 2.0) / (nu + 2.0));
    r.E0 = coupling * (4.0 * r.lbar) * (nu + 2.0) / (8.0 * nu) * lscale;
    r.E2_over_lbar2 = -coupling * 2.0 * (nu + 1.0) * (nu + 2.0) / (144.0 * two_l) * lscale;
    const double poly = (nu + 1.0) * (nu - 2.0) + (7.0 * nu * nu - 31.0 * nu - 62.0) * n +
                        (5.0 * nu * nu - 29.0 * nu - 58.0) * (3.0 * n * n + 2.0 * n * n * n);
    r.E3_over_lbar3 = lscale * coupling * (2.0 * (nu + 1.0) * (nu - 2.0) / (1728.0 * two_l * two_l * root)) * poly;
    r.E_total = r.E0 + r.E2_over_lbar2 + r.E3_over_lbar3;
    r.flags.emplace_back(kHigherOrderAsPrinted);
    return r;
}

ClosedFormResult logarithmic(double A, double b, int l, int n_r) {
    if (!(A > 0.0) || !(b > 0.0)) throw UsageError("logarithmic requires A > 0 and b > 0");
    check_quantum_numbers(l, n_r);
    const double n = n_r;
    const double s2 = std::sqrt(2.0);

    ClosedFormResult r;
    r.family = FormFamily::log;
    r.w = 2.0 * s2;
    r.lbar = ((2.0 * l + 1.0) + (2.0 * n + 1.0) * s2) / 2.0;
    r.r0 = r.lbar * std::sqrt(2.0 / A);
    r.E0 = A * (std::log(r.lbar / (b * std::sqrt(A / 2.0))) + 0.5);
    r.E2_over_lbar2 = A / (72.0 * r.lbar * r.lbar) * (6.0 * n * n + 6.0 * n + 1.0);
    r.E3_over_lbar3 = A / (864.0 * r.lbar * r.lbar * r.lbar * s2) * (58.0 * n * n * n + 87.0 * n * n + 31.0 * n + 1.0);
    r.E_total = r.E0 + r.E2_over_lbar2 + r.E3_over_lbar3;
    return r;
}

double coulomb3d(int l, int n_r) {
    check_quantum_numbers(l, n_r);
    const double k = n_r + l + 1.0;
    return -1.0 / (k * k);
}

double oscillator3d(double B, int l, int n_r) {
    if (!(B > 0.0)) throw UsageError("oscillator3d requires B > 0");
    check_quantum_numbers(l, n_r);
    return B * (2.0 * n_r + l + 1.5);
}

DonorZeroField donor_zero_field(int n_rho, int abs_m) {
    check_quantum_numbers(abs_m, n_rho);
    const double k = n_rho + abs_m;
    return {-1.0 / ((k + 1.0) * (k + 1.0)), -1.0 / ((k + 0.5) * (k + 0.5))};
}

double landau(double gamma, int n_rho, int m) {
    if (!(gamma >= 0.0)) throw UsageError("landau requires gamma >= 0");
    if (n_rho < 0) throw UsageError("quantum numbers must be non-negative");
    return gamma * (2.0 * n_rho + std::abs(m) + m + 1.0);
}

}  // namespace slet::closed_form
