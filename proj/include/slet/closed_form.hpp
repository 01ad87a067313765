#pragma once

#include <string>
#include <string_view>
#include <vector>

namespace slet::closed_form {

enum class FormFamily { power, log, coulomb, harmonic, donor_zero_field, landau };

std::string_view form_family_name(FormFamily f);

/// Marker carried by power-law results: the printed second/third-order closed
/// forms disagree with the general anharmonic series (nonzero at nu = 2, where
/// the oscillator spectrum is exact at leading order).
inline constexpr std::string_view kHigherOrderAsPrinted =
    "higher-order closed form as printed; inconsistent with the general series";

struct ClosedFormResult {
    FormFamily family = FormFamily::power;
    double r0 = 0.0;
    double lbar = 0.0;
    double w = 0.0;
    double E0 = 0.0;
    double E2_over_lbar2 = 0.0;
    double E3_over_lbar3 = 0.0;
    double E_total = 0.0;
    std::vector<std::string> flags;
};

/// V = A r^nu in 3D. Requires A > 0, nu > 0.
ClosedFormResult power_law(double A, double nu, int l, int n_r);

/// V = A ln(r/b) in 3D. Requires A > 0, b > 0.
ClosedFormResult logarithmic(double A, double b, int l, int n_r);

/// -1/(n_r + l + 1)^2 for V = -2/r.
double coulomb3d(int l, int n_r);

/// B (2 n_r + l + 3/2) for V = B^2 r^2 / 4.
double oscillator3d(double B, int l, int n_r);

/// Zero-field 2D donor level. `published` is -(n + |m| + 1)^-2; `derived` is
/// -(n + |m| + 1/2)^-2, what the 2D expansion and a direct numerical solve give.
struct DonorZeroField {
    double published = 0.0;
    double derived = 0.0;
};
DonorZeroField donor_zero_field(int n_rho, int abs_m);

/// gamma (2 n + |m| + m + 1).
double landau(double gamma, int n_rho, int m);

}  // namespace slet::closed_form
