#pragma once

#include <optional>
#include <string>
#include <string_view>

#include "slet/expr.hpp"
#include "slet/jet.hpp"

namespace slet {

/// Builtin potential families. Energies are in effective Rydbergs, lengths in
/// effective Bohr radii (hbar = 2m = 1).
///   coulomb   -2/r
///   harmonic  B^2 r^2 / 4          (B > 0)
///   power     A r^nu               (A > 0, nu > 0)
///   log       A ln(r / b)          (A > 0, b > 0)
///   donor     -2/r + m gamma + gamma^2 r^2 / 4   (gamma >= 0, m integer)
enum class Family { coulomb, harmonic, power, log, donor };

std::string_view family_name(Family f);
std::optional<Family> family_from_name(std::string_view name);

/// A radial potential: either a builtin family with hand-coded derivatives or a
/// parsed expression evaluated through jet arithmetic. Parameters are bound at
/// construction; the expression tree itself is shared and immutable.
class Potential {
public:
    /// Throws UsageError when a required parameter is missing, unexpected or out of range.
    static Potential builtin(Family family, ParamMap params = {});

    /// Throws ParseError when the expression references an unbound parameter.
    static Potential expression(Expr expr, ParamMap params = {});

    /// Builtin when `text` names a family, otherwise parsed as an expression.
    static Potential from_text(std::string_view text, ParamMap params = {});

    bool is_builtin() const { return !expr_.has_value(); }
    Family family() const { return family_; }
    const ParamMap& params() const { return params_; }
    double param(const std::string& name) const;

    /// Family name for builtins, canonical expression text otherwise.
    std::string describe() const;

    /// Source text of the expression equivalent to this builtin.
    static std::string_view equivalent_expression(Family family);

    /// Taylor jet of V about r0. Throws DomainError for r0 <= 0, SingularityError on
    /// jet domain violations and NumericError if any coefficient is non-finite.
    Jet eval_jet(double r0) const;

    /// V(r) only.
    double value(double r) const;

private:
    Potential(Family f, std::optional<Expr> e, ParamMap p)
        : family_(f), expr_(std::move(e)), params_(std::move(p)) {}

    Family family_ = Family::coulomb;
    std::optional<Expr> expr_;
    ParamMap params_;
};

}  // namespace slet
