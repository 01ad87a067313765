#include "slet/potential.hpp"

#include <cmath>
#include <initializer_list>

#include "slet/errors.hpp"

namespace slet {

std::string_view family_name(Family f) {
    switch (f) {
        case Family::coulomb: return "coulomb";
        case Family::harmonic: return "harmonic";
        case Family::power: return "power";
        case Family::log: return "log";
        case Family::donor: return "donor";
    }
    return "?";
}

std::optional<Family> family_from_name(std::string_view name) {
    for (Family f : {Family::coulomb, Family::harmonic, Family::power, Family::log, Family::donor})
        if (family_name(f) == name) return f;
    return std::nullopt;
}

std::string_view Potential::equivalent_expression(Family family) {
    switch (family) {
        case Family::coulomb: return "-2/r";
        case Family::harmonic: return "B^2*r^2/4";
        case Family::power: return "A*r^nu";
        case Family::log: return "A*ln(r/b)";
        case Family::donor: return "-2/r + m*gamma + gamma^2*r^2/4";
    }
    return "";
}

namespace {

void require_exactly(Family f, const ParamMap& params, std::initializer_list<const char*> names) {
    for (const char* n : names)
        if (!params.count(n))
            throw UsageError(std::string(family_name(f)) + " potential requires parameter '" + n + "'");
    for (const auto& [k, v] : params) {
        bool known = false;
        for (const char* n : names) known = known || k == n;
        if (!known) throw UsageError(std::string(family_name(f)) + " potential has no parameter '" + k + "'");
        if (!std::isfinite(v)) throw UsageError("parameter '" + k + "' must be finite");
    }
}

void require(bool ok, const std::string& msg) {
    if (!ok) throw UsageError(msg);
}

Jet coulomb_jet(double r) {
    Jet::Coeffs c{};
    double inv = 1.0 / r, p = inv, sign = 1.0;
    for (int k = 0; k <= Jet::kOrder; ++k) {
        c[k] = -2.0 * sign * p;
        p *= inv;
        sign = -sign;
    }
    return Jet(c);
}

Jet parabola_jet(double r, double curvature) {
    // curvature * r^2
    Jet::Coeffs c{};
    c[0] = curvature * r * r;
    c[1] = 2.0 * curvature * r;
    c[2] = curvature;
    return Jet(c);
}

Jet power_jet(double r, double A, double nu) {
    Jet::Coeffs c{};
    double binom = 1.0;  // nu choose k
    for (int k = 0; k <= Jet::kOrder; ++k) {
        c[k] = A * binom * std::pow(r, nu - k);
        binom *= (nu - k) / (k + 1);
    }
    return Jet(c);
}

Jet log_jet(double r, double A, double b) {
    Jet::Coeffs c{};
    c[0] = A * std::log(r / b);
    double p = 1.0;
    for (int k = 1; k <= Jet::kOrder; ++k) {
        p /= r;
        c[k] = A * ((k % 2) ? 1.0 : -1.0) * p / k;
    }
    return Jet(c);
}

}  // namespace

Potential Potential::builtin(Family family, ParamMap params) {
    switch (family) {
        case Family::coulomb: require_exactly(family, params, {}); break;
        case Family::harmonic:
            require_exactly(family, params, {"B"});
            require(params.at("B") > 0.0, "harmonic potential requires B > 0");
            break;
        case Family::power:
            require_exactly(family, params, {"A", "nu"});
            require(params.at("A") > 0.0, "power potential requires A > 0");
            require(params.at("nu") > 0.0, "power potential requires nu > 0");
            break;
        case Family::log:
            require_exactly(family, params, {"A", "b"});
            require(params.at("A") > 0.0, "log potential requires A > 0");
            require(params.at("b") > 0.0, "log potential requires b > 0");
            break;
        case Family::donor: {
            require_exactly(family, params, {"gamma", "m"});
            require(params.at("gamma") >= 0.0, "donor potential requires gamma >= 0");
            const double m = params.at("m");
            require(m == std::trunc(m), "donor potential requires integer m");
            break;
        }
    }
    return Potential(family, std::nullopt, std::move(params));
}

Potential Potential::expression(Expr expr, ParamMap params) {
    expr.check_bound(params);
    return Potential(Family::coulomb, std::move(expr), std::move(params));
}

Potential Potential::from_text(std::string_view text, ParamMap params) {
    if (auto f = family_from_name(text)) return builtin(*f, std::move(params));
    return expression(Expr::parse(text), std::move(params));
}

double Potential::param(const std::string& name) const {
    auto it = params_.find(name);
    if (it == params_.end()) throw UsageError("potential has no parameter '" + name + "'");
    return it->second;
}

std::string Potential::describe() const {
    if (expr_) return expr_->to_string();
    return std::string(family_name(family_));
}

Jet Potential::eval_jet(double r0) const {
    const Jet r = Jet::seed(r0);
    Jet v;
    if (expr_) {
        v = expr_->eval(r, params_);
    } else {
        switch (family_) {
            case Family::coulomb: v = coulomb_jet(r0); break;
            case Family::harmonic: {
                const double B = params_.at("B");
                v = parabola_jet(r0, B * B / 4.0);
                break;
            }
            case Family::power: v = power_jet(r0, params_.at("A"), params_.at("nu")); break;
            case Family::log: v = log_jet(r0, params_.at("A"), params_.at("b")); break;
            case Family::donor: {
                const double g = params_.at("gamma");
                v = coulomb_jet(r0) + parabola_jet(r0, g * g / 4.0) + params_.at("m") * g;
                break;
            }
        }
    }
    if (!v.all_finite()) throw NumericError("potential jet is not finite at r = " + std::to_string(r0));
    return v;
}

double Potential::value(double r) const {
    if (!(r > 0.0)) throw DomainError("potential evaluated at non-positive radius");
    if (expr_) return expr_->eval(r, params_);
    switch (family_) {
        case Family::coulomb: return -2.0 / r;
        case Family::harmonic: {
            const double B = params_.at("B");
            return B * B * r * r / 4.0;
        }
        case Family::power: return params_.at("A") * std::pow(r, params_.at("nu"));
        case Family::log: return params_.at("A") * std::log(r / params_.at("b"));
        case Family::donor: {
            const double g = params_.at("gamma");
            return -2.0 / r + params_.at("m") * g + g * g * r * r / 4.0;
        }
    }
    return 0.0;
}

}  // namespace slet
