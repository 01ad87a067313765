#include "slet/engine.hpp"

#include <cmath>
#include <optional>
#include <sstream>

#include "slet/errors.hpp"

namespace slet {

std::string_view dim_name(Dim d) { return d == Dim::D3 ? "3" : "2"; }

std::string_view term_order_name(TermOrder t) {
    switch (t) {
        case TermOrder::E0_only: return "0";
        case TermOrder::through_E2: return "2";
        case TermOrder::through_E3: return "3";
    }
    return "?";
}

void SolverSettings::validate() const {
    if (!(bracket_lo > 0.0 && bracket_lo < bracket_hi && std::isfinite(bracket_hi)))
        throw UsageError("solver window must satisfy 0 < bracket_lo < bracket_hi");
    if (scan_points < 16) throw UsageError("scan_points must be at least 16");
    if (!(root_tol > 0.0 && root_tol <= 1e-6)) throw UsageError("root_tol must lie in (0, 1e-6]");
}

void Problem::validate() const {
    if (l < 0) throw UsageError("l must be a non-negative integer");
    if (n_radial < 0) throw UsageError("n_radial must be a non-negative integer");
    solver.validate();
    if (dim == Dim::D2 && potential.is_builtin() && potential.family() == Family::donor) {
        const double m = potential.param("m");
        if (std::fabs(m) != static_cast<double>(l))
            throw UsageError("2D donor requires l = |m| (l = " + std::to_string(l) + ", m = " +
                             std::to_string(static_cast<long>(m)) + ")");
    }
}

namespace {

struct Local {
    double w;
    double beta;
    double F;  // sqrt(r^3 V'/2) - l + beta
};

double omega_from(double r, double v1, double v2) {
    if (!(v1 > 0.0)) {
        std::ostringstream os;
        os.precision(17);
        os << "V'(r) = " << v1 << " <= 0 at r = " << r << "; no bound state expansion there";
        throw NoBoundStateError(os.str());
    }
    const double rad = 3.0 + r * v2 / v1;
    if (!(rad > 0.0)) {
        std::ostringstream os;
        os.precision(17);
        os << "3 + r V''/V' = " << rad << " <= 0 at r = " << r;
        throw InvalidExpansionPointError(os.str());
    }
    return 2.0 * std::sqrt(rad);
}

Local local_at(const Problem& p, double r) {
    const Jet v = p.potential.eval_jet(r);
    const double v1 = v.derivative(1);
    const double w = omega_from(r, v1, v.derivative(2));
    const double beta = beta_shift(p.dim, p.n_radial, w);
    return {w, beta, std::sqrt(r * r * r * v1 / 2.0) - p.l + beta};
}

enum class Failure { none, no_bound_state, invalid_point, other };

std::optional<Local> try_local(const Problem& p, double r, Failure& why) {
    try {
        why = Failure::none;
        return local_at(p, r);
    } catch (const NoBoundStateError&) {
        why = Failure::no_bound_state;
    } catch (const InvalidExpansionPointError&) {
        why = Failure::invalid_point;
    } catch (const Error&) {
        why = Failure::other;
    }
    return std::nullopt;
}

// Bisection on [lo, hi] where F changes sign; returns the sampled point with smallest |F|.
std::optional<double> bisect(const Problem& p, double lo, double flo, double hi, double tol) {
    double best = lo;
    double best_abs = std::fabs(flo);
    Failure why;
    for (int it = 0; it < 300 && (hi - lo) > tol * 0.5 * (hi + lo); ++it) {
        const double mid = 0.5 * (lo + hi);
        auto m = try_local(p, mid, why);
        if (!m) return std::nullopt;
        if (std::fabs(m->F) < best_abs) {
            best = mid;
            best_abs = std::fabs(m->F);
        }
        if (m->F == 0.0) return mid;
        if ((m->F < 0.0) == (flo < 0.0)) {
            lo = mid;
            flo = m->F;
        } else {
            hi = mid;
        }
    }
    const double mid = 0.5 * (lo + hi);
    if (auto m = try_local(p, mid, why); m && std::fabs(m->F) <= best_abs) return mid;
    return best;
}

Candidate make_candidate(const Problem& p, double r0) {
    Candidate c;
    c.r0 = r0;
    c.lbar = p.l - local_at(p, r0).beta;
    const double q = c.lbar * c.lbar;
    auto E0 = [&](double r) { return q / (r * r) + p.potential.value(r); };
    c.E0 = E0(r0);
    const double h = 1e-4 * r0;
    c.curvature = (E0(r0 + h) - 2.0 * c.E0 + E0(r0 - h)) / (h * h);
    c.is_minimum = c.lbar > 0.0 && c.curvature > 0.0;
    return c;
}

}  // namespace

double omega(const Potential& potential, double r) {
    const Jet v = potential.eval_jet(r);
    return omega_from(r, v.derivative(1), v.derivative(2));
}

double beta_shift(Dim dim, int n_radial, double w) {
    if (!(w > 0.0)) throw UsageError("beta_shift requires w > 0");
    if (n_radial < 0) throw UsageError("n_radial must be a non-negative integer");
    const double n = n_radial;
    if (dim == Dim::D3) return -(2.0 + (2.0 * n + 1.0) * w) / 4.0;
    return -(n + 0.5) * w / 2.0;
}

RootSolution solve_r0(const Problem& p) {
    p.validate();
    const SolverSettings& s = p.solver;
    const double ratio = std::log(s.bracket_hi / s.bracket_lo);

    std::vector<double> grid(static_cast<std::size_t>(s.scan_points));
    for (int i = 0; i < s.scan_points; ++i)
        grid[i] = s.bracket_lo * std::exp(ratio * i / (s.scan_points - 1));
    grid.back() = s.bracket_hi;

    std::vector<double> roots;
    int valid = 0, no_bound = 0, invalid = 0;
    std::optional<Local> prev;
    double prev_r = 0.0;
    for (double r : grid) {
        Failure why;
        auto cur = try_local(p, r, why);
        if (!cur) {
            no_bound += why == Failure::no_bound_state;
            invalid += why == Failure::invalid_point;
            prev.reset();
            continue;
        }
        ++valid;
        if (cur->F == 0.0) {
            roots.push_back(r);
        } else if (prev && prev->F != 0.0 && (prev->F < 0.0) != (cur->F < 0.0)) {
            if (auto root = bisect(p, prev_r, prev->F, r, s.root_tol)) roots.push_back(*root);
        }
        prev = cur;
        prev_r = r;
    }

    if (valid == 0) {
        if (invalid > 0 && no_bound == 0)
            throw InvalidExpansionPointError("oscillator frequency undefined on the whole search window");
        if (no_bound > 0 && invalid == 0)
            throw NoBoundStateError("V'(r) <= 0 on the whole search window; no attractive expansion point");
        throw InvalidExpansionPointError("no admissible expansion point on the search window");
    }
    if (roots.empty()) {
        std::ostringstream os;
        os << "no root of the expansion-point equation on [" << s.bracket_lo << ", " << s.bracket_hi
           << "]; try widening the bracket";
        throw NoRootError(os.str());
    }

    RootSolution out;
    const Candidate* best = nullptr;
    for (double r : roots) out.candidates.push_back(make_candidate(p, r));
    for (const auto& c : out.candidates)
        if (c.is_minimum && (!best || c.E0 < best->E0)) best = &c;
    if (!best) throw NoMinimumError("every root of the expansion-point equation fails the minimum test");
    out.r0 = best->r0;
    return out;
}

AnharmonicCoeffs anharmonic_coeffs(Dim dim, double beta, double r0, double Q, const Jet& v, double w) {
    if (!(Q > 0.0) || !(w > 0.0)) throw UsageError("anharmonic_coeffs requires Q > 0 and w > 0");
    AnharmonicCoeffs c;
    // r0^(k+2) V^(k)(r0) / (k! Q) = r0^(k+2) a_k / Q
    auto tail = [&](int k) { return std::pow(r0, k + 2) * v[k] / Q; };
    if (dim == Dim::D3) {
        const double b1 = 2.0 * beta + 1.0;
        const double bb = beta * (1.0 + beta);
        c.eps = {-2.0 * b1, 3.0 * b1, -4.0 + tail(3), 5.0 + tail(4)};
        c.dlt = {-2.0 * bb, 3.0 * bb, -4.0 * b1, 5.0 * b1, -6.0 + tail(5), 7.0 + tail(6)};
    } else {
        const double bq = beta * beta - 0.25;
        c.eps = {-4.0 * beta, 6.0 * beta, -4.0 + tail(3), 5.0 + tail(4)};
        c.dlt = {-2.0 * bq, 3.0 * bq, -8.0 * beta, 10.0 * beta, -6.0 + tail(5), 7.0 + tail(6)};
    }
    for (int j = 0; j < 4; ++j) c.e[j] = c.eps[j] / std::pow(w, (j + 1) / 2.0);
    for (int i = 0; i < 6; ++i) c.d[i] = c.dlt[i] / std::pow(w, (i + 1) / 2.0);
    return c;
}

double alpha1(int n_radial, double w, const std::array<double, 4>& e) {
    const double n = n_radial;
    const auto [e1, e2, e3, e4] = e;
    return (1 + 2 * n) * e2 + 3 * (1 + 2 * n + 2 * n * n) * e4 -
           (e1 * e1 + 6 * (1 + 2 * n) * e1 * e3 + (11 + 30 * n + 30 * n * n) * e3 * e3) / w;
}

double alpha2(int n_radial, double w, const std::array<double, 4>& e, const std::array<double, 6>& d,
              Alpha2Form form) {
    const double n = n_radial, n2 = n * n, n3 = n2 * n;
    const auto [e1, e2, e3, e4] = e;
    const auto [d1, d2, d3, d4, d5, d6] = d;
    const double c_e1e1e4 = form == Alpha2Form::standard ? 24 * (1 + 2 * n) : 24 * (1 + n);

    const double g0 = (1 + 2 * n) * d2 + 3 * (1 + 2 * n + 2 * n2) * d4 + 5 * (3 + 8 * n + 6 * n2 + 4 * n3) * d6;
    const double g1 = (1 + 2 * n) * e2 * e2 + 12 * (1 + 2 * n + 2 * n2) * e2 * e4 + 2 * e1 * d1 +
                      2 * (21 + 59 * n + 51 * n2 + 34 * n3) * e4 * e4 + 6 * (1 + 2 * n) * e1 * d3 +
                      30 * (1 + 2 * n + 2 * n2) * e1 * d5 + 6 * (1 + 2 * n) * e3 * d1 +
                      2 * (11 + 30 * n + 30 * n2) * e3 * d3 + 10 * (13 + 40 * n + 42 * n2 + 28 * n3) * e3 * d5;
    const double g2 = 4 * e1 * e1 * e2 + 36 * (1 + 2 * n) * e1 * e2 * e3 + 8 * (11 + 30 * n + 30 * n2) * e2 * e3 * e3 +
                      c_e1e1e4 * e1 * e1 * e4 + 8 * (31 + 78 * n + 78 * n2) * e1 * e3 * e4 +
                      12 * (57 + 189 * n + 225 * n2 + 150 * n3) * e3 * e3 * e4;
    const double g3 = 8 * e1 * e1 * e1 * e3 + 108 * (1 + 2 * n) * e1 * e1 * e3 * e3 +
                      48 * (11 + 30 * n + 30 * n2) * e1 * e3 * e3 * e3 +
                      30 * (31 + 109 * n + 141 * n2 + 94 * n3) * e3 * e3 * e3 * e3;
    return g0 - g1 / w + g2 / (w * w) - g3 / (w * w * w);
}

Breakdown solve(const Problem& p) {
    RootSolution roots = solve_r0(p);
    Breakdown b;
    b.r0 = roots.r0;
    b.candidates = std::move(roots.candidates);

    const Jet v = p.potential.eval_jet(b.r0);
    b.w = omega_from(b.r0, v.derivative(1), v.derivative(2));
    b.beta = beta_shift(p.dim, p.n_radial, b.w);
    b.lbar = p.l - b.beta;
    if (!(b.lbar > 0.0)) throw NumericError("shifted angular momentum is not positive");
    b.Q = b.lbar * b.lbar;
    b.residual = std::sqrt(b.r0 * b.r0 * b.r0 * v.derivative(1) / 2.0) - b.lbar;

    const double n = p.n_radial;
    const double scale = b.Q / (b.r0 * b.r0);
    b.E0 = scale + v.value();
    const double first = p.dim == Dim::D3 ? 2.0 * b.beta + 1.0 : 2.0 * b.beta;
    b.E1 = scale * (first + (n + 0.5) * b.w);

    b.coeffs = anharmonic_coeffs(p.dim, b.beta, b.r0, b.Q, v, b.w);
    b.alpha1 = alpha1(p.n_radial, b.w, b.coeffs.e);
    b.alpha2 = alpha2(p.n_radial, b.w, b.coeffs.e, b.coeffs.d);

    const double centrifugal = p.dim == Dim::D3 ? b.beta * (1.0 + b.beta) : b.beta * b.beta - 0.25;
    b.E2_over_lbar2 = (centrifugal + b.alpha1) / (b.r0 * b.r0);
    b.E3_over_lbar3 = b.alpha2 / (b.lbar * b.r0 * b.r0);

    b.E_total = b.E0;
    if (p.solver.term_order != TermOrder::E0_only) b.E_total += b.E2_over_lbar2;
    if (p.solver.term_order == TermOrder::through_E3) b.E_total += b.E3_over_lbar3;
    return b;
}

}  // namespace slet
