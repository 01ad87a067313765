#include "slet/jet.hpp"

#include <cmath>
#include <sstream>

#include "slet/errors.hpp"

namespace slet {

namespace {

constexpr int N = Jet::kOrder;

[[noreturn]] void singular(const char* fn, double base) {
    std::ostringstream os;
    os.precision(17);
    os << fn << ": argument " << base << " outside domain";
    throw SingularityError(os.str());
}

}  // namespace

Jet Jet::seed(double r0) {
    if (!std::isfinite(r0) || r0 <= 0.0) {
        std::ostringstream os;
        os.precision(17);
        os << "expansion point must be positive and finite, got " << r0;
        throw DomainError(os.str());
    }
    Coeffs c{};
    c[0] = r0;
    c[1] = 1.0;
    return Jet(c);
}

double Jet::derivative(int k) const {
    if (k < 0 || k > N) throw UsageError("derivative order must be in 0..6, got " + std::to_string(k));
    double fact = 1.0;
    for (int i = 2; i <= k; ++i) fact *= i;
    return fact * c_[k];
}

bool Jet::is_constant() const {
    for (int k = 1; k <= N; ++k)
        if (c_[k] != 0.0) return false;
    return true;
}

bool Jet::all_finite() const {
    for (double v : c_)
        if (!std::isfinite(v)) return false;
    return true;
}

Jet Jet::operator-() const {
    Jet r = *this;
    for (double& v : r.c_) v = -v;
    return r;
}

Jet& Jet::operator+=(const Jet& o) {
    for (int k = 0; k <= N; ++k) c_[k] += o.c_[k];
    return *this;
}

Jet& Jet::operator-=(const Jet& o) {
    for (int k = 0; k <= N; ++k) c_[k] -= o.c_[k];
    return *this;
}

Jet& Jet::operator*=(const Jet& o) {
    Coeffs r{};
    for (int k = 0; k <= N; ++k)
        for (int j = 0; j <= k; ++j) r[k] += c_[j] * o.c_[k - j];
    c_ = r;
    return *this;
}

Jet& Jet::operator/=(const Jet& o) {
    const double b0 = o.c_[0];
    if (b0 == 0.0) throw SingularityError("division: divisor value is zero");
    Coeffs q{};
    for (int k = 0; k <= N; ++k) {
        double s = c_[k];
        for (int j = 1; j <= k; ++j) s -= o.c_[j] * q[k - j];
        q[k] = s / b0;
    }
    c_ = q;
    return *this;
}

Jet operator*(Jet a, double s) {
    for (double& v : a.c_) v *= s;
    return a;
}

Jet operator/(Jet a, double s) {
    if (s == 0.0) throw SingularityError("division: divisor value is zero");
    for (double& v : a.c_) v /= s;
    return a;
}

Jet exp(const Jet& a) {
    Jet::Coeffs e{};
    e[0] = std::exp(a[0]);
    for (int k = 1; k <= N; ++k) {
        double s = 0.0;
        for (int j = 1; j <= k; ++j) s += j * a[j] * e[k - j];
        e[k] = s / k;
    }
    return Jet(e);
}

Jet log(const Jet& a) {
    if (!(a[0] > 0.0)) singular("ln", a[0]);
    Jet::Coeffs l{};
    l[0] = std::log(a[0]);
    for (int k = 1; k <= N; ++k) {
        double s = 0.0;
        for (int j = 1; j < k; ++j) s += j * l[j] * a[k - j];
        l[k] = (a[k] - s / k) / a[0];
    }
    return Jet(l);
}

Jet sqrt(const Jet& a) {
    if (!(a[0] > 0.0)) singular("sqrt", a[0]);
    Jet::Coeffs s{};
    s[0] = std::sqrt(a[0]);
    for (int k = 1; k <= N; ++k) {
        double acc = a[k];
        for (int j = 1; j < k; ++j) acc -= s[j] * s[k - j];
        s[k] = acc / (2.0 * s[0]);
    }
    return Jet(s);
}

namespace {

void sincos(const Jet& a, Jet::Coeffs& s, Jet::Coeffs& c) {
    s[0] = std::sin(a[0]);
    c[0] = std::cos(a[0]);
    for (int k = 1; k <= N; ++k) {
        double ss = 0.0, cc = 0.0;
        for (int j = 1; j <= k; ++j) {
            ss += j * a[j] * c[k - j];
            cc += j * a[j] * s[k - j];
        }
        s[k] = ss / k;
        c[k] = -cc / k;
    }
}

}  // namespace

Jet sin(const Jet& a) {
    Jet::Coeffs s{}, c{};
    sincos(a, s, c);
    return Jet(s);
}

Jet cos(const Jet& a) {
    Jet::Coeffs s{}, c{};
    sincos(a, s, c);
    return Jet(c);
}

Jet pow(const Jet& a, int n) {
    if (n < 0) {
        if (a[0] == 0.0) singular("pow", a[0]);
        return Jet::constant(1.0) / pow(a, -n);
    }
    Jet result = Jet::constant(1.0);
    Jet base = a;
    for (unsigned e = static_cast<unsigned>(n); e != 0; e >>= 1) {
        if (e & 1U) result *= base;
        if (e > 1) base *= base;
    }
    return result;
}

Jet pow(const Jet& a, double p) {
    if (std::isfinite(p) && p == std::trunc(p) && std::fabs(p) <= 1024.0) return pow(a, static_cast<int>(p));
    if (!(a[0] > 0.0)) singular("pow", a[0]);
    return exp(log(a) * p);
}

Jet pow(const Jet& a, const Jet& b) {
    if (b.is_constant()) return pow(a, b[0]);
    if (!(a[0] > 0.0)) singular("pow", a[0]);
    return exp(b * log(a));
}

}  // namespace slet
