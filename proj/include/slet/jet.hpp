#pragma once

#include <array>
#include <cstddef>

namespace slet {

/// Truncated Taylor series f(r0 + h) = sum_k a_k h^k carried to order 6.
///
/// Six derivatives are the most any term of the energy series consumes, so the
/// order is fixed at compile time. All operations are pure and return new values.
class Jet {
public:
    static constexpr int kOrder = 6;
    static constexpr std::size_t kSize = kOrder + 1;
    using Coeffs = std::array<double, kSize>;

    constexpr Jet() = default;
    constexpr explicit Jet(const Coeffs& c) : c_(c) {}

    /// Constant function with value v.
    static constexpr Jet constant(double v) {
        Coeffs c{};
        c[0] = v;
        return Jet(c);
    }

    /// The independent radial variable expanded about r0; throws DomainError unless r0 > 0.
    static Jet seed(double r0);

    constexpr double operator[](std::size_t k) const { return c_[k]; }
    constexpr const Coeffs& coeffs() const { return c_; }
    constexpr double value() const { return c_[0]; }

    /// k-th derivative at the expansion point, k! * a_k. Throws UsageError for k outside 0..6.
    double derivative(int k) const;

    bool is_constant() const;
    bool all_finite() const;

    Jet operator-() const;
    Jet& operator+=(const Jet& o);
    Jet& operator-=(const Jet& o);
    Jet& operator*=(const Jet& o);
    Jet& operator/=(const Jet& o);

    friend Jet operator+(Jet a, const Jet& b) { return a += b; }
    friend Jet operator-(Jet a, const Jet& b) { return a -= b; }
    friend Jet operator*(Jet a, const Jet& b) { return a *= b; }
    friend Jet operator/(Jet a, const Jet& b) { return a /= b; }
    friend Jet operator+(Jet a, double s) { return a += constant(s); }
    friend Jet operator+(double s, Jet a) { return a += constant(s); }
    friend Jet operator-(Jet a, double s) { return a -= constant(s); }
    friend Jet operator-(double s, const Jet& a) { return constant(s) - a; }
    friend Jet operator*(Jet a, double s);
    friend Jet operator*(double s, Jet a) { return a * s; }
    friend Jet operator/(Jet a, double s);
    friend Jet operator/(double s, const Jet& a) { return constant(s) / a; }

private:
    Coeffs c_{};
};

// Elementary functions. Domain violations throw SingularityError naming the
// function and the offending base value.
Jet exp(const Jet& a);
Jet log(const Jet& a);
Jet sqrt(const Jet& a);
Jet sin(const Jet& a);
Jet cos(const Jet& a);

/// Integer power by repeated squaring; negative n goes through the reciprocal.
Jet pow(const Jet& a, int n);

/// Real power. Integral p dispatches to the integer path, otherwise exp(p ln a) with a0 > 0.
Jet pow(const Jet& a, double p);

/// a^b with a jet exponent, exp(b ln a). Constant b falls back to pow(a, b0).
Jet pow(const Jet& a, const Jet& b);

}  // namespace slet
