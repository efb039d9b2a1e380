#pragma once

#include <gmpxx.h>

#include <optional>
#include <string>
#include <utility>
#include <variant>

#include "sharelab/bigfloat.hpp"
#include "sharelab/errors.hpp"

namespace sharelab {

using Int = mpz_class;
using Rat = mpq_class;

enum class Regime { Exact, Float };

// Element of Q(i): rational real and imaginary parts, exact arithmetic.
struct GaussianRational {
    Rat re, im;

    GaussianRational() : re(0), im(0) {}
    GaussianRational(Rat r, Rat i) : re(std::move(r)), im(std::move(i)) {
        re.canonicalize();
        im.canonicalize();
    }

    bool is_zero() const { return re == 0 && im == 0; }
    bool is_real() const { return im == 0; }

    friend GaussianRational operator+(const GaussianRational& a, const GaussianRational& b) {
        return {a.re + b.re, a.im + b.im};
    }
    friend GaussianRational operator-(const GaussianRational& a, const GaussianRational& b) {
        return {a.re - b.re, a.im - b.im};
    }
    friend GaussianRational operator*(const GaussianRational& a, const GaussianRational& b) {
        return {a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re};
    }
    friend GaussianRational operator/(const GaussianRational& a, const GaussianRational& b) {
        if (b.is_zero()) throw Error("exact division by zero");
        Rat n = b.re * b.re + b.im * b.im;
        return {(a.re * b.re + a.im * b.im) / n, (a.im * b.re - a.re * b.im) / n};
    }
    GaussianRational operator-() const { return {-re, -im}; }
    friend bool operator==(const GaussianRational& a, const GaussianRational& b) {
        return a.re == b.re && a.im == b.im;
    }
    friend bool operator!=(const GaussianRational& a, const GaussianRational& b) {
        return !(a == b);
    }
};

// Is q the square of a rational? If so return the nonnegative square root.
std::optional<Rat> rational_sqrt(const Rat& q);

// A complex scalar in one of two regimes: exact Gaussian rational, or a
// complex big-float with tracked precision. Arithmetic never crosses
// regimes implicitly; promote with to_float().
class Scalar {
  public:
    Scalar() : v_(GaussianRational{}) {}
    Scalar(GaussianRational g) : v_(std::move(g)) {}
    Scalar(BigComplex c) : v_(std::move(c)) {}

    static Scalar exact(long num, long den = 1) {
        return Scalar(GaussianRational(Rat(num, den), Rat(0)));
    }
    static Scalar exact(Rat re, Rat im = Rat(0)) {
        return Scalar(GaussianRational(std::move(re), std::move(im)));
    }
    static Scalar imaginary_unit() {
        return Scalar(GaussianRational(Rat(0), Rat(1)));
    }
    static Scalar floating(double re, double im, long prec = BigFloat::kDefaultPrecision) {
        return Scalar(BigComplex(re, im, prec));
    }

    Regime regime() const {
        return std::holds_alternative<GaussianRational>(v_) ? Regime::Exact
                                                            : Regime::Float;
    }
    bool is_exact() const { return regime() == Regime::Exact; }

    const GaussianRational& exact_value() const {
        if (!is_exact()) throw MixedRegime("expected exact scalar");
        return std::get<GaussianRational>(v_);
    }
    const BigComplex& float_value() const {
        if (is_exact()) throw MixedRegime("expected float scalar");
        return std::get<BigComplex>(v_);
    }

    bool is_zero() const {
        return is_exact() ? exact_value().is_zero() : float_value().is_zero();
    }

    // Explicit promotion; precision is the target for exact inputs and a cap
    // for float inputs.
    BigComplex to_float(long prec = BigFloat::kDefaultPrecision) const {
        if (is_exact()) {
            const auto& g = exact_value();
            return BigComplex(BigFloat(g.re, prec), BigFloat(g.im, prec));
        }
        const auto& c = float_value();
        return c.prec() <= prec ? c : c.with_prec(prec);
    }

    friend Scalar operator+(const Scalar& a, const Scalar& b) {
        return binary(a, b, '+');
    }
    friend Scalar operator-(const Scalar& a, const Scalar& b) {
        return binary(a, b, '-');
    }
    friend Scalar operator*(const Scalar& a, const Scalar& b) {
        return binary(a, b, '*');
    }
    friend Scalar operator/(const Scalar& a, const Scalar& b) {
        return binary(a, b, '/');
    }
    Scalar operator-() const {
        if (is_exact()) return Scalar(-exact_value());
        return Scalar(-float_value());
    }

    Scalar pow(long n) const;

    // Exact equality; throws MixedRegime unless both operands are exact.
    friend bool operator==(const Scalar& a, const Scalar& b) {
        if (a.is_exact() && b.is_exact())
            return a.exact_value() == b.exact_value();
        throw MixedRegime("float scalars compare only via approx_equal");
    }
    friend bool operator!=(const Scalar& a, const Scalar& b) { return !(a == b); }

    // |x| as double (extreme magnitudes saturate, which is fine for
    // tolerances and report fields).
    double abs_double() const;

    std::string to_string() const;
    static Scalar parse(const std::string& text);

  private:
    static Scalar binary(const Scalar& a, const Scalar& b, char op);

    std::variant<GaussianRational, BigComplex> v_;
};

// |a - b| <= tol * max(1, |a|, |b|). Works across regimes by promoting the
// exact side; tol is ignored for two exact operands (exact equality).
bool approx_equal(const Scalar& a, const Scalar& b, double tol);

// Result of a square root that may leave the exact regime.
struct SqrtResult {
    Scalar value;
    bool demoted = false;  // true when an exact input had no exact root
};

// Principal square root. Exact inputs stay exact when the root lies in
// Q(i); otherwise the computation demotes to the float regime at `prec`.
SqrtResult scalar_sqrt(const Scalar& s, long prec = BigFloat::kDefaultPrecision);

Scalar factorial_scalar(int n);

}  // namespace sharelab
