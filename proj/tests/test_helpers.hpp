#pragma once

#include <cmath>
#include <random>
#include <utility>
#include <vector>

#include "sharelab/classifier.hpp"
#include "sharelab/function_model.hpp"

namespace sharelab::testing {

// Deterministic generator for small exact values; property tests stay
// reproducible across runs.
class Gen {
  public:
    explicit Gen(unsigned seed) : rng_(seed) {}

    long small_int(long lo, long hi) {
        return std::uniform_int_distribution<long>(lo, hi)(rng_);
    }
    Rat small_rat(bool nonzero = false) {
        for (;;) {
            long num = small_int(-9, 9);
            long den = small_int(1, 9);
            if (nonzero && num == 0) continue;
            Rat r(num, den);
            r.canonicalize();
            return r;
        }
    }
    GaussianRational gauss(bool nonzero = false) {
        for (;;) {
            GaussianRational g(small_rat(), small_rat());
            if (nonzero && g.is_zero()) continue;
            return g;
        }
    }
    Scalar scalar(bool nonzero = false) { return Scalar(gauss(nonzero)); }

    Poly exact_poly(int max_deg) {
        int deg = int(small_int(0, max_deg));
        std::vector<Scalar> c;
        for (int i = 0; i <= deg; ++i) c.push_back(scalar(i == deg));
        return Poly(std::move(c));
    }

    double uniform(double lo, double hi) {
        return std::uniform_real_distribution<double>(lo, hi)(rng_);
    }

  private:
    std::mt19937 rng_;
};

// Quadratic-formula oracle in plain doubles, independent of the library's
// solver path.
struct DComplex {
    double re = 0, im = 0;
};

inline DComplex dmul(DComplex a, DComplex b) {
    return {a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re};
}
inline DComplex dsub(DComplex a, DComplex b) { return {a.re - b.re, a.im - b.im}; }
inline DComplex dsqrt(DComplex a) {
    if (a.im == 0.0 && a.re < 0.0) return {0.0, std::sqrt(-a.re)};
    double m = std::hypot(a.re, a.im);
    double x = std::sqrt((m + a.re) / 2.0);
    double y = x == 0.0 ? 0.0 : a.im / (2.0 * x);
    return {x, y};
}

inline std::pair<DComplex, DComplex> quadratic_oracle(DComplex a, DComplex b,
                                                      DComplex c) {
    DComplex disc = dsub(dmul(b, b), dmul({4, 0}, dmul(a, c)));
    DComplex s = dsqrt(disc);
    auto div = [](DComplex p, DComplex q) {
        double n = q.re * q.re + q.im * q.im;
        return DComplex{(p.re * q.re + p.im * q.im) / n,
                        (p.im * q.re - p.re * q.im) / n};
    };
    DComplex two_a = dmul({2, 0}, a);
    return {div(dsub({-b.re, -b.im}, {-s.re, -s.im}), two_a),
            div(dsub({-b.re, -b.im}, s), two_a)};
}

// Family (iv) instance with parameters (a, C): P = 6aC^2 t^2 - 6aC t + a,
// lambda = 1/6. The companion closed form is the two-term exponential sum
// 6aC^2 e^{z/3} - 6aC e^{z/6} + a, which gives an independent derivative
// oracle: f^(n) at t0 = 6aC^2 3^-n t0^2 - 6aC 6^-n t0 (plus a at n = 0).
inline ExpPolyFunction family_iv(const Scalar& a, const Scalar& C) {
    Scalar six = Scalar::exact(6);
    return make_exp_poly(Scalar::exact(1, 6),
                         Poly({a, -(six * a * C), six * a * C * C}));
}

inline std::vector<Scalar> family_iv_jet_oracle(const Scalar& a, const Scalar& C,
                                                const Scalar& t0, int order) {
    Scalar six = Scalar::exact(6);
    Scalar c2 = six * a * C * C;
    Scalar c1 = -(six * a * C);
    std::vector<Scalar> derivs;
    Scalar third = Scalar::exact(1, 3);
    Scalar sixth = Scalar::exact(1, 6);
    Scalar p3 = Scalar::exact(1), p6 = Scalar::exact(1);
    for (int n = 0; n <= order; ++n) {
        Scalar v = c2 * p3 * t0 * t0 + c1 * p6 * t0;
        if (n == 0) v = v + a;
        derivs.push_back(v);
        p3 = p3 * third;
        p6 = p6 * sixth;
    }
    return derivs;
}

}  // namespace sharelab::testing
