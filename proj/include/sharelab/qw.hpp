#pragma once

#include <string>

#include "sharelab/bigfloat.hpp"
#include "sharelab/scalar.hpp"

namespace sharelab {

// Element x + y*w of the quadratic field Q(w) with w^2 = w - 1, i.e. w is a
// primitive sixth root of unity. Used where sixth roots of unity must stay
// exact; Q(i) does not contain them.
struct QwNumber {
    Rat x, y;

    QwNumber() : x(0), y(0) {}
    QwNumber(Rat x_, Rat y_) : x(std::move(x_)), y(std::move(y_)) {
        x.canonicalize();
        y.canonicalize();
    }
    static QwNumber w() { return QwNumber(Rat(0), Rat(1)); }

    bool is_zero() const { return x == 0 && y == 0; }

    friend QwNumber operator+(const QwNumber& a, const QwNumber& b) {
        return {a.x + b.x, a.y + b.y};
    }
    friend QwNumber operator-(const QwNumber& a, const QwNumber& b) {
        return {a.x - b.x, a.y - b.y};
    }
    // (x1 + y1 w)(x2 + y2 w) with w^2 = w - 1.
    friend QwNumber operator*(const QwNumber& a, const QwNumber& b) {
        return {a.x * b.x - a.y * b.y, a.x * b.y + a.y * b.x + a.y * b.y};
    }
    QwNumber operator-() const { return {-x, -y}; }

    // Conjugate sends w to 1 - w (the other root of w^2 - w + 1).
    QwNumber conj() const { return {x + y, -y}; }

    // Norm x^2 + xy + y^2 is positive definite, so zero only at (0,0).
    Rat norm() const { return x * x + x * y + y * y; }

    friend QwNumber operator/(const QwNumber& a, const QwNumber& b) {
        if (b.is_zero()) throw Error("Q(w) division by zero");
        QwNumber n = a * b.conj();
        Rat d = b.norm();
        return {n.x / d, n.y / d};
    }

    friend bool operator==(const QwNumber& a, const QwNumber& b) {
        return a.x == b.x && a.y == b.y;
    }
    friend bool operator!=(const QwNumber& a, const QwNumber& b) {
        return !(a == b);
    }

    // Embedding with w = exp(i*pi/3) = 1/2 + (sqrt(3)/2) i.
    BigComplex to_complex(long prec = BigFloat::kDefaultPrecision) const {
        BigFloat half(0.5, prec);
        BigFloat s3 = BigFloat(3.0, prec).sqrt();
        BigComplex w(half, half * s3);
        BigComplex xv(BigFloat(Rat(x), prec), BigFloat(prec));
        BigComplex yv(BigFloat(Rat(y), prec), BigFloat(prec));
        return xv + yv * w;
    }

    std::string to_string() const {
        std::string s = x.get_str();
        if (y >= 0)
            s += "+" + y.get_str() + "*w";
        else
            s += "-" + Rat(-y).get_str() + "*w";
        return s;
    }
};

}  // namespace sharelab
