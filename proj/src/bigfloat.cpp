#include "sharelab/bigfloat.hpp"

#include <cmath>
#include <cstdlib>
#include <cstring>

namespace sharelab {

std::string BigFloat::to_string() const {
    if (mpfr_nan_p(v_)) return "nan";
    if (mpfr_inf_p(v_)) return sign() < 0 ? "-inf" : "inf";
    if (is_zero()) return "0";
    // Enough digits to round-trip at this precision.
    long digits = static_cast<long>(std::ceil(prec() * 0.30103)) + 3;
    mpfr_exp_t e;
    char* raw = mpfr_get_str(nullptr, &e, 10, static_cast<size_t>(digits), v_,
                             MPFR_RNDN);
    std::string mant(raw);
    mpfr_free_str(raw);
    bool neg = !mant.empty() && mant[0] == '-';
    std::string d = neg ? mant.substr(1) : mant;
    // Trim trailing zeros but keep at least one digit.
    size_t last = d.find_last_not_of('0');
    d = d.substr(0, last == std::string::npos ? 1 : last + 1);
    std::string out = neg ? "-" : "";
    out += d.substr(0, 1);
    if (d.size() > 1) out += "." + d.substr(1);
    out += "e" + std::to_string(static_cast<long>(e) - 1);
    return out;
}

BigComplex BigComplex::sqrt() const {
    long p = prec();
    if (im().is_zero()) {
        if (re().sign() >= 0) return BigComplex(re().sqrt(), BigFloat(p));
        return BigComplex(BigFloat(p), (-re()).sqrt());
    }
    // x = sqrt((|z|+re)/2), y = im/(2x); principal branch has re >= 0.
    BigFloat two(2.0, p);
    BigFloat m = abs();
    BigFloat x = ((m + re()) / two).sqrt();
    BigFloat y = im() / (two * x);
    return BigComplex(x, y);
}

BigComplex BigComplex::exp() const {
    BigFloat r = re().exp();
    return BigComplex(r * im().cos(), r * im().sin());
}

BigComplex BigComplex::log() const {
    if (is_zero()) throw Error("log of zero");
    BigFloat half(0.5, prec());
    BigFloat n = re() * re() + im() * im();
    return BigComplex(half * n.log(), BigFloat::atan2(im(), re()));
}

BigComplex BigComplex::pow(long n) const {
    long p = prec();
    if (n == 0) return BigComplex(BigFloat(1.0, p), BigFloat(p));
    bool invert = n < 0;
    unsigned long e = invert ? static_cast<unsigned long>(-(n + 1)) + 1ul
                             : static_cast<unsigned long>(n);
    BigComplex acc(BigFloat(1.0, p), BigFloat(p));
    BigComplex base = *this;
    while (e > 0) {
        if (e & 1ul) acc = acc * base;
        base = base * base;
        e >>= 1;
    }
    if (invert) return BigComplex(BigFloat(1.0, p), BigFloat(p)) / acc;
    return acc;
}

std::string BigComplex::to_string() const {
    std::string s = re().to_string();
    s += im().sign() < 0 ? "-" : "+";
    s += im().abs().to_string();
    s += "*i@" + std::to_string(prec());
    return s;
}

}  // namespace sharelab
