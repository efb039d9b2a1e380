#include "sharelab/scalar.hpp"

#include <cctype>
#include <cmath>
#include <cstdlib>

namespace sharelab {

std::optional<Rat> rational_sqrt(const Rat& q) {
    if (q < 0) return std::nullopt;
    if (q == 0) return Rat(0);
    const Int& num = q.get_num();
    const Int& den = q.get_den();
    if (mpz_perfect_square_p(num.get_mpz_t()) == 0) return std::nullopt;
    if (mpz_perfect_square_p(den.get_mpz_t()) == 0) return std::nullopt;
    Int sn, sd;
    mpz_sqrt(sn.get_mpz_t(), num.get_mpz_t());
    mpz_sqrt(sd.get_mpz_t(), den.get_mpz_t());
    return Rat(sn, sd);
}

Scalar Scalar::binary(const Scalar& a, const Scalar& b, char op) {
    if (a.is_exact() != b.is_exact())
        throw MixedRegime("scalar operands are in different regimes");
    if (a.is_exact()) {
        const auto& x = a.exact_value();
        const auto& y = b.exact_value();
        switch (op) {
            case '+': return Scalar(x + y);
            case '-': return Scalar(x - y);
            case '*': return Scalar(x * y);
            default: return Scalar(x / y);
        }
    }
    const auto& x = a.float_value();
    const auto& y = b.float_value();
    switch (op) {
        case '+': return Scalar(x + y);
        case '-': return Scalar(x - y);
        case '*': return Scalar(x * y);
        default: return Scalar(x / y);
    }
}

Scalar Scalar::pow(long n) const {
    if (!is_exact()) return Scalar(float_value().pow(n));
    if (n == 0) return Scalar::exact(1);
    bool invert = n < 0;
    unsigned long e = invert ? static_cast<unsigned long>(-(n + 1)) + 1ul
                             : static_cast<unsigned long>(n);
    GaussianRational acc(Rat(1), Rat(0));
    GaussianRational base = exact_value();
    while (e > 0) {
        if (e & 1ul) acc = acc * base;
        base = base * base;
        e >>= 1;
    }
    if (invert) return Scalar(GaussianRational(Rat(1), Rat(0)) / acc);
    return Scalar(acc);
}

double Scalar::abs_double() const {
    if (is_exact()) {
        const auto& g = exact_value();
        double re = g.re.get_d(), im = g.im.get_d();
        return std::hypot(re, im);
    }
    return float_value().abs().to_double();
}

bool approx_equal(const Scalar& a, const Scalar& b, double tol) {
    if (a.is_exact() && b.is_exact()) return a == b;
    long prec = a.is_exact() ? b.float_value().prec()
              : b.is_exact() ? a.float_value().prec()
              : std::min(a.float_value().prec(), b.float_value().prec());
    BigComplex x = a.to_float(prec), y = b.to_float(prec);
    double diff = (x - y).abs().to_double();
    double scale = std::max({1.0, x.abs().to_double(), y.abs().to_double()});
    return diff <= tol * scale;
}

SqrtResult scalar_sqrt(const Scalar& s, long prec) {
    if (!s.is_exact()) return {Scalar(s.float_value().sqrt()), false};
    const auto& g = s.exact_value();
    if (g.is_zero()) return {Scalar::exact(0), false};
    if (g.im == 0) {
        if (g.re > 0) {
            if (auto r = rational_sqrt(g.re))
                return {Scalar::exact(*r), false};
        } else {
            // principal branch: sqrt(-x) = i*sqrt(x) for x > 0
            if (auto r = rational_sqrt(-g.re))
                return {Scalar::exact(Rat(0), *r), false};
        }
        return {Scalar(s.to_float(prec).sqrt()), true};
    }
    // sqrt(a+bi) = x+yi with x = sqrt((|z|+a)/2), y = b/(2x); exact iff
    // |z| and (|z|+a)/2 are rational squares.
    if (auto n = rational_sqrt(g.re * g.re + g.im * g.im)) {
        if (auto x = rational_sqrt((g.re + *n) / 2)) {
            if (*x != 0) {
                Rat y = g.im / (2 * (*x));
                return {Scalar::exact(*x, y), false};
            }
        }
    }
    return {Scalar(s.to_float(prec).sqrt()), true};
}

Scalar factorial_scalar(int n) {
    Int f;
    mpz_fac_ui(f.get_mpz_t(), static_cast<unsigned long>(n));
    return Scalar::exact(Rat(f));
}

namespace {

std::string rat_to_string(const Rat& r) {
    return r.get_num().get_str() + "/" + r.get_den().get_str();
}

}  // namespace

// Exact: "re_num/re_den+im_num/im_den*i" (sign folded into the numerator
// rendering). Float: "<re>+<im>*i@<prec>".
std::string Scalar::to_string() const {
    if (is_exact()) {
        const auto& g = exact_value();
        std::string s = rat_to_string(g.re);
        if (g.im >= 0) {
            s += "+" + rat_to_string(g.im);
        } else {
            s += "-" + rat_to_string(-g.im);
        }
        return s + "*i";
    }
    return float_value().to_string();
}

namespace {

struct Cursor {
    const std::string& s;
    size_t i = 0;
    bool done() const { return i >= s.size(); }
    char peek() const { return done() ? '\0' : s[i]; }
};

Rat parse_unsigned_rational(Cursor& c) {
    size_t start = c.i;
    std::string digits;
    while (!c.done() && std::isdigit(static_cast<unsigned char>(c.peek())))
        digits += c.s[c.i++];
    if (digits.empty())
        throw Error("invalid scalar literal at offset " + std::to_string(start));
    if (!c.done() && c.peek() == '.') {
        ++c.i;
        std::string frac;
        while (!c.done() && std::isdigit(static_cast<unsigned char>(c.peek())))
            frac += c.s[c.i++];
        Rat r(Int(digits + frac, 10), Int(1));
        for (size_t k = 0; k < frac.size(); ++k) r /= 10;
        r.canonicalize();
        return r;
    }
    if (!c.done() && c.peek() == '/') {
        ++c.i;
        std::string den;
        while (!c.done() && std::isdigit(static_cast<unsigned char>(c.peek())))
            den += c.s[c.i++];
        if (den.empty()) throw Error("missing denominator in scalar literal");
        Int num_i(digits, 10), den_i(den, 10);
        if (den_i == 0) throw Error("zero denominator in scalar literal");
        Rat r(num_i, den_i);
        r.canonicalize();
        return r;
    }
    return Rat(Int(digits, 10));
}

}  // namespace

// Accepts the serialization formats plus convenient shorthand:
//   "8", "-1/6", "2+3i", "1/2-3/4*i", "i", "-i", "0.25", "3i"
//   "1.5e0+2.0e-1*i@128"  (float with precision annotation)
Scalar Scalar::parse(const std::string& text) {
    std::string body = text;
    // Float form: decimal strings with @precision suffix.
    auto at = text.rfind('@');
    if (at != std::string::npos) {
        long prec = std::strtol(text.c_str() + at + 1, nullptr, 10);
        if (prec < MPFR_PREC_MIN) throw Error("bad precision annotation: " + text);
        body = text.substr(0, at);
        // split into re and im on the last top-level +/- before "*i" / "i"
        std::string b = body;
        bool has_i = false;
        if (b.size() >= 2 && b.substr(b.size() - 2) == "*i") {
            b = b.substr(0, b.size() - 2);
            has_i = true;
        } else if (!b.empty() && b.back() == 'i') {
            b = b.substr(0, b.size() - 1);
            has_i = true;
        }
        if (!has_i) return Scalar(BigComplex(BigFloat(b, prec), BigFloat(prec)));
        // find the split sign (skip index 0 and signs following e/E)
        for (size_t k = b.size(); k-- > 1;) {
            if ((b[k] == '+' || b[k] == '-') &&
                b[k - 1] != 'e' && b[k - 1] != 'E') {
                std::string re = b.substr(0, k);
                std::string im = (b[k] == '-' ? "-" : "") + b.substr(k + 1);
                if (im.empty() || im == "-") im += "1";
                return Scalar(BigComplex(BigFloat(re, prec), BigFloat(im, prec)));
            }
        }
        return Scalar(BigComplex(BigFloat(prec), BigFloat(b, prec)));
    }

    Cursor c{body};
    Rat re(0), im(0);
    bool any = false;
    while (!c.done()) {
        int sign = 1;
        while (!c.done() && (c.peek() == '+' || c.peek() == '-')) {
            if (c.peek() == '-') sign = -sign;
            ++c.i;
        }
        if (c.done()) {
            if (any) break;
            throw Error("empty scalar literal");
        }
        if (c.peek() == 'i') {
            ++c.i;
            im += sign;
            any = true;
            continue;
        }
        Rat mag = parse_unsigned_rational(c);
        bool imaginary = false;
        if (!c.done() && c.peek() == '*') {
            ++c.i;
            if (c.peek() != 'i')
                throw Error("expected 'i' after '*' in scalar literal");
            ++c.i;
            imaginary = true;
        } else if (!c.done() && c.peek() == 'i') {
            ++c.i;
            imaginary = true;
        }
        if (imaginary)
            im += sign * mag;
        else
            re += sign * mag;
        any = true;
    }
    if (!any) throw Error("empty scalar literal");
    return Scalar::exact(re, im);
}

}  // namespace sharelab
