#include "sharelab/poly.hpp"

#include <algorithm>

namespace sharelab {

namespace {

void check_same_regime(const Poly& p, const Poly& q) {
    if (p.is_zero() || q.is_zero()) return;
    if (p.regime() != q.regime())
        throw MixedRegime("polynomial operands are in different regimes");
}

Scalar zero_like(const Poly& p) {
    if (p.is_zero() || p.regime() == Regime::Exact) return Scalar::exact(0);
    long prec = p.leading().float_value().prec();
    return Scalar(BigComplex(prec));
}

}  // namespace

Poly::Poly(std::vector<Scalar> coeffs) : c_(std::move(coeffs)) {
    if (!c_.empty()) {
        Regime r = c_.front().regime();
        for (const auto& c : c_)
            if (c.regime() != r)
                throw MixedRegime("polynomial mixes scalar regimes");
    }
    while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
}

Poly Poly::from_exact(std::initializer_list<long> coeffs) {
    std::vector<Scalar> v;
    v.reserve(coeffs.size());
    for (long c : coeffs) v.push_back(Scalar::exact(c));
    return Poly(std::move(v));
}

Scalar Poly::coeff(size_t i) const {
    if (i < c_.size()) return c_[i];
    return zero_like(*this);
}

const Scalar& Poly::leading() const {
    if (c_.empty()) throw Error("zero polynomial has no leading coefficient");
    return c_.back();
}

Regime Poly::regime() const {
    return c_.empty() ? Regime::Exact : c_.front().regime();
}

Poly Poly::to_float(long prec) const {
    std::vector<Scalar> v;
    v.reserve(c_.size());
    for (const auto& c : c_) v.push_back(Scalar(c.to_float(prec)));
    return Poly(std::move(v));
}

std::optional<int> Poly::order_at_zero() const {
    if (c_.empty()) return std::nullopt;
    for (size_t i = 0; i < c_.size(); ++i)
        if (!c_[i].is_zero()) return static_cast<int>(i);
    return std::nullopt;  // unreachable for trimmed polynomials
}

Scalar Poly::eval(const Scalar& t) const {
    if (c_.empty()) {
        return t.is_exact() ? Scalar::exact(0)
                            : Scalar(BigComplex(t.float_value().prec()));
    }
    Scalar acc = c_.back();
    for (size_t i = c_.size() - 1; i-- > 0;) acc = acc * t + c_[i];
    return acc;
}

std::string Poly::to_string(const std::string& var) const {
    if (c_.empty()) return "0";
    std::string s;
    for (size_t i = c_.size(); i-- > 0;) {
        if (c_[i].is_zero()) continue;
        if (!s.empty()) s += " + ";
        s += "(" + c_[i].to_string() + ")";
        if (i == 1) s += "*" + var;
        if (i > 1) s += "*" + var + "^" + std::to_string(i);
    }
    return s.empty() ? "0" : s;
}

Poly poly_add(const Poly& p, const Poly& q) {
    check_same_regime(p, q);
    if (p.is_zero()) return q;
    if (q.is_zero()) return p;
    size_t n = std::max(p.coeffs().size(), q.coeffs().size());
    std::vector<Scalar> out;
    out.reserve(n);
    for (size_t i = 0; i < n; ++i) out.push_back(p.coeff(i) + q.coeff(i));
    return Poly(std::move(out));
}

Poly poly_sub(const Poly& p, const Poly& q) { return poly_add(p, poly_neg(q)); }

Poly poly_neg(const Poly& p) {
    std::vector<Scalar> out;
    out.reserve(p.coeffs().size());
    for (const auto& c : p.coeffs()) out.push_back(-c);
    return Poly(std::move(out));
}

Poly poly_mul(const Poly& p, const Poly& q) {
    check_same_regime(p, q);
    if (p.is_zero() || q.is_zero()) return Poly::zero();
    std::vector<Scalar> out(p.coeffs().size() + q.coeffs().size() - 1,
                            zero_like(p));
    for (size_t i = 0; i < p.coeffs().size(); ++i)
        for (size_t j = 0; j < q.coeffs().size(); ++j)
            out[i + j] = out[i + j] + p.coeffs()[i] * q.coeffs()[j];
    return Poly(std::move(out));
}

Poly poly_scale(const Poly& p, const Scalar& s) {
    if (p.is_zero()) return p;
    if ((p.regime() == Regime::Exact) != s.is_exact())
        throw MixedRegime("scaling mixes scalar regimes");
    std::vector<Scalar> out;
    out.reserve(p.coeffs().size());
    for (const auto& c : p.coeffs()) out.push_back(c * s);
    return Poly(std::move(out));
}

Poly poly_derive(const Poly& p) {
    if (p.coeffs().size() <= 1) return Poly::zero();
    std::vector<Scalar> out;
    out.reserve(p.coeffs().size() - 1);
    for (size_t i = 1; i < p.coeffs().size(); ++i) {
        Scalar k = p.regime() == Regime::Exact
                       ? Scalar::exact(static_cast<long>(i))
                       : Scalar(BigComplex(static_cast<double>(i), 0.0,
                                           p.leading().float_value().prec()));
        out.push_back(p.coeffs()[i] * k);
    }
    return Poly(std::move(out));
}

PolyDivMod poly_divmod(const Poly& p, const Poly& d) {
    if (d.is_zero()) throw Error("polynomial division by zero");
    if (p.regime() != Regime::Exact || d.regime() != Regime::Exact)
        throw MixedRegime("polynomial division requires the exact regime");
    Poly rem = p;
    std::vector<Scalar> q;
    int dd = *d.degree();
    if (!rem.is_zero() && *rem.degree() >= dd)
        q.assign(static_cast<size_t>(*rem.degree() - dd) + 1, Scalar::exact(0));
    while (!rem.is_zero() && *rem.degree() >= dd) {
        int k = *rem.degree() - dd;
        Scalar f = rem.leading() / d.leading();
        q[static_cast<size_t>(k)] = f;
        // rem -= f * t^k * d
        std::vector<Scalar> sub(static_cast<size_t>(k), Scalar::exact(0));
        for (const auto& c : d.coeffs()) sub.push_back(c * f);
        rem = poly_sub(rem, Poly(std::move(sub)));
    }
    return {Poly(std::move(q)), rem};
}

namespace {

Poly monic(const Poly& p) {
    if (p.is_zero()) return p;
    return poly_scale(p, Scalar::exact(1) / p.leading());
}

}  // namespace

Poly poly_gcd(Poly a, Poly b) {
    if (a.regime() != Regime::Exact || b.regime() != Regime::Exact)
        throw MixedRegime("polynomial gcd requires the exact regime");
    while (!b.is_zero()) {
        Poly r = poly_divmod(a, b).remainder;
        a = std::move(b);
        b = monic(r);
    }
    return monic(a);
}

std::vector<SquarefreeFactor> squarefree_decomposition(const Poly& p) {
    if (p.is_zero()) throw Error("square-free decomposition of zero");
    if (p.regime() != Regime::Exact)
        throw MixedRegime("square-free decomposition requires the exact regime");
    std::vector<SquarefreeFactor> out;
    Poly f = monic(p);
    if (*f.degree() == 0) return out;
    Poly fp = poly_derive(f);
    Poly d = poly_gcd(f, fp);
    if (*d.degree() == 0) {
        out.push_back({f, 1});
        return out;
    }
    // Yun's algorithm.
    Poly b = poly_divmod(f, d).quotient;
    Poly c = poly_divmod(fp, d).quotient;
    Poly z = poly_sub(c, poly_derive(b));
    int i = 1;
    while (!b.is_zero() && *b.degree() > 0) {
        Poly g = poly_gcd(b, z);
        if (*g.degree() > 0) out.push_back({g, i});
        b = poly_divmod(b, g).quotient;
        c = poly_divmod(z, g).quotient;
        z = poly_sub(c, poly_derive(b));
        ++i;
    }
    return out;
}

Scalar discriminant_quadratic(const Scalar& alpha, const Scalar& beta,
                              const Scalar& gamma) {
    if (alpha.is_zero())
        throw LeadingZero("quadratic discriminant needs a nonzero leading coefficient");
    Scalar four = alpha.is_exact()
                      ? Scalar::exact(4)
                      : Scalar(BigComplex(4.0, 0.0, alpha.float_value().prec()));
    return beta * beta - four * alpha * gamma;
}

}  // namespace sharelab
