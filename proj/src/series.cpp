#include "sharelab/series.hpp"

namespace sharelab {

namespace {

void check_regime(const Series& a, const Series& b) {
    if (a.is_exact() != b.is_exact())
        throw MixedRegime("series operands are in different regimes");
}

}  // namespace

Scalar Series::zero() const {
    if (c_.empty() || c_.front().is_exact()) return Scalar::exact(0);
    return Scalar(BigComplex(prec_));
}

bool Series::is_exact() const { return c_.empty() || c_.front().is_exact(); }

bool Series::is_constant() const {
    for (size_t i = 1; i < c_.size(); ++i)
        if (!c_[i].is_zero()) return false;
    return true;
}

Series Series::to_float() const {
    std::vector<Scalar> out;
    out.reserve(c_.size());
    for (const auto& c : c_) out.push_back(Scalar(c.to_float(prec_)));
    return Series(std::move(out), prec_);
}

Series Series::constant(const Scalar& v, int order, long prec) {
    std::vector<Scalar> c(static_cast<size_t>(order) + 1,
                          v.is_exact() ? Scalar::exact(0)
                                       : Scalar(BigComplex(prec)));
    c[0] = v;
    return Series(std::move(c), prec);
}

Series Series::variable(const Scalar& z0, int order, long prec) {
    Series s = constant(z0, order, prec);
    if (order >= 1) {
        s.c_[1] = z0.is_exact() ? Scalar::exact(1)
                                : Scalar(BigComplex(1.0, 0.0, prec));
    }
    return s;
}

Series operator+(const Series& a, const Series& b) {
    check_regime(a, b);
    std::vector<Scalar> out;
    size_t n = std::min(a.c_.size(), b.c_.size());
    out.reserve(n);
    for (size_t i = 0; i < n; ++i) out.push_back(a.c_[i] + b.c_[i]);
    return Series(std::move(out), std::min(a.prec_, b.prec_));
}

Series operator-(const Series& a, const Series& b) {
    check_regime(a, b);
    std::vector<Scalar> out;
    size_t n = std::min(a.c_.size(), b.c_.size());
    out.reserve(n);
    for (size_t i = 0; i < n; ++i) out.push_back(a.c_[i] - b.c_[i]);
    return Series(std::move(out), std::min(a.prec_, b.prec_));
}

Series operator*(const Series& a, const Series& b) {
    check_regime(a, b);
    size_t n = std::min(a.c_.size(), b.c_.size());
    Series r;
    r.prec_ = std::min(a.prec_, b.prec_);
    r.c_.assign(n, a.zero());
    for (size_t i = 0; i < n; ++i) {
        if (a.c_[i].is_zero()) continue;
        for (size_t j = 0; i + j < n; ++j)
            r.c_[i + j] = r.c_[i + j] + a.c_[i] * b.c_[j];
    }
    return r;
}

Series Series::operator-() const {
    std::vector<Scalar> out;
    out.reserve(c_.size());
    for (const auto& c : c_) out.push_back(-c);
    return Series(std::move(out), prec_);
}

Series Series::scaled(const Scalar& s) const {
    std::vector<Scalar> out;
    out.reserve(c_.size());
    for (const auto& c : c_) out.push_back(c * s);
    return Series(std::move(out), prec_);
}

Series Series::div_const(const Scalar& s) const {
    if (s.is_zero()) throw Error("series division by zero constant");
    std::vector<Scalar> out;
    out.reserve(c_.size());
    for (const auto& c : c_) out.push_back(c / s);
    return Series(std::move(out), prec_);
}

Series Series::pow(long n) const {
    if (n < 0) throw Error("series pow with negative exponent");
    Series acc = constant(is_exact() ? Scalar::exact(1)
                                     : Scalar(BigComplex(1.0, 0.0, prec_)),
                          order(), prec_);
    Series base = *this;
    unsigned long e = static_cast<unsigned long>(n);
    while (e > 0) {
        if (e & 1ul) acc = acc * base;
        base = base * base;
        e >>= 1;
    }
    return acc;
}

// e = exp(s): e0 = exp(s0); n*e_n = sum_{k=1..n} k*s_k*e_{n-k}.
Series Series::exp(bool* demoted) const {
    Series s = *this;
    if (s.is_exact() && !s.c_.empty() && !s.c_[0].is_zero()) {
        s = s.to_float();
        if (demoted) *demoted = true;
    }
    Series r;
    r.prec_ = s.prec_;
    r.c_.assign(s.c_.size(), s.zero());
    if (s.c_.empty()) return r;
    if (s.is_exact()) {
        r.c_[0] = Scalar::exact(1);  // exp(0)
    } else {
        r.c_[0] = Scalar(s.c_[0].to_float(s.prec_).exp());
    }
    for (size_t n = 1; n < s.c_.size(); ++n) {
        Scalar acc = s.zero();
        for (size_t k = 1; k <= n; ++k) {
            if (s.c_[k].is_zero()) continue;
            Scalar kf = s.is_exact()
                            ? Scalar::exact(static_cast<long>(k))
                            : Scalar(BigComplex(double(k), 0.0, s.prec_));
            acc = acc + kf * s.c_[k] * r.c_[n - k];
        }
        Scalar nf = s.is_exact() ? Scalar::exact(static_cast<long>(n))
                                 : Scalar(BigComplex(double(n), 0.0, s.prec_));
        r.c_[n] = acc / nf;
    }
    return r;
}

}  // namespace sharelab
