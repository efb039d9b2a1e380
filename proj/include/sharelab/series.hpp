#pragma once

#include <vector>

#include "sharelab/scalar.hpp"

namespace sharelab {

// Truncated power series sum c[n] (z - z0)^n, Taylor coefficients (already
// divided by n!). All coefficients share a regime; exp() demotes a series
// with a nonzero exact constant term to the float regime, since e^q is
// irrational for nonzero rational q.
class Series {
  public:
    Series() = default;
    Series(std::vector<Scalar> coeffs, long prec)
        : c_(std::move(coeffs)), prec_(prec) {}

    static Series constant(const Scalar& v, int order, long prec);
    // the series of z itself around z0: (z0, 1, 0, ...)
    static Series variable(const Scalar& z0, int order, long prec);

    int order() const { return static_cast<int>(c_.size()) - 1; }
    const std::vector<Scalar>& coeffs() const { return c_; }
    const Scalar& at(int n) const { return c_[static_cast<size_t>(n)]; }
    long prec() const { return prec_; }

    bool is_exact() const;
    bool is_constant() const;  // all terms beyond c[0] are zero
    Series to_float() const;

    friend Series operator+(const Series& a, const Series& b);
    friend Series operator-(const Series& a, const Series& b);
    friend Series operator*(const Series& a, const Series& b);
    Series operator-() const;
    Series scaled(const Scalar& s) const;
    Series div_const(const Scalar& s) const;
    Series pow(long n) const;
    // Series exponential; sets *demoted when an exact input leaves the
    // exact regime.
    Series exp(bool* demoted = nullptr) const;

  private:
    Scalar zero() const;
    std::vector<Scalar> c_;
    long prec_ = BigFloat::kDefaultPrecision;
};

}  // namespace sharelab
