#pragma once

#include <gmpxx.h>
#include <mpfr.h>

#include <string>
#include <utility>

#include "sharelab/errors.hpp"

namespace sharelab {

// RAII wrapper around one mpfr_t with an explicit precision in bits.
// Binary operations never mix precisions silently: the result carries the
// minimum of the operand precisions.
class BigFloat {
  public:
    static constexpr long kDefaultPrecision = 128;

    explicit BigFloat(long prec = kDefaultPrecision) {
        mpfr_init2(v_, check_prec(prec));
        mpfr_set_zero(v_, 1);
    }
    BigFloat(double x, long prec) {
        mpfr_init2(v_, check_prec(prec));
        mpfr_set_d(v_, x, MPFR_RNDN);
    }
    BigFloat(const mpq_class& q, long prec) {
        mpfr_init2(v_, check_prec(prec));
        mpfr_set_q(v_, q.get_mpq_t(), MPFR_RNDN);
    }
    BigFloat(const std::string& s, long prec) {
        mpfr_init2(v_, check_prec(prec));
        if (mpfr_set_str(v_, s.c_str(), 10, MPFR_RNDN) != 0)
            throw Error("invalid float literal: " + s);
    }

    BigFloat(const BigFloat& o) {
        mpfr_init2(v_, o.prec());
        mpfr_set(v_, o.v_, MPFR_RNDN);
    }
    BigFloat(BigFloat&& o) noexcept {
        mpfr_init2(v_, o.prec());
        mpfr_swap(v_, o.v_);
    }
    BigFloat& operator=(const BigFloat& o) {
        if (this != &o) {
            mpfr_set_prec(v_, o.prec());
            mpfr_set(v_, o.v_, MPFR_RNDN);
        }
        return *this;
    }
    BigFloat& operator=(BigFloat&& o) noexcept {
        if (this != &o) mpfr_swap(v_, o.v_);
        return *this;
    }
    ~BigFloat() { mpfr_clear(v_); }

    long prec() const { return mpfr_get_prec(v_); }
    bool is_zero() const { return mpfr_zero_p(v_) != 0; }
    int sign() const { return mpfr_sgn(v_); }
    double to_double() const { return mpfr_get_d(v_, MPFR_RNDN); }

    // Rounds to a (usually lower) precision.
    BigFloat with_prec(long prec) const {
        BigFloat r(prec);
        mpfr_set(r.v_, v_, MPFR_RNDN);
        return r;
    }

    friend BigFloat operator+(const BigFloat& a, const BigFloat& b) {
        BigFloat r(joint_prec(a, b));
        mpfr_add(r.v_, a.v_, b.v_, MPFR_RNDN);
        return r;
    }
    friend BigFloat operator-(const BigFloat& a, const BigFloat& b) {
        BigFloat r(joint_prec(a, b));
        mpfr_sub(r.v_, a.v_, b.v_, MPFR_RNDN);
        return r;
    }
    friend BigFloat operator*(const BigFloat& a, const BigFloat& b) {
        BigFloat r(joint_prec(a, b));
        mpfr_mul(r.v_, a.v_, b.v_, MPFR_RNDN);
        return r;
    }
    friend BigFloat operator/(const BigFloat& a, const BigFloat& b) {
        if (b.is_zero()) throw Error("BigFloat division by zero");
        BigFloat r(joint_prec(a, b));
        mpfr_div(r.v_, a.v_, b.v_, MPFR_RNDN);
        return r;
    }
    BigFloat operator-() const {
        BigFloat r(prec());
        mpfr_neg(r.v_, v_, MPFR_RNDN);
        return r;
    }

    BigFloat abs() const {
        BigFloat r(prec());
        mpfr_abs(r.v_, v_, MPFR_RNDN);
        return r;
    }
    BigFloat sqrt() const {
        BigFloat r(prec());
        mpfr_sqrt(r.v_, v_, MPFR_RNDN);
        return r;
    }
    BigFloat exp() const {
        BigFloat r(prec());
        mpfr_exp(r.v_, v_, MPFR_RNDN);
        return r;
    }
    BigFloat log() const {
        BigFloat r(prec());
        mpfr_log(r.v_, v_, MPFR_RNDN);
        return r;
    }
    BigFloat sin() const {
        BigFloat r(prec());
        mpfr_sin(r.v_, v_, MPFR_RNDN);
        return r;
    }
    BigFloat cos() const {
        BigFloat r(prec());
        mpfr_cos(r.v_, v_, MPFR_RNDN);
        return r;
    }
    static BigFloat atan2(const BigFloat& y, const BigFloat& x) {
        BigFloat r(joint_prec(y, x));
        mpfr_atan2(r.v_, y.v_, x.v_, MPFR_RNDN);
        return r;
    }
    static BigFloat hypot(const BigFloat& a, const BigFloat& b) {
        BigFloat r(joint_prec(a, b));
        mpfr_hypot(r.v_, a.v_, b.v_, MPFR_RNDN);
        return r;
    }
    static BigFloat pi(long prec) {
        BigFloat r(prec);
        mpfr_const_pi(r.v_, MPFR_RNDN);
        return r;
    }
    // 2^e at the given precision (exact).
    static BigFloat pow2(long e, long prec) {
        BigFloat r(prec);
        mpfr_set_ui_2exp(r.v_, 1, e, MPFR_RNDN);
        return r;
    }

    int compare(const BigFloat& o) const { return mpfr_cmp(v_, o.v_); }
    friend bool operator<(const BigFloat& a, const BigFloat& b) { return a.compare(b) < 0; }
    friend bool operator>(const BigFloat& a, const BigFloat& b) { return a.compare(b) > 0; }
    friend bool operator<=(const BigFloat& a, const BigFloat& b) { return a.compare(b) <= 0; }
    friend bool operator>=(const BigFloat& a, const BigFloat& b) { return a.compare(b) >= 0; }
    friend bool operator==(const BigFloat& a, const BigFloat& b) { return a.compare(b) == 0; }
    friend bool operator!=(const BigFloat& a, const BigFloat& b) { return a.compare(b) != 0; }

    std::string to_string() const;

  private:
    static long check_prec(long prec) {
        if (prec < MPFR_PREC_MIN) throw Error("precision too small");
        return prec;
    }
    static long joint_prec(const BigFloat& a, const BigFloat& b) {
        return a.prec() < b.prec() ? a.prec() : b.prec();
    }

    mpfr_t v_;
};

// Complex number with both parts held at one common precision.
class BigComplex {
  public:
    explicit BigComplex(long prec = BigFloat::kDefaultPrecision)
        : re_(prec), im_(prec) {}
    BigComplex(BigFloat re, BigFloat im) : re_(std::move(re)), im_(std::move(im)) {
        long p = re_.prec() < im_.prec() ? re_.prec() : im_.prec();
        if (re_.prec() != p) re_ = re_.with_prec(p);
        if (im_.prec() != p) im_ = im_.with_prec(p);
    }
    BigComplex(double re, double im, long prec)
        : re_(re, prec), im_(im, prec) {}

    const BigFloat& re() const { return re_; }
    const BigFloat& im() const { return im_; }
    long prec() const { return re_.prec(); }
    bool is_zero() const { return re_.is_zero() && im_.is_zero(); }

    BigComplex with_prec(long prec) const {
        return BigComplex(re_.with_prec(prec), im_.with_prec(prec));
    }

    friend BigComplex operator+(const BigComplex& a, const BigComplex& b) {
        return BigComplex(a.re_ + b.re_, a.im_ + b.im_);
    }
    friend BigComplex operator-(const BigComplex& a, const BigComplex& b) {
        return BigComplex(a.re_ - b.re_, a.im_ - b.im_);
    }
    friend BigComplex operator*(const BigComplex& a, const BigComplex& b) {
        return BigComplex(a.re_ * b.re_ - a.im_ * b.im_,
                          a.re_ * b.im_ + a.im_ * b.re_);
    }
    friend BigComplex operator/(const BigComplex& a, const BigComplex& b) {
        BigFloat n = b.re_ * b.re_ + b.im_ * b.im_;
        if (n.is_zero()) throw Error("BigComplex division by zero");
        return BigComplex((a.re_ * b.re_ + a.im_ * b.im_) / n,
                          (a.im_ * b.re_ - a.re_ * b.im_) / n);
    }
    BigComplex operator-() const { return BigComplex(-re_, -im_); }
    BigComplex conj() const { return BigComplex(re_, -im_); }

    BigFloat abs() const { return BigFloat::hypot(re_, im_); }

    BigComplex sqrt() const;  // principal branch
    BigComplex exp() const;
    BigComplex log() const;   // principal branch
    BigComplex pow(long n) const;

    std::string to_string() const;

  private:
    BigFloat re_, im_;
};

}  // namespace sharelab
