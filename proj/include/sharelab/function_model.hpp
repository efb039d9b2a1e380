#pragma once

#include <memory>
#include <string>
#include <variant>
#include <vector>

#include "sharelab/poly.hpp"
#include "sharelab/series.hpp"

namespace sharelab {

// f(z) = slope*z + intercept. slope may be zero (constants).
struct AffineFunction {
    Scalar slope, intercept;
};

// f(z) = P(e^{lambda z}), lambda != 0, deg P >= 1. The fundamental strip of
// width |2*pi/lambda| maps biholomorphically onto t in C \ {0}, so
// everything about f can be read off P in t-coordinates.
struct ExpPolyFunction {
    Scalar lambda;
    Poly P;
};

ExpPolyFunction make_exp_poly(Scalar lambda, Poly P);

// Expression tree over {literal, z, +, -, *, / by constant, integer power,
// exp}. Entire by construction: the parser rejects non-constant
// denominators and non-integer exponents.
struct ExprNode {
    enum class Kind { Literal, Var, Add, Sub, Mul, Neg, DivConst, PowInt, Exp };
    Kind kind;
    Scalar value;       // Literal payload, or the divisor for DivConst
    long exponent = 0;  // PowInt payload
    std::shared_ptr<const ExprNode> lhs, rhs;
};

using ExprPtr = std::shared_ptr<const ExprNode>;

struct ExprFunction {
    ExprPtr ast;
};

using CandidateFunction =
    std::variant<AffineFunction, ExpPolyFunction, ExprFunction>;

// Truncated derivative sequence f(z0), f'(z0), ..., f^(N)(z0). Entries are
// plain derivative values; the n-th Taylor coefficient is derivs[n]/n!.
struct Jet {
    Scalar anchor;
    std::vector<Scalar> derivs;

    int order() const { return static_cast<int>(derivs.size()) - 1; }
};

// The derivation that realizes d/dz in t-coordinates: lambda * t * p'(t).
// Degree is preserved for nonconstant p and the constant term is always 0.
Poly dz_derive(const Poly& p, const Scalar& lambda);

Scalar evaluate_t(const ExpPolyFunction& f, const Scalar& t);
Scalar evaluate(const CandidateFunction& f, const Scalar& z);

// f^(n)(z0) for n = 0..order. ExpPoly candidates go through repeated
// dz_derive at t = e^{lambda z0}; expression trees propagate truncated
// power series through the AST. `demoted` (optional) reports whether an
// exact computation had to fall back to floats.
Jet jet_of(const CandidateFunction& f, const Scalar& z0, int order,
           bool* demoted = nullptr, long prec = BigFloat::kDefaultPrecision);

// Same, but anchored at an exact point of the t-plane; derivatives of an
// exact candidate stay exact even when z0 = log(t0)/lambda is irrational.
// The jet's anchor field carries the principal-branch z when it is needed
// for reporting (float), or t0 itself when lambda is exact and t0 = 1.
Jet jet_of_at_t(const ExpPolyFunction& f, const Scalar& t0, int order,
                long prec = BigFloat::kDefaultPrecision);

// Series-composition route for ExpPoly jets (P applied to the series of
// e^{lambda z}); used as the independent cross-check of the dz_derive
// route.
Jet jet_of_exp_poly_series(const ExpPolyFunction& f, const Scalar& z0,
                           int order, bool* demoted = nullptr,
                           long prec = BigFloat::kDefaultPrecision);

Series expr_series(const ExprPtr& node, const Series& z, bool* demoted);

bool expr_is_constant(const ExprPtr& node);

std::string expr_to_string(const ExprPtr& node);
std::string candidate_to_string(const CandidateFunction& f);

}  // namespace sharelab
