#include "sharelab/function_model.hpp"

namespace sharelab {

ExpPolyFunction make_exp_poly(Scalar lambda, Poly P) {
    if (lambda.is_zero()) throw ZeroLambda("exp-poly candidate needs lambda != 0");
    if (P.degree_or(-1) < 1)
        throw DegenerateCandidate("exp-poly candidate needs deg P >= 1");
    return ExpPolyFunction{std::move(lambda), std::move(P)};
}

Poly dz_derive(const Poly& p, const Scalar& lambda) {
    if (lambda.is_zero()) throw ZeroLambda("dz_derive needs lambda != 0");
    Poly dp = poly_derive(p);
    if (dp.is_zero()) return Poly::zero();
    // lambda * t * p'(t): shift coefficients up by one and scale.
    std::vector<Scalar> out;
    out.reserve(dp.coeffs().size() + 1);
    out.push_back(dp.regime() == Regime::Exact
                      ? Scalar::exact(0)
                      : Scalar(BigComplex(dp.leading().float_value().prec())));
    for (const auto& c : dp.coeffs()) out.push_back(c * lambda);
    return Poly(std::move(out));
}

Scalar evaluate_t(const ExpPolyFunction& f, const Scalar& t) {
    return f.P.eval(t);
}

namespace {

Scalar exp_scalar(const Scalar& x, bool* demoted, long prec) {
    if (x.is_exact()) {
        if (x.is_zero()) return Scalar::exact(1);
        if (demoted) *demoted = true;
        return Scalar(x.to_float(prec).exp());
    }
    return Scalar(x.float_value().exp());
}

}  // namespace

namespace {

// Joins operand regimes for the affine fast paths: promotes exact values
// to the float side's precision when the regimes differ.
void join_regimes(Scalar& x, Scalar& y) {
    if (x.is_exact() == y.is_exact()) return;
    long p = x.is_exact() ? y.float_value().prec() : x.float_value().prec();
    x = Scalar(x.to_float(p));
    y = Scalar(y.to_float(p));
}

}  // namespace

Scalar evaluate(const CandidateFunction& f, const Scalar& z) {
    if (const auto* a = std::get_if<AffineFunction>(&f)) {
        Scalar s = a->slope, c = a->intercept, zz = z;
        join_regimes(s, zz);
        join_regimes(c, zz);
        join_regimes(s, c);
        return s * zz + c;
    }
    if (const auto* e = std::get_if<ExpPolyFunction>(&f)) {
        Scalar lambda = e->lambda;
        Scalar zz = z;
        if (lambda.is_exact() != zz.is_exact()) {
            long p = lambda.is_exact() ? zz.float_value().prec()
                                       : lambda.float_value().prec();
            lambda = Scalar(lambda.to_float(p));
            zz = Scalar(zz.to_float(p));
        }
        Scalar t = exp_scalar(lambda * zz, nullptr, BigFloat::kDefaultPrecision);
        Poly P = e->P;
        if (!t.is_exact() && P.regime() == Regime::Exact)
            P = P.to_float(t.float_value().prec());
        if (t.is_exact() && P.regime() == Regime::Float)
            t = Scalar(t.to_float(P.leading().float_value().prec()));
        return P.eval(t);
    }
    const auto& ex = std::get<ExprFunction>(f);
    long prec = z.is_exact() ? BigFloat::kDefaultPrecision : z.float_value().prec();
    Series s = expr_series(ex.ast, Series::variable(z, 0, prec), nullptr);
    return s.at(0);
}

Series expr_series(const ExprPtr& node, const Series& z, bool* demoted) {
    switch (node->kind) {
        case ExprNode::Kind::Literal: {
            Scalar v = node->value;
            if (!z.is_exact() && v.is_exact()) v = Scalar(v.to_float(z.prec()));
            if (z.is_exact() && !v.is_exact()) {
                if (demoted) *demoted = true;
                return Series::constant(v, z.order(), v.float_value().prec());
            }
            return Series::constant(v, z.order(), z.prec());
        }
        case ExprNode::Kind::Var:
            return z;
        case ExprNode::Kind::Add: {
            Series l = expr_series(node->lhs, z, demoted);
            Series r = expr_series(node->rhs, z, demoted);
            if (l.is_exact() != r.is_exact()) {
                l = l.is_exact() ? l.to_float() : l;
                r = r.is_exact() ? r.to_float() : r;
                if (demoted) *demoted = true;
            }
            return l + r;
        }
        case ExprNode::Kind::Sub: {
            Series l = expr_series(node->lhs, z, demoted);
            Series r = expr_series(node->rhs, z, demoted);
            if (l.is_exact() != r.is_exact()) {
                l = l.is_exact() ? l.to_float() : l;
                r = r.is_exact() ? r.to_float() : r;
                if (demoted) *demoted = true;
            }
            return l - r;
        }
        case ExprNode::Kind::Mul: {
            Series l = expr_series(node->lhs, z, demoted);
            Series r = expr_series(node->rhs, z, demoted);
            if (l.is_exact() != r.is_exact()) {
                l = l.is_exact() ? l.to_float() : l;
                r = r.is_exact() ? r.to_float() : r;
                if (demoted) *demoted = true;
            }
            return l * r;
        }
        case ExprNode::Kind::Neg:
            return -expr_series(node->lhs, z, demoted);
        case ExprNode::Kind::DivConst: {
            Series l = expr_series(node->lhs, z, demoted);
            Scalar d = node->value;
            if (!l.is_exact() && d.is_exact())
                d = Scalar(d.to_float(l.prec()));
            if (l.is_exact() && !d.is_exact()) {
                l = l.to_float();
                if (demoted) *demoted = true;
            }
            return l.div_const(d);
        }
        case ExprNode::Kind::PowInt:
            return expr_series(node->lhs, z, demoted).pow(node->exponent);
        case ExprNode::Kind::Exp: {
            bool dem = false;
            Series r = expr_series(node->lhs, z, demoted).exp(&dem);
            if (dem && demoted) *demoted = true;
            return r;
        }
    }
    throw Error("corrupt expression node");
}

bool expr_is_constant(const ExprPtr& node) {
    switch (node->kind) {
        case ExprNode::Kind::Literal: return true;
        case ExprNode::Kind::Var: return false;
        case ExprNode::Kind::Neg:
        case ExprNode::Kind::DivConst:
        case ExprNode::Kind::PowInt:
        case ExprNode::Kind::Exp:
            return expr_is_constant(node->lhs);
        default:
            return expr_is_constant(node->lhs) && expr_is_constant(node->rhs);
    }
}

namespace {

std::vector<Scalar> jet_values_from_series(const Series& s) {
    std::vector<Scalar> derivs;
    derivs.reserve(s.coeffs().size());
    for (size_t n = 0; n < s.coeffs().size(); ++n) {
        Scalar f = factorial_scalar(static_cast<int>(n));
        if (!s.is_exact()) f = Scalar(f.to_float(s.prec()));
        derivs.push_back(s.at(static_cast<int>(n)) * f);
    }
    return derivs;
}

}  // namespace

Jet jet_of_at_t(const ExpPolyFunction& f, const Scalar& t0, int order,
                long prec) {
    if (order < 0) throw Error("jet order must be >= 0");
    Poly P = f.P;
    Scalar lambda = f.lambda;
    Scalar t = t0;
    if (P.regime() == Regime::Exact && !t.is_exact())
        P = P.to_float(t.float_value().prec());
    if (P.regime() == Regime::Float && t.is_exact())
        t = Scalar(t.to_float(P.leading().float_value().prec()));
    if ((P.regime() == Regime::Exact) != lambda.is_exact()) {
        if (lambda.is_exact())
            lambda = Scalar(lambda.to_float(P.leading().float_value().prec()));
        else
            P = P.to_float(lambda.float_value().prec());
    }

    std::vector<Scalar> derivs;
    derivs.reserve(static_cast<size_t>(order) + 1);
    Poly cur = P;
    for (int n = 0; n <= order; ++n) {
        derivs.push_back(cur.eval(t));
        if (n < order) cur = dz_derive(cur, lambda);
    }

    // Anchor, for reporting: z = log(t)/lambda on the principal branch.
    Scalar anchor = t;
    if (t.is_exact() && t.exact_value() == GaussianRational(Rat(1), Rat(0))) {
        anchor = Scalar::exact(0);
    } else if (!t.is_zero()) {
        BigComplex tf = t.to_float(prec);
        anchor = Scalar(tf.log() / lambda.to_float(prec));
    }
    return Jet{anchor, std::move(derivs)};
}

Jet jet_of(const CandidateFunction& f, const Scalar& z0, int order,
           bool* demoted, long prec) {
    if (order < 0) throw Error("jet order must be >= 0");
    if (const auto* a = std::get_if<AffineFunction>(&f)) {
        Scalar s = a->slope, c = a->intercept, zz = z0;
        join_regimes(s, zz);
        join_regimes(c, zz);
        join_regimes(s, c);
        std::vector<Scalar> derivs;
        derivs.reserve(static_cast<size_t>(order) + 1);
        derivs.push_back(s * zz + c);
        if (order >= 1) derivs.push_back(s);
        Scalar zero = derivs.back().is_exact()
                          ? Scalar::exact(0)
                          : Scalar(BigComplex(derivs.back().float_value().prec()));
        for (int n = 2; n <= order; ++n) derivs.push_back(zero);
        return Jet{z0, std::move(derivs)};
    }
    if (const auto* e = std::get_if<ExpPolyFunction>(&f)) {
        bool dem = false;
        Scalar lz = e->lambda.is_exact() == z0.is_exact()
                        ? e->lambda * z0
                        : Scalar(e->lambda.to_float(prec)) * Scalar(z0.to_float(prec));
        Scalar t = exp_scalar(lz, &dem, prec);
        if (dem && demoted) *demoted = true;
        Jet j = jet_of_at_t(*e, t, order, prec);
        j.anchor = z0;
        return j;
    }
    const auto& ex = std::get<ExprFunction>(f);
    long p = z0.is_exact() ? prec : z0.float_value().prec();
    Series s = expr_series(ex.ast, Series::variable(z0, order, p), demoted);
    return Jet{z0, jet_values_from_series(s)};
}

Jet jet_of_exp_poly_series(const ExpPolyFunction& f, const Scalar& z0,
                           int order, bool* demoted, long prec) {
    long p = z0.is_exact() ? prec : z0.float_value().prec();
    Series z = Series::variable(z0, order, p);
    Series lz = z.scaled(z.is_exact() == f.lambda.is_exact()
                             ? f.lambda
                             : Scalar(f.lambda.to_float(p)));
    bool dem = false;
    Series t = lz.exp(&dem);
    if (dem && demoted) *demoted = true;
    // Horner over series.
    Poly P = f.P;
    if ((P.regime() == Regime::Exact) != t.is_exact())
        P = P.to_float(p);
    Series acc = Series::constant(P.leading(), order, p);
    for (size_t i = P.coeffs().size() - 1; i-- > 0;) {
        Scalar c = P.coeffs()[i];
        acc = acc * t + Series::constant(c, order, p);
    }
    return Jet{z0, jet_values_from_series(acc)};
}

std::string candidate_to_string(const CandidateFunction& f) {
    if (const auto* a = std::get_if<AffineFunction>(&f))
        return "(" + a->slope.to_string() + ")*z + (" + a->intercept.to_string() + ")";
    if (const auto* e = std::get_if<ExpPolyFunction>(&f))
        return "P(t) = " + e->P.to_string() + " at t = exp((" +
               e->lambda.to_string() + ")*z)";
    return expr_to_string(std::get<ExprFunction>(f).ast);
}

}  // namespace sharelab
