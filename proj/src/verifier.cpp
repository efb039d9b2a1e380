#include "sharelab/verifier.hpp"

#include <algorithm>
#include <cmath>

namespace sharelab {

SharingProblem make_problem(Scalar a, Scalar b, bool relaxed) {
    bool exact = a.is_exact() && b.is_exact();
    bool equal = exact ? a == b : approx_equal(a, b, 1e-30);
    if (equal) throw InvalidParameters("sharing problem needs a != b");
    if (!relaxed && (a.is_zero() || b.is_zero()))
        throw InvalidParameters("sharing problem needs a, b != 0 (or relaxed mode)");
    return SharingProblem{std::move(a), std::move(b), relaxed};
}

namespace {

Scalar as_regime(const Scalar& v, bool exact, long prec) {
    if (exact == v.is_exact()) return v;
    if (!exact) return Scalar(v.to_float(prec));
    throw MixedRegime("cannot promote a float value to the exact regime");
}

double scalar_defect(const Scalar& x, const Scalar& y, long prec) {
    if (x.is_exact() && y.is_exact()) return (x - y).abs_double();
    return (x.to_float(prec) - y.to_float(prec)).abs().to_double();
}

bool values_equal(const Scalar& x, const Scalar& y, double tol) {
    if (x.is_exact() && y.is_exact()) return x == y;
    return approx_equal(x, y, tol);
}

// Shared skeleton of the two implication checks: roots of `root_poly`
// (excluding t = 0), evaluate `value_poly`, and compare with `target`.
ImplicationResult check_roots_map_to(const Poly& root_poly,
                                     const Poly& value_poly,
                                     const Scalar& target, char which,
                                     double tol, long prec) {
    ImplicationResult out;
    if (root_poly.degree_or(-1) < 1) {
        // No roots at all: the implication holds vacuously.
        return out;
    }
    RootSet roots = poly_roots(root_poly, tol, RootConfig{prec});
    out.demoted = roots.demoted;
    for (const auto& w : roots.warnings) out.warnings.push_back(w);
    for (const auto& root : roots.roots) {
        const Scalar& t = root.location;
        if (t.is_zero()) continue;  // t = 0 is not attained by e^{lambda z}
        if (!t.is_exact() && t.float_value().abs().to_double() <= tol) {
            out.warnings.push_back(
                "root within tol of t = 0 classified as t = 0 and excluded; "
                "re-run in the exact regime to pin j");
            continue;
        }
        Poly vp = value_poly;
        Scalar tt = t;
        if (vp.regime() == Regime::Exact && !t.is_exact()) {
            vp = vp.to_float(prec);
            out.demoted = true;
        } else if (vp.regime() == Regime::Float && t.is_exact()) {
            tt = Scalar(t.to_float(prec));
        }
        Scalar got = vp.eval(tt);
        Scalar want = as_regime(target, got.is_exact(), prec);
        if (!values_equal(got, want, tol)) {
            out.holds = false;
            out.witnesses.push_back(
                {t, which, got, want, scalar_defect(got, want, prec), true});
        }
    }
    return out;
}

}  // namespace

namespace {

// reporting convenience: z = log(t)/lambda on the principal branch
void attach_principal_z(ImplicationResult& r, const Scalar& lambda, long prec) {
    for (auto& w : r.witnesses) {
        if (!w.location_in_t || w.location.is_zero()) continue;
        BigComplex t = w.location.to_float(prec);
        w.z_principal = Scalar(t.log() / lambda.to_float(prec));
    }
}

}  // namespace

ImplicationResult check_implication_a(const ExpPolyFunction& f,
                                      const SharingProblem& prob, double tol,
                                      long prec) {
    if (f.P.degree_or(-1) < 1)
        throw DegenerateCandidate("constant candidate");
    bool exact = f.P.regime() == Regime::Exact && prob.a.is_exact() &&
                 f.lambda.is_exact();
    Poly P = exact ? f.P : f.P.to_float(prec);
    Scalar a = as_regime(prob.a, exact, prec);
    Scalar lambda = as_regime(f.lambda, exact, prec);
    Poly p_minus_a = poly_sub(P, Poly::constant(a));
    Poly fprime = dz_derive(P, lambda);
    ImplicationResult r = check_roots_map_to(p_minus_a, fprime, a, 'a', tol, prec);
    attach_principal_z(r, f.lambda, prec);
    return r;
}

ImplicationResult check_implication_b(const ExpPolyFunction& f,
                                      const SharingProblem& prob, double tol,
                                      long prec) {
    if (f.P.degree_or(-1) < 1)
        throw DegenerateCandidate("constant candidate");
    bool exact = f.P.regime() == Regime::Exact && prob.b.is_exact() &&
                 f.lambda.is_exact();
    Poly P = exact ? f.P : f.P.to_float(prec);
    Scalar b = as_regime(prob.b, exact, prec);
    Scalar lambda = as_regime(f.lambda, exact, prec);
    Poly fprime_minus_b =
        poly_sub(dz_derive(P, lambda), Poly::constant(b));
    ImplicationResult r = check_roots_map_to(fprime_minus_b, P, b, 'b', tol, prec);
    attach_principal_z(r, f.lambda, prec);
    return r;
}

GConstantResult check_g_constant(const CandidateFunction& f,
                                 const SharingProblem& prob, int samples,
                                 double tol, long prec) {
    if (samples < 1) throw InvalidParameters("need at least one sample");
    GConstantResult out;

    if (const auto* aff = std::get_if<AffineFunction>(&f)) {
        // f'' vanishes identically, so the numerator does: the estimate is
        // zero wherever the ratio is defined at all (for slope = b it is
        // defined nowhere, which sampling could not handle anyway).
        out.estimate = aff->slope.is_exact()
                           ? Scalar::exact(0)
                           : Scalar(BigComplex(aff->slope.float_value().prec()));
        out.max_deviation = 0.0;
        return out;
    }

    const auto* ep = std::get_if<ExpPolyFunction>(&f);
    bool exact_path = prob.a.is_exact() && prob.b.is_exact();
    if (ep)
        exact_path = exact_path && ep->P.regime() == Regime::Exact &&
                     ep->lambda.is_exact();

    std::vector<Scalar> values;
    values.reserve(static_cast<size_t>(samples));
    long budget = 10L * samples;
    long attempt = 0;

    Poly fp, fpp;
    if (ep && exact_path) {
        fp = dz_derive(ep->P, ep->lambda);
        fpp = dz_derive(fp, ep->lambda);
    }

    while (static_cast<int>(values.size()) < samples && attempt < budget) {
        ++attempt;
        Scalar g;
        bool ok = false;
        if (ep && exact_path) {
            // exact rationals in the annulus 1 < t <= 2
            Scalar t = Scalar::exact(Rat(static_cast<long>(attempt) +
                                             static_cast<long>(budget),
                                         static_cast<long>(budget)));
            Scalar fv = ep->P.eval(t), fpv = fp.eval(t), fppv = fpp.eval(t);
            Scalar den = (fv - prob.a) * (fpv - prob.b);
            if (!den.is_zero()) {
                g = fppv * (fpv - fv) / den;
                ok = true;
            }
        } else {
            // float samples on a spiral in z (or t mapped through log for
            // exp-poly candidates; sampling z directly is equivalent)
            double angle = 0.37 + 2.0 * M_PI * double(attempt) / double(samples);
            double radius = 0.6 + 0.8 * double(attempt % samples) / double(samples);
            Scalar z = Scalar::floating(radius * std::cos(angle),
                                        radius * std::sin(angle), prec);
            bool dem = false;
            Jet j = jet_of(f, z, 2, &dem, prec);
            out.demoted = out.demoted || dem;
            Scalar a = Scalar(prob.a.to_float(prec));
            Scalar b = Scalar(prob.b.to_float(prec));
            Scalar den = (j.derivs[0] - a) * (j.derivs[1] - b);
            if (den.abs_double() > tol) {
                g = j.derivs[2] * (j.derivs[1] - j.derivs[0]) / den;
                ok = true;
            }
        }
        if (ok) values.push_back(g);
    }
    if (static_cast<int>(values.size()) < samples)
        throw AllSamplesDegenerate("resampling budget exhausted at " +
                                   std::to_string(values.size()) + " samples");

    Scalar sum = values.front();
    for (size_t i = 1; i < values.size(); ++i) sum = sum + values[i];
    Scalar count = values.front().is_exact()
                       ? Scalar::exact(static_cast<long>(values.size()))
                       : Scalar(BigComplex(double(values.size()), 0.0, prec));
    out.estimate = sum / count;
    for (const auto& v : values)
        out.max_deviation =
            std::max(out.max_deviation, scalar_defect(v, out.estimate, prec));
    return out;
}

CountingData counting(const ExpPolyFunction& f, const SharingProblem& prob,
                      double tol, long prec) {
    if (f.P.degree_or(-1) < 1)
        throw DegenerateCandidate("constant candidate");
    bool exact = f.P.regime() == Regime::Exact && prob.a.is_exact() &&
                 prob.b.is_exact() && f.lambda.is_exact();
    Poly P = exact ? f.P : f.P.to_float(prec);
    Scalar a = as_regime(prob.a, exact, prec);
    Scalar b = as_regime(prob.b, exact, prec);
    Scalar lambda = as_regime(f.lambda, exact, prec);

    CountingData c;
    c.d = *P.degree();

    auto nonzero_counts = [&](const Poly& p) -> std::pair<int, int> {
        // (with multiplicity, without) over roots in C \ {0}
        if (p.degree_or(-1) < 1) return {0, 0};
        RootSet rs = poly_roots(p, tol, RootConfig{prec});
        int n = 0, nbar = 0;
        for (const auto& r : rs.roots) {
            bool at_zero = r.location.is_exact()
                               ? r.location.is_zero()
                               : r.location.float_value().abs().to_double() <= tol;
            if (at_zero) continue;
            n += r.multiplicity;
            nbar += 1;
        }
        return {n, nbar};
    };

    Poly p_minus_a = poly_sub(P, Poly::constant(a));
    c.j = p_minus_a.is_zero() ? c.d : p_minus_a.order_at_zero().value_or(0);
    auto [na, nbara] = nonzero_counts(p_minus_a);
    c.n_a = na;
    c.nbar_a = nbara;

    Poly fprime = dz_derive(P, lambda);
    Poly fprime_minus_b = poly_sub(fprime, Poly::constant(b));
    auto [nb, nbarb] = nonzero_counts(fprime_minus_b);
    c.n_b_fprime = nb;
    c.nbar_b_fprime = nbarb;

    Poly fpp = dz_derive(fprime, lambda);
    if (fpp.degree_or(-1) >= 1) {
        RootSet rs = poly_roots(fpp, tol, RootConfig{prec});
        int n0 = 0;
        std::optional<int> common;
        bool consistent = true;
        for (const auto& r : rs.roots) {
            bool at_zero = r.location.is_exact()
                               ? r.location.is_zero()
                               : r.location.float_value().abs().to_double() <= tol;
            if (at_zero) continue;
            n0 += r.multiplicity;
            if (!common)
                common = r.multiplicity;
            else if (*common != r.multiplicity)
                consistent = false;
        }
        c.n_0_fpp = n0;
        if (common && consistent) c.k = common;
    }
    return c;
}

std::vector<std::string> counting_violations(const CountingData& c) {
    std::vector<std::string> v;
    if (!(1 <= c.j && c.j < c.d))
        v.push_back("multiplicity of the a-value at t = 0 must satisfy 1 <= j < d (j = " +
                    std::to_string(c.j) + ", d = " + std::to_string(c.d) + ")");
    if (c.n_a != c.d - c.j || c.nbar_a != c.d - c.j)
        v.push_back("a-point counts must equal d - j with and without multiplicity");
    if (c.n_0_fpp != c.d - c.j)
        v.push_back("zeros of f'' away from t = 0 must number d - j with multiplicity");
    if (c.n_b_fprime != c.d)
        v.push_back("b-points of f' must number d with multiplicity");
    if (c.nbar_b_fprime != c.j)
        v.push_back("b-points of f' must number j without multiplicity");
    return v;
}

BigFloat spherical_scan(const CandidateFunction& f, const Region& region,
                        int grid, long prec) {
    if (grid < 2) throw InvalidParameters("spherical_scan needs grid >= 2");
    BigFloat best(prec);
    BigFloat one(1.0, prec);
    for (int iy = 0; iy < grid; ++iy) {
        for (int ix = 0; ix < grid; ++ix) {
            double re = region.re_min +
                        (region.re_max - region.re_min) * ix / double(grid - 1);
            double im = region.im_min +
                        (region.im_max - region.im_min) * iy / double(grid - 1);
            Scalar z = Scalar::floating(re, im, prec);
            Jet j = jet_of(f, z, 1, nullptr, prec);
            BigFloat fa = j.derivs[0].to_float(prec).abs();
            BigFloat fpa = j.derivs[1].to_float(prec).abs();
            BigFloat val = fpa / (one + fa * fa);
            if (val > best) best = val;
        }
    }
    return best;
}

namespace {

struct NewtonOutcome {
    std::vector<BigComplex> points;
    int budget_exceeded = 0;
    int flat_rejections = 0;
};

// Newton search for target(z) = 0 where `target` is derivs[shift] - value;
// shift = 0 solves f = value, shift = 1 solves f' = value.
NewtonOutcome newton_search(const ExprFunction& f, const Scalar& value,
                            int shift, const Region& region, int grid,
                            double tol, long prec) {
    NewtonOutcome out;
    const int budget = 120;
    double res_tol = std::pow(tol, 0.75);
    double step_tol = std::sqrt(tol);
    BigComplex val = value.to_float(prec);
    for (int iy = 0; iy < grid; ++iy) {
        for (int ix = 0; ix < grid; ++ix) {
            double re = region.re_min +
                        (region.re_max - region.re_min) * ix / double(grid - 1);
            double im = region.im_min +
                        (region.im_max - region.im_min) * iy / double(grid - 1);
            BigComplex z(re, im, prec);
            bool converged = false;
            for (int it = 0; it < budget; ++it) {
                Jet j = jet_of(CandidateFunction(f), Scalar(z), shift + 1,
                               nullptr, prec);
                BigComplex g = j.derivs[size_t(shift)].to_float(prec) - val;
                BigComplex dg = j.derivs[size_t(shift) + 1].to_float(prec);
                if (dg.is_zero()) break;
                BigComplex step = g / dg;
                z = z - step;
                double zs = 1.0 + z.abs().to_double();
                if (z.abs().to_double() > 1e6) break;  // escaped
                if (step.abs().to_double() <= step_tol * zs &&
                    g.abs().to_double() <= res_tol) {
                    converged = true;
                    break;
                }
            }
            if (!converged) {
                ++out.budget_exceeded;
                continue;
            }
            // keep points inside (a slightly padded) region
            double pad_re = 0.05 * (region.re_max - region.re_min);
            double pad_im = 0.05 * (region.im_max - region.im_min);
            double zr = z.re().to_double(), zi = z.im().to_double();
            if (zr < region.re_min - pad_re || zr > region.re_max + pad_re ||
                zi < region.im_min - pad_im || zi > region.im_max + pad_im)
                continue;
            // A root claim needs some low-order derivative of the target to
            // be resolvable at z. Where the candidate approaches a value
            // asymptotically (say exp(z^3) along Re z^3 -> -inf) the
            // residual collapses into rounding noise although no root
            // exists; there every derivative is equally flat.
            Jet probe = jet_of(CandidateFunction(f), Scalar(z), shift + 6,
                               nullptr, prec);
            double deriv_floor = std::pow(res_tol, 0.5);
            bool resolvable = false;
            for (int n = shift + 1; n <= shift + 6; ++n)
                resolvable =
                    resolvable ||
                    probe.derivs[size_t(n)].to_float(prec).abs().to_double() >
                        deriv_floor;
            if (!resolvable) {
                ++out.flat_rejections;
                continue;
            }
            bool dup = false;
            for (const auto& p : out.points)
                if ((p - z).abs().to_double() <= step_tol) {
                    dup = true;
                    break;
                }
            if (!dup) out.points.push_back(z);
        }
    }
    return out;
}

}  // namespace

VerificationReport grid_verify_expr(const ExprFunction& f,
                                    const SharingProblem& prob,
                                    const Region& region, int grid, double tol,
                                    long prec) {
    if (grid < 2) throw InvalidParameters("grid_verify_expr needs grid >= 2");
    VerificationReport rep;
    rep.region_local = true;
    rep.relaxed = prob.relaxed;
    // Location error of a multiple root found at residual tol^(3/4) can
    // reach tol^(3/8); the implication comparison must sit safely above
    // that while staying far below any honest defect.
    double check_tol = std::pow(tol, 0.25);

    // f = a  =>  f' = a
    NewtonOutcome a_pts = newton_search(f, prob.a, 0, region, grid, tol, prec);
    rep.newton_budget_exceeded += a_pts.budget_exceeded;
    BigComplex a_val = prob.a.to_float(prec);
    for (const auto& z : a_pts.points) {
        Jet j = jet_of(CandidateFunction(f), Scalar(z), 1, nullptr, prec);
        BigComplex got = j.derivs[1].to_float(prec);
        double defect = (got - a_val).abs().to_double();
        if (defect > check_tol) {
            rep.holds_a_implies = false;
            rep.witnesses.push_back(
                {Scalar(z), 'a', Scalar(got), prob.a, defect, false});
        }
    }

    // f' = b  =>  f = b
    NewtonOutcome b_pts = newton_search(f, prob.b, 1, region, grid, tol, prec);
    rep.newton_budget_exceeded += b_pts.budget_exceeded;
    BigComplex b_val = prob.b.to_float(prec);
    for (const auto& z : b_pts.points) {
        Jet j = jet_of(CandidateFunction(f), Scalar(z), 0, nullptr, prec);
        BigComplex got = j.derivs[0].to_float(prec);
        double defect = (got - b_val).abs().to_double();
        if (defect > check_tol) {
            rep.holds_b_implies = false;
            rep.witnesses.push_back(
                {Scalar(z), 'b', Scalar(got), prob.b, defect, false});
        }
    }

    rep.demoted = true;  // grid work is inherently float
    if (prob.relaxed)
        rep.warnings.push_back("relaxed mode: a = 0 or b = 0 permitted");
    rep.warnings.push_back(
        "region-local verification: absence of witnesses is evidence, not proof");
    int flat = a_pts.flat_rejections + b_pts.flat_rejections;
    if (flat > 0)
        rep.warnings.push_back(
            std::to_string(flat) +
            " seed(s) converged into regions flatter than the tolerance "
            "(asymptotic value, no root) and were excluded");
    return rep;
}

VerificationReport verify_candidate(const CandidateFunction& f,
                                    const SharingProblem& prob,
                                    const VerifyOptions& opts) {
    VerificationReport rep;
    rep.relaxed = prob.relaxed;

    if (const auto* aff = std::get_if<AffineFunction>(&f)) {
        // Complete by algebra. f = sz + c with s = slope.
        const Scalar& s = aff->slope;
        const Scalar& c = aff->intercept;
        bool exact = s.is_exact() && c.is_exact() && prob.a.is_exact() &&
                     prob.b.is_exact();
        auto eq = [&](const Scalar& x, const Scalar& y) {
            return exact ? x == y : approx_equal(x, y, opts.tol);
        };
        if (s.is_zero()) {
            // constant: f = a everywhere or never; f' = 0
            if (eq(c, prob.a) && !prob.a.is_zero()) {
                rep.holds_a_implies = false;
                rep.witnesses.push_back({Scalar::exact(0), 'a', s, prob.a,
                                         scalar_defect(s, prob.a, opts.precision_bits),
                                         false});
            }
            if (prob.b.is_zero() && !eq(c, prob.b)) {
                rep.holds_b_implies = false;
                rep.witnesses.push_back({Scalar::exact(0), 'b', c, prob.b,
                                         scalar_defect(c, prob.b, opts.precision_bits),
                                         false});
            }
        } else {
            // one a-point z0 = (a-c)/s with f' = s there
            if (!eq(s, prob.a)) {
                Scalar z0 = (prob.a - c) / s;
                rep.holds_a_implies = false;
                rep.witnesses.push_back({z0, 'a', s, prob.a,
                                         scalar_defect(s, prob.a, opts.precision_bits),
                                         false});
            }
            // f' = s everywhere; if s = b then f = b must hold everywhere
            if (eq(s, prob.b)) {
                long one = eq(c, prob.b) ? 1 : 0;
                Scalar at = exact ? Scalar::exact(one)
                                  : Scalar::floating(double(one), 0.0,
                                                     opts.precision_bits);
                Scalar got = evaluate(f, at);
                rep.holds_b_implies = false;
                rep.witnesses.push_back({at, 'b', got, prob.b,
                                         scalar_defect(got, prob.b, opts.precision_bits),
                                         false});
            }
        }
        GConstantResult g = check_g_constant(f, prob, opts.g_samples, opts.tol,
                                             opts.precision_bits);
        rep.g_constant_estimate = g.estimate;
        rep.g_max_deviation = g.max_deviation;
        rep.demoted = g.demoted;
    } else if (const auto* ep = std::get_if<ExpPolyFunction>(&f)) {
        ImplicationResult ra =
            check_implication_a(*ep, prob, opts.tol, opts.precision_bits);
        ImplicationResult rb =
            check_implication_b(*ep, prob, opts.tol, opts.precision_bits);
        rep.holds_a_implies = ra.holds;
        rep.holds_b_implies = rb.holds;
        rep.witnesses = ra.witnesses;
        rep.witnesses.insert(rep.witnesses.end(), rb.witnesses.begin(),
                             rb.witnesses.end());
        rep.demoted = ra.demoted || rb.demoted;
        rep.warnings = ra.warnings;
        rep.warnings.insert(rep.warnings.end(), rb.warnings.begin(),
                            rb.warnings.end());
        GConstantResult g = check_g_constant(f, prob, opts.g_samples, opts.tol,
                                             opts.precision_bits);
        rep.g_constant_estimate = g.estimate;
        rep.g_max_deviation = g.max_deviation;
        rep.demoted = rep.demoted || g.demoted;
        rep.counts = counting(*ep, prob, opts.tol, opts.precision_bits);
        for (const auto& v : counting_violations(*rep.counts))
            rep.warnings.push_back("counting: " + v);
    } else {
        const auto& ex = std::get<ExprFunction>(f);
        Region region{opts.re_min, opts.re_max, opts.im_min, opts.im_max};
        rep = grid_verify_expr(ex, prob, region, opts.grid, opts.tol,
                               opts.precision_bits);
        GConstantResult g = check_g_constant(f, prob, opts.g_samples, opts.tol,
                                             opts.precision_bits);
        rep.g_constant_estimate = g.estimate;
        rep.g_max_deviation = g.max_deviation;
    }

    if (prob.relaxed && !rep.region_local)
        rep.warnings.push_back("relaxed mode: a = 0 or b = 0 permitted");
    return rep;
}

int report_exit_code(const VerificationReport& r) {
    bool holds = r.holds_a_implies && r.holds_b_implies;
    if (!holds) return 1;
    return r.region_local ? 2 : 0;
}

}  // namespace sharelab
