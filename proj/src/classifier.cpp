#include "sharelab/classifier.hpp"

namespace sharelab {

CaseEnumeration enumerate_cases(int d_max) {
    CaseEnumeration out;
    for (int d = 2; d <= d_max; ++d) {
        for (int j = 1; j <= d; ++j) {
            if (j >= d) {
                out.rejected.push_back({d, j, "needs 1 <= j < d"});
                continue;
            }
            if (d < 2 * j) {
                out.rejected.push_back({d, j, "violates 2j <= d"});
                continue;
            }
            if (d > 3 * j) {
                out.rejected.push_back({d, j, "violates d <= 3j"});
                continue;
            }
            if (j == 1) {
                // all b-points of f' multiple; deg(f'-b) = j(k+1) = d
                out.feasible.push_back(
                    {d, j, d - 1, BranchKind::AllBMultiple});
                continue;
            }
            // mixed branch: one simple b-point plus j-1 ramified ones of
            // common order k = (d-j)/(j-1)
            if ((d - j) % (j - 1) != 0) {
                out.rejected.push_back(
                    {d, j, "mixed branch needs (d-j)/(j-1) integral"});
                continue;
            }
            int k = (d - j) / (j - 1);
            if (k < 2 || k > 4) {
                out.rejected.push_back(
                    {d, j, "mixed branch needs 2 <= k <= 4 (k = " +
                               std::to_string(k) + ")"});
                continue;
            }
            if (d - j > 2) {
                out.rejected.push_back(
                    {d, j,
                     "rejected by jet uniqueness: at most two derivative "
                     "sequences at a-points force d - j <= 2"});
                continue;
            }
            out.feasible.push_back({d, j, k, BranchKind::MixedSimpleAndMultiple});
        }
    }
    return out;
}

Scalar lambda_from_djk(const Scalar& a, const Scalar& b, int d, int j) {
    if (d == j)
        throw InvalidParameters("d = j is excluded (1 <= j < d)");
    Scalar dd = a.is_exact() ? Scalar::exact(d)
                             : Scalar::floating(double(d), 0.0,
                                                a.float_value().prec());
    Scalar jj = a.is_exact() ? Scalar::exact(j)
                             : Scalar::floating(double(j), 0.0,
                                                a.float_value().prec());
    Scalar den = dd * dd * b - jj * jj * a;
    if (den.is_zero())
        throw DegenerateDenominator("d^2 b = j^2 a leaves lambda undefined");
    return dd * b / den;
}

bool lambda_relations_hold(const Scalar& a, const Scalar& b, int d, int j,
                           int k) {
    if (!a.is_exact() || !b.is_exact())
        throw MixedRegime("the exponent relations are checked exactly");
    Scalar lambda = lambda_from_djk(a, b, d, j);
    Scalar dd = Scalar::exact(d), jj = Scalar::exact(j);
    Scalar c = Scalar::exact(k + 1) * b / (a - b);
    Scalar ld = lambda * dd;
    Scalar lj = lambda * jj;
    Scalar lhs_d = ld * ld - ld;
    Scalar lhs_j = (a / b) * lj * lj;
    Scalar den = dd * dd * b - jj * jj * a;
    Scalar closed = dd * dd * jj * jj * a * b / (den * den);
    return lhs_d == c && lhs_j == c && closed == c;
}

std::string family_kind_name(FamilyKind k) {
    switch (k) {
        case FamilyKind::I: return "i";
        case FamilyKind::II: return "ii";
        case FamilyKind::III: return "iii";
        case FamilyKind::IV: return "iv";
    }
    return "?";
}

CandidateFunction instantiate_family(const SolutionFamily& fam,
                                     const Scalar& C) {
    auto cst = [&](long v) {
        if (C.is_exact()) return Scalar::exact(v);
        return Scalar::floating(double(v), 0.0, C.float_value().prec());
    };
    switch (fam.kind) {
        case FamilyKind::I:
            return AffineFunction{fam.parameters.at("a"), C};
        case FamilyKind::II:
            return make_exp_poly(cst(1), Poly({cst(0), C}));
        case FamilyKind::III: {
            Scalar a = fam.parameters.at("a");
            Scalar lambda = fam.parameters.at("lambda");
            return make_exp_poly(lambda, Poly({a, C}));
        }
        case FamilyKind::IV: {
            // f = 6aC e^{z/6}(C e^{z/6} - 1) + a = 6aC^2 t^2 - 6aC t + a
            Scalar a = fam.parameters.at("a");
            Scalar six = cst(6);
            return make_exp_poly(
                fam.parameters.at("lambda"),
                Poly({a, -(six * a * C), six * a * C * C}));
        }
    }
    throw Error("corrupt family record");
}

SolutionFamily resolve_case_d2(const Scalar& a) {
    if (a.is_zero()) throw InvalidParameters("needs a != 0");
    auto cst = [&](long num, long den = 1) {
        if (a.is_exact()) return Scalar::exact(num, den);
        long prec = a.float_value().prec();
        return Scalar(BigComplex(BigFloat(Rat(num, den), prec), BigFloat(prec)));
    };
    auto same = [&](const Scalar& x, const Scalar& y) {
        return a.is_exact() ? x == y : approx_equal(x, y, 1e-30);
    };
    // Ansatz f = A t (t - r) + a, normalized to r = 1.
    //   a-point of f at t = 1 must be an a-point of f', so lambda*A = a.
    //   f'' = lambda^2 A t (4t - 1) vanishes at t = 1/4, which must be the
    //   double b-point of f', so b = f'(1/4) = -lambda*A/8 = -a/8.
    //   t = 1/4 must also be a b-point of f: A(1/4)(-3/4) + a = b forces
    //   A = 6a, hence lambda = 1/6.
    Scalar b = -(a / cst(8));
    Scalar A = cst(6) * a;
    Scalar lambda = a / A;
    if (!same(lambda, cst(1, 6)))
        throw Error("internal: lambda must come out as 1/6");
    // consistency: f'(1/4) = lambda A t (2t - 1) at t = 1/4
    Scalar t = cst(1, 4);
    Scalar fp = lambda * A * t * (cst(2) * t - cst(1));
    if (!same(fp, b)) throw Error("internal: double b-point value mismatch");
    Scalar fv = A * t * (t - cst(1)) + a;
    if (!same(fv, b)) throw Error("internal: b-point of f mismatch");

    SolutionFamily fam;
    fam.kind = FamilyKind::IV;
    fam.parameters = {{"a", a}, {"b", b}, {"lambda", lambda}};
    fam.constraints = {"b = -a/8", "lambda = 1/6", "C is any nonzero constant"};
    return fam;
}

namespace {

GaussianRational gauss(long re, long im) {
    return GaussianRational(Rat(re), Rat(im));
}

std::string rat_compact(const Rat& r) {
    std::string s = r.get_num().get_str();
    if (r.get_den() != 1) s += "/" + r.get_den().get_str();
    return s;
}

// Human rendering for record strings: "256", "-4i", "1/2+3i".
std::string gauss_str(const GaussianRational& g) {
    if (g.im == 0) return rat_compact(g.re);
    std::string im_txt = (g.im == 1) ? "i" : (g.im == -1) ? "-i"
                                                          : rat_compact(g.im) + "i";
    if (g.re == 0) return im_txt;
    if (g.im > 0) return rat_compact(g.re) + "+" + im_txt;
    return rat_compact(g.re) + im_txt;
}

std::string qw_str(const QwNumber& q) {
    if (q.y == 0) return rat_compact(q.x);
    std::string w_txt = (q.y == 1) ? "w" : (q.y == -1) ? "-w"
                                                       : rat_compact(q.y) + "w";
    if (q.x == 0) return w_txt;
    if (q.y > 0) return rat_compact(q.x) + "+" + w_txt;
    return rat_compact(q.x) + w_txt;
}

}  // namespace

RefutationRecord refute_case_d3() {
    RefutationRecord rec;
    rec.case_label = "d=3, j=1, k=2";
    rec.normalization = "r = 1";
    rec.homogeneity_degree = 2;
    rec.exclusion =
        "s = r is excluded: the a-points of f are simple; the remaining "
        "a-point conditions force (1-s)(1+s^2) = 0, so s = +-i";

    // f = C t (t - 1)(t - s) + a; equal derivative values at the nonzero
    // a-points t = 1 and t = s give lambda*C*(1-s)(1+s^2) = 0.
    for (int sign : {+1, -1}) {
        GaussianRational s = gauss(0, sign);
        GaussianRational one = gauss(1, 0);
        // derivation: (1 - s)(1 + s^2) must vanish
        GaussianRational cond = (one - s) * (one + s * s);
        if (!cond.is_zero()) throw Error("internal: s = +-i not admissible");
        // quadratic factor of f'': 9t^2 - 4(1+s)t + s
        GaussianRational alpha = gauss(9, 0);
        GaussianRational beta = -(gauss(4, 0) * (one + s));
        GaussianRational gamma = s;
        Scalar disc = discriminant_quadratic(Scalar(alpha), Scalar(beta),
                                             Scalar(gamma));
        RefutationBranch br;
        br.parameter = sign > 0 ? "s = i" : "s = -i";
        br.discriminant = disc.exact_value();
        br.nonzero = !disc.is_zero();
        br.rendered = gauss_str(disc.exact_value());
        rec.branches.push_back(std::move(br));
    }
    rec.refuted = true;
    for (const auto& b : rec.branches) rec.refuted = rec.refuted && b.nonzero;
    return rec;
}

RefutationRecord refute_case_d4() {
    RefutationRecord rec;
    rec.case_label = "d=4, j=2, k=2";
    rec.normalization = "r = 1";
    rec.homogeneity_degree = 2;
    rec.exclusion =
        "w = 1 is excluded: the a-points of f are simple; the remaining "
        "a-point conditions force (1-w)(1+w^3) = 0, so w^3 = -1";

    // Branch w = -1 over Q.
    {
        GaussianRational w = gauss(-1, 0);
        GaussianRational one = gauss(1, 0);
        GaussianRational cond = (one - w) * (one + w * w * w);
        if (!cond.is_zero()) throw Error("internal: w = -1 not admissible");
        // discriminant of 16t^2 - 9(1+w)t + 4w
        Scalar disc = discriminant_quadratic(
            Scalar(gauss(16, 0)), Scalar(-(gauss(9, 0) * (one + w))),
            Scalar(gauss(4, 0) * w));
        RefutationBranch br;
        br.parameter = "w = -1";
        br.discriminant = disc.exact_value();
        br.nonzero = !disc.is_zero();
        br.rendered = gauss_str(disc.exact_value());
        rec.branches.push_back(std::move(br));
    }

    // Primitive sixth roots, handled symbolically in Q(w) with w^2 = w-1:
    // w^3 = -1 holds identically, (1+w)^2 = 3w, and the discriminant
    // 81(1+w)^2 - 256w = -13w.
    {
        QwNumber w = QwNumber::w();
        QwNumber one(Rat(1), Rat(0));
        QwNumber w2 = w * w;
        if (w2 != w - one) throw Error("internal: Q(w) relation broken");
        QwNumber w3 = w2 * w;
        QwNumber cond = (one - w) * (one + w3);
        if (!cond.is_zero()) throw Error("internal: primitive w not admissible");
        QwNumber opw = one + w;
        QwNumber disc = QwNumber(Rat(81), Rat(0)) * opw * opw -
                        QwNumber(Rat(256), Rat(0)) * w;
        RefutationBranch br;
        br.parameter = "w primitive sixth root (w^2 = w - 1)";
        br.discriminant = disc;
        br.nonzero = !disc.is_zero();
        br.rendered = qw_str(disc);
        rec.branches.push_back(std::move(br));
    }

    rec.refuted = true;
    for (const auto& b : rec.branches) rec.refuted = rec.refuted && b.nonzero;
    return rec;
}

SolutionFamily picard_family(const Scalar& a, const Scalar& b) {
    bool exact = a.is_exact() && b.is_exact();
    bool equal = exact ? a == b : approx_equal(a, b, 1e-30);
    if (equal) throw DegenerateParameters("needs a != b");
    if (b.is_zero()) throw DegenerateParameters("needs b != 0");

    Scalar lambda = b / (b - a);

    // For constant P = C the defining ratio b*P/(P' + lambda*P) reduces to
    // b/lambda, which must be b - a identically.
    Scalar C = exact ? Scalar::exact(7) : Scalar::floating(7.0, 0.0,
                                                           b.float_value().prec());
    Scalar ratio = b * C / (lambda * C);
    bool ratio_ok = exact ? ratio == (b - a) : approx_equal(ratio, b - a, 1e-30);
    if (!ratio_ok) throw Error("internal: defining ratio is not b - a");

    // b-point of f' is the simple root of lambda*C*t - b; f there is b.
    Scalar t0 = b / (lambda * C);
    Scalar f_at = C * t0 + a;
    bool fb_ok = exact ? f_at == b : approx_equal(f_at, b, 1e-30);
    if (!fb_ok) throw Error("internal: f != b at the b-point of f'");

    SolutionFamily fam;
    fam.kind = a.is_zero() ? FamilyKind::II : FamilyKind::III;
    fam.parameters = {{"a", a}, {"lambda", lambda}};
    fam.constraints = {"lambda = b/(b-a)", "C is any nonzero constant",
                       "a is omitted by f"};
    if (a.is_zero()) {
        fam.constraints.push_back("a = 0 collapses to f identical with f'");
    }
    return fam;
}

std::vector<SolutionFamily> classify(const Scalar& a, const Scalar& b) {
    bool exact = a.is_exact() && b.is_exact();
    if (a.is_zero() || b.is_zero())
        throw InvalidParameters("classification needs a, b != 0");
    bool equal = exact ? a == b : approx_equal(a, b, 1e-30);
    if (equal) throw InvalidParameters("classification needs a != b");

    std::vector<SolutionFamily> out;

    SolutionFamily f1;
    f1.kind = FamilyKind::I;
    f1.parameters = {{"a", a}};
    f1.constraints = {"slope = a", "C is any constant"};
    out.push_back(std::move(f1));

    SolutionFamily f2;
    f2.kind = FamilyKind::II;
    f2.parameters = {{"a", a}, {"lambda", Scalar::exact(1)}};
    f2.constraints = {"f identical with f'", "C is any nonzero constant"};
    out.push_back(std::move(f2));

    out.push_back(picard_family(a, b));

    Scalar eight = exact ? Scalar::exact(8)
                         : Scalar::floating(8.0, 0.0, a.float_value().prec());
    Scalar minus_a8 = -(a / eight);
    bool is_iv = exact ? b == minus_a8 : approx_equal(b, minus_a8, 1e-30);
    if (is_iv) out.push_back(resolve_case_d2(a));
    return out;
}

}  // namespace sharelab
