#include "sharelab/jet_recurrence.hpp"

namespace sharelab {

namespace {

Scalar scalar_int(long v, const Scalar& like) {
    if (like.is_exact()) return Scalar::exact(v);
    return Scalar(BigComplex(double(v), 0.0, like.float_value().prec()));
}

Scalar binom_scalar(int n, int i, const Scalar& like) {
    Int b;
    mpz_bin_uiui(b.get_mpz_t(), static_cast<unsigned long>(n),
                 static_cast<unsigned long>(i));
    if (like.is_exact()) return Scalar::exact(Rat(b));
    return Scalar(BigComplex(BigFloat(Rat(b), like.float_value().prec()),
                             BigFloat(like.float_value().prec())));
}

}  // namespace

RecurrenceContext make_context(Scalar a, Scalar b, int k, AnchorKind anchor,
                               bool relaxed) {
    if (k < 1) throw InvalidParameters("recurrence context needs k >= 1");
    bool exact = a.is_exact() && b.is_exact();
    if (!relaxed) {
        if (a.is_zero() || b.is_zero())
            throw InvalidParameters("a and b must be nonzero (use relaxed mode)");
    }
    if (exact) {
        if (a == b) throw InvalidParameters("a and b must differ");
    } else if (approx_equal(a, b, 1e-30)) {
        throw InvalidParameters("a and b must differ");
    }
    Scalar kp1 = scalar_int(k + 1, a.is_exact() ? a : b);
    Scalar c = kp1 * b / (a - b);
    return RecurrenceContext{std::move(a), std::move(b), k, std::move(c), anchor};
}

FppAtAPoint fpp_candidates_at_a(const RecurrenceContext& ctx, long prec) {
    if (ctx.anchor != AnchorKind::AtAPoint)
        throw InvalidParameters("context is not anchored at an a-point");
    const Scalar& a = ctx.a;
    const Scalar& b = ctx.b;
    Scalar four_k1 = scalar_int(4 * (ctx.k + 1), a);
    Scalar disc = a * a + four_k1 * a * b;
    SqrtResult root = scalar_sqrt(disc, prec);
    Scalar two = scalar_int(2, a);
    Scalar half_a = a / two;
    Scalar au = half_a;
    Scalar av = half_a;
    if (root.demoted) {
        BigComplex af = a.to_float(prec);
        BigComplex tw(2.0, 0.0, prec);
        BigComplex r = root.value.float_value();
        au = Scalar(af / tw + r / tw);
        av = Scalar(af / tw - r / tw);
    } else {
        au = half_a + root.value / two;
        av = half_a - root.value / two;
    }
    FppAtAPoint out;
    out.u = au;
    out.v = av;
    out.demoted = root.demoted;
    out.double_value = disc.is_zero();
    out.zero_branch_flagged = ctx.b.is_zero() && (au.is_zero() || av.is_zero());
    return out;
}

FppAtSimpleBPoint fpp_at_simple_b(const RecurrenceContext& ctx) {
    if (ctx.anchor != AnchorKind::AtSimpleBPoint)
        throw InvalidParameters("context is not anchored at a simple b-point");
    Scalar v = scalar_int(-ctx.k, ctx.b) * ctx.b;
    return FppAtSimpleBPoint{v, ctx.b.is_zero()};
}

Scalar a_point_pivot(int n, const Scalar& fpp, const Scalar& fprime) {
    if (n < 2) throw InvalidParameters("a-point pivot needs n >= 2");
    return scalar_int(n + 1, fpp) * fpp - scalar_int(n, fprime) * fprime;
}

Scalar simple_b_pivot(int n, const RecurrenceContext& ctx) {
    if (n < 1) throw InvalidParameters("simple-b pivot needs n >= 1");
    return scalar_int(1 - static_cast<long>(n) * (ctx.k + 1), ctx.b) * ctx.b;
}

Jet jet_extend(const Jet& seed, const RecurrenceContext& ctx, int N,
               double tol) {
    if (seed.order() != 2)
        throw InvalidParameters("jet_extend seed must have order 2");
    if (N < 2) throw InvalidParameters("jet_extend target order must be >= 2");

    bool exact = seed.derivs[0].is_exact();
    for (const auto& d : seed.derivs)
        if (d.is_exact() != exact)
            throw MixedRegime("seed mixes scalar regimes");

    Scalar a = ctx.a, b = ctx.b, c = ctx.c;
    if (exact && !(a.is_exact() && b.is_exact()))
        throw MixedRegime("exact seed with float context");
    if (!exact) {
        long prec = seed.derivs[0].float_value().prec();
        a = Scalar(a.to_float(prec));
        b = Scalar(b.to_float(prec));
        c = Scalar(c.to_float(prec));
    }

    auto expect = [&](const Scalar& got, const Scalar& want, const char* what) {
        bool ok = exact ? got == want : approx_equal(got, want, tol);
        if (!ok)
            throw InvalidParameters(std::string("seed violates the anchor contract: ") +
                                    what);
    };
    const Scalar& anchor_value = ctx.anchor == AnchorKind::AtAPoint ? a : b;
    expect(seed.derivs[0], anchor_value, "f(z0)");
    expect(seed.derivs[1], anchor_value, "f'(z0)");
    if (ctx.anchor == AnchorKind::AtAPoint) {
        FppAtAPoint cand = fpp_candidates_at_a(ctx);
        Scalar u = exact ? cand.u : Scalar(cand.u.to_float(seed.derivs[0].float_value().prec()));
        Scalar v = exact ? cand.v : Scalar(cand.v.to_float(seed.derivs[0].float_value().prec()));
        bool ok = exact ? (seed.derivs[2] == u || seed.derivs[2] == v)
                        : (approx_equal(seed.derivs[2], u, tol) ||
                           approx_equal(seed.derivs[2], v, tol));
        if (!ok)
            throw InvalidParameters("seed violates the anchor contract: f''(z0)");
    } else {
        Scalar want = scalar_int(-ctx.k, b) * b;
        expect(seed.derivs[2], want, "f''(z0)");
    }

    std::vector<Scalar> x = seed.derivs;
    x.reserve(static_cast<size_t>(N) + 1);

    Scalar zero = scalar_int(0, x[0]);
    for (int n = 2; n < N; ++n) {
        // Self-check: the coefficient of the unknown-plus-one derivative
        // f^(n+2) in the expanded identity is f' - f, which the anchor
        // contract makes zero.
        Scalar top_coeff = x[1] - x[0];
        bool top_ok = exact ? top_coeff.is_zero() : approx_equal(top_coeff, zero, tol);
        if (!top_ok)
            throw Error("internal: f^(n+2) coefficient did not vanish at the anchor");

        // Treat x[n+1] (and x[n+2]) as zero and accumulate the known part
        // of   sum_i C(n,i) x_{2+i} (x_{1+n-i} - x_{n-i})
        //    - c sum_i C(n,i) (x_i - a [i=0]) (x_{1+n-i} - b [i=n]).
        auto val = [&](int idx) -> Scalar {
            return idx <= n ? x[static_cast<size_t>(idx)] : zero;
        };
        Scalar known = zero;
        Scalar pivot = zero;
        for (int i = 0; i <= n; ++i) {
            Scalar bin = binom_scalar(n, i, x[0]);
            // left factor pair: (x_{2+i}, x_{1+n-i} - x_{n-i})
            {
                Scalar lhs = val(2 + i);
                Scalar rhs = val(1 + n - i) - val(n - i);
                known = known + bin * lhs * rhs;
                if (2 + i == n + 1) pivot = pivot + bin * rhs;
                if (1 + n - i == n + 1) pivot = pivot + bin * lhs;
            }
            // right factor pair: (x_i - a [i=0], x_{1+n-i} - b [i=n])
            {
                Scalar lhs = val(i) - (i == 0 ? a : zero);
                Scalar rhs = val(1 + n - i) - (i == n ? b : zero);
                known = known - c * bin * lhs * rhs;
                if (1 + n - i == n + 1) pivot = pivot - c * bin * lhs;
            }
        }

        // Structural cross-check against the closed pivot forms.
        Scalar expected_pivot =
            ctx.anchor == AnchorKind::AtAPoint
                ? a_point_pivot(n, x[2], x[1])
                : scalar_int(1 - static_cast<long>(n) * (ctx.k + 1), b) * b;
        bool pivot_ok = exact ? pivot == expected_pivot
                              : approx_equal(pivot, expected_pivot, tol);
        if (!pivot_ok)
            throw Error("internal: pivot disagrees with its closed form");

        bool vanished = exact ? pivot.is_zero() : approx_equal(pivot, zero, tol);
        if (vanished) throw PivotVanished(n, ctx);

        x.push_back(-(known / pivot));
    }

    return Jet{seed.anchor, std::move(x)};
}

bool jet_match(const Jet& j1, const Jet& j2, int upto, double tol) {
    if (j1.order() < upto || j2.order() < upto)
        throw InvalidParameters("jets are shorter than the comparison order");
    for (int n = 0; n <= upto; ++n) {
        const Scalar& x = j1.derivs[static_cast<size_t>(n)];
        const Scalar& y = j2.derivs[static_cast<size_t>(n)];
        if (x.is_exact() && y.is_exact()) {
            if (!(x == y)) return false;
        } else if (!approx_equal(x, y, tol)) {
            return false;
        }
    }
    return true;
}

SinhExceptionalParams sinh_exceptional_params(int n, int k, const Scalar& a,
                                              const Scalar& b, long prec) {
    if (n < 2 || k < 1)
        throw InvalidParameters("sinh parameters need n >= 2, k >= 1");
    Scalar np1 = scalar_int(n + 1, a);
    Scalar nn = scalar_int(n, a);
    Scalar two = scalar_int(2, a);
    Scalar four = scalar_int(4, a);
    Scalar l1 = nn / (two * np1);
    Scalar l2sq = nn * nn / (four * np1 * np1) + (nn / np1) * (b / (a - b));
    SqrtResult r = scalar_sqrt(l2sq, prec);
    return SinhExceptionalParams{l1, r.value, l2sq, r.demoted};
}

Scalar relation_a_from(int n, int k, const Scalar& b) {
    if (n < 1 || k < 1) throw InvalidParameters("relation needs n, k >= 1");
    Scalar np1 = scalar_int(n + 1, b);
    return -(np1 * np1 * scalar_int(k + 1, b) * b) / scalar_int(n, b);
}

}  // namespace sharelab
