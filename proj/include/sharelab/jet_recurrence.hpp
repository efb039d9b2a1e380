#pragma once

#include "sharelab/function_model.hpp"

namespace sharelab {

enum class AnchorKind { AtAPoint, AtSimpleBPoint };

// Data the jet recurrence needs: the sharing values, the common order k of
// the zeros of f'', the constant c = (k+1)b/(a-b) of the differential
// identity, and which anchor contract the seed satisfies.
struct RecurrenceContext {
    Scalar a, b;
    int k = 1;
    Scalar c;
    AnchorKind anchor = AnchorKind::AtAPoint;
};

RecurrenceContext make_context(Scalar a, Scalar b, int k, AnchorKind anchor,
                               bool relaxed = false);

// Raised when the linear coefficient of the next derivative vanishes; the
// recurrence aborts instead of picking a branch. Carries the step and the
// context so the caller can consult the integer certificates.
class PivotVanished : public Error {
  public:
    PivotVanished(int n, const RecurrenceContext& ctx)
        : Error("pivot vanished at step n = " + std::to_string(n) +
                " (a = " + ctx.a.to_string() + ", b = " + ctx.b.to_string() +
                ", k = " + std::to_string(ctx.k) + ")"),
          n_(n), ctx_(ctx) {}
    int n() const { return n_; }
    const RecurrenceContext& context() const { return ctx_; }

  private:
    int n_;
    RecurrenceContext ctx_;
};

// The two admissible values of f'' at an a-point: a/2 +- sqrt(a^2+4(k+1)ab)/2.
struct FppAtAPoint {
    Scalar u, v;
    bool double_value = false;        // discriminant vanished, u == v
    bool demoted = false;             // square root forced the float regime
    bool zero_branch_flagged = false; // relaxed b=0 collapses one branch to 0
};
FppAtAPoint fpp_candidates_at_a(const RecurrenceContext& ctx,
                                long prec = BigFloat::kDefaultPrecision);

// f'' at a simple b-point of f': -k*b.
struct FppAtSimpleBPoint {
    Scalar value;
    bool degenerate = false;  // relaxed b=0: contract collapses
};
FppAtSimpleBPoint fpp_at_simple_b(const RecurrenceContext& ctx);

// Linear coefficient of f^(n+1) when the identity is differentiated n
// times at an a-point: (n+1) f'' - n f'.
Scalar a_point_pivot(int n, const Scalar& fpp, const Scalar& fprime);

// Same at a simple b-point: [1 - n(k+1)] b, never zero for n, k >= 1 and
// b != 0.
Scalar simple_b_pivot(int n, const RecurrenceContext& ctx);

// Extends a seed (f, f', f'') to order N by differentiating
// f''(f'-f) - c(f-a)(f'-b) = 0 exactly n times (full bilinear Leibniz
// expansion over jet indices), isolating f^(n+1) at the anchor, and
// dividing by the pivot. Exact inputs stay exact. Throws PivotVanished if
// some pivot is zero, and Error if the seed violates the anchor contract.
Jet jet_extend(const Jet& seed, const RecurrenceContext& ctx, int N,
               double tol = 1e-24);

// True iff the derivative sequences agree entrywise through order `upto`
// (exactly, or within tol across/inside the float regime). When true the
// anchors differ by a period of the underlying function.
bool jet_match(const Jet& j1, const Jet& j2, int upto, double tol);

// The exponent pair of the exceptional two-exponential family
// c*e^{l1 z}*sinh(l2 z) + a: l1 = n/(2(n+1)),
// l2 = sqrt(n^2/(4(n+1)^2) + (n/(n+1)) b/(a-b)). lambda2_squared stays
// exact so the algebraic identity l1^2 - l2^2 = -(n/(n+1)) b/(a-b) can be
// checked without a square root.
struct SinhExceptionalParams {
    Scalar lambda1;
    Scalar lambda2;
    Scalar lambda2_squared;
    bool demoted = false;
};
SinhExceptionalParams sinh_exceptional_params(int n, int k, const Scalar& a,
                                              const Scalar& b,
                                              long prec = BigFloat::kDefaultPrecision);

// The parameter relation forced by a vanishing a-point pivot at step n:
// a = -(n+1)^2 (k+1) b / n.
Scalar relation_a_from(int n, int k, const Scalar& b);

}  // namespace sharelab
