#pragma once

#include <optional>
#include <string>
#include <vector>

#include "sharelab/function_model.hpp"
#include "sharelab/roots.hpp"

namespace sharelab {

// The value pair of the sharing problem: f = a forces f' = a, and f' = b
// forces f = b. The standing hypotheses are a, b != 0 and a != b; relaxed
// mode admits a = 0 or b = 0 (for the counterexample battery) and
// watermarks every report it touches.
struct SharingProblem {
    Scalar a, b;
    bool relaxed = false;
};

SharingProblem make_problem(Scalar a, Scalar b, bool relaxed = false);

struct Witness {
    Scalar location;        // t for exp-poly candidates, z otherwise
    char implication;       // 'a' or 'b'
    Scalar lhs, rhs;        // attained value vs required value
    double defect;          // |lhs - rhs|
    bool location_in_t = true;
    // principal-branch z = log(t)/lambda, attached for convenience when
    // the location lives in the t-plane
    std::optional<Scalar> z_principal;
};

struct CountingData {
    int d = 0;
    int j = 0;
    std::optional<int> k;
    int n_a = 0, nbar_a = 0;
    int n_b_fprime = 0, nbar_b_fprime = 0;
    int n_0_fpp = 0;
};

// Which clauses of the counting relations fail for this data; empty for
// genuine solutions.
std::vector<std::string> counting_violations(const CountingData& c);

struct ImplicationResult {
    bool holds = true;
    std::vector<Witness> witnesses;
    std::vector<std::string> warnings;
    bool demoted = false;
};

struct VerificationReport {
    bool holds_a_implies = true;
    bool holds_b_implies = true;
    std::vector<Witness> witnesses;
    Scalar g_constant_estimate;
    double g_max_deviation = 0.0;
    std::optional<CountingData> counts;
    bool region_local = false;
    bool relaxed = false;
    bool demoted = false;
    std::vector<std::string> warnings;
    int newton_budget_exceeded = 0;
};

struct VerifyOptions {
    double tol = 1e-24;
    long precision_bits = BigFloat::kDefaultPrecision;
    int g_samples = 100;
    // Region and grid for expression candidates (region-local checks).
    double re_min = -5, re_max = 5, im_min = -5, im_max = 5;
    int grid = 21;
};

// f = a  =>  f' = a over the whole plane, decided completely in
// t-coordinates: every nonzero root t of P - a is an a-point and
// (dz P)(t) must equal a. Roots at t = 0 are not attained by e^{lambda z}
// and are excluded; float roots within tol of 0 are excluded with a
// warning (misclassification would flip j, so exact re-runs are advised).
ImplicationResult check_implication_a(const ExpPolyFunction& f,
                                      const SharingProblem& prob, double tol,
                                      long prec = BigFloat::kDefaultPrecision);

// f' = b  =>  f = b, symmetric over roots of dz P - b.
ImplicationResult check_implication_b(const ExpPolyFunction& f,
                                      const SharingProblem& prob, double tol,
                                      long prec = BigFloat::kDefaultPrecision);

struct GConstantResult {
    Scalar estimate;
    double max_deviation = 0.0;
    bool demoted = false;
};

// Samples g = f''(f' - f) / ((f - a)(f' - b)) and returns the mean and the
// maximal deviation. Exact candidates are sampled at exact rational points
// (an annulus in t for exp-poly candidates), so for genuine solutions the
// estimate is exact and the deviation is zero. Points that hit the
// denominator are resampled; AllSamplesDegenerate once the budget is gone.
GConstantResult check_g_constant(const CandidateFunction& f,
                                 const SharingProblem& prob, int samples,
                                 double tol,
                                 long prec = BigFloat::kDefaultPrecision);

// Counting data in the fundamental domain, read off polynomial roots:
// d = deg P, j = multiplicity of the a-value at t = 0, a-points from
// nonzero roots of P - a, b-points of f' from roots of dz P - b, zeros of
// f'' (and their common order k) from nonzero roots of dz^2 P.
CountingData counting(const ExpPolyFunction& f, const SharingProblem& prob,
                      double tol = 1e-24,
                      long prec = BigFloat::kDefaultPrecision);

struct Region {
    double re_min, re_max, im_min, im_max;
};

// Max of |f'| / (1 + |f|^2) over an evenly spaced grid.
BigFloat spherical_scan(const CandidateFunction& f, const Region& region,
                        int grid, long prec = BigFloat::kDefaultPrecision);

// Region-local verification for expression candidates: Newton searches for
// f = a and f' = b seeded from every grid node, deduplication within
// sqrt(tol), implication checks at the found points. Absence of witnesses
// is evidence, not proof; the report says so.
VerificationReport grid_verify_expr(const ExprFunction& f,
                                    const SharingProblem& prob,
                                    const Region& region, int grid, double tol,
                                    long prec = BigFloat::kDefaultPrecision);

// Umbrella entry point used by the CLI: complete verification for affine
// and exp-poly candidates, region-local for expression candidates.
VerificationReport verify_candidate(const CandidateFunction& f,
                                    const SharingProblem& prob,
                                    const VerifyOptions& opts = {});

// CLI exit-code contract: 0 holds, 1 violated with witnesses,
// 2 region-local pass (inconclusive), >2 errors.
int report_exit_code(const VerificationReport& r);

}  // namespace sharelab
