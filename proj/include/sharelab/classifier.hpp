#pragma once

#include <map>
#include <string>
#include <variant>
#include <vector>

#include "sharelab/qw.hpp"
#include "sharelab/verifier.hpp"

namespace sharelab {

enum class BranchKind { AllBMultiple, MixedSimpleAndMultiple };

// A structurally admissible (d, j, k) tuple: degree of P, multiplicity of
// the a-value at t = 0, common order of the zeros of f''.
struct CaseParams {
    int d = 0, j = 0, k = 0;
    BranchKind branch = BranchKind::AllBMultiple;

    friend bool operator==(const CaseParams& x, const CaseParams& y) {
        return x.d == y.d && x.j == y.j && x.k == y.k && x.branch == y.branch;
    }
};

struct RejectedCase {
    int d = 0, j = 0;
    std::string reason;
};

struct CaseEnumeration {
    std::vector<CaseParams> feasible;
    std::vector<RejectedCase> rejected;
};

// Walks every (d, j) with 2 <= d <= d_max, 1 <= j <= d and applies the
// structural constraints: 1 <= j < d; 2j <= d <= 3j; all-multiple branch
// needs j = 1 (then d in {2,3} and k = d-1); the mixed branch needs
// k = (d-j)/(j-1) an integer in [2,4] and d-j <= 2 (two possible
// derivative sequences at a-points cap the distinct a-point count).
CaseEnumeration enumerate_cases(int d_max = 12);

// lambda = d*b / (d^2 b - j^2 a); DegenerateDenominator when d^2 b = j^2 a.
Scalar lambda_from_djk(const Scalar& a, const Scalar& b, int d, int j);

// Exact consistency of the three exponent relations: with
// c = (k+1)b/(a-b) and lambda from above, both (lambda*d)^2 - lambda*d and
// (a/b)(lambda*j)^2 equal c, and c = d^2 j^2 a b / (d^2 b - j^2 a)^2.
bool lambda_relations_hold(const Scalar& a, const Scalar& b, int d, int j,
                           int k);

enum class FamilyKind { I, II, III, IV };

std::string family_kind_name(FamilyKind k);

// A solution family with named parameters; C is free wherever the family
// has a free nonzero constant.
struct SolutionFamily {
    FamilyKind kind;
    std::map<std::string, Scalar> parameters;
    std::vector<std::string> constraints;
};

// Instantiates the family as a concrete candidate (C defaults to 1).
CandidateFunction instantiate_family(const SolutionFamily& fam,
                                     const Scalar& C = Scalar::exact(1));

// Builds the degree-2 all-multiple solution from its ansatz: f = At(t-r)+a
// with r normalized to 1 forces A = 6a, lambda = 1/6, b = -a/8.
SolutionFamily resolve_case_d2(const Scalar& a);

// One branch of a refutation: a candidate parameter value and the exact
// discriminant of the quadratic factor of f'' (nonzero = no double root =
// case refuted). Values live in Q(i) or in Q(w).
struct RefutationBranch {
    std::string parameter;
    std::variant<GaussianRational, QwNumber> discriminant;
    bool nonzero = false;
    std::string rendered;
};

struct RefutationRecord {
    std::string case_label;
    std::string normalization;    // "r = 1"
    int homogeneity_degree = 2;   // the discriminant scales like r^2
    std::string exclusion;        // why the remaining parameter values drop out
    std::vector<RefutationBranch> branches;
    bool refuted = false;
};

// d = 3: the a-point conditions force s = +-i and the discriminant of the
// quadratic factor of f'' is -+4i, never zero.
RefutationRecord refute_case_d3();

// d = 4: the a-point conditions force w^3 = -1 (a sixth root of unity
// other than 1); the discriminant is 256 at w = -1 and -13w at the
// primitive roots (computed in Q(w)), never zero.
RefutationRecord refute_case_d4();

// The exponential family with a omitted: f = C e^{b z/(b-a)} + a. Also
// covers a = 0, where the family degenerates to C e^z (f identical with
// its derivative). Verifies the defining ratio b*P/(P' + lambda*P) is
// identically b - a for constant P and that the b-points of f' are simple
// with f = b there.
SolutionFamily picard_family(const Scalar& a, const Scalar& b);

// The full solution list for (a, b): always (i) a*z + C, (ii) C e^z,
// (iii) the exponential family above, plus (iv) iff b = -a/8 exactly.
std::vector<SolutionFamily> classify(const Scalar& a, const Scalar& b);

}  // namespace sharelab
