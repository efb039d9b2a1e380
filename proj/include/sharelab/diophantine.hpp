#pragma once

#include <array>
#include <optional>
#include <set>
#include <string>
#include <tuple>
#include <utility>
#include <vector>

#include "sharelab/scalar.hpp"

namespace sharelab {

// Element x + y*sqrt(3) of Z[sqrt(3)].
struct Zsqrt3 {
    Int x, y;
};

Zsqrt3 zsqrt3_mul(const Zsqrt3& p, const Zsqrt3& q);
// Multiplicative norm x^2 - 3 y^2.
Int zsqrt3_norm(const Zsqrt3& p);

// Exact perfect-square test; negative integers are never squares.
bool is_square(const Int& m);

// All n in [1, n_max] with (k+1)(n+1)^2 + n a perfect square.
std::vector<long> square_family_scan(int k, long n_max);

// Residues of 5(n+1)^2+n and of squares modulo 9; they are disjoint, which
// settles the k = 4 family by congruence alone.
struct Mod9Certificate {
    std::set<int> value_residues;
    std::set<int> square_residues;
    bool disjoint = false;
};
Mod9Certificate mod_sieve_k4();

// Solutions of x^2 - y^2 = 17 with x = 8n+9, y = 4s mapped back to n; the
// factorization (x+y)(x-y) = 17 over positive integers settles the k = 3
// family.
struct DiffSquaresSolution {
    long x, y, n;
};
std::vector<DiffSquaresSolution> diff_squares_k3();

enum class Parity { Even, Odd, Any };

// Norm-form instance x^2 - D y^2 = N restricted to x, y > 0 inside the
// region x + y*sqrt(D) <= bound, with optional congruence and parity
// constraints.
struct PellInstance {
    Int D = 3;
    Int N = 13;
    std::optional<std::pair<Int, Int>> x_congruence;  // (residue, modulus)
    Parity y_parity = Parity::Any;
    Rat bound = 51;
};

struct DescentCertificate {
    bool closure_checked = false;
    bool closure_pass = false;
    long closure_modulus = 0;
    bool bound_pass = false;
    std::string bound_comparison;
    long enumerated = 0;
};

struct PellResult {
    std::vector<std::pair<Int, Int>> solutions;
    DescentCertificate certificate;
};

// Phase 1 proves (over all residue pairs modulo lcm(modulus, 12)) that
// division by the unit's conjugate preserves the constraints, and that the
// bound survives one descent step above sqrt(N) (exact integer
// comparisons). Phase 2 enumerates the finite region and tests the norm
// form. Default unit for D = 3 is 7 + 4 sqrt(3); any norm-1 unit > 1 is
// accepted, otherwise InvalidUnit.
PellResult pell_descent(const PellInstance& inst,
                        std::optional<Zsqrt3> unit = std::nullopt);

// Exact feasibility sweep of (1 - 1/m^2)[(n+1)^2(k+1) + n] = 4(n+1) over
// odd m, plus the two closed sub-arguments (m = 1 side is zero; for odd
// m >= 3 the left side already exceeds the right for n >= 2, k >= 1).
struct MnkCertificate {
    std::vector<std::tuple<long, long, long>> solutions;  // (m, n, k)
    bool m1_impossible = false;
    bool m_ge3_inequality = false;
    long checked = 0;
};
MnkCertificate mnk_feasible(long n_max, long k_max, long m_max);

// Exact test of d^2 j^2 (n+1)^2 ((k+1)(n+1)^2 + n) = (d^2 n + j^2 (n+1)^2 (k+1))^2.
bool dj_equation_check(long d, long j, long k, long n);

// Exhaustive sweep; solutions inside the admissible cone 2j <= d <= 3j,
// j >= 1, d > j are reported separately from out-of-domain hits.
struct DjSweepResult {
    std::vector<std::array<long, 4>> admissible;      // (d, j, k, n)
    std::vector<std::array<long, 4>> out_of_domain;
    long checked = 0;
};
DjSweepResult dj_equation_sweep(long d_max, long j_max, long k_min, long k_max,
                                long n_max);

}  // namespace sharelab
