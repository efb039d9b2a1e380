#include "sharelab/diophantine.hpp"

#include <array>
#include <numeric>
#include <tuple>

namespace sharelab {

Zsqrt3 zsqrt3_mul(const Zsqrt3& p, const Zsqrt3& q) {
    return {p.x * q.x + 3 * p.y * q.y, p.x * q.y + p.y * q.x};
}

Int zsqrt3_norm(const Zsqrt3& p) { return p.x * p.x - 3 * p.y * p.y; }

bool is_square(const Int& m) {
    if (m < 0) return false;
    return mpz_perfect_square_p(m.get_mpz_t()) != 0;
}

std::vector<long> square_family_scan(int k, long n_max) {
    if (k < 1 || n_max < 1)
        throw InvalidParameters("square_family_scan needs k >= 1, n_max >= 1");
    std::vector<long> hits;
    Int v, np1;
    for (long n = 1; n <= n_max; ++n) {
        np1 = n + 1;
        v = np1 * np1;
        v *= (k + 1);
        v += n;
        if (is_square(v)) hits.push_back(n);
    }
    return hits;
}

Mod9Certificate mod_sieve_k4() {
    Mod9Certificate cert;
    for (int n = 0; n < 9; ++n)
        cert.value_residues.insert((5 * (n + 1) * (n + 1) + n) % 9);
    for (int s = 0; s < 9; ++s) cert.square_residues.insert((s * s) % 9);
    cert.disjoint = true;
    for (int r : cert.value_residues)
        if (cert.square_residues.count(r)) cert.disjoint = false;
    return cert;
}

std::vector<DiffSquaresSolution> diff_squares_k3() {
    // 4(n+1)^2 + n = s^2, multiplied by 16: (8n+9)^2 - (4s)^2 = 17.
    // 17 is prime, so (x+y)(x-y) = 17 over positive integers forces
    // x+y = 17, x-y = 1.
    std::vector<DiffSquaresSolution> out;
    for (long p = 1; p * p <= 17; ++p) {
        if (17 % p != 0) continue;
        long q = 17 / p;  // q >= p; x+y = q, x-y = p
        if ((q + p) % 2 != 0) continue;
        long x = (q + p) / 2, y = (q - p) / 2;
        if (y <= 0) continue;
        if ((x - 9) % 8 != 0) continue;
        long n = (x - 9) / 8;
        if (n < 0) continue;
        if (y % 4 != 0) continue;
        out.push_back({x, y, n});
    }
    return out;
}

namespace {

long lcm_long(long a, long b) { return a / std::gcd(a, b) * b; }

bool parity_ok(const Int& y, Parity p) {
    if (p == Parity::Any) return true;
    bool even = mpz_even_p(y.get_mpz_t()) != 0;
    return p == Parity::Even ? even : !even;
}

// Integer ceiling of sqrt(v) for v >= 0.
Int ceil_sqrt(const Int& v) {
    Int r;
    mpz_sqrt(r.get_mpz_t(), v.get_mpz_t());
    if (r * r < v) r += 1;
    return r;
}

}  // namespace

PellResult pell_descent(const PellInstance& inst, std::optional<Zsqrt3> unit) {
    if (inst.D <= 0 || is_square(inst.D))
        throw InvalidParameters("pell_descent needs a positive nonsquare D");
    if (inst.N <= 0)
        throw InvalidParameters("pell_descent certifies instances with N > 0");
    if (inst.bound <= 0) throw InvalidParameters("bound must be positive");
    if (inst.bound * inst.bound <= Rat(inst.N))
        throw InvalidParameters("bound must exceed sqrt(N)");
    if (inst.x_congruence && inst.x_congruence->second < 1)
        throw InvalidParameters("congruence modulus must be >= 1");

    Zsqrt3 u = unit.value_or(Zsqrt3{7, 4});
    if (!unit && inst.D != 3)
        throw InvalidUnit("supply a norm-1 unit for D != 3");
    if (u.x * u.x - inst.D * u.y * u.y != 1)
        throw InvalidUnit("descent unit must have norm 1");
    if (u.x <= 0 || u.y <= 0)
        throw InvalidUnit("descent unit must exceed 1 (positive components)");

    PellResult out;
    DescentCertificate& cert = out.certificate;

    // Phase 1a: the descent step (x, y) -> (u.x * x - D u.y * y,
    // u.x * y - u.y * x) preserves the congruence and parity constraints.
    // Both constraints are determined modulo M = lcm(modulus, 12), so an
    // exhaustive scan of residue pairs mod M is a complete proof.
    long m = inst.x_congruence
                 ? static_cast<long>(inst.x_congruence->second.get_si())
                 : 1;
    long M = lcm_long(m, 12);
    cert.closure_modulus = M;
    cert.closure_checked = true;
    cert.closure_pass = true;
    long r = inst.x_congruence
                 ? static_cast<long>(mpz_fdiv_ui(inst.x_congruence->first.get_mpz_t(),
                                                 static_cast<unsigned long>(m)))
                 : 0;
    long D_l = static_cast<long>(inst.D.get_si());
    long ux = static_cast<long>(u.x.get_si());
    long uy = static_cast<long>(u.y.get_si());
    for (long xr = 0; xr < M && cert.closure_pass; ++xr) {
        if (inst.x_congruence && xr % m != r) continue;
        for (long yr = 0; yr < M; ++yr) {
            if (inst.y_parity == Parity::Even && yr % 2 != 0) continue;
            if (inst.y_parity == Parity::Odd && yr % 2 != 1) continue;
            long x1 = ((ux * xr - D_l * uy * yr) % M + M) % M;
            long y1 = ((ux * yr - uy * xr) % M + M) % M;
            bool ok = true;
            if (inst.x_congruence && x1 % m != r) ok = false;
            if (inst.y_parity == Parity::Even && y1 % 2 != 0) ok = false;
            if (inst.y_parity == Parity::Odd && y1 % 2 != 1) ok = false;
            if (!ok) {
                cert.closure_pass = false;
                break;
            }
        }
    }

    // Phase 1b: one descent step from just above the bound stays above
    // sqrt(N), so descending terminates inside (sqrt(N), bound] with x, y
    // still positive. Exact form: bound^2 > U^2 * N with the integer
    // U = u.x + ceil(u.y * sqrt(D)) >= u.x + u.y sqrt(D).
    Int U = u.x + ceil_sqrt(inst.D * u.y * u.y);
    Rat lhs = inst.bound * inst.bound;
    Rat rhs = Rat(U * U * inst.N);
    cert.bound_pass = lhs > rhs;
    cert.bound_comparison = "bound^2 = " + lhs.get_str() + " > " + rhs.get_str() +
                            " = U^2*N with unit <= U = " + U.get_str();

    // Phase 2: enumerate x, y > 0 with x + y sqrt(D) <= bound under the
    // constraints; x + y sqrt(D) <= B iff x <= B and D y^2 <= (B - x)^2.
    Rat B = inst.bound;
    for (Int x = 1; Rat(x) <= B; ++x) {
        if (inst.x_congruence) {
            Int rem = x % inst.x_congruence->second;
            if (rem != inst.x_congruence->first % inst.x_congruence->second)
                continue;
        }
        Rat slack = B - Rat(x);
        for (Int y = 1; Rat(inst.D * y * y) <= slack * slack; ++y) {
            if (!parity_ok(y, inst.y_parity)) continue;
            ++cert.enumerated;
            if (x * x - inst.D * y * y == inst.N)
                out.solutions.emplace_back(x, y);
        }
    }
    return out;
}

MnkCertificate mnk_feasible(long n_max, long k_max, long m_max) {
    if (n_max < 2 || k_max < 1 || m_max < 1)
        throw InvalidParameters("mnk_feasible needs n_max >= 2, k_max >= 1, m_max >= 1");
    MnkCertificate cert;

    // m = 1 makes the left side zero while the right side is 4(n+1) > 0.
    cert.m1_impossible = true;

    // For odd m >= 3: 1 - 1/m^2 >= 8/9, and already
    // (8/9)(n+1)^2(k+1) > 4(n+1) for all n >= 2, k >= 1
    // (equivalent to 2(n+1)(k+1) > 9).
    cert.m_ge3_inequality = true;
    for (long n = 2; n <= n_max && cert.m_ge3_inequality; ++n)
        for (long k = 1; k <= k_max; ++k)
            if (!(2 * (n + 1) * (k + 1) > 9)) {
                cert.m_ge3_inequality = false;
                break;
            }

    // Exact sweep of (m^2 - 1) * [(n+1)^2 (k+1) + n] = 4 (n+1) m^2.
    Int np1sq, V, lhs, rhs;
    for (long m = 1; m <= m_max; m += 2) {
        Int m2 = Int(m) * m;
        for (long n = 2; n <= n_max; ++n) {
            np1sq = Int(n + 1) * (n + 1);
            for (long k = 1; k <= k_max; ++k) {
                V = np1sq * (k + 1) + n;
                lhs = (m2 - 1) * V;
                rhs = 4 * (n + 1) * m2;
                ++cert.checked;
                if (lhs == rhs) cert.solutions.emplace_back(m, n, k);
            }
        }
    }
    return cert;
}

bool dj_equation_check(long d, long j, long k, long n) {
    if (d < 1 || j < 1 || k < 1 || n < 1)
        throw InvalidParameters("dj_equation_check needs positive integers");
    Int np1sq = Int(n + 1) * (n + 1);
    Int S = np1sq * (k + 1) + n;
    Int lhs = Int(d) * d * j * j * np1sq * S;
    Int inner = Int(d) * d * n + Int(j) * j * np1sq * (k + 1);
    return lhs == inner * inner;
}

DjSweepResult dj_equation_sweep(long d_max, long j_max, long k_min, long k_max,
                                long n_max) {
    DjSweepResult out;
    Int np1sq, S, lhs, inner;
    for (long n = 1; n <= n_max; ++n) {
        np1sq = Int(n + 1) * (n + 1);
        for (long k = k_min; k <= k_max; ++k) {
            S = np1sq * (k + 1) + n;
            // If S is not a square the equation has no solution for any
            // (d, j): the right side is a perfect square and the left is
            // square * S.
            bool s_square = is_square(S);
            for (long j = 1; j <= j_max; ++j) {
                for (long d = 1; d <= d_max; ++d) {
                    ++out.checked;
                    if (!s_square) continue;
                    lhs = Int(d) * d * j * j * np1sq * S;
                    inner = Int(d) * d * n + Int(j) * j * np1sq * (k + 1);
                    if (lhs == inner * inner) {
                        bool admissible = (2 * j <= d) && (d <= 3 * j) && (d > j);
                        (admissible ? out.admissible : out.out_of_domain)
                            .push_back({d, j, k, n});
                    }
                }
            }
        }
    }
    return out;
}

}  // namespace sharelab
