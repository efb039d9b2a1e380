#include "sharelab/roots.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

namespace sharelab {

namespace {

// Aberth-Ehrlich on a monic float polynomial; returns approximations of all
// roots (no clustering here).
std::vector<BigComplex> aberth(const std::vector<BigComplex>& monic, long prec,
                               int max_iters) {
    const size_t d = monic.size() - 1;  // degree; coeffs lowest first, lead 1
    BigFloat one(1.0, prec);

    // Cauchy bound: all roots lie within 1 + max |c_i|.
    BigFloat radius = one;
    for (size_t i = 0; i < d; ++i) {
        BigFloat m = monic[i].abs();
        if (m > radius) radius = m;
    }
    radius = radius + one;

    std::vector<BigComplex> z;
    z.reserve(d);
    BigFloat pi = BigFloat::pi(prec);
    for (size_t k = 0; k < d; ++k) {
        // Slightly irrational-looking start angle breaks symmetric stalls.
        BigFloat ang = (BigFloat(2.0, prec) * pi * BigFloat(double(k), prec)) /
                           BigFloat(double(d), prec) +
                       BigFloat(0.4, prec);
        z.push_back(BigComplex(radius * ang.cos(), radius * ang.sin()));
    }

    // Stop once every correction is below ~2^(-prec+8) relative.
    BigFloat step_tol = BigFloat::pow2(-(prec - 8), prec);

    for (int iter = 0; iter < max_iters; ++iter) {
        bool moved = false;
        for (size_t i = 0; i < d; ++i) {
            // Horner for p and p' at z[i].
            BigComplex p(BigFloat(1.0, prec), BigFloat(prec));
            BigComplex dp(prec);
            for (size_t k = monic.size() - 1; k-- > 0;) {
                dp = dp * z[i] + p;
                p = p * z[i] + monic[k];
            }
            if (p.is_zero()) continue;
            BigComplex newton = dp.is_zero()
                                    ? BigComplex(BigFloat(1e-3, prec), BigFloat(prec))
                                    : p / dp;
            BigComplex sum(prec);
            for (size_t j = 0; j < d; ++j) {
                if (j == i) continue;
                BigComplex diff = z[i] - z[j];
                if (diff.is_zero()) {
                    // nudge coincident iterates apart
                    diff = BigComplex(BigFloat(1e-20, prec), BigFloat(1e-20, prec));
                }
                sum = sum + BigComplex(BigFloat(1.0, prec), BigFloat(prec)) / diff;
            }
            BigComplex denom =
                BigComplex(BigFloat(1.0, prec), BigFloat(prec)) - newton * sum;
            BigComplex w = denom.is_zero() ? newton : newton / denom;
            z[i] = z[i] - w;
            if (w.abs() > step_tol * (one + z[i].abs())) moved = true;
        }
        if (!moved) break;
    }
    return z;
}

double eval_residual(const std::vector<BigComplex>& monic, const BigComplex& at) {
    long prec = at.prec();
    BigComplex p(BigFloat(1.0, prec), BigFloat(prec));
    for (size_t k = monic.size() - 1; k-- > 0;) p = p * at + monic[k];
    return p.abs().to_double();
}

// Newton on the (m-1)-th derivative of the monic polynomial, which has a
// simple root at the center of an m-fold cluster. The plain iteration
// stalls at the rounding-noise floor for multiple roots; this polish
// restores full working accuracy.
BigComplex polish_cluster_center(const std::vector<BigComplex>& monic,
                                 BigComplex z, int multiplicity,
                                 double max_drift) {
    long prec = z.prec();
    std::vector<BigComplex> q = monic;
    for (int d = 1; d < multiplicity; ++d) {
        std::vector<BigComplex> dq;
        dq.reserve(q.size() - 1);
        for (size_t i = 1; i < q.size(); ++i)
            dq.push_back(q[i] * BigComplex(double(i), 0.0, prec));
        q = std::move(dq);
    }
    BigComplex start = z;
    for (int it = 0; it < 64; ++it) {
        BigComplex p(prec), dp(prec);
        for (size_t k = q.size(); k-- > 0;) {
            dp = dp * z + p;
            p = p * z + q[k];
        }
        if (dp.is_zero()) break;
        BigComplex step = p / dp;
        z = z - step;
        if (step.abs().to_double() < 1e-300) break;
    }
    if ((z - start).abs().to_double() > max_drift) return start;
    return z;
}

// Cluster approximations into multiple roots. Radius: an eps-perturbed
// m-fold root splits by ~eps^(1/m), so anything within (10*tol)^(1/d) of
// each other is treated as one root.
std::vector<Root> cluster_roots(const std::vector<BigComplex>& zs, double tol,
                                const std::vector<BigComplex>& monic) {
    const size_t d = zs.size();
    double radius = std::pow(10.0 * tol, 1.0 / static_cast<double>(d));
    std::vector<int> parent(d);
    std::iota(parent.begin(), parent.end(), 0);
    auto find = [&](int i) {
        while (parent[i] != i) i = parent[i] = parent[parent[i]];
        return i;
    };
    for (size_t i = 0; i < d; ++i)
        for (size_t j = i + 1; j < d; ++j) {
            double dist = (zs[i] - zs[j]).abs().to_double();
            double scale = std::max(1.0, std::min(zs[i].abs().to_double(),
                                                  zs[j].abs().to_double()));
            if (dist <= radius * scale) parent[find(int(i))] = find(int(j));
        }
    std::vector<Root> out;
    std::vector<int> seen;
    for (size_t i = 0; i < d; ++i) {
        int r = find(int(i));
        if (std::find(seen.begin(), seen.end(), r) != seen.end()) continue;
        seen.push_back(r);
        // centroid of the cluster
        long prec = zs[i].prec();
        BigComplex sum(prec);
        int count = 0;
        for (size_t j = 0; j < d; ++j)
            if (find(int(j)) == r) {
                sum = sum + zs[j];
                ++count;
            }
        BigComplex loc = sum / BigComplex(double(count), 0.0, prec);
        if (count > 1)
            loc = polish_cluster_center(monic, loc, count,
                                        radius * std::max(1.0, loc.abs().to_double()));
        out.push_back({Scalar(loc), count, eval_residual(monic, loc)});
    }
    return out;
}

std::vector<BigComplex> monic_float_coeffs(const Poly& p, long prec) {
    std::vector<BigComplex> c;
    c.reserve(p.coeffs().size());
    for (const auto& s : p.coeffs()) c.push_back(s.to_float(prec));
    BigComplex lead = c.back();
    for (auto& x : c) x = x / lead;
    return c;
}

// Roots of a square-free float polynomial; multiplicity is attached by the
// caller. Throws NoConvergence if residual certification fails.
std::vector<Root> float_roots_certified(const Poly& p, double tol,
                                        const RootConfig& cfg, bool cluster) {
    auto monic = monic_float_coeffs(p, cfg.precision_bits);
    auto zs = aberth(monic, cfg.precision_bits, cfg.max_iterations);
    std::vector<Root> roots;
    if (cluster) {
        roots = cluster_roots(zs, tol, monic);
    } else {
        for (const auto& z : zs)
            roots.push_back({Scalar(z), 1, eval_residual(monic, z)});
    }
    for (const auto& r : roots)
        if (!(r.residual <= tol))
            throw NoConvergence("root certification failed: residual " +
                                std::to_string(r.residual) + " > tol after " +
                                std::to_string(cfg.max_iterations) +
                                " iterations");
    return roots;
}

// Exact roots of a monic square-free exact factor if they lie in Q(i).
std::optional<std::vector<Scalar>> exact_factor_roots(const Poly& f) {
    int deg = *f.degree();
    if (deg == 1) {
        return std::vector<Scalar>{-(f.coeff(0) / f.coeff(1))};
    }
    if (deg == 2) {
        Scalar a = f.coeff(2), b = f.coeff(1), c = f.coeff(0);
        Scalar disc = discriminant_quadratic(a, b, c);
        SqrtResult s = scalar_sqrt(disc);
        if (s.demoted) return std::nullopt;
        Scalar two_a = Scalar::exact(2) * a;
        return std::vector<Scalar>{(-b + s.value) / two_a,
                                   (-b - s.value) / two_a};
    }
    return std::nullopt;
}

}  // namespace

RootSet poly_roots(const Poly& p, double tol, const RootConfig& cfg) {
    if (p.is_zero() || *p.degree() < 1)
        throw Error("poly_roots needs degree >= 1");
    if (!(tol > 0)) throw Error("poly_roots needs tol > 0");

    RootSet out;
    if (p.regime() == Regime::Exact) {
        int v = *p.order_at_zero();
        if (v > 0) out.roots.push_back({Scalar::exact(0), v, 0.0});
        std::vector<Scalar> shifted(p.coeffs().begin() + v, p.coeffs().end());
        Poly body(std::move(shifted));
        if (*body.degree() == 0) return out;
        for (const auto& sf : squarefree_decomposition(body)) {
            if (auto roots = exact_factor_roots(sf.factor)) {
                for (const auto& r : *roots)
                    out.roots.push_back({r, sf.multiplicity, 0.0});
            } else {
                out.demoted = true;
                for (const auto& r :
                     float_roots_certified(sf.factor, tol, cfg, false)) {
                    out.roots.push_back({r.location, sf.multiplicity, r.residual});
                }
            }
        }
        return out;
    }

    // Float path: strip exact zeros at the bottom, then Aberth + clustering.
    int v = *p.order_at_zero();
    long prec = p.leading().float_value().prec();
    if (v > 0) out.roots.push_back({Scalar(BigComplex(prec)), v, 0.0});
    std::vector<Scalar> shifted(p.coeffs().begin() + v, p.coeffs().end());
    Poly body(std::move(shifted));
    if (*body.degree() == 0) return out;
    RootConfig c = cfg;
    c.precision_bits = std::max(cfg.precision_bits, prec);
    for (const auto& r : float_roots_certified(body, tol, c, true))
        out.roots.push_back(r);
    return out;
}

}  // namespace sharelab
