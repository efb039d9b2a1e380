#pragma once

#include <optional>
#include <string>
#include <vector>

#include "sharelab/scalar.hpp"

namespace sharelab {

// Polynomial over Scalar, coefficients lowest power first, canonically
// trimmed (leading coefficient nonzero). The zero polynomial is the empty
// sequence and its degree is reported as nullopt ("minus infinity").
// All coefficients of one polynomial share a regime.
class Poly {
  public:
    Poly() = default;
    explicit Poly(std::vector<Scalar> coeffs);

    static Poly zero() { return Poly(); }
    static Poly constant(Scalar c) { return Poly({std::move(c)}); }
    static Poly from_exact(std::initializer_list<long> coeffs);

    bool is_zero() const { return c_.empty(); }
    std::optional<int> degree() const {
        if (c_.empty()) return std::nullopt;
        return static_cast<int>(c_.size()) - 1;
    }
    int degree_or(int sentinel) const { return degree().value_or(sentinel); }

    const std::vector<Scalar>& coeffs() const { return c_; }
    // Coefficient of t^i; zero scalar of the poly's regime beyond the end.
    Scalar coeff(size_t i) const;
    const Scalar& leading() const;

    Regime regime() const;
    Poly to_float(long prec) const;

    // Multiplicity of the root t = 0 (index of the first nonzero
    // coefficient); nullopt for the zero polynomial.
    std::optional<int> order_at_zero() const;

    Scalar eval(const Scalar& t) const;
    std::string to_string(const std::string& var = "t") const;

  private:
    std::vector<Scalar> c_;
};

Poly poly_add(const Poly& p, const Poly& q);
Poly poly_sub(const Poly& p, const Poly& q);
Poly poly_mul(const Poly& p, const Poly& q);
Poly poly_scale(const Poly& p, const Scalar& s);
Poly poly_neg(const Poly& p);
// d/dt
Poly poly_derive(const Poly& p);

// Quotient and remainder over the exact regime (field division in Q(i)).
struct PolyDivMod {
    Poly quotient, remainder;
};
PolyDivMod poly_divmod(const Poly& p, const Poly& d);

// Monic gcd over the exact regime.
Poly poly_gcd(Poly a, Poly b);

// Yun's square-free decomposition (exact regime): p = lc * prod f_i^i with
// each f_i monic square-free, pairwise coprime. Factors with f_i == 1 are
// omitted.
struct SquarefreeFactor {
    Poly factor;
    int multiplicity;
};
std::vector<SquarefreeFactor> squarefree_decomposition(const Poly& p);

// beta^2 - 4*alpha*gamma; LeadingZero if alpha = 0.
Scalar discriminant_quadratic(const Scalar& alpha, const Scalar& beta,
                              const Scalar& gamma);

}  // namespace sharelab
