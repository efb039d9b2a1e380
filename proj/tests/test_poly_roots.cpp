#include <doctest.h>

#include "sharelab/roots.hpp"
#include "test_helpers.hpp"

using namespace sharelab;
using namespace sharelab::testing;

TEST_CASE("ring operations") {
    // (t-1)(t+1) = t^2 - 1
    Poly p = Poly::from_exact({-1, 1});
    Poly q = Poly::from_exact({1, 1});
    CHECK(poly_mul(p, q).coeffs().size() == 3);
    CHECK(poly_mul(p, q).coeff(0) == Scalar::exact(-1));
    CHECK(poly_mul(p, q).coeff(1) == Scalar::exact(0));
    CHECK(poly_mul(p, q).coeff(2) == Scalar::exact(1));

    // d/dt (48t^2 - 48t + 8) = 96t - 48
    Poly r = Poly::from_exact({8, -48, 48});
    Poly dr = poly_derive(r);
    CHECK(dr.coeff(0) == Scalar::exact(-48));
    CHECK(dr.coeff(1) == Scalar::exact(96));
    CHECK(*dr.degree() == 1);

    // additive identity
    CHECK(poly_add(r, Poly::zero()).coeffs().size() == r.coeffs().size());
    CHECK(poly_add(r, Poly::zero()).coeff(2) == r.coeff(2));
}

TEST_CASE("zero polynomial degree is a distinguished marker") {
    CHECK_FALSE(Poly::zero().degree().has_value());
    CHECK(Poly::zero().degree_or(-1) == -1);
    CHECK(Poly::from_exact({5}).degree() == 0);
}

TEST_CASE("mixed-regime polynomials are rejected") {
    Poly e = Poly::from_exact({1, 2});
    Poly f({Scalar::floating(1, 0, 128), Scalar::floating(2, 0, 128)});
    CHECK_THROWS_AS(poly_add(e, f), MixedRegime);
    CHECK_THROWS_AS(poly_mul(e, f), MixedRegime);
}

TEST_CASE("derivative satisfies the product rule exactly") {
    Gen gen(501);
    for (int i = 0; i < 60; ++i) {
        Poly p = gen.exact_poly(5);
        Poly q = gen.exact_poly(5);
        Poly lhs = poly_derive(poly_mul(p, q));
        Poly rhs = poly_add(poly_mul(poly_derive(p), q),
                            poly_mul(p, poly_derive(q)));
        Poly diff = poly_sub(lhs, rhs);
        CHECK(diff.is_zero());
    }
}

TEST_CASE("exact roots: factored cases") {
    SUBCASE("48t^2 - 48t = 48 t (t-1)") {
        Poly p = Poly::from_exact({0, -48, 48});
        RootSet rs = poly_roots(p, 1e-24);
        CHECK_FALSE(rs.demoted);
        REQUIRE(rs.roots.size() == 2);
        CHECK(rs.total_multiplicity() == 2);
        bool saw0 = false, saw1 = false;
        for (const auto& r : rs.roots) {
            if (r.location == Scalar::exact(0)) saw0 = r.multiplicity == 1;
            if (r.location == Scalar::exact(1)) saw1 = r.multiplicity == 1;
        }
        CHECK(saw0);
        CHECK(saw1);
    }
    SUBCASE("(t-2)^3") {
        Poly p = Poly::from_exact({-8, 12, -6, 1});
        RootSet rs = poly_roots(p, 1e-24);
        CHECK_FALSE(rs.demoted);
        REQUIRE(rs.roots.size() == 1);
        CHECK(rs.roots[0].location == Scalar::exact(2));
        CHECK(rs.roots[0].multiplicity == 3);
    }
    SUBCASE("double root from a perfect-square discriminant") {
        // (4t-1)^2 = 16t^2 - 8t + 1
        Poly p = Poly::from_exact({1, -8, 16});
        RootSet rs = poly_roots(p, 1e-24);
        CHECK_FALSE(rs.demoted);
        REQUIRE(rs.roots.size() == 1);
        CHECK(rs.roots[0].location == Scalar::exact(1, 4));
        CHECK(rs.roots[0].multiplicity == 2);
    }
}

TEST_CASE("float roots of the sixth-root quadratic are distinct and simple") {
    // 16t^2 - 9(1+w)t + 4w with w = e^{i pi/3}; discriminant -13w != 0
    long prec = 128;
    BigFloat half(0.5, prec);
    BigFloat s3 = BigFloat(3.0, prec).sqrt();
    BigComplex w(half, half * s3);
    BigComplex nine(9.0, 0.0, prec), sixteen(16.0, 0.0, prec),
        four(4.0, 0.0, prec), one(1.0, 0.0, prec);
    Poly p({Scalar(four * w), Scalar(-(nine * (one + w))), Scalar(sixteen)});
    RootSet rs = poly_roots(p, 1e-24);
    REQUIRE(rs.roots.size() == 2);
    CHECK(rs.roots[0].multiplicity == 1);
    CHECK(rs.roots[1].multiplicity == 1);

    // cross-check against the double-precision quadratic-formula oracle
    DComplex wd{0.5, std::sqrt(3.0) / 2.0};
    auto [r1, r2] = quadratic_oracle({16, 0},
                                     {-9 * (1 + wd.re), -9 * wd.im},
                                     dmul({4, 0}, wd));
    for (const auto& root : rs.roots) {
        double re = root.location.float_value().re().to_double();
        double im = root.location.float_value().im().to_double();
        bool near1 = std::hypot(re - r1.re, im - r1.im) < 1e-12;
        bool near2 = std::hypot(re - r2.re, im - r2.im) < 1e-12;
        CHECK((near1 || near2));
    }
}

TEST_CASE("root count with multiplicity equals the degree") {
    Gen gen(733);
    for (int i = 0; i < 30; ++i) {
        Poly p = gen.exact_poly(6);
        if (p.degree_or(-1) < 1) continue;
        RootSet rs = poly_roots(p, 1e-20);
        CHECK(rs.total_multiplicity() == *p.degree());
    }
}

TEST_CASE("float reconstruction from well-separated roots") {
    Gen gen(42);
    const long prec = 128;
    const double tol = 1e-24;
    for (int iter = 0; iter < 10; ++iter) {
        int deg = int(gen.small_int(2, 8));
        // well-separated roots on a jittered grid
        std::vector<BigComplex> roots;
        for (int k = 0; k < deg; ++k) {
            double re = -2.0 + 4.0 * k / double(deg) + gen.uniform(-0.15, 0.15);
            double im = (k % 2 ? 1.0 : -1.0) * gen.uniform(0.2, 1.2);
            roots.push_back(BigComplex(re, im, prec));
        }
        Poly p = Poly({Scalar(BigComplex(1.0, 0.0, prec))});
        for (const auto& r : roots) {
            Poly lin({Scalar(-r), Scalar(BigComplex(1.0, 0.0, prec))});
            p = poly_mul(p, lin);
        }
        RootSet rs = poly_roots(p, tol);
        CHECK(rs.total_multiplicity() == deg);
        // rebuild and compare coefficientwise within 10*tol
        Poly q = Poly({Scalar(BigComplex(1.0, 0.0, prec))});
        for (const auto& r : rs.roots)
            for (int m = 0; m < r.multiplicity; ++m) {
                Poly lin({Scalar(-r.location.float_value()),
                          Scalar(BigComplex(1.0, 0.0, prec))});
                q = poly_mul(q, lin);
            }
        REQUIRE(q.coeffs().size() == p.coeffs().size());
        for (size_t i = 0; i < p.coeffs().size(); ++i) {
            double diff = (p.coeffs()[i].float_value() - q.coeffs()[i].float_value())
                              .abs()
                              .to_double();
            CHECK(diff <= 10 * tol);
        }
    }
}

TEST_CASE("residual certification rejects an exhausted iteration budget") {
    // a degree-5 polynomial cannot converge in two Aberth sweeps
    Poly p({Scalar::floating(3, 0, 128), Scalar::floating(-2, 0, 128),
            Scalar::floating(5, 0, 128), Scalar::floating(1, 0, 128),
            Scalar::floating(-4, 0, 128), Scalar::floating(1, 0, 128)});
    CHECK_THROWS_AS(poly_roots(p, 1e-24, RootConfig{128, 2}), NoConvergence);
}

TEST_CASE("quadratic discriminant") {
    SUBCASE("refutation factor with s = i") {
        // 9t^2 - 4(1+i)t + i: disc = 16(1+i)^2 - 36i = -4i
        Scalar alpha = Scalar::exact(9);
        Scalar beta = -(Scalar::exact(4) * Scalar::exact(Rat(1), Rat(1)));
        Scalar gamma = Scalar::imaginary_unit();
        Scalar d = discriminant_quadratic(alpha, beta, gamma);
        CHECK(d == Scalar::exact(Rat(0), Rat(-4)));
    }
    SUBCASE("perfect square (t+1)^2") {
        CHECK(discriminant_quadratic(Scalar::exact(1), Scalar::exact(2),
                                     Scalar::exact(1)) == Scalar::exact(0));
    }
    SUBCASE("sixth-root case is nonzero") {
        long prec = 128;
        BigFloat half(0.5, prec);
        BigComplex w(half, half * BigFloat(3.0, prec).sqrt());
        BigComplex one(1.0, 0.0, prec);
        Scalar d = discriminant_quadratic(
            Scalar(BigComplex(16.0, 0.0, prec)),
            Scalar(-(BigComplex(9.0, 0.0, prec) * (one + w))),
            Scalar(BigComplex(4.0, 0.0, prec) * w));
        // -13w has modulus 13
        CHECK(d.float_value().abs().to_double() == doctest::Approx(13.0));
    }
    SUBCASE("leading zero rejected") {
        CHECK_THROWS_AS(discriminant_quadratic(Scalar::exact(0), Scalar::exact(1),
                                               Scalar::exact(1)),
                        LeadingZero);
    }
}

TEST_CASE("gcd and square-free structure") {
    // (t-1)^2 (t+2)
    Poly sq = poly_mul(Poly::from_exact({-1, 1}), Poly::from_exact({-1, 1}));
    Poly p = poly_mul(sq, Poly::from_exact({2, 1}));
    auto fac = squarefree_decomposition(p);
    REQUIRE(fac.size() == 2);
    bool saw1 = false, saw2 = false;
    for (const auto& f : fac) {
        if (f.multiplicity == 1) {
            saw1 = *f.factor.degree() == 1;
        }
        if (f.multiplicity == 2) {
            saw2 = *f.factor.degree() == 1;
        }
    }
    CHECK(saw1);
    CHECK(saw2);
}
