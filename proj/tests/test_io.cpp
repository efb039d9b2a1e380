#include <doctest.h>

#include "sharelab/candidate_io.hpp"
#include "sharelab/expr_parser.hpp"
#include "test_helpers.hpp"

using namespace sharelab;
using namespace sharelab::testing;

TEST_CASE("candidate documents round-trip through JSON") {
    SUBCASE("exppoly") {
        CandidateDocument doc;
        doc.function = family_iv(Scalar::exact(8), Scalar::exact(1));
        doc.a = Scalar::exact(8);
        doc.b = Scalar::exact(-1);
        std::string text = candidate_to_json(doc);
        CandidateDocument back = candidate_from_json(text);
        const auto& f = std::get<ExpPolyFunction>(back.function);
        CHECK(f.lambda == Scalar::exact(1, 6));
        CHECK(f.P.coeff(0) == Scalar::exact(8));
        CHECK(f.P.coeff(1) == Scalar::exact(-48));
        CHECK(f.P.coeff(2) == Scalar::exact(48));
        CHECK(*back.a == Scalar::exact(8));
        CHECK(*back.b == Scalar::exact(-1));
    }
    SUBCASE("affine") {
        CandidateDocument doc;
        doc.function = AffineFunction{Scalar::exact(2), Scalar::exact(Rat(1, 3), Rat(-2))};
        std::string text = candidate_to_json(doc);
        CandidateDocument back = candidate_from_json(text);
        const auto& f = std::get<AffineFunction>(back.function);
        CHECK(f.slope == Scalar::exact(2));
        CHECK(f.intercept == Scalar::exact(Rat(1, 3), Rat(-2)));
    }
    SUBCASE("expr") {
        CandidateDocument doc;
        doc.function = parse_expr("exp(z^3)-1");
        std::string text = candidate_to_json(doc);
        CandidateDocument back = candidate_from_json(text);
        const auto& f = std::get<ExprFunction>(back.function);
        CHECK(expr_to_string(f.ast) == "exp(z^3)-1");
    }
    SUBCASE("unknown kind is rejected") {
        CHECK_THROWS_AS(candidate_from_json(R"({"kind":"weird"})"), Error);
    }
}

TEST_CASE("verification reports round-trip through JSON losslessly") {
    CandidateFunction f = family_iv(Scalar::exact(8), Scalar::exact(1));
    auto prob = make_problem(Scalar::exact(8), Scalar::exact(-1));
    VerificationReport rep = verify_candidate(f, prob, VerifyOptions{});
    std::string once = report_to_json(rep);
    VerificationReport back = report_from_json(once);
    std::string twice = report_to_json(back);
    CHECK(once == twice);
    CHECK(back.holds_a_implies == rep.holds_a_implies);
    CHECK(back.counts.has_value());
    CHECK(back.counts->d == 2);

    // also a failing report with witnesses
    ExpPolyFunction bad = make_exp_poly(
        Scalar::exact(1), Poly({Scalar::exact(0), Scalar::exact(1), Scalar::exact(1)}));
    auto prob2 = make_problem(Scalar::exact(2), Scalar::exact(3));
    VerificationReport rep2 = verify_candidate(CandidateFunction(bad), prob2,
                                               VerifyOptions{});
    std::string j1 = report_to_json(rep2);
    CHECK(report_to_json(report_from_json(j1)) == j1);
}

TEST_CASE("text renderings mention the key facts") {
    CandidateFunction f = family_iv(Scalar::exact(8), Scalar::exact(1));
    auto prob = make_problem(Scalar::exact(8), Scalar::exact(-1));
    VerificationReport rep = verify_candidate(f, prob, VerifyOptions{});
    std::string text = report_to_text(rep);
    CHECK(text.find("holds") != std::string::npos);
    CHECK(text.find("-2/9") != std::string::npos);

    std::string ct = counting_to_text(*rep.counts);
    CHECK(ct.find("d = 2") != std::string::npos);
    CHECK(ct.find("j = 1") != std::string::npos);
}

TEST_CASE("jets serialize with anchor and derivative list") {
    Jet j{Scalar::exact(0),
          {Scalar::exact(8), Scalar::exact(8), Scalar::exact(4)}};
    std::string s = jet_to_json(j);
    CHECK(s.find("derivs") != std::string::npos);
    std::string t = jet_to_text(j);
    CHECK(t.find("f^(2)") != std::string::npos);
}

TEST_CASE("refutation and descent records render") {
    std::string d3 = refutation_to_text(refute_case_d3());
    CHECK(d3.find("refuted") != std::string::npos);
    CHECK(d3.find("-4i") != std::string::npos);

    PellInstance inst;
    inst.D = 3;
    inst.N = 13;
    inst.x_congruence = std::make_pair(Int(1), Int(6));
    inst.y_parity = Parity::Even;
    inst.bound = 51;
    PellResult r = pell_descent(inst);
    std::string text = pell_to_text(r, inst);
    CHECK(text.find("closure check (mod 12): pass") != std::string::npos);
    CHECK(text.find("solutions: none") != std::string::npos);
    std::string js = pell_to_json(r, inst);
    CHECK(js.find("\"closure_check\": \"pass\"") != std::string::npos);
}
