// Acceptance suite: one line per criterion, PASS/FAIL, nonzero exit when
// anything fails. Tolerances and runtime caps are pinned here.

#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "sharelab/candidate_io.hpp"
#include "sharelab/classifier.hpp"
#include "sharelab/diophantine.hpp"
#include "sharelab/expr_parser.hpp"
#include "sharelab/jet_recurrence.hpp"

using namespace sharelab;
using Clock = std::chrono::steady_clock;

namespace {

struct Outcome {
    bool pass;
    std::string detail;
};

double seconds_since(Clock::time_point t0) {
    return std::chrono::duration<double>(Clock::now() - t0).count();
}

ExpPolyFunction family_iv_instance(const Scalar& a, const Scalar& C) {
    Scalar six = Scalar::exact(6);
    return make_exp_poly(Scalar::exact(1, 6),
                         Poly({a, -(six * a * C), six * a * C * C}));
}

// --- criterion 1 -----------------------------------------------------------
Outcome criterion1() {
    Scalar a = Scalar::exact(8), b = Scalar::exact(-1), C = Scalar::exact(1);
    SharingProblem prob = make_problem(a, b);
    std::vector<std::pair<std::string, CandidateFunction>> families = {
        {"(i)", AffineFunction{a, C}},
        {"(ii)", make_exp_poly(Scalar::exact(1), Poly({Scalar::exact(0), C}))},
        {"(iii)", make_exp_poly(Scalar::exact(1, 9), Poly({a, C}))},
        {"(iv)", CandidateFunction(family_iv_instance(a, C))},
    };
    std::ostringstream detail;
    bool pass = true;
    for (const auto& [name, f] : families) {
        auto t0 = Clock::now();
        VerificationReport r = verify_candidate(f, prob, VerifyOptions{});
        double dt = seconds_since(t0);
        bool ok = r.holds_a_implies && r.holds_b_implies && r.witnesses.empty() &&
                  !r.demoted && dt < 1.0;
        pass = pass && ok;
        detail << name << (ok ? " ok" : " FAILED") << " (" << dt << " s) ";
    }
    return {pass, detail.str()};
}

// --- criterion 2 -----------------------------------------------------------
Outcome criterion2() {
    CandidateFunction f = family_iv_instance(Scalar::exact(8), Scalar::exact(1));
    SharingProblem prob = make_problem(Scalar::exact(8), Scalar::exact(-1));
    auto g = check_g_constant(f, prob, 100, 1e-24);
    bool exact_value = g.estimate.is_exact() &&
                       g.estimate == Scalar::exact(-2, 9);
    bool pass = exact_value && g.max_deviation == 0.0 && !g.demoted;
    std::ostringstream detail;
    detail << "estimate " << g.estimate.to_string() << ", deviation "
           << g.max_deviation << " over 100 exact samples";
    return {pass, detail.str()};
}

// --- criterion 3 -----------------------------------------------------------
Outcome criterion3() {
    ExpPolyFunction f = family_iv_instance(Scalar::exact(8), Scalar::exact(1));
    SharingProblem prob = make_problem(Scalar::exact(8), Scalar::exact(-1));
    CountingData c = counting(f, prob);
    bool pass = c.d == 2 && c.j == 1 && c.k && *c.k == 1 && c.n_a == 1 &&
                c.nbar_a == 1 && c.n_b_fprime == 2 && c.nbar_b_fprime == 1 &&
                c.n_0_fpp == 1 && counting_violations(c).empty() &&
                2 * c.j <= c.d && c.d <= 3 * c.j;
    return {pass, counting_to_text(c)};
}

// --- criterion 4 -----------------------------------------------------------
Outcome criterion4() {
    auto t0 = Clock::now();
    Scalar a = Scalar::exact(8), b = Scalar::exact(-1), C = Scalar::exact(1);
    ExpPolyFunction f = family_iv_instance(a, C);
    std::ostringstream detail;

    // (4a) a-point seed (8, 8, 4) at t = 1 must reproduce the closed form
    // exactly through order 12.
    auto ctx_a = make_context(a, b, 1, AnchorKind::AtAPoint);
    Jet seed_a{Scalar::exact(0),
               {Scalar::exact(8), Scalar::exact(8), Scalar::exact(4)}};
    Jet ext_a = jet_extend(seed_a, ctx_a, 12);
    Jet direct_a = jet_of_at_t(f, Scalar::exact(1), 12);
    bool pass_a = true;
    for (int n = 0; n <= 12; ++n)
        pass_a = pass_a && ext_a.derivs[size_t(n)] == direct_a.derivs[size_t(n)];
    detail << "a-point branch " << (pass_a ? "ok" : "FAILED") << "; ";

    // (4b) as stated: the b-point seed (-1, -1, 1) at t = 1/4 must match
    // the closed form there. Family (iv) has only a double b-point of f'
    // at t = 1/4 and the closed form has f'' = 0 there, so the stated seed
    // (b, b, -k b) cannot reproduce it. Implemented faithfully; expected to
    // fail (see the project notes).
    auto ctx_b = make_context(a, b, 1, AnchorKind::AtSimpleBPoint);
    Jet seed_b{Scalar::exact(0),
               {Scalar::exact(-1), Scalar::exact(-1), Scalar::exact(1)}};
    bool pass_b = false;
    try {
        Jet ext_b = jet_extend(seed_b, ctx_b, 12);
        Jet direct_b = jet_of_at_t(f, Scalar::exact(1, 4), 12);
        pass_b = true;
        for (int n = 0; n <= 12; ++n)
            pass_b = pass_b && ext_b.derivs[size_t(n)] == direct_b.derivs[size_t(n)];
        if (!pass_b) {
            detail << "b-point branch FAILED: closed form at t = 1/4 has f'' = "
                   << direct_b.derivs[2].to_string()
                   << " (its only b-point of f' is double), seed has f'' = 1; ";
        }
    } catch (const Error& e) {
        detail << "b-point branch FAILED (" << e.what() << "); ";
    }

    double dt = seconds_since(t0);
    detail << dt << " s";
    return {pass_a && pass_b && dt < 1.0, detail.str()};
}

// --- criterion 5 -----------------------------------------------------------
Outcome criterion5() {
    Scalar a = Scalar::exact(8), b = Scalar::exact(-1);
    auto ctx_a = make_context(a, b, 1, AnchorKind::AtAPoint);
    auto fpp = fpp_candidates_at_a(ctx_a);
    // discriminant a^2 + 4(k+1)ab = 64 - 64 = 0: the double value 4
    bool pass = fpp.u == Scalar::exact(4) && fpp.v == Scalar::exact(4) &&
                fpp.double_value;
    // matches direct differentiation of the family at its a-point
    ExpPolyFunction f = family_iv_instance(a, Scalar::exact(1));
    Jet direct = jet_of_at_t(f, Scalar::exact(1), 2);
    pass = pass && direct.derivs[2] == fpp.u;

    auto ctx_b = make_context(a, b, 1, AnchorKind::AtSimpleBPoint);
    Scalar v = fpp_at_simple_b(ctx_b).value;
    pass = pass && v == Scalar::exact(1);
    // independent algebraic check: s = v solves s(s-b) = c(b-a)s with s != 0
    pass = pass && (v * (v - b) == ctx_b.c * (b - a) * v) && !v.is_zero();

    std::ostringstream detail;
    detail << "a-point f'' candidates (" << fpp.u.to_string() << ", "
           << fpp.v.to_string() << "), simple-b value " << v.to_string();
    return {pass, detail.str()};
}

// --- criterion 6 -----------------------------------------------------------
Outcome criterion6() {
    auto t0 = Clock::now();
    std::ostringstream detail;
    bool pass = true;

    auto m9 = mod_sieve_k4();
    bool a_ok = m9.value_residues == std::set<int>{2, 3, 5, 8} &&
                m9.square_residues == std::set<int>{0, 1, 4, 7} && m9.disjoint;
    pass = pass && a_ok;
    detail << "(a) mod-9 " << (a_ok ? "ok" : "FAILED") << "; ";

    auto ds = diff_squares_k3();
    bool b_ok = ds.size() == 1 && ds[0].x == 9 && ds[0].y == 8 && ds[0].n == 0;
    pass = pass && b_ok;
    detail << "(b) x^2-y^2=17 " << (b_ok ? "ok" : "FAILED") << "; ";

    PellInstance constrained{Int(3), Int(13),
                             std::make_pair(Int(1), Int(6)), Parity::Even,
                             Rat(51)};
    PellResult pr = pell_descent(constrained);
    bool c1 = pr.solutions.empty() && pr.certificate.closure_pass &&
              pr.certificate.bound_pass;
    PellInstance free_inst{Int(3), Int(13), std::nullopt, Parity::Any, Rat(51)};
    PellResult pf = pell_descent(free_inst);
    auto has = [&](long x, long y) {
        for (const auto& [sx, sy] : pf.solutions)
            if (sx == x && sy == y) return true;
        return false;
    };
    bool c2 = has(4, 1) && has(5, 2);
    pass = pass && c1 && c2;
    detail << "(c) descent " << (c1 && c2 ? "ok" : "FAILED") << "; ";

    bool d_ok = true;
    for (int k : {2, 3, 4}) d_ok = d_ok && square_family_scan(k, 1000000).empty();
    pass = pass && d_ok;
    double dt = seconds_since(t0);
    detail << "(d) scans to 10^6 " << (d_ok ? "ok" : "FAILED") << "; " << dt
           << " s";
    return {pass && dt < 30.0, detail.str()};
}

// --- criterion 7 -----------------------------------------------------------
Outcome criterion7() {
    auto t0 = Clock::now();
    auto mnk = mnk_feasible(100, 100, 99);
    bool mnk_ok = mnk.solutions.empty() && mnk.m1_impossible &&
                  mnk.m_ge3_inequality;
    auto dj = dj_equation_sweep(12, 6, 2, 4, 10000);
    bool dj_ok = dj.admissible.empty();
    double dt = seconds_since(t0);
    std::ostringstream detail;
    detail << "feasibility sweep " << (mnk_ok ? "ok" : "FAILED") << " ("
           << mnk.checked << " triples); degree sweep "
           << (dj_ok ? "ok" : "FAILED") << " (" << dj.checked << " tuples, "
           << dj.out_of_domain.size() << " out-of-domain hits); " << dt << " s";
    return {mnk_ok && dj_ok && dt < 60.0, detail.str()};
}

// --- criterion 8 -----------------------------------------------------------
Outcome criterion8() {
    std::ostringstream detail;
    CaseEnumeration e = enumerate_cases();
    bool enum_ok =
        e.feasible.size() == 3 &&
        e.feasible[0] == CaseParams{2, 1, 1, BranchKind::AllBMultiple} &&
        e.feasible[1] == CaseParams{3, 1, 2, BranchKind::AllBMultiple} &&
        e.feasible[2] == CaseParams{4, 2, 2, BranchKind::MixedSimpleAndMultiple};
    detail << "enumeration " << (enum_ok ? "ok" : "FAILED") << "; ";

    RefutationRecord d3 = refute_case_d3();
    bool d3_ok = d3.refuted && d3.branches.size() == 2 &&
                 std::get<GaussianRational>(d3.branches[0].discriminant) ==
                     GaussianRational(Rat(0), Rat(-4)) &&
                 std::get<GaussianRational>(d3.branches[1].discriminant) ==
                     GaussianRational(Rat(0), Rat(4));
    detail << "d=3 refutation " << (d3_ok ? "ok" : "FAILED") << "; ";

    RefutationRecord d4 = refute_case_d4();
    bool d4_ok = d4.refuted && d4.branches.size() == 2 &&
                 std::get<GaussianRational>(d4.branches[0].discriminant) ==
                     GaussianRational(Rat(256), Rat(0)) &&
                 std::get<QwNumber>(d4.branches[1].discriminant) ==
                     QwNumber(Rat(0), Rat(-13));
    detail << "d=4 refutation " << (d4_ok ? "ok" : "FAILED") << "; ";

    SolutionFamily fam = resolve_case_d2(Scalar::exact(8));
    bool d2_ok = fam.parameters.at("b") == Scalar::exact(-1) &&
                 fam.parameters.at("lambda") == Scalar::exact(1, 6);
    if (d2_ok) {
        CandidateFunction f = instantiate_family(fam, Scalar::exact(1));
        SharingProblem prob = make_problem(Scalar::exact(8), Scalar::exact(-1));
        VerificationReport r = verify_candidate(f, prob, VerifyOptions{});
        d2_ok = r.holds_a_implies && r.holds_b_implies && r.witnesses.empty();
    }
    detail << "d=2 resolution " << (d2_ok ? "ok" : "FAILED");
    return {enum_ok && d3_ok && d4_ok && d2_ok, detail.str()};
}

// --- criterion 9 -----------------------------------------------------------
Outcome criterion9() {
    bool pass = classify(Scalar::exact(8), Scalar::exact(-1)).size() == 4 &&
                classify(Scalar::exact(1), Scalar::exact(2)).size() == 3;
    // 20 random nonzero Gaussian rationals
    std::mt19937 rng(20240817);
    auto rnd = [&](long lo, long hi) {
        return std::uniform_int_distribution<long>(lo, hi)(rng);
    };
    int done = 0;
    while (done < 20) {
        Rat re(rnd(-9, 9), rnd(1, 9));
        Rat im(rnd(-9, 9), rnd(1, 9));
        re.canonicalize();
        im.canonicalize();
        Scalar a = Scalar::exact(re, im);
        if (a.is_zero()) continue;
        Scalar b_iv = -(a / Scalar::exact(8));
        if (a == b_iv) continue;
        pass = pass && classify(a, b_iv).size() == 4;
        Scalar b_off = b_iv + Scalar::exact(1, 3);
        if (!b_off.is_zero() && !(a == b_off))
            pass = pass && classify(a, b_off).size() == 3;
        ++done;
    }
    return {pass, "family (iv) inclusion tracks b = -a/8 over 20 random draws"};
}

// --- criterion 10 ----------------------------------------------------------
Outcome criterion10() {
    std::ostringstream detail;
    SharingProblem prob = make_problem(Scalar::exact(-1), Scalar::exact(0), true);
    VerificationReport r =
        grid_verify_expr(parse_expr("exp(z^3)-1"), prob, Region{-5, 5, -5, 5},
                         21, 1e-24, 128);
    bool ex_ok = r.region_local && r.holds_a_implies && r.holds_b_implies &&
                 r.witnesses.empty() && report_exit_code(r) == 2;
    detail << "order-3 counterexample " << (ex_ok ? "ok" : "FAILED") << "; ";

    CandidateFunction g = parse_expr("exp(z^2)-1");
    BigFloat m2 = spherical_scan(g, Region{0, 2, 0, 2}, 128, 64);
    BigFloat m4 = spherical_scan(g, Region{0, 4, 0, 4}, 256, 64);
    BigFloat m6 = spherical_scan(g, Region{0, 6, 0, 6}, 384, 64);
    bool grow = m2 < m4 && m4 < m6;
    detail << "spherical growth " << m2.to_double() << " < " << m4.to_double()
           << " < " << m6.to_double() << (grow ? " ok" : " FAILED") << "; ";

    CandidateFunction e2 = make_exp_poly(
        Scalar::exact(1), Poly({Scalar::exact(0), Scalar::exact(1)}));
    BigFloat mb = spherical_scan(e2, Region{-10, 10, -10, 10}, 81, 64);
    bool bounded = mb.to_double() <= 1.0;
    detail << "bounded solution scan " << mb.to_double()
           << (bounded ? " ok" : " FAILED");
    return {ex_ok && grow && bounded, detail.str()};
}

// --- criterion 11 ----------------------------------------------------------
Outcome criterion11() {
    ExpPolyFunction f = make_exp_poly(
        Scalar::exact(1), Poly({Scalar::exact(0), Scalar::exact(1), Scalar::exact(1)}));
    SharingProblem prob = make_problem(Scalar::exact(2), Scalar::exact(3));
    VerifyOptions opts;  // tol = 1e-24
    VerificationReport r =
        verify_candidate(CandidateFunction(f), prob, opts);
    int code = report_exit_code(r);
    bool big_defect = false;
    for (const auto& w : r.witnesses)
        big_defect = big_defect || w.defect >= 1e6 * opts.tol;
    std::ostringstream detail;
    detail << "exit " << code << ", " << r.witnesses.size()
           << " witnesses, max defect factor over tol ";
    double max_factor = 0;
    for (const auto& w : r.witnesses)
        max_factor = std::max(max_factor, w.defect / opts.tol);
    detail << max_factor;
    return {code == 1 && big_defect, detail.str()};
}

}  // namespace

int main() {
    std::vector<std::pair<std::string, std::function<Outcome()>>> criteria = {
        {"1 family verification", criterion1},
        {"2 constancy of the auxiliary ratio", criterion2},
        {"3 counting data", criterion3},
        {"4 jet oracle", criterion4},
        {"5 initial conditions", criterion5},
        {"6 integer certificates", criterion6},
        {"7 exceptional-case infeasibility", criterion7},
        {"8 case analysis", criterion8},
        {"9 classification", criterion9},
        {"10 counterexample battery", criterion10},
        {"11 negative-path verification", criterion11},
    };
    int failures = 0;
    for (auto& [name, fn] : criteria) {
        Outcome o;
        try {
            o = fn();
        } catch (const std::exception& e) {
            o = {false, std::string("exception: ") + e.what()};
        }
        if (!o.pass) ++failures;
        std::cout << (o.pass ? "PASS" : "FAIL") << " criterion " << name
                  << " -- " << o.detail << "\n";
    }
    if (failures)
        std::cout << failures << " criterion(s) failed\n";
    else
        std::cout << "all criteria passed\n";
    return failures;
}
