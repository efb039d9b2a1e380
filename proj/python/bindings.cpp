// Python bindings for the main operations. Structured results come back as
// JSON strings; scalars travel as their text serialization.

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "sharelab/candidate_io.hpp"
#include "sharelab/classifier.hpp"
#include "sharelab/diophantine.hpp"
#include "sharelab/expr_parser.hpp"
#include "sharelab/jet_recurrence.hpp"

namespace py = pybind11;
using namespace sharelab;

namespace {

Scalar S(const std::string& s) { return Scalar::parse(s); }

std::string verify_json(const std::string& candidate_json, const std::string& a,
                        const std::string& b, bool relaxed, double tol) {
    CandidateDocument doc = candidate_from_json(candidate_json);
    SharingProblem prob = make_problem(S(a), S(b), relaxed);
    VerifyOptions opts;
    opts.tol = tol;
    return report_to_json(verify_candidate(doc.function, prob, opts));
}

std::string verify_expr_json(const std::string& source, const std::string& a,
                             const std::string& b, bool relaxed, double tol,
                             double re_min, double re_max, double im_min,
                             double im_max, int grid) {
    SharingProblem prob = make_problem(S(a), S(b), relaxed);
    VerifyOptions opts;
    opts.tol = tol;
    opts.re_min = re_min;
    opts.re_max = re_max;
    opts.im_min = im_min;
    opts.im_max = im_max;
    opts.grid = grid;
    return report_to_json(
        verify_candidate(parse_expr(source), prob, opts));
}

std::vector<std::string> classify_json(const std::string& a,
                                       const std::string& b) {
    std::vector<std::string> out;
    for (const auto& fam : classify(S(a), S(b)))
        out.push_back(family_to_json(fam));
    return out;
}

std::vector<std::string> jet_extend_strings(const std::vector<std::string>& seed,
                                            const std::string& a,
                                            const std::string& b, int k,
                                            const std::string& anchor, int order) {
    if (seed.size() != 3)
        throw InvalidParameters("seed must be the three values f, f', f''");
    AnchorKind kind = anchor == "b-point" ? AnchorKind::AtSimpleBPoint
                                          : AnchorKind::AtAPoint;
    auto ctx = make_context(S(a), S(b), k, kind);
    Jet j{Scalar::exact(0), {S(seed[0]), S(seed[1]), S(seed[2])}};
    Jet ext = jet_extend(j, ctx, order);
    std::vector<std::string> out;
    for (const auto& d : ext.derivs) out.push_back(d.to_string());
    return out;
}

std::vector<std::string> family_iv_jet_strings(const std::string& a,
                                               const std::string& C,
                                               const std::string& t0,
                                               int order) {
    Scalar av = S(a), Cv = S(C);
    Scalar six = Scalar::exact(6);
    ExpPolyFunction f = make_exp_poly(
        Scalar::exact(1, 6), Poly({av, -(six * av * Cv), six * av * Cv * Cv}));
    Jet j = jet_of_at_t(f, S(t0), order);
    std::vector<std::string> out;
    for (const auto& d : j.derivs) out.push_back(d.to_string());
    return out;
}

std::string pell_json(long D, long N, py::object xmod, const std::string& parity,
                      double bound) {
    PellInstance inst;
    inst.D = D;
    inst.N = N;
    if (!xmod.is_none()) {
        auto pr = xmod.cast<std::pair<long, long>>();
        inst.x_congruence = std::make_pair(Int(pr.first), Int(pr.second));
    }
    inst.y_parity = parity == "even"  ? Parity::Even
                    : parity == "odd" ? Parity::Odd
                                      : Parity::Any;
    inst.bound = Rat(bound);
    PellResult r = pell_descent(inst);
    return pell_to_json(r, inst);
}

py::dict enumerate_cases_dict() {
    CaseEnumeration e = enumerate_cases();
    py::list feasible, rejected;
    for (const auto& c : e.feasible) {
        py::dict d;
        d["d"] = c.d;
        d["j"] = c.j;
        d["k"] = c.k;
        d["branch"] = c.branch == BranchKind::AllBMultiple ? "all-multiple"
                                                            : "mixed";
        feasible.append(d);
    }
    for (const auto& r : e.rejected) {
        py::dict d;
        d["d"] = r.d;
        d["j"] = r.j;
        d["reason"] = r.reason;
        rejected.append(d);
    }
    py::dict out;
    out["feasible"] = feasible;
    out["rejected"] = rejected;
    return out;
}

py::dict refutation_dict(const RefutationRecord& rec) {
    py::dict out;
    out["case"] = rec.case_label;
    out["refuted"] = rec.refuted;
    py::list branches;
    for (const auto& b : rec.branches) {
        py::dict d;
        d["parameter"] = b.parameter;
        d["discriminant"] = b.rendered;
        d["nonzero"] = b.nonzero;
        branches.append(d);
    }
    out["branches"] = branches;
    return out;
}

}  // namespace

PYBIND11_MODULE(_sharelab, m) {
    m.doc() =
        "symbolic-numeric toolkit for the derivative value-sharing problem";

    m.def("verify", &verify_json, py::arg("candidate_json"), py::arg("a"),
          py::arg("b"), py::arg("relaxed") = false, py::arg("tol") = 1e-24,
          "verify a candidate document; returns the report as JSON");
    m.def("verify_expr", &verify_expr_json, py::arg("source"), py::arg("a"),
          py::arg("b"), py::arg("relaxed") = false, py::arg("tol") = 1e-24,
          py::arg("re_min") = -5.0, py::arg("re_max") = 5.0,
          py::arg("im_min") = -5.0, py::arg("im_max") = 5.0,
          py::arg("grid") = 21,
          "region-local verification of a closed-form expression");
    m.def("classify", &classify_json, py::arg("a"), py::arg("b"),
          "solution families for (a, b), each as JSON");
    m.def("jet_extend", &jet_extend_strings, py::arg("seed"), py::arg("a"),
          py::arg("b"), py::arg("k"), py::arg("anchor"), py::arg("order"),
          "extend an order-2 seed through the derivative recurrence");
    m.def("family_iv_jet", &family_iv_jet_strings, py::arg("a"), py::arg("C"),
          py::arg("t0"), py::arg("order"),
          "derivatives of the degree-2 family at an exact point of the t-plane");
    m.def("square_family_scan", &square_family_scan, py::arg("k"),
          py::arg("n_max"),
          "all n <= n_max with (k+1)(n+1)^2 + n a perfect square");
    m.def("mod_sieve_k4", [] {
        auto c = mod_sieve_k4();
        py::dict d;
        d["value_residues"] = std::vector<int>(c.value_residues.begin(),
                                               c.value_residues.end());
        d["square_residues"] = std::vector<int>(c.square_residues.begin(),
                                                c.square_residues.end());
        d["disjoint"] = c.disjoint;
        return d;
    });
    m.def("diff_squares_k3", [] {
        std::vector<std::tuple<long, long, long>> out;
        for (const auto& s : diff_squares_k3()) out.emplace_back(s.x, s.y, s.n);
        return out;
    });
    m.def("pell_descent", &pell_json, py::arg("D") = 3, py::arg("N") = 13,
          py::arg("xmod") = py::none(), py::arg("parity") = "any",
          py::arg("bound") = 51.0, "norm-form descent certificate as JSON");
    m.def("mnk_feasible", [](long n_max, long k_max, long m_max) {
        auto c = mnk_feasible(n_max, k_max, m_max);
        py::dict d;
        d["solutions"] = c.solutions;
        d["m1_impossible"] = c.m1_impossible;
        d["m_ge3_inequality"] = c.m_ge3_inequality;
        d["checked"] = c.checked;
        return d;
    });
    m.def("dj_equation_check", &dj_equation_check, py::arg("d"), py::arg("j"),
          py::arg("k"), py::arg("n"));
    m.def("enumerate_cases", &enumerate_cases_dict);
    m.def("refute_case_d3", [] { return refutation_dict(refute_case_d3()); });
    m.def("refute_case_d4", [] { return refutation_dict(refute_case_d4()); });
    m.def("resolve_case_d2", [](const std::string& a) {
        return family_to_json(resolve_case_d2(S(a)));
    });
    m.def("parse_expr_canonical", [](const std::string& src) {
        return expr_to_string(parse_expr(src).ast);
    });
    m.def(
        "spherical_scan_expr",
        [](const std::string& source, double re_min, double re_max,
           double im_min, double im_max, int grid, long prec) {
            return spherical_scan(parse_expr(source),
                                  Region{re_min, re_max, im_min, im_max}, grid,
                                  prec)
                .to_double();
        },
        py::arg("source"), py::arg("re_min"), py::arg("re_max"),
        py::arg("im_min"), py::arg("im_max"), py::arg("grid") = 64,
        py::arg("prec") = 64,
        "max of |f'|/(1+|f|^2) over a grid on the rectangle");
}
