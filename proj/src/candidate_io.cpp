#include "sharelab/candidate_io.hpp"

#include <sstream>

#include "sharelab/expr_parser.hpp"

#include <json.hpp>

namespace sharelab {

using nlohmann::json;

namespace {

json scalar_json(const Scalar& s) { return s.to_string(); }

Scalar scalar_from(const json& j) { return Scalar::parse(j.get<std::string>()); }

}  // namespace

CandidateDocument candidate_from_json(const std::string& text) {
    json j = json::parse(text);
    CandidateDocument doc;
    std::string kind = j.at("kind").get<std::string>();
    if (kind == "affine") {
        doc.function = AffineFunction{scalar_from(j.at("slope")),
                                      scalar_from(j.at("intercept"))};
    } else if (kind == "exppoly") {
        std::vector<Scalar> coeffs;
        for (const auto& c : j.at("coeffs")) coeffs.push_back(scalar_from(c));
        doc.function =
            make_exp_poly(scalar_from(j.at("lambda")), Poly(std::move(coeffs)));
    } else if (kind == "expr") {
        doc.function = parse_expr(j.at("source").get<std::string>());
    } else {
        throw Error("unknown candidate kind: " + kind);
    }
    if (j.contains("a")) doc.a = scalar_from(j.at("a"));
    if (j.contains("b")) doc.b = scalar_from(j.at("b"));
    return doc;
}

std::string candidate_to_json(const CandidateDocument& doc) {
    json j;
    if (const auto* a = std::get_if<AffineFunction>(&doc.function)) {
        j["kind"] = "affine";
        j["slope"] = scalar_json(a->slope);
        j["intercept"] = scalar_json(a->intercept);
    } else if (const auto* e = std::get_if<ExpPolyFunction>(&doc.function)) {
        j["kind"] = "exppoly";
        j["lambda"] = scalar_json(e->lambda);
        json coeffs = json::array();
        for (const auto& c : e->P.coeffs()) coeffs.push_back(scalar_json(c));
        j["coeffs"] = coeffs;
    } else {
        const auto& ex = std::get<ExprFunction>(doc.function);
        j["kind"] = "expr";
        j["source"] = expr_to_string(ex.ast);
    }
    if (doc.a) j["a"] = scalar_json(*doc.a);
    if (doc.b) j["b"] = scalar_json(*doc.b);
    return j.dump(2);
}

namespace {

json witness_json(const Witness& w) {
    json j{{"location", scalar_json(w.location)},
           {"implication", std::string(1, w.implication)},
           {"lhs", scalar_json(w.lhs)},
           {"rhs", scalar_json(w.rhs)},
           {"defect", w.defect},
           {"location_in_t", w.location_in_t}};
    if (w.z_principal)
        j["z_principal"] = scalar_json(*w.z_principal);
    else
        j["z_principal"] = nullptr;
    return j;
}

Witness witness_from(const json& j) {
    Witness w{scalar_from(j.at("location")),
              j.at("implication").get<std::string>().at(0),
              scalar_from(j.at("lhs")),
              scalar_from(j.at("rhs")),
              j.at("defect").get<double>(),
              j.at("location_in_t").get<bool>(),
              std::nullopt};
    if (!j.at("z_principal").is_null())
        w.z_principal = scalar_from(j.at("z_principal"));
    return w;
}

json counting_json(const CountingData& c) {
    json j{{"d", c.d},
           {"j", c.j},
           {"n_a", c.n_a},
           {"nbar_a", c.nbar_a},
           {"n_b_fprime", c.n_b_fprime},
           {"nbar_b_fprime", c.nbar_b_fprime},
           {"n_0_fpp", c.n_0_fpp}};
    if (c.k)
        j["k"] = *c.k;
    else
        j["k"] = nullptr;
    return j;
}

CountingData counting_from(const json& j) {
    CountingData c;
    c.d = j.at("d").get<int>();
    c.j = j.at("j").get<int>();
    if (!j.at("k").is_null()) c.k = j.at("k").get<int>();
    c.n_a = j.at("n_a").get<int>();
    c.nbar_a = j.at("nbar_a").get<int>();
    c.n_b_fprime = j.at("n_b_fprime").get<int>();
    c.nbar_b_fprime = j.at("nbar_b_fprime").get<int>();
    c.n_0_fpp = j.at("n_0_fpp").get<int>();
    return c;
}

}  // namespace

std::string report_to_json(const VerificationReport& r) {
    json j;
    j["holds_a_implies"] = r.holds_a_implies;
    j["holds_b_implies"] = r.holds_b_implies;
    json ws = json::array();
    for (const auto& w : r.witnesses) ws.push_back(witness_json(w));
    j["witnesses"] = ws;
    j["g_constant_estimate"] = scalar_json(r.g_constant_estimate);
    j["g_max_deviation"] = r.g_max_deviation;
    if (r.counts)
        j["counts"] = counting_json(*r.counts);
    else
        j["counts"] = nullptr;
    j["region_local"] = r.region_local;
    j["relaxed"] = r.relaxed;
    j["demoted"] = r.demoted;
    j["warnings"] = r.warnings;
    j["newton_budget_exceeded"] = r.newton_budget_exceeded;
    return j.dump(2);
}

VerificationReport report_from_json(const std::string& text) {
    json j = json::parse(text);
    VerificationReport r;
    r.holds_a_implies = j.at("holds_a_implies").get<bool>();
    r.holds_b_implies = j.at("holds_b_implies").get<bool>();
    for (const auto& w : j.at("witnesses")) r.witnesses.push_back(witness_from(w));
    r.g_constant_estimate = scalar_from(j.at("g_constant_estimate"));
    r.g_max_deviation = j.at("g_max_deviation").get<double>();
    if (!j.at("counts").is_null()) r.counts = counting_from(j.at("counts"));
    r.region_local = j.at("region_local").get<bool>();
    r.relaxed = j.at("relaxed").get<bool>();
    r.demoted = j.at("demoted").get<bool>();
    for (const auto& w : j.at("warnings"))
        r.warnings.push_back(w.get<std::string>());
    r.newton_budget_exceeded = j.at("newton_budget_exceeded").get<int>();
    return r;
}

std::string counting_to_text(const CountingData& c) {
    std::ostringstream os;
    os << "d = " << c.d << ", j = " << c.j << ", k = "
       << (c.k ? std::to_string(*c.k) : std::string("none"));
    os << ", n(a,f) = " << c.n_a << ", nbar(a,f) = " << c.nbar_a;
    os << ", n(b,f') = " << c.n_b_fprime << ", nbar(b,f') = " << c.nbar_b_fprime;
    os << ", n(0,f'') = " << c.n_0_fpp;
    return os.str();
}

std::string report_to_text(const VerificationReport& r) {
    std::ostringstream os;
    os << "f = a  =>  f' = a : " << (r.holds_a_implies ? "holds" : "VIOLATED")
       << "\n";
    os << "f' = b =>  f  = b : " << (r.holds_b_implies ? "holds" : "VIOLATED")
       << "\n";
    if (r.region_local)
        os << "scope: region-local (evidence, not proof)\n";
    for (const auto& w : r.witnesses) {
        os << "witness [" << w.implication << "] at "
           << (w.location_in_t ? "t = " : "z = ") << w.location.to_string();
        if (w.z_principal)
            os << " (z = " << w.z_principal->to_string() << ")";
        os << ": got " << w.lhs.to_string() << ", required "
           << w.rhs.to_string() << " (defect " << w.defect << ")\n";
    }
    os << "g estimate: " << r.g_constant_estimate.to_string()
       << " (max deviation " << r.g_max_deviation << ")\n";
    if (r.counts) os << "counting: " << counting_to_text(*r.counts) << "\n";
    if (r.demoted) os << "note: some steps were demoted to the float regime\n";
    if (r.newton_budget_exceeded > 0)
        os << "newton seeds over budget: " << r.newton_budget_exceeded << "\n";
    for (const auto& w : r.warnings) os << "warning: " << w << "\n";
    return os.str();
}

std::string jet_to_json(const Jet& j) {
    json out;
    out["anchor"] = scalar_json(j.anchor);
    json d = json::array();
    for (const auto& x : j.derivs) d.push_back(scalar_json(x));
    out["derivs"] = d;
    return out.dump(2);
}

std::string jet_to_text(const Jet& j) {
    std::ostringstream os;
    os << "anchor z0 = " << j.anchor.to_string() << "\n";
    for (size_t n = 0; n < j.derivs.size(); ++n)
        os << "f^(" << n << ") = " << j.derivs[n].to_string() << "\n";
    return os.str();
}

std::string family_to_text(const SolutionFamily& fam) {
    std::ostringstream os;
    os << "family (" << family_kind_name(fam.kind) << ")";
    switch (fam.kind) {
        case FamilyKind::I: os << ": f = a*z + C"; break;
        case FamilyKind::II: os << ": f = C*e^z"; break;
        case FamilyKind::III: os << ": f = C*e^(lambda*z) + a"; break;
        case FamilyKind::IV:
            os << ": f = 6*a*C*e^(z/6)*(C*e^(z/6) - 1) + a";
            break;
    }
    for (const auto& [k, v] : fam.parameters)
        os << "\n  " << k << " = " << v.to_string();
    for (const auto& c : fam.constraints) os << "\n  constraint: " << c;
    return os.str();
}

std::string family_to_json(const SolutionFamily& fam) {
    json j;
    j["kind"] = family_kind_name(fam.kind);
    json params;
    for (const auto& [k, v] : fam.parameters) params[k] = scalar_json(v);
    j["parameters"] = params;
    j["constraints"] = fam.constraints;
    return j.dump(2);
}

std::string refutation_to_text(const RefutationRecord& r) {
    std::ostringstream os;
    os << "case " << r.case_label << " (" << r.normalization
       << ", discriminant homogeneity degree " << r.homogeneity_degree
       << "):\n";
    os << "  " << r.exclusion << "\n";
    for (const auto& b : r.branches)
        os << "  " << b.parameter << ": discriminant = " << b.rendered << " "
           << (b.nonzero ? "(nonzero)" : "(ZERO)") << "\n";
    os << (r.refuted ? "  refuted: no double root in any branch"
                     : "  NOT refuted")
       << "\n";
    return os.str();
}

std::string pell_to_text(const PellResult& r, const PellInstance& inst) {
    std::ostringstream os;
    os << "x^2 - " << inst.D.get_str() << " y^2 = " << inst.N.get_str();
    if (inst.x_congruence)
        os << ", x = " << inst.x_congruence->first.get_str() << " (mod "
           << inst.x_congruence->second.get_str() << ")";
    if (inst.y_parity != Parity::Any)
        os << ", y " << (inst.y_parity == Parity::Even ? "even" : "odd");
    os << ", x + y*sqrt(D) <= " << inst.bound.get_str() << "\n";
    os << "closure check (mod " << r.certificate.closure_modulus
       << "): " << (r.certificate.closure_pass ? "pass" : "FAIL") << "\n";
    os << "bound check: " << r.certificate.bound_comparison << " -> "
       << (r.certificate.bound_pass ? "pass" : "FAIL") << "\n";
    os << "enumerated " << r.certificate.enumerated << " candidate pairs\n";
    if (r.solutions.empty()) {
        os << "solutions: none\n";
    } else {
        os << "solutions:";
        for (const auto& [x, y] : r.solutions)
            os << " (" << x.get_str() << "," << y.get_str() << ")";
        os << "\n";
    }
    return os.str();
}

std::string pell_to_json(const PellResult& r, const PellInstance& inst) {
    json j;
    j["D"] = inst.D.get_str();
    j["N"] = inst.N.get_str();
    if (inst.x_congruence)
        j["x_congruence"] = {inst.x_congruence->first.get_str(),
                             inst.x_congruence->second.get_str()};
    j["y_parity"] = inst.y_parity == Parity::Any
                        ? "any"
                        : (inst.y_parity == Parity::Even ? "even" : "odd");
    j["bound"] = inst.bound.get_str();
    j["closure_check"] = r.certificate.closure_pass ? "pass" : "fail";
    j["closure_modulus"] = r.certificate.closure_modulus;
    j["bound_check"] = r.certificate.bound_comparison;
    j["bound_pass"] = r.certificate.bound_pass;
    j["enumerated"] = r.certificate.enumerated;
    json sols = json::array();
    for (const auto& [x, y] : r.solutions)
        sols.push_back({x.get_str(), y.get_str()});
    j["solutions"] = sols;
    return j.dump(2);
}

}  // namespace sharelab
