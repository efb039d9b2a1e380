#pragma once

#include <optional>
#include <string>

#include "sharelab/classifier.hpp"
#include "sharelab/diophantine.hpp"
#include "sharelab/verifier.hpp"

namespace sharelab {

// Candidate file format, one JSON document per candidate:
//   {"kind": "affine",  "slope": "...", "intercept": "..."}
//   {"kind": "exppoly", "lambda": "...", "coeffs": ["...", ...]}
//   {"kind": "expr",    "source": "..."}
// with optional "a" and "b". Scalars use the text serialization; polynomial
// coefficients are listed lowest power first.
struct CandidateDocument {
    CandidateFunction function;
    std::optional<Scalar> a, b;
};

CandidateDocument candidate_from_json(const std::string& text);
std::string candidate_to_json(const CandidateDocument& doc);

std::string report_to_json(const VerificationReport& r);
VerificationReport report_from_json(const std::string& text);
std::string report_to_text(const VerificationReport& r);

std::string counting_to_text(const CountingData& c);

std::string jet_to_json(const Jet& j);
std::string jet_to_text(const Jet& j);

std::string family_to_text(const SolutionFamily& fam);
std::string family_to_json(const SolutionFamily& fam);

std::string refutation_to_text(const RefutationRecord& r);
std::string pell_to_text(const PellResult& r, const PellInstance& inst);
std::string pell_to_json(const PellResult& r, const PellInstance& inst);

}  // namespace sharelab
