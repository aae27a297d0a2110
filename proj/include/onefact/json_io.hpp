#pragma once

// JSON wire formats. Field names and field order are fixed; output is
// byte-deterministic for identical inputs.

#include <string>

#include <json.hpp>

#include "onefact/brute_force.hpp"
#include "onefact/constructions.hpp"
#include "onefact/factorization.hpp"
#include "onefact/search.hpp"
#include "onefact/starter.hpp"

namespace onefact::io {

using Json = nlohmann::ordered_json;

/// Thrown for structurally invalid documents.
class FormatError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

Json group_to_json(const AbelianGroup& g);
AbelianGroup group_from_json(const Json& j);

Json element_to_json(const Element& e);
Element element_from_json(const AbelianGroup& g, const Json& j);

Json starter_to_json(const Starter& s);
Starter starter_from_json(const Json& j);

Json factorization_to_json(const OneFactorization& f);
OneFactorization factorization_from_json(const Json& j);

Json report_to_json(const VerificationReport& r);
Json search_outcome_to_json(const SearchOutcome& o);
Json certification_to_json(const CertificationResult& c);
Json parity_certificate_to_json(const NonexistenceCertificate& c);
Json verdict_to_json(std::int64_t m, std::int64_t n, const ExistenceVerdict& v);

/// Pretty form (2-space indent) with a trailing newline.
std::string dump_pretty(const Json& j);
/// Compact single-line form with a trailing newline.
std::string dump_compact(const Json& j);

Json parse(const std::string& text);

}  // namespace onefact::io
