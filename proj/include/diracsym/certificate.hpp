#pragma once

#include <json.hpp>

#include <string>
#include <vector>

#include "diracsym/claims.hpp"
#include "diracsym/spectra.hpp"

namespace diracsym {

using Json = nlohmann::json;

inline constexpr const char* kSchemaVersion = "diracsym-certificate/1";
std::string toolkit_version();

// Exact serialization. A rational is ["num","den"] with decimal strings; a
// scalar is {"re":[..],"im":[..]}; a matrix is a row-major nested array of
// scalars. Readers throw std::invalid_argument on malformed input.
Json to_json(const Rational& q);
Rational rational_from_json(const Json& j);
Json to_json(const ExactScalar& z);
ExactScalar scalar_from_json(const Json& j);
Json to_json(const ExactMatrix& m);
ExactMatrix matrix_from_json(const Json& j);

Json to_json(const CandidateVerdict& v);
CandidateVerdict verdict_from_json(const Json& j);
Json to_json(const ClassificationRecord& r);
ClassificationRecord record_from_json(const Json& j);
Json to_json(const TauSolution& s);
Json to_json(const DispersionProof& p);
Json to_json(const RepLabel& l);
Json to_json(const claims::DiscrepancyFlag& f);

struct SchemaError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct Certificate {
  std::string schema_version = kSchemaVersion;
  std::string toolkit_version;
  std::string command;
  Json inputs = Json::object();
  Json results = Json::object();
  std::vector<claims::DiscrepancyFlag> flags;
  std::string content_hash;

  friend bool operator==(const Certificate&, const Certificate&) = default;
};

/// Fills in the versions and the content hash.
Certificate make_certificate(std::string command, Json inputs, Json results,
                             std::vector<claims::DiscrepancyFlag> flags);

/// SHA-256 (hex) of the canonical serialization with content_hash left out.
std::string compute_content_hash(const Certificate& c);

Json to_json(const Certificate& c);
/// Throws SchemaError for a missing or different schema version.
Certificate certificate_from_json(const Json& j);

/// Canonical text: sorted keys, two-space indent, trailing newline.
std::string emit(const Certificate& c);
Certificate parse_certificate(const std::string& text);

}  // namespace diracsym
