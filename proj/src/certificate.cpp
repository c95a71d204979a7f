#include "diracsym/certificate.hpp"

#include <openssl/evp.h>

#include <array>
#include <cstdio>
#include <stdexcept>

namespace diracsym {

std::string toolkit_version() { return DIRACSYM_VERSION; }

Json to_json(const Rational& q) { return Json::array({q.get_num().get_str(), q.get_den().get_str()}); }

Rational rational_from_json(const Json& j) {
  if (!j.is_array() || j.size() != 2 || !j[0].is_string() || !j[1].is_string()) {
    throw std::invalid_argument("rational must be [\"num\",\"den\"]: " + j.dump());
  }
  const auto num = j[0].get<std::string>();
  const auto den = j[1].get<std::string>();
  if (num.find('/') != std::string::npos || den.find('/') != std::string::npos) {
    throw std::invalid_argument("rational parts must be integers: " + j.dump());
  }
  return parse_rational(num + "/" + den);
}

Json to_json(const ExactScalar& z) { return {{"re", to_json(z.re())}, {"im", to_json(z.im())}}; }

ExactScalar scalar_from_json(const Json& j) {
  if (!j.is_object() || !j.contains("re") || !j.contains("im") || j.size() != 2) {
    throw std::invalid_argument("scalar must be {\"re\":..,\"im\":..}: " + j.dump());
  }
  return ExactScalar(rational_from_json(j["re"]), rational_from_json(j["im"]));
}

Json to_json(const ExactMatrix& m) {
  Json rows = Json::array();
  for (std::size_t r = 0; r < m.dim(); ++r) {
    Json row = Json::array();
    for (std::size_t c = 0; c < m.dim(); ++c) row.push_back(to_json(m(r, c)));
    rows.push_back(std::move(row));
  }
  return rows;
}

ExactMatrix matrix_from_json(const Json& j) {
  if (!j.is_array()) throw std::invalid_argument("matrix must be an array of rows");
  const std::size_t n = j.size();
  ExactMatrix m(n);
  for (std::size_t r = 0; r < n; ++r) {
    if (!j[r].is_array() || j[r].size() != n) throw std::invalid_argument("matrix must be square");
    for (std::size_t c = 0; c < n; ++c) m(r, c) = scalar_from_json(j[r][c]);
  }
  return m;
}

namespace {

template <class T, class F>
Json optional_json(const std::optional<T>& v, F&& f) {
  return v ? f(*v) : Json(nullptr);
}

}  // namespace

Json to_json(const CandidateVerdict& v) {
  Json j{{"candidate", v.candidate},
         {"signature", v.signature},
         {"status", to_string(v.status)},
         {"exists", v.exists()},
         {"dim", v.dim}};
  j["representative"] = optional_json(v.representative, [](const ExactMatrix& m) { return to_json(m); });
  j["square_phase"] = optional_json(v.square_phase, [](const ExactScalar& z) { return to_json(z); });
  j["composition_verified"] = v.composition_verified ? Json(*v.composition_verified) : Json(nullptr);
  return j;
}

CandidateVerdict verdict_from_json(const Json& j) {
  CandidateVerdict v;
  v.candidate = j.at("candidate").get<std::string>();
  v.signature = j.at("signature").get<std::string>();
  v.status = parse_solve_status(j.at("status").get<std::string>());
  v.dim = j.at("dim").get<std::size_t>();
  if (!j.at("representative").is_null()) v.representative = matrix_from_json(j["representative"]);
  if (!j.at("square_phase").is_null()) v.square_phase = scalar_from_json(j["square_phase"]);
  if (!j.at("composition_verified").is_null()) v.composition_verified = j["composition_verified"].get<bool>();
  return v;
}

Json to_json(const ClassificationRecord& r) {
  Json verdicts = Json::array();
  for (const auto& v : r.verdicts) verdicts.push_back(to_json(v));
  return {{"d", r.d},
          {"variant", to_string(r.variant)},
          {"basis", to_string(r.basis)},
          {"mass", to_json(r.mass)},
          {"rep_dim", r.rep_dim},
          {"verdicts", std::move(verdicts)}};
}

ClassificationRecord record_from_json(const Json& j) {
  ClassificationRecord r;
  r.d = j.at("d").get<int>();
  r.variant = parse_variant(j.at("variant").get<std::string>());
  r.basis = parse_gamma_basis(j.at("basis").get<std::string>());
  r.mass = rational_from_json(j.at("mass"));
  r.rep_dim = j.at("rep_dim").get<std::size_t>();
  for (const auto& v : j.at("verdicts")) r.verdicts.push_back(verdict_from_json(v));
  return r;
}

Json to_json(const TauSolution& s) {
  Json basis = Json::array();
  for (const auto& m : s.basis) basis.push_back(to_json(m));
  Json j{{"candidate", s.candidate.name},
         {"antilinear", s.candidate.antilinear},
         {"signature", s.candidate.signature.to_string()},
         {"ansatz", s.ansatz.to_string()},
         {"status", to_string(s.status)},
         {"dim", s.dim()},
         {"basis", std::move(basis)},
         {"inconsistencies", s.inconsistencies}};
  j["representative"] = optional_json(s.representative, [](const ExactMatrix& m) { return to_json(m); });
  j["square_phase"] = optional_json(s.square_phase, [](const ExactScalar& z) { return to_json(z); });
  return j;
}

Json to_json(const DispersionProof& p) {
  Json momentum = Json::array();
  for (const auto& q : p.momentum) momentum.push_back(to_json(q));
  return {{"momentum", std::move(momentum)},
          {"omega2", to_json(p.omega2)},
          {"square_is_scalar", p.square_is_scalar},
          {"traceless", p.traceless},
          {"multiplicity", p.multiplicity},
          {"holds", p.holds()}};
}

Json to_json(const RepLabel& l) {
  return {{"energy_sign", l.energy_sign},
          {"j1", to_json(l.j1)},
          {"j2", to_json(l.j2)},
          {"multiplicity", l.multiplicity},
          {"label", l.to_string()}};
}

Json to_json(const claims::DiscrepancyFlag& f) { return {{"id", f.id}, {"message", f.message}}; }

namespace {

Json body_json(const Certificate& c) {
  Json flags = Json::array();
  for (const auto& f : c.flags) flags.push_back(to_json(f));
  return {{"schema_version", c.schema_version},
          {"toolkit_version", c.toolkit_version},
          {"command", c.command},
          {"inputs", c.inputs},
          {"results", c.results},
          {"flags", std::move(flags)}};
}

std::string sha256_hex(const std::string& data) {
  std::array<unsigned char, EVP_MAX_MD_SIZE> digest{};
  unsigned int len = 0;
  if (EVP_Digest(data.data(), data.size(), digest.data(), &len, EVP_sha256(), nullptr) != 1) {
    throw std::runtime_error("SHA-256 failed");
  }
  std::string hex;
  hex.reserve(2 * len);
  for (unsigned int i = 0; i < len; ++i) {
    char buf[3];
    std::snprintf(buf, sizeof buf, "%02x", digest[i]);
    hex += buf;
  }
  return hex;
}

}  // namespace

std::string compute_content_hash(const Certificate& c) { return "sha256:" + sha256_hex(body_json(c).dump()); }

Certificate make_certificate(std::string command, Json inputs, Json results,
                             std::vector<claims::DiscrepancyFlag> flags) {
  Certificate c;
  c.toolkit_version = toolkit_version();
  c.command = std::move(command);
  c.inputs = std::move(inputs);
  c.results = std::move(results);
  c.flags = std::move(flags);
  c.content_hash = compute_content_hash(c);
  return c;
}

Json to_json(const Certificate& c) {
  Json j = body_json(c);
  j["content_hash"] = c.content_hash;
  return j;
}

Certificate certificate_from_json(const Json& j) {
  if (!j.is_object() || !j.contains("schema_version")) throw SchemaError("not a certificate: no schema_version");
  const auto version = j["schema_version"].get<std::string>();
  if (version != kSchemaVersion) {
    throw SchemaError("schema version " + version + " is not supported (expected " + kSchemaVersion + ")");
  }
  Certificate c;
  c.schema_version = version;
  c.toolkit_version = j.at("toolkit_version").get<std::string>();
  c.command = j.at("command").get<std::string>();
  c.inputs = j.at("inputs");
  c.results = j.at("results");
  for (const auto& f : j.at("flags")) {
    c.flags.push_back({f.at("id").get<std::string>(), f.at("message").get<std::string>()});
  }
  c.content_hash = j.at("content_hash").get<std::string>();
  return c;
}

std::string emit(const Certificate& c) { return to_json(c).dump(2) + "\n"; }

Certificate parse_certificate(const std::string& text) {
  Json j;
  try {
    j = Json::parse(text);
  } catch (const Json::parse_error& e) {
    throw std::invalid_argument(std::string("certificate is not valid JSON: ") + e.what());
  }
  return certificate_from_json(j);
}

}  // namespace diracsym
