#pragma once

#include <optional>
#include <string>
#include <vector>

#include "diracsym/symmetry.hpp"

namespace diracsym {

enum class Variant {
  Single,       // H+ = α·p + κβ
  SingleMinus,  // H- = α·p - κβ
  Doubled,      // block model joining both branches
  Massless,     // κ = 0
};

std::string to_string(Variant v);
/// Accepts single, single+, single-, doubled, massless.
Variant parse_variant(const std::string& text);

/// Builds the model for a (d, variant) cell. The mass is ignored for Massless.
DiracModel build_model(int d, Variant variant, const Rational& mass, GammaBasis basis);

struct CandidateVerdict {
  std::string candidate;
  std::string signature;
  SolveStatus status = SolveStatus::Absent;
  std::size_t dim = 0;
  std::optional<ExactMatrix> representative;
  std::optional<ExactScalar> square_phase;
  /// Composite candidates whose factors all exist: whether the composed τ
  /// satisfies the composite's own constraints and is invertible.
  std::optional<bool> composition_verified;

  bool exists() const { return status == SolveStatus::Exists; }
  friend bool operator==(const CandidateVerdict&, const CandidateVerdict&) = default;
};

struct ClassificationRecord {
  int d = 0;
  Variant variant = Variant::Single;
  GammaBasis basis = GammaBasis::Dirac;
  Rational mass{1};
  std::size_t rep_dim = 0;
  std::vector<CandidateVerdict> verdicts;

  const CandidateVerdict* find(const std::string& candidate) const;
  friend bool operator==(const ClassificationRecord&, const ClassificationRecord&) = default;
};

struct ClassifyOptions {
  GammaBasis basis = GammaBasis::Dirac;
  Rational mass{1};
  unsigned jobs = 1;
  std::vector<std::string> candidates = candidates::classification_names();
};

/// Solves every (d, variant, candidate) cell, on up to `jobs` worker threads,
/// and returns one record per (d, variant) in input order.
std::vector<ClassificationRecord> classify(const std::vector<int>& dims, const std::vector<Variant>& variants,
                                           const ClassifyOptions& options = {});

}  // namespace diracsym
