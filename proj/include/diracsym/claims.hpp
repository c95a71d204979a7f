#pragma once

#include <optional>
#include <string>
#include <vector>

#include "diracsym/classification.hpp"
#include "diracsym/spectra.hpp"

namespace diracsym::claims {

/// A published invariance statement for one (d, variant, candidate) cell.
struct ExistenceClaim {
  int d = 0;
  Variant variant = Variant::Single;
  std::string candidate;
  bool exists = false;
};

/// The reference table. The d = 8 Tw entry is omitted: its source line lists
/// Tw as both invariant and noninvariant (see flags()).
const std::vector<ExistenceClaim>& existence_claims();

struct Mismatch {
  int d = 0;
  Variant variant = Variant::Single;
  std::string candidate;
  bool expected = false;
  bool actual = false;
  std::string describe() const;
};

/// Compares records against the reference table plus user expectations
/// (applied to every record). Only cells present in the records are checked.
std::vector<Mismatch> check_existence(const std::vector<ClassificationRecord>& records,
                                      const std::vector<ExistenceClaim>& extra = {});

/// Parses "Tw:no,C:yes" into claims with d = 0 (meaning: every record).
std::vector<ExistenceClaim> parse_expectations(const std::string& text);

enum class MatrixClaimKind {
  Representative,  // solver representative must be projectively equal
  Member,          // matrix must satisfy every constraint (lie in the solution space)
};

struct MatrixClaim {
  MatrixClaimKind kind = MatrixClaimKind::Representative;
  ExactMatrix matrix;
  std::string formula;  // e.g. "alpha1*alpha3"
};

/// Published intertwiner for a cell, written in terms of the model's own
/// alphas and beta. Only defined where the basis reproduces the printed
/// matrices literally: always for d = 2, and for the Dirac basis at d = 4.
std::optional<MatrixClaim> matrix_claim(const DiracModel& model, Variant variant, const std::string& candidate);

/// Published rest-frame content D^±(j1, j2) of the d = 4 models, sorted.
/// Empty for the massless variant, whose little group differs.
std::vector<RepLabel> expected_labels(Variant variant);

/// Sorts labels by (energy sign descending, j1, j2) for comparison.
std::vector<RepLabel> sorted_labels(std::vector<RepLabel> labels);

struct DiscrepancyFlag {
  std::string id;
  std::string message;
  friend bool operator==(const DiscrepancyFlag&, const DiscrepancyFlag&) = default;
};

/// Flags relevant to a run touching the given cells and basis.
std::vector<DiscrepancyFlag> flags_for(const std::vector<std::pair<int, Variant>>& cells, GammaBasis basis,
                                       const std::vector<std::string>& candidates);

}  // namespace diracsym::claims
