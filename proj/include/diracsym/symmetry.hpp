#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "diracsym/models.hpp"

namespace diracsym {

enum class Bracket { Commute, Anticommute };

/// Which bracket S must satisfy with each generator class: S G = ε G S.
struct BracketSignature {
  Bracket p0 = Bracket::Commute;
  Bracket pk = Bracket::Commute;
  Bracket jkl = Bracket::Commute;
  Bracket j0k = Bracket::Commute;

  Bracket of(GeneratorKind kind) const;
  /// Compact form such as "P0:-,Pk:+,Jkl:+,J0k:-" (+ commute, - anticommute).
  std::string to_string() const;
  friend bool operator==(const BracketSignature&, const BracketSignature&) = default;
};

/// A discrete transformation S = τ ∘ K^antilinear ∘ (t -> t_sign t, x -> x_sign x).
struct SymmetryCandidate {
  std::string name;
  bool antilinear = false;
  int t_sign = 1;
  int x_sign = 1;
  BracketSignature signature;

  /// Sign picked up by p_k: x_sign, flipped once more under complex conjugation.
  int p_sign() const { return antilinear ? -x_sign : x_sign; }
  friend bool operator==(const SymmetryCandidate&, const SymmetryCandidate&) = default;
};

namespace candidates {

SymmetryCandidate identity();
/// Space inversion: linear, x -> -x.
SymmetryCandidate parity();
/// Linear time reflection anticommuting with P0 and J0k, commuting with P_k and J_kl.
SymmetryCandidate pauli_time_reflection();
/// Linear time reflection that anticommutes with P_k as well. Its P_k
/// condition cannot be met by any nonzero τ; it is reported as inconsistent.
SymmetryCandidate pauli_time_reflection_literal();
/// Antilinear time reflection: commutes with P0, J0k; anticommutes with P_k, J_kl.
SymmetryCandidate wigner_time_reflection();
/// Antilinear, no coordinate change, anticommutes with every generator.
SymmetryCandidate charge_conjugation();

/// P, Tp, Tp-literal, Tw, C, TpC, TwC, PTC (PTC = P∘Tw∘C).
SymmetryCandidate builtin(const std::string& name);
std::vector<std::string> builtin_names();
/// Names classified by default: P, Tp, Tw, C, TpC, TwC, PTC.
std::vector<std::string> classification_names();
/// For the composite built-ins, the factors in application order.
std::vector<std::string> factors_of(const std::string& name);

}  // namespace candidates

/// Composite S1∘S2: antilinearity XOR, coordinate signs and brackets multiply.
SymmetryCandidate compose(const SymmetryCandidate& first, const SymmetryCandidate& second);

/// Applies the coordinate and conjugation part of a candidate to a symbol:
/// t -> t_sign t, x_k -> x_sign x_k, p_k -> p_sign p_k, coefficients
/// conjugated when antilinear. τ itself is not applied.
OperatorSymbol transform(const OperatorSymbol& symbol, const SymmetryCandidate& candidate);

/// τ·left − right·τ = 0.
struct MatrixCondition {
  ExactMatrix left;
  ExactMatrix right;
  std::string source;
};

struct ConstraintSystem {
  std::size_t rep_dim = 0;
  std::vector<MatrixCondition> conditions;
  /// Conditions of the form (a - b)·τ = 0 with scalar a != b: they force τ = 0
  /// whatever the model, so the candidate itself is ill-posed.
  std::vector<std::string> inconsistencies;

  bool consistent() const { return inconsistencies.empty(); }
};

struct AssemblyOptions {
  bool include_rotation_generators = true;  // J_kl and J_0k
};

/// For every generator G with sign ε: τ·T(G) − ε·G·τ = 0, split by orbital monomial.
ConstraintSystem assemble_constraints(const DiracModel& model, const SymmetryCandidate& candidate,
                                      AssemblyOptions options = {});

/// True when τ satisfies every condition exactly.
bool satisfies(const ConstraintSystem& system, const ExactMatrix& tau);

enum class AnsatzKind { Full, Clifford };

struct Ansatz {
  AnsatzKind kind = AnsatzKind::Full;
  int max_degree = 2;  // Clifford only: products of at most this many gammas

  std::string to_string() const;
  /// "full", "clifford2", "clifford<k>".
  static Ansatz parse(const std::string& text);
};

enum class SolveStatus {
  Exists,        // an invertible intertwiner was found
  Absent,        // the solution space is {0}
  Singular,      // nonzero solutions, none invertible among the scanned combinations
  Inconsistent,  // the candidate's own brackets are contradictory
};

std::string to_string(SolveStatus status);
SolveStatus parse_solve_status(const std::string& text);

struct SolveOptions {
  Ansatz ansatz;
  bool include_rotation_generators = true;
};

struct TauSolution {
  SymmetryCandidate candidate;
  Ansatz ansatz;
  SolveStatus status = SolveStatus::Absent;
  std::vector<ExactMatrix> basis;
  std::optional<ExactMatrix> representative;
  /// c with S² = c·I after rescaling τ to a unitary; |c| = 1.
  std::optional<ExactScalar> square_phase;
  std::vector<std::string> inconsistencies;

  bool exists() const { return status == SolveStatus::Exists; }
  std::size_t dim() const { return basis.size(); }
};

TauSolution solve_tau(const DiracModel& model, const SymmetryCandidate& candidate, SolveOptions options = {});

/// Exact solution-space basis; exposed for the self-audit tests.
std::vector<ExactMatrix> solution_space(const DiracModel& model, const ConstraintSystem& system,
                                        const Ansatz& ansatz);

/// S² for S = τ K^antilinear, divided by the positive scalar ττ†. Empty if
/// ττ† or S² is not a multiple of the identity.
std::optional<ExactScalar> square_phase(const ExactMatrix& tau, bool antilinear);

struct ImplementedSymmetry {
  SymmetryCandidate candidate;
  ExactMatrix tau;
};

/// (τ1 K^a1)(τ2 K^a2) = τ1 conj^a1(τ2) K^(a1 xor a2).
ImplementedSymmetry compose(const ImplementedSymmetry& first, const ImplementedSymmetry& second);

}  // namespace diracsym
