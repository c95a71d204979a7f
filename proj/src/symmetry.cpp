#include "diracsym/symmetry.hpp"

#include <algorithm>
#include <random>
#include <stdexcept>

#include "diracsym/linear_system.hpp"

namespace diracsym {

namespace {

Bracket multiply(Bracket a, Bracket b) { return a == b ? Bracket::Commute : Bracket::Anticommute; }
int sign_of(Bracket b) { return b == Bracket::Commute ? 1 : -1; }
char symbol_of(Bracket b) { return b == Bracket::Commute ? '+' : '-'; }

constexpr Bracket kC = Bracket::Commute;
constexpr Bracket kA = Bracket::Anticommute;

}  // namespace

Bracket BracketSignature::of(GeneratorKind kind) const {
  switch (kind) {
    case GeneratorKind::P0: return p0;
    case GeneratorKind::Pk: return pk;
    case GeneratorKind::Jkl: return jkl;
    case GeneratorKind::J0k: return j0k;
  }
  throw std::logic_error("unknown generator kind");
}

std::string BracketSignature::to_string() const {
  return std::string("P0:") + symbol_of(p0) + ",Pk:" + symbol_of(pk) + ",Jkl:" + symbol_of(jkl) +
         ",J0k:" + symbol_of(j0k);
}

namespace candidates {

SymmetryCandidate identity() { return {"I", false, 1, 1, {kC, kC, kC, kC}}; }
SymmetryCandidate parity() { return {"P", false, 1, -1, {kC, kA, kC, kA}}; }
SymmetryCandidate pauli_time_reflection() { return {"Tp", false, -1, 1, {kA, kC, kC, kA}}; }
SymmetryCandidate pauli_time_reflection_literal() { return {"Tp-literal", false, -1, 1, {kA, kA, kC, kA}}; }
SymmetryCandidate wigner_time_reflection() { return {"Tw", true, -1, 1, {kC, kA, kA, kC}}; }
SymmetryCandidate charge_conjugation() { return {"C", true, 1, 1, {kA, kA, kA, kA}}; }

std::vector<std::string> factors_of(const std::string& name) {
  if (name == "TpC") return {"Tp", "C"};
  if (name == "TwC") return {"Tw", "C"};
  if (name == "PTC") return {"P", "Tw", "C"};
  return {};
}

SymmetryCandidate builtin(const std::string& name) {
  if (name == "I") return identity();
  if (name == "P") return parity();
  if (name == "Tp") return pauli_time_reflection();
  if (name == "Tp-literal") return pauli_time_reflection_literal();
  if (name == "Tw") return wigner_time_reflection();
  if (name == "C") return charge_conjugation();
  const auto factors = factors_of(name);
  if (factors.empty()) throw std::invalid_argument("unknown symmetry '" + name + "'");
  SymmetryCandidate out = builtin(factors.front());
  for (std::size_t i = 1; i < factors.size(); ++i) out = compose(out, builtin(factors[i]));
  out.name = name;
  return out;
}

std::vector<std::string> builtin_names() { return {"P", "Tp", "Tp-literal", "Tw", "C", "TpC", "TwC", "PTC"}; }
std::vector<std::string> classification_names() { return {"P", "Tp", "Tw", "C", "TpC", "TwC", "PTC"}; }

}  // namespace candidates

SymmetryCandidate compose(const SymmetryCandidate& first, const SymmetryCandidate& second) {
  if (first.name == "I") return second;
  if (second.name == "I") return first;
  const auto& a = first.signature;
  const auto& b = second.signature;
  return {first.name + second.name,
          first.antilinear != second.antilinear,
          first.t_sign * second.t_sign,
          first.x_sign * second.x_sign,
          {multiply(a.p0, b.p0), multiply(a.pk, b.pk), multiply(a.jkl, b.jkl), multiply(a.j0k, b.j0k)}};
}

OperatorSymbol transform(const OperatorSymbol& symbol, const SymmetryCandidate& candidate) {
  const int d = symbol.spatial_dim();
  OperatorSymbol out(d, symbol.rep_dim());
  for (const auto& [m, coeff] : symbol.terms()) {
    int sign = 1;
    if (m.t_exp() % 2 == 1) sign *= candidate.t_sign;
    if (m.total_x() % 2 == 1) sign *= candidate.x_sign;
    if (m.total_p() % 2 == 1) sign *= candidate.p_sign();
    ExactMatrix c = candidate.antilinear ? coeff.conj() : coeff;
    if (sign < 0) c = -c;
    out.add_term(m, c);
  }
  return out;
}

ConstraintSystem assemble_constraints(const DiracModel& model, const SymmetryCandidate& candidate,
                                      AssemblyOptions options) {
  ConstraintSystem system;
  system.rep_dim = model.rep_dim();
  for (const GeneratorId& id : all_generators(model.spatial_dim())) {
    const bool rotation = id.kind == GeneratorKind::Jkl || id.kind == GeneratorKind::J0k;
    if (rotation && !options.include_rotation_generators) continue;
    const OperatorSymbol g = generator(model, id);
    const OperatorSymbol tg = transform(g, candidate);
    const ExactScalar eps(sign_of(candidate.signature.of(id.kind)));

    std::vector<Monomial> monomials;
    for (const auto& [m, c] : g.terms()) monomials.push_back(m);
    for (const auto& [m, c] : tg.terms()) monomials.push_back(m);
    std::sort(monomials.begin(), monomials.end());
    monomials.erase(std::unique(monomials.begin(), monomials.end()), monomials.end());

    for (const Monomial& m : monomials) {
      MatrixCondition cond{tg.coefficient(m), eps * g.coefficient(m), id.label()};
      const auto left_scalar = cond.left.scalar_value();
      const auto right_scalar = cond.right.scalar_value();
      if (left_scalar && right_scalar) {
        if (!(*left_scalar == *right_scalar)) {
          system.inconsistencies.push_back(id.label() + ": orbital coefficient forces tau = 0 for every model");
        }
        continue;
      }
      const bool duplicate = std::any_of(system.conditions.begin(), system.conditions.end(), [&](const auto& c) {
        return c.left == cond.left && c.right == cond.right;
      });
      if (!duplicate) system.conditions.push_back(std::move(cond));
    }
  }
  return system;
}

bool satisfies(const ConstraintSystem& system, const ExactMatrix& tau) {
  if (!system.consistent() && !tau.is_zero()) return false;
  return std::all_of(system.conditions.begin(), system.conditions.end(),
                     [&](const MatrixCondition& c) { return tau * c.left == c.right * tau; });
}

std::string Ansatz::to_string() const {
  return kind == AnsatzKind::Full ? "full" : "clifford" + std::to_string(max_degree);
}

Ansatz Ansatz::parse(const std::string& text) {
  if (text == "full") return {AnsatzKind::Full, 2};
  const std::string prefix = "clifford";
  if (text.starts_with(prefix)) {
    const std::string rest = text.substr(prefix.size());
    if (rest.empty()) return {AnsatzKind::Clifford, 2};
    if (std::all_of(rest.begin(), rest.end(), [](char c) { return c >= '0' && c <= '9'; }) && rest.size() < 3) {
      return {AnsatzKind::Clifford, std::stoi(rest)};
    }
  }
  throw std::invalid_argument("unknown ansatz '" + text + "' (expected full or clifford<k>)");
}

std::string to_string(SolveStatus status) {
  switch (status) {
    case SolveStatus::Exists: return "exists";
    case SolveStatus::Absent: return "absent";
    case SolveStatus::Singular: return "singular";
    case SolveStatus::Inconsistent: return "inconsistent";
  }
  return "?";
}

SolveStatus parse_solve_status(const std::string& text) {
  for (auto s : {SolveStatus::Exists, SolveStatus::Absent, SolveStatus::Singular, SolveStatus::Inconsistent})
    if (to_string(s) == text) return s;
  throw std::invalid_argument("unknown solve status '" + text + "'");
}

namespace {

ExactMatrix as_matrix(std::size_t n, const ExactVector& v) { return ExactMatrix(n, v); }

// Sparse per-column view of left and per-row view of right, used to build
// one row per matrix entry of τL − Rτ.
struct SparseColumns {
  std::vector<std::vector<std::pair<std::size_t, ExactScalar>>> cols;
  explicit SparseColumns(const ExactMatrix& m) : cols(m.dim()) {
    for (std::size_t a = 0; a < m.dim(); ++a)
      for (std::size_t j = 0; j < m.dim(); ++j)
        if (!m(a, j).is_zero()) cols[j].emplace_back(a, m(a, j));
  }
};

struct SparseRows {
  std::vector<std::vector<std::pair<std::size_t, ExactScalar>>> rows;
  explicit SparseRows(const ExactMatrix& m) : rows(m.dim()) {
    for (std::size_t i = 0; i < m.dim(); ++i)
      for (std::size_t b = 0; b < m.dim(); ++b)
        if (!m(i, b).is_zero()) rows[i].emplace_back(b, m(i, b));
  }
};

std::vector<ExactMatrix> full_space(const ConstraintSystem& system) {
  const std::size_t n = system.rep_dim;
  if (!system.consistent()) return {};
  RowEchelon echelon(n * n);
  for (const auto& cond : system.conditions) {
    const SparseColumns left(cond.left);
    const SparseRows right(cond.right);
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = 0; j < n; ++j) {
        LinearForm row;
        for (const auto& [a, v] : left.cols[j]) row.emplace_back(i * n + a, v);
        for (const auto& [b, v] : right.rows[i]) row.emplace_back(b * n + j, -v);
        if (!row.empty()) echelon.add_row(std::move(row));
      }
    }
  }
  std::vector<ExactMatrix> out;
  for (const auto& v : echelon.nullspace()) out.push_back(as_matrix(n, v));
  return out;
}

std::vector<ExactMatrix> clifford_space(const DiracModel& model, const ConstraintSystem& system, int max_degree) {
  if (model.doubled) throw std::invalid_argument("the Clifford ansatz applies to undoubled models only");
  if (!system.consistent()) return {};
  const std::size_t n = system.rep_dim;
  const auto monomials = monomial_basis(model.gamma, max_degree);
  RowEchelon echelon(monomials.size());
  for (const auto& cond : system.conditions) {
    std::vector<ExactMatrix> images;
    images.reserve(monomials.size());
    for (const auto& mono : monomials) images.push_back(mono.matrix * cond.left - cond.right * mono.matrix);
    for (std::size_t e = 0; e < n * n; ++e) {
      LinearForm row;
      for (std::size_t c = 0; c < images.size(); ++c)
        if (!images[c].entries()[e].is_zero()) row.emplace_back(c, images[c].entries()[e]);
      if (!row.empty()) echelon.add_row(std::move(row));
    }
  }
  // Coefficient vectors can be redundant (the monomials need not be
  // independent); keep an independent set of the resulting matrices.
  RowEchelon image(n * n);
  std::vector<ExactMatrix> out;
  for (const auto& coeffs : echelon.nullspace()) {
    ExactMatrix tau(n);
    for (std::size_t c = 0; c < coeffs.size(); ++c)
      if (!coeffs[c].is_zero()) tau += coeffs[c] * monomials[c].matrix;
    LinearForm row;
    for (std::size_t e = 0; e < n * n; ++e)
      if (!tau.entries()[e].is_zero()) row.emplace_back(e, tau.entries()[e]);
    if (image.add_row(std::move(row))) out.push_back(std::move(tau));
  }
  return out;
}

// Weight vectors tried when looking for an invertible element. For a
// two-dimensional space, det(a A + b B) is a binary form of degree n, so n+1
// pairwise independent directions decide invertibility exactly.
std::vector<std::vector<long>> weight_scan(std::size_t dim, std::size_t rep_dim) {
  std::vector<std::vector<long>> out;
  if (dim == 1) return {{1}};
  if (dim == 2) {
    out.push_back({1, 0});
    out.push_back({0, 1});
    for (long k = 1; k <= static_cast<long>(rep_dim); ++k) out.push_back({1, k});
    return out;
  }
  for (std::size_t i = 0; i < dim; ++i) {
    std::vector<long> w(dim, 0);
    w[i] = 1;
    out.push_back(std::move(w));
  }
  std::mt19937 rng(20240601u);
  std::uniform_int_distribution<long> pick(-2, 2);
  for (int trial = 0; trial < 64; ++trial) {
    std::vector<long> w(dim);
    for (auto& x : w) x = pick(rng);
    out.push_back(std::move(w));
  }
  return out;
}

}  // namespace

std::vector<ExactMatrix> solution_space(const DiracModel& model, const ConstraintSystem& system,
                                        const Ansatz& ansatz) {
  return ansatz.kind == AnsatzKind::Full ? full_space(system) : clifford_space(model, system, ansatz.max_degree);
}

std::optional<ExactScalar> square_phase(const ExactMatrix& tau, bool antilinear) {
  const auto gram = (tau * tau.adjoint()).scalar_value();
  if (!gram || gram->is_zero()) return std::nullopt;
  const auto sq = (antilinear ? tau * tau.conj() : tau * tau).scalar_value();
  if (!sq) return std::nullopt;
  return *sq / *gram;
}

TauSolution solve_tau(const DiracModel& model, const SymmetryCandidate& candidate, SolveOptions options) {
  const ConstraintSystem system =
      assemble_constraints(model, candidate, {.include_rotation_generators = options.include_rotation_generators});
  TauSolution sol;
  sol.candidate = candidate;
  sol.ansatz = options.ansatz;
  sol.inconsistencies = system.inconsistencies;
  if (!system.consistent()) {
    sol.status = SolveStatus::Inconsistent;
    return sol;
  }
  sol.basis = solution_space(model, system, options.ansatz);
  if (sol.basis.empty()) {
    sol.status = SolveStatus::Absent;
    return sol;
  }
  sol.status = SolveStatus::Singular;
  for (const auto& weights : weight_scan(sol.basis.size(), model.rep_dim())) {
    ExactMatrix tau(model.rep_dim());
    for (std::size_t i = 0; i < weights.size(); ++i)
      if (weights[i] != 0) tau += ExactScalar(weights[i]) * sol.basis[i];
    if (is_invertible(tau)) {
      sol.status = SolveStatus::Exists;
      sol.representative = normalize_phase(tau);
      sol.square_phase = square_phase(*sol.representative, candidate.antilinear);
      break;
    }
  }
  return sol;
}

ImplementedSymmetry compose(const ImplementedSymmetry& first, const ImplementedSymmetry& second) {
  const ExactMatrix right = first.candidate.antilinear ? second.tau.conj() : second.tau;
  return {compose(first.candidate, second.candidate), first.tau * right};
}

}  // namespace diracsym
