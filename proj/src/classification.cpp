#include "diracsym/classification.hpp"

#include <algorithm>
#include <atomic>
#include <stdexcept>
#include <thread>

namespace diracsym {

std::string to_string(Variant v) {
  switch (v) {
    case Variant::Single: return "single";
    case Variant::SingleMinus: return "single-";
    case Variant::Doubled: return "doubled";
    case Variant::Massless: return "massless";
  }
  return "?";
}

Variant parse_variant(const std::string& text) {
  if (text == "single" || text == "single+") return Variant::Single;
  if (text == "single-") return Variant::SingleMinus;
  if (text == "doubled") return Variant::Doubled;
  if (text == "massless") return Variant::Massless;
  throw std::invalid_argument("unknown variant '" + text + "' (expected single, single-, doubled, massless)");
}

DiracModel build_model(int d, Variant variant, const Rational& mass, GammaBasis basis) {
  const GammaSystem gs = system_for(d, basis);
  switch (variant) {
    case Variant::Single: return make_model(gs, mass, 1);
    case Variant::SingleMinus: return make_model(gs, mass, -1);
    case Variant::Doubled: return doubled(make_model(gs, mass, 1));
    case Variant::Massless: return make_model(gs, Rational(0), 1);
  }
  throw std::logic_error("unknown variant");
}

const CandidateVerdict* ClassificationRecord::find(const std::string& candidate) const {
  const auto it = std::find_if(verdicts.begin(), verdicts.end(),
                               [&](const CandidateVerdict& v) { return v.candidate == candidate; });
  return it == verdicts.end() ? nullptr : &*it;
}

namespace {

struct Cell {
  std::size_t record = 0;
  std::size_t model = 0;
  std::string candidate;
};

template <typename Fn>
void run_parallel(std::size_t count, unsigned jobs, Fn&& fn) {
  const unsigned workers = std::max(1u, std::min<unsigned>(jobs, static_cast<unsigned>(count)));
  if (workers == 1) {
    for (std::size_t i = 0; i < count; ++i) fn(i);
    return;
  }
  std::atomic<std::size_t> next{0};
  std::vector<std::jthread> pool;
  for (unsigned w = 0; w < workers; ++w) {
    pool.emplace_back([&] {
      for (std::size_t i = next++; i < count; i = next++) fn(i);
    });
  }
}

}  // namespace

std::vector<ClassificationRecord> classify(const std::vector<int>& dims, const std::vector<Variant>& variants,
                                           const ClassifyOptions& options) {
  std::vector<ClassificationRecord> records;
  std::vector<DiracModel> models;
  for (int d : dims) {
    for (Variant v : variants) {
      models.push_back(build_model(d, v, options.mass, options.basis));
      ClassificationRecord rec;
      rec.d = d;
      rec.variant = v;
      rec.basis = options.basis;
      rec.mass = v == Variant::Massless ? Rational(0) : options.mass;
      rec.rep_dim = models.back().rep_dim();
      records.push_back(std::move(rec));
    }
  }

  std::vector<Cell> cells;
  for (std::size_t r = 0; r < records.size(); ++r)
    for (const auto& name : options.candidates) cells.push_back({r, r, name});

  std::vector<TauSolution> solutions(cells.size());
  run_parallel(cells.size(), options.jobs, [&](std::size_t i) {
    solutions[i] = solve_tau(models[cells[i].model], candidates::builtin(cells[i].candidate));
  });

  for (std::size_t i = 0; i < cells.size(); ++i) {
    const TauSolution& sol = solutions[i];
    CandidateVerdict v;
    v.candidate = cells[i].candidate;
    v.signature = sol.candidate.signature.to_string();
    v.status = sol.status;
    v.dim = sol.dim();
    v.representative = sol.representative;
    v.square_phase = sol.square_phase;
    records[cells[i].record].verdicts.push_back(std::move(v));
  }

  // Composite rows: when every factor exists, compose the factor
  // representatives and re-check them against the composite's own system.
  for (std::size_t r = 0; r < records.size(); ++r) {
    ClassificationRecord& rec = records[r];
    for (CandidateVerdict& v : rec.verdicts) {
      const auto factors = candidates::factors_of(v.candidate);
      if (factors.empty()) continue;
      std::optional<ImplementedSymmetry> composed;
      bool all_exist = true;
      for (const auto& f : factors) {
        const CandidateVerdict* part = rec.find(f);
        std::optional<ExactMatrix> tau = part ? part->representative : std::nullopt;
        if (!part) {
          const TauSolution sol = solve_tau(models[r], candidates::builtin(f));
          tau = sol.representative;
        }
        if (!tau) {
          all_exist = false;
          break;
        }
        ImplementedSymmetry piece{candidates::builtin(f), *tau};
        composed = composed ? compose(*composed, piece) : piece;
      }
      if (!all_exist || !composed) continue;
      const ConstraintSystem system = assemble_constraints(models[r], candidates::builtin(v.candidate));
      v.composition_verified = satisfies(system, composed->tau) && is_invertible(composed->tau);
    }
  }
  return records;
}

}  // namespace diracsym
