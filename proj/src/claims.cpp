#include "diracsym/claims.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace diracsym::claims {

const std::vector<ExistenceClaim>& existence_claims() {
  static const std::vector<ExistenceClaim> table = [] {
    std::vector<ExistenceClaim> t;
    const auto add = [&t](int d, Variant v, std::initializer_list<std::string> yes,
                          std::initializer_list<std::string> no) {
      for (const auto& c : yes) t.push_back({d, v, c, true});
      for (const auto& c : no) t.push_back({d, v, c, false});
    };
    add(2, Variant::Single, {"P", "C"}, {"Tp", "Tw", "TwC"});
    add(4, Variant::Single, {"P", "Tw", "TpC"}, {"Tp", "C", "TwC", "PTC"});
    add(6, Variant::Single, {"C"}, {"Tp", "Tw", "TpC", "TwC"});
    add(8, Variant::Single, {"TpC"}, {"Tp", "TwC"});
    add(2, Variant::SingleMinus, {"C"}, {"Tp", "Tw", "TwC"});
    add(4, Variant::SingleMinus, {"Tw", "TpC"}, {"Tp", "C", "TwC"});
    add(2, Variant::Doubled, {"Tp", "Tw", "C", "PTC"}, {});
    add(4, Variant::Doubled, {"Tp", "Tw", "C", "PTC"}, {});
    add(2, Variant::Massless, {"Tp", "Tw", "C"}, {});
    add(4, Variant::Massless, {"Tp", "Tw", "C"}, {});
    return t;
  }();
  return table;
}

std::string Mismatch::describe() const {
  std::ostringstream os;
  os << "P(1," << d << ") " << to_string(variant) << " " << candidate << ": expected "
     << (expected ? "invariant" : "noninvariant") << ", engine found " << (actual ? "invariant" : "noninvariant");
  return os.str();
}

std::vector<Mismatch> check_existence(const std::vector<ClassificationRecord>& records,
                                      const std::vector<ExistenceClaim>& extra) {
  std::vector<Mismatch> out;
  for (const auto& rec : records) {
    const auto check = [&](const ExistenceClaim& claim) {
      const CandidateVerdict* v = rec.find(claim.candidate);
      if (!v) return;
      if (v->exists() != claim.exists) out.push_back({rec.d, rec.variant, claim.candidate, claim.exists, v->exists()});
    };
    for (const auto& claim : existence_claims())
      if (claim.d == rec.d && claim.variant == rec.variant) check(claim);
    for (const auto& claim : extra) check(claim);
  }
  return out;
}

std::vector<ExistenceClaim> parse_expectations(const std::string& text) {
  std::vector<ExistenceClaim> out;
  std::istringstream in(text);
  std::string item;
  while (std::getline(in, item, ',')) {
    if (item.empty()) continue;
    const auto colon = item.find(':');
    if (colon == std::string::npos) throw std::invalid_argument("expectation '" + item + "' is not NAME:yes|no");
    const std::string name = item.substr(0, colon);
    const std::string value = item.substr(colon + 1);
    if (value != "yes" && value != "no") throw std::invalid_argument("expectation value must be yes or no: " + item);
    candidates::builtin(name);  // validates the name
    out.push_back({0, Variant::Single, name, value == "yes"});
  }
  return out;
}

namespace {

bool literal_basis(const DiracModel& model) {
  return model.spatial_dim() == 2 || (model.spatial_dim() == 4 && model.gamma.basis == GammaBasis::Dirac);
}

}  // namespace

std::optional<MatrixClaim> matrix_claim(const DiracModel& model, Variant variant, const std::string& candidate) {
  if (!literal_basis(model)) return std::nullopt;
  const int d = model.spatial_dim();
  const auto a = [&](int k) { return model.gamma.alphas().at(static_cast<std::size_t>(k - 1)); };
  const ExactMatrix& b = model.gamma.beta();
  const ExactMatrix zero(b.dim());
  const auto rep = [](ExactMatrix m, std::string f) {
    return MatrixClaim{MatrixClaimKind::Representative, std::move(m), std::move(f)};
  };
  const auto member = [](ExactMatrix m, std::string f) {
    return MatrixClaim{MatrixClaimKind::Member, std::move(m), std::move(f)};
  };

  if (d == 4) {
    switch (variant) {
      case Variant::Single:
      case Variant::SingleMinus:
        if (candidate == "Tw") return rep(a(1) * a(3), "alpha1*alpha3");
        break;
      case Variant::Massless:
        if (candidate == "Tp") return rep(b, "gamma0");
        if (candidate == "C") return rep(a(2) * a(4), "alpha2*alpha4");
        if (candidate == "Tw") return rep(a(1) * a(3), "alpha1*alpha3");
        break;
      case Variant::Doubled:
        if (candidate == "Tp") return member(block(zero, b, b, zero), "antidiag(beta, beta)");
        if (candidate == "Tw") {
          const ExactMatrix t = a(1) * a(3);
          return member(block(t, zero, zero, t), "diag(alpha1*alpha3, alpha1*alpha3)");
        }
        if (candidate == "C") {
          const ExactMatrix t = a(2) * a(4);
          return member(block(zero, t, t, zero), "antidiag(alpha2*alpha4, alpha2*alpha4)");
        }
        break;
    }
  } else if (d == 2) {
    switch (variant) {
      case Variant::Single:
      case Variant::SingleMinus:
        if (candidate == "C") return rep(pauli::sigma1(), "sigma1");
        break;
      case Variant::Massless:
        if (candidate == "Tp") return rep(pauli::sigma3(), "sigma3");
        if (candidate == "Tw") return rep(pauli::sigma2(), "sigma2");
        break;
      case Variant::Doubled: {
        const ExactMatrix s1 = pauli::sigma1(), s2 = pauli::sigma2(), s3 = pauli::sigma3(), z(2);
        if (candidate == "Tp") return member(block(z, s3, s3, z), "antidiag(sigma3, sigma3)");
        if (candidate == "Tw") return member(block(z, s2, s2, z), "antidiag(sigma2, sigma2)");
        if (candidate == "C") return member(block(s1, z, z, s1), "diag(sigma1, sigma1)");
        break;
      }
    }
  }
  return std::nullopt;
}

std::vector<RepLabel> sorted_labels(std::vector<RepLabel> labels) {
  std::sort(labels.begin(), labels.end(), [](const RepLabel& a, const RepLabel& b) {
    if (a.energy_sign != b.energy_sign) return a.energy_sign > b.energy_sign;
    if (a.j1 != b.j1) return a.j1 < b.j1;
    return a.j2 < b.j2;
  });
  return labels;
}

std::vector<RepLabel> expected_labels(Variant variant) {
  const Rational half = make_rational(1, 2), zero = 0;
  switch (variant) {
    case Variant::Single:
      return sorted_labels({{1, half, zero, 1}, {-1, zero, half, 1}});
    case Variant::SingleMinus:
      return sorted_labels({{1, zero, half, 1}, {-1, half, zero, 1}});
    case Variant::Doubled:
      return sorted_labels({{1, half, zero, 1}, {-1, half, zero, 1}, {1, zero, half, 1}, {-1, zero, half, 1}});
    case Variant::Massless:
      break;
  }
  return {};
}

std::vector<DiscrepancyFlag> flags_for(const std::vector<std::pair<int, Variant>>& cells, GammaBasis basis,
                                       const std::vector<std::string>& candidates) {
  std::vector<DiscrepancyFlag> out;
  const auto has = [&](int d, Variant v) {
    return std::find(cells.begin(), cells.end(), std::make_pair(d, v)) != cells.end();
  };
  const auto uses = [&](const std::string& c) {
    return candidates.empty() || std::find(candidates.begin(), candidates.end(), c) != candidates.end();
  };
  const bool any_extended =
      std::any_of(cells.begin(), cells.end(), [](const auto& c) { return c.first > 2; });

  if (basis == GammaBasis::Recursive && any_extended) {
    out.push_back({"gamma-i-normalization",
                   "the tensor-product step (g x s2, 1 x s3, 1 x s1) is applied with the two new gammas multiplied "
                   "by i; without the factor they square to +1 and the Clifford relations fail"});
  }
  if (uses("Tp") || uses("TpC") || uses("TwC")) {
    out.push_back({"tp-signature",
                   "Tp uses brackets P0:-,Pk:+,Jkl:+,J0k:-; the printed anticommutator with P_k forces tau = 0 for "
                   "any linear time reflection and is available as candidate Tp-literal"});
  }
  if (has(2, Variant::Doubled)) {
    out.push_back({"doubled-beta-d2",
                   "the doubled P(1,2) model uses beta~ = diag(s3, -s3); the printed diag(s3, s3) admits no "
                   "invertible Tp intertwiner of the printed form antidiag(s3, s3)"});
  }
  if (has(4, Variant::Doubled)) {
    out.push_back({"doubled-tau-layout-d4",
                   "the printed doubled P(1,4) tau^w and tau^c are laid out as 2x3 arrays; they are read as "
                   "diag(a1a3, a1a3) and antidiag(a2a4, a2a4) and checked against the constraints"});
  }
  if (has(8, Variant::Single)) {
    out.push_back({"d8-tw-contradiction",
                   "the published P(1,8) line lists Tw as both noninvariant and invariant; the engine verdict is "
                   "recorded as ground truth and the Tw cell is not compared"});
  }
  return out;
}

}  // namespace diracsym::claims

