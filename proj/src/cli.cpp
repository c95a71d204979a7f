#include "diracsym/cli.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <fstream>
#include <iomanip>
#include <random>
#include <sstream>

#include "diracsym/certificate.hpp"

namespace diracsym::cli {

namespace {

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct Globals {
  std::string out_path;
  bool json = false;
  unsigned jobs = 1;
  std::uint64_t seed = 20240601;
};

struct Outcome {
  Certificate certificate;
  std::string text;
  std::vector<std::string> mismatches;
};

std::vector<std::string> split(const std::string& text, char sep = ',') {
  std::vector<std::string> out;
  std::istringstream in(text);
  std::string item;
  while (std::getline(in, item, sep))
    if (!item.empty()) out.push_back(item);
  return out;
}

std::vector<int> parse_dims(const std::string& text) {
  std::vector<int> out;
  for (const auto& s : split(text)) {
    std::size_t used = 0;
    int d = 0;
    try {
      d = std::stoi(s, &used);
    } catch (const std::exception&) {
      used = 0;
    }
    if (used != s.size() || d < 2 || d % 2 != 0) throw UsageError("dimension '" + s + "' must be an even integer >= 2");
    out.push_back(d);
  }
  if (out.empty()) throw UsageError("no dimensions given");
  return out;
}

std::vector<Rational> parse_vector(const std::string& text) {
  std::vector<Rational> out;
  for (const auto& s : split(text)) out.push_back(parse_rational(s));
  return out;
}

// A zero mass turns the single branches into the massless model.
Variant effective_variant(Variant v, const Rational& mass) {
  if (sgn(mass) == 0 && (v == Variant::Single || v == Variant::SingleMinus)) return Variant::Massless;
  return v;
}

std::string format_matrix(const ExactMatrix& m, const std::string& indent = "  ") {
  std::vector<std::string> cells;
  std::size_t width = 1;
  for (const auto& z : m.entries()) {
    cells.push_back(z.to_string());
    width = std::max(width, cells.back().size());
  }
  std::ostringstream os;
  for (std::size_t r = 0; r < m.dim(); ++r) {
    os << indent << "[";
    for (std::size_t c = 0; c < m.dim(); ++c) {
      os << (c ? "  " : " ") << std::setw(static_cast<int>(width)) << cells[r * m.dim() + c];
    }
    os << " ]\n";
  }
  return os.str();
}

std::string cell_name(int d, Variant v) { return "P(1," + std::to_string(d) + ") " + to_string(v); }

void append_flags(std::ostringstream& os, const std::vector<claims::DiscrepancyFlag>& flags) {
  if (flags.empty()) return;
  os << "\nflags:\n";
  for (const auto& f : flags) os << "  [" << f.id << "] " << f.message << "\n";
}

// ---- gamma ------------------------------------------------------------------

struct GammaArgs {
  std::string dims = "2,4,6,8,10";
  std::string basis = "dirac";
  bool show = false;
};

Outcome run_gamma(const GammaArgs& a) {
  Outcome o;
  const auto dims = parse_dims(a.dims);
  const GammaBasis basis = parse_gamma_basis(a.basis);
  std::ostringstream os;
  Json systems = Json::array();
  for (int d : dims) {
    const GammaSystem gs = system_for(d, basis);
    const auto checks = check_relations(gs);
    const auto good = static_cast<std::size_t>(std::count_if(checks.begin(), checks.end(), [](auto& c) { return c.holds; }));
    const bool herm = hermiticity_holds(gs);
    os << "d=" << std::setw(2) << d << "  rep_dim=" << std::setw(3) << gs.rep_dim << "  relations " << good << "/"
       << checks.size() << (good == checks.size() ? " hold" : " FAIL") << "  hermiticity " << (herm ? "ok" : "FAIL")
       << "\n";
    if (a.show) {
      for (int mu = 0; mu <= d; ++mu) os << "  gamma" << mu << ":\n" << format_matrix(gs.gamma(mu), "    ");
    }
    Json gammas = Json::array();
    for (const auto& g : gs.gammas) gammas.push_back(to_json(g));
    systems.push_back({{"d", d},
                       {"rep_dim", gs.rep_dim},
                       {"relations_hold", good == checks.size()},
                       {"relation_count", checks.size()},
                       {"hermiticity", herm},
                       {"gammas", std::move(gammas)}});
    if (good != checks.size()) o.mismatches.push_back("Clifford relations fail for d=" + std::to_string(d));
    if (!herm) o.mismatches.push_back("gamma hermiticity fails for d=" + std::to_string(d));
  }
  std::vector<std::pair<int, Variant>> cells;
  for (int d : dims) cells.emplace_back(d, Variant::Massless);
  auto flags = claims::flags_for(cells, basis, {"none"});
  append_flags(os, flags);
  o.text = os.str();
  o.certificate = make_certificate("gamma", {{"dims", dims}, {"basis", to_string(basis)}},
                                   {{"systems", std::move(systems)}}, std::move(flags));
  return o;
}

// ---- solve-tau --------------------------------------------------------------

struct SolveArgs {
  int dim = 4;
  std::string variant = "single";
  std::string mass = "1";
  std::string symmetry;
  std::string ansatz = "full";
  std::string basis = "dirac";
};

Outcome run_solve(const SolveArgs& a) {
  Outcome o;
  if (a.dim < 2 || a.dim % 2) throw UsageError("--dim must be an even integer >= 2");
  const Rational mass = parse_rational(a.mass);
  if (sgn(mass) < 0) throw UsageError("--mass must be nonnegative");
  const Variant variant = effective_variant(parse_variant(a.variant), mass);
  const GammaBasis basis = parse_gamma_basis(a.basis);
  const SymmetryCandidate cand = candidates::builtin(a.symmetry);
  SolveOptions opts;
  opts.ansatz = Ansatz::parse(a.ansatz);
  const DiracModel model = build_model(a.dim, variant, mass, basis);
  const TauSolution sol = solve_tau(model, cand, opts);

  std::ostringstream os;
  os << cell_name(a.dim, variant) << ", kappa=" << to_string(model.mass) << ", basis " << to_string(basis)
     << ", ansatz " << opts.ansatz.to_string() << "\n";
  os << "candidate " << cand.name << " (" << (cand.antilinear ? "antilinear" : "linear") << ", t->"
     << (cand.t_sign > 0 ? "+t" : "-t") << ", x->" << (cand.x_sign > 0 ? "+x" : "-x") << ")  "
     << cand.signature.to_string() << "\n";
  os << "status: " << to_string(sol.status) << "  solution dim: " << sol.dim() << "\n";
  for (const auto& why : sol.inconsistencies) os << "  inconsistent: " << why << "\n";
  if (sol.representative) os << "representative:\n" << format_matrix(*sol.representative);
  if (sol.square_phase) os << "square phase: " << sol.square_phase->to_string() << "\n";

  Json checks = Json::array();
  for (const auto& claim : claims::existence_claims()) {
    if (claim.d != a.dim || claim.variant != variant || claim.candidate != cand.name) continue;
    const bool ok = claim.exists == sol.exists();
    os << "claim: " << cand.name << (claim.exists ? " invariant" : " noninvariant") << "  "
       << (ok ? "ok" : "MISMATCH") << "\n";
    checks.push_back({{"claim", claim.exists ? "invariant" : "noninvariant"}, {"holds", ok}});
    if (!ok) {
      o.mismatches.push_back(claims::Mismatch{a.dim, variant, cand.name, claim.exists, sol.exists()}.describe());
    }
  }
  if (const auto mc = claims::matrix_claim(model, variant, cand.name)) {
    bool ok = false;
    std::string detail;
    if (mc->kind == claims::MatrixClaimKind::Representative) {
      ok = sol.representative && projectively_equal(*sol.representative, mc->matrix);
      detail = "representative projectively equal to " + mc->formula;
    } else {
      ok = satisfies(assemble_constraints(model, cand), mc->matrix) && is_invertible(mc->matrix);
      detail = mc->formula + " satisfies every constraint and is invertible";
    }
    os << "claim: " << detail << "  " << (ok ? "ok" : "MISMATCH") << "\n";
    checks.push_back({{"claim", detail}, {"holds", ok}, {"matrix", to_json(mc->matrix)}});
    if (!ok) {
      std::ostringstream m;
      m << cell_name(a.dim, variant) << " " << cand.name << ": claimed " << mc->formula << " =\n"
        << format_matrix(mc->matrix, "    ") << "  engine representative ";
      if (sol.representative) {
        m << "=\n" << format_matrix(*sol.representative, "    ");
      } else {
        m << "none (status " << to_string(sol.status) << ")";
      }
      o.mismatches.push_back(m.str());
    }
  }
  auto flags = claims::flags_for({{a.dim, variant}}, basis, {cand.name});
  append_flags(os, flags);
  o.text = os.str();
  o.certificate = make_certificate("solve-tau",
                                   {{"d", a.dim},
                                    {"variant", to_string(variant)},
                                    {"mass", to_json(mass)},
                                    {"candidate", cand.name},
                                    {"ansatz", opts.ansatz.to_string()},
                                    {"basis", to_string(basis)}},
                                   {{"solution", to_json(sol)}, {"claims", std::move(checks)}}, std::move(flags));
  return o;
}

// ---- classify ---------------------------------------------------------------

struct ClassifyArgs {
  std::string dims = "2,4,6,8";
  std::string variants = "single";
  std::string expect;
  std::string candidates;
  std::string mass = "1";
  std::string basis = "dirac";
};

std::string classification_table(const std::vector<ClassificationRecord>& records,
                                 const std::vector<std::string>& columns) {
  std::ostringstream os;
  os << std::left << std::setw(8) << "P(1,d)" << std::setw(10) << "variant";
  for (const auto& c : columns) os << std::setw(6) << c;
  os << "\n";
  for (const auto& r : records) {
    os << std::setw(8) << r.d << std::setw(10) << to_string(r.variant);
    for (const auto& c : columns) {
      const CandidateVerdict* v = r.find(c);
      os << std::setw(6) << (v ? (v->exists() ? "yes" : "no") : "-");
    }
    os << "\n";
  }
  return os.str();
}

Outcome run_classify(const ClassifyArgs& a, const Globals& g) {
  Outcome o;
  const auto dims = parse_dims(a.dims);
  const Rational mass = parse_rational(a.mass);
  if (sgn(mass) <= 0) throw UsageError("classify needs a positive --mass; use --variants massless for kappa = 0");
  std::vector<Variant> variants;
  for (const auto& v : split(a.variants)) variants.push_back(parse_variant(v));
  if (variants.empty()) throw UsageError("no variants given");
  ClassifyOptions opts;
  opts.basis = parse_gamma_basis(a.basis);
  opts.mass = mass;
  opts.jobs = std::max(1u, g.jobs);
  if (!a.candidates.empty()) {
    opts.candidates = split(a.candidates);
    for (const auto& c : opts.candidates) candidates::builtin(c);
  }
  const auto expectations = claims::parse_expectations(a.expect);
  const auto records = classify(dims, variants, opts);

  std::ostringstream os;
  os << classification_table(records, opts.candidates);
  for (const auto& m : claims::check_existence(records, expectations)) o.mismatches.push_back(m.describe());
  for (const auto& r : records) {
    for (const auto& v : r.verdicts) {
      if (v.composition_verified && !*v.composition_verified) {
        o.mismatches.push_back(cell_name(r.d, r.variant) + " " + v.candidate +
                               ": composing the factor intertwiners does not give an invertible intertwiner");
      }
    }
  }
  std::vector<std::pair<int, Variant>> cells;
  for (const auto& r : records) cells.emplace_back(r.d, r.variant);
  auto flags = claims::flags_for(cells, opts.basis, opts.candidates);
  append_flags(os, flags);

  Json recs = Json::array();
  for (const auto& r : records) recs.push_back(to_json(r));
  Json expect = Json::array();
  for (const auto& e : expectations) expect.push_back(e.candidate + (e.exists ? ":yes" : ":no"));
  Json variant_names = Json::array();
  for (auto v : variants) variant_names.push_back(to_string(v));
  o.text = os.str();
  o.certificate = make_certificate("classify",
                                   {{"dims", dims},
                                    {"variants", std::move(variant_names)},
                                    {"mass", to_json(mass)},
                                    {"basis", to_string(opts.basis)},
                                    {"candidates", opts.candidates},
                                    {"ansatz", "full"},
                                    {"expect", std::move(expect)}},
                                   {{"records", std::move(recs)}}, std::move(flags));
  return o;
}

// ---- spectrum ---------------------------------------------------------------

struct SpectrumArgs {
  int dim = 4;
  std::string variant = "single";
  std::string mass = "1";
  std::string p;
  int random = 0;
  std::string basis = "dirac";
};

std::vector<Rational> random_momentum(int d, std::mt19937_64& rng) {
  std::uniform_int_distribution<long> num(-20, 20), den(1, 9);
  std::vector<Rational> p;
  for (int k = 0; k < d; ++k) p.push_back(make_rational(num(rng), den(rng)));
  return p;
}

std::string vector_string(const std::vector<Rational>& p) {
  std::string s = "(";
  for (std::size_t i = 0; i < p.size(); ++i) s += (i ? "," : "") + to_string(p[i]);
  return s + ")";
}

Outcome run_spectrum(const SpectrumArgs& a, const Globals& g) {
  Outcome o;
  if (a.dim < 2 || a.dim % 2) throw UsageError("--dim must be an even integer >= 2");
  const Rational mass = parse_rational(a.mass);
  if (sgn(mass) < 0) throw UsageError("--mass must be nonnegative");
  const Variant variant = effective_variant(parse_variant(a.variant), mass);
  const GammaBasis basis = parse_gamma_basis(a.basis);
  const DiracModel model = build_model(a.dim, variant, mass, basis);

  std::vector<std::vector<Rational>> momenta;
  if (!a.p.empty()) {
    momenta.push_back(parse_vector(a.p));
    if (static_cast<int>(momenta.back().size()) != a.dim) {
      throw UsageError("--p needs " + std::to_string(a.dim) + " components");
    }
  }
  if (a.random < 0) throw UsageError("--random must be nonnegative");
  std::mt19937_64 rng(g.seed);
  for (int i = 0; i < a.random; ++i) momenta.push_back(random_momentum(a.dim, rng));
  if (momenta.empty()) momenta.push_back(std::vector<Rational>(static_cast<std::size_t>(a.dim), Rational(0)));

  std::ostringstream os;
  os << cell_name(a.dim, variant) << ", kappa=" << to_string(model.mass) << ", rep_dim " << model.rep_dim() << "\n";
  Json proofs = Json::array();
  const bool verbose = momenta.size() <= 5;
  std::size_t held = 0;
  for (const auto& p : momenta) {
    const DispersionProof proof = dispersion_check(model, p);
    if (proof.holds()) ++held;
    if (verbose) {
      os << "p = " << vector_string(p) << "\n"
         << "  H(p)^2 == " << to_string(proof.omega2) << " I : " << (proof.square_is_scalar ? "yes" : "NO") << "\n"
         << "  tr H(p) == 0 : " << (proof.traceless ? "yes" : "NO") << "\n";
      if (proof.holds()) {
        os << "  omega^2 = kappa^2 + |p|^2 = " << to_string(proof.omega2) << "; eigenvalues +-sqrt("
           << to_string(proof.omega2) << "), multiplicity " << proof.multiplicity << " each\n";
      }
    }
    if (!proof.holds()) {
      o.mismatches.push_back(cell_name(a.dim, variant) + " p=" + vector_string(p) +
                             ": claimed H(p)^2 = " + to_string(proof.omega2) + " I with tr H = 0, engine found " +
                             (proof.square_is_scalar ? "" : "non-scalar square ") +
                             (proof.traceless ? "" : "nonzero trace"));
    }
    proofs.push_back(to_json(proof));
  }
  if (!verbose) os << held << "/" << momenta.size() << " momenta: H(p)^2 == omega^2 I and tr H(p) == 0 exactly\n";
  o.text = os.str();
  o.certificate = make_certificate("spectrum",
                                   {{"d", a.dim},
                                    {"variant", to_string(variant)},
                                    {"mass", to_json(mass)},
                                    {"basis", to_string(basis)},
                                    {"p", a.p},
                                    {"random", a.random},
                                    {"seed", a.random > 0 ? Json(g.seed) : Json(nullptr)}},
                                   {{"dispersion", std::move(proofs)}}, {});
  return o;
}

// ---- labels -----------------------------------------------------------------

struct LabelsArgs {
  int dim = 4;
  std::string variant = "single";
  std::string mass = "1";
  std::string basis = "dirac";
};

std::string labels_string(const std::vector<RepLabel>& labels) {
  std::string s;
  for (std::size_t i = 0; i < labels.size(); ++i) s += (i ? " + " : "") + labels[i].to_string();
  return s.empty() ? "(none)" : s;
}

Outcome run_labels(const LabelsArgs& a) {
  Outcome o;
  const Rational mass = parse_rational(a.mass);
  const Variant variant = parse_variant(a.variant);
  if (a.dim != 4) throw UsageError("labels is implemented for --dim 4 only");
  if (sgn(mass) <= 0 || variant == Variant::Massless) throw UsageError("labels needs a positive mass");
  const GammaBasis basis = parse_gamma_basis(a.basis);
  const DiracModel model = build_model(a.dim, variant, mass, basis);
  const auto labels = claims::sorted_labels(little_group_labels(model));
  const auto expected = claims::expected_labels(variant);

  std::ostringstream os;
  os << cell_name(a.dim, variant) << ", kappa=" << to_string(mass) << ", rest frame\n";
  int total = 0;
  for (const auto& l : labels) {
    os << "  " << l.to_string() << "  energy " << (l.energy_sign > 0 ? "+" : "-") << "  j1=" << to_string(l.j1)
       << " j2=" << to_string(l.j2) << "  multiplicity " << l.multiplicity << "\n";
    total += l.multiplicity * static_cast<int>(Rational((2 * l.j1 + 1) * (2 * l.j2 + 1)).get_num().get_si());
  }
  os << "  dimension count " << total << " / rep_dim " << model.rep_dim() << "\n";
  const bool ok = labels == expected;
  os << "claim: " << labels_string(expected) << "  " << (ok ? "ok" : "MISMATCH") << "\n";
  if (!ok) {
    o.mismatches.push_back(cell_name(a.dim, variant) + " labels: claimed " + labels_string(expected) +
                           ", engine found " + labels_string(labels));
  }
  if (total != static_cast<int>(model.rep_dim())) o.mismatches.push_back("label multiplicities do not sum to rep_dim");
  Json lj = Json::array();
  for (const auto& l : labels) lj.push_back(to_json(l));
  o.text = os.str();
  o.certificate = make_certificate(
      "labels", {{"d", a.dim}, {"variant", to_string(variant)}, {"mass", to_json(mass)}, {"basis", to_string(basis)}},
      {{"labels", std::move(lj)}, {"claim_holds", ok}}, {});
  return o;
}

// ---- report -----------------------------------------------------------------

Outcome run_report(const std::vector<std::string>& files) {
  Outcome o;
  std::vector<ClassificationRecord> records;
  std::vector<claims::DiscrepancyFlag> flags;
  std::vector<std::string> other;
  for (const auto& path : files) {
    std::ifstream in(path);
    if (!in) throw UsageError("cannot read " + path);
    std::stringstream buf;
    buf << in.rdbuf();
    Certificate c;
    try {
      c = parse_certificate(buf.str());
    } catch (const SchemaError& e) {
      throw UsageError(path + ": " + e.what());
    } catch (const std::invalid_argument& e) {
      throw UsageError(path + ": " + e.what());
    }
    if (compute_content_hash(c) != c.content_hash) throw UsageError(path + ": content hash does not match");
    if (c.results.contains("records")) {
      for (const auto& r : c.results["records"]) records.push_back(record_from_json(r));
    } else {
      other.push_back(c.command + "  " + path);
    }
    for (const auto& f : c.flags)
      if (std::find(flags.begin(), flags.end(), f) == flags.end()) flags.push_back(f);
  }
  // Variant order follows the enum; ties keep file order.
  std::stable_sort(records.begin(), records.end(), [](const auto& x, const auto& y) {
    return std::pair(x.d, static_cast<int>(x.variant)) < std::pair(y.d, static_cast<int>(y.variant));
  });
  std::vector<std::string> columns = candidates::classification_names();
  for (const auto& r : records)
    for (const auto& v : r.verdicts)
      if (std::find(columns.begin(), columns.end(), v.candidate) == columns.end()) columns.push_back(v.candidate);

  std::ostringstream os;
  if (!records.empty()) os << classification_table(records, columns);
  if (!other.empty()) {
    os << (records.empty() ? "" : "\n") << "other certificates:\n";
    for (const auto& line : other) os << "  " << line << "\n";
  }
  append_flags(os, flags);
  o.text = os.str();
  Json rows = Json::array();
  for (const auto& r : records) {
    Json row{{"d", r.d}, {"variant", to_string(r.variant)}};
    for (const auto& c : columns)
      if (const auto* v = r.find(c)) row[c] = v->exists();
    rows.push_back(std::move(row));
  }
  o.certificate = make_certificate("report", {{"files", files}}, {{"rows", std::move(rows)}, {"columns", columns}},
                                   std::move(flags));
  return o;
}

void add_common(CLI::App* cmd, std::string& variant, std::string& mass, std::string& basis) {
  cmd->add_option("--variant", variant, "single, single-, doubled or massless")->capture_default_str();
  cmd->add_option("--mass", mass, "kappa as a rational, e.g. 3 or 1/2")->capture_default_str();
  cmd->add_option("--basis", basis, "gamma basis: dirac or recursive")->capture_default_str();
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact discrete-symmetry audit of Dirac-type equations in 1+d dimensions", "diracsym"};
  app.set_version_flag("--version", toolkit_version());
  app.require_subcommand(1);
  app.fallthrough();

  Globals g;
  app.add_option("--out", g.out_path, "write the JSON certificate to PATH");
  app.add_flag("--json", g.json, "print the JSON certificate instead of the human summary");
  app.add_option("--jobs", g.jobs, "worker threads for classification")->check(CLI::PositiveNumber);
  app.add_option("--seed", g.seed, "seed for random-momentum suites");

  GammaArgs ga;
  auto* gamma = app.add_subcommand("gamma", "build gamma matrices and check the Clifford relations");
  gamma->add_option("--dims", ga.dims, "comma-separated even dimensions")->capture_default_str();
  gamma->add_option("--basis", ga.basis, "dirac or recursive")->capture_default_str();
  gamma->add_flag("--show", ga.show, "print the matrices");

  SolveArgs sa;
  auto* solve = app.add_subcommand("solve-tau", "solve for the intertwiner of one symmetry candidate");
  solve->add_option("--dim", sa.dim, "spatial dimension d")->capture_default_str();
  add_common(solve, sa.variant, sa.mass, sa.basis);
  solve->add_option("--symmetry", sa.symmetry, "P, Tp, Tp-literal, Tw, C, TpC, TwC or PTC")->required();
  solve->add_option("--ansatz", sa.ansatz, "full or clifford<k>")->capture_default_str();

  ClassifyArgs ca;
  auto* cls = app.add_subcommand("classify", "classify every candidate over dimensions and variants");
  cls->add_option("--dims", ca.dims, "comma-separated even dimensions")->capture_default_str();
  cls->add_option("--variants", ca.variants, "comma-separated variants")->capture_default_str();
  cls->add_option("--expect", ca.expect, "extra expectations, e.g. Tw:no,C:yes");
  cls->add_option("--candidates", ca.candidates, "comma-separated candidate names");
  cls->add_option("--mass", ca.mass, "kappa for the massive variants")->capture_default_str();
  cls->add_option("--basis", ca.basis, "dirac or recursive")->capture_default_str();

  SpectrumArgs pa;
  auto* spec = app.add_subcommand("spectrum", "exact dispersion proof for H(p)");
  spec->add_option("--dim", pa.dim, "spatial dimension d")->capture_default_str();
  add_common(spec, pa.variant, pa.mass, pa.basis);
  spec->add_option("--p", pa.p, "momentum, comma-separated rationals");
  spec->add_option("--random", pa.random, "also check N random rational momenta (see --seed)");

  LabelsArgs la;
  auto* lab = app.add_subcommand("labels", "rest-frame little-group labels D^(j1,j2)");
  lab->add_option("--dim", la.dim, "spatial dimension (4)")->capture_default_str();
  add_common(lab, la.variant, la.mass, la.basis);

  std::vector<std::string> files;
  auto* rep = app.add_subcommand("report", "summarize certificate files");
  rep->add_option("files", files, "certificate files")->required()->check(CLI::ExistingFile);

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << (app.get_subcommands().empty() ? app.help() : app.get_subcommands().front()->help());
    return kOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kOk;
  } catch (const CLI::CallForVersion&) {
    out << toolkit_version() << "\n";
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\nrun with --help for usage\n";
    return kUsage;
  }

  Outcome o;
  try {
    if (gamma->parsed()) {
      o = run_gamma(ga);
    } else if (solve->parsed()) {
      o = run_solve(sa);
    } else if (cls->parsed()) {
      o = run_classify(ca, g);
    } else if (spec->parsed()) {
      o = run_spectrum(pa, g);
    } else if (lab->parsed()) {
      o = run_labels(la);
    } else {
      o = run_report(files);
    }
  } catch (const UsageError& e) {
    err << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const std::domain_error& e) {
    err << "error: " << e.what() << "\n";
    return kUsage;
  }

  const std::string text = emit(o.certificate);
  if (!g.out_path.empty()) {
    std::ofstream f(g.out_path, std::ios::binary);
    if (!(f << text)) {
      err << "error: cannot write " << g.out_path << "\n";
      return kUsage;
    }
  }
  out << (g.json ? text : o.text);
  if (!o.mismatches.empty()) {
    for (const auto& m : o.mismatches) err << "MISMATCH " << m << "\n";
    return kMismatch;
  }
  return kOk;
}

}  // namespace diracsym::cli
