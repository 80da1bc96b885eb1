#include "flagcx/cli.hpp"

#include <fstream>
#include <optional>

#include "CLI11.hpp"

#include "flagcx/btransform.hpp"
#include "flagcx/errors.hpp"
#include "flagcx/report.hpp"
#include "flagcx/sweep.hpp"

namespace flagcx {

namespace {

struct Token {
  std::string text;
  int column;  // 1-based
};

std::vector<Token> split(std::string_view text, char sep, int offset = 0) {
  std::vector<Token> out;
  std::size_t start = 0;
  for (std::size_t i = 0; i <= text.size(); ++i) {
    if (i == text.size() || text[i] == sep) {
      std::string_view piece = text.substr(start, i - start);
      std::size_t lead = 0;
      while (lead < piece.size() && piece[lead] == ' ') ++lead;
      std::size_t end = piece.size();
      while (end > lead && piece[end - 1] == ' ') --end;
      out.push_back({std::string(piece.substr(lead, end - lead)), offset + static_cast<int>(start + lead) + 1});
      start = i + 1;
    }
  }
  return out;
}

std::optional<BlockKind> kind_token(const std::string& t) {
  if (t == "c" || t == "complex") return BlockKind::Complex;
  if (t == "nc" || t == "noncomplex") return BlockKind::NonComplex;
  if (t == "g" || t == "general") return BlockKind::General;
  return std::nullopt;
}

}  // namespace

Combination parse_combination(const TangentModel& model, std::string_view text) {
  const auto tokens = split(text, ',');
  const std::size_t n = model.classes().size();
  if (tokens.size() != n)
    throw ParseError("combination has " + std::to_string(tokens.size()) + " entries but the flag has " +
                         std::to_string(n) + " M-classes",
                     1, 1);
  Combination combo;
  for (std::size_t c = 0; c < n; ++c) {
    auto k = kind_token(tokens[c].text);
    if (!k) throw ParseError("unknown block kind '" + tokens[c].text + "' (expected c, nc or g)", 1, tokens[c].column);
    if (*k != BlockKind::General && model.classes()[c].members.size() != 2)
      throw ParseError("class " + std::to_string(c) + " has " + std::to_string(model.classes()[c].members.size()) +
                           " roots; only g fits",
                       1, tokens[c].column);
    combo.push_back(*k);
  }
  return combo;
}

std::vector<GcsBlock> parse_blocks(const TangentModel& model, std::string_view text) {
  const auto entries = split(text, ';');
  const std::size_t n = model.classes().size();
  if (entries.size() != n)
    throw ParseError("blocks list has " + std::to_string(entries.size()) + " entries but the flag has " +
                         std::to_string(n) + " M-classes",
                     1, 1);
  std::vector<GcsBlock> blocks;
  for (const auto& e : entries) {
    const auto f = split(e.text, ':', e.column - 1);
    auto num = [&](std::size_t i) { return parse_rational(f[i].text, f[i].column); };
    const std::string& kind = f[0].text;
    if ((kind == "c" || kind == "complex") && f.size() == 3) {
      blocks.emplace_back(ComplexType{num(1), num(2)});
    } else if ((kind == "nc" || kind == "noncomplex") && (f.size() == 3 || f.size() == 4)) {
      NonComplexType b = make_noncomplex(num(1), num(2));
      if (f.size() == 4) b.y = num(3);
      blocks.emplace_back(b);
    } else if ((kind == "sym" || kind == "symplectic") && f.size() == 2) {
      blocks.emplace_back(symplectic_block(num(1)));
    } else {
      throw ParseError("block entry '" + e.text + "' is not c:b:c, nc:a:x[:y] or sym:x", 1, e.column);
    }
  }
  return blocks;
}

namespace {

struct Common {
  std::string type;
  int rank = 0;
  std::string theta;
  std::string format = "json";
  std::string out;
  std::uint64_t seed = 0;
};

void add_common(CLI::App* app, Common& c) {
  app->add_option("type,--type", c.type, "Lie type family: A, B, C, D or G")->required();
  app->add_option("rank,--rank", c.rank, "Rank")->required();
  app->add_option("theta,--theta", c.theta, "Θ as simple roots (λ-notation or 1-based indices), 'all' or empty");
  app->add_option("--format", c.format, "Output format")->check(CLI::IsMember({"json"}));
  app->add_option("--out", c.out, "Write the report to a file");
  app->add_option("--seed", c.seed, "PRNG seed");
}

FlagSpec load_flag(const Common& c) {
  auto rs = build_root_system(LieType::parse(c.type, c.rank));
  return FlagSpec(rs, parse_theta(rs->lie_type(), c.theta));
}

void emit(const Common& c, const Json& report, std::ostream& out) {
  const std::string text = report.dump(2) + "\n";
  if (c.out.empty()) {
    out << text;
    return;
  }
  std::ofstream f(c.out);
  if (!f) throw ParseError("cannot open output file '" + c.out + "'", 1, 1);
  f << text;
}

std::shared_ptr<const TangentModel> admitting_model(const FlagSpec& fs, const char* cmd) {
  if (!fs.is_maximal()) throw Unsupported(std::string(cmd) + " needs a maximal flag (empty theta)");
  auto model = build_tangent_model(fs);
  if (!decide_existence(fs).admits_gacs)
    throw Unsupported(fs.root_system().lie_type().name() + " admits no invariant generalized almost complex structure");
  return model;
}

Json kinds_json(const Combination& combo) {
  Json j = Json::array();
  for (auto k : combo) j.push_back(kind_name(k));
  return j;
}

InvariantGacs structure_from(const std::shared_ptr<const TangentModel>& model, const std::string& blocks,
                             const std::string& combination, std::uint64_t seed, std::uint64_t stream) {
  if (!blocks.empty()) return InvariantGacs(model, parse_blocks(*model, blocks));
  Rng rng = Rng::stream(seed, stream, 0);
  Combination combo = combination.empty() ? random_combination(*model, rng) : parse_combination(*model, combination);
  return random_structure(model, combo, rng);
}

int cmd_classify(const Common& c, std::ostream& out) {
  FlagSpec fs = load_flag(c);
  emit(c, make_report("classify", fs, existence_json(decide_existence(fs)), std::nullopt), out);
  return kExitOk;
}

struct CertifyArgs {
  std::string combination;
  bool all = false;
  bool random = false;
  int samples = 100;
};

int cmd_certify(const Common& c, const CertifyArgs& a, std::ostream& out, std::ostream& err) {
  FlagSpec fs = load_flag(c);
  auto model = admitting_model(fs, "certify");
  if (a.samples < 1) throw ParseError("--samples must be positive", 1, 1);
  CertifyPlan plan{model, {}, false, a.samples, c.seed, true};
  if (a.all) plan.combinations = all_combinations(*model);
  else if (!a.combination.empty()) plan.combinations = {parse_combination(*model, a.combination)};
  else plan.random_per_sample = true;

  const bool theorem = in_theorem_scope(fs);
  const auto outcomes = certify_parallel(plan);
  const CertifySummary s = summarize(outcomes);

  Json verdicts = Json::array();
  for (const auto& o : outcomes) {
    Json v{{"combination", kinds_json(o.combo)}, {"sample", o.sample}, {"structure", structure_json(*o.structure)}};
    v["verdict"] = o.integrable ? "Integrable" : "NotIntegrable";
    if (o.witness) {
      v["witness"] = witness_json(*o.witness);
      v["witness_reverified"] = o.reverified;
    }
    verdicts.push_back(std::move(v));
  }
  Json payload{{"mode", theorem ? "theorem" : "exploratory"},
               {"sampling", plan.random_per_sample ? "random" : (a.all ? "all-combinations" : "combination")},
               {"samples_per_combination", a.samples},
               {"summary",
                {{"total", s.total},
                 {"not_integrable", s.not_integrable},
                 {"integrable", s.integrable},
                 {"unverified_witnesses", s.unverified}}},
               {"verdicts", verdicts}};
  emit(c, make_report("certify", fs, std::move(payload), c.seed), out);
  if (s.unverified > 0) {
    err << "error: " << s.unverified << " witness(es) failed re-verification\n";
    return kExitInvariant;
  }
  if (theorem && s.integrable > 0) {
    err << "error: " << s.integrable << " integrable structure(s) on a flag covered by the theorem\n";
    return kExitTheorem;
  }
  return kExitOk;
}

struct StructureArgs {
  std::string blocks;
  std::string combination;
  std::string partner;
};

int cmd_moduli(const Common& c, const StructureArgs& a, std::ostream& out) {
  FlagSpec fs = load_flag(c);
  auto model = admitting_model(fs, "moduli");
  require_two_dim_classes(*model, "moduli");
  InvariantGacs j = structure_from(model, a.blocks, a.combination, c.seed, 0);
  auto [j0, b] = canonical_form(j);
  const bool round_trip = apply_b(j0, b).full_matrix() == j.full_matrix();
  if (!round_trip) throw InvariantViolation("canonical form does not reproduce the structure");
  Json coords = Json::array();
  const auto mc = moduli_coordinates(j);
  for (std::size_t i = 0; i < mc.size(); ++i) {
    Json e{{"class", structure_json(j)["blocks"][i]["class"]}};
    if (const auto* s = std::get_if<SymplecticCoord>(&mc[i])) {
      e["kind"] = "symplectic";
      e["x"] = to_json(s->x);
    } else {
      const auto& cc = std::get<ComplexCoord>(mc[i]);
      e["kind"] = "complex";
      e["c"] = to_json(cc.c);
      e["b"] = to_json(cc.b);
    }
    coords.push_back(std::move(e));
  }
  Json payload{{"structure", structure_json(j)},
               {"coordinates", coords},
               {"canonical", {{"structure", structure_json(j0)}, {"b_field", bfield_json(b)}, {"round_trip", round_trip}}}};
  emit(c, make_report("moduli", fs, std::move(payload), a.blocks.empty() ? std::optional(c.seed) : std::nullopt), out);
  return kExitOk;
}

int cmd_spinor(const Common& c, const StructureArgs& a, std::ostream& out) {
  FlagSpec fs = load_flag(c);
  auto model = admitting_model(fs, "spinor");
  require_two_dim_classes(*model, "spinor");
  InvariantGacs j = structure_from(model, a.blocks, a.combination, c.seed, 0);
  Spinor phi = pure_spinor(j);
  bool annihilated = true;
  for (const auto& v : plus_i_eigenspace(j)) annihilated = annihilated && clifford_act(v, phi).is_zero();
  const int ann = annihilator_dimension(*model, phi);
  if (!annihilated || ann != model->dim()) throw InvariantViolation("pure spinor does not annihilate L");
  Json payload{{"structure", structure_json(j)},
               {"terms", spinor_json(*model, phi)},
               {"max_degree", phi.max_degree()},
               {"annihilator_dimension", ann},
               {"L_annihilates", annihilated}};
  emit(c, make_report("spinor", fs, std::move(payload), a.blocks.empty() ? std::optional(c.seed) : std::nullopt), out);
  return kExitOk;
}

int cmd_hermitian(const Common& c, const StructureArgs& a, std::ostream& out) {
  FlagSpec fs = load_flag(c);
  auto model = admitting_model(fs, "hermitian");
  require_two_dim_classes(*model, "hermitian");
  if (a.blocks.empty() != a.partner.empty()) throw ParseError("--blocks and --partner go together", 1, 1);
  std::optional<InvariantGacs> j, j2;
  if (!a.blocks.empty()) {
    j.emplace(model, parse_blocks(*model, a.blocks));
    j2.emplace(model, parse_blocks(*model, a.partner));
  } else {
    Combination cs(model->classes().size(), BlockKind::Complex);
    Combination ncs(model->classes().size(), BlockKind::NonComplex);
    Rng rng = Rng::stream(c.seed, 1, 0);
    j.emplace(random_structure(model, cs, rng));
    j2.emplace(random_structure(model, ncs, rng));
  }
  Json payload{{"structure", structure_json(*j)}, {"partner", structure_json(*j2)}};
  HermitianVerdict v = hermitian_pair(*j, *j2);
  if (const auto* bad = std::get_if<HermitianInvalid>(&v)) {
    payload["verdict"] = "Invalid";
    payload["reason"] = bad->reason;
    payload["class_index"] = bad->class_index;
  } else {
    const auto& g = std::get<HermitianValid>(v).metric;
    MetricNormalForm nf = metric_normal_form(g);
    Json blocks = Json::array();
    for (std::size_t i = 0; i < model->classes().size(); ++i) {
      const auto& ps = model->class_positions(static_cast<int>(i));
      QMatrix gi(2, 2);
      for (int r = 0; r < 2; ++r)
        for (int col = 0; col < 2; ++col) gi(r, col) = nf.riemannian(ps[r], ps[col]);
      blocks.push_back({{"G", to_json(g.class_block(static_cast<int>(i)))}, {"g", to_json(gi)}});
    }
    payload["verdict"] = "Valid";
    payload["metric"] = blocks;
    payload["b_field"] = bfield_json(nf.b2);
  }
  Json factors = Json::array();
  for (const auto& f : metric_moduli(*model))
    factors.push_back({{"class", class_json(model->root_system().lie_type(), f.cls)},
                       {"chart", f.chart},
                       {"coordinates", f.coordinates},
                       {"constraint", f.constraint}});
  payload["metric_moduli"] = factors;
  emit(c, make_report("hermitian", fs, std::move(payload), a.blocks.empty() ? std::optional(c.seed) : std::nullopt), out);
  return kExitOk;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Invariant generalized complex structures on real flag manifolds", "flagcx"};
  app.require_subcommand(1);
  app.set_version_flag("--version", kToolVersion);

  Common c;
  CertifyArgs ca;
  StructureArgs sa;

  auto* classify = app.add_subcommand("classify", "M-classes and existence of invariant structures");
  add_common(classify, c);

  auto* certify = app.add_subcommand("certify", "Sample structures and certify non-integrability");
  add_common(certify, c);
  auto* combo = certify->add_option("--combination", ca.combination, "Block kinds per class, e.g. c,nc,nc");
  auto* all = certify->add_flag("--all-combinations", ca.all, "Every complex/noncomplex combination");
  auto* rnd = certify->add_flag("--random", ca.random, "A random combination per sample (default)");
  combo->excludes(all)->excludes(rnd);
  all->excludes(rnd);
  certify->add_option("--samples", ca.samples, "Samples per combination");

  auto* moduli = app.add_subcommand("moduli", "Moduli coordinates and B-transform normal form");
  auto* spinor = app.add_subcommand("spinor", "Invariant pure spinor");
  auto* hermitian = app.add_subcommand("hermitian", "Generalized Hermitian pair and metric");
  for (auto* sub : {moduli, spinor, hermitian}) {
    add_common(sub, c);
    auto* b = sub->add_option("--blocks", sa.blocks, "Per-class blocks: c:b:c;nc:a:x[:y];sym:x");
    if (sub == hermitian) {
      sub->add_option("--partner", sa.partner, "Blocks of the second structure");
    } else {
      sub->add_option("--combination", sa.combination, "Random structure with these block kinds")->excludes(b);
    }
  }

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    return app.exit(e, out, err) == 0 ? kExitOk : kExitUsage;
    return kExitUsage;
  }

  try {
    if (*classify) return cmd_classify(c, out);
    if (*certify) return cmd_certify(c, ca, out, err);
    if (*moduli) return cmd_moduli(c, sa, out);
    if (*spinor) return cmd_spinor(c, sa, out);
    if (*hermitian) return cmd_hermitian(c, sa, out);
  } catch (const ParseError& e) {
    err << "parse error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const Unsupported& e) {
    err << "unsupported: " << e.what() << "\n";
    return kExitUsage;
  } catch (const InvariantViolation& e) {
    err << "invariant violation: " << e.what() << "\n";
    return kExitInvariant;
  } catch (const std::invalid_argument& e) {
    err << "usage error: " << e.what() << "\n";
    return kExitUsage;
  }
  return kExitUsage;
}

}  // namespace flagcx
