#include "flagcx/report.hpp"

namespace flagcx {

Json to_json(const Rational& q) { return to_string(q); }

Json to_json(const GQ& z) { return Json{{"re", to_string(z.re)}, {"im", to_string(z.im)}}; }

Json to_json(const QMatrix& m) {
  Json rows = Json::array();
  for (std::size_t r = 0; r < m.rows(); ++r) {
    Json row = Json::array();
    for (std::size_t c = 0; c < m.cols(); ++c) row.push_back(to_string(m(r, c)));
    rows.push_back(std::move(row));
  }
  return rows;
}

Json root_json(const LieType& t, const Root& r) { return format_root(t, r); }

Json flag_json(const FlagSpec& fs) {
  const LieType& t = fs.root_system().lie_type();
  Json theta = Json::array();
  Json idx = Json::array();
  for (int i : fs.theta()) {
    theta.push_back(root_json(t, fs.root_system().simple_root(i)));
    idx.push_back(i + 1);
  }
  return Json{{"type", t.name()}, {"rank", t.rank}, {"theta", theta}, {"theta_indices", idx},
              {"maximal", fs.is_maximal()}};
}

Json class_json(const LieType& t, const MClass& c) {
  Json members = Json::array();
  for (const auto& r : c.members) members.push_back(root_json(t, r));
  return Json{{"representative", root_json(t, c.representative)}, {"size", c.members.size()}, {"members", members}};
}

Json existence_json(const ExistenceReport& e) {
  const LieType& t = e.flag.root_system().lie_type();
  Json classes = Json::array();
  for (const auto& c : e.classes) classes.push_back(class_json(t, c));
  return Json{{"complement_size", complement_indices(e.flag).size()},
              {"classes", classes},
              {"admits_gacs", e.admits_gacs},
              {"gm2", e.gm2}};
}

Json gvector_json(const GVector& v) {
  const TangentModel& model = v.model();
  const LieType& t = model.root_system().lie_type();
  Json terms = Json::array();
  for (const auto& [key, coeff] : v.terms()) {
    Symbol s = Symbol::from_key(key);
    terms.push_back(Json{{"root", root_json(t, model.root(s.pos))}, {"dual", s.dual}, {"coeff", to_json(coeff)}});
  }
  return terms;
}

Json block_json(const GcsBlock& b) {
  Json j{{"kind", kind_name(kind_of(b))}};
  if (const auto* c = std::get_if<ComplexType>(&b)) {
    j["b"] = to_json(c->b);
    j["c"] = to_json(c->c);
  } else if (const auto* n = std::get_if<NonComplexType>(&b)) {
    j["a"] = to_json(n->a);
    j["x"] = to_json(n->x);
    j["y"] = to_json(n->y);
  } else {
    j["matrix"] = to_json(std::get<GeneralBlock>(b).matrix);
  }
  return j;
}

Json structure_json(const InvariantGacs& j) {
  const TangentModel& model = j.model();
  const LieType& t = model.root_system().lie_type();
  Json blocks = Json::array();
  for (std::size_t c = 0; c < j.blocks().size(); ++c) {
    Json b = block_json(j.blocks()[c]);
    Json roots = Json::array();
    for (int p : model.class_positions(static_cast<int>(c))) roots.push_back(root_json(t, model.root(p)));
    b["class"] = roots;
    blocks.push_back(std::move(b));
  }
  return Json{{"blocks", blocks}, {"type_k", structure_type(j)}};
}

Json witness_json(const Witness& w) {
  Json elements = Json::array();
  for (const auto& e : w.elements) elements.push_back(gvector_json(e));
  Json j{{"kind", w.kind == WitnessKind::PairNotInL ? "pair_not_in_L" : "nij_nonzero"}, {"elements", elements}};
  if (w.residual) j["bracket"] = gvector_json(*w.residual);
  if (w.value) j["nij"] = to_json(*w.value);
  return j;
}

Json bfield_json(const BField& b) {
  const TangentModel& model = b.model();
  const LieType& t = model.root_system().lie_type();
  Json terms = Json::array();
  for (const auto& [ij, r] : b.terms())
    terms.push_back(Json{{"roots", {root_json(t, model.root(ij.first)), root_json(t, model.root(ij.second))}},
                         {"coeff", to_json(r)}});
  return terms;
}

Json spinor_json(const TangentModel& model, const Spinor& s) {
  const LieType& t = model.root_system().lie_type();
  Json terms = Json::array();
  for (const auto& [mask, coeff] : s.terms()) {
    Json roots = Json::array();
    for (int p = 0; p < model.dim(); ++p)
      if (mask >> p & 1) roots.push_back(root_json(t, model.root(p)));
    terms.push_back(Json{{"dual_roots", roots}, {"coeff", to_json(coeff)}});
  }
  return terms;
}

Json make_report(const std::string& command, const FlagSpec& fs, Json payload, std::optional<std::uint64_t> seed) {
  Json r{{"schema_version", kSchemaVersion}, {"command", command}, {"flag", flag_json(fs)}};
  r["payload"] = std::move(payload);
  r["tool_version"] = kToolVersion;
  r["seed"] = seed ? Json(*seed) : Json(nullptr);
  return r;
}

}  // namespace flagcx
