#include "flagcx/courant.hpp"

#include "flagcx/errors.hpp"

namespace flagcx {

GVector courant_bracket(const GVector& u, const GVector& v) {
  u.check_same_model(v);
  const TangentModel& model = u.model();
  GVector out(model);
  for (const auto& [ku, a] : u.terms()) {
    const Symbol su = Symbol::from_key(ku);
    for (const auto& [kv, b] : v.terms()) {
      const Symbol sv = Symbol::from_key(kv);
      if (su.dual && sv.dual) continue;
      if (!su.dual && !sv.dual) {
        const auto& t = model.tangent_bracket(su.pos, sv.pos);
        if (t.target >= 0) out.add({t.target, false}, a * b * Rational(t.coeff));
      } else if (!su.dual) {
        const auto& t = model.coadjoint(su.pos, sv.pos);
        if (t.target >= 0) out.add({t.target, true}, a * b * Rational(t.coeff));
      } else {
        const auto& t = model.coadjoint(sv.pos, su.pos);
        if (t.target >= 0) out.add({t.target, true}, -(a * b * Rational(t.coeff)));
      }
    }
  }
  return out;
}

namespace {

// ξ([X,Y]) for ξ the dual part of a and X, Y the tangent parts of b, c.
GQ dual_on_bracket(const GVector& a, const GVector& b, const GVector& c) {
  const TangentModel& model = a.model();
  GQ acc;
  for (const auto& [kb, vb] : b.terms()) {
    const Symbol sb = Symbol::from_key(kb);
    if (sb.dual) continue;
    for (const auto& [kc, vc] : c.terms()) {
      const Symbol sc = Symbol::from_key(kc);
      if (sc.dual) continue;
      const auto& t = model.tangent_bracket(sb.pos, sc.pos);
      if (t.target < 0) continue;
      GQ xi = a.coeff({t.target, true});
      if (!xi.is_zero()) acc += xi * vb * vc * Rational(t.coeff);
    }
  }
  return acc;
}

}  // namespace

GQ nijenhuis_operator(const GVector& a, const GVector& b, const GVector& c) {
  a.check_same_model(b);
  a.check_same_model(c);
  GQ s = dual_on_bracket(a, b, c) + dual_on_bracket(b, c, a) + dual_on_bracket(c, a, b);
  return s * Rational(1, 2);
}

GVector nijenhuis_tensor(const InvariantGacs& j, const GVector& a, const GVector& b) {
  const GVector ja = j.apply(a), jb = j.apply(b);
  GVector n = courant_bracket(ja, jb);
  n -= courant_bracket(a, b);
  n -= j.apply(courant_bracket(a, jb));
  n -= j.apply(courant_bracket(ja, b));
  return n;
}

namespace {

std::optional<GVector> nij_partner(const std::vector<GVector>& basis, const GVector& u, const GVector& v,
                                   GQ& value) {
  for (const auto& w : basis) {
    GQ n = nijenhuis_operator(u, v, w);
    if (!n.is_zero()) {
      value = n;
      return w;
    }
  }
  return std::nullopt;
}

}  // namespace

IntegrabilityVerdict check_integrability(const InvariantGacs& j) { return check_integrability(Eigenspace(j)); }

IntegrabilityVerdict check_integrability(const Eigenspace& l) {
  const auto& basis = l.basis();
  for (std::size_t p = 0; p < basis.size(); ++p)
    for (std::size_t q = p + 1; q < basis.size(); ++q) {
      GVector br = courant_bracket(basis[p], basis[q]);
      if (l.contains(br)) continue;
      // L is maximal isotropic, so [u,v] ∉ L forces some w ∈ L with Nij(u,v,w) ≠ 0.
      GQ value;
      auto w = nij_partner(basis, basis[p], basis[q], value);
      if (!w) throw InvariantViolation("pair leaves L but every Nij triple vanishes");
      return NotIntegrable{Witness{WitnessKind::PairNotInL, {basis[p], basis[q], *w}, br, value}};
    }
  return Integrable{};
}

std::optional<Witness> find_nij_witness(const InvariantGacs& j) {
  const auto basis = plus_i_eigenspace(j);
  for (std::size_t p = 0; p < basis.size(); ++p)
    for (std::size_t q = p + 1; q < basis.size(); ++q)
      for (std::size_t r = q + 1; r < basis.size(); ++r) {
        GQ n = nijenhuis_operator(basis[p], basis[q], basis[r]);
        if (!n.is_zero()) return Witness{WitnessKind::NijNonzero, {basis[p], basis[q], basis[r]}, std::nullopt, n};
      }
  return std::nullopt;
}

bool reverify(const InvariantGacs& j, const Witness& w) { return reverify(Eigenspace(j), w); }

bool reverify(const Eigenspace& l, const Witness& w) {
  for (const auto& e : w.elements)
    if (!l.contains(e)) return false;
  if (w.kind == WitnessKind::PairNotInL) {
    if (w.elements.size() < 2) return false;
    GVector br = courant_bracket(w.elements[0], w.elements[1]);
    if (l.contains(br)) return false;
    if (w.residual && !(*w.residual == br)) return false;
  }
  if (w.value) {
    if (w.elements.size() != 3) return false;
    GQ n = nijenhuis_operator(w.elements[0], w.elements[1], w.elements[2]);
    if (n.is_zero() || n != *w.value) return false;
  }
  return true;
}

}  // namespace flagcx
