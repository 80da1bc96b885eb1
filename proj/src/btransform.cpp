#include "flagcx/btransform.hpp"

#include <bit>

#include "flagcx/errors.hpp"

namespace flagcx {

void require_two_dim_classes(const TangentModel& model, const char* op) {
  bool ok = model.flag().is_maximal() && !model.classes().empty();
  for (const auto& c : model.classes()) ok = ok && c.members.size() == 2;
  if (!ok) throw Unsupported(std::string(op) + " needs a maximal flag whose M-classes all have 2 roots");
}

void BField::set(int i, int j, const Rational& r) {
  if (i == j) throw std::invalid_argument("2-form needs distinct roots");
  if (i > j) return set(j, i, -r);
  if (sgn(r) == 0) terms_.erase({i, j});
  else terms_[{i, j}] = r;
}

Rational BField::coeff(int i, int j) const {
  if (i == j) return 0;
  auto it = terms_.find({std::min(i, j), std::max(i, j)});
  if (it == terms_.end()) return 0;
  return i < j ? it->second : Rational(-it->second);
}

bool BField::is_invariant() const {
  for (const auto& [ij, r] : terms_)
    if (model_->class_of(ij.first) != model_->class_of(ij.second)) return false;
  return true;
}

QMatrix BField::class_matrix(int c) const {
  const auto& ps = model_->class_positions(c);
  const std::size_t k = ps.size();
  QMatrix m(k, k);
  for (std::size_t r = 0; r < k; ++r)
    for (std::size_t col = 0; col < k; ++col) m(r, col) = coeff(ps[col], ps[r]);
  return m;
}

BField operator+(const BField& a, const BField& b) {
  if (a.model_ != b.model_) throw std::invalid_argument("B-fields belong to different flags");
  BField s = a;
  for (const auto& [ij, r] : b.terms_) s.set(ij.first, ij.second, s.coeff(ij.first, ij.second) + r);
  return s;
}

BField operator-(const BField& a) {
  BField s(*a.model_);
  for (const auto& [ij, r] : a.terms_) s.set(ij.first, ij.second, -r);
  return s;
}

namespace {

QMatrix shear(const QMatrix& b) {
  const std::size_t k = b.rows();
  QMatrix e = QMatrix::identity(2 * k);
  e.set_block(k, 0, b);
  return e;
}

}  // namespace

InvariantGacs apply_b(const InvariantGacs& j, const BField& b) {
  if (&b.model() != &j.model()) throw std::invalid_argument("B-field belongs to a different flag");
  if (!b.is_invariant()) throw InvariantViolation("B-field is not M-invariant (pairs across classes)");
  std::vector<GcsBlock> blocks;
  for (std::size_t c = 0; c < j.blocks().size(); ++c) {
    const QMatrix bm = b.class_matrix(static_cast<int>(c));
    const QMatrix m = shear(-bm) * j.block_matrix(static_cast<int>(c)) * shear(bm);
    if (bm.is_zero()) blocks.push_back(j.blocks()[c]);
    else if (m.rows() == 4) blocks.push_back(classify_block(m));
    else blocks.push_back(GeneralBlock{m});
  }
  return InvariantGacs(j.model_ptr(), std::move(blocks));
}

GVector exp_b(const BField& b, const GVector& v) {
  if (&b.model() != &v.model()) throw std::invalid_argument("B-field belongs to a different flag");
  GVector out = v;
  for (const auto& [key, val] : v.terms()) {
    Symbol s = Symbol::from_key(key);
    if (s.dual) continue;
    // i_{X_p} (r X*_i ∧ X*_j) = r δ_{pi} X*_j - r δ_{pj} X*_i.
    for (const auto& [ij, r] : b.terms()) {
      if (ij.first == s.pos) out.add({ij.second, true}, val * r);
      if (ij.second == s.pos) out.add({ij.first, true}, -(val * r));
    }
  }
  return out;
}

std::pair<InvariantGacs, BField> canonical_form(const InvariantGacs& j) {
  const TangentModel& model = j.model();
  require_two_dim_classes(model, "canonical_form");
  BField b(model);
  std::vector<GcsBlock> blocks;
  for (std::size_t c = 0; c < j.blocks().size(); ++c) {
    const auto& blk = j.blocks()[c];
    if (const auto* n = std::get_if<NonComplexType>(&blk)) {
      const auto& ps = model.class_positions(static_cast<int>(c));
      b.set(ps[0], ps[1], -n->a / n->x);
      blocks.emplace_back(symplectic_block(n->x));
    } else if (std::holds_alternative<ComplexType>(blk)) {
      blocks.push_back(blk);
    } else {
      throw Unsupported("canonical_form needs complex or noncomplex blocks");
    }
  }
  return {InvariantGacs(j.model_ptr(), std::move(blocks)), b};
}

std::vector<ModuliCoordinate> moduli_coordinates(const InvariantGacs& j) {
  require_two_dim_classes(j.model(), "moduli_coordinates");
  std::vector<ModuliCoordinate> out;
  for (const auto& blk : j.blocks()) {
    if (const auto* n = std::get_if<NonComplexType>(&blk)) out.emplace_back(SymplecticCoord{n->x});
    else if (const auto* c = std::get_if<ComplexType>(&blk)) out.emplace_back(ComplexCoord{c->c, c->b});
    else throw Unsupported("moduli coordinates need complex or noncomplex blocks");
  }
  return out;
}

Spinor Spinor::one() {
  Spinor s;
  s.terms_[0] = GQ(1);
  return s;
}

Spinor Spinor::one_form(const TangentModel& model, const std::vector<std::pair<int, GQ>>& coeffs) {
  if (model.dim() > 64) throw Unsupported("spinors support at most 64 complement roots");
  Spinor s;
  for (const auto& [p, v] : coeffs) s.add(Mask{1} << p, v);
  return s;
}

Spinor Spinor::two_form(const BField& b, const GQ& scale) {
  if (b.model().dim() > 64) throw Unsupported("spinors support at most 64 complement roots");
  Spinor s;
  for (const auto& [ij, r] : b.terms()) s.add((Mask{1} << ij.first) | (Mask{1} << ij.second), scale * r);
  return s;
}

void Spinor::add(Mask m, const GQ& v) {
  if (v.is_zero()) return;
  auto [it, fresh] = terms_.emplace(m, v);
  if (!fresh) {
    it->second += v;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

int Spinor::max_degree() const {
  int d = -1;
  for (const auto& [m, v] : terms_) d = std::max(d, std::popcount(m));
  return d;
}

Spinor& Spinor::operator+=(const Spinor& o) {
  for (const auto& [m, v] : o.terms_) add(m, v);
  return *this;
}

Spinor operator-(Spinor a, const Spinor& b) {
  for (const auto& [m, v] : b.terms_) a.add(m, -v);
  return a;
}

Spinor operator*(const GQ& s, Spinor a) {
  if (s.is_zero()) return Spinor();
  for (auto& [m, v] : a.terms_) v *= s;
  return a;
}

namespace {

// Sign of e_S ∧ e_T relative to e_{S∪T}: one flip per pair s ∈ S, t ∈ T with s > t.
int wedge_sign(Spinor::Mask s, Spinor::Mask t) {
  int flips = 0;
  while (t) {
    int bit = std::countr_zero(t);
    t &= t - 1;
    Spinor::Mask above = bit == 63 ? 0 : (s >> (bit + 1));
    flips += std::popcount(above);
  }
  return flips % 2 ? -1 : 1;
}

}  // namespace

Spinor wedge(const Spinor& a, const Spinor& b) {
  Spinor out;
  for (const auto& [ma, va] : a.terms())
    for (const auto& [mb, vb] : b.terms()) {
      if (ma & mb) continue;
      GQ v = va * vb;
      if (wedge_sign(ma, mb) < 0) v = -v;
      out.add(ma | mb, v);
    }
  return out;
}

Spinor Spinor::exp(const Spinor& form) {
  Spinor sum = one();
  Spinor power = one();
  for (int k = 1;; ++k) {
    power = GQ(Rational(1, k)) * wedge(power, form);
    if (power.is_zero()) break;
    sum += power;
  }
  return sum;
}

Spinor contract(int pos, const Spinor& s) {
  Spinor out;
  const Spinor::Mask bit = Spinor::Mask{1} << pos;
  for (const auto& [m, v] : s.terms()) {
    if (!(m & bit)) continue;
    const int before = std::popcount(m & (bit - 1));
    out.add(m & ~bit, before % 2 ? -v : v);
  }
  return out;
}

Spinor clifford_act(const GVector& v, const Spinor& s) {
  Spinor out;
  for (const auto& [key, val] : v.terms()) {
    Symbol sym = Symbol::from_key(key);
    if (sym.dual) {
      Spinor e;
      e.add(Spinor::Mask{1} << sym.pos, val);
      out += wedge(e, s);
    } else {
      out += val * contract(sym.pos, s);
    }
  }
  return out;
}

Spinor pure_spinor(const InvariantGacs& j) {
  const TangentModel& model = j.model();
  require_two_dim_classes(model, "pure_spinor");
  if (model.dim() > 64) throw Unsupported("spinors support at most 64 complement roots");
  Spinor form;
  std::vector<Spinor> omegas;
  for (std::size_t c = 0; c < j.blocks().size(); ++c) {
    const auto& ps = model.class_positions(static_cast<int>(c));
    const Spinor::Mask pair = (Spinor::Mask{1} << ps[0]) | (Spinor::Mask{1} << ps[1]);
    if (const auto* n = std::get_if<NonComplexType>(&j.blocks()[c])) {
      // B_α + iω_α = (-a + i)/x · X*_α ∧ X*_β.
      form.add(pair, GQ(-n->a / n->x, 1 / n->x));
    } else if (const auto* cb = std::get_if<ComplexType>(&j.blocks()[c])) {
      GQ t = -(GQ(cb->b, 1) / GQ(cb->c));
      omegas.push_back(Spinor::one_form(model, {{ps[0], GQ(1)}, {ps[1], t}}));
    } else {
      throw Unsupported("pure_spinor needs complex or noncomplex blocks");
    }
  }
  Spinor phi = Spinor::exp(form);
  for (const auto& o : omegas) phi = wedge(phi, o);
  return phi;
}

int annihilator_dimension(const TangentModel& model, const Spinor& phi) {
  const int n = model.dim();
  std::vector<Spinor> cols;
  std::map<Spinor::Mask, std::size_t> row;
  for (int k = 0; k < 2 * n; ++k) {
    Spinor img = clifford_act(GVector::basis(model, {k % n, k >= n}), phi);
    for (const auto& [m, v] : img.terms()) row.emplace(m, row.size());
    cols.push_back(std::move(img));
  }
  GMatrix a(row.size(), 2 * n);
  for (int k = 0; k < 2 * n; ++k)
    for (const auto& [m, v] : cols[k].terms()) a(row.at(m), k) = v;
  return 2 * n - static_cast<int>(rank(a));
}

bool proportional(const Spinor& a, const Spinor& b) {
  if (a.is_zero() || b.is_zero()) return false;
  if (a.terms().size() != b.terms().size()) return false;
  const auto& [m0, v0] = *b.terms().begin();
  auto it = a.terms().find(m0);
  if (it == a.terms().end()) return false;
  GQ lambda = it->second / v0;
  return a == lambda * b;
}

QMatrix GeneralizedMetric::class_block(int c) const {
  const int n = model->dim();
  const auto& ps = model->class_positions(c);
  const int k = static_cast<int>(ps.size());
  QMatrix b(2 * k, 2 * k);
  for (int r = 0; r < 2 * k; ++r)
    for (int col = 0; col < 2 * k; ++col)
      b(r, col) = matrix(ps[r % k] + (r >= k ? n : 0), ps[col % k] + (col >= k ? n : 0));
  return b;
}

HermitianVerdict hermitian_pair(const InvariantGacs& j, const InvariantGacs& j2) {
  if (&j.model() != &j2.model()) throw std::invalid_argument("structures belong to different flags");
  const TangentModel& model = j.model();
  require_two_dim_classes(model, "hermitian_pair");
  const int n = model.dim();
  QMatrix g(2 * n, 2 * n);
  for (std::size_t c = 0; c < j.blocks().size(); ++c) {
    const int ci = static_cast<int>(c);
    const QMatrix& a = j.block_matrix(ci);
    const QMatrix& b = j2.block_matrix(ci);
    if (a * b != b * a) return HermitianInvalid{"J and J' do not commute on class " + std::to_string(c), ci};
    const QMatrix gc = -(a * b);
    if (gc * gc != QMatrix::identity(4)) return HermitianInvalid{"G^2 != I on class " + std::to_string(c), ci};
    if (!is_positive_definite(split_form(2) * gc)) {
      const auto* cx = std::get_if<ComplexType>(&j.blocks()[c]);
      const auto* nx = std::get_if<NonComplexType>(&j2.blocks()[c]);
      if (!cx) cx = std::get_if<ComplexType>(&j2.blocks()[c]);
      if (!nx) nx = std::get_if<NonComplexType>(&j.blocks()[c]);
      std::string why = "G = -JJ' is not positive definite on class " + std::to_string(c);
      if (cx && nx)
        why += ": cx > 0 fails (c=" + to_string(cx->c) + ", x=" + to_string(nx->x) + ")";
      else
        why += ": a Hermitian pair needs one complex and one noncomplex block per class";
      return HermitianInvalid{why, ci};
    }
    const auto& ps = model.class_positions(ci);
    for (int r = 0; r < 4; ++r)
      for (int col = 0; col < 4; ++col) g(ps[r % 2] + (r >= 2 ? n : 0), ps[col % 2] + (col >= 2 ? n : 0)) = gc(r, col);
  }
  return HermitianValid{GeneralizedMetric{j.model_ptr(), g}};
}

MetricNormalForm metric_normal_form(const GeneralizedMetric& gm) {
  const TangentModel& model = *gm.model;
  require_two_dim_classes(model, "metric_normal_form");
  const int n = model.dim();
  MetricNormalForm nf{QMatrix(n, n), BField(model)};
  for (std::size_t c = 0; c < model.classes().size(); ++c) {
    const int ci = static_cast<int>(c);
    const QMatrix blk = gm.class_block(ci);
    auto g = inverse(blk.block(0, 2, 2, 2));
    if (!g) throw InvariantViolation("metric block has a singular off-diagonal part");
    if (!is_positive_definite(*g)) throw InvariantViolation("g is not positive definite on class " + std::to_string(c));
    const QMatrix b = -(*g * blk.block(0, 0, 2, 2));
    if (b.transpose() != -b) throw InvariantViolation("extracted b is not antisymmetric");
    const auto& ps = model.class_positions(ci);
    for (int r = 0; r < 2; ++r)
      for (int col = 0; col < 2; ++col) nf.riemannian(ps[r], ps[col]) = (*g)(r, col);
    nf.b2.set(ps[0], ps[1], b(1, 0));
  }
  if (metric_from_normal_form(model, nf) != gm.matrix) throw InvariantViolation("metric normal form does not reconstruct G");
  return nf;
}

QMatrix metric_from_normal_form(const TangentModel& model, const MetricNormalForm& nf) {
  const int n = model.dim();
  QMatrix out(2 * n, 2 * n);
  for (std::size_t c = 0; c < model.classes().size(); ++c) {
    const int ci = static_cast<int>(c);
    const auto& ps = model.class_positions(ci);
    const int k = static_cast<int>(ps.size());
    QMatrix g(k, k);
    for (int r = 0; r < k; ++r)
      for (int col = 0; col < k; ++col) g(r, col) = nf.riemannian(ps[r], ps[col]);
    auto gi = inverse(g);
    if (!gi) throw InvariantViolation("riemannian block is singular");
    QMatrix off(2 * k, 2 * k);
    off.set_block(0, k, *gi);
    off.set_block(k, 0, g);
    const QMatrix b = nf.b2.class_matrix(ci);
    const QMatrix blk = shear(b) * off * shear(-b);
    for (int r = 0; r < 2 * k; ++r)
      for (int col = 0; col < 2 * k; ++col)
        out(ps[r % k] + (r >= k ? n : 0), ps[col % k] + (col >= k ? n : 0)) = blk(r, col);
  }
  return out;
}

std::vector<MetricFactor> metric_moduli(const TangentModel& model) {
  require_two_dim_classes(model, "metric_moduli");
  std::vector<MetricFactor> out;
  for (const auto& c : model.classes())
    out.push_back({c, "((R+)^2 x R) u ((R-)^2 x R)", {"c", "x", "b"}, "c*x > 0"});
  return out;
}

}  // namespace flagcx
