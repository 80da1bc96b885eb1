#include "flagcx/gtangent.hpp"

#include <algorithm>
#include <map>
#include <string>

#include "flagcx/errors.hpp"

namespace flagcx {

TangentModel::TangentModel(const FlagSpec& fs)
    : fs_(fs), sc_(build_structure_constants(fs.root_system_ptr())), comp_(complement_indices(fs)) {
  const RootSystem& rs = root_system();
  pos_of_.assign(rs.num_roots(), -1);
  for (int p = 0; p < dim(); ++p) pos_of_[comp_[p]] = p;

  classes_ = compute_classes(fs_);
  class_of_.assign(dim(), -1);
  local_.assign(dim(), -1);
  for (std::size_t c = 0; c < classes_.size(); ++c) {
    std::vector<int> ps;
    for (int idx : classes_[c].indices) {
      int p = pos_of_[idx];
      class_of_[p] = static_cast<int>(c);
      local_[p] = static_cast<int>(ps.size());
      ps.push_back(p);
    }
    class_pos_.push_back(std::move(ps));
  }

  const int n = dim();
  tan_.assign(static_cast<std::size_t>(n) * n, Term{});
  coad_.assign(static_cast<std::size_t>(n) * n, Term{});
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      int s = rs.sum_index(comp_[i], comp_[j]);
      if (s >= 0 && pos_of_[s] >= 0) tan_[i * n + j] = Term{pos_of_[s], sc_->m_int(comp_[i], comp_[j])};
      // (ad*_{X_i} X*_j)(X_g) = -X*_j([X_i, X_g]) is nonzero only for g = j - i.
      int d = rs.sum_index(comp_[j], rs.negate(comp_[i]));
      if (d >= 0 && pos_of_[d] >= 0) coad_[i * n + j] = Term{pos_of_[d], -sc_->m_int(comp_[i], d)};
    }
}

std::optional<int> TangentModel::position_of(const Root& r) const {
  auto idx = root_system().index_of(r);
  if (!idx || pos_of_[*idx] < 0) return std::nullopt;
  return pos_of_[*idx];
}

int TangentModel::position_or_throw(const Root& r) const {
  auto p = position_of(r);
  if (!p) throw std::invalid_argument("root is not in the complement of theta");
  return *p;
}

std::shared_ptr<const TangentModel> build_tangent_model(const FlagSpec& fs) {
  return std::make_shared<const TangentModel>(fs);
}

GVector GVector::basis(const TangentModel& model, Symbol s, GQ coeff) {
  GVector v(model);
  v.add(s, coeff);
  return v;
}

GQ GVector::coeff(Symbol s) const {
  auto it = std::lower_bound(terms_.begin(), terms_.end(), s.key(),
                             [](const auto& t, int k) { return t.first < k; });
  if (it != terms_.end() && it->first == s.key()) return it->second;
  return GQ();
}

void GVector::add(Symbol s, const GQ& v) {
  if (s.pos < 0 || s.pos >= model_->dim()) throw std::out_of_range("symbol outside the complement");
  if (v.is_zero()) return;
  const int k = s.key();
  auto it = std::lower_bound(terms_.begin(), terms_.end(), k,
                             [](const auto& t, int key) { return t.first < key; });
  if (it != terms_.end() && it->first == k) {
    it->second += v;
    if (it->second.is_zero()) terms_.erase(it);
  } else {
    terms_.insert(it, {k, v});
  }
}

void GVector::check_same_model(const GVector& o) const {
  if (model_ != o.model_) throw std::invalid_argument("vectors belong to different flags");
}

GVector GVector::conj() const {
  GVector r = *this;
  for (auto& t : r.terms_) t.second = t.second.conj();
  return r;
}

GVector& GVector::operator+=(const GVector& o) {
  check_same_model(o);
  for (const auto& [k, v] : o.terms_) add(Symbol::from_key(k), v);
  return *this;
}

GVector& GVector::operator-=(const GVector& o) {
  check_same_model(o);
  for (const auto& [k, v] : o.terms_) add(Symbol::from_key(k), -v);
  return *this;
}

GVector& GVector::operator*=(const GQ& s) {
  if (s.is_zero()) {
    terms_.clear();
    return *this;
  }
  for (auto& t : terms_) t.second *= s;
  return *this;
}

GQ pairing_q(const GVector& u, const GVector& v) {
  u.check_same_model(v);
  GQ acc;
  for (const auto& [k, a] : u.terms()) {
    Symbol s = Symbol::from_key(k);
    GQ b = v.coeff({s.pos, !s.dual});
    if (!b.is_zero()) acc += a * b;
  }
  return acc * Rational(1, 2);
}

BlockKind kind_of(const GcsBlock& b) { return static_cast<BlockKind>(b.index()); }

const char* kind_name(BlockKind k) {
  switch (k) {
    case BlockKind::Complex: return "complex";
    case BlockKind::NonComplex: return "noncomplex";
    case BlockKind::General: return "general";
  }
  return "?";
}

QMatrix split_form(int k) {
  QMatrix q(2 * k, 2 * k);
  for (int i = 0; i < k; ++i) q(i, k + i) = q(k + i, i) = 1;
  return q;
}

QMatrix block_matrix(const GcsBlock& b, int k) {
  if (const auto* g = std::get_if<GeneralBlock>(&b)) {
    if (static_cast<int>(g->matrix.rows()) != 2 * k || static_cast<int>(g->matrix.cols()) != 2 * k)
      throw InvariantViolation("general block has the wrong size for its class");
    return g->matrix;
  }
  if (k != 2) throw InvariantViolation("complex/noncomplex blocks need a 2-root class");
  if (const auto* c = std::get_if<ComplexType>(&b)) {
    if (is_zero(c->c)) throw InvariantViolation("complex block requires c != 0");
    Rational q = -(1 + c->b * c->b) / c->c;
    return QMatrix{{c->b, q, 0, 0}, {c->c, -c->b, 0, 0}, {0, 0, -c->b, -c->c}, {0, 0, -q, c->b}};
  }
  const auto& n = std::get<NonComplexType>(b);
  return QMatrix{{n.a, 0, 0, -n.x}, {0, n.a, n.x, 0}, {0, -n.y, -n.a, 0}, {n.y, 0, 0, -n.a}};
}

void validate_block(const GcsBlock& b, int k) {
  if (const auto* n = std::get_if<NonComplexType>(&b)) {
    if (is_zero(n->x)) throw InvariantViolation("noncomplex block requires x != 0");
    if (n->a * n->a != n->x * n->y - 1) throw InvariantViolation("noncomplex block violates a^2 = xy - 1");
  }
  QMatrix m = block_matrix(b, k);
  const auto id = QMatrix::identity(2 * k);
  if (m * m != -id) throw InvariantViolation("block violates J^2 = -I");
  const QMatrix q = split_form(k);
  if (m.transpose() * q * m != q) throw InvariantViolation("block violates J^T Q J = Q");
}

GcsBlock classify_block(const QMatrix& m) {
  if (m.rows() == 4 && m.cols() == 4) {
    const bool off_zero = m.block(0, 2, 2, 2).is_zero() && m.block(2, 0, 2, 2).is_zero();
    if (off_zero && !is_zero(m(1, 0))) {
      ComplexType c{m(0, 0), m(1, 0)};
      if (block_matrix(c, 2) == m) return c;
    }
    if (!is_zero(m(1, 2))) {
      NonComplexType n{m(0, 0), m(1, 2), m(3, 0)};
      if (block_matrix(n, 2) == m) return n;
    }
  }
  return GeneralBlock{m};
}

NonComplexType make_noncomplex(const Rational& a, const Rational& x) {
  if (is_zero(x)) throw InvariantViolation("noncomplex block requires x != 0");
  return NonComplexType{a, x, (a * a + 1) / x};
}

NonComplexType symplectic_block(const Rational& x) { return make_noncomplex(0, x); }

InvariantGacs::InvariantGacs(std::shared_ptr<const TangentModel> model, std::vector<GcsBlock> blocks)
    : model_(std::move(model)), blocks_(std::move(blocks)) {
  if (!model_) throw std::invalid_argument("null tangent model");
  const auto& classes = model_->classes();
  for (const auto& c : classes)
    if (c.members.size() % 2)
      throw Unsupported("class of " + std::to_string(c.members.size()) + " roots has odd size");
  if (blocks_.size() != classes.size())
    throw InvariantViolation("expected " + std::to_string(classes.size()) + " blocks, got " +
                             std::to_string(blocks_.size()));
  for (std::size_t c = 0; c < classes.size(); ++c) {
    const int k = static_cast<int>(classes[c].members.size());
    validate_block(blocks_[c], k);
    mats_.push_back(flagcx::block_matrix(blocks_[c], k));
  }
}

InvariantGacs assemble(std::shared_ptr<const TangentModel> model, std::vector<GcsBlock> blocks) {
  return InvariantGacs(std::move(model), std::move(blocks));
}

GVector InvariantGacs::apply(const GVector& v) const {
  if (&v.model() != model_.get()) throw std::invalid_argument("vector belongs to a different flag");
  std::map<int, std::vector<GQ>> local;
  for (const auto& [key, val] : v.terms()) {
    Symbol s = Symbol::from_key(key);
    const int c = model_->class_of(s.pos);
    const int k = static_cast<int>(model_->class_positions(c).size());
    auto& w = local[c];
    if (w.empty()) w.resize(2 * k);
    w[model_->local_index(s.pos) + (s.dual ? k : 0)] = val;
  }
  GVector out(*model_);
  for (const auto& [c, w] : local) {
    const QMatrix& m = mats_[c];
    const auto& ps = model_->class_positions(c);
    const int k = static_cast<int>(ps.size());
    for (int r = 0; r < 2 * k; ++r) {
      GQ acc;
      for (int col = 0; col < 2 * k; ++col)
        if (!is_zero(m(r, col)) && !w[col].is_zero()) acc += m(r, col) * w[col];
      out.add({ps[r % k], r >= k}, acc);
    }
  }
  return out;
}

QMatrix InvariantGacs::full_matrix() const {
  const int n = model_->dim();
  QMatrix full(2 * n, 2 * n);
  for (std::size_t c = 0; c < mats_.size(); ++c) {
    const auto& ps = model_->class_positions(static_cast<int>(c));
    const int k = static_cast<int>(ps.size());
    for (int r = 0; r < 2 * k; ++r)
      for (int col = 0; col < 2 * k; ++col) {
        int gr = ps[r % k] + (r >= k ? n : 0);
        int gc = ps[col % k] + (col >= k ? n : 0);
        full(gr, gc) = mats_[c](r, col);
      }
  }
  return full;
}

QMatrix decompose(const InvariantGacs& j, int c) {
  const auto& model = j.model();
  const int n = model.dim();
  const auto& ps = model.class_positions(c);
  const int k = static_cast<int>(ps.size());
  const QMatrix full = j.full_matrix();
  QMatrix b(2 * k, 2 * k);
  for (int r = 0; r < 2 * k; ++r)
    for (int col = 0; col < 2 * k; ++col)
      b(r, col) = full(ps[r % k] + (r >= k ? n : 0), ps[col % k] + (col >= k ? n : 0));
  return b;
}

namespace {

std::vector<std::vector<GQ>> local_eigenvectors(const GcsBlock& b, const QMatrix& m) {
  const GQ i = GQ::i();
  if (const auto* c = std::get_if<ComplexType>(&b)) {
    GQ bi(c->b, 1);
    return {{bi, GQ(c->c), GQ(), GQ()}, {GQ(), GQ(), GQ(Rational(-c->c)), bi}};
  }
  if (const auto* n = std::get_if<NonComplexType>(&b)) {
    GQ ai(n->a, -1);
    return {{GQ(n->x), GQ(), GQ(), ai}, {GQ(), GQ(Rational(-n->x)), ai, GQ()}};
  }
  GMatrix shifted(m.rows(), m.cols());
  for (std::size_t r = 0; r < m.rows(); ++r)
    for (std::size_t col = 0; col < m.cols(); ++col) shifted(r, col) = GQ(m(r, col));
  for (std::size_t r = 0; r < m.rows(); ++r) shifted(r, r) -= i;
  return nullspace(shifted);
}

}  // namespace

Eigenspace::Eigenspace(const InvariantGacs& j) : model_(&j.model()) {
  const auto& model = j.model();
  for (std::size_t c = 0; c < model.classes().size(); ++c) {
    const auto& ps = model.class_positions(static_cast<int>(c));
    const int k = static_cast<int>(ps.size());
    auto vecs = local_eigenvectors(j.blocks()[c], j.block_matrix(static_cast<int>(c)));
    if (static_cast<int>(vecs.size()) != k) throw InvariantViolation("+i eigenspace has the wrong dimension");
    GMatrix e(k, 2 * k);
    for (int r = 0; r < k; ++r) {
      GVector g(model);
      for (int col = 0; col < 2 * k; ++col) {
        e(r, col) = vecs[r][col];
        g.add({ps[col % k], col >= k}, vecs[r][col]);
      }
      basis_.push_back(std::move(g));
    }
    pivots_.push_back(rref(e));
    echelon_.push_back(std::move(e));
  }
}

bool Eigenspace::contains(const GVector& v) const {
  if (&v.model() != model_) throw std::invalid_argument("vector belongs to a different flag");
  std::map<int, std::vector<GQ>> local;
  for (const auto& [key, val] : v.terms()) {
    Symbol s = Symbol::from_key(key);
    const int c = model_->class_of(s.pos);
    const int k = static_cast<int>(model_->class_positions(c).size());
    auto& w = local[c];
    if (w.empty()) w.resize(2 * k);
    w[model_->local_index(s.pos) + (s.dual ? k : 0)] = val;
  }
  for (auto& [c, w] : local) {
    const GMatrix& e = echelon_[c];
    const auto& piv = pivots_[c];
    for (std::size_t r = 0; r < piv.size(); ++r) {
      GQ f = w[piv[r]];
      if (f.is_zero()) continue;
      for (std::size_t col = 0; col < w.size(); ++col)
        if (!e(r, col).is_zero()) w[col] -= f * e(r, col);
    }
    for (const auto& x : w)
      if (!x.is_zero()) return false;
  }
  return true;
}

std::vector<GVector> plus_i_eigenspace(const InvariantGacs& j) { return Eigenspace(j).basis(); }

int structure_type(const InvariantGacs& j) {
  const auto basis = plus_i_eigenspace(j);
  const int n = j.model().dim();
  GMatrix proj(basis.size(), n);
  for (std::size_t r = 0; r < basis.size(); ++r)
    for (const auto& [key, val] : basis[r].terms()) {
      Symbol s = Symbol::from_key(key);
      if (!s.dual) proj(r, s.pos) = val;
    }
  return n - static_cast<int>(rank(proj));
}

}  // namespace flagcx
