#pragma once

#include <memory>
#include <optional>
#include <utility>
#include <variant>
#include <vector>

#include "flagcx/chevalley.hpp"
#include "flagcx/matrix.hpp"
#include "flagcx/mclass.hpp"
#include "flagcx/rootsys.hpp"
#include "flagcx/scalar.hpp"

namespace flagcx {

// X_α (dual = false) or X*_α (dual = true); pos indexes the complement roots.
struct Symbol {
  int pos;
  bool dual;
  int key() const { return 2 * pos + (dual ? 1 : 0); }
  static Symbol from_key(int k) { return {k / 2, (k & 1) != 0}; }
  friend bool operator==(const Symbol&, const Symbol&) = default;
};

// Complexified n^- ⊕ (n^-)* at the origin: complement roots, M-classes and bracket tables.
class TangentModel {
 public:
  explicit TangentModel(const FlagSpec& fs);

  const FlagSpec& flag() const { return fs_; }
  const RootSystem& root_system() const { return fs_.root_system(); }
  const StructureConstants& constants() const { return *sc_; }

  int dim() const { return static_cast<int>(comp_.size()); }
  int root_index(int pos) const { return comp_[pos]; }
  const Root& root(int pos) const { return root_system().root(comp_[pos]); }
  std::optional<int> position_of(const Root& r) const;
  int position_or_throw(const Root& r) const;

  const std::vector<MClass>& classes() const { return classes_; }
  const std::vector<int>& class_positions(int c) const { return class_pos_[c]; }
  int class_of(int pos) const { return class_of_[pos]; }
  int local_index(int pos) const { return local_[pos]; }

  struct Term {
    int target = -1;  // complement position, -1 when the bracket vanishes
    int coeff = 0;
  };
  // [X_i, X_j] = coeff X_target.
  const Term& tangent_bracket(int i, int j) const { return tan_[i * dim() + j]; }
  // ad*_{X_i} X*_j = coeff X*_target (coadjoint action in the dual basis).
  const Term& coadjoint(int i, int j) const { return coad_[i * dim() + j]; }

 private:
  FlagSpec fs_;
  std::shared_ptr<const StructureConstants> sc_;
  std::vector<int> comp_;
  std::vector<int> pos_of_;
  std::vector<MClass> classes_;
  std::vector<std::vector<int>> class_pos_;
  std::vector<int> class_of_;
  std::vector<int> local_;
  std::vector<Term> tan_;
  std::vector<Term> coad_;
};

std::shared_ptr<const TangentModel> build_tangent_model(const FlagSpec& fs);

// Sparse Gaussian-rational vector over {X_α, X*_α}; model is non-owning.
class GVector {
 public:
  explicit GVector(const TangentModel& model) : model_(&model) {}
  static GVector basis(const TangentModel& model, Symbol s, GQ coeff = GQ(1));

  const TangentModel& model() const { return *model_; }
  GQ coeff(Symbol s) const;
  void add(Symbol s, const GQ& v);
  const std::vector<std::pair<int, GQ>>& terms() const { return terms_; }  // sorted by key
  bool is_zero() const { return terms_.empty(); }

  GVector conj() const;
  GVector& operator+=(const GVector& o);
  GVector& operator-=(const GVector& o);
  GVector& operator*=(const GQ& s);
  friend GVector operator+(GVector a, const GVector& b) { return a += b; }
  friend GVector operator-(GVector a, const GVector& b) { return a -= b; }
  friend GVector operator*(const GQ& s, GVector a) { return a *= s; }
  friend bool operator==(const GVector& a, const GVector& b) {
    return a.model_ == b.model_ && a.terms_ == b.terms_;
  }

  void check_same_model(const GVector& o) const;

 private:
  const TangentModel* model_;
  std::vector<std::pair<int, GQ>> terms_;
};

// Eq. (1): <X+ξ, Y+η> = ½(ξ(Y) + η(X)), bilinear.
GQ pairing_q(const GVector& u, const GVector& v);

struct ComplexType {
  Rational b;
  Rational c;
};
struct NonComplexType {
  Rational a;
  Rational x;
  Rational y;
};
// Real orthogonal complex structure on a class of size k; 2k×2k over (X_1..X_k, X*_1..X*_k).
struct GeneralBlock {
  QMatrix matrix;
};
using GcsBlock = std::variant<ComplexType, NonComplexType, GeneralBlock>;

enum class BlockKind { Complex, NonComplex, General };
BlockKind kind_of(const GcsBlock& b);
const char* kind_name(BlockKind k);

// Q = [[0, I], [I, 0]] of size 2k.
QMatrix split_form(int k);
QMatrix block_matrix(const GcsBlock& b, int k);
// Throws InvariantViolation naming the failed invariant.
void validate_block(const GcsBlock& b, int k);
// Recognizes 4×4 matrices as complex or noncomplex type; otherwise GeneralBlock.
GcsBlock classify_block(const QMatrix& m);
NonComplexType make_noncomplex(const Rational& a, const Rational& x);  // y = (a²+1)/x
NonComplexType symplectic_block(const Rational& x);

class InvariantGacs {
 public:
  // Validates coverage, block sizes and J² = -I, JᵀQJ = Q on every block.
  InvariantGacs(std::shared_ptr<const TangentModel> model, std::vector<GcsBlock> blocks);

  const TangentModel& model() const { return *model_; }
  const std::shared_ptr<const TangentModel>& model_ptr() const { return model_; }
  const std::vector<GcsBlock>& blocks() const { return blocks_; }
  const QMatrix& block_matrix(int c) const { return mats_[c]; }

  GVector apply(const GVector& v) const;
  // Global 2n×2n matrix in the order (X_0..X_{n-1}, X*_0..X*_{n-1}).
  QMatrix full_matrix() const;

 private:
  std::shared_ptr<const TangentModel> model_;
  std::vector<GcsBlock> blocks_;
  std::vector<QMatrix> mats_;
};

InvariantGacs assemble(std::shared_ptr<const TangentModel> model, std::vector<GcsBlock> blocks);
// Restriction of an assembled structure to one class space.
QMatrix decompose(const InvariantGacs& j, int c);

// +i eigenspace, stored per class as reduced row echelon rows in local coordinates.
class Eigenspace {
 public:
  explicit Eigenspace(const InvariantGacs& j);

  const std::vector<GVector>& basis() const { return basis_; }
  bool contains(const GVector& v) const;

 private:
  const TangentModel* model_;
  std::vector<GMatrix> echelon_;
  std::vector<std::vector<std::size_t>> pivots_;
  std::vector<GVector> basis_;
};

std::vector<GVector> plus_i_eigenspace(const InvariantGacs& j);
int structure_type(const InvariantGacs& j);

}  // namespace flagcx
