#pragma once

#include <cstdint>
#include <map>
#include <memory>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "flagcx/gtangent.hpp"

namespace flagcx {

// B = Σ r_{ij} X*_i ∧ X*_j over complement positions i < j.
class BField {
 public:
  explicit BField(const TangentModel& model) : model_(&model) {}

  const TangentModel& model() const { return *model_; }
  void set(int i, int j, const Rational& r);  // i > j stores -r at (j, i)
  Rational coeff(int i, int j) const;         // B(X_i, X_j), antisymmetric
  const std::map<std::pair<int, int>, Rational>& terms() const { return terms_; }
  bool is_invariant() const;  // every pair lies inside one M-class
  bool is_zero() const { return terms_.empty(); }

  // Matrix of X -> i_X B on the class space: entry (row, col) = B(X_col, X_row).
  QMatrix class_matrix(int c) const;

  friend BField operator+(const BField& a, const BField& b);
  friend BField operator-(const BField& a);

 private:
  const TangentModel* model_;
  std::map<std::pair<int, int>, Rational> terms_;
};

// e^{-B} J e^{B} with e^{B} = [[1,0],[B,1]].
InvariantGacs apply_b(const InvariantGacs& j, const BField& b);
// X + ξ -> X + ξ + i_X B.
GVector exp_b(const BField& b, const GVector& v);

// (J0, B) with apply_b(J0, B) = J; noncomplex blocks become symplectic with B_α = -(a/x) X*_α∧X*_β.
std::pair<InvariantGacs, BField> canonical_form(const InvariantGacs& j);

struct SymplecticCoord {
  Rational x;
  friend bool operator==(const SymplecticCoord&, const SymplecticCoord&) = default;
};
struct ComplexCoord {
  Rational c;
  Rational b;
  friend bool operator==(const ComplexCoord&, const ComplexCoord&) = default;
};
using ModuliCoordinate = std::variant<SymplecticCoord, ComplexCoord>;
std::vector<ModuliCoordinate> moduli_coordinates(const InvariantGacs& j);

// Exterior algebra over the complexified dual of n^-; a term is a bitmask of positions.
class Spinor {
 public:
  using Mask = std::uint64_t;

  static Spinor one();
  static Spinor one_form(const TangentModel& model, const std::vector<std::pair<int, GQ>>& coeffs);
  static Spinor two_form(const BField& b, const GQ& scale = GQ(1));

  const std::map<Mask, GQ>& terms() const { return terms_; }
  void add(Mask m, const GQ& v);
  bool is_zero() const { return terms_.empty(); }
  int max_degree() const;

  Spinor& operator+=(const Spinor& o);
  friend Spinor operator+(Spinor a, const Spinor& b) { return a += b; }
  friend Spinor operator-(Spinor a, const Spinor& b);
  friend Spinor operator*(const GQ& s, Spinor a);
  friend bool operator==(const Spinor&, const Spinor&) = default;

  // Σ ω^k / k! (finite since forms are nilpotent).
  static Spinor exp(const Spinor& form);

 private:
  std::map<Mask, GQ> terms_;
};

Spinor wedge(const Spinor& a, const Spinor& b);
// i_{X_pos} s.
Spinor contract(int pos, const Spinor& s);
// (X + ξ)·s = i_X s + ξ ∧ s.
Spinor clifford_act(const GVector& v, const Spinor& s);

// exp(Σ_nc (B_α + iω_α)) ∧ ⋀_c Ω_α with Ω_α = X*_α - ((b+i)/c) X*_β.
Spinor pure_spinor(const InvariantGacs& j);
// Dimension of {v : v·φ = 0}, by exact rank.
int annihilator_dimension(const TangentModel& model, const Spinor& phi);
// True iff a = λ b for some nonzero λ.
bool proportional(const Spinor& a, const Spinor& b);

struct GeneralizedMetric {
  std::shared_ptr<const TangentModel> model;
  QMatrix matrix;  // 2n×2n in the order (X_0..X_{n-1}, X*_0..X*_{n-1})
  QMatrix class_block(int c) const;
};

struct HermitianValid {
  GeneralizedMetric metric;
};
struct HermitianInvalid {
  std::string reason;
  int class_index = -1;
};
using HermitianVerdict = std::variant<HermitianValid, HermitianInvalid>;

HermitianVerdict hermitian_pair(const InvariantGacs& j, const InvariantGacs& j2);

struct MetricNormalForm {
  QMatrix riemannian;  // n×n, block-diagonal over classes
  BField b2;
};
// G = e^{b2} [[0, g⁻¹], [g, 0]] e^{-b2}; throws InvariantViolation if g is not positive.
MetricNormalForm metric_normal_form(const GeneralizedMetric& g);
// [[0, g⁻¹], [g, 0]] conjugated by e^{b}, assembled globally.
QMatrix metric_from_normal_form(const TangentModel& model, const MetricNormalForm& nf);

struct MetricFactor {
  MClass cls;
  std::string chart;                     // ((R+)^2 x R) u ((R-)^2 x R)
  std::vector<std::string> coordinates;  // c, x, b
  std::string constraint;                // c*x > 0
};
std::vector<MetricFactor> metric_moduli(const TangentModel& model);

// Throws Unsupported unless the flag is GM2 with only 2-root classes.
void require_two_dim_classes(const TangentModel& model, const char* op);

}  // namespace flagcx
