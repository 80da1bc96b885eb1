#pragma once

#include <cstddef>
#include <memory>
#include <optional>
#include <utility>
#include <vector>

#include "flagcx/rootsys.hpp"
#include "flagcx/scalar.hpp"

namespace flagcx {

struct JacobiReport {
  std::size_t triples = 0;     // triples with a nonzero root sum that were evaluated
  std::size_t zero_sum = 0;    // triples alpha+beta+gamma = 0 (h-valued identity)
  std::size_t violations = 0;
  friend bool operator==(const JacobiReport&, const JacobiReport&) = default;
};

// Chevalley-basis constants: [X_a, X_b] = m_{a,b} X_{a+b}, |m_{a,b}| = p+1.
class StructureConstants {
 public:
  // Builds and verifies all axioms; throws InvariantViolation on any failure.
  explicit StructureConstants(std::shared_ptr<const RootSystem> rs);

  const RootSystem& root_system() const { return *rs_; }
  const std::shared_ptr<const RootSystem>& root_system_ptr() const { return rs_; }

  // By root index; 0 when i+j is not a root.
  int m_int(int i, int j) const { return n_[static_cast<std::size_t>(i) * rs_->num_roots() + j]; }
  Rational m(int i, int j) const { return Rational(m_int(i, j)); }
  Rational m(const Root& a, const Root& b) const;

  std::optional<std::pair<Rational, Root>> bracket(const Root& a, const Root& b) const;

  // Jacobi restricted to first index in [first_begin, first_end); used by sweep kernels.
  JacobiReport jacobi_slice(int first_begin, int first_end) const;

 private:
  void build();
  void verify() const;

  std::shared_ptr<const RootSystem> rs_;
  std::vector<int> n_;
};

std::shared_ptr<const StructureConstants> build_structure_constants(std::shared_ptr<const RootSystem> rs);

}  // namespace flagcx
