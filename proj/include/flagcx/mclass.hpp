#pragma once

#include <vector>

#include "flagcx/rootsys.hpp"

namespace flagcx {

struct MClass {
  Root representative;
  std::vector<Root> members;
  std::vector<int> indices;  // root indices in the root system, same order as members
};

struct ExistenceReport {
  FlagSpec flag;
  std::vector<MClass> classes;
  bool admits_gacs = false;
  bool gm2 = false;
};

// Eq. (2) over γ ∈ Σ; tests pin its agreement with γ ∈ Π.
bool m_equivalent(const RootSystem& rs, const Root& alpha, const Root& beta);
// Same congruence checked over every root γ ∈ Π (reference form).
bool m_equivalent_all_roots(const RootSystem& rs, const Root& alpha, const Root& beta);

std::vector<MClass> compute_classes(const FlagSpec& fs);
ExistenceReport decide_existence(const FlagSpec& fs);

}  // namespace flagcx
