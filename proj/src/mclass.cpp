#include "flagcx/mclass.hpp"

#include <cstdint>
#include <map>

namespace flagcx {

namespace {

// Parities of the coroot pairings <α, γ^∨> for γ ∈ Σ, packed into a mask.
std::uint64_t parity_key(const RootSystem& rs, const Root& alpha) {
  std::uint64_t key = 0;
  for (int s = 0; s < rs.rank(); ++s)
    if (rs.coroot_pairing(rs.simple_root(s), alpha) & 1) key |= std::uint64_t{1} << s;
  return key;
}

}  // namespace

bool m_equivalent(const RootSystem& rs, const Root& alpha, const Root& beta) {
  rs.index_or_throw(alpha);
  rs.index_or_throw(beta);
  return parity_key(rs, alpha) == parity_key(rs, beta);
}

bool m_equivalent_all_roots(const RootSystem& rs, const Root& alpha, const Root& beta) {
  rs.index_or_throw(alpha);
  rs.index_or_throw(beta);
  for (const auto& g : rs.roots())
    if ((rs.coroot_pairing(g, alpha) - rs.coroot_pairing(g, beta)) % 2 != 0) return false;
  return true;
}

std::vector<MClass> compute_classes(const FlagSpec& fs) {
  const auto& rs = fs.root_system();
  std::vector<MClass> classes;
  std::map<std::uint64_t, std::size_t> slot;
  for (int idx : complement_indices(fs)) {
    const Root& r = rs.root(idx);
    auto [it, fresh] = slot.emplace(parity_key(rs, r), classes.size());
    if (fresh) classes.push_back(MClass{r, {}, {}});
    classes[it->second].members.push_back(r);
    classes[it->second].indices.push_back(idx);
  }
  return classes;
}

ExistenceReport decide_existence(const FlagSpec& fs) {
  ExistenceReport rep{fs, compute_classes(fs), true, false};
  bool has_pair = false;
  for (const auto& c : rep.classes) {
    if (c.members.size() % 2) rep.admits_gacs = false;
    if (c.members.size() == 2) has_pair = true;
  }
  rep.gm2 = fs.is_maximal() && rep.admits_gacs && has_pair;
  return rep;
}

}  // namespace flagcx
