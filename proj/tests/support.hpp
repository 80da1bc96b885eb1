#pragma once

#include "flagcx/sampling.hpp"

namespace support {

inline flagcx::GQ random_gq(flagcx::Rng& rng, int height = 5) {
  return flagcx::GQ(flagcx::random_rational(rng, height), flagcx::random_rational(rng, height));
}

inline flagcx::GVector random_gvector(const flagcx::TangentModel& model, flagcx::Rng& rng) {
  flagcx::GVector v(model);
  for (int p = 0; p < model.dim(); ++p)
    for (bool d : {false, true}) v.add({p, d}, random_gq(rng));
  return v;
}

inline std::shared_ptr<const flagcx::TangentModel> maximal(flagcx::Family f, int l) {
  return flagcx::build_tangent_model(flagcx::FlagSpec(flagcx::build_root_system({f, l}), {}));
}

// Every basis symbol of the model.
inline std::vector<flagcx::Symbol> symbols(const flagcx::TangentModel& model) {
  std::vector<flagcx::Symbol> out;
  for (int p = 0; p < model.dim(); ++p)
    for (bool d : {false, true}) out.push_back({p, d});
  return out;
}

}  // namespace support
