#pragma once

#include <cstdint>
#include <random>
#include <vector>

#include "flagcx/gtangent.hpp"

namespace flagcx {

// Deterministic PRNG; independent streams are keyed by (seed, a, b).
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : eng_(seed) {}
  static Rng stream(std::uint64_t seed, std::uint64_t a, std::uint64_t b);

  std::uint64_t next() { return eng_(); }
  // Uniform on [lo, hi] by rejection, independent of the standard library's distributions.
  std::int64_t uniform(std::int64_t lo, std::int64_t hi);

 private:
  std::mt19937_64 eng_;
};

inline constexpr int kDefaultHeight = 9;

// p/q with |p| <= height, 1 <= q <= height.
Rational random_rational(Rng& rng, int height = kDefaultHeight);
Rational random_nonzero_rational(Rng& rng, int height = kDefaultHeight);

ComplexType random_complex(Rng& rng);
NonComplexType random_noncomplex(Rng& rng);

// Cayley-transform sample S J0 S^{-1}, J0 the standard symplectic-type structure.
GeneralBlock standard_general_block(int dim_v);
GeneralBlock random_orthogonal_gacs_block(int dim_v, Rng& rng);
// Cayley sample with a caller-supplied Q-antisymmetric A (used by tests for A = 0).
GeneralBlock cayley_block(int dim_v, const QMatrix& a);

using Combination = std::vector<BlockKind>;

// Every class of size 2 takes Complex or NonComplex; larger classes take General.
std::vector<Combination> all_combinations(const TangentModel& model);
Combination random_combination(const TangentModel& model, Rng& rng);
InvariantGacs random_structure(const std::shared_ptr<const TangentModel>& model, const Combination& combo, Rng& rng);

}  // namespace flagcx
