#include "flagcx/sampling.hpp"

#include <limits>
#include <stdexcept>

#include "flagcx/errors.hpp"

namespace flagcx {

namespace {

std::uint64_t splitmix(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

}  // namespace

Rng Rng::stream(std::uint64_t seed, std::uint64_t a, std::uint64_t b) {
  return Rng(splitmix(splitmix(splitmix(seed) ^ a) ^ (b * 0x632be59bd9b4e019ULL)));
}

std::int64_t Rng::uniform(std::int64_t lo, std::int64_t hi) {
  if (hi < lo) throw std::invalid_argument("empty range");
  const std::uint64_t span = static_cast<std::uint64_t>(hi - lo) + 1;
  const std::uint64_t limit = std::numeric_limits<std::uint64_t>::max() - std::numeric_limits<std::uint64_t>::max() % span;
  std::uint64_t v;
  do v = next();
  while (v >= limit);
  return lo + static_cast<std::int64_t>(v % span);
}

Rational random_rational(Rng& rng, int height) {
  Rational q(static_cast<long>(rng.uniform(-height, height)), static_cast<long>(rng.uniform(1, height)));
  q.canonicalize();
  return q;
}

Rational random_nonzero_rational(Rng& rng, int height) {
  Rational q;
  do q = random_rational(rng, height);
  while (is_zero(q));
  return q;
}

ComplexType random_complex(Rng& rng) {
  Rational b = random_rational(rng);
  return ComplexType{b, random_nonzero_rational(rng)};
}

NonComplexType random_noncomplex(Rng& rng) {
  Rational a = random_rational(rng);
  return make_noncomplex(a, random_nonzero_rational(rng));
}

GeneralBlock standard_general_block(int dim_v) {
  if (dim_v < 2 || dim_v % 2) throw std::invalid_argument("class dimension must be even and >= 2");
  // Ω = ⊕ [[0,-1],[1,0]] and J0 = [[0, -Ω⁻¹], [Ω, 0]] = [[0, Ω], [Ω, 0]].
  QMatrix omega(dim_v, dim_v);
  for (int i = 0; i < dim_v; i += 2) {
    omega(i, i + 1) = -1;
    omega(i + 1, i) = 1;
  }
  QMatrix j0(2 * dim_v, 2 * dim_v);
  j0.set_block(0, dim_v, omega);
  j0.set_block(dim_v, 0, omega);
  return GeneralBlock{j0};
}

GeneralBlock cayley_block(int dim_v, const QMatrix& a) {
  const auto id = QMatrix::identity(2 * dim_v);
  auto inv = inverse(id + a);
  if (!inv) throw InvariantViolation("I + A is singular");
  QMatrix s = (id - a) * *inv;
  auto s_inv = inverse(s);
  if (!s_inv) throw InvariantViolation("Cayley transform is singular");
  return GeneralBlock{s * standard_general_block(dim_v).matrix * *s_inv};
}

GeneralBlock random_orthogonal_gacs_block(int dim_v, Rng& rng) {
  if (dim_v < 2 || dim_v % 2) throw std::invalid_argument("class dimension must be even and >= 2");
  const int k = dim_v;
  for (int attempt = 0; attempt < 64; ++attempt) {
    // A = [[P, R], [T, -Pᵀ]] with R, T antisymmetric is Q-antisymmetric: AᵀQ + QA = 0.
    QMatrix a(2 * k, 2 * k);
    for (int r = 0; r < k; ++r)
      for (int c = 0; c < k; ++c) {
        Rational p = random_rational(rng, 3);
        a(r, c) = p;
        a(k + c, k + r) = -p;
      }
    for (int r = 0; r < k; ++r)
      for (int c = r + 1; c < k; ++c) {
        Rational x = random_rational(rng, 3), t = random_rational(rng, 3);
        a(r, k + c) = x;
        a(c, k + r) = -x;
        a(k + r, c) = t;
        a(k + c, r) = -t;
      }
    if (!inverse(QMatrix::identity(2 * k) + a)) continue;
    return cayley_block(dim_v, a);
  }
  throw InvariantViolation("Cayley sampling exhausted its retries");
}

std::vector<Combination> all_combinations(const TangentModel& model) {
  std::vector<int> pairs;
  Combination base;
  for (std::size_t c = 0; c < model.classes().size(); ++c) {
    if (model.classes()[c].members.size() == 2) {
      pairs.push_back(static_cast<int>(c));
      base.push_back(BlockKind::Complex);
    } else {
      base.push_back(BlockKind::General);
    }
  }
  if (pairs.size() > 20) throw Unsupported("too many 2-root classes for exhaustive enumeration");
  std::vector<Combination> out;
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << pairs.size()); ++mask) {
    Combination combo = base;
    for (std::size_t b = 0; b < pairs.size(); ++b)
      combo[pairs[b]] = (mask >> b & 1) ? BlockKind::NonComplex : BlockKind::Complex;
    out.push_back(std::move(combo));
  }
  return out;
}

Combination random_combination(const TangentModel& model, Rng& rng) {
  Combination combo;
  for (const auto& c : model.classes())
    combo.push_back(c.members.size() != 2 ? BlockKind::General
                                          : (rng.uniform(0, 1) ? BlockKind::NonComplex : BlockKind::Complex));
  return combo;
}

InvariantGacs random_structure(const std::shared_ptr<const TangentModel>& model, const Combination& combo, Rng& rng) {
  const auto& classes = model->classes();
  if (combo.size() != classes.size()) throw std::invalid_argument("combination does not match the class count");
  std::vector<GcsBlock> blocks;
  for (std::size_t c = 0; c < classes.size(); ++c) {
    const int k = static_cast<int>(classes[c].members.size());
    switch (combo[c]) {
      case BlockKind::Complex: blocks.emplace_back(random_complex(rng)); break;
      case BlockKind::NonComplex: blocks.emplace_back(random_noncomplex(rng)); break;
      case BlockKind::General: blocks.emplace_back(random_orthogonal_gacs_block(k, rng)); break;
    }
  }
  return InvariantGacs(model, std::move(blocks));
}

}  // namespace flagcx
