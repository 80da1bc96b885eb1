#include "flagcx/chevalley.hpp"

#include <cstdlib>
#include <string>

#include "flagcx/errors.hpp"

namespace flagcx {

namespace {

Rational ratio(int num, int den) {
  Rational q(num, den);
  q.canonicalize();
  return q;
}

}  // namespace

StructureConstants::StructureConstants(std::shared_ptr<const RootSystem> rs) : rs_(std::move(rs)) {
  if (!rs_) throw std::invalid_argument("null root system");
  build();
  verify();
}

// Carter's recursion. Positive pairs are fixed in order of increasing sum height:
// the extraspecial pair (α_s, ξ-α_s), s minimal, gets +(p+1); every other pair
// follows from the four-root relation, whose remaining constants involve only
// sums of lower height. Mixed-sign constants come from the three-root relation
// N_{x,y}/|z|² = N_{y,z}/|x|² = N_{z,x}/|y|² with x+y+z = 0.
void StructureConstants::build() {
  const RootSystem& rs = *rs_;
  const int total = rs.num_roots();
  const int npos = rs.num_positive();
  n_.assign(static_cast<std::size_t>(total) * total, 0);
  std::vector<char> known(static_cast<std::size_t>(total) * total, 0);
  auto at = [&](int i, int j) -> int& { return n_[static_cast<std::size_t>(i) * total + j]; };
  auto set = [&](int i, int j, int v) {
    at(i, j) = v;
    known[static_cast<std::size_t>(i) * total + j] = 1;
  };

  // General constant from positive-pair data; every lookup must already be known.
  auto general = [&](int x, int y) -> Rational {
    int s = rs.sum_index(x, y);
    if (s < 0) return 0;
    auto lookup = [&](int i, int j) -> Rational {
      if (rs.is_positive(i) && rs.is_positive(j)) {
        if (!known[static_cast<std::size_t>(i) * total + j])
          throw InvariantViolation("Chevalley recursion used an unknown constant");
        return at(i, j);
      }
      if (!known[static_cast<std::size_t>(rs.negate(i)) * total + rs.negate(j)])
        throw InvariantViolation("Chevalley recursion used an unknown constant");
      return -at(rs.negate(i), rs.negate(j));
    };
    if (rs.is_positive(x) == rs.is_positive(y)) return lookup(x, y);
    int z = rs.negate(s);
    if (rs.is_positive(y) == rs.is_positive(z))
      return ratio(rs.length2(z), rs.length2(x)) * lookup(y, z);
    return ratio(rs.length2(z), rs.length2(y)) * lookup(z, x);
  };

  for (int xi = 0; xi < npos; ++xi) {
    if (rs.root(xi).height() < 2) continue;
    int a1 = -1, b1 = -1;
    for (int s = 0; s < rs.rank() && a1 < 0; ++s) {
      int a = *rs.index_of(rs.simple_root(s));
      auto b = rs.index_of(rs.root(xi) - rs.root(a));
      if (b && rs.is_positive(*b)) {
        a1 = a;
        b1 = *b;
      }
    }
    const int p1 = rs.string_p(a1, b1);
    set(a1, b1, p1 + 1);
    set(b1, a1, -(p1 + 1));
    const Rational xi2 = rs.length2(xi);
    for (int a = 0; a < npos; ++a) {
      int b = rs.sum_index(xi, rs.negate(a));
      if (b < 0 || !rs.is_positive(b) || a == a1 || a == b1) continue;
      if (known[static_cast<std::size_t>(a) * total + b]) continue;
      Rational acc = 0;
      int bma = rs.sum_index(b, rs.negate(a1));
      if (bma >= 0)
        acc += general(b, rs.negate(a1)) * general(a, rs.negate(b1)) / Rational(rs.length2(bma));
      int ama = rs.sum_index(a, rs.negate(a1));
      if (ama >= 0)
        acc += general(rs.negate(a1), a) * general(b, rs.negate(b1)) / Rational(rs.length2(ama));
      Rational v = xi2 / Rational(p1 + 1) * acc;
      if (v.get_den() != 1) throw InvariantViolation("non-integral Chevalley constant");
      int iv = static_cast<int>(v.get_num().get_si());
      set(a, b, iv);
      set(b, a, -iv);
    }
  }
  for (int i = 0; i < total; ++i)
    for (int j = 0; j < total; ++j) {
      if (rs.sum_index(i, j) < 0) continue;
      Rational v = general(i, j);
      if (v.get_den() != 1) throw InvariantViolation("non-integral Chevalley constant");
      at(i, j) = static_cast<int>(v.get_num().get_si());
    }
}

JacobiReport StructureConstants::jacobi_slice(int first_begin, int first_end) const {
  const RootSystem& rs = *rs_;
  const int total = rs.num_roots();
  JacobiReport rep;
  for (int a = first_begin; a < first_end; ++a)
    for (int b = 0; b < total; ++b) {
      if (b == rs.negate(a)) continue;
      for (int c = 0; c < total; ++c) {
        if (c == rs.negate(a) || c == rs.negate(b)) continue;
        const int ab = rs.sum_index(a, b), bc = rs.sum_index(b, c), ca = rs.sum_index(c, a);
        const int abc = ab >= 0 ? rs.sum_index(ab, c) : (bc >= 0 ? rs.sum_index(bc, a) : (ca >= 0 ? rs.sum_index(ca, b) : -1));
        bool zero_sum = ab >= 0 && ab == rs.negate(c);
        if (zero_sum) {
          // [[X_a,X_b],X_c] + cyclic is h-valued: sum of N * coroot must vanish,
          // i.e. N_{ab}/|c|^2 = N_{bc}/|a|^2 = N_{ca}/|b|^2.
          ++rep.zero_sum;
          const long la = rs.length2(a), lb = rs.length2(b), lc = rs.length2(c);
          if (m_int(a, b) * la != m_int(b, c) * lc || m_int(b, c) * lb != m_int(c, a) * la)
            ++rep.violations;
          continue;
        }
        if (abc < 0) continue;
        ++rep.triples;
        long sum = 0;
        if (ab >= 0) sum += static_cast<long>(m_int(a, b)) * m_int(ab, c);
        if (bc >= 0) sum += static_cast<long>(m_int(b, c)) * m_int(bc, a);
        if (ca >= 0) sum += static_cast<long>(m_int(c, a)) * m_int(ca, b);
        if (sum != 0) ++rep.violations;
      }
    }
  return rep;
}

void StructureConstants::verify() const {
  const RootSystem& rs = *rs_;
  const int total = rs.num_roots();
  for (int i = 0; i < total; ++i)
    for (int j = 0; j < total; ++j) {
      const bool defined = rs.sum_index(i, j) >= 0;
      const int v = m_int(i, j);
      if (!defined) {
        if (v != 0) throw InvariantViolation("constant set for a non-root sum");
        continue;
      }
      if (v != -m_int(j, i)) throw InvariantViolation("antisymmetry fails");
      if (v != -m_int(rs.negate(i), rs.negate(j))) throw InvariantViolation("m_{-a,-b} = -m_{a,b} fails");
      if (std::abs(v) != rs.string_p(i, j) + 1) throw InvariantViolation("|m| != p+1");
    }
  auto rep = jacobi_slice(0, total);
  if (rep.violations)
    throw InvariantViolation("Jacobi identity fails on " + std::to_string(rep.violations) + " triples");
}

Rational StructureConstants::m(const Root& a, const Root& b) const {
  return m(rs_->index_or_throw(a), rs_->index_or_throw(b));
}

std::optional<std::pair<Rational, Root>> StructureConstants::bracket(const Root& a, const Root& b) const {
  int i = rs_->index_or_throw(a), j = rs_->index_or_throw(b);
  int s = rs_->sum_index(i, j);
  if (s < 0) return std::nullopt;
  return std::make_pair(m(i, j), rs_->root(s));
}

std::shared_ptr<const StructureConstants> build_structure_constants(std::shared_ptr<const RootSystem> rs) {
  return std::make_shared<const StructureConstants>(std::move(rs));
}

}  // namespace flagcx
