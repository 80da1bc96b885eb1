#include "flagcx/matrix.hpp"

namespace flagcx {

Rational determinant(QMatrix g) {
  if (g.rows() != g.cols()) throw std::invalid_argument("determinant of non-square matrix");
  const std::size_t n = g.rows();
  Rational d = 1;
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t p = c;
    while (p < n && is_zero(g(p, c))) ++p;
    if (p == n) return 0;
    if (p != c) {
      for (std::size_t cc = 0; cc < n; ++cc) std::swap(g(p, cc), g(c, cc));
      d = -d;
    }
    d *= g(c, c);
    for (std::size_t r = c + 1; r < n; ++r) {
      if (is_zero(g(r, c))) continue;
      Rational f = g(r, c) / g(c, c);
      for (std::size_t cc = c; cc < n; ++cc) g(r, cc) -= f * g(c, cc);
    }
  }
  return d;
}

// Elimination without pivoting: the k-th pivot is minor_k / minor_{k-1}.
// Once a pivot vanishes the remaining minors are taken directly.
std::vector<Rational> leading_principal_minors(const QMatrix& m) {
  if (m.rows() != m.cols()) throw std::invalid_argument("minors of non-square matrix");
  const std::size_t n = m.rows();
  std::vector<Rational> minors;
  minors.reserve(n);
  QMatrix a = m;
  Rational det = 1;
  for (std::size_t k = 0; k < n; ++k) {
    if (is_zero(a(k, k))) {
      for (std::size_t j = k; j < n; ++j) minors.push_back(determinant(m.block(0, 0, j + 1, j + 1)));
      return minors;
    }
    det *= a(k, k);
    minors.push_back(det);
    for (std::size_t r = k + 1; r < n; ++r) {
      if (is_zero(a(r, k))) continue;
      Rational f = a(r, k) / a(k, k);
      for (std::size_t c = k; c < n; ++c) a(r, c) -= f * a(k, c);
    }
  }
  return minors;
}

bool is_positive_definite(const QMatrix& m) {
  for (const auto& d : leading_principal_minors(m))
    if (sgn(d) <= 0) return false;
  return true;
}

}  // namespace flagcx
