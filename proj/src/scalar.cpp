#include "flagcx/scalar.hpp"

#include <cctype>

#include "flagcx/errors.hpp"

namespace flagcx {

Rational parse_rational(std::string_view text, int column) {
  std::size_t i = 0;
  auto fail = [&](const std::string& why) {
    throw ParseError("bad rational '" + std::string(text) + "': " + why, 1,
                     column + static_cast<int>(i));
  };
  if (text.empty()) fail("empty");
  std::string num;
  std::string den = "1";
  if (text[i] == '-' || text[i] == '+') num += text[i++];
  std::size_t start = i;
  while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) num += text[i++];
  if (i == start) fail("expected digits");
  if (i < text.size()) {
    if (text[i] != '/') fail("unexpected character");
    ++i;
    den.clear();
    start = i;
    while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) den += text[i++];
    if (i == start) fail("expected denominator digits");
    if (i < text.size()) fail("trailing characters");
  }
  mpz_class d(den);
  if (d == 0) {
    i = start;
    fail("zero denominator");
  }
  Rational q(mpz_class(num), d);
  q.canonicalize();
  return q;
}

std::string to_string(const Rational& q) { return q.get_str(); }

GQ& GQ::operator/=(const GQ& o) {
  Rational n = o.norm2();
  if (sgn(n) == 0) throw std::domain_error("GQ division by zero");
  GQ t = *this * o.conj();
  re = t.re / n;
  im = t.im / n;
  return *this;
}

std::string to_string(const GQ& z) {
  if (sgn(z.im) == 0) return to_string(z.re);
  std::string s = sgn(z.re) == 0 ? "" : to_string(z.re) + (sgn(z.im) > 0 ? "+" : "");
  return s + to_string(z.im) + "i";
}

}  // namespace flagcx
