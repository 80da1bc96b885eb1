#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace flagcx {

using Rational = mpq_class;

// Accepts "p", "-p", "p/q"; result is canonical. Throws ParseError.
Rational parse_rational(std::string_view text, int column = 1);
std::string to_string(const Rational& q);

inline bool is_zero(const Rational& q) { return sgn(q) == 0; }

// Gaussian rational re + i*im.
struct GQ {
  Rational re;
  Rational im;

  GQ() = default;
  GQ(const Rational& r) : re(r) {}  // NOLINT: implicit real embedding
  GQ(long r) : re(r) {}             // NOLINT
  GQ(const Rational& r, const Rational& i) : re(r), im(i) {}

  static GQ i() { return GQ(0, 1); }

  bool is_zero() const { return sgn(re) == 0 && sgn(im) == 0; }
  GQ conj() const { return GQ(re, -im); }
  Rational norm2() const { return re * re + im * im; }

  GQ& operator+=(const GQ& o) {
    re += o.re;
    im += o.im;
    return *this;
  }
  GQ& operator-=(const GQ& o) {
    re -= o.re;
    im -= o.im;
    return *this;
  }
  GQ& operator*=(const GQ& o) {
    Rational r = re * o.re - im * o.im;
    im = re * o.im + im * o.re;
    re = std::move(r);
    return *this;
  }
  GQ& operator*=(const Rational& s) {
    re *= s;
    im *= s;
    return *this;
  }
  GQ& operator/=(const GQ& o);

  friend GQ operator+(GQ a, const GQ& b) { return a += b; }
  friend GQ operator-(GQ a, const GQ& b) { return a -= b; }
  friend GQ operator*(GQ a, const GQ& b) { return a *= b; }
  friend GQ operator*(GQ a, const Rational& s) { return a *= s; }
  friend GQ operator*(const Rational& s, GQ a) { return a *= s; }
  friend GQ operator/(GQ a, const GQ& b) { return a /= b; }
  friend GQ operator-(const GQ& a) { return GQ(-a.re, -a.im); }
  friend bool operator==(const GQ& a, const GQ& b) { return a.re == b.re && a.im == b.im; }
  friend bool operator!=(const GQ& a, const GQ& b) { return !(a == b); }
};

inline bool is_zero(const GQ& z) { return z.is_zero(); }
std::string to_string(const GQ& z);

}  // namespace flagcx
