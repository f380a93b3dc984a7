#pragma once

#include <gmpxx.h>

#include <string>

namespace hrlab {

using Integer = mpz_class;
using Rational = mpq_class;

/// Canonical text form: "n" for integers, "n/d" otherwise.
inline std::string to_string(const Rational& q) { return q.get_str(); }

/// Parses "n", "-n" or "n/d"; the result is canonicalized.
Rational parse_rational(const std::string& text);

inline bool is_integer(const Rational& q) { return q.get_den() == 1; }

/// Gaussian rational re + im*i, the exact scalar for complexified field data.
struct GaussRational {
  Rational re;
  Rational im;

  GaussRational() = default;
  GaussRational(Rational r) : re(std::move(r)) {}
  GaussRational(Rational r, Rational i) : re(std::move(r)), im(std::move(i)) {}

  friend GaussRational operator+(const GaussRational& a, const GaussRational& b) {
    return {a.re + b.re, a.im + b.im};
  }
  friend GaussRational operator-(const GaussRational& a, const GaussRational& b) {
    return {a.re - b.re, a.im - b.im};
  }
  friend GaussRational operator-(const GaussRational& a) { return {-a.re, -a.im}; }
  friend GaussRational operator*(const GaussRational& a, const GaussRational& b) {
    return {a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re};
  }
  friend GaussRational operator/(const GaussRational& a, const GaussRational& b) {
    Rational n = b.re * b.re + b.im * b.im;
    return {(a.re * b.re + a.im * b.im) / n, (a.im * b.re - a.re * b.im) / n};
  }
  GaussRational& operator+=(const GaussRational& o) { return *this = *this + o; }
  GaussRational& operator-=(const GaussRational& o) { return *this = *this - o; }
  GaussRational& operator*=(const GaussRational& o) { return *this = *this * o; }
  friend bool operator==(const GaussRational& a, const GaussRational& b) {
    return a.re == b.re && a.im == b.im;
  }
  bool is_zero() const { return re == 0 && im == 0; }
};

}  // namespace hrlab
