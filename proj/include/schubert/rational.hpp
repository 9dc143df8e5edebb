#pragma once

#include <gmpxx.h>

#include <complex>
#include <string>
#include <string_view>

namespace schubert {

using Rational = mpq_class;
using Complex = std::complex<double>;

/// Parses "p/q", "p", or a decimal such as "-0.25" into a canonical rational.
Rational parse_rational(std::string_view text);
std::string to_string(const Rational& q);

/// Gaussian rationals. Only the operations the exact certification path
/// needs are provided.
struct ComplexRational {
  Rational re;
  Rational im;

  ComplexRational() = default;
  ComplexRational(Rational r) : re(std::move(r)), im(0) {}  // NOLINT
  ComplexRational(Rational r, Rational i) : re(std::move(r)), im(std::move(i)) {}
  ComplexRational(int r) : re(r), im(0) {}  // NOLINT

  bool is_zero() const { return sgn(re) == 0 && sgn(im) == 0; }
  ComplexRational conj() const { return {re, -im}; }
  /// |z|^2, exact.
  Rational norm2() const { return re * re + im * im; }

  ComplexRational& operator+=(const ComplexRational& o) {
    re += o.re;
    im += o.im;
    return *this;
  }
  ComplexRational& operator-=(const ComplexRational& o) {
    re -= o.re;
    im -= o.im;
    return *this;
  }
  ComplexRational& operator*=(const ComplexRational& o) {
    Rational r = re * o.re - im * o.im;
    im = re * o.im + im * o.re;
    re = std::move(r);
    return *this;
  }
  ComplexRational& operator/=(const ComplexRational& o) {
    Rational d = o.norm2();
    Rational r = (re * o.re + im * o.im) / d;
    im = (im * o.re - re * o.im) / d;
    re = std::move(r);
    return *this;
  }
  friend ComplexRational operator+(ComplexRational a, const ComplexRational& b) { return a += b; }
  friend ComplexRational operator-(ComplexRational a, const ComplexRational& b) { return a -= b; }
  friend ComplexRational operator*(ComplexRational a, const ComplexRational& b) { return a *= b; }
  friend ComplexRational operator/(ComplexRational a, const ComplexRational& b) { return a /= b; }
  friend ComplexRational operator-(const ComplexRational& a) { return {-a.re, -a.im}; }
  friend bool operator==(const ComplexRational& a, const ComplexRational& b) {
    return a.re == b.re && a.im == b.im;
  }
};

/// Smallest-effort rational upper bound u >= q^(1/p) for q >= 0, p >= 1,
/// tight to roughly `bits` relative bits. Newton's iteration started above
/// the root stays above it (weighted AM-GM), and every rounding is upward.
Rational root_upper(const Rational& q, unsigned p, unsigned bits = 64);

/// Upper bound for |z| = sqrt(re^2 + im^2).
inline Rational abs_upper(const ComplexRational& z) { return root_upper(z.norm2(), 2); }

// Field traits used by the generic linear algebra and polynomial code.
inline bool is_zero(const Rational& q) { return sgn(q) == 0; }
inline bool is_zero(const Complex& z) { return z == Complex(0.0, 0.0); }
inline bool is_zero(const ComplexRational& z) { return z.is_zero(); }

}  // namespace schubert
