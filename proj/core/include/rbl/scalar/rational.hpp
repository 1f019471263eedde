#pragma once

#include <gmpxx.h>

#include <complex>
#include <string>
#include <string_view>

namespace rbl {

/// Arbitrary-precision rational, always canonical (gcd 1, positive denominator).
using Rational = mpq_class;
using Integer = mpz_class;

Rational parse_rational(std::string_view text);
/// Canonical n/d (mpq_class's two-argument constructor does not reduce).
Rational make_rational(long n, long d);
std::string to_string(const Rational& q);

/// Element re + im*i of Q(i).
class GaussRational {
 public:
  GaussRational() = default;
  GaussRational(long v) : re_(v) {}  // NOLINT(google-explicit-constructor)
  GaussRational(Rational re) : re_(std::move(re)) {}  // NOLINT
  GaussRational(Rational re, Rational im) : re_(std::move(re)), im_(std::move(im)) {}

  static GaussRational i() { return {Rational(0), Rational(1)}; }

  const Rational& re() const { return re_; }
  const Rational& im() const { return im_; }

  bool is_zero() const { return sgn(re_) == 0 && sgn(im_) == 0; }
  bool is_real() const { return sgn(im_) == 0; }
  bool is_one() const { return re_ == 1 && sgn(im_) == 0; }

  GaussRational conj() const { return {re_, -im_}; }
  /// |z|^2 = re^2 + im^2.
  Rational norm2() const { return re_ * re_ + im_ * im_; }
  GaussRational inverse() const;

  GaussRational operator-() const { return {-re_, -im_}; }
  GaussRational& operator+=(const GaussRational& o);
  GaussRational& operator-=(const GaussRational& o);
  GaussRational& operator*=(const GaussRational& o);
  GaussRational& operator/=(const GaussRational& o);

  friend GaussRational operator+(GaussRational a, const GaussRational& b) { return a += b; }
  friend GaussRational operator-(GaussRational a, const GaussRational& b) { return a -= b; }
  friend GaussRational operator*(GaussRational a, const GaussRational& b) { return a *= b; }
  friend GaussRational operator/(GaussRational a, const GaussRational& b) { return a /= b; }
  friend bool operator==(const GaussRational& a, const GaussRational& b) {
    return a.re_ == b.re_ && a.im_ == b.im_;
  }
  friend bool operator!=(const GaussRational& a, const GaussRational& b) { return !(a == b); }

  std::complex<double> to_complex() const { return {re_.get_d(), im_.get_d()}; }

  /// Canonical text "p/q", "r/s*i" or "p/q+r/s*i".
  std::string str() const;
  /// True when str() needs parentheses to be used as a factor.
  bool is_compound() const { return sgn(re_) != 0 && sgn(im_) != 0; }

 private:
  Rational re_{0};
  Rational im_{0};
};

}  // namespace rbl
