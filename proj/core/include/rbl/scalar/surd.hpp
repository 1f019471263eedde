#pragma once

#include <complex>
#include <cstdint>
#include <string>

#include "rbl/scalar/rational.hpp"

namespace rbl {

/// u + v*sqrt(d) with u, v in Q(i) and d a square-free integer > 1.
///
/// Elements with v = 0 carry radicand 1 and are plain Gaussian rationals;
/// binary operations adopt the radicand of whichever operand has one. Two
/// operands with different nontrivial radicands raise MixedRadicands.
class SurdExt {
 public:
  SurdExt() = default;
  SurdExt(long v) : u_(v) {}                         // NOLINT(google-explicit-constructor)
  SurdExt(Rational v) : u_(std::move(v)) {}          // NOLINT
  SurdExt(GaussRational v) : u_(std::move(v)) {}     // NOLINT
  SurdExt(GaussRational u, GaussRational v, std::uint32_t radicand);

  /// sqrt(d), with square factors pulled out (sqrt(8) = 2*sqrt(2)).
  static SurdExt sqrt(std::uint32_t d);

  const GaussRational& u() const { return u_; }
  const GaussRational& v() const { return v_; }
  std::uint32_t radicand() const { return d_; }

  bool is_zero() const { return u_.is_zero() && v_.is_zero(); }
  bool is_one() const { return d_ == 1 && u_.is_one(); }
  bool is_rational() const { return d_ == 1 && u_.is_real(); }
  bool is_gauss() const { return d_ == 1; }

  /// Conjugate in the surd direction: u - v*sqrt(d).
  SurdExt surd_conj() const;
  /// Field norm u^2 - d*v^2 down to Q(i).
  GaussRational norm() const;
  SurdExt inverse() const;

  SurdExt operator-() const;
  SurdExt& operator+=(const SurdExt& o);
  SurdExt& operator-=(const SurdExt& o);
  SurdExt& operator*=(const SurdExt& o);
  SurdExt& operator/=(const SurdExt& o);

  friend SurdExt operator+(SurdExt a, const SurdExt& b) { return a += b; }
  friend SurdExt operator-(SurdExt a, const SurdExt& b) { return a -= b; }
  friend SurdExt operator*(SurdExt a, const SurdExt& b) { return a *= b; }
  friend SurdExt operator/(SurdExt a, const SurdExt& b) { return a /= b; }
  friend bool operator==(const SurdExt& a, const SurdExt& b) {
    return a.d_ == b.d_ && a.u_ == b.u_ && a.v_ == b.v_;
  }
  friend bool operator!=(const SurdExt& a, const SurdExt& b) { return !(a == b); }

  std::complex<double> to_complex() const;

  std::string str() const;
  /// True when str() must be parenthesized as a factor.
  bool is_compound() const;
  /// True when str() starts with a minus sign that belongs to the whole value.
  bool is_negative_atom() const;

 private:
  void normalize();
  std::uint32_t merged_radicand(const SurdExt& o) const;

  GaussRational u_;
  GaussRational v_;
  std::uint32_t d_ = 1;
};

using Coeff = SurdExt;

bool is_square_free(std::uint32_t d);

}  // namespace rbl
