#pragma once

#include <complex>
#include <map>
#include <string>
#include <string_view>

#include "rbl/scalar/polynomial.hpp"

namespace rbl {

/// Quotient num/den of polynomials, kept reduced: gcd(num, den) = 1 and the
/// lex-leading coefficient of den is 1. Zero is 0/1.
class RatFun {
 public:
  RatFun() : den_(1) {}
  RatFun(long c) : num_(c), den_(1) {}                  // NOLINT(google-explicit-constructor)
  RatFun(Coeff c) : num_(std::move(c)), den_(1) {}       // NOLINT
  RatFun(Polynomial num) : num_(std::move(num)), den_(1) {}  // NOLINT
  RatFun(Polynomial num, Polynomial den);

  static RatFun var(VarId v) { return RatFun(Polynomial::var(v)); }
  static RatFun var(std::string_view name) { return var(variable(name)); }

  const Polynomial& num() const { return num_; }
  const Polynomial& den() const { return den_; }

  bool is_zero() const { return num_.is_zero(); }
  bool is_one() const { return num_.is_one() && den_.is_one(); }
  bool is_constant() const { return num_.is_constant() && den_.is_constant(); }
  bool is_polynomial() const { return den_.is_one(); }
  /// Constant value; only meaningful when is_constant().
  Coeff constant_value() const { return num_.constant_value(); }
  std::uint64_t var_mask() const { return num_.var_mask() | den_.var_mask(); }

  RatFun inverse() const;
  RatFun operator-() const;
  RatFun& operator+=(const RatFun& o);
  RatFun& operator-=(const RatFun& o);
  RatFun& operator*=(const RatFun& o);
  RatFun& operator/=(const RatFun& o);

  friend RatFun operator+(RatFun a, const RatFun& b) { return a += b; }
  friend RatFun operator-(RatFun a, const RatFun& b) { return a -= b; }
  friend RatFun operator*(RatFun a, const RatFun& b) { return a *= b; }
  friend RatFun operator/(RatFun a, const RatFun& b) { return a /= b; }
  friend bool operator==(const RatFun& a, const RatFun& b) { return a.num_ == b.num_ && a.den_ == b.den_; }
  friend bool operator!=(const RatFun& a, const RatFun& b) { return !(a == b); }

  /// Exact evaluation; throws UnboundParameter / PoleAtBinding.
  Coeff evaluate(const std::map<VarId, Coeff>& bindings) const;
  std::complex<double> evaluate_numeric(const std::map<VarId, std::complex<double>>& bindings) const;
  /// Replaces each bound variable by a rational function.
  RatFun substitute(const std::map<VarId, RatFun>& subst) const;

  /// "num" or "num | den".
  std::string str() const;

 private:
  struct Raw {};
  RatFun(Raw, Polynomial num, Polynomial den) : num_(std::move(num)), den_(std::move(den)) {}
  void normalize();

  Polynomial num_;
  Polynomial den_;
};

/// True iff f is the zero function.
inline bool is_identically_zero(const RatFun& f) { return f.is_zero(); }

}  // namespace rbl
