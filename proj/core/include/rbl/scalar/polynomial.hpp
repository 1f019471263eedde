#pragma once

#include <array>
#include <compare>
#include <complex>
#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "rbl/scalar/surd.hpp"
#include "rbl/scalar/variables.hpp"

namespace rbl {

/// Exponent vector indexed by registered variable id. The defaulted
/// three-way comparison is the lex order a > b > k > ... used everywhere.
struct Monomial {
  std::array<std::uint8_t, kMaxVariables> exp{};

  static Monomial of(VarId v, unsigned e = 1);

  bool is_one() const;
  unsigned degree_in(VarId v) const { return exp[v]; }
  unsigned total_degree() const;
  bool divides(const Monomial& other) const;
  std::uint64_t var_mask() const;

  Monomial operator*(const Monomial& o) const;
  /// Requires divides(o) to hold for the divisor.
  Monomial operator/(const Monomial& o) const;
  Monomial gcd(const Monomial& o) const;

  friend auto operator<=>(const Monomial&, const Monomial&) = default;
  friend bool operator==(const Monomial&, const Monomial&) = default;
};

/// Sparse multivariate polynomial over Q(i)[sqrt d], terms kept in strictly
/// decreasing lex order with no zero coefficients.
class Polynomial {
 public:
  struct Term {
    Monomial mono;
    Coeff coeff;
    friend bool operator==(const Term&, const Term&) = default;
  };

  Polynomial() = default;
  Polynomial(Coeff c);  // NOLINT(google-explicit-constructor)
  Polynomial(long c) : Polynomial(Coeff(c)) {}  // NOLINT

  static Polynomial var(VarId v);
  static Polynomial term(Monomial m, Coeff c);
  /// Builds from unsorted terms, merging duplicates.
  static Polynomial from_terms(std::vector<Term> terms);

  const std::vector<Term>& terms() const { return terms_; }
  std::size_t size() const { return terms_.size(); }
  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const { return terms_.empty() || (terms_.size() == 1 && terms_[0].mono.is_one()); }
  bool is_one() const { return is_constant() && !terms_.empty() && terms_[0].coeff.is_one(); }
  /// Constant term value; zero polynomial gives 0.
  Coeff constant_value() const;

  const Term& leading() const { return terms_.front(); }
  const Coeff& leading_coeff() const { return terms_.front().coeff; }

  unsigned degree_in(VarId v) const;
  bool contains(VarId v) const { return degree_in(v) > 0; }
  std::uint64_t var_mask() const;
  /// Coefficient of v^d, as a polynomial in the remaining variables.
  Polynomial coefficient_in(VarId v, unsigned d) const;

  Polynomial monic() const;
  /// Exact quotient when divisor divides *this, otherwise nullopt.
  std::optional<Polynomial> divide_exact(const Polynomial& divisor) const;

  Polynomial operator-() const;
  Polynomial& operator+=(const Polynomial& o);
  Polynomial& operator-=(const Polynomial& o);
  Polynomial& operator*=(const Polynomial& o);
  Polynomial& operator*=(const Coeff& c);

  friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
  friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
  friend Polynomial operator*(const Polynomial& a, const Polynomial& b);
  friend Polynomial operator*(Polynomial a, const Coeff& c) { return a *= c; }
  friend bool operator==(const Polynomial& a, const Polynomial& b) { return a.terms_ == b.terms_; }
  friend bool operator!=(const Polynomial& a, const Polynomial& b) { return !(a == b); }

  /// Evaluates with every occurring variable supplied by `value`.
  Coeff evaluate(const std::function<Coeff(VarId)>& value) const;
  std::complex<double> evaluate_numeric(const std::function<std::complex<double>(VarId)>& value) const;

  /// Canonical text, e.g. "16*a*b^3+1".
  std::string str() const;

 private:
  std::vector<Term> terms_;
};

/// Monic greatest common divisor (zero only when both inputs are zero).
Polynomial gcd(const Polynomial& a, const Polynomial& b);

}  // namespace rbl
