#pragma once

#include <complex>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <variant>

#include "rbl/scalar/ratfun.hpp"

namespace rbl {

/// How a zero test is decided. Exact scalars ignore the tolerance; numeric
/// scalars require one.
class ZeroTest {
 public:
  static ZeroTest exact() { return ZeroTest(); }
  static ZeroTest within(double tol) { return ZeroTest(tol); }
  const std::optional<double>& tolerance() const { return tol_; }

 private:
  ZeroTest() = default;
  explicit ZeroTest(double tol) : tol_(tol) {}
  std::optional<double> tol_;
};

enum class Tag { Exact, Numeric };

/// Exact rational function or numeric complex value. Arithmetic never mixes
/// the two: doing so raises TagMismatch.
class Scalar {
 public:
  Scalar() : v_(RatFun()) {}
  Scalar(long c) : v_(RatFun(c)) {}                      // NOLINT(google-explicit-constructor)
  Scalar(Coeff c) : v_(RatFun(std::move(c))) {}           // NOLINT
  Scalar(Rational c) : v_(RatFun(Coeff(std::move(c)))) {}  // NOLINT
  Scalar(RatFun f) : v_(std::move(f)) {}                  // NOLINT
  Scalar(Polynomial p) : v_(RatFun(std::move(p))) {}      // NOLINT
  static Scalar numeric(std::complex<double> z) { return Scalar(z); }
  static Scalar var(std::string_view name) { return Scalar(RatFun::var(name)); }
  static Scalar i() { return Scalar(Coeff(GaussRational::i())); }
  static Scalar sqrt(std::uint32_t d) { return Scalar(Coeff::sqrt(d)); }

  Tag tag() const { return v_.index() == 0 ? Tag::Exact : Tag::Numeric; }
  bool is_exact() const { return tag() == Tag::Exact; }
  const RatFun& exact() const;
  std::complex<double> numeric_value() const;

  bool is_zero(const ZeroTest& test) const;
  /// Exact zero test; numeric values raise MissingTolerance.
  bool is_zero() const { return is_zero(ZeroTest::exact()); }
  bool is_one() const;
  bool equals(const Scalar& o, const ZeroTest& test) const { return (*this - o).is_zero(test); }

  /// Explicit conversion of a parameter-free exact value to the numeric tag.
  Scalar to_numeric() const;

  Scalar inverse() const;
  Scalar operator-() const;
  Scalar& operator+=(const Scalar& o);
  Scalar& operator-=(const Scalar& o);
  Scalar& operator*=(const Scalar& o);
  Scalar& operator/=(const Scalar& o);

  friend Scalar operator+(Scalar a, const Scalar& b) { return a += b; }
  friend Scalar operator-(Scalar a, const Scalar& b) { return a -= b; }
  friend Scalar operator*(Scalar a, const Scalar& b) { return a *= b; }
  friend Scalar operator/(Scalar a, const Scalar& b) { return a /= b; }
  /// Exact equality (numeric operands raise MissingTolerance; use equals()).
  friend bool operator==(const Scalar& a, const Scalar& b);
  friend bool operator!=(const Scalar& a, const Scalar& b) { return !(a == b); }

  std::string str() const;

 private:
  explicit Scalar(std::complex<double> z) : v_(z) {}
  std::variant<RatFun, std::complex<double>> v_;
};

/// Value bound to one parameter during evaluation.
using Binding = std::variant<Coeff, std::complex<double>>;
using Bindings = std::map<VarId, Binding>;

/// Binds every parameter of f; Exact when all bindings are exact, Numeric
/// as soon as one binding is a double.
Scalar evaluate(const RatFun& f, const Bindings& bindings);
Scalar evaluate(const Scalar& s, const Bindings& bindings);

/// Convenience: {{"a", Coeff(2)}, ...}.
Bindings make_bindings(std::initializer_list<std::pair<std::string_view, Binding>> items);

}  // namespace rbl
