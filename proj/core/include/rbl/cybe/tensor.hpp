#pragma once

#include <array>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <utility>

#include "rbl/lie/algebra.hpp"

namespace rbl {

/// r = sum coeffs[(i,j)] b_i (x) b_j; exact zeros are never stored.
struct Tensor2 {
  AlgebraPtr algebra;
  std::map<std::pair<std::size_t, std::size_t>, Scalar> coeffs;

  Tensor2() = default;
  explicit Tensor2(AlgebraPtr g) : algebra(std::move(g)) {}

  void add(std::size_t i, std::size_t j, const Scalar& c);
  Scalar at(std::size_t i, std::size_t j) const;
  bool is_zero(const ZeroTest& test) const;
  bool equals(const Tensor2& o, const ZeroTest& test) const;
  Tensor2 evaluate(const Bindings& b) const;

  Tensor2& operator+=(const Tensor2& o);
  Tensor2& operator-=(const Tensor2& o);
  Tensor2& operator*=(const Scalar& s);
  friend Tensor2 operator+(Tensor2 a, const Tensor2& b) { return a += b; }
  friend Tensor2 operator-(Tensor2 a, const Tensor2& b) { return a -= b; }
  friend Tensor2 operator*(Tensor2 a, const Scalar& s) { return a *= s; }

  /// e.g. "h⊗f* - f*⊗h" with coefficients in parentheses when not integers.
  std::string str() const;
};

struct Tensor3 {
  AlgebraPtr algebra;
  std::map<std::array<std::size_t, 3>, Scalar> coeffs;

  Tensor3() = default;
  explicit Tensor3(AlgebraPtr g) : algebra(std::move(g)) {}

  void add(std::size_t i, std::size_t j, std::size_t k, const Scalar& c);
  Scalar at(std::size_t i, std::size_t j, std::size_t k) const;
  bool is_zero(const ZeroTest& test) const;
  bool equals(const Tensor3& o, const ZeroTest& test) const;
  std::string str() const;
};

/// x (x) y.
Tensor2 outer(const Vector& x, const Vector& y);
Tensor2 transpose21(const Tensor2& r);

/// Parses "[e+(a)f]@e* - e*@[e+(a)f] + 2h@h*": each term is a signed pair of
/// factors separated by '@' (or '⊗'); a factor is a single scaled label or a
/// bracketed linear combination.
Tensor2 parse_tensor2(std::string_view text, const AlgebraPtr& g);

}  // namespace rbl
