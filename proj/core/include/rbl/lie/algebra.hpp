#pragma once

#include <array>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "rbl/lie/table.hpp"

namespace rbl {

class LieAlgebra;
using AlgebraPtr = std::shared_ptr<const LieAlgebra>;

/// Basis triple (and output component) where an identity fails.
struct TripleWitness {
  std::size_t i = 0, j = 0, k = 0;
  std::size_t component = 0;
  Scalar value;
};

std::optional<TripleWitness> antisymmetry_violation(const ProductTable& t, const ZeroTest& test);
std::optional<TripleWitness> jacobi_violation(const ProductTable& t, const ZeroTest& test);

struct JacobiResult {
  bool ok = true;
  std::optional<TripleWitness> witness;
};
/// Exhaustive Jacobi check over all basis triples of a raw bracket table.
JacobiResult check_jacobi(const ProductTable& t, const ZeroTest& test = ZeroTest::exact());

/// Lie algebra given by structure constants [b_i, b_j] = sum_k c_ij^k b_k.
/// Antisymmetry and Jacobi are verified when the algebra is created.
class LieAlgebra {
 public:
  /// Throws NotLieAlgebra with the failing triple.
  static AlgebraPtr create(ProductTable table, std::string name = {}, const ZeroTest& test = ZeroTest::exact());

  const std::string& name() const { return name_; }
  std::size_t dim() const { return table_.dim(); }
  const std::vector<std::string>& labels() const { return table_.labels; }
  const ProductTable& table() const { return table_; }
  const Scalar& c(std::size_t i, std::size_t j, std::size_t k) const { return table_.at(i, j, k); }
  bool is_exact() const { return table_.is_exact(); }
  /// UnknownId when absent.
  std::size_t index_of(std::string_view label) const;

  std::vector<Scalar> bracket(const std::vector<Scalar>& x, const std::vector<Scalar>& y) const {
    return table_.product(x, y);
  }
  /// Matrix of ad x on column coordinates: column j holds [x, b_j].
  Matrix ad(const std::vector<Scalar>& x) const;
  Matrix ad_basis(std::size_t i) const;

  /// Same algebra in the basis e'_i = sum_j N(i,j) b_j.
  AlgebraPtr rebased(const Matrix& n, std::vector<std::string> labels, const ZeroTest& test = ZeroTest::exact()) const;
  AlgebraPtr to_numeric(const ZeroTest& test) const;

 private:
  LieAlgebra(ProductTable table, std::string name) : table_(std::move(table)), name_(std::move(name)) {}
  ProductTable table_;
  std::string name_;
};

/// True when both are the same object or have identical labels and constants.
bool same_algebra(const LieAlgebra& a, const LieAlgebra& b);

/// sl(2) in the Cartan-Weyl basis e, f, h.
AlgebraPtr sl2();
AlgebraPtr abelian(std::vector<std::string> labels, std::string name = "abelian");

/// Element of a Lie algebra in coordinates.
struct Vector {
  AlgebraPtr algebra;
  std::vector<Scalar> coords;

  Vector() = default;
  Vector(AlgebraPtr g, std::vector<Scalar> x);
  static Vector basis(AlgebraPtr g, std::size_t i);
  static Vector zero(AlgebraPtr g);

  Vector& operator+=(const Vector& o);
  Vector& operator-=(const Vector& o);
  Vector& operator*=(const Scalar& s);
  friend Vector operator+(Vector a, const Vector& b) { return a += b; }
  friend Vector operator-(Vector a, const Vector& b) { return a -= b; }
  friend Vector operator*(Vector a, const Scalar& s) { return a *= s; }
  friend Vector operator*(const Scalar& s, Vector a) { return a *= s; }

  bool equals(const Vector& o, const ZeroTest& test) const;
  bool is_zero(const ZeroTest& test) const;
  /// Linear combination text, e.g. "2e+h".
  std::string str() const;
};

/// AlgebraMismatch unless both vectors live in the same algebra.
void require_same_algebra(const Vector& x, const Vector& y);

Vector bracket(const Vector& x, const Vector& y);
/// K(x, y) = tr(ad x ad y).
Scalar killing_form(const Vector& x, const Vector& y);

}  // namespace rbl
