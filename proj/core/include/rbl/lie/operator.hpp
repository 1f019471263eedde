#pragma once

#include <string>
#include <vector>

#include "rbl/lie/algebra.hpp"

namespace rbl {

/// Linear operator in row convention: P(b_i) = sum_j m(i,j) b_j.
struct OperatorMatrix {
  AlgebraPtr algebra;
  Matrix m;

  OperatorMatrix() = default;
  OperatorMatrix(AlgebraPtr g, Matrix matrix);

  std::size_t dim() const { return m.rows(); }
  /// Coordinates of P(x).
  std::vector<Scalar> apply(const std::vector<Scalar>& x) const { return m.apply_row(x); }
  Vector apply(const Vector& x) const;
  OperatorMatrix evaluate(const Bindings& b) const { return {algebra, m.evaluate(b)}; }
};

/// The operator in the basis e'_i = sum_j N(i,j) b_j: matrix N*M*N^{-1}
/// over the correspondingly rebased algebra.
OperatorMatrix change_of_basis(const OperatorMatrix& p, const Matrix& n, std::vector<std::string> labels = {},
                               const ZeroTest& test = ZeroTest::exact());

}  // namespace rbl
