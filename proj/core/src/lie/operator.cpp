#include "rbl/lie/operator.hpp"

#include "rbl/scalar/error.hpp"

namespace rbl {

OperatorMatrix::OperatorMatrix(AlgebraPtr g, Matrix matrix) : algebra(std::move(g)), m(std::move(matrix)) {
  if (!m.is_square() || m.rows() != algebra->dim()) {
    throw Error(ErrorKind::DimensionMismatch, "operator matrix does not match algebra dimension");
  }
}

Vector OperatorMatrix::apply(const Vector& x) const {
  if (!same_algebra(*x.algebra, *algebra)) throw Error(ErrorKind::AlgebraMismatch, "operator applied to foreign vector");
  return Vector(algebra, apply(x.coords));
}

OperatorMatrix change_of_basis(const OperatorMatrix& p, const Matrix& n, std::vector<std::string> labels,
                               const ZeroTest& test) {
  if (labels.empty()) {
    for (std::size_t i = 0; i < p.dim(); ++i) labels.push_back("e" + std::to_string(i + 1));
  }
  Matrix inv = n.inverse();
  AlgebraPtr g = p.algebra->rebased(n, std::move(labels), test);
  return OperatorMatrix(std::move(g), n * p.m * inv);
}

}  // namespace rbl
