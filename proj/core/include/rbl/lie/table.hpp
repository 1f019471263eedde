#pragma once

#include <cstddef>
#include <string>
#include <utility>
#include <vector>

#include "rbl/lie/matrix.hpp"

namespace rbl {

/// Bilinear product on a based vector space: b_i * b_j = sum_k c(i,j,k) b_k.
/// No symmetry is assumed; Lie brackets and pre-Lie products both use it.
struct ProductTable {
  std::vector<std::string> labels;
  std::vector<Scalar> c;  // (i*n + j)*n + k

  ProductTable() = default;
  explicit ProductTable(std::vector<std::string> basis_labels);

  std::size_t dim() const { return labels.size(); }
  Scalar& at(std::size_t i, std::size_t j, std::size_t k) { return c[(i * dim() + j) * dim() + k]; }
  const Scalar& at(std::size_t i, std::size_t j, std::size_t k) const { return c[(i * dim() + j) * dim() + k]; }

  /// Product of two coordinate vectors.
  std::vector<Scalar> product(const std::vector<Scalar>& x, const std::vector<Scalar>& y) const;
  std::vector<Scalar> product_basis(std::size_t i, std::size_t j) const;

  bool is_exact() const;
  ProductTable to_numeric() const;
  ProductTable evaluate(const Bindings& b) const;
  /// Constants in the basis e'_i = sum_j N(i,j) b_j.
  ProductTable rebased(const Matrix& n, std::vector<std::string> new_labels) const;
};

/// Formal linear combination sum c_k b_k, sorted by basis index, zeros dropped.
struct LinComb {
  std::vector<std::pair<std::size_t, Scalar>> terms;

  bool empty() const { return terms.empty(); }
  bool equals(const LinComb& o, const ZeroTest& test) const;
  /// "2e", "-e3*", "e1-e2", "(1/2)h", "0".
  std::string str(const std::vector<std::string>& labels) const;
};

/// Characteristic matrix: entry (i,j) is the expansion of b_i * b_j.
struct FormalMatrix {
  std::vector<std::string> labels;
  std::vector<LinComb> entries;

  std::size_t dim() const { return labels.size(); }
  const LinComb& at(std::size_t i, std::size_t j) const { return entries[i * dim() + j]; }
  LinComb& at(std::size_t i, std::size_t j) { return entries[i * dim() + j]; }
  bool equals(const FormalMatrix& o, const ZeroTest& test) const;
  /// Positions where the two matrices differ.
  std::vector<std::pair<std::size_t, std::size_t>> differences(const FormalMatrix& o, const ZeroTest& test) const;
  std::string str() const;
};

FormalMatrix characteristic_matrix(const ProductTable& t, const ZeroTest& test = ZeroTest::exact());

/// Parses the printed form of a linear combination, e.g. "-e1-e2", "2f",
/// "(a)e3*", against the given labels (longest label wins).
LinComb parse_lincomb(std::string_view text, const std::vector<std::string>& labels);
/// Row-major list of entry strings.
FormalMatrix parse_formal_matrix(const std::vector<std::vector<std::string>>& rows,
                                 const std::vector<std::string>& labels);

}  // namespace rbl
