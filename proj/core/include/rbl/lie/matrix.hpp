#pragma once

#include <cstddef>
#include <initializer_list>
#include <string>
#include <vector>

#include "rbl/scalar/scalar.hpp"

namespace rbl {

/// Dense row-major matrix of Scalars.
class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}
  Matrix(std::initializer_list<std::initializer_list<Scalar>> rows);
  static Matrix from_rows(const std::vector<std::vector<Scalar>>& rows);
  static Matrix identity(std::size_t n);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  bool is_square() const { return rows_ == cols_; }
  Scalar& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  const Scalar& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }
  std::vector<Scalar> row(std::size_t i) const;

  Matrix transpose() const;
  /// Gauss-Jordan inverse; SingularBasis when not invertible.
  Matrix inverse() const;
  bool is_zero(const ZeroTest& test) const;
  bool equals(const Matrix& o, const ZeroTest& test) const;
  bool is_exact() const;
  Matrix to_numeric() const;
  Matrix evaluate(const Bindings& b) const;

  /// Basis of {x : M x = 0}; each vector's first nonzero coordinate is 1.
  std::vector<std::vector<Scalar>> nullspace(const ZeroTest& test = ZeroTest::exact()) const;

  Matrix operator-() const;
  Matrix& operator+=(const Matrix& o);
  Matrix& operator-=(const Matrix& o);
  Matrix& operator*=(const Scalar& s);
  friend Matrix operator+(Matrix a, const Matrix& b) { return a += b; }
  friend Matrix operator-(Matrix a, const Matrix& b) { return a -= b; }
  friend Matrix operator*(Matrix a, const Scalar& s) { return a *= s; }
  friend Matrix operator*(const Matrix& a, const Matrix& b);
  /// Exact structural equality.
  friend bool operator==(const Matrix& a, const Matrix& b);

  /// Column vector product M*x.
  std::vector<Scalar> apply(const std::vector<Scalar>& x) const;
  /// Row vector product x^T*M.
  std::vector<Scalar> apply_row(const std::vector<Scalar>& x) const;

  std::string str() const;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Scalar> data_;
};

}  // namespace rbl
