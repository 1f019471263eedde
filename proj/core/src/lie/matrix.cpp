#include "rbl/lie/matrix.hpp"

#include <cmath>

#include "rbl/scalar/error.hpp"

namespace rbl {

namespace {

void require_same_shape(const Matrix& a, const Matrix& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) throw Error(ErrorKind::DimensionMismatch, "matrix shapes differ");
}

}  // namespace

Matrix::Matrix(std::initializer_list<std::initializer_list<Scalar>> rows) {
  rows_ = rows.size();
  cols_ = rows_ ? rows.begin()->size() : 0;
  data_.reserve(rows_ * cols_);
  for (const auto& r : rows) {
    if (r.size() != cols_) throw Error(ErrorKind::DimensionMismatch, "ragged matrix literal");
    data_.insert(data_.end(), r.begin(), r.end());
  }
}

Matrix Matrix::from_rows(const std::vector<std::vector<Scalar>>& rows) {
  Matrix m(rows.size(), rows.empty() ? 0 : rows[0].size());
  for (std::size_t i = 0; i < m.rows_; ++i) {
    if (rows[i].size() != m.cols_) throw Error(ErrorKind::DimensionMismatch, "ragged matrix rows");
    for (std::size_t j = 0; j < m.cols_; ++j) m(i, j) = rows[i][j];
  }
  return m;
}

Matrix Matrix::identity(std::size_t n) {
  Matrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = Scalar(1);
  return m;
}

std::vector<Scalar> Matrix::row(std::size_t i) const {
  return {data_.begin() + static_cast<std::ptrdiff_t>(i * cols_),
          data_.begin() + static_cast<std::ptrdiff_t>((i + 1) * cols_)};
}

Matrix Matrix::transpose() const {
  Matrix t(cols_, rows_);
  for (std::size_t i = 0; i < rows_; ++i) {
    for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
  }
  return t;
}

Matrix Matrix::inverse() const {
  if (!is_square()) throw Error(ErrorKind::DimensionMismatch, "inverse of non-square matrix");
  const std::size_t n = rows_;
  Matrix a = *this;
  Matrix inv = identity(n);
  if (!is_exact()) inv = inv.to_numeric();
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t pivot = n;
    if (a(col, col).is_exact()) {
      for (std::size_t r = col; r < n; ++r) {
        if (!a(r, col).is_zero()) {
          pivot = r;
          break;
        }
      }
    } else {
      double best = 0;
      for (std::size_t r = col; r < n; ++r) {
        double mag = std::abs(a(r, col).numeric_value());
        if (mag > best) {
          best = mag;
          pivot = r;
        }
      }
    }
    if (pivot == n) throw Error(ErrorKind::SingularBasis, "matrix is singular");
    if (pivot != col) {
      for (std::size_t j = 0; j < n; ++j) {
        std::swap(a(col, j), a(pivot, j));
        std::swap(inv(col, j), inv(pivot, j));
      }
    }
    Scalar p = a(col, col).inverse();
    for (std::size_t j = 0; j < n; ++j) {
      a(col, j) *= p;
      inv(col, j) *= p;
    }
    for (std::size_t r = 0; r < n; ++r) {
      if (r == col) continue;
      Scalar f = a(r, col);
      if (f.is_exact() && f.is_zero()) continue;
      for (std::size_t j = 0; j < n; ++j) {
        a(r, j) -= f * a(col, j);
        inv(r, j) -= f * inv(col, j);
      }
    }
  }
  return inv;
}

std::vector<std::vector<Scalar>> Matrix::nullspace(const ZeroTest& test) const {
  Matrix a = *this;
  const bool exact = is_exact();
  std::vector<std::size_t> pivot_cols;
  std::size_t row = 0;
  for (std::size_t col = 0; col < cols_ && row < rows_; ++col) {
    std::size_t pivot = rows_;
    for (std::size_t r = row; r < rows_; ++r) {
      if (!a(r, col).is_zero(test)) {
        pivot = r;
        break;
      }
    }
    if (pivot == rows_) continue;
    for (std::size_t j = 0; j < cols_; ++j) std::swap(a(row, j), a(pivot, j));
    Scalar p = a(row, col).inverse();
    for (std::size_t j = 0; j < cols_; ++j) a(row, j) *= p;
    for (std::size_t r = 0; r < rows_; ++r) {
      if (r == row || a(r, col).is_zero(test)) continue;
      Scalar f = a(r, col);
      for (std::size_t j = 0; j < cols_; ++j) a(r, j) -= f * a(row, j);
    }
    pivot_cols.push_back(col);
    ++row;
  }
  std::vector<std::vector<Scalar>> basis;
  std::size_t next_pivot = 0;
  for (std::size_t free = 0; free < cols_; ++free) {
    if (next_pivot < pivot_cols.size() && pivot_cols[next_pivot] == free) {
      ++next_pivot;
      continue;
    }
    std::vector<Scalar> v(cols_, exact ? Scalar(0) : Scalar::numeric(0.0));
    v[free] = exact ? Scalar(1) : Scalar::numeric(1.0);
    for (std::size_t k = 0; k < pivot_cols.size(); ++k) v[pivot_cols[k]] = -a(k, free);
    for (const auto& s : v) {
      if (!s.is_zero(test)) {
        Scalar lead = s.inverse();
        for (auto& x : v) x *= lead;
        break;
      }
    }
    basis.push_back(std::move(v));
  }
  return basis;
}

bool Matrix::is_zero(const ZeroTest& test) const {
  for (const auto& s : data_) {
    if (!s.is_zero(test)) return false;
  }
  return true;
}

bool Matrix::equals(const Matrix& o, const ZeroTest& test) const {
  require_same_shape(*this, o);
  for (std::size_t k = 0; k < data_.size(); ++k) {
    if (!data_[k].equals(o.data_[k], test)) return false;
  }
  return true;
}

bool Matrix::is_exact() const {
  for (const auto& s : data_) {
    if (!s.is_exact()) return false;
  }
  return true;
}

Matrix Matrix::to_numeric() const {
  Matrix m = *this;
  for (auto& s : m.data_) s = s.to_numeric();
  return m;
}

Matrix Matrix::evaluate(const Bindings& b) const {
  Matrix m = *this;
  for (auto& s : m.data_) s = rbl::evaluate(s, b);
  return m;
}

Matrix Matrix::operator-() const {
  Matrix m = *this;
  for (auto& s : m.data_) s = -s;
  return m;
}

Matrix& Matrix::operator+=(const Matrix& o) {
  require_same_shape(*this, o);
  for (std::size_t k = 0; k < data_.size(); ++k) data_[k] += o.data_[k];
  return *this;
}

Matrix& Matrix::operator-=(const Matrix& o) {
  require_same_shape(*this, o);
  for (std::size_t k = 0; k < data_.size(); ++k) data_[k] -= o.data_[k];
  return *this;
}

Matrix& Matrix::operator*=(const Scalar& s) {
  for (auto& x : data_) x *= s;
  return *this;
}

Matrix operator*(const Matrix& a, const Matrix& b) {
  if (a.cols_ != b.rows_) throw Error(ErrorKind::DimensionMismatch, "matrix product shape");
  Matrix c(a.rows_, b.cols_);
  const bool exact = a.is_exact() && b.is_exact();
  for (std::size_t i = 0; i < a.rows_; ++i) {
    for (std::size_t j = 0; j < b.cols_; ++j) {
      bool first = true;
      for (std::size_t k = 0; k < a.cols_; ++k) {
        const Scalar& x = a(i, k);
        if (x.is_exact() && x.is_zero()) continue;
        const Scalar& y = b(k, j);
        if (y.is_exact() && y.is_zero()) continue;
        if (first) {
          c(i, j) = x * y;
          first = false;
        } else {
          c(i, j) += x * y;
        }
      }
      if (first && !exact) c(i, j) = Scalar::numeric(0.0);
    }
  }
  return c;
}

bool operator==(const Matrix& a, const Matrix& b) {
  return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
}

std::vector<Scalar> Matrix::apply(const std::vector<Scalar>& x) const {
  if (x.size() != cols_) throw Error(ErrorKind::DimensionMismatch, "matrix-vector shape");
  Matrix col(cols_, 1);
  for (std::size_t j = 0; j < cols_; ++j) col(j, 0) = x[j];
  Matrix r = *this * col;
  std::vector<Scalar> out(rows_);
  for (std::size_t i = 0; i < rows_; ++i) out[i] = r(i, 0);
  return out;
}

std::vector<Scalar> Matrix::apply_row(const std::vector<Scalar>& x) const {
  if (x.size() != rows_) throw Error(ErrorKind::DimensionMismatch, "vector-matrix shape");
  Matrix row(1, rows_);
  for (std::size_t j = 0; j < rows_; ++j) row(0, j) = x[j];
  return (row * *this).row(0);
}

std::string Matrix::str() const {
  std::string out = "[";
  for (std::size_t i = 0; i < rows_; ++i) {
    out += i ? ", [" : "[";
    for (std::size_t j = 0; j < cols_; ++j) {
      if (j) out += ", ";
      out += (*this)(i, j).str();
    }
    out += "]";
  }
  return out + "]";
}

}  // namespace rbl
