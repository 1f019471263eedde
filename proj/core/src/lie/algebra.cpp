#include "rbl/lie/algebra.hpp"

#include "rbl/scalar/error.hpp"

namespace rbl {

namespace {

bool nonzero(const Scalar& s) { return !(s.is_exact() && s.is_zero()); }

std::string triple_text(const ProductTable& t, const TripleWitness& w) {
  return "(" + t.labels[w.i] + ", " + t.labels[w.j] + ", " + t.labels[w.k] + ") component " +
         t.labels[w.component] + " = " + w.value.str();
}

}  // namespace

std::optional<TripleWitness> antisymmetry_violation(const ProductTable& t, const ZeroTest& test) {
  const std::size_t n = t.dim();
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i; j < n; ++j) {
      for (std::size_t k = 0; k < n; ++k) {
        Scalar s = t.at(i, j, k) + t.at(j, i, k);
        if (!s.is_zero(test)) return TripleWitness{i, j, j, k, s};
      }
    }
  }
  return std::nullopt;
}

std::optional<TripleWitness> jacobi_violation(const ProductTable& t, const ZeroTest& test) {
  const std::size_t n = t.dim();
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      for (std::size_t k = 0; k < n; ++k) {
        for (std::size_t l = 0; l < n; ++l) {
          Scalar sum = t.is_exact() ? Scalar(0) : Scalar::numeric(0.0);
          for (std::size_t m = 0; m < n; ++m) {
            const Scalar& a1 = t.at(i, j, m);
            const Scalar& b1 = t.at(m, k, l);
            if (nonzero(a1) && nonzero(b1)) sum += a1 * b1;
            const Scalar& a2 = t.at(j, k, m);
            const Scalar& b2 = t.at(m, i, l);
            if (nonzero(a2) && nonzero(b2)) sum += a2 * b2;
            const Scalar& a3 = t.at(k, i, m);
            const Scalar& b3 = t.at(m, j, l);
            if (nonzero(a3) && nonzero(b3)) sum += a3 * b3;
          }
          if (!sum.is_zero(test)) return TripleWitness{i, j, k, l, sum};
        }
      }
    }
  }
  return std::nullopt;
}

JacobiResult check_jacobi(const ProductTable& t, const ZeroTest& test) {
  JacobiResult r;
  r.witness = jacobi_violation(t, test);
  r.ok = !r.witness;
  return r;
}

AlgebraPtr LieAlgebra::create(ProductTable table, std::string name, const ZeroTest& test) {
  if (table.c.size() != table.dim() * table.dim() * table.dim()) {
    throw Error(ErrorKind::DimensionMismatch, "structure-constant table size");
  }
  if (auto w = antisymmetry_violation(table, test)) {
    throw Error(ErrorKind::NotLieAlgebra, "antisymmetry fails at " + triple_text(table, *w));
  }
  if (auto w = jacobi_violation(table, test)) {
    throw Error(ErrorKind::NotLieAlgebra, "Jacobi identity fails at " + triple_text(table, *w));
  }
  return AlgebraPtr(new LieAlgebra(std::move(table), std::move(name)));
}

std::size_t LieAlgebra::index_of(std::string_view label) const {
  for (std::size_t i = 0; i < dim(); ++i) {
    if (labels()[i] == label) return i;
  }
  throw Error(ErrorKind::UnknownId, "no basis vector " + std::string(label));
}

Matrix LieAlgebra::ad(const std::vector<Scalar>& x) const {
  const std::size_t n = dim();
  Matrix m(n, n);
  for (std::size_t j = 0; j < n; ++j) {
    std::vector<Scalar> bj(n, Scalar(0));
    bj[j] = Scalar(1);
    if (!x.empty() && !x[0].is_exact()) {
      for (auto& s : bj) s = s.to_numeric();
    }
    std::vector<Scalar> col = bracket(x, bj);
    for (std::size_t k = 0; k < n; ++k) m(k, j) = col[k];
  }
  return m;
}

Matrix LieAlgebra::ad_basis(std::size_t i) const {
  const std::size_t n = dim();
  Matrix m(n, n);
  for (std::size_t j = 0; j < n; ++j) {
    for (std::size_t k = 0; k < n; ++k) m(k, j) = c(i, j, k);
  }
  return m;
}

AlgebraPtr LieAlgebra::rebased(const Matrix& n, std::vector<std::string> labels, const ZeroTest& test) const {
  return create(table_.rebased(n, std::move(labels)), name_, test);
}

AlgebraPtr LieAlgebra::to_numeric(const ZeroTest& test) const { return create(table_.to_numeric(), name_, test); }

bool same_algebra(const LieAlgebra& a, const LieAlgebra& b) {
  if (&a == &b) return true;
  if (a.labels() != b.labels()) return false;
  const auto& x = a.table().c;
  const auto& y = b.table().c;
  for (std::size_t k = 0; k < x.size(); ++k) {
    if (x[k].is_exact() != y[k].is_exact()) return false;
    if (x[k].is_exact() ? x[k] != y[k] : x[k].numeric_value() != y[k].numeric_value()) return false;
  }
  return true;
}

AlgebraPtr sl2() {
  static const AlgebraPtr g = [] {
    ProductTable t({"e", "f", "h"});
    constexpr std::size_t e = 0, f = 1, h = 2;
    auto set = [&](std::size_t i, std::size_t j, std::size_t k, long v) {
      t.at(i, j, k) = Scalar(v);
      t.at(j, i, k) = Scalar(-v);
    };
    set(h, e, e, 2);
    set(h, f, f, -2);
    set(e, f, h, 1);
    return LieAlgebra::create(std::move(t), "sl2");
  }();
  return g;
}

AlgebraPtr abelian(std::vector<std::string> labels, std::string name) {
  return LieAlgebra::create(ProductTable(std::move(labels)), std::move(name));
}

// ---- Vector ---------------------------------------------------------------

Vector::Vector(AlgebraPtr g, std::vector<Scalar> x) : algebra(std::move(g)), coords(std::move(x)) {
  if (coords.size() != algebra->dim()) throw Error(ErrorKind::DimensionMismatch, "vector length");
}

Vector Vector::basis(AlgebraPtr g, std::size_t i) {
  std::vector<Scalar> x(g->dim(), Scalar(0));
  x.at(i) = Scalar(1);
  return Vector(std::move(g), std::move(x));
}

Vector Vector::zero(AlgebraPtr g) {
  std::size_t n = g->dim();
  return Vector(std::move(g), std::vector<Scalar>(n, Scalar(0)));
}

void require_same_algebra(const Vector& x, const Vector& y) {
  if (!x.algebra || !y.algebra || !same_algebra(*x.algebra, *y.algebra)) {
    throw Error(ErrorKind::AlgebraMismatch, "vectors belong to different algebras");
  }
}

Vector& Vector::operator+=(const Vector& o) {
  require_same_algebra(*this, o);
  for (std::size_t k = 0; k < coords.size(); ++k) coords[k] += o.coords[k];
  return *this;
}

Vector& Vector::operator-=(const Vector& o) {
  require_same_algebra(*this, o);
  for (std::size_t k = 0; k < coords.size(); ++k) coords[k] -= o.coords[k];
  return *this;
}

Vector& Vector::operator*=(const Scalar& s) {
  for (auto& c : coords) c *= s;
  return *this;
}

bool Vector::equals(const Vector& o, const ZeroTest& test) const {
  require_same_algebra(*this, o);
  for (std::size_t k = 0; k < coords.size(); ++k) {
    if (!coords[k].equals(o.coords[k], test)) return false;
  }
  return true;
}

bool Vector::is_zero(const ZeroTest& test) const {
  for (const auto& c : coords) {
    if (!c.is_zero(test)) return false;
  }
  return true;
}

std::string Vector::str() const {
  LinComb lc;
  for (std::size_t k = 0; k < coords.size(); ++k) {
    if (!(coords[k].is_exact() && coords[k].is_zero())) lc.terms.emplace_back(k, coords[k]);
  }
  return lc.str(algebra->labels());
}

Vector bracket(const Vector& x, const Vector& y) {
  require_same_algebra(x, y);
  return Vector(x.algebra, x.algebra->bracket(x.coords, y.coords));
}

Scalar killing_form(const Vector& x, const Vector& y) {
  require_same_algebra(x, y);
  Matrix p = x.algebra->ad(x.coords) * x.algebra->ad(y.coords);
  Scalar tr = p(0, 0);
  for (std::size_t k = 1; k < p.rows(); ++k) tr += p(k, k);
  return tr;
}

}  // namespace rbl
