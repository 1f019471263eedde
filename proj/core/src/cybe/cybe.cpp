#include "rbl/cybe/cybe.hpp"

#include "rbl/scalar/error.hpp"

namespace rbl {

namespace {

bool exact_zero(const Scalar& s) { return s.is_exact() && s.is_zero(); }

}  // namespace

Tensor3 cybe_lhs(const Tensor2& r) {
  const LieAlgebra& g = *r.algebra;
  const std::size_t n = g.dim();
  Tensor3 out(r.algebra);
  for (const auto& [pk, x] : r.coeffs) {
    const auto [i, j] = pk;
    for (const auto& [qk, y] : r.coeffs) {
      const auto [k, l] = qk;
      Scalar xy = x * y;
      for (std::size_t m = 0; m < n; ++m) {
        // [r12, r13]: [a_p, a_q] (x) b_p (x) b_q
        if (const Scalar& c = g.c(i, k, m); !exact_zero(c)) out.add(m, j, l, xy * c);
        // [r12, r23]: a_p (x) [b_p, a_q] (x) b_q
        if (const Scalar& c = g.c(j, k, m); !exact_zero(c)) out.add(i, m, l, xy * c);
        // [r13, r23]: a_p (x) a_q (x) [b_p, b_q]
        if (const Scalar& c = g.c(j, l, m); !exact_zero(c)) out.add(i, k, m, xy * c);
      }
    }
  }
  return out;
}

CybeResult check_cybe(const Tensor2& r, const ZeroTest& test) {
  CybeResult res;
  Tensor3 t = cybe_lhs(r);
  for (const auto& [k, c] : t.coeffs) {
    if (!c.is_zero(test)) {
      res.ok = false;
      res.witness = k;
      res.value = c;
      break;
    }
  }
  return res;
}

Tensor2 lift_operator(const Representation& rho, const Matrix& p) {
  const std::size_t n = rho.algebra()->dim();
  const std::size_t m = rho.module_dim();
  if (p.rows() != m || p.cols() != n) throw Error(ErrorKind::DimensionMismatch, "P must map the module into g");
  std::vector<std::string> module_labels;
  for (std::size_t i = 0; i < m; ++i) module_labels.push_back("v" + std::to_string(i + 1) + "*");
  AlgebraPtr g = semidirect_product(dual_representation(rho), module_labels);
  Tensor2 t(g);
  for (std::size_t i = 0; i < m; ++i) {
    for (std::size_t j = 0; j < n; ++j) t.add(j, n + i, p(i, j));
  }
  return t;
}

AlgebraPtr coadjoint_semidirect(const AlgebraPtr& g) {
  if (same_algebra(*g, *sl2())) return sl2_semidirect();
  return semidirect_product(dual_representation(adjoint_representation(g)), dual_labels(g->labels()));
}

Tensor2 lift_operator(const OperatorMatrix& p) {
  const std::size_t n = p.dim();
  Tensor2 t(coadjoint_semidirect(p.algebra));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) t.add(j, n + i, p.m(i, j));
  }
  return t;
}

Tensor2 rb_to_cybe(const OperatorMatrix& p) {
  Tensor2 hat = lift_operator(p);
  return hat - transpose21(hat);
}

std::vector<Vector> bd_solve(const Vector& x, const ZeroTest& test) {
  const LieAlgebra& g = *x.algebra;
  Matrix a = g.ad(x.coords);
  Matrix id = Matrix::identity(g.dim());
  if (!a.is_exact()) id = id.to_numeric();
  std::vector<Vector> out;
  for (auto& v : (a - id).nullspace(test)) out.emplace_back(x.algebra, std::move(v));
  return out;
}

Tensor2 bd_tensor(const Vector& x, const Vector& y, const ZeroTest& test) {
  if (!bracket(x, y).equals(y, test)) throw Error(ErrorKind::NotEigenpair, "[x, y] != y");
  return outer(x, y) - outer(y, x);
}

Tensor2 bd_normal_form(const BdClass& c) {
  constexpr std::size_t e = 0, f = 1, h = 2;
  Tensor2 t(sl2());
  const Scalar& k = c.k;
  switch (c.family) {
    case BdFamily::R1:
      t.add(e, h, k);
      t.add(h, e, -k);
      break;
    case BdFamily::R2:
      t.add(f, h, k);
      t.add(h, f, -k);
      break;
    case BdFamily::R3: {
      const Scalar& a = *c.a;
      Scalar half = k / Scalar(2);
      t.add(f, e, k * a);
      t.add(e, f, -(k * a));
      t.add(h, f, half);
      t.add(f, h, -half);
      t.add(h, e, half * a * a);
      t.add(e, h, -(half * a * a));
      break;
    }
  }
  return t;
}

BdClass bd_classify(const Vector& x, const Vector& y, const ZeroTest& test) {
  if (!same_algebra(*x.algebra, *sl2())) throw Error(ErrorKind::AlgebraMismatch, "normal forms live in sl2");
  Tensor2 r = bd_tensor(x, y, test);
  constexpr std::size_t e = 0, f = 1, h = 2;
  BdClass c;
  if (!r.at(f, e).is_zero(test)) {
    c.family = BdFamily::R3;
    c.k = r.at(h, f) * Scalar(2);
    if (c.k.is_zero(test)) throw Error(ErrorKind::NoMatch, "tensor " + r.str() + " has no r3 normal form");
    c.a = r.at(f, e) / c.k;
  } else if (!r.at(e, h).is_zero(test)) {
    c.family = BdFamily::R1;
    c.k = r.at(e, h);
  } else if (!r.at(f, h).is_zero(test)) {
    c.family = BdFamily::R2;
    c.k = r.at(f, h);
  } else {
    throw Error(ErrorKind::NoMatch, "tensor " + r.str() + " matches no normal form");
  }
  Tensor2 normal = bd_normal_form(c);
  if (!normal.equals(r, test)) throw Error(ErrorKind::NoMatch, "tensor " + r.str() + " differs from " + normal.str());
  return c;
}

Tensor2 cobracket(const Vector& x, const Tensor2& r) {
  if (!same_algebra(*x.algebra, *r.algebra)) throw Error(ErrorKind::AlgebraMismatch, "cobracket operands");
  const LieAlgebra& g = *r.algebra;
  const std::size_t n = g.dim();
  Tensor2 out(r.algebra);
  std::vector<std::vector<Scalar>> adx(n);
  for (std::size_t i = 0; i < n; ++i) {
    std::vector<Scalar> b(n, Scalar(0));
    b[i] = Scalar(1);
    adx[i] = g.bracket(x.coords, b);
  }
  for (const auto& [k, c] : r.coeffs) {
    for (std::size_t m = 0; m < n; ++m) {
      if (!exact_zero(adx[k.first][m])) out.add(m, k.second, c * adx[k.first][m]);
      if (!exact_zero(adx[k.second][m])) out.add(k.first, m, c * adx[k.second][m]);
    }
  }
  return out;
}

}  // namespace rbl
