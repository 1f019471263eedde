#include "rbl/rb/rota_baxter.hpp"

#include <random>

#include "rbl/scalar/error.hpp"
#include "rbl/scalar/text.hpp"

namespace rbl {

namespace {

bool exact_zero(const Scalar& s) { return s.is_exact() && s.is_zero(); }

std::vector<Scalar> add(std::vector<Scalar> a, const std::vector<Scalar>& b) {
  for (std::size_t k = 0; k < a.size(); ++k) {
    if (exact_zero(b[k])) continue;
    if (exact_zero(a[k])) {
      a[k] = b[k];
    } else {
      a[k] += b[k];
    }
  }
  return a;
}

}  // namespace

RbReport check_rb(const OperatorMatrix& p, const Scalar& weight, const ZeroTest& test) {
  const LieAlgebra& g = *p.algebra;
  const std::size_t n = g.dim();
  RbReport report;
  std::vector<std::vector<Scalar>> images(n);
  for (std::size_t i = 0; i < n; ++i) images[i] = p.m.row(i);
  const bool exact = g.is_exact();
  auto basis = [&](std::size_t i) {
    std::vector<Scalar> x(n, exact ? Scalar(0) : Scalar::numeric(0.0));
    x[i] = exact ? Scalar(1) : Scalar::numeric(1.0);
    return x;
  };
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      std::vector<Scalar> lhs = g.bracket(images[i], images[j]);
      std::vector<Scalar> inner = add(g.bracket(images[i], basis(j)), g.bracket(basis(i), images[j]));
      if (!exact_zero(weight)) {
        std::vector<Scalar> w = g.bracket(basis(i), basis(j));
        for (auto& s : w) s *= weight;
        inner = add(inner, w);
      }
      std::vector<Scalar> rhs = p.apply(inner);
      bool zero = true;
      for (std::size_t k = 0; k < n; ++k) {
        lhs[k] -= rhs[k];
        if (!lhs[k].is_zero(test)) zero = false;
      }
      if (!zero) report.failures.push_back({i, j, std::move(lhs)});
    }
  }
  report.ok = report.failures.empty();
  return report;
}

VarId unknown(std::size_t i, std::size_t j) {
  if (i >= 9 || j >= 9) throw Error(ErrorKind::CapacityExceeded, "unknown names support dimension <= 9");
  return variable("r" + std::to_string(i + 1) + std::to_string(j + 1));
}

Polynomial normalize_equation(const Polynomial& p) {
  if (p.is_zero()) return p;
  const Coeff& lc = p.leading_coeff();
  if (lc.is_rational() && sgn(lc.u().re()) < 0) return -p;
  return p;
}

PolySystem generate_rb_system(const LieAlgebra& g) {
  const std::size_t n = g.dim();
  std::vector<Coeff> c(n * n * n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      for (std::size_t k = 0; k < n; ++k) {
        const Scalar& s = g.c(i, j, k);
        if (!s.is_exact() || !s.exact().is_constant()) {
          throw Error(ErrorKind::NumericTag, "system generation needs exact constant structure constants");
        }
        c[(i * n + j) * n + k] = s.exact().constant_value();
      }
    }
  }
  auto cc = [&](std::size_t i, std::size_t j, std::size_t k) -> const Coeff& { return c[(i * n + j) * n + k]; };
  PolySystem sys;
  std::vector<Polynomial> m(n * n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      sys.unknowns.push_back(unknown(i, j));
      m[i * n + j] = Polynomial::var(sys.unknowns.back());
    }
  }
  auto mm = [&](std::size_t i, std::size_t j) -> const Polynomial& { return m[i * n + j]; };
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      for (std::size_t k = 0; k < n; ++k) {
        Polynomial eq;
        // [P b_i, P b_j]_k
        for (std::size_t p = 0; p < n; ++p) {
          for (std::size_t q = 0; q < n; ++q) {
            if (cc(p, q, k).is_zero()) continue;
            eq += mm(i, p) * mm(j, q) * cc(p, q, k);
          }
        }
        // P([P b_i, b_j] + [b_i, P b_j])_k
        for (std::size_t l = 0; l < n; ++l) {
          Polynomial inner;
          for (std::size_t p = 0; p < n; ++p) {
            if (!cc(p, j, l).is_zero()) inner += mm(i, p) * cc(p, j, l);
            if (!cc(i, p, l).is_zero()) inner += mm(j, p) * cc(i, p, l);
          }
          if (!inner.is_zero()) eq -= inner * mm(l, k);
        }
        sys.equations.push_back(normalize_equation(eq));
        sys.origin.push_back("(" + g.labels()[i] + "," + g.labels()[j] + "):" + g.labels()[k]);
      }
    }
  }
  return sys;
}

// ---- catalog --------------------------------------------------------------

CatalogEntry make_entry(std::string id, std::vector<std::string> params,
                        std::vector<std::vector<std::string>> rows) {
  CatalogEntry e;
  e.id = std::move(id);
  e.params = std::move(params);
  e.matrix = Matrix(3, 3);
  for (std::size_t i = 0; i < 3; ++i) {
    for (std::size_t j = 0; j < 3; ++j) e.matrix(i, j) = Scalar(parse_ratfun(rows[i][j]));
  }
  for (const auto& p : e.params) e.nonvanishing.push_back(Polynomial::var(variable(p)));
  return e;
}

namespace {

std::vector<CatalogEntry> build_catalog() {
  std::vector<CatalogEntry> c;
  c.push_back(make_entry("P1", {}, {{"0", "0", "0"}, {"0", "0", "1"}, {"0", "0", "0"}}));
  c.push_back(make_entry("P2", {}, {{"0", "0", "0"}, {"0", "0", "0"}, {"0", "0", "0"}}));
  c.push_back(make_entry("P3", {}, {{"0", "1", "0"}, {"0", "0", "0"}, {"0", "0", "0"}}));
  c.push_back(make_entry("P4", {}, {{"0", "0", "0"}, {"0", "0", "0"}, {"0", "0", "1"}}));
  c.push_back(make_entry("P5", {}, {{"0", "0", "0"}, {"1", "0", "0"}, {"0", "0", "0"}}));
  c.push_back(make_entry("P6", {"a"}, {{"0", "0", "0"}, {"1", "0", "a"}, {"0", "0", "0"}}));
  c.push_back(make_entry("P7", {"a"}, {{"1", "a", "0"}, {"1/a", "1", "0"}, {"0", "0", "0"}}));
  c.push_back(make_entry("P8", {"a"}, {{"1", "a^2/16", "0"}, {"16/a^2", "-3", "-8/a"}, {"0", "a", "2"}}));
  c.push_back(make_entry("P9", {}, {{"0", "0", "1"}, {"0", "0", "0"}, {"0", "0", "0"}}));
  c.push_back(make_entry("P10", {}, {{"0", "0", "1"}, {"0", "0", "0"}, {"0", "-2", "0"}}));
  c.push_back(make_entry("P11", {"a"}, {{"0", "1", "a"}, {"0", "0", "0"}, {"0", "0", "0"}}));
  c.push_back(make_entry("P12", {"a"}, {{"0", "1", "a"}, {"0", "0", "0"}, {"0", "-2*a", "0"}}));
  c.push_back(make_entry("P13", {"a"}, {{"0", "1", "a"}, {"0", "0", "0"}, {"0", "2*a", "2*a^2"}}));
  c.push_back(make_entry("P14", {"a"}, {{"0", "1", "a"}, {"0", "-4*a^2", "-4*a^3"}, {"0", "4*a", "4*a^2"}}));
  c.push_back(make_entry("P15", {}, {{"0", "0", "0"}, {"0", "0", "1"}, {"-2", "0", "0"}}));
  c.push_back(make_entry("P16", {"a"}, {{"0", "0", "0"}, {"1", "0", "a"}, {"-2*a", "0", "0"}}));
  c.push_back(make_entry("P17", {"a"}, {{"0", "0", "0"}, {"1", "0", "a"}, {"2*a", "0", "2*a^2"}}));
  c.push_back(make_entry("P18", {"a"}, {{"-4*a^2", "0", "-4*a^3"}, {"1", "0", "a"}, {"4*a", "0", "4*a^2"}}));
  c.push_back(make_entry("P19", {"a"},
                         {{"1", "-3*a^2/4", "a"}, {"-4/(27*a^2)", "-1/3", "0"}, {"-8/(9*a)", "0", "-2/3"}}));
  c.push_back(make_entry("P20", {"a"}, {{"a", "0", "-a^2/2"}, {"0", "-a", "-1/2"}, {"1", "a^2", "0"}}));
  c.push_back(make_entry("P21", {"a"}, {{"a", "4*a^3", "0"}, {"-1/(4*a)", "-a", "0"}, {"1", "4*a^2", "0"}}));
  CatalogEntry p22 = make_entry("P22", {"a", "b"},
                                {{"-1/(4*b)", "a", "-(1+16*a*b^3)/(16*b^2)"},
                                 {"b", "-4*a*b^2", "(1+16*a*b^3)/4"},
                                 {"1", "-4*a*b", "(1+16*a*b^3)/(4*b)"}});
  p22.branch = parse_ratfun("16*a*b^3-1").num();
  c.push_back(std::move(p22));
  return c;
}

}  // namespace

const std::vector<CatalogEntry>& catalog() {
  static const std::vector<CatalogEntry> c = build_catalog();
  return c;
}

const CatalogEntry& catalog_entry(std::string_view id) {
  for (const auto& e : catalog()) {
    if (e.id == id) return e;
  }
  throw Error(ErrorKind::UnknownId, "no catalog entry " + std::string(id));
}

OperatorMatrix specialize(const CatalogEntry& entry, const Bindings& bindings) {
  for (const auto& p : entry.nonvanishing) {
    Scalar v = evaluate(RatFun(p), bindings);
    bool zero = v.is_exact() ? v.is_zero() : v.numeric_value() == 0.0;
    if (zero) throw Error(ErrorKind::ConstraintViolated, entry.id + " requires " + p.str() + " != 0");
  }
  return OperatorMatrix(sl2(), entry.matrix.evaluate(bindings));
}

bool is_skew_in_basis(const OperatorMatrix& p, const Matrix& n, const ZeroTest& test) {
  Matrix q = n * p.m * n.inverse();
  return (q + q.transpose()).is_zero(test);
}

std::optional<Scalar> same_ray(const OperatorMatrix& p, const OperatorMatrix& q, const ZeroTest& test) {
  if (p.m.rows() != q.m.rows() || p.m.cols() != q.m.cols()) {
    throw Error(ErrorKind::DimensionMismatch, "operators differ in size");
  }
  std::optional<std::pair<std::size_t, std::size_t>> pivot;
  for (std::size_t i = 0; i < p.m.rows() && !pivot; ++i) {
    for (std::size_t j = 0; j < p.m.cols(); ++j) {
      if (!p.m(i, j).is_zero(test)) {
        pivot = {i, j};
        break;
      }
    }
  }
  if (!pivot) {
    if (q.m.is_zero(test)) return Scalar(1);
    return std::nullopt;
  }
  Scalar lambda = q.m(pivot->first, pivot->second) / p.m(pivot->first, pivot->second);
  if (lambda.is_zero(test)) return std::nullopt;
  if (!(p.m * lambda).equals(q.m, test)) return std::nullopt;
  return lambda;
}

std::vector<CatalogVerdict> verify_catalog_exact(const std::vector<CatalogEntry>& entries) {
  std::vector<CatalogVerdict> out;
  for (const auto& e : entries) {
    CatalogVerdict v;
    v.id = e.id;
    try {
      RbReport r = check_rb(e.op());
      v.ok = r.ok;
      v.failures = std::move(r.failures);
    } catch (const Error& err) {
      v.ok = false;
      v.detail = err.what();
    }
    out.push_back(std::move(v));
  }
  return out;
}

std::vector<CatalogVerdict> verify_catalog_numeric(const std::vector<CatalogEntry>& entries, int samples, double tol,
                                                   std::uint64_t seed) {
  std::mt19937_64 gen(seed);
  std::uniform_real_distribution<double> radius(0.5, 2.0);
  std::uniform_real_distribution<double> angle(0.0, 6.283185307179586);
  std::vector<CatalogVerdict> out;
  for (const auto& e : entries) {
    CatalogVerdict v;
    v.id = e.id;
    for (int s = 0; s < std::max(samples, 1) && v.ok; ++s) {
      Bindings b;
      std::string detail;
      for (const auto& name : e.params) {
        std::complex<double> z = std::polar(radius(gen), angle(gen));
        b.emplace(variable(name), z);
        detail += (detail.empty() ? "" : ",") + name + "=" + format_numeric(z);
      }
      try {
        OperatorMatrix p = specialize(e, b);
        if (p.m.is_exact()) p.m = p.m.to_numeric();
        RbReport r = check_rb(OperatorMatrix(sl2()->to_numeric(ZeroTest::within(0)), p.m), Scalar::numeric(0.0),
                              ZeroTest::within(tol));
        v.ok = r.ok;
        v.failures = std::move(r.failures);
      } catch (const Error& err) {
        v.ok = false;
        detail += std::string(" ") + err.what();
      }
      v.detail = detail;
    }
    out.push_back(std::move(v));
  }
  return out;
}

}  // namespace rbl
