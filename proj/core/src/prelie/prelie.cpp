#include "rbl/prelie/prelie.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <sstream>

#include "rbl/cybe/cybe.hpp"
#include "rbl/rb/rota_baxter.hpp"
#include "rbl/scalar/error.hpp"
#include "rbl/scalar/text.hpp"

namespace rbl {

namespace {

std::vector<std::string> numbered(const std::string& stem, std::size_t n) {
  std::vector<std::string> out;
  for (std::size_t i = 1; i <= n; ++i) out.push_back(stem + std::to_string(i));
  return out;
}

std::vector<std::string> e123() { return numbered("e", 3); }

std::vector<Scalar> zeros_like(const ProductTable& t) {
  Scalar z = t.is_exact() ? Scalar(0) : Scalar::numeric(0);
  return std::vector<Scalar>(t.dim(), z);
}

FormalMatrix numeric_copy(const FormalMatrix& m) {
  FormalMatrix out = m;
  for (auto& e : out.entries) {
    for (auto& [k, c] : e.terms) c = c.to_numeric();
  }
  return out;
}

std::string pair_list(const std::vector<std::pair<std::size_t, std::size_t>>& d) {
  std::ostringstream s;
  for (std::size_t i = 0; i < d.size(); ++i) s << (i ? " " : "") << "(" << d[i].first + 1 << "," << d[i].second + 1 << ")";
  return s.str();
}

std::optional<Rational> rational_sqrt(const Rational& q) {
  if (sgn(q) < 0) return std::nullopt;
  mpz_class n = q.get_num(), d = q.get_den();
  if (!mpz_perfect_square_p(n.get_mpz_t()) || !mpz_perfect_square_p(d.get_mpz_t())) return std::nullopt;
  mpz_class rn = sqrt(n), rd = sqrt(d);
  Rational r(rn, rd);
  r.canonicalize();
  return r;
}

Binding binding_sqrt(const Binding& b) {
  if (const auto* c = std::get_if<Coeff>(&b)) {
    if (c->is_rational()) {
      const Rational& q = c->u().re();
      if (auto r = rational_sqrt(q)) return Coeff(*r);
      // sqrt(p/q) = sqrt(p*q)/q, exact in a surd extension when p*q fits.
      mpz_class pq = q.get_num() * q.get_den();
      if (sgn(q) > 0 && pq.fits_uint_p() && pq.get_ui() <= 0xffffffffUL) {
        return Coeff::sqrt(static_cast<std::uint32_t>(pq.get_ui())) / Coeff(Rational(q.get_den()));
      }
    }
    return std::sqrt(c->to_complex());
  }
  return std::sqrt(std::get<std::complex<double>>(b));
}

}  // namespace

PreLieResult check_prelie(const ProductTable& t, const ZeroTest& test) {
  const std::size_t n = t.dim();
  for (std::size_t x = 0; x < n; ++x) {
    for (std::size_t y = 0; y < n; ++y) {
      for (std::size_t z = 0; z < n; ++z) {
        std::vector<Scalar> acc = zeros_like(t);
        // {{x,y},z} - {x,{y,z}} - {{y,x},z} + {y,{x,z}}
        for (std::size_t m = 0; m < n; ++m) {
          for (std::size_t k = 0; k < n; ++k) {
            acc[k] += t.at(x, y, m) * t.at(m, z, k) - t.at(y, z, m) * t.at(x, m, k) -
                      t.at(y, x, m) * t.at(m, z, k) + t.at(x, z, m) * t.at(y, m, k);
          }
        }
        for (std::size_t k = 0; k < n; ++k) {
          if (!acc[k].is_zero(test)) return {false, TripleWitness{x, y, z, k, acc[k]}};
        }
      }
    }
  }
  return {};
}

PreLie PreLie::create(ProductTable table, std::string name, const ZeroTest& test) {
  PreLieResult r = check_prelie(table, test);
  if (!r.ok) {
    const auto& w = *r.witness;
    throw Error(ErrorKind::NotPreLie, "pre-Lie identity fails at (" + table.labels[w.i] + "," + table.labels[w.j] +
                                          "," + table.labels[w.k] + "), component " + table.labels[w.component] +
                                          " = " + w.value.str());
  }
  return PreLie(std::move(table), std::move(name));
}

PreLie prelie_from_rb(const OperatorMatrix& p, const ZeroTest& test) {
  const LieAlgebra& g = *p.algebra;
  RbReport rep = check_rb(p, Scalar(0), test);
  if (!rep.ok) throw Error(ErrorKind::NotRotaBaxter, "operator is not Rota-Baxter of weight 0");
  const std::size_t n = g.dim();
  ProductTable t(g.labels());
  for (std::size_t i = 0; i < n; ++i) {
    // P(b_i) is row i of the matrix.
    std::vector<Scalar> pi = p.m.row(i);
    for (std::size_t j = 0; j < n; ++j) {
      std::vector<Scalar> bj(n, g.is_exact() ? Scalar(0) : Scalar::numeric(0));
      bj[j] = g.is_exact() ? Scalar(1) : Scalar::numeric(1);
      std::vector<Scalar> v = g.bracket(pi, bj);
      for (std::size_t k = 0; k < n; ++k) t.at(i, j, k) = v[k];
    }
  }
  return PreLie::create(std::move(t), "PL(" + g.name() + ")", test);
}

AlgebraPtr subadjacent(const PreLie& a, const ZeroTest& test) {
  const std::size_t n = a.dim();
  ProductTable t(a.labels());
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      for (std::size_t k = 0; k < n; ++k) t.at(i, j, k) = a.table().at(i, j, k) - a.table().at(j, i, k);
    }
  }
  return LieAlgebra::create(std::move(t), "g(" + a.name() + ")", test);
}

Representation left_mult_rep(const PreLie& a, const ZeroTest& test) {
  AlgebraPtr g = subadjacent(a, test);
  const std::size_t n = a.dim();
  std::vector<Matrix> l;
  for (std::size_t i = 0; i < n; ++i) {
    Matrix m(n, n);
    for (std::size_t j = 0; j < n; ++j) {
      for (std::size_t k = 0; k < n; ++k) m(k, j) = a.table().at(i, j, k);
    }
    l.push_back(std::move(m));
  }
  if (auto bad = Representation::law_violation(*g, l, test)) {
    throw Error(ErrorKind::RepresentationLawViolated, "[L_x,L_y] != L_[x,y] at (" + a.labels()[bad->first] + "," +
                                                          a.labels()[bad->second] + ")");
  }
  return Representation::create(g, std::move(l), test);
}

FormalMatrix characteristic_matrix_prelie(const PreLie& a, const Matrix& n, std::vector<std::string> labels,
                                          const ZeroTest& test) {
  if (labels.empty()) labels = numbered("e", a.dim());
  return characteristic_matrix(a.table().rebased(n, std::move(labels)), test);
}

std::string class_name(CanonicalClass c) {
  switch (c) {
    case CanonicalClass::Trivial: return "Trivial";
    case CanonicalClass::N1: return "(N-1)_{-1}";
    case CanonicalClass::H6: return "(H-6)";
    case CanonicalClass::D1: return "(D_{-1}-1)";
    case CanonicalClass::E6: return "(E-6)";
    case CanonicalClass::Dbar8: return "(Dbar_1-8)";
  }
  return {};
}

std::optional<CanonicalClass> parse_class(std::string_view s) {
  static const std::map<std::string, CanonicalClass, std::less<>> names = {
      {"Trivial", CanonicalClass::Trivial}, {"N1", CanonicalClass::N1},  {"H6", CanonicalClass::H6},
      {"D1", CanonicalClass::D1},           {"E6", CanonicalClass::E6},  {"Dbar8", CanonicalClass::Dbar8}};
  if (auto it = names.find(s); it != names.end()) return it->second;
  for (auto c : {CanonicalClass::Trivial, CanonicalClass::N1, CanonicalClass::H6, CanonicalClass::D1,
                 CanonicalClass::E6, CanonicalClass::Dbar8}) {
    if (class_name(c) == s) return c;
  }
  return std::nullopt;
}

FormalMatrix canonical_matrix(CanonicalClass c) {
  using Rows = std::vector<std::vector<std::string>>;
  Rows rows;
  switch (c) {
    case CanonicalClass::Trivial: rows = {{"0", "0", "0"}, {"0", "0", "0"}, {"0", "0", "0"}}; break;
    case CanonicalClass::N1: rows = {{"0", "0", "0"}, {"0", "0", "0"}, {"0", "e2", "-e3"}}; break;
    case CanonicalClass::H6: rows = {{"0", "0", "0"}, {"-e3", "e1", "0"}, {"0", "0", "0"}}; break;
    case CanonicalClass::D1: rows = {{"0", "0", "0"}, {"0", "0", "0"}, {"e1", "-e2", "0"}}; break;
    case CanonicalClass::E6: rows = {{"0", "0", "0"}, {"0", "e1", "-e1-e2"}, {"e1", "0", "-e2-e3"}}; break;
    case CanonicalClass::Dbar8: rows = {{"0", "0", "0"}, {"0", "e1", "-e2"}, {"e1", "0", "-e3"}}; break;
  }
  return parse_formal_matrix(rows, e123());
}

PreLie canonical_prelie(CanonicalClass c) {
  FormalMatrix m = canonical_matrix(c);
  ProductTable t(e123());
  for (std::size_t i = 0; i < 3; ++i) {
    for (std::size_t j = 0; j < 3; ++j) {
      for (const auto& [k, s] : m.at(i, j).terms) t.at(i, j, k) = s;
    }
  }
  return PreLie::create(std::move(t), class_name(c));
}

const std::vector<ClassRow>& class_table() {
  using C = CanonicalClass;
  static const std::vector<ClassRow> rows = {
      {"1", "P1", C::N1, {"h", "e", "(1/2)f"}, {}, {}, {}, {}, {}},
      {"2", "P2", C::Trivial, {"e", "f", "h"}, {}, {}, {}, {}, {}},
      {"3", "P3", C::H6, {"-h", "e", "2f"}, {}, {}, {}, {}, {}},
      {"4", "P4", C::D1, {"e", "f", "(1/2)h"}, {}, {}, {}, {}, {}},
      {"5", "P5", C::H6, {"h", "f", "2e"}, {}, {}, {}, {}, {}},
      {"6", "P6", C::N1,
       {"e+(a)h", "(1/(4*a^3))e", "-(1/(8*a^3))e+(1/(2*a))f-(1/(4*a^2))h"}, {}, {}, {}, {"a"}, {}},
      {"7", "P7", C::D1, {"e-(sa^2)f+(sa)h", "e-(sa^2)f-(sa)h", "-(1/(4*sa))e-(sa/4)f"}, {},
       {{"a", "sa^2"}}, {{"sa", "a"}}, {"sa"}, {{"sa", 2}}},
      {"8", "P8", C::E6, {"-(1/a)e+(a/16)f+(1/4)h", "-(2/a)e+(1/4)h", "(4/a)e-(1/4)h"}, {}, {}, {}, {"a"}, {}},
      {"9", "P9", C::N1, {"h", "f", "-(1/2)e"}, {}, {}, {}, {}, {}},
      {"10", "P10", C::Dbar8, {"-f", "(1/2)h", "-(1/2)e"}, {}, {}, {}, {}, {}},
      {"11", "P11", C::N1,
       {"f+(a)h", "-(1/(4*a^3))f", "-(1/(2*a))e+(1/(8*a^3))f+(1/(4*a^2))h"}, {}, {}, {}, {"a"}, {}},
      {"12", "P12", C::E6, {"-(1/(4*a^3))f", "(1/(4*a^2))h", "-(1/(2*a))e-(1/(4*a^2))h"}, {}, {}, {}, {"a"}, {}},
      {"13", "P13", C::D1,
       {"-(1/(4*a^3))f", "(1/(2*a))e-(1/(8*a^3))f-(1/(4*a^2))h", "-(1/(4*a^3))f-(1/(4*a^2))h"}, {}, {}, {}, {"a"},
       {}},
      {"14", "P14", C::N1,
       {"(1/a)f+h", "-(1/(2*a))e+(1/(8*a^3))f+(1/(4*a^2))h", "-(1/(8*a^3))f"}, {}, {}, {}, {"a"}, {}},
      {"15", "P15", C::Dbar8, {"e", "(1/2)h", "(1/2)f"}, {}, {}, {}, {}, {}},
      {"16", "P16", C::E6, {"(1/(4*a^3))e", "-(1/(4*a^2))h", "(1/(2*a))f+(1/(4*a^2))h"}, {}, {}, {}, {"a"}, {}},
      {"17", "P17", C::D1,
       {"(1/(4*a^3))e", "-(1/(8*a^3))e+(1/(2*a))f-(1/(4*a^2))h", "-(1/(4*a^3))e-(1/(4*a^2))h"},
       std::vector<std::string>{"-(1/(4*a^3))e", "(1/(8*a^3))e-(1/(2*a))f+(1/(4*a^2))h",
                                "(1/(4*a^3))e+(1/(4*a^2))h"},
       {}, {}, {"a"}, {}},
      {"18", "P18", C::N1, {"(1/a)e+h", "-(1/(4*a^2))e+f-(1/(2*a))h", "(1/(8*a^3))e"}, {}, {}, {}, {"a"}, {}},
      {"19", "P19", C::E6, {"(1/(2*a))e-(9*a/8)f+(3/4)h", "-(9*a/4)f+(3/4)h", "(9*a/2)f-(3/4)h"}, {}, {}, {},
       {"a"}, {}},
      {"20", "P20", C::Dbar8, {"-e+(a^2)f+(a)h", "(sqrt(2)*a)f+(sqrt(2)/2)h", "-f"}, {}, {}, {}, {"a"}, {}},
      {"21", "P21", C::N1,
       {"e+(4*a^2)f", "-(1/(8*a^2))e+(1/2)f+(1/(4*a))h", "(1/(16*a^2))e-(1/4)f+(1/(8*a))h"}, {}, {}, {}, {"a"}, {}},
      {"22eq", "P22", C::H6, {"-(1/sb^2)f+h", "(1/sb)f", "(2/sb)e-(1/(2*sb^5))f+(1/sb^3)h"},
       std::vector<std::string>{"-(1/sb^2)f+h", "(1/sb)f", "(2*sb)e-(1/(2*sb^3))f+(1/sb)h"},
       {{"a", "1/(16*sb^6)"}, {"b", "sb^2"}}, {{"sb", "b"}}, {"sb"}, {{"sb", 2}}},
      {"22ne", "P22", C::N1,
       {"e-(4*a*b)f+((1+16*a*b^3)/(4*b))h", "h-(1/b)f-(4*b/(16*a*b^3-1))e1",
        "(32*a*b^3/(16*a*b^3-1)^2)f-(2*b/(16*a*b^3-1)^2)h-(8*b^2/(16*a*b^3-1)^3)e1"},
       {}, {}, {}, {"a", "b"}, {}},
  };
  return rows;
}

const ClassRow& class_row(std::string_view id) {
  for (const auto& r : class_table()) {
    if (r.id == id) return r;
  }
  throw Error(ErrorKind::UnknownId, "no class-table row " + std::string(id));
}

Matrix row_operator(const ClassRow& row) {
  Matrix m = catalog_entry(row.entry).matrix;
  if (row.substitutions.empty()) return m;
  std::map<VarId, RatFun> subst;
  for (const auto& [var, expr] : row.substitutions) subst[variable(var)] = parse_ratfun(expr);
  for (std::size_t i = 0; i < 3; ++i) {
    for (std::size_t j = 0; j < 3; ++j) m(i, j) = Scalar(m(i, j).exact().substitute(subst));
  }
  return m;
}

Matrix row_basis(const ClassRow& row, bool erratum) {
  const auto& text = erratum && row.erratum ? *row.erratum : row.basis;
  const std::vector<std::string> labels = {"e", "f", "h", "e1", "e2"};
  Matrix n(3, 3);
  for (std::size_t i = 0; i < 3; ++i) {
    LinComb lc = parse_lincomb(text[i], labels);
    for (const auto& [k, c] : lc.terms) {
      if (k < 3) {
        n(i, k) += c;
      } else {
        for (std::size_t j = 0; j < 3; ++j) n(i, j) += c * n(k - 3, j);
      }
    }
  }
  return n;
}

ClassVerdict verify_class_row(const ClassRow& row, const std::optional<Bindings>& point, bool erratum,
                              const ZeroTest& test) {
  ClassVerdict v;
  v.row = row.id;
  v.claimed = row.claimed;
  v.expected = canonical_matrix(row.claimed);
  Matrix op = row_operator(row);
  Matrix basis = row_basis(row, erratum);
  if (point) {
    op = op.evaluate(*point);
    basis = basis.evaluate(*point);
    std::ostringstream d;
    for (const auto& [var, b] : *point) {
      d << (d.tellp() ? " " : "") << variable_name(var) << "=";
      if (const auto* c = std::get_if<Coeff>(&b)) {
        d << c->str();
      } else {
        d << format_numeric(std::get<std::complex<double>>(b));
      }
    }
    v.detail = d.str();
  }
  bool numeric = !op.is_exact() || !basis.is_exact();
  if (numeric) {
    op = op.is_exact() ? op.to_numeric() : op;
    basis = basis.is_exact() ? basis.to_numeric() : basis;
    v.expected = numeric_copy(v.expected);
  }
  AlgebraPtr g = numeric ? sl2()->to_numeric(test) : sl2();
  PreLie a = prelie_from_rb(OperatorMatrix(g, op), test);
  v.computed = characteristic_matrix_prelie(a, basis, e123(), test);
  v.differences = v.computed.differences(v.expected, test);
  v.ok = v.differences.empty();
  return v;
}

CanonicalClass classify(std::string_view entry, const Bindings& params, const ZeroTest& test) {
  const CatalogEntry& ce = catalog_entry(entry);
  std::string row_id = ce.id.substr(1);
  if (ce.branch) {
    bool on_branch = false;
    if (!params.empty()) on_branch = evaluate(RatFun(*ce.branch), params).is_zero(test);
    row_id += on_branch ? "eq" : "ne";
  }
  const ClassRow& row = class_row(row_id);
  std::optional<Bindings> point;
  if (!params.empty()) {
    Bindings b;
    for (const auto& var : row.vars) {
      VarId id = variable(var);
      auto root = std::find_if(row.roots.begin(), row.roots.end(), [&](const auto& r) { return r.first == var; });
      if (root == row.roots.end()) {
        auto it = params.find(id);
        if (it == params.end()) throw Error(ErrorKind::UnboundParameter, "parameter " + var + " is unbound");
        b[id] = it->second;
      } else {
        auto it = params.find(variable(root->second));
        if (it == params.end()) throw Error(ErrorKind::UnboundParameter, "parameter " + root->second + " is unbound");
        b[id] = binding_sqrt(it->second);
      }
    }
    point = b;
  }
  ClassVerdict v = verify_class_row(row, point, false, test);
  if (!v.ok) {
    throw Error(ErrorKind::ClassMismatch, "row " + row.id + " claims " + class_name(row.claimed) +
                                              " but its basis gives\n" + v.computed.str() + "differing at " +
                                              pair_list(v.differences));
  }
  return row.claimed;
}

namespace {

/// Raw semidirect table g(A) + g(A)* with module matrices rho_i = sign * L_i^T.
ProductTable double_table(const PreLie& a, const ZeroTest& test, int sign) {
  AlgebraPtr g = subadjacent(a, test);
  const std::size_t n = a.dim();
  std::vector<std::string> labels = numbered("e", n);
  std::vector<std::string> all = labels;
  for (const auto& l : dual_labels(labels)) all.push_back(l);
  ProductTable t(all);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      for (std::size_t k = 0; k < n; ++k) t.at(i, j, k) = g->c(i, j, k);
    }
  }
  // L_i has (k,j) = a_ij^k; rho_i = sign * L_i^T has (c,b) = sign * a_ic^b.
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t b = 0; b < n; ++b) {
      for (std::size_t c = 0; c < n; ++c) {
        Scalar r = Scalar(sign) * a.table().at(i, c, b);
        t.at(i, n + b, n + c) = r;
        t.at(n + b, i, n + c) = -r;
      }
    }
  }
  return t;
}

}  // namespace

AlgebraPtr prelie_double(const PreLie& a, const ZeroTest& test) {
  Representation l = left_mult_rep(a, test);
  std::vector<std::string> labels = numbered("e", a.dim());
  ProductTable t = l.algebra()->table();
  t.labels = labels;
  AlgebraPtr g = LieAlgebra::create(std::move(t), l.algebra()->name(), test);
  Representation lr = Representation::create(g, l.matrices(), test);
  return semidirect_product(dual_representation(lr, test), dual_labels(labels), "double(" + a.name() + ")", test);
}

Tensor2 canonical_r(const PreLie& a, const ZeroTest& test) {
  AlgebraPtr d = prelie_double(a, test);
  const std::size_t n = a.dim();
  Tensor2 r(d);
  for (std::size_t i = 0; i < n; ++i) {
    r.add(i, n + i, Scalar(1));
    r.add(n + i, i, Scalar(-1));
  }
  return r;
}

FormalMatrix printed_double_matrix(CanonicalClass c) {
  using Rows = std::vector<std::vector<std::string>>;
  const std::vector<std::string> z(6, "0");
  Rows rows;
  switch (c) {
    case CanonicalClass::N1:
      rows = {z,
              {"0", "0", "-e2", "0", "0", "0"},
              {"0", "e2", "0", "0", "e2*", "-e3*"},
              z,
              {"0", "0", "-e2*", "0", "0", "0"},
              {"0", "0", "e3*", "0", "0", "0"}};
      break;
    case CanonicalClass::H6:
      rows = {{"0", "e3", "0", "0", "0", "0"},
              {"-e3", "0", "0", "e2*", "0", "-e1*"},
              z,
              {"0", "-e2*", "0", "0", "0", "0"},
              z,
              {"0", "e1*", "0", "0", "0", "0"}};
      break;
    case CanonicalClass::D1:
      rows = {{"0", "0", "-e1", "0", "0", "0"},
              {"0", "0", "e2", "0", "0", "0"},
              {"e1", "-e2", "0", "e1*", "-e2*", "0"},
              {"0", "0", "-e1*", "0", "0", "0"},
              {"0", "0", "e2*", "0", "0", "0"},
              z};
      break;
    case CanonicalClass::E6:
      rows = {{"0", "0", "-e1", "0", "0", "0"},
              {"0", "0", "-e1-e2", "e2*-e3*", "-e2*", "0"},
              {"e1", "e1+e2", "0", "e1*", "-e2*", "-e3*"},
              {"0", "e3*-e2*", "-e1*", "0", "0", "0"},
              {"0", "e2*", "e2*", "0", "0", "0"},
              {"0", "0", "e3*", "0", "0", "0"}};
      break;
    case CanonicalClass::Dbar8:
      rows = {{"0", "0", "-e1", "0", "0", "0"},
              {"0", "0", "-e2", "e2*", "-e3*", "0"},
              {"e1", "e2", "0", "e1*", "0", "-e3*"},
              {"0", "-e2*", "-e1*", "0", "0", "0"},
              {"0", "e3*", "0", "0", "0", "0"},
              {"0", "0", "e3*", "0", "0", "0"}};
      break;
    case CanonicalClass::Trivial:
      throw Error(ErrorKind::UnknownId, "no printed double for the trivial class");
  }
  return parse_formal_matrix(rows, {"e1", "e2", "e3", "e1*", "e2*", "e3*"});
}

std::vector<DoubleReport> five_algebras_report() {
  std::vector<DoubleReport> out;
  for (auto c : {CanonicalClass::N1, CanonicalClass::H6, CanonicalClass::D1, CanonicalClass::E6,
                 CanonicalClass::Dbar8}) {
    DoubleReport r;
    r.cls = c;
    PreLie a = canonical_prelie(c);
    r.algebra = prelie_double(a);
    r.computed = characteristic_matrix(r.algebra->table());
    r.printed = printed_double_matrix(c);
    r.differences = r.computed.differences(r.printed, ZeroTest::exact());
    r.matches = r.differences.empty();
    r.plus_transpose = characteristic_matrix(double_table(a, ZeroTest::exact(), +1));
    r.plus_transpose_matches = r.plus_transpose.equals(r.printed, ZeroTest::exact());
    ProductTable printed_table(r.printed.labels);
    for (std::size_t i = 0; i < 6; ++i) {
      for (std::size_t j = 0; j < 6; ++j) {
        for (const auto& [k, s] : r.printed.at(i, j).terms) printed_table.at(i, j, k) = s;
      }
    }
    r.printed_is_lie = !antisymmetry_violation(printed_table, ZeroTest::exact()) &&
                       check_jacobi(printed_table).ok;
    r.cybe_ok = check_cybe(canonical_r(a)).ok;
    out.push_back(std::move(r));
  }
  return out;
}

std::vector<AlgebraPtr> five_algebras() {
  std::vector<AlgebraPtr> out;
  for (const auto& r : five_algebras_report()) {
    if (!r.matches) {
      throw Error(ErrorKind::MatrixMismatch, "double of " + class_name(r.cls) + " differs from print at " +
                                                 pair_list(r.differences) + "\ncomputed:\n" + r.computed.str());
    }
    out.push_back(r.algebra);
  }
  return out;
}

}  // namespace rbl
