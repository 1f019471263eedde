#include <set>

#include "doctest.h"
#include "rbl/rb/rota_baxter.hpp"
#include "rbl/scalar/error.hpp"
#include "reference_data.hpp"
#include "support.hpp"

using namespace rbl;
using rbl::testing::rand_int;
using rbl::testing::rand_nonzero_rational;
using rbl::testing::rand_rational;
using rbl::reference::orthonormal_basis;

namespace {

ErrorKind kind_of(const std::function<void()>& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.kind();
  }
  return ErrorKind::NoMatch;
}

Bindings point(const CatalogEntry& e) {
  Bindings b;
  for (const auto& p : e.params) b.emplace(variable(p), Coeff(rand_nonzero_rational(5)));
  return b;
}

Scalar S(const char* text) { return parse_scalar(text); }

bool vanishes_at(const PolySystem& sys, const Matrix& m) {
  std::map<VarId, Coeff> vals;
  std::size_t n = m.rows();
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) vals[sys.unknowns[i * n + j]] = m(i, j).exact().constant_value();
  }
  for (const auto& eq : sys.equations) {
    if (!eq.evaluate([&](VarId v) { return vals.at(v); }).is_zero()) return false;
  }
  return true;
}

}  // namespace

TEST_CASE("check_rb basics") {
  CHECK(check_rb(catalog_entry("P1").op()).ok);
  CHECK(check_rb(OperatorMatrix(sl2(), Matrix(3, 3))).ok);
  RbReport id = check_rb(OperatorMatrix(sl2(), Matrix::identity(3)));
  CHECK_FALSE(id.ok);
  bool found = false;
  for (const auto& f : id.failures) {
    if (f.i == 0 && f.j == 1) {
      found = true;
      CHECK(f.residual[0] == Scalar(0));
      CHECK(f.residual[1] == Scalar(0));
      CHECK(f.residual[2] == Scalar(-1));
    }
  }
  CHECK(found);
}

TEST_CASE("weight-lambda identity: -lambda*id is a Rota-Baxter operator of weight lambda") {
  // P = -lambda id: lambda^2[x,y] = -lambda(-2 lambda + lambda)[x,y].
  Scalar lambda(3);
  CHECK(check_rb(OperatorMatrix(sl2(), Matrix::identity(3) * -lambda), lambda).ok);
  CHECK_FALSE(check_rb(OperatorMatrix(sl2(), Matrix::identity(3) * -lambda)).ok);
}

TEST_CASE("generated system for sl2 matches the nine printed equations up to sign") {
  PolySystem sys = generate_rb_system(*sl2());
  REQUIRE(sys.equations.size() == 9);
  const auto& printed = reference::printed_rb_equations();
  std::set<std::size_t> used;
  for (const auto& text : printed) {
    Polynomial p = normalize_equation(parse_ratfun(text).num());
    std::size_t hits = 0;
    for (std::size_t k = 0; k < sys.equations.size(); ++k) {
      if (sys.equations[k] == p) {
        ++hits;
        used.insert(k);
      }
    }
    CHECK_MESSAGE(hits == 1, text.c_str());
  }
  CHECK(used.size() == 9);
  // The e-coefficient of the (e,f) pair.
  CHECK(sys.origin[0] == "(e,f):e");
  CHECK(sys.equations[0] == normalize_equation(parse_ratfun(printed[0]).num()));
}

TEST_CASE("generated system edge cases") {
  CHECK(generate_rb_system(*abelian({"x"})).equations.empty());
  ProductTable t({"x", "y"});
  t.at(0, 1, 1) = Scalar(1);
  t.at(1, 0, 1) = Scalar(-1);
  AlgebraPtr g = LieAlgebra::create(t);
  PolySystem sys = generate_rb_system(*g);
  CHECK(sys.equations.size() == 2);
  int solutions = 0;
  for (long code = 0; code < 625; ++code) {
    Matrix m(2, 2);
    long c = code;
    for (std::size_t k = 0; k < 4; ++k, c /= 5) m(k / 2, k % 2) = Scalar(c % 5 - 2);
    bool rb = check_rb(OperatorMatrix(g, m)).ok;
    CHECK(rb == vanishes_at(sys, m));
    solutions += rb;
  }
  CHECK(solutions > 1);
  AlgebraPtr num = sl2()->to_numeric(ZeroTest::within(0));
  CHECK(kind_of([&] { generate_rb_system(*num); }) == ErrorKind::NumericTag);
}

TEST_CASE("system and checker agree on random matrices") {
  PolySystem sys = generate_rb_system(*sl2());
  int positives = 0;
  for (int t = 0; t < 500; ++t) {
    Matrix m(3, 3);
    if (t % 5 == 0) {
      const auto& e = catalog()[static_cast<std::size_t>(rand_int(0, 21))];
      m = specialize(e, point(e)).m * Scalar(rand_nonzero_rational());
    } else {
      for (std::size_t i = 0; i < 3; ++i) {
        for (std::size_t j = 0; j < 3; ++j) m(i, j) = rand_int(0, 2) == 0 ? Scalar(0) : Scalar(rand_rational(3));
      }
    }
    bool rb = check_rb(OperatorMatrix(sl2(), m)).ok;
    positives += rb;
    CHECK(rb == vanishes_at(sys, m));
  }
  CHECK(positives >= 100);
}

TEST_CASE("catalog transcription") {
  REQUIRE(catalog().size() == 22);
  CHECK(catalog_entry("P2").matrix.is_zero(ZeroTest::exact()));
  CHECK(catalog_entry("P2").params.empty());
  const Matrix& p19 = catalog_entry("P19").matrix;
  CHECK(p19(0, 0) == S("1"));
  CHECK(p19(0, 1) == S("-3*a^2/4"));
  CHECK(p19(0, 2) == S("a"));
  CHECK(catalog_entry("P22").matrix(0, 2) == S("-(1+16*a*b^3)/(16*b^2)"));
  CHECK(catalog_entry("P8").matrix == Matrix({{1, S("a^2/16"), 0}, {S("16/a^2"), -3, S("-8/a")}, {0, S("a"), 2}}));
  CHECK(catalog_entry("P22").branch.has_value());
  CHECK(catalog_entry("P22").params == std::vector<std::string>{"a", "b"});
  CHECK(kind_of([] { catalog_entry("P23"); }) == ErrorKind::UnknownId);
}

TEST_CASE("specialize") {
  auto b = [](std::initializer_list<std::pair<std::string_view, Binding>> l) { return make_bindings(l); };
  CHECK(specialize(catalog_entry("P6"), b({{"a", Coeff(3)}})).m == Matrix({{0, 0, 0}, {1, 0, 3}, {0, 0, 0}}));
  CHECK(kind_of([&] { specialize(catalog_entry("P7"), b({{"a", Coeff(0)}})); }) == ErrorKind::ConstraintViolated);
  CHECK(kind_of([&] { specialize(catalog_entry("P6"), b({{"a", Coeff(0)}})); }) == ErrorKind::ConstraintViolated);
  OperatorMatrix p22 = specialize(catalog_entry("P22"), b({{"a", Coeff(1)}, {"b", Coeff(1)}}));
  CHECK(p22.m(2, 2) == Scalar(make_rational(17, 4)));
  CHECK(check_rb(p22).ok);
}

TEST_CASE("catalog soundness, symbolic") {
  for (const auto& v : verify_catalog_exact(catalog())) CHECK_MESSAGE(v.ok, v.id);
}

TEST_CASE("catalog soundness, numeric") {
  for (const auto& v : verify_catalog_numeric(catalog(), 3, 1e-9, 0)) CHECK_MESSAGE(v.ok, std::string(v.id + " " + v.detail));
}

TEST_CASE("P22 residual vanishes at random rational points") {
  const CatalogEntry& e = catalog_entry("P22");
  int checked = 0;
  while (checked < 20) {
    Bindings b = make_bindings({{"a", Coeff(rand_nonzero_rational())}, {"b", Coeff(rand_nonzero_rational())}});
    RbReport r = check_rb(specialize(e, b));
    CHECK(r.ok);
    ++checked;
  }
}

TEST_CASE("scaling closure") {
  for (const auto& e : catalog()) {
    OperatorMatrix p = specialize(e, point(e));
    p.m *= Scalar(rand_nonzero_rational());
    CHECK_MESSAGE(check_rb(p).ok, e.id);
  }
}

TEST_CASE("skew operators in the orthonormal basis") {
  Matrix n = orthonormal_basis();
  CHECK(is_skew_in_basis(catalog_entry("P10").op(), n));
  CHECK_FALSE(is_skew_in_basis(catalog_entry("P1").op(), n));
  CHECK(is_skew_in_basis(OperatorMatrix(sl2(), Matrix(3, 3)), Matrix{{1, 2, 0}, {0, 1, 0}, {0, 0, 5}}));
}

TEST_CASE("skew census: exactly P2, P10, P15, P20 and the printed matrices") {
  Matrix n = orthonormal_basis();
  std::vector<std::string> skew;
  for (const auto& e : catalog()) {
    if (is_skew_in_basis(e.op(), n)) skew.push_back(e.id);
  }
  CHECK(skew == std::vector<std::string>{"P2", "P10", "P15", "P20"});
  Matrix ninv = n.inverse();
  for (const auto& [id, rows] : reference::printed_skew_matrices()) {
    Matrix want(3, 3);
    for (std::size_t r = 0; r < 3; ++r) {
      for (std::size_t c = 0; c < 3; ++c) want(r, c) = S(rows[r][c].c_str());
    }
    CHECK_MESSAGE(n * catalog_entry(id).matrix * ninv == want, id);
  }
}

TEST_CASE("same_ray") {
  OperatorMatrix p1 = catalog_entry("P1").op();
  OperatorMatrix five{sl2(), p1.m * Scalar(5)};
  auto l = same_ray(p1, five);
  REQUIRE(l);
  CHECK(*l == Scalar(5));
  CHECK_FALSE(same_ray(p1, catalog_entry("P2").op()));
  auto p7 = [](long a) { return specialize(catalog_entry("P7"), make_bindings({{"a", Coeff(a)}})); };
  CHECK_FALSE(same_ray(p7(2), p7(3)));
}

TEST_CASE("automorphisms preserve the Rota-Baxter property") {
  std::vector<Matrix> autos;
  autos.push_back(Matrix{{0, 1, 0}, {1, 0, 0}, {0, 0, -1}});
  autos.push_back(Matrix{{3, 0, 0}, {0, S("1/3"), 0}, {0, 0, 1}});
  Scalar s(2);
  // exp(ad s e): e -> e, f -> f + s h - s^2 e, h -> h - 2 s e.
  autos.push_back(Matrix{{1, 0, 0}, {-s * s, 1, s}, {Scalar(-2) * s, 0, 1}});
  for (const auto& n : autos) {
    AlgebraPtr g = sl2()->rebased(n, {"e", "f", "h"});
    REQUIRE(same_algebra(*g, *sl2()));
    for (const auto& e : catalog()) {
      OperatorMatrix p = specialize(e, point(e));
      OperatorMatrix q(sl2(), n * p.m * n.inverse());
      CHECK_MESSAGE(check_rb(q).ok, e.id);
    }
  }
  // Non-RB stays non-RB.
  OperatorMatrix id(sl2(), Matrix::identity(3) + Matrix{{0, 1, 0}, {0, 0, 0}, {0, 0, 0}});
  CHECK_FALSE(check_rb(OperatorMatrix(sl2(), autos[2] * id.m * autos[2].inverse())).ok);
}
