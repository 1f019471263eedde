#include "doctest.h"
#include "rbl/cybe/cybe.hpp"
#include "rbl/rb/rota_baxter.hpp"
#include "rbl/scalar/error.hpp"
#include "cybe_oracle.hpp"
#include "reference_data.hpp"
#include "support.hpp"

using namespace rbl;
using rbl::testing::rand_int;
using rbl::testing::rand_nonzero_rational;
using rbl::testing::rand_rational;
using rbl::reference::orthonormal_basis;
using namespace rbl::testing;

namespace {

constexpr std::size_t E = 0, F = 1, H = 2;

Scalar S(const char* t) { return parse_scalar(t); }
Vector sv(Scalar e, Scalar f, Scalar h) { return Vector(sl2(), {e, f, h}); }

ErrorKind kind_of(const std::function<void()>& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.kind();
  }
  return ErrorKind::ParseError;
}

}  // namespace

TEST_CASE("transpose21") {
  Tensor2 ef = outer(Vector::basis(sl2(), E), Vector::basis(sl2(), F));
  CHECK(transpose21(ef).equals(outer(Vector::basis(sl2(), F), Vector::basis(sl2(), E)), ZeroTest::exact()));
  Tensor2 r1 = parse_tensor2(reference::r1_text(), sl2());
  CHECK(transpose21(r1).equals(r1 * Scalar(-1), ZeroTest::exact()));
  CHECK(transpose21(Tensor2(sl2())).is_zero(ZeroTest::exact()));
}

TEST_CASE("cybe_lhs basics") {
  CHECK(cybe_lhs(Tensor2(sl2())).is_zero(ZeroTest::exact()));
  CHECK(check_cybe(parse_tensor2(reference::r1_text(), sl2())).ok);
  CHECK(check_cybe(parse_tensor2(reference::r2_text(), sl2())).ok);
  CHECK(check_cybe(parse_tensor2(reference::r3_text(), sl2())).ok);
  Tensor2 ef = parse_tensor2("e@f - f@e", sl2());
  CHECK(agrees_with_oracle(ef));
  CybeResult res = check_cybe(ef);
  CHECK_FALSE(res.ok);
  REQUIRE(res.witness);
  Tensor2 ee = parse_tensor2("e@e", sl2());
  CHECK(agrees_with_oracle(ee));
  // [e,e] = 0 kills the first and last sums; the middle one is e (x) [e,e] (x) e = 0.
  CHECK(check_cybe(ee).ok);
}

TEST_CASE("cybe_lhs agrees with the brute-force oracle") {
  for (int t = 0; t < 100; ++t) {
    CHECK(agrees_with_oracle(random_sparse(sl2())));
    CHECK(agrees_with_oracle(random_sparse(sl2_semidirect())));
  }
}

TEST_CASE("lift_operator") {
  AlgebraPtr g6 = sl2_semidirect();
  Tensor2 p1 = lift_operator(catalog_entry("P1").op());
  CHECK(p1.coeffs.size() == 1);
  CHECK(p1.at(H, 4) == Scalar(1));
  CHECK(lift_operator(catalog_entry("P2").op()).is_zero(ZeroTest::exact()));
  Tensor2 p7 = lift_operator(catalog_entry("P7").op());
  CHECK(p7.equals(parse_tensor2("[e+(a)f]@e* + [(1/a)e+f]@f*", g6), ZeroTest::exact()));
  CHECK_THROWS_AS(lift_operator(adjoint_representation(sl2()), Matrix(2, 3)), Error);
  // General form over g + V*: the zero module gives a zero tensor.
  Tensor2 z = lift_operator(zero_representation(sl2(), 2), Matrix{{1, 0, 0}, {0, 0, 1}});
  CHECK(z.at(0, 3) == Scalar(1));
  CHECK(z.at(2, 4) == Scalar(1));
}

TEST_CASE("rb_to_cybe matches the listed tensors") {
  AlgebraPtr g6 = sl2_semidirect();
  CHECK(rb_to_cybe(catalog_entry("P4").op()).equals(parse_tensor2("h@h* - h*@h", g6), ZeroTest::exact()));
  Tensor2 r10 = rb_to_cybe(catalog_entry("P10").op());
  CHECK(r10.coeffs.size() == 4);
  CHECK(r10.equals(parse_tensor2("h@e* - 2f@h* - e*@h + 2h*@f", g6), ZeroTest::exact()));
  const auto& listed = reference::lifted_solutions();
  for (std::size_t k = 0; k < catalog().size(); ++k) {
    const auto& e = catalog()[k];
    Tensor2 r = rb_to_cybe(e.op());
    CHECK_MESSAGE(r.equals(parse_tensor2(listed[k], g6), ZeroTest::exact()), e.id);
    CHECK_MESSAGE(check_cybe(r).ok, e.id);
    CHECK(transpose21(r).equals(r * Scalar(-1), ZeroTest::exact()));
  }
  CHECK_FALSE(check_cybe(rb_to_cybe(OperatorMatrix(sl2(), Matrix::identity(3)))).ok);
}

TEST_CASE("non-Rota-Baxter matrices lift to CYBE failures") {
  int found = 0;
  while (found < 200) {
    Matrix m(3, 3);
    for (std::size_t i = 0; i < 3; ++i) {
      for (std::size_t j = 0; j < 3; ++j) m(i, j) = rand_int(0, 1) ? Scalar(rand_rational(3)) : Scalar(0);
    }
    OperatorMatrix p(sl2(), m);
    if (check_rb(p).ok) continue;
    ++found;
    Tensor2 r = rb_to_cybe(p);
    CHECK_FALSE(check_cybe(r).ok);
    CHECK(transpose21(r).equals(r * Scalar(-1), ZeroTest::exact()));
  }
}

TEST_CASE("bd_solve") {
  Scalar x2 = Scalar::var("x2");
  auto sols = bd_solve(sv(0, x2, S("1/2")));
  REQUIRE(sols.size() == 1);
  CHECK(sols[0].equals(sv(1, -x2 * x2, -x2), ZeroTest::exact()));
  CHECK(bd_solve(sv(0, 0, 1)).empty());
  auto neg = bd_solve(sv(0, x2, S("-1/2")));
  REQUIRE(neg.size() == 1);
  CHECK(neg[0].equals(sv(0, 1, 0), ZeroTest::exact()));
}

TEST_CASE("bd_tensor") {
  Tensor2 r = bd_tensor(sv(0, 0, S("1/2")), sv(1, 0, 0));
  CHECK(r.equals(bd_normal_form({BdFamily::R1, S("-1/2"), std::nullopt}), ZeroTest::exact()));
  CHECK(check_cybe(r).ok);
  Tensor2 r2 = bd_tensor(sv(0, 0, S("-1/2")), sv(0, 1, 0));
  CHECK(r2.equals(bd_normal_form({BdFamily::R2, S("1/2"), std::nullopt}), ZeroTest::exact()));
  CHECK(kind_of([] { bd_tensor(sv(1, 0, 0), sv(1, 0, 0)); }) == ErrorKind::NotEigenpair);
}

TEST_CASE("bd_classify") {
  // Case II, x1 = 1, x3 = 1: c = (2x3-1)/(2x1) = 1/2. The f(x)e coefficient is -c,
  // so the tensor is r3(k = c^2, a = -1/c).
  Vector x = sv(1, S("-3/4"), 1);
  Vector y = sv(1, S("-1/4"), S("1/2"));
  BdClass c = bd_classify(x, y);
  CHECK(c.family == BdFamily::R3);
  CHECK(c.k == S("1/4"));
  CHECK(*c.a == S("-2"));
  BdClass c1 = bd_classify(sv(0, 0, S("1/2")), sv(7, 0, 0));
  CHECK(c1.family == BdFamily::R1);
  CHECK(c1.k == S("-7/2"));
  // Case I, x2 = 3, y1 = 2: y = 2(e - 9f - 3h).
  BdClass c3 = bd_classify(sv(0, 3, S("1/2")), sv(2, -18, -6));
  CHECK(c3.family == BdFamily::R3);
  CHECK(c3.k == S("18"));
  CHECK(*c3.a == S("1/3"));
  CHECK(bd_normal_form(c3).equals(bd_tensor(sv(0, 3, S("1/2")), sv(2, -18, -6)), ZeroTest::exact()));
}

TEST_CASE("bd_classify on random eigenpairs") {
  int matched = 0;
  for (int t = 0; t < 200; ++t) {
    Vector x;
    switch (t % 4) {
      case 0: x = sv(0, Scalar(rand_rational()), S("1/2")); break;
      case 1: x = sv(0, Scalar(rand_rational()), S("-1/2")); break;
      default: {
        Scalar x1(rand_nonzero_rational()), x3(t % 8 == 2 ? Scalar(S("1/2")) : Scalar(rand_rational()));
        x = sv(x1, (Scalar(1) - Scalar(4) * x3 * x3) / (Scalar(4) * x1), x3);
      }
    }
    auto ys = bd_solve(x);
    REQUIRE(ys.size() == 1);
    Vector y = ys[0] * Scalar(rand_nonzero_rational());
    BdClass c = bd_classify(x, y);
    CHECK(bd_normal_form(c).equals(bd_tensor(x, y), ZeroTest::exact()));
    ++matched;
  }
  CHECK(matched == 200);
}

TEST_CASE("orthonormal read-off of the skew operators") {
  Matrix n = orthonormal_basis();
  auto read_off = [&](const char* id) {
    Matrix q = n * catalog_entry(id).matrix * n.inverse();
    Matrix coeff = n.transpose() * q * n;
    Tensor2 r(sl2());
    for (std::size_t i = 0; i < 3; ++i) {
      for (std::size_t j = 0; j < 3; ++j) r.add(i, j, coeff(i, j));
    }
    return r;
  };
  Tensor2 r10 = read_off("P10");
  CHECK(check_cybe(r10).ok);
  CHECK(r10.equals(bd_normal_form({BdFamily::R2, S("1/4"), std::nullopt}), ZeroTest::exact()));
  Tensor2 r15 = read_off("P15");
  CHECK(check_cybe(r15).ok);
  CHECK(r15.equals(bd_normal_form({BdFamily::R1, S("1/4"), std::nullopt}), ZeroTest::exact()));
  Tensor2 r20 = read_off("P20");
  CHECK(check_cybe(r20).ok);
  CHECK(r20.equals(bd_normal_form({BdFamily::R3, S("a^2/4"), S("1/a")}), ZeroTest::exact()));
}

TEST_CASE("cobracket") {
  Vector h = Vector::basis(sl2(), H);
  Tensor2 r1 = parse_tensor2(reference::r1_text(), sl2());
  CHECK(cobracket(h, Tensor2(sl2())).is_zero(ZeroTest::exact()));
  CHECK(cobracket(h, r1).equals(r1 * Scalar(2), ZeroTest::exact()));
  Vector e = Vector::basis(sl2(), E);
  Tensor2 r3 = parse_tensor2(reference::r3_text(), sl2());
  CHECK(cobracket(e * Scalar(2), r3).equals(cobracket(e, r3) * Scalar(2), ZeroTest::exact()));
}

TEST_CASE("cobracket of skew solutions is co-skew, a cocycle and co-Jacobi") {
  std::vector<Tensor2> rs = {parse_tensor2(reference::r1_text(), sl2()), parse_tensor2(reference::r2_text(), sl2()),
                             parse_tensor2(reference::r3_text(), sl2())};
  auto rv = [] { return sv(Scalar(rand_rational()), Scalar(rand_rational()), Scalar(rand_rational())); };
  // x . t = [x (x) 1 + 1 (x) x, t]
  auto act = [](const Vector& x, const Tensor2& t) {
    Tensor2 out(t.algebra);
    for (const auto& [k, c] : t.coeffs) {
      Vector a = bracket(x, Vector::basis(t.algebra, k.first));
      Vector b = bracket(x, Vector::basis(t.algebra, k.second));
      out += outer(a, Vector::basis(t.algebra, k.second)) * c;
      out += outer(Vector::basis(t.algebra, k.first), b) * c;
    }
    return out;
  };
  for (const auto& r : rs) {
    for (int t = 0; t < 5; ++t) {
      Vector x = rv(), y = rv();
      Tensor2 dx = cobracket(x, r);
      CHECK(transpose21(dx).equals(dx * Scalar(-1), ZeroTest::exact()));
      Tensor2 lhs = cobracket(bracket(x, y), r);
      Tensor2 rhs = act(x, cobracket(y, r)) - act(y, cobracket(x, r));
      CHECK(lhs.equals(rhs, ZeroTest::exact()));
    }
    // co-Jacobi: (1 + s + s^2)(delta (x) 1) delta(b_i) = 0 for each basis vector.
    for (std::size_t i = 0; i < 3; ++i) {
      Tensor2 d = cobracket(Vector::basis(sl2(), i), r);
      Tensor3 acc(sl2());
      for (const auto& [k, c] : d.coeffs) {
        Tensor2 dd = cobracket(Vector::basis(sl2(), k.first), r);
        for (const auto& [kk, cc] : dd.coeffs) {
          Scalar w = c * cc;
          std::size_t a = kk.first, b = kk.second, z = k.second;
          acc.add(a, b, z, w);
          acc.add(z, a, b, w);
          acc.add(b, z, a, w);
        }
      }
      CHECK(acc.is_zero(ZeroTest::exact()));
    }
  }
}
