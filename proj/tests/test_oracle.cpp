#include <algorithm>
#include <fstream>
#include <set>
#include <sstream>

#include "doctest.h"
#include "rbl/oracle/finite_field.hpp"
#include "rbl/scalar/error.hpp"
#include "support.hpp"

using namespace rbl;

namespace {

ErrorKind kind_of(const std::function<void()>& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.kind();
  }
  return ErrorKind::ParseError;
}

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  std::stringstream s;
  s << in.rdbuf();
  return s.str();
}

/// Direct residual [P x, P y] - P([P x, y] + [x, P y]) mod p on basis pairs,
/// written out with plain integers.
bool naive_rb_mod(const std::array<long, 9>& r, long p) {
  auto br = [](const std::array<long, 3>& x, const std::array<long, 3>& y) {
    return std::array<long, 3>{2 * (x[2] * y[0] - x[0] * y[2]), -2 * (x[2] * y[1] - x[1] * y[2]),
                               x[0] * y[1] - x[1] * y[0]};
  };
  auto apply = [&](const std::array<long, 3>& x) {
    std::array<long, 3> out{};
    for (int i = 0; i < 3; ++i) {
      for (int j = 0; j < 3; ++j) out[j] += x[i] * r[i * 3 + j];
    }
    return out;
  };
  for (int i = 0; i < 3; ++i) {
    for (int j = i + 1; j < 3; ++j) {
      std::array<long, 3> x{}, y{};
      x[i] = 1;
      y[j] = 1;
      auto px = apply(x), py = apply(y);
      auto lhs = br(px, py);
      auto a = br(px, y), b = br(x, py);
      auto rhs = apply({a[0] + b[0], a[1] + b[1], a[2] + b[2]});
      for (int k = 0; k < 3; ++k) {
        if ((lhs[k] - rhs[k]) % p != 0) return false;
      }
    }
  }
  return true;
}

FpMatrix reduce(const Matrix& m, std::uint32_t p) {
  FpMatrix out;
  for (std::size_t i = 0; i < 3; ++i) {
    for (std::size_t j = 0; j < 3; ++j) {
      Rational q = m(i, j).exact().num().constant_value().u().re() / m(i, j).exact().den().constant_value().u().re();
      out(i, j) = static_cast<std::uint8_t>((FpScalar(mpz_class(q.get_num() % p).get_si(), p) *
                                             FpScalar(mpz_class(q.get_den() % p).get_si(), p).inverse())
                                                .value);
    }
  }
  return out;
}

}  // namespace

TEST_CASE("F_p arithmetic") {
  FpScalar a(3, 7), b(5, 7);
  CHECK((a + b).value == 1);
  CHECK((a - b).value == 5);
  CHECK((a * b).value == 1);
  CHECK((a * a.inverse()).value == 1);
  CHECK(FpScalar(-1, 5).value == 4);
  CHECK(kind_of([] { FpScalar(0, 5).inverse(); }) == ErrorKind::DivisionByZero);
  for (std::uint32_t p : {3u, 5u, 7u, 11u, 13u}) CHECK_NOTHROW(require_modulus(p));
  for (std::uint32_t p : {2u, 9u, 15u, 17u, 1u}) CHECK(kind_of([p] { require_modulus(p); }) == ErrorKind::UnsupportedModulus);
  CHECK(kind_of([] { enumerate_rb_fp(17); }) == ErrorKind::UnsupportedModulus);
}

TEST_CASE("enumeration over F_3 agrees with a naive scan") {
  std::set<FpMatrix> naive;
  for (long code = 0; code < 19683; ++code) {
    std::array<long, 9> r{};
    long c = code;
    for (int k = 8; k >= 0; --k, c /= 3) r[k] = c % 3;
    if (naive_rb_mod(r, 3)) {
      FpMatrix m;
      for (int k = 0; k < 9; ++k) m.e[k] = static_cast<std::uint8_t>(r[k]);
      naive.insert(m);
    }
  }
  auto all = enumerate_rb_fp(3, 2);
  CHECK(std::vector<FpMatrix>(naive.begin(), naive.end()) == all);
  CHECK(all.size() == 75);
  CHECK(std::binary_search(all.begin(), all.end(), FpMatrix{}));
  CHECK(std::binary_search(all.begin(), all.end(), reduce(catalog_entry("P1").matrix, 3)));
  FpSystem sys(3);
  CHECK(sys.size() == 9);
}

TEST_CASE("pinned counts and determinism") {
  CHECK(enumerate_rb_fp(5).size() == 365);
  auto a = enumerate_rb_fp(7, 1), b = enumerate_rb_fp(7, 4);
  CHECK(a.size() == 1015);
  CHECK(a == b);
  CHECK(std::is_sorted(a.begin(), a.end()));
}

TEST_CASE("catalog specializations") {
  auto p2 = specialize_entry_fp(catalog_entry("P2"), 3);
  REQUIRE(p2.size() == 1);
  CHECK(p2[0] == FpMatrix{});
  auto p4 = specialize_entry_fp(catalog_entry("P4"), 3);
  CHECK(p4.size() == 2);
  for (const auto& m : p4) {
    for (std::size_t k = 0; k < 8; ++k) CHECK(m.e[k] == 0);
  }
  auto p6 = specialize_entry_fp(catalog_entry("P6"), 5);
  CHECK(p6.size() <= 16);
  for (const auto& m : p6) {
    CHECK(m(1, 0) != 0);
    CHECK(m(1, 1) == 0);
    CHECK(m(1, 2) != 0);
    for (std::size_t j = 0; j < 3; ++j) CHECK(m(0, j) + m(2, j) == 0);
  }
  // 27 = 0 mod 3: every P19 entry with 27 in a denominator has a pole.
  CHECK(specialize_entry_fp(catalog_entry("P19"), 3).empty());
}

TEST_CASE("corrupted specializations fail the reduced system") {
  CatalogEntry bad = catalog_entry("P8");
  bad.matrix(1, 2) = -bad.matrix(1, 2);
  FpSystem sys(5);
  auto ms = specialize_entry_fp(bad, 5);
  REQUIRE_FALSE(ms.empty());
  CHECK(std::any_of(ms.begin(), ms.end(), [&](const FpMatrix& m) { return !sys.satisfied(m); }));
}

TEST_CASE("compare_fp against pinned orphans") {
  for (std::uint32_t p : {3u, 5u, 7u}) {
    FpReport r = compare_fp(p, 4);
    auto all = enumerate_rb_fp(p);
    auto spec = specialize_catalog_fp(p);
    CHECK(std::includes(all.begin(), all.end(), spec.begin(), spec.end()));
    CHECK(r.enumerated == all.size());
    CHECK(r.specialized == spec.size());
    CHECK(r.orphans.size() + r.specialized == r.enumerated);
    std::string pinned = read_file(std::string(RBL_TEST_DATA_DIR) + "/orphans_p" + std::to_string(p) + ".txt");
    CHECK_MESSAGE(format_orphans(r) == pinned, "p = " << p);
  }
}

TEST_CASE("enumerated sets are closed under scaling and the swap automorphism") {
  for (std::uint32_t p : {3u, 5u, 7u}) {
    auto all = enumerate_rb_fp(p);
    std::set<FpMatrix> s(all.begin(), all.end());
    for (const auto& m : all) {
      for (std::uint32_t l = 1; l < p; ++l) CHECK(s.count(m.scaled(l, p)));
      // e <-> f, h -> -h: M' = S M S with S = [[0,1,0],[1,0,0],[0,0,-1]].
      FpMatrix t;
      const std::array<int, 3> perm = {1, 0, 2};
      const std::array<int, 3> sign = {1, 1, -1};
      for (int i = 0; i < 3; ++i) {
        for (int j = 0; j < 3; ++j) {
          long v = sign[i] * sign[j] * m(perm[i], perm[j]);
          t(i, j) = static_cast<std::uint8_t>(((v % static_cast<long>(p)) + p) % p);
        }
      }
      CHECK(s.count(t));
    }
  }
}

TEST_CASE("a rational Rota-Baxter operator outside the catalog") {
  // P(x) = K(w, x) w with w = e + f + h: rank one, annihilated by ad w.
  Matrix q{{1, 1, 1}, {1, 1, 1}, {2, 2, 2}};
  CHECK(check_rb(OperatorMatrix(sl2(), q)).ok);
  // Every entry but P22 has an identically zero coefficient, q has none.
  for (const auto& e : catalog()) {
    if (e.id == "P22") continue;
    bool has_zero = false;
    for (std::size_t k = 0; k < 9; ++k) has_zero |= e.matrix(k / 3, k % 3) == Scalar(0);
    CHECK_MESSAGE(has_zero, e.id);
  }
  // P22 is rank one with r11*r21/r31^2 = -1/4 for all a, b; the ratio is
  // scale invariant and equals 1/4 for q.
  const Matrix& p22 = catalog_entry("P22").matrix;
  CHECK(p22(0, 0) * p22(1, 0) / (p22(2, 0) * p22(2, 0)) == Scalar(make_rational(-1, 4)));
  CHECK(q(0, 0) * q(1, 0) / (q(2, 0) * q(2, 0)) == Scalar(make_rational(1, 4)));
  FpMatrix m5 = reduce(q, 5);
  FpReport r = compare_fp(5);
  CHECK(std::binary_search(r.orphans.begin(), r.orphans.end(), m5));
  CHECK(lifts_to_rational(m5, 5));
  CHECK(r.rational_lifts == 8);
}
