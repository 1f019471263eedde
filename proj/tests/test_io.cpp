#include "doctest.h"
#include "io.hpp"
#include "rbl/cybe/cybe.hpp"
#include "rbl/scalar/error.hpp"
#include "support.hpp"

using namespace rbl;

TEST_CASE("tensor JSON round trip") {
  for (const auto& e : catalog()) {
    Tensor2 r = rb_to_cybe(e.op());
    io::json j = io::tensor_json(r);
    CHECK(j["algebra"] == "sl2-semidirect");
    Tensor2 back = io::tensor_from_json(io::json::parse(j.dump()));
    CHECK_MESSAGE(back.equals(r, ZeroTest::exact()), e.id);
  }
  CHECK_THROWS_AS(io::tensor_from_json(io::json{{"algebra", "so3"}, {"terms", io::json::array()}}), Error);
}

TEST_CASE("catalog entry JSON round trip") {
  for (const auto& e : catalog()) {
    CatalogEntry back = io::entry_from_json(io::json::parse(io::entry_json(e).dump()));
    CHECK(back.id == e.id);
    CHECK(back.params == e.params);
    CHECK(back.matrix == e.matrix);
  }
}

TEST_CASE("matrix JSON and bindings") {
  Matrix m{{1, 0, make_rational(1, 2)}, {0, 0, 0}, {Scalar::var("a"), 0, Scalar::sqrt(2)}};
  CHECK(io::matrix_from_json(io::json::parse(io::matrix_json(m).dump())) == m);
  Bindings b = io::parse_bindings("a=1/2,b=~0.5+1*i");
  CHECK(std::get<Coeff>(b.at(variable("a"))) == Coeff(make_rational(1, 2)));
  CHECK(std::get<std::complex<double>>(b.at(variable("b"))) == std::complex<double>(0.5, 1));
  CHECK_THROWS_AS(io::parse_bindings("a"), Error);
  CHECK_THROWS_AS(io::parse_bindings("a=b"), Error);
  CHECK(io::parse_sl2_vector("0,3,1/2").equals(Vector(sl2(), {0, 3, make_rational(1, 2)}), ZeroTest::exact()));
}

TEST_CASE("report JSON is deterministic") {
  io::Report r;
  r.command = "x";
  r.add("a", true);
  r.add("b", false, "why");
  CHECK_FALSE(r.ok());
  CHECK(r.to_json().dump() == r.to_json().dump());
  CHECK(r.to_json()["pass"] == false);
  CHECK(r.table() == "PASS a\nFAIL b  why\n");
}
