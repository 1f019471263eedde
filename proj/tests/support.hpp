#pragma once

#include <cstdint>
#include <cstdlib>
#include <random>

#include "rbl/scalar/scalar.hpp"

namespace rbl::testing {

inline std::uint64_t seed() {
  const char* s = std::getenv("RBL_SEED");
  return s ? std::strtoull(s, nullptr, 10) : 0;
}

/// Deterministic generator shared by the property tests of one binary.
inline std::mt19937_64& rng() {
  static std::mt19937_64 gen(seed());
  return gen;
}

inline long rand_int(long lo, long hi) { return std::uniform_int_distribution<long>(lo, hi)(rng()); }

inline Rational rand_rational(long range = 9) {
  long d = rand_int(1, range);
  return make_rational(rand_int(-range, range), d);
}

inline Rational rand_nonzero_rational(long range = 9) {
  Rational q;
  do q = rand_rational(range);
  while (q == 0);
  return q;
}

inline GaussRational rand_gauss(long range = 9) { return {rand_rational(range), rand_rational(range)}; }

}  // namespace rbl::testing

#include "doctest.h"
#include "rbl/scalar/text.hpp"

namespace doctest {
template <>
struct StringMaker<rbl::Scalar> {
  static String convert(const rbl::Scalar& s) { return s.str().c_str(); }
};
template <>
struct StringMaker<rbl::RatFun> {
  static String convert(const rbl::RatFun& s) { return s.str().c_str(); }
};
template <>
struct StringMaker<rbl::Coeff> {
  static String convert(const rbl::Coeff& s) { return s.str().c_str(); }
};
}  // namespace doctest
