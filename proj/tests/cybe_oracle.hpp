#pragma once

#include <array>
#include <vector>

#include "rbl/cybe/cybe.hpp"
#include "support.hpp"

namespace rbl::testing {

/// Dense brute-force expansion of the three double sums, written without
/// the library's tensor helpers.
inline std::vector<Scalar> oracle_cybe(const Tensor2& r) {
  const LieAlgebra& g = *r.algebra;
  const std::size_t n = g.dim();
  std::vector<Scalar> out(n * n * n, Scalar(0));
  std::vector<std::array<std::size_t, 2>> idx;
  std::vector<Scalar> val;
  for (const auto& [k, c] : r.coeffs) {
    idx.push_back({k.first, k.second});
    val.push_back(c);
  }
  auto at = [&](std::size_t a, std::size_t b, std::size_t c) -> Scalar& { return out[(a * n + b) * n + c]; };
  for (std::size_t p = 0; p < idx.size(); ++p) {
    for (std::size_t q = 0; q < idx.size(); ++q) {
      std::size_t ap = idx[p][0], bp = idx[p][1], aq = idx[q][0], bq = idx[q][1];
      Scalar w = val[p] * val[q];
      for (std::size_t m = 0; m < n; ++m) {
        at(m, bp, bq) += w * g.c(ap, aq, m);
        at(ap, m, bq) += w * g.c(bp, aq, m);
        at(ap, aq, m) += w * g.c(bp, bq, m);
      }
    }
  }
  return out;
}

inline bool agrees_with_oracle(const Tensor2& r) {
  std::vector<Scalar> dense = oracle_cybe(r);
  Tensor3 t = cybe_lhs(r);
  const std::size_t n = r.algebra->dim();
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = 0; b < n; ++b) {
      for (std::size_t c = 0; c < n; ++c) {
        if (t.at(a, b, c) != dense[(a * n + b) * n + c]) return false;
      }
    }
  }
  return true;
}

inline Tensor2 random_sparse(const AlgebraPtr& g) {
  Tensor2 r(g);
  long terms = rand_int(1, 6);
  long n = static_cast<long>(g->dim());
  for (long t = 0; t < terms; ++t) {
    r.add(static_cast<std::size_t>(rand_int(0, n - 1)), static_cast<std::size_t>(rand_int(0, n - 1)),
          Scalar(rand_nonzero_rational(4)));
  }
  return r;
}

}  // namespace rbl::testing
