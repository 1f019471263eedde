#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "rbl/lie/algebra.hpp"

namespace rbl {

/// rho(b_i) as m x m matrices acting on column coordinates of the module.
class Representation {
 public:
  /// Verifies rho([b_i,b_j]) = [rho(b_i), rho(b_j)]; RepresentationInvalid otherwise.
  static Representation create(AlgebraPtr g, std::vector<Matrix> rho, const ZeroTest& test = ZeroTest::exact());
  /// First basis pair violating the homomorphism law, if any.
  static std::optional<std::pair<std::size_t, std::size_t>> law_violation(const LieAlgebra& g,
                                                                          const std::vector<Matrix>& rho,
                                                                          const ZeroTest& test);

  const AlgebraPtr& algebra() const { return g_; }
  std::size_t module_dim() const { return m_; }
  const Matrix& matrix(std::size_t i) const { return rho_[i]; }
  const std::vector<Matrix>& matrices() const { return rho_; }
  /// rho(x) for x in coordinates.
  Matrix act(const std::vector<Scalar>& x) const;

 private:
  Representation(AlgebraPtr g, std::size_t m, std::vector<Matrix> rho)
      : g_(std::move(g)), m_(m), rho_(std::move(rho)) {}
  AlgebraPtr g_;
  std::size_t m_;
  std::vector<Matrix> rho_;
};

Representation adjoint_representation(const AlgebraPtr& g);
/// rho*(x) = -rho(x)^T.
Representation dual_representation(const Representation& rho, const ZeroTest& test = ZeroTest::exact());
Representation zero_representation(const AlgebraPtr& g, std::size_t m);

/// Labels suffixed with "*".
std::vector<std::string> dual_labels(const std::vector<std::string>& labels);

/// g + V with [x1+v1, x2+v2] = [x1,x2] + rho(x1)v2 - rho(x2)v1; g labels
/// first, then module labels.
AlgebraPtr semidirect_product(const Representation& rho, std::vector<std::string> module_labels,
                              std::string name = {}, const ZeroTest& test = ZeroTest::exact());

/// sl2 + sl2* under the coadjoint action, basis e, f, h, e*, f*, h*.
AlgebraPtr sl2_semidirect();

}  // namespace rbl
