#include "rbl/lie/representation.hpp"

#include "rbl/scalar/error.hpp"

namespace rbl {

std::optional<std::pair<std::size_t, std::size_t>> Representation::law_violation(const LieAlgebra& g,
                                                                                const std::vector<Matrix>& rho,
                                                                                const ZeroTest& test) {
  const std::size_t n = g.dim();
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      Matrix lhs = rho[i] * rho[j] - rho[j] * rho[i];
      Matrix rhs(lhs.rows(), lhs.cols());
      if (!lhs.is_exact()) rhs = rhs.to_numeric();
      for (std::size_t k = 0; k < n; ++k) {
        const Scalar& c = g.c(i, j, k);
        if (c.is_exact() && c.is_zero()) continue;
        rhs += rho[k] * c;
      }
      if (!lhs.equals(rhs, test)) return std::make_pair(i, j);
    }
  }
  return std::nullopt;
}

Representation Representation::create(AlgebraPtr g, std::vector<Matrix> rho, const ZeroTest& test) {
  if (rho.size() != g->dim()) throw Error(ErrorKind::DimensionMismatch, "one matrix per basis vector required");
  std::size_t m = rho.empty() ? 0 : rho[0].rows();
  for (const auto& r : rho) {
    if (r.rows() != m || r.cols() != m) throw Error(ErrorKind::DimensionMismatch, "representation matrix shape");
  }
  if (auto bad = law_violation(*g, rho, test)) {
    throw Error(ErrorKind::RepresentationInvalid, "homomorphism law fails at (" + g->labels()[bad->first] + ", " +
                                                      g->labels()[bad->second] + ")");
  }
  return Representation(std::move(g), m, std::move(rho));
}

Matrix Representation::act(const std::vector<Scalar>& x) const {
  if (x.size() != g_->dim()) throw Error(ErrorKind::DimensionMismatch, "element length");
  Matrix out(m_, m_);
  bool first = true;
  for (std::size_t i = 0; i < x.size(); ++i) {
    if (x[i].is_exact() && x[i].is_zero()) continue;
    if (first) {
      out = rho_[i] * x[i];
      first = false;
    } else {
      out += rho_[i] * x[i];
    }
  }
  return out;
}

Representation adjoint_representation(const AlgebraPtr& g) {
  std::vector<Matrix> rho;
  for (std::size_t i = 0; i < g->dim(); ++i) rho.push_back(g->ad_basis(i));
  return Representation::create(g, std::move(rho));
}

Representation dual_representation(const Representation& rho, const ZeroTest& test) {
  std::vector<Matrix> out;
  for (const auto& m : rho.matrices()) out.push_back(-m.transpose());
  return Representation::create(rho.algebra(), std::move(out), test);
}

Representation zero_representation(const AlgebraPtr& g, std::size_t m) {
  return Representation::create(g, std::vector<Matrix>(g->dim(), Matrix(m, m)));
}

std::vector<std::string> dual_labels(const std::vector<std::string>& labels) {
  std::vector<std::string> out;
  for (const auto& l : labels) out.push_back(l + "*");
  return out;
}

AlgebraPtr semidirect_product(const Representation& rho, std::vector<std::string> module_labels, std::string name,
                              const ZeroTest& test) {
  const LieAlgebra& g = *rho.algebra();
  const std::size_t n = g.dim();
  const std::size_t m = rho.module_dim();
  if (module_labels.size() != m) throw Error(ErrorKind::DimensionMismatch, "module label count");
  std::vector<std::string> labels = g.labels();
  labels.insert(labels.end(), module_labels.begin(), module_labels.end());
  ProductTable t(std::move(labels));
  if (!g.is_exact()) t = t.to_numeric();
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      for (std::size_t k = 0; k < n; ++k) t.at(i, j, k) = g.c(i, j, k);
    }
    for (std::size_t a = 0; a < m; ++a) {
      for (std::size_t c = 0; c < m; ++c) {
        const Scalar& v = rho.matrix(i)(c, a);
        t.at(i, n + a, n + c) = v;
        t.at(n + a, i, n + c) = -v;
      }
    }
  }
  try {
    return LieAlgebra::create(std::move(t), std::move(name), test);
  } catch (const Error& e) {
    if (e.kind() == ErrorKind::NotLieAlgebra) throw Error(ErrorKind::RepresentationInvalid, e.what());
    throw;
  }
}

AlgebraPtr sl2_semidirect() {
  static const AlgebraPtr g = [] {
    Representation coad = dual_representation(adjoint_representation(sl2()));
    return semidirect_product(coad, dual_labels(sl2()->labels()), "sl2-semidirect");
  }();
  return g;
}

}  // namespace rbl
