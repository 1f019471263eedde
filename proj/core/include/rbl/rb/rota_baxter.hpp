#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "rbl/lie/operator.hpp"

namespace rbl {

/// Residual [P b_i, P b_j] - P([P b_i, b_j] + [b_i, P b_j] + w [b_i, b_j]).
struct PairResidual {
  std::size_t i = 0;
  std::size_t j = 0;
  std::vector<Scalar> residual;
};

struct RbReport {
  bool ok = true;
  std::vector<PairResidual> failures;  // every failing pair i < j
};

RbReport check_rb(const OperatorMatrix& p, const Scalar& weight = Scalar(0), const ZeroTest& test = ZeroTest::exact());

/// Coefficient equations of the weight-0 Rota-Baxter identity in the n^2
/// unknowns r11..rnn, one per pair i < j and output component.
struct PolySystem {
  std::vector<VarId> unknowns;  // row-major r_ij
  std::vector<Polynomial> equations;
  std::vector<std::string> origin;  // e.g. "(e,f):h"
};

/// NumericTag unless the structure constants are exact constants.
PolySystem generate_rb_system(const LieAlgebra& g);
/// Sign-normalizes: lex-leading coefficient made positive (or 1 for non-real).
Polynomial normalize_equation(const Polynomial& p);
/// Variable for the (i, j) matrix unknown (1-based names r11, r12, ...).
VarId unknown(std::size_t i, std::size_t j);

/// One family of Rota-Baxter operators on sl2.
struct CatalogEntry {
  std::string id;                        // "P1" .. "P22"
  std::vector<std::string> params;       // subset of {a, b}
  Matrix matrix;                         // Cartan-Weyl basis, row convention
  std::vector<Polynomial> nonvanishing;  // constraint polynomials, each != 0
  std::optional<Polynomial> branch;      // P22: 16ab^3 - 1 splits the induced pre-Lie class

  OperatorMatrix op() const { return OperatorMatrix(sl2(), matrix); }
};

const std::vector<CatalogEntry>& catalog();
/// Entry from row-major entry text; each parameter is constrained nonzero.
CatalogEntry make_entry(std::string id, std::vector<std::string> params, std::vector<std::vector<std::string>> rows);
/// UnknownId for ids outside P1..P22.
const CatalogEntry& catalog_entry(std::string_view id);

/// ConstraintViolated when a constraint vanishes at the binding.
OperatorMatrix specialize(const CatalogEntry& entry, const Bindings& bindings);

/// N*M*N^{-1} equals minus its transpose.
bool is_skew_in_basis(const OperatorMatrix& p, const Matrix& n, const ZeroTest& test = ZeroTest::exact());
/// lambda != 0 with Q = lambda P, if any.
std::optional<Scalar> same_ray(const OperatorMatrix& p, const OperatorMatrix& q,
                               const ZeroTest& test = ZeroTest::exact());

struct CatalogVerdict {
  std::string id;
  bool ok = true;
  std::vector<PairResidual> failures;
  std::string detail;  // binding used (numeric mode) or error text
};

/// Symbolic Rota-Baxter check of every entry.
std::vector<CatalogVerdict> verify_catalog_exact(const std::vector<CatalogEntry>& entries);
/// Checks at `samples` random complex parameter points per entry.
std::vector<CatalogVerdict> verify_catalog_numeric(const std::vector<CatalogEntry>& entries, int samples, double tol,
                                                   std::uint64_t seed);

}  // namespace rbl
