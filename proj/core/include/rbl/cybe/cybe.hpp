#pragma once

#include <optional>
#include <vector>

#include "rbl/cybe/tensor.hpp"
#include "rbl/lie/operator.hpp"
#include "rbl/lie/representation.hpp"

namespace rbl {

/// [r12,r13] + [r12,r23] + [r13,r23] expanded in g (x) g (x) g.
Tensor3 cybe_lhs(const Tensor2& r);

struct CybeResult {
  bool ok = true;
  std::optional<std::array<std::size_t, 3>> witness;  // first nonzero coefficient
  Scalar value;
};
CybeResult check_cybe(const Tensor2& r, const ZeroTest& test = ZeroTest::exact());

/// For P: V -> g given row-wise (row i = P(v_i) in g coordinates), the
/// tensor sum_i P(v_i) (x) v_i* over g + V* (dual action of rho).
Tensor2 lift_operator(const Representation& rho, const Matrix& p);
/// V = g under the adjoint action; sl2 lands in sl2_semidirect().
Tensor2 lift_operator(const OperatorMatrix& p);
/// P^ - P^21.
Tensor2 rb_to_cybe(const OperatorMatrix& p);
/// g + g* under the coadjoint action (cached for sl2).
AlgebraPtr coadjoint_semidirect(const AlgebraPtr& g);

/// Basis of {y : [x, y] = y}.
std::vector<Vector> bd_solve(const Vector& x, const ZeroTest& test = ZeroTest::exact());
/// x (x) y - y (x) x; NotEigenpair unless [x, y] = y.
Tensor2 bd_tensor(const Vector& x, const Vector& y, const ZeroTest& test = ZeroTest::exact());

enum class BdFamily { R1, R2, R3 };
struct BdClass {
  BdFamily family = BdFamily::R1;
  Scalar k;
  std::optional<Scalar> a;  // r3 only
};
/// Normal forms on sl2:
///   r1 = k(e⊗h - h⊗e), r2 = k(f⊗h - h⊗f),
///   r3 = k(a(f⊗e - e⊗f) + 1/2(h⊗f - f⊗h) + a^2/2(h⊗e - e⊗h)).
Tensor2 bd_normal_form(const BdClass& c);
/// Reads k (and a) off x (x) y - y (x) x and verifies the match; NoMatch otherwise.
BdClass bd_classify(const Vector& x, const Vector& y, const ZeroTest& test = ZeroTest::exact());

/// delta(x) = sum ([x, a_i] (x) b_i + a_i (x) [x, b_i]).
Tensor2 cobracket(const Vector& x, const Tensor2& r);

}  // namespace rbl
