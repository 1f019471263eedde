#include "rbl/scalar/scalar.hpp"

#include <cmath>

#include "rbl/scalar/error.hpp"
#include "rbl/scalar/text.hpp"

namespace rbl {

namespace {

[[noreturn]] void tag_mismatch() { throw Error(ErrorKind::TagMismatch, "exact and numeric scalars mixed"); }

}  // namespace

const RatFun& Scalar::exact() const {
  if (v_.index() != 0) throw Error(ErrorKind::NumericTag, "exact value requested from numeric scalar");
  return std::get<0>(v_);
}

std::complex<double> Scalar::numeric_value() const {
  if (v_.index() == 1) return std::get<1>(v_);
  return to_numeric().numeric_value();
}

bool Scalar::is_zero(const ZeroTest& test) const {
  if (v_.index() == 0) return std::get<0>(v_).is_zero();
  if (!test.tolerance()) throw Error(ErrorKind::MissingTolerance, "numeric zero test needs a tolerance");
  return std::abs(std::get<1>(v_)) <= *test.tolerance();
}

bool Scalar::is_one() const { return v_.index() == 0 && std::get<0>(v_).is_one(); }

Scalar Scalar::to_numeric() const {
  if (v_.index() == 1) return *this;
  const RatFun& f = std::get<0>(v_);
  if (f.var_mask() != 0) {
    throw Error(ErrorKind::UnboundParameter, "cannot convert " + f.str() + " to a number");
  }
  return Scalar(f.num().constant_value().to_complex() / f.den().constant_value().to_complex());
}

Scalar Scalar::inverse() const {
  if (v_.index() == 0) return Scalar(std::get<0>(v_).inverse());
  if (std::get<1>(v_) == 0.0) throw Error(ErrorKind::DivisionByZero, "numeric inverse of zero");
  return Scalar(1.0 / std::get<1>(v_));
}

Scalar Scalar::operator-() const {
  if (v_.index() == 0) return Scalar(-std::get<0>(v_));
  return Scalar(-std::get<1>(v_));
}

Scalar& Scalar::operator+=(const Scalar& o) {
  if (v_.index() != o.v_.index()) tag_mismatch();
  if (v_.index() == 0) {
    std::get<0>(v_) += std::get<0>(o.v_);
  } else {
    std::get<1>(v_) += std::get<1>(o.v_);
  }
  return *this;
}

Scalar& Scalar::operator-=(const Scalar& o) {
  if (v_.index() != o.v_.index()) tag_mismatch();
  if (v_.index() == 0) {
    std::get<0>(v_) -= std::get<0>(o.v_);
  } else {
    std::get<1>(v_) -= std::get<1>(o.v_);
  }
  return *this;
}

Scalar& Scalar::operator*=(const Scalar& o) {
  if (v_.index() != o.v_.index()) tag_mismatch();
  if (v_.index() == 0) {
    std::get<0>(v_) *= std::get<0>(o.v_);
  } else {
    std::get<1>(v_) *= std::get<1>(o.v_);
  }
  return *this;
}

Scalar& Scalar::operator/=(const Scalar& o) {
  if (v_.index() != o.v_.index()) tag_mismatch();
  if (v_.index() == 0) {
    std::get<0>(v_) /= std::get<0>(o.v_);
  } else {
    if (std::get<1>(o.v_) == 0.0) throw Error(ErrorKind::DivisionByZero, "numeric division by zero");
    std::get<1>(v_) /= std::get<1>(o.v_);
  }
  return *this;
}

bool operator==(const Scalar& a, const Scalar& b) {
  if (a.v_.index() != b.v_.index()) tag_mismatch();
  if (a.v_.index() == 1) throw Error(ErrorKind::MissingTolerance, "numeric equality needs a tolerance");
  return std::get<0>(a.v_) == std::get<0>(b.v_);
}

std::string Scalar::str() const { return format_scalar(*this); }

Scalar evaluate(const RatFun& f, const Bindings& bindings) {
  bool numeric = false;
  for (const auto& entry : bindings) {
    if (entry.second.index() == 1) numeric = true;
  }
  if (!numeric) {
    std::map<VarId, Coeff> exact;
    for (const auto& [v, b] : bindings) {
      if (b.index() == 0) exact.emplace(v, std::get<0>(b));
    }
    return Scalar(f.evaluate(exact));
  }
  std::map<VarId, std::complex<double>> num;
  for (const auto& [v, b] : bindings) {
    num.emplace(v, b.index() == 0 ? std::get<0>(b).to_complex() : std::get<1>(b));
  }
  return Scalar::numeric(f.evaluate_numeric(num));
}

Scalar evaluate(const Scalar& s, const Bindings& bindings) {
  if (!s.is_exact()) return s;
  return evaluate(s.exact(), bindings);
}

Bindings make_bindings(std::initializer_list<std::pair<std::string_view, Binding>> items) {
  Bindings out;
  for (const auto& [name, b] : items) out.emplace(variable(name), b);
  return out;
}

}  // namespace rbl
