#include "rbl/scalar/surd.hpp"

#include <cmath>

#include "rbl/scalar/error.hpp"

namespace rbl {

bool is_square_free(std::uint32_t d) {
  if (d < 2) return false;
  for (std::uint64_t p = 2; p * p <= d; ++p) {
    if (d % (p * p) == 0) return false;
  }
  return true;
}

SurdExt::SurdExt(GaussRational u, GaussRational v, std::uint32_t radicand)
    : u_(std::move(u)), v_(std::move(v)), d_(radicand) {
  if (d_ != 1 && !is_square_free(d_)) {
    throw Error(ErrorKind::MixedRadicands,
                "radicand must be a square-free integer > 1, got " + std::to_string(d_));
  }
  normalize();
}

SurdExt SurdExt::sqrt(std::uint32_t d) {
  if (d == 0) return SurdExt(0);
  long square = 1;
  for (std::uint32_t p = 2; p * p <= d; ++p) {
    while (d % (p * p) == 0) {
      d /= p * p;
      square *= p;
    }
  }
  if (d == 1) return SurdExt(square);
  return SurdExt(GaussRational(0), GaussRational(square), d);
}

void SurdExt::normalize() {
  if (v_.is_zero()) d_ = 1;
  if (d_ == 1 && !v_.is_zero()) {
    throw Error(ErrorKind::MixedRadicands, "surd part without radicand");
  }
}

std::uint32_t SurdExt::merged_radicand(const SurdExt& o) const {
  if (d_ == 1) return o.d_;
  if (o.d_ == 1 || o.d_ == d_) return d_;
  throw Error(ErrorKind::MixedRadicands,
              "sqrt(" + std::to_string(d_) + ") mixed with sqrt(" + std::to_string(o.d_) + ")");
}

SurdExt SurdExt::surd_conj() const {
  SurdExt r = *this;
  r.v_ = -r.v_;
  return r;
}

GaussRational SurdExt::norm() const {
  if (d_ == 1) return u_ * u_;
  return u_ * u_ - GaussRational(Rational(d_)) * v_ * v_;
}

SurdExt SurdExt::inverse() const {
  if (is_zero()) throw Error(ErrorKind::DivisionByZero, "inverse of zero");
  if (d_ == 1) return SurdExt(u_.inverse());
  GaussRational n = norm();
  if (n.is_zero()) throw Error(ErrorKind::DivisionByZero, "surd with vanishing norm");
  GaussRational ni = n.inverse();
  return SurdExt(u_ * ni, -v_ * ni, d_);
}

SurdExt SurdExt::operator-() const {
  SurdExt r = *this;
  r.u_ = -r.u_;
  r.v_ = -r.v_;
  return r;
}

SurdExt& SurdExt::operator+=(const SurdExt& o) {
  std::uint32_t d = merged_radicand(o);
  u_ += o.u_;
  if (o.d_ != 1) v_ += o.v_;
  d_ = d;
  normalize();
  return *this;
}

SurdExt& SurdExt::operator-=(const SurdExt& o) {
  std::uint32_t d = merged_radicand(o);
  u_ -= o.u_;
  if (o.d_ != 1) v_ -= o.v_;
  d_ = d;
  normalize();
  return *this;
}

SurdExt& SurdExt::operator*=(const SurdExt& o) {
  std::uint32_t d = merged_radicand(o);
  if (d_ == 1 && o.d_ == 1) {
    u_ *= o.u_;
    return *this;
  }
  // (u1 + v1 s)(u2 + v2 s) = u1 u2 + d v1 v2 + (u1 v2 + v1 u2) s
  GaussRational u = u_ * o.u_ + GaussRational(Rational(d)) * v_ * o.v_;
  GaussRational v = u_ * o.v_ + v_ * o.u_;
  u_ = std::move(u);
  v_ = std::move(v);
  d_ = d;
  normalize();
  return *this;
}

SurdExt& SurdExt::operator/=(const SurdExt& o) {
  if (o.is_zero()) throw Error(ErrorKind::DivisionByZero, "division by zero");
  merged_radicand(o);
  if (d_ == 1 && o.d_ == 1) {
    u_ /= o.u_;
    return *this;
  }
  return *this *= o.inverse();
}

std::complex<double> SurdExt::to_complex() const {
  std::complex<double> r = u_.to_complex();
  if (d_ != 1) r += v_.to_complex() * std::sqrt(static_cast<double>(d_));
  return r;
}

bool SurdExt::is_compound() const {
  if (d_ == 1) return u_.is_compound();
  return !u_.is_zero() || v_.is_compound();
}

bool SurdExt::is_negative_atom() const {
  if (is_compound()) return false;
  return str().front() == '-';
}

std::string SurdExt::str() const {
  if (d_ == 1) return u_.str();
  std::string root = "sqrt(" + std::to_string(d_) + ")";
  std::string vs;
  if (v_.is_one()) {
    vs = root;
  } else if ((-v_).is_one()) {
    vs = "-" + root;
  } else if (v_.is_compound()) {
    vs = "(" + v_.str() + ")*" + root;
  } else {
    vs = v_.str() + "*" + root;
  }
  if (u_.is_zero()) return vs;
  std::string us = u_.str();
  if (u_.is_compound()) us = "(" + us + ")";
  if (vs.front() != '-') vs = "+" + vs;
  return us + vs;
}

}  // namespace rbl
