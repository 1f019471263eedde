#include "rbl/scalar/rational.hpp"

#include <cctype>

#include "rbl/scalar/error.hpp"

namespace rbl {

Rational parse_rational(std::string_view text) {
  std::string s(text);
  auto slash = s.find('/');
  auto valid_int = [](std::string_view t) {
    if (!t.empty() && (t.front() == '-' || t.front() == '+')) t.remove_prefix(1);
    if (t.empty()) return false;
    for (char c : t) {
      if (!std::isdigit(static_cast<unsigned char>(c))) return false;
    }
    return true;
  };
  std::string num = slash == std::string::npos ? s : s.substr(0, slash);
  std::string den = slash == std::string::npos ? "1" : s.substr(slash + 1);
  if (!num.empty() && num.front() == '+') num.erase(0, 1);
  if (!valid_int(num) || !valid_int(den)) {
    throw Error(ErrorKind::ParseError, "malformed rational '" + s + "'");
  }
  Integer d(den);
  if (d == 0) throw Error(ErrorKind::DivisionByZero, "rational with zero denominator '" + s + "'");
  Rational q(Integer(num), d);
  q.canonicalize();
  return q;
}

Rational make_rational(long n, long d) {
  if (d == 0) throw Error(ErrorKind::DivisionByZero, "zero denominator");
  Rational q(n, d);
  q.canonicalize();
  return q;
}

std::string to_string(const Rational& q) { return q.get_str(); }

GaussRational GaussRational::inverse() const {
  Rational n = norm2();
  if (sgn(n) == 0) throw Error(ErrorKind::DivisionByZero, "inverse of zero Gaussian rational");
  return {re_ / n, -im_ / n};
}

GaussRational& GaussRational::operator+=(const GaussRational& o) {
  re_ += o.re_;
  im_ += o.im_;
  return *this;
}

GaussRational& GaussRational::operator-=(const GaussRational& o) {
  re_ -= o.re_;
  im_ -= o.im_;
  return *this;
}

GaussRational& GaussRational::operator*=(const GaussRational& o) {
  if (sgn(im_) == 0 && sgn(o.im_) == 0) {
    re_ *= o.re_;
    return *this;
  }
  Rational re = re_ * o.re_ - im_ * o.im_;
  Rational im = re_ * o.im_ + im_ * o.re_;
  re_ = std::move(re);
  im_ = std::move(im);
  return *this;
}

GaussRational& GaussRational::operator/=(const GaussRational& o) {
  if (o.is_zero()) throw Error(ErrorKind::DivisionByZero, "division by zero Gaussian rational");
  if (sgn(im_) == 0 && sgn(o.im_) == 0) {
    re_ /= o.re_;
    return *this;
  }
  return *this *= o.inverse();
}

std::string GaussRational::str() const {
  auto imag_part = [](const Rational& v) -> std::string {
    if (v == 1) return "i";
    if (v == -1) return "-i";
    return v.get_str() + "*i";
  };
  if (sgn(im_) == 0) return re_.get_str();
  if (sgn(re_) == 0) return imag_part(im_);
  std::string im = imag_part(im_);
  if (im.front() != '-') im = "+" + im;
  return re_.get_str() + im;
}

}  // namespace rbl
