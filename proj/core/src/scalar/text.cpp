#include "rbl/scalar/text.hpp"

#include <cctype>
#include <charconv>
#include <limits>

#include "rbl/scalar/error.hpp"

namespace rbl {

namespace {

class Parser {
 public:
  explicit Parser(std::string_view s) : s_(s) {}

  RatFun top() {
    RatFun num = expr();
    skip();
    if (peek() == '|') {
      ++pos_;
      RatFun den = expr();
      if (den.is_zero()) fail("zero denominator");
      num /= den;
    }
    skip();
    if (pos_ != s_.size()) fail("unexpected trailing input");
    return num;
  }

 private:
  [[noreturn]] void fail(const std::string& why) const {
    throw Error(ErrorKind::ParseError, why + " at offset " + std::to_string(pos_) + " in \"" + std::string(s_) + "\"");
  }

  void skip() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }

  char peek() {
    skip();
    return pos_ < s_.size() ? s_[pos_] : '\0';
  }

  void expect(char c) {
    if (peek() != c) fail(std::string("expected '") + c + "'");
    ++pos_;
  }

  RatFun expr() {
    RatFun acc;
    char c = peek();
    if (c == '+' || c == '-') {
      ++pos_;
      acc = term();
      if (c == '-') acc = -acc;
    } else {
      acc = term();
    }
    while (true) {
      c = peek();
      if (c != '+' && c != '-') break;
      ++pos_;
      RatFun t = term();
      if (c == '+') {
        acc += t;
      } else {
        acc -= t;
      }
    }
    return acc;
  }

  RatFun term() {
    RatFun acc = unary();
    while (true) {
      char c = peek();
      if (c != '*' && c != '/') break;
      ++pos_;
      RatFun f = unary();
      if (c == '*') {
        acc *= f;
      } else {
        if (f.is_zero()) fail("division by zero");
        acc /= f;
      }
    }
    return acc;
  }

  RatFun unary() {
    if (peek() == '-') {
      ++pos_;
      return -unary();
    }
    return power();
  }

  RatFun power() {
    RatFun base = atom();
    if (peek() != '^') return base;
    ++pos_;
    skip();
    unsigned long e = integer();
    if (e > 255) fail("exponent too large");
    RatFun r(1);
    for (unsigned long k = 0; k < e; ++k) r *= base;
    return r;
  }

  unsigned long integer() {
    skip();
    std::size_t start = pos_;
    while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    if (start == pos_) fail("expected integer");
    unsigned long v = 0;
    auto [p, ec] = std::from_chars(s_.data() + start, s_.data() + pos_, v);
    if (ec != std::errc()) fail("integer out of range");
    return v;
  }

  RatFun atom() {
    char c = peek();
    if (c == '(') {
      ++pos_;
      RatFun r = expr();
      expect(')');
      return r;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      std::size_t start = pos_;
      while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
      Integer z(std::string(s_.substr(start, pos_ - start)));
      return RatFun(Coeff(Rational(z)));
    }
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      std::size_t start = pos_;
      while (pos_ < s_.size() && (std::isalnum(static_cast<unsigned char>(s_[pos_])) || s_[pos_] == '_')) ++pos_;
      std::string_view name = s_.substr(start, pos_ - start);
      if (name == "i") return RatFun(Coeff(GaussRational::i()));
      if (name == "sqrt") {
        expect('(');
        unsigned long d = integer();
        expect(')');
        if (d > std::numeric_limits<std::uint32_t>::max()) fail("radicand too large");
        return RatFun(Coeff::sqrt(static_cast<std::uint32_t>(d)));
      }
      if (!is_valid_variable_name(name)) fail("invalid parameter name");
      return RatFun::var(name);
    }
    fail("unexpected character");
  }

  std::string_view s_;
  std::size_t pos_ = 0;
};

std::string shortest(double x) {
  char buf[64];
  auto [p, ec] = std::to_chars(buf, buf + sizeof buf, x);
  return std::string(buf, p);
}

}  // namespace

RatFun parse_ratfun(std::string_view text) { return Parser(text).top(); }

Scalar parse_scalar(std::string_view text) {
  std::size_t start = text.find_first_not_of(" \t");
  if (start == std::string_view::npos || text[start] != '~') return Scalar(parse_ratfun(text));
  std::string_view s = text.substr(start + 1);
  double re = 0;
  double im = 0;
  const char* end = s.data() + s.size();
  auto r1 = std::from_chars(s.data(), end, re);
  if (r1.ec != std::errc()) throw Error(ErrorKind::ParseError, "bad numeric real part: " + std::string(text));
  const char* p = r1.ptr;
  if (p == end || (*p != '+' && *p != '-')) throw Error(ErrorKind::ParseError, "bad numeric scalar: " + std::string(text));
  bool neg = *p == '-';
  ++p;
  auto r2 = std::from_chars(p, end, im);
  if (r2.ec != std::errc() || std::string_view(r2.ptr, end - r2.ptr) != "*i") {
    throw Error(ErrorKind::ParseError, "bad numeric imaginary part: " + std::string(text));
  }
  return Scalar::numeric({re, neg ? -im : im});
}

std::string format_numeric(std::complex<double> z) {
  std::string im = shortest(z.imag());
  if (im.front() != '-') im = "+" + im;
  return "~" + shortest(z.real()) + im + "*i";
}

std::string format_scalar(const Scalar& s) {
  if (s.is_exact()) return s.exact().str();
  return format_numeric(s.numeric_value());
}

}  // namespace rbl
