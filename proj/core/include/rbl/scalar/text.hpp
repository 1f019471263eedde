#pragma once

#include <string>
#include <string_view>

#include "rbl/scalar/scalar.hpp"

namespace rbl {

/// Parses "num", "num | den" or any expression over + - * / ^ with integer
/// literals, i, sqrt(n), parameter names and parentheses. Raises ParseError.
RatFun parse_ratfun(std::string_view text);

/// As parse_ratfun, plus the numeric form "~re+im*i".
Scalar parse_scalar(std::string_view text);

/// Canonical text; parse_scalar(format_scalar(s)) reproduces s exactly.
std::string format_scalar(const Scalar& s);
std::string format_numeric(std::complex<double> z);

}  // namespace rbl
