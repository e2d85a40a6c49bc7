#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace fwb {

using Rational = mpq_class;
using Integer = mpz_class;

/// Always "p/q" with q > 0, including integers ("3/1").
std::string to_string(const Rational& q);

/// Accepts "p/q" or a bare integer "p". Throws ParseError.
Rational parse_rational(std::string_view text);

inline bool is_integer(const Rational& q) { return q.get_den() == 1; }

}  // namespace fwb
