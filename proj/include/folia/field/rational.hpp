#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace folia {

// Ground field of every computation. mpq_class keeps numerator and
// denominator coprime with a positive denominator after canonicalize().
using Rational = mpq_class;
using Integer = mpz_class;

// Parses "p", "-p" or "p/q" (decimal integers). Throws InputError.
Rational parse_rational(std::string_view text);

std::string to_string(const Rational& r);

inline bool is_integer(const Rational& r) { return r.get_den() == 1; }

}  // namespace folia
