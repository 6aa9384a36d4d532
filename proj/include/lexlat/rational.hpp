#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace lexlat {

// All coefficients, exponents and point values in this library are exact
// rationals. mpq_class keeps every value canonical (lowest terms, positive
// denominator) after canonicalize().
using Rat = mpq_class;

// Parses "p/q" or "n" (optional leading '-'). Throws ParseError on anything
// else, including q == 0.
Rat parse_rat(std::string_view text);

// Lowest-terms rendering: "p/q", or just "p" for integers.
std::string rat_str(const Rat& q);

inline bool rat_is_integer(const Rat& q) { return mpz_cmp_ui(q.get_den_mpz_t(), 1) == 0; }

inline int rat_sign(const Rat& q) { return mpq_sgn(q.get_mpq_t()); }

}  // namespace lexlat
