#include "lexlat/rational.hpp"

#include "lexlat/errors.hpp"

namespace lexlat {

Rat parse_rat(std::string_view text) {
  if (text.empty()) fail(Err::ParseError, "empty rational");
  for (char c : text) {
    bool ok = (c >= '0' && c <= '9') || c == '/' || c == '-' || c == '+';
    if (!ok) fail(Err::ParseError, "bad rational '" + std::string(text) + "'");
  }
  mpq_class q;
  if (q.set_str(std::string(text), 10) != 0)
    fail(Err::ParseError, "bad rational '" + std::string(text) + "'");
  if (mpz_sgn(q.get_den_mpz_t()) == 0)
    fail(Err::ParseError, "zero denominator in '" + std::string(text) + "'");
  q.canonicalize();
  return q;
}

std::string rat_str(const Rat& q) {
  Rat c(q);
  c.canonicalize();
  return c.get_str();
}

}  // namespace lexlat
