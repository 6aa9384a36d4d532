#pragma once

#include <mpfr.h>

#include <optional>
#include <span>
#include <string>
#include <utility>

#include "lexlat/rational.hpp"

namespace lexlat {

// Default cap for interval precision escalation, overridable per call and via
// the CLI --precision-bits flag / LEXLAT_PRECISION_BITS.
inline constexpr long kDefaultPrecisionCap = 4096;

enum class Sign { Negative = -1, Zero = 0, Positive = 1 };

// A term c * t^e of a power sum; exponents are nonnegative rationals and the
// evaluation point t is a positive rational.
using PowerTerm = std::pair<Rat, Rat>;  // (exponent, coefficient)

// base^exp when that value is rational, nullopt when provably irrational.
// Requires base > 0.
std::optional<Rat> exact_rat_pow(const Rat& base, const Rat& exp);

// Minimal polynomial x^degree - rho of the real positive root base^(1/n).
struct RootMinPoly {
  unsigned long degree;
  Rat rho;
};
RootMinPoly root_minpoly(const Rat& base, unsigned long n);

// Certified sign of sum_k c_k t^{e_k}. The value is first reduced exactly in
// the power basis of t^(1/L), L = lcm of exponent denominators, modulo the
// minimal polynomial; zero is decided exactly there. Provably nonzero values
// go to interval refinement with doubling precision; past max_bits the call
// throws SignUndecided. Floating point never decides a sign on its own.
Sign sign_of_power_sum(std::span<const PowerTerm> terms, const Rat& t, long max_bits);

// Exact value when the sum is rational, nullopt when provably irrational.
std::optional<Rat> exact_value_of_power_sum(std::span<const PowerTerm> terms, const Rat& t);

// Directed-rounding enclosure [lo, hi] at a fixed working precision.
class RealInterval {
 public:
  explicit RealInterval(long prec_bits);
  RealInterval(const RealInterval& other);
  RealInterval& operator=(const RealInterval& other);
  ~RealInterval();

  void set_rat(const Rat& q);
  void set_zero();
  // this := base^exp, base > 0 exact rational, exp rational.
  void set_pow(const Rat& base, const Rat& exp);
  void add(const RealInterval& other);
  void mul_rat(const Rat& q);

  // -1 / +1 when the enclosure is strictly signed, 0 when it straddles zero.
  int sign() const;
  // hi - lo < 2^exp2
  bool width_below(long exp2) const;
  std::string str() const;

 private:
  long prec_;
  mpfr_t lo_;
  mpfr_t hi_;
};

RealInterval eval_power_sum_interval(std::span<const PowerTerm> terms, const Rat& t,
                                     long prec_bits);

}  // namespace lexlat
