#pragma once

#include <map>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "lexlat/algebraic.hpp"
#include "lexlat/ideal.hpp"
#include "lexlat/lex_element.hpp"
#include "lexlat/rational.hpp"

namespace lexlat {

struct GermTerm {
  Rat exp;
  Rat coeff;

  bool operator==(const GermTerm&) const = default;
};

// The unique local representation sum a_k t^{s_k} of a root function near 0:
// exponents nonnegative, strictly increasing, coefficients nonzero.
class Germ {
 public:
  Germ() = default;
  static Germ from_terms(std::vector<GermTerm> terms);
  static Germ constant(const Rat& c);
  static Germ monomial(const Rat& exp, const Rat& coeff);

  std::span<const GermTerm> terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  bool has_constant_term() const;
  Rat constant_term() const;  // 0 when absent

  Germ operator+(const Germ& other) const;
  Germ operator-(const Germ& other) const;
  Germ operator-() const;
  bool operator==(const Germ&) const = default;

  std::vector<PowerTerm> as_power_terms() const;
  Sign sign_at(const Rat& t, long max_bits = kDefaultPrecisionCap) const;
  std::optional<Rat> exact_value_at(const Rat& t) const;

  std::string to_text() const;  // "3*t^{1/2} - 1*t^{2}", "0" for zero

 private:
  std::vector<GermTerm> terms_;
};

Germ scale(const Rat& r, const Germ& g);

// S: a finite set of strictly positive rational exponents. Owns the chain
// poset over S (ordered as rationals, ids in lowest terms) used by psi.
class ExponentSet {
 public:
  explicit ExponentSet(std::vector<Rat> exponents);

  std::span<const Rat> exponents() const { return exps_; }
  bool contains(const Rat& s) const;
  bool contains_s0(const Rat& s) const { return rat_sign(s) == 0 || contains(s); }
  const ForestPoset& chain_poset() const { return chain_; }

  bool operator==(const ExponentSet& other) const { return exps_ == other.exps_; }

 private:
  std::vector<Rat> exps_;
  ForestPoset chain_;
};

// The grid K \ {0}: alpha_n, a strictly decreasing positive rational null
// sequence. Supported rules: 1/n (default) and 1/(n + c) for rational c >= 0.
class GridK {
 public:
  static GridK reciprocal() { return GridK(Rat(0)); }
  static GridK reciprocal_shifted(const Rat& c);
  static GridK parse(std::string_view text);

  Rat alpha(long n) const;  // n >= 1
  std::string name() const;

  bool operator==(const GridK&) const = default;

 private:
  explicit GridK(Rat shift) : shift_(std::move(shift)) {}
  Rat shift_;
};

// An element of R_S(K): the germ gives the value at alpha_n for every
// n > cutoff; each exceptional point n <= cutoff carries an exact point value
// stored as a germ expression (a rational constant is the one-term exponent-0
// case). Canonical form: overrides provably equal to the germ at their point
// are dropped and cutoff is the largest surviving key, so equal functions
// compare equal structurally.
class RootFunction {
 public:
  RootFunction(std::shared_ptr<const ExponentSet> s, GridK grid, Germ germ,
               std::map<long, Germ> overrides, long max_bits = kDefaultPrecisionCap);

  const std::shared_ptr<const ExponentSet>& exponent_set() const { return s_; }
  const GridK& grid() const { return grid_; }
  const Germ& germ() const { return germ_; }
  long cutoff() const { return cutoff_; }
  const std::map<long, Germ>& overrides() const { return overrides_; }
  const Germ& point_value(long n) const;

  bool operator==(const RootFunction& other) const;

  std::string to_text() const;

 private:
  std::shared_ptr<const ExponentSet> s_;
  GridK grid_;
  Germ germ_;
  long cutoff_ = 0;
  std::map<long, Germ> overrides_;
};

RootFunction rf_add(const RootFunction& f, const RootFunction& g);
RootFunction rf_scale(const Rat& r, const RootFunction& f);
RootFunction rf_neg(const RootFunction& f);
RootFunction rf_sup(const RootFunction& f, const RootFunction& g,
                    long max_bits = kDefaultPrecisionCap);
RootFunction rf_inf(const RootFunction& f, const RootFunction& g,
                    long max_bits = kDefaultPrecisionCap);
RootFunction rf_abs(const RootFunction& f, long max_bits = kDefaultPrecisionCap);

// Smallest N such that for every n > N the sign of the nonzero germ h at
// alpha_n equals the sign of its lowest-exponent coefficient; uses the bound
// t* = min(1, min_{k>=2} (|c1| / ((m-1)|c_k|))^{1/(s_k - s_1)}), checked by
// exact rational power comparisons.
long domination_cutoff(const Germ& h, const GridK& grid);

// The quotient homomorphism on M_0 sending t^{s} to e_{s} over the chain S.
// NotInM0 when the germ has a constant term. The returned element lives on
// the ExponentSet's chain poset, which must outlive it.
LexElement psi(const RootFunction& f);

// f vanishes on a neighborhood of 0 in K, i.e. the germ is empty.
bool in_P0(const RootFunction& f);

// The prime ideal structure of R_S(K) for finite S: the chain of primes below
// M_0 (the upper sets of S, from the empty set = image of P_0 to S = image of
// M_0) together with the point-mass maximal ideals M_{alpha_n}.
struct SpectrumRS {
  std::vector<std::vector<Rat>> chain_below_m0;
  std::vector<std::pair<long, Rat>> point_maximal;  // (n, alpha_n)

  std::string to_text() const;
};

SpectrumRS spectrum_rs(const ExponentSet& s, const GridK& grid, int n_points);

// The three exponent-set families realized as order types: S = N (omega),
// S = {1/n} (omega*), and the image of Z under n -> n+2 (n >= 0), -1/n (n<0)
// (zeta).
enum class SFamily { Naturals, ReciprocalNaturals, IntegersImage };

SFamily parse_family(std::string_view text);  // UnknownFamily
const char* family_name(SFamily f);
ChainKind family_order_type(SFamily f);
Rat family_exponent(SFamily f, long n);

struct RSClassification {
  bool prime_artinian = false;
  bool prime_noetherian = false;
};

// Derived from the flags of the corresponding symbolic chain, never stored.
RSClassification classify_rs(SFamily f);

// Pointwise certification that result(alpha_n) = max(f, g)(alpha_n) for
// 1 <= n <= n_max: equality is decided exactly on point-value germ
// differences, and the three values are also enclosed by intervals of width
// below 2^width_exp2. The sweep is independent per point and runs in
// parallel when requested.
struct CertifiedPoint {
  long n = 0;
  bool equals_max = false;
  bool width_ok = false;
};

std::vector<CertifiedPoint> certify_pointwise_max(const RootFunction& f, const RootFunction& g,
                                                  const RootFunction& result, long n_max,
                                                  long width_exp2 = -64,
                                                  long max_bits = kDefaultPrecisionCap,
                                                  bool parallel = false);

}  // namespace lexlat
