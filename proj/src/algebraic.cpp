#include "lexlat/algebraic.hpp"

#include <algorithm>
#include <vector>

#include "lexlat/errors.hpp"

namespace lexlat {

namespace {

constexpr unsigned long kMaxReductionDegree = 1u << 20;

unsigned long to_ulong_checked(const mpz_class& z, const char* what) {
  require(z >= 0 && mpz_fits_ulong_p(z.get_mpz_t()), Err::TooLarge,
          std::string(what) + " too large for exact reduction");
  return mpz_get_ui(z.get_mpz_t());
}

// largest divisor e of n such that base^(1/e) is rational, with that root
std::pair<unsigned long, Rat> max_rational_root(const Rat& base, unsigned long n) {
  const mpz_class u = base.get_num();
  const mpz_class v = base.get_den();
  for (unsigned long e = n; e >= 1; --e) {
    if (n % e != 0) continue;
    mpz_class ru, rv;
    bool ok_u = mpz_root(ru.get_mpz_t(), u.get_mpz_t(), e) != 0;
    if (!ok_u) continue;
    bool ok_v = mpz_root(rv.get_mpz_t(), v.get_mpz_t(), e) != 0;
    if (!ok_v) continue;
    Rat rho(ru, rv);
    rho.canonicalize();
    return {e, rho};
  }
  return {1, base};
}

Rat rat_pow_ui(const Rat& base, unsigned long k) {
  mpz_class num, den;
  mpz_pow_ui(num.get_mpz_t(), base.get_num_mpz_t(), k);
  mpz_pow_ui(den.get_mpz_t(), base.get_den_mpz_t(), k);
  Rat out(num, den);
  out.canonicalize();
  return out;
}

struct Reduced {
  bool exact = false;            // reduction succeeded
  unsigned long degree = 1;      // minimal polynomial degree d
  unsigned long root_order = 1;  // L with beta = t^(1/L)
  std::vector<Rat> coeff;        // value = sum coeff[r] * t^(r/L), r < d... in beta powers
};

// Rewrites sum c_k t^{e_k} as a polynomial in beta = t^(1/L) reduced modulo
// the minimal polynomial x^d - rho of beta, so that 1, beta, ..., beta^(d-1)
// are linearly independent over Q.
Reduced reduce_power_sum(std::span<const PowerTerm> terms, const Rat& t) {
  Reduced out;
  mpz_class lcm(1);
  for (const auto& [e, c] : terms) mpz_lcm(lcm.get_mpz_t(), lcm.get_mpz_t(), e.get_den_mpz_t());
  if (!mpz_fits_ulong_p(lcm.get_mpz_t()) || mpz_get_ui(lcm.get_mpz_t()) > kMaxReductionDegree)
    return out;
  const unsigned long L = mpz_get_ui(lcm.get_mpz_t());

  auto [e_max, rho] = max_rational_root(t, L);
  const unsigned long d = L / e_max;
  out.degree = d;
  out.root_order = L;
  out.coeff.assign(d, Rat(0));
  for (const auto& [e, c] : terms) {
    if (rat_sign(c) == 0) continue;
    mpz_class scaled = e.get_num() * mpz_class(L / mpz_get_ui(e.get_den_mpz_t()));
    unsigned long m = to_ulong_checked(scaled, "power-sum exponent");
    if (m / d > kMaxReductionDegree) return out;
    out.coeff[m % d] += c * rat_pow_ui(rho, m / d);
  }
  out.exact = true;
  return out;
}

// sign of A + B*sqrt(sigma) for irrational sqrt(sigma) and B != 0, exactly
Sign quadratic_sign(const Rat& a, const Rat& b, const Rat& sigma) {
  int sa = rat_sign(a);
  int sb = rat_sign(b);
  if (sb > 0 && sa >= 0) return Sign::Positive;
  if (sb < 0 && sa <= 0) return Sign::Negative;
  // mixed signs: compare A^2 against B^2 * sigma (never equal, sqrt irrational)
  Rat lhs = a * a;
  Rat rhs = b * b * sigma;
  if (sb > 0) return lhs < rhs ? Sign::Positive : Sign::Negative;
  return lhs > rhs ? Sign::Positive : Sign::Negative;
}

Sign interval_sign(std::span<const PowerTerm> terms, const Rat& t, long max_bits) {
  for (long prec = 128; prec <= max_bits; prec *= 2) {
    RealInterval acc = eval_power_sum_interval(terms, t, prec);
    int s = acc.sign();
    if (s > 0) return Sign::Positive;
    if (s < 0) return Sign::Negative;
  }
  fail(Err::SignUndecided, "interval refinement inconclusive at " + std::to_string(max_bits) +
                               " bits; value not separated from zero");
}

}  // namespace

std::optional<Rat> exact_rat_pow(const Rat& base, const Rat& exp) {
  require(rat_sign(base) > 0, Err::PreconditionViolated, "exact_rat_pow needs a positive base");
  if (rat_sign(exp) == 0) return Rat(1);
  mpz_class p_abs = exp.get_num() < 0 ? mpz_class(-exp.get_num()) : exp.get_num();
  unsigned long p = to_ulong_checked(p_abs, "exponent numerator");
  unsigned long q = to_ulong_checked(exp.get_den(), "exponent denominator");
  Rat powered = rat_pow_ui(base, p);
  mpz_class ru, rv;
  if (mpz_root(ru.get_mpz_t(), powered.get_num_mpz_t(), q) == 0) return std::nullopt;
  if (mpz_root(rv.get_mpz_t(), powered.get_den_mpz_t(), q) == 0) return std::nullopt;
  Rat out(ru, rv);
  out.canonicalize();
  if (exp.get_num() < 0) out = 1 / out;
  return out;
}

RootMinPoly root_minpoly(const Rat& base, unsigned long n) {
  require(rat_sign(base) > 0, Err::PreconditionViolated, "root_minpoly needs a positive base");
  require(n >= 1, Err::PreconditionViolated, "root order must be at least 1");
  auto [e, rho] = max_rational_root(base, n);
  return {n / e, rho};
}

Sign sign_of_power_sum(std::span<const PowerTerm> terms, const Rat& t, long max_bits) {
  require(rat_sign(t) > 0, Err::PreconditionViolated, "evaluation point must be positive");
  Reduced red = reduce_power_sum(terms, t);
  if (!red.exact) return interval_sign(terms, t, max_bits);

  bool any = false;
  bool irrational_part = false;
  for (unsigned long r = 0; r < red.degree; ++r) {
    if (rat_sign(red.coeff[r]) == 0) continue;
    any = true;
    if (r > 0) irrational_part = true;
  }
  if (!any) return Sign::Zero;
  if (!irrational_part) return red.coeff[0] > 0 ? Sign::Positive : Sign::Negative;

  // A + B*beta^r with (beta^r)^2 rational decides exactly without intervals
  unsigned long r_used = 0;
  int irrational_entries = 0;
  for (unsigned long r = 1; r < red.degree; ++r)
    if (rat_sign(red.coeff[r]) != 0) {
      ++irrational_entries;
      r_used = r;
    }
  if (irrational_entries == 1) {
    Rat exp2(2 * static_cast<long>(r_used), static_cast<long>(red.root_order));
    exp2.canonicalize();
    if (auto sigma = exact_rat_pow(t, exp2))
      return quadratic_sign(red.coeff[0], red.coeff[r_used], *sigma);
  }

  // provably nonzero by linear independence of the beta powers; the interval
  // loop terminates, the cap only guards values below 2^-max_bits
  std::vector<PowerTerm> reduced_terms;
  for (unsigned long r = 0; r < red.degree; ++r) {
    if (rat_sign(red.coeff[r]) == 0) continue;
    Rat e(static_cast<long>(r), static_cast<long>(red.root_order));
    e.canonicalize();
    reduced_terms.emplace_back(e, red.coeff[r]);
  }
  return interval_sign(reduced_terms, t, max_bits);
}

std::optional<Rat> exact_value_of_power_sum(std::span<const PowerTerm> terms, const Rat& t) {
  require(rat_sign(t) > 0, Err::PreconditionViolated, "evaluation point must be positive");
  Reduced red = reduce_power_sum(terms, t);
  if (!red.exact) {
    Rat sum(0);
    for (const auto& [e, c] : terms) {
      auto v = exact_rat_pow(t, e);
      if (!v) return std::nullopt;
      sum += c * *v;
    }
    return sum;
  }
  for (unsigned long r = 1; r < red.degree; ++r)
    if (rat_sign(red.coeff[r]) != 0) return std::nullopt;
  return red.coeff[0];
}

RealInterval::RealInterval(long prec_bits) : prec_(prec_bits) {
  mpfr_init2(lo_, prec_);
  mpfr_init2(hi_, prec_);
  mpfr_set_zero(lo_, 1);
  mpfr_set_zero(hi_, 1);
}

RealInterval::RealInterval(const RealInterval& other) : prec_(other.prec_) {
  mpfr_init2(lo_, prec_);
  mpfr_init2(hi_, prec_);
  mpfr_set(lo_, other.lo_, MPFR_RNDD);
  mpfr_set(hi_, other.hi_, MPFR_RNDU);
}

RealInterval& RealInterval::operator=(const RealInterval& other) {
  if (this == &other) return *this;
  mpfr_set_prec(lo_, other.prec_);
  mpfr_set_prec(hi_, other.prec_);
  prec_ = other.prec_;
  mpfr_set(lo_, other.lo_, MPFR_RNDD);
  mpfr_set(hi_, other.hi_, MPFR_RNDU);
  return *this;
}

RealInterval::~RealInterval() {
  mpfr_clear(lo_);
  mpfr_clear(hi_);
}

void RealInterval::set_rat(const Rat& q) {
  mpfr_set_q(lo_, q.get_mpq_t(), MPFR_RNDD);
  mpfr_set_q(hi_, q.get_mpq_t(), MPFR_RNDU);
}

void RealInterval::set_zero() {
  mpfr_set_zero(lo_, 1);
  mpfr_set_zero(hi_, 1);
}

void RealInterval::set_pow(const Rat& base, const Rat& exp) {
  require(rat_sign(base) > 0, Err::PreconditionViolated, "interval pow needs a positive base");
  if (rat_sign(exp) == 0 || base == 1) {
    mpfr_set_ui(lo_, 1, MPFR_RNDD);
    mpfr_set_ui(hi_, 1, MPFR_RNDU);
    return;
  }
  // base^exp = exp(exp * log(base)), each step monotone with directed rounding
  mpfr_t bl, bh;
  mpfr_init2(bl, prec_);
  mpfr_init2(bh, prec_);
  mpfr_set_q(bl, base.get_mpq_t(), MPFR_RNDD);
  mpfr_set_q(bh, base.get_mpq_t(), MPFR_RNDU);
  mpfr_log(bl, bl, MPFR_RNDD);
  mpfr_log(bh, bh, MPFR_RNDU);
  if (rat_sign(exp) > 0) {
    mpfr_mul_q(lo_, bl, exp.get_mpq_t(), MPFR_RNDD);
    mpfr_mul_q(hi_, bh, exp.get_mpq_t(), MPFR_RNDU);
  } else {
    mpfr_mul_q(lo_, bh, exp.get_mpq_t(), MPFR_RNDD);
    mpfr_mul_q(hi_, bl, exp.get_mpq_t(), MPFR_RNDU);
  }
  mpfr_exp(lo_, lo_, MPFR_RNDD);
  mpfr_exp(hi_, hi_, MPFR_RNDU);
  mpfr_clear(bl);
  mpfr_clear(bh);
}

void RealInterval::add(const RealInterval& other) {
  mpfr_add(lo_, lo_, other.lo_, MPFR_RNDD);
  mpfr_add(hi_, hi_, other.hi_, MPFR_RNDU);
}

void RealInterval::mul_rat(const Rat& q) {
  if (rat_sign(q) >= 0) {
    mpfr_mul_q(lo_, lo_, q.get_mpq_t(), MPFR_RNDD);
    mpfr_mul_q(hi_, hi_, q.get_mpq_t(), MPFR_RNDU);
  } else {
    mpfr_t tmp;
    mpfr_init2(tmp, prec_);
    mpfr_mul_q(tmp, hi_, q.get_mpq_t(), MPFR_RNDD);
    mpfr_mul_q(hi_, lo_, q.get_mpq_t(), MPFR_RNDU);
    mpfr_set(lo_, tmp, MPFR_RNDD);
    mpfr_clear(tmp);
  }
}

int RealInterval::sign() const {
  if (mpfr_sgn(lo_) > 0) return 1;
  if (mpfr_sgn(hi_) < 0) return -1;
  return 0;
}

bool RealInterval::width_below(long exp2) const {
  mpfr_t w, bound;
  mpfr_init2(w, prec_);
  mpfr_init2(bound, prec_);
  mpfr_sub(w, hi_, lo_, MPFR_RNDU);
  mpfr_set_ui_2exp(bound, 1, exp2, MPFR_RNDD);
  bool ok = mpfr_cmp(w, bound) < 0;
  mpfr_clear(w);
  mpfr_clear(bound);
  return ok;
}

std::string RealInterval::str() const {
  char* lo_s = nullptr;
  char* hi_s = nullptr;
  mpfr_asprintf(&lo_s, "%.24Rg", lo_);
  mpfr_asprintf(&hi_s, "%.24Rg", hi_);
  std::string out = std::string("[") + lo_s + ", " + hi_s + "]";
  mpfr_free_str(lo_s);
  mpfr_free_str(hi_s);
  return out;
}

RealInterval eval_power_sum_interval(std::span<const PowerTerm> terms, const Rat& t,
                                     long prec_bits) {
  RealInterval acc(prec_bits);
  RealInterval term(prec_bits);
  for (const auto& [e, c] : terms) {
    term.set_pow(t, e);
    term.mul_rat(c);
    acc.add(term);
  }
  return acc;
}

}  // namespace lexlat
