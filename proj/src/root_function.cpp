#include "lexlat/root_function.hpp"

#include <algorithm>
#include <sstream>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "lexlat/symbolic.hpp"

namespace lexlat {

Germ Germ::from_terms(std::vector<GermTerm> terms) {
  for (auto& t : terms) {
    require(rat_sign(t.exp) >= 0, Err::PreconditionViolated, "germ exponents must be nonnegative");
    t.exp.canonicalize();
    t.coeff.canonicalize();
  }
  std::sort(terms.begin(), terms.end(),
            [](const GermTerm& a, const GermTerm& b) { return a.exp < b.exp; });
  Germ out;
  for (auto& t : terms) {
    if (rat_sign(t.coeff) == 0) continue;
    if (!out.terms_.empty() && out.terms_.back().exp == t.exp) {
      out.terms_.back().coeff += t.coeff;
      if (rat_sign(out.terms_.back().coeff) == 0) out.terms_.pop_back();
    } else {
      out.terms_.push_back(std::move(t));
    }
  }
  return out;
}

Germ Germ::constant(const Rat& c) { return from_terms({{Rat(0), c}}); }

Germ Germ::monomial(const Rat& exp, const Rat& coeff) { return from_terms({{exp, coeff}}); }

bool Germ::has_constant_term() const {
  return !terms_.empty() && rat_sign(terms_.front().exp) == 0;
}

Rat Germ::constant_term() const { return has_constant_term() ? terms_.front().coeff : Rat(0); }

Germ Germ::operator+(const Germ& other) const {
  std::vector<GermTerm> merged(terms_.begin(), terms_.end());
  merged.insert(merged.end(), other.terms_.begin(), other.terms_.end());
  return from_terms(std::move(merged));
}

Germ Germ::operator-() const {
  Germ out;
  out.terms_.reserve(terms_.size());
  for (const auto& t : terms_) out.terms_.push_back({t.exp, -t.coeff});
  return out;
}

Germ Germ::operator-(const Germ& other) const { return *this + (-other); }

Germ scale(const Rat& r, const Germ& g) {
  std::vector<GermTerm> terms;
  for (const auto& t : g.terms()) terms.push_back({t.exp, r * t.coeff});
  return Germ::from_terms(std::move(terms));
}

std::vector<PowerTerm> Germ::as_power_terms() const {
  std::vector<PowerTerm> out;
  out.reserve(terms_.size());
  for (const auto& t : terms_) out.emplace_back(t.exp, t.coeff);
  return out;
}

Sign Germ::sign_at(const Rat& t, long max_bits) const {
  if (is_zero()) return Sign::Zero;
  auto terms = as_power_terms();
  return sign_of_power_sum(terms, t, max_bits);
}

std::optional<Rat> Germ::exact_value_at(const Rat& t) const {
  auto terms = as_power_terms();
  return exact_value_of_power_sum(terms, t);
}

std::string Germ::to_text() const {
  if (is_zero()) return "0";
  std::ostringstream out;
  bool first = true;
  for (const auto& t : terms_) {
    Rat a = t.coeff < 0 ? Rat(-t.coeff) : t.coeff;
    if (first) {
      if (rat_sign(t.coeff) < 0) out << "-";
      first = false;
    } else {
      out << (rat_sign(t.coeff) < 0 ? " - " : " + ");
    }
    if (rat_sign(t.exp) == 0)
      out << rat_str(a);
    else
      out << rat_str(a) << "*t^{" << rat_str(t.exp) << "}";
  }
  return out.str();
}

ExponentSet::ExponentSet(std::vector<Rat> exponents) {
  for (auto& e : exponents) {
    require(rat_sign(e) > 0, Err::ExponentNotInS, "exponents in S must be strictly positive");
    e.canonicalize();
  }
  std::sort(exponents.begin(), exponents.end());
  exponents.erase(std::unique(exponents.begin(), exponents.end()), exponents.end());
  exps_ = std::move(exponents);
  std::vector<std::string> ids;
  ids.reserve(exps_.size());
  for (const auto& e : exps_) ids.push_back(rat_str(e));
  chain_ = ForestPoset::chain(std::move(ids));
}

bool ExponentSet::contains(const Rat& s) const {
  return std::binary_search(exps_.begin(), exps_.end(), s);
}

GridK GridK::reciprocal_shifted(const Rat& c) {
  require(rat_sign(c) >= 0, Err::PreconditionViolated, "grid shift must be nonnegative");
  return GridK(c);
}

GridK GridK::parse(std::string_view text) {
  if (text.empty() || text == "1/n") return reciprocal();
  if (text.rfind("1/(n+", 0) == 0 && text.back() == ')') {
    std::string shift(text.substr(5, text.size() - 6));
    return reciprocal_shifted(parse_rat(shift));
  }
  fail(Err::ParseError, "unknown grid rule '" + std::string(text) + "'");
}

Rat GridK::alpha(long n) const {
  require(n >= 1, Err::PreconditionViolated, "grid index must be at least 1");
  Rat denom = Rat(n) + shift_;
  Rat out = 1 / denom;
  out.canonicalize();
  return out;
}

std::string GridK::name() const {
  if (rat_sign(shift_) == 0) return "1/n";
  return "1/(n+" + rat_str(shift_) + ")";
}

namespace {

void check_germ_exponents(const ExponentSet& s, const Germ& g, const char* where) {
  for (const auto& t : g.terms())
    require(s.contains_s0(t.exp), Err::ExponentNotInS,
            std::string("exponent ") + rat_str(t.exp) + " of " + where + " is not in S0");
}

// canonical order used to break exact ties between equal-valued point germs
bool germ_less(const Germ& a, const Germ& b) {
  auto ta = a.terms();
  auto tb = b.terms();
  return std::lexicographical_compare(
      ta.begin(), ta.end(), tb.begin(), tb.end(), [](const GermTerm& x, const GermTerm& y) {
        if (x.exp != y.exp) return x.exp < y.exp;
        return x.coeff < y.coeff;
      });
}

}  // namespace

RootFunction::RootFunction(std::shared_ptr<const ExponentSet> s, GridK grid, Germ germ,
                           std::map<long, Germ> overrides, long max_bits)
    : s_(std::move(s)), grid_(std::move(grid)), germ_(std::move(germ)) {
  require(s_ != nullptr, Err::PreconditionViolated, "null exponent set");
  check_germ_exponents(*s_, germ_, "the germ");
  for (auto& [n, value] : overrides) {
    require(n >= 1, Err::PreconditionViolated, "override keys must be grid indices");
    check_germ_exponents(*s_, value, "an override");
    if (value == germ_) continue;
    // fold point values that are exactly rational down to constants
    if (auto exact = value.exact_value_at(grid_.alpha(n))) value = Germ::constant(*exact);
    if (value == germ_) continue;
    Germ diff = value - germ_;
    bool equal = false;
    if (!diff.is_zero()) {
      try {
        equal = diff.sign_at(grid_.alpha(n), max_bits) == Sign::Zero;
      } catch (const DomainError&) {
        equal = false;  // undecided at the cap: keep the override
      }
    } else {
      equal = true;
    }
    if (!equal) overrides_.emplace(n, std::move(value));
  }
  cutoff_ = overrides_.empty() ? 0 : overrides_.rbegin()->first;
}

const Germ& RootFunction::point_value(long n) const {
  auto it = overrides_.find(n);
  return it == overrides_.end() ? germ_ : it->second;
}

bool RootFunction::operator==(const RootFunction& other) const {
  return *s_ == *other.s_ && grid_ == other.grid_ && germ_ == other.germ_ &&
         overrides_ == other.overrides_;
}

std::string RootFunction::to_text() const {
  std::ostringstream out;
  out << "germ " << germ_.to_text();
  for (const auto& [n, value] : overrides_)
    out << "; f(alpha_" << n << ") = " << value.to_text();
  return out.str();
}

namespace {

void require_compatible(const RootFunction& f, const RootFunction& g) {
  require(*f.exponent_set() == *g.exponent_set(), Err::ExponentNotInS,
          "operands use different exponent sets");
  require(f.grid() == g.grid(), Err::PreconditionViolated, "operands use different grids");
}

}  // namespace

RootFunction rf_add(const RootFunction& f, const RootFunction& g) {
  require_compatible(f, g);
  std::map<long, Germ> overrides;
  for (const auto& [n, v] : f.overrides()) overrides.emplace(n, v + g.point_value(n));
  for (const auto& [n, v] : g.overrides())
    if (!overrides.count(n)) overrides.emplace(n, f.point_value(n) + v);
  return RootFunction(f.exponent_set(), f.grid(), f.germ() + g.germ(), std::move(overrides));
}

RootFunction rf_scale(const Rat& r, const RootFunction& f) {
  std::map<long, Germ> overrides;
  if (rat_sign(r) != 0)
    for (const auto& [n, v] : f.overrides()) overrides.emplace(n, scale(r, v));
  return RootFunction(f.exponent_set(), f.grid(), scale(r, f.germ()), std::move(overrides));
}

RootFunction rf_neg(const RootFunction& f) { return rf_scale(Rat(-1), f); }

long domination_cutoff(const Germ& h, const GridK& grid) {
  require(!h.is_zero(), Err::ZeroElement, "domination cutoff of the zero germ");
  auto terms = h.terms();
  const Rat& s1 = terms.front().exp;
  Rat c1_abs = terms.front().coeff < 0 ? Rat(-terms.front().coeff) : terms.front().coeff;
  const long m = static_cast<long>(terms.size());

  // alpha < t* iff alpha < 1 and, for every k >= 2,
  // alpha^(s_k - s_1) * (m-1)|c_k| < |c_1|; checked as alpha^p * ((m-1)|c_k|)^q < |c_1|^q
  // for s_k - s_1 = p/q.
  auto below_threshold = [&](const Rat& alpha) {
    if (alpha >= 1) return false;
    for (size_t k = 1; k < terms.size(); ++k) {
      Rat e = terms[k].exp - s1;
      e.canonicalize();
      unsigned long p = mpz_get_ui(e.get_num_mpz_t());
      unsigned long q = mpz_get_ui(e.get_den_mpz_t());
      Rat ck_abs = terms[k].coeff < 0 ? Rat(-terms[k].coeff) : terms[k].coeff;
      Rat lhs_base = Rat(m - 1) * ck_abs;
      mpz_class an, ad, ln, ld, rn, rd;
      mpz_pow_ui(an.get_mpz_t(), alpha.get_num_mpz_t(), p);
      mpz_pow_ui(ad.get_mpz_t(), alpha.get_den_mpz_t(), p);
      mpz_pow_ui(ln.get_mpz_t(), lhs_base.get_num_mpz_t(), q);
      mpz_pow_ui(ld.get_mpz_t(), lhs_base.get_den_mpz_t(), q);
      mpz_pow_ui(rn.get_mpz_t(), c1_abs.get_num_mpz_t(), q);
      mpz_pow_ui(rd.get_mpz_t(), c1_abs.get_den_mpz_t(), q);
      Rat lhs = Rat(an, ad) * Rat(ln, ld);
      Rat rhs(rn, rd);
      lhs.canonicalize();
      rhs.canonicalize();
      if (!(lhs < rhs)) return false;
    }
    return true;
  };

  for (long n = 0;; ++n)
    if (below_threshold(grid.alpha(n + 1))) return n;
}

// Beyond this many candidate exceptional points a supremum is refused rather
// than materialized; near-cancelling leading coefficients can push the true
// crossover into the millions of grid points.
constexpr long kMaxSupCutoff = 100000;

RootFunction rf_sup(const RootFunction& f, const RootFunction& g, long max_bits) {
  require_compatible(f, g);
  Germ h = f.germ() - g.germ();
  Germ winner;
  long base_cutoff = std::max(f.cutoff(), g.cutoff());
  if (h.is_zero()) {
    winner = f.germ();
  } else {
    bool f_wins = rat_sign(h.terms().front().coeff) > 0;
    winner = f_wins ? f.germ() : g.germ();
    base_cutoff = std::max(base_cutoff, domination_cutoff(h, f.grid()));
  }
  require(base_cutoff <= kMaxSupCutoff, Err::TooLarge,
          "supremum has up to " + std::to_string(base_cutoff) +
              " exceptional points; refusing to materialize more than " +
              std::to_string(kMaxSupCutoff));
  std::map<long, Germ> overrides;
  for (long n = 1; n <= base_cutoff; ++n) {
    const Germ& pf = f.point_value(n);
    const Germ& pg = g.point_value(n);
    Germ d = pf - pg;
    Sign s = d.is_zero() ? Sign::Zero : d.sign_at(f.grid().alpha(n), max_bits);
    // exact ties pick the canonically smaller germ so sup stays commutative
    const Germ& chosen = (s == Sign::Negative)   ? pg
                         : (s == Sign::Positive) ? pf
                         : (germ_less(pg, pf) ? pg : pf);
    if (!(chosen == winner)) overrides.emplace(n, chosen);
  }
  return RootFunction(f.exponent_set(), f.grid(), std::move(winner), std::move(overrides),
                      max_bits);
}

RootFunction rf_inf(const RootFunction& f, const RootFunction& g, long max_bits) {
  return rf_neg(rf_sup(rf_neg(f), rf_neg(g), max_bits));
}

RootFunction rf_abs(const RootFunction& f, long max_bits) {
  return rf_sup(f, rf_neg(f), max_bits);
}

LexElement psi(const RootFunction& f) {
  require(!f.germ().has_constant_term(), Err::NotInM0,
          "psi is defined on M_0: the germ must have no constant term");
  const ForestPoset& chain = f.exponent_set()->chain_poset();
  std::vector<std::pair<int, Rat>> coeffs;
  for (const auto& t : f.germ().terms())
    coeffs.emplace_back(chain.index_of(rat_str(t.exp)), t.coeff);
  return LexElement::from_coeffs(chain, std::move(coeffs));
}

bool in_P0(const RootFunction& f) { return f.germ().is_zero(); }

SpectrumRS spectrum_rs(const ExponentSet& s, const GridK& grid, int n_points) {
  SpectrumRS out;
  auto exps = s.exponents();
  const size_t m = exps.size();
  for (size_t k = 0; k <= m; ++k) {
    // the upper sets of the chain S are its suffixes
    std::vector<Rat> upper(exps.begin() + static_cast<long>(m - k), exps.end());
    out.chain_below_m0.push_back(std::move(upper));
  }
  for (long n = 1; n <= n_points; ++n) out.point_maximal.emplace_back(n, grid.alpha(n));
  return out;
}

std::string SpectrumRS::to_text() const {
  std::ostringstream out;
  out << "primes below M_0 (a chain; bottom entry is P_0, top entry is M_0):\n";
  for (size_t k = 0; k < chain_below_m0.size(); ++k) {
    out << "  ";
    if (k == 0)
      out << "P_0 ";
    else if (k + 1 == chain_below_m0.size())
      out << "M_0 ";
    else
      out << "    ";
    out << "<-> upper set {";
    for (size_t i = 0; i < chain_below_m0[k].size(); ++i) {
      if (i) out << ", ";
      out << rat_str(chain_below_m0[k][i]);
    }
    out << "}\n";
  }
  out << "point-mass maximal ideals (each is the only prime it contains):\n";
  for (const auto& [n, alpha] : point_maximal)
    out << "  M_alpha[" << n << "], alpha_" << n << " = " << rat_str(alpha) << "\n";
  return out.str();
}

SFamily parse_family(std::string_view text) {
  if (text == "naturals") return SFamily::Naturals;
  if (text == "reciprocal_naturals") return SFamily::ReciprocalNaturals;
  if (text == "integers_image") return SFamily::IntegersImage;
  fail(Err::UnknownFamily, "unknown exponent family '" + std::string(text) + "'");
}

const char* family_name(SFamily f) {
  switch (f) {
    case SFamily::Naturals:
      return "naturals";
    case SFamily::ReciprocalNaturals:
      return "reciprocal_naturals";
    case SFamily::IntegersImage:
      return "integers_image";
  }
  return "?";
}

ChainKind family_order_type(SFamily f) {
  switch (f) {
    case SFamily::Naturals:
      return ChainKind::Omega;
    case SFamily::ReciprocalNaturals:
      return ChainKind::OmegaStar;
    case SFamily::IntegersImage:
      return ChainKind::Zeta;
  }
  fail(Err::UnknownFamily, "bad family");
}

Rat family_exponent(SFamily f, long n) {
  switch (f) {
    case SFamily::Naturals:
      require(n >= 1, Err::UnknownElement, "naturals are indexed from 1");
      return Rat(n);
    case SFamily::ReciprocalNaturals: {
      require(n >= 1, Err::UnknownElement, "reciprocal naturals are indexed from 1");
      Rat out(1, n);
      out.canonicalize();
      return out;
    }
    case SFamily::IntegersImage: {
      if (n >= 0) return Rat(n + 2);
      Rat out(-1, n);
      out.canonicalize();
      return out;
    }
  }
  fail(Err::UnknownFamily, "bad family");
}

RSClassification classify_rs(SFamily f) {
  SymbolicPoset chain({SymbolicPoset::Component(family_order_type(f))});
  LexFlags flags = lex_classification(chain);
  return {flags.artinian, flags.noetherian};
}

namespace {

CertifiedPoint certify_point(const RootFunction& f, const RootFunction& g,
                             const RootFunction& result, long n, long width_exp2, long max_bits) {
  CertifiedPoint out;
  out.n = n;
  const Rat alpha = f.grid().alpha(n);
  const Germ& pf = f.point_value(n);
  const Germ& pg = g.point_value(n);
  const Germ& pr = result.point_value(n);

  auto sgn = [&](const Germ& d) { return d.is_zero() ? Sign::Zero : d.sign_at(alpha, max_bits); };
  Sign rf_s = sgn(pr - pf);
  Sign rg_s = sgn(pr - pg);
  out.equals_max = rf_s != Sign::Negative && rg_s != Sign::Negative &&
                   (rf_s == Sign::Zero || rg_s == Sign::Zero);

  out.width_ok = false;
  for (long prec = 128; prec <= max_bits; prec *= 2) {
    auto tf = pf.as_power_terms();
    auto tg = pg.as_power_terms();
    auto tr = pr.as_power_terms();
    if (eval_power_sum_interval(tf, alpha, prec).width_below(width_exp2) &&
        eval_power_sum_interval(tg, alpha, prec).width_below(width_exp2) &&
        eval_power_sum_interval(tr, alpha, prec).width_below(width_exp2)) {
      out.width_ok = true;
      break;
    }
  }
  return out;
}

}  // namespace

std::vector<CertifiedPoint> certify_pointwise_max(const RootFunction& f, const RootFunction& g,
                                                  const RootFunction& result, long n_max,
                                                  long width_exp2, long max_bits, bool parallel) {
  std::vector<CertifiedPoint> out(static_cast<size_t>(n_max));
  if (parallel) {
#ifdef _OPENMP
#pragma omp parallel for schedule(dynamic)
#endif
    for (long n = 1; n <= n_max; ++n)
      out[static_cast<size_t>(n - 1)] = certify_point(f, g, result, n, width_exp2, max_bits);
  } else {
    for (long n = 1; n <= n_max; ++n)
      out[static_cast<size_t>(n - 1)] = certify_point(f, g, result, n, width_exp2, max_bits);
  }
  return out;
}

}  // namespace lexlat
