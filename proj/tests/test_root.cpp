#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <memory>
#include <random>

#include "doctest.h"
#include "lexlat/root_function.hpp"

using namespace lexlat;

namespace {

std::shared_ptr<const ExponentSet> s_half() {
  return std::make_shared<const ExponentSet>(
      std::vector<Rat>{Rat(1, 2), Rat(1), Rat(3, 2), Rat(2)});
}

RootFunction make(std::shared_ptr<const ExponentSet> s, std::vector<GermTerm> terms,
                  std::map<long, Germ> overrides = {}) {
  return RootFunction(std::move(s), GridK::reciprocal(), Germ::from_terms(std::move(terms)),
                      std::move(overrides));
}

Germ random_germ_m0(std::mt19937_64& rng, const ExponentSet& s) {
  std::vector<GermTerm> terms;
  std::uniform_int_distribution<int> num(-9, 9);
  std::uniform_int_distribution<int> den(1, 9);
  for (const Rat& e : s.exponents()) {
    if (rng() % 2) continue;
    int n = num(rng);
    if (n == 0) n = 1;
    Rat c(n, den(rng));
    c.canonicalize();
    terms.push_back({e, c});
  }
  return Germ::from_terms(std::move(terms));
}

}  // namespace

TEST_CASE("germ canonical form") {
  Germ g = Germ::from_terms({{Rat(2), Rat(1)}, {Rat(1, 2), Rat(3)}, {Rat(2), Rat(-1)}});
  REQUIRE(g.terms().size() == 1);
  CHECK(g.terms()[0].exp == Rat(1, 2));
  CHECK(g.to_text() == "3*t^{1/2}");
  CHECK(Germ::from_terms({}).is_zero());
  CHECK_THROWS_AS(Germ::from_terms({{Rat(-1), Rat(1)}}), DomainError);
}

TEST_CASE("linear operations") {
  auto s = s_half();
  RootFunction t = make(s, {{Rat(1), Rat(1)}});
  RootFunction t2 = make(s, {{Rat(2), Rat(1)}});
  RootFunction sum = rf_add(t, t2);
  CHECK(sum.germ() == Germ::from_terms({{Rat(1), Rat(1)}, {Rat(2), Rat(1)}}));
  CHECK(sum.overrides().empty());

  RootFunction sqrt3 = rf_scale(Rat(3), make(s, {{Rat(1, 2), Rat(1)}}));
  CHECK(sqrt3.germ() == Germ::from_terms({{Rat(1, 2), Rat(3)}}));

  // adding a pure exceptional bump combines values pointwise at alpha_1 = 1
  RootFunction bump = make(s, {}, {{1, Germ::constant(Rat(1))}});
  RootFunction combined = rf_add(bump, t);
  CHECK(combined.germ() == t.germ());
  REQUIRE(combined.overrides().count(1) == 1);
  CHECK(combined.overrides().at(1) == Germ::constant(Rat(2)));  // 1 + alpha_1

  CHECK_THROWS_WITH_AS(
      make(s, {{Rat(5), Rat(1)}}), doctest::Contains("ExponentNotInS"), DomainError);
}

TEST_CASE("sup picks the near-zero winner and certifies exceptional points") {
  auto s = s_half();
  RootFunction t = make(s, {{Rat(1), Rat(1)}});
  RootFunction t2 = make(s, {{Rat(2), Rat(1)}});
  RootFunction sup_tt2 = rf_sup(t, t2);
  CHECK(sup_tt2.germ() == t.germ());  // t >= t^2 on (0,1]
  CHECK(sup_tt2.overrides().empty());
  CHECK(sup_tt2.cutoff() == 0);

  // 3 t^(3/2) beats t on alpha_1..alpha_8, ties at alpha_9 = 1/9
  RootFunction g = make(s, {{Rat(3, 2), Rat(3)}});
  CHECK(domination_cutoff(t.germ() - g.germ(), GridK::reciprocal()) == 9);
  RootFunction sup_tg = rf_sup(t, g);
  CHECK(sup_tg.germ() == t.germ());
  CHECK(sup_tg.cutoff() == 8);
  CHECK(sup_tg.overrides().at(1) == Germ::constant(Rat(3)));        // 3 * 1^(3/2)
  CHECK(sup_tg.overrides().at(4) == Germ::constant(Rat(3, 8)));     // rational point value
  CHECK(sup_tg.overrides().at(2) == Germ::from_terms({{Rat(3, 2), Rat(3)}}));  // irrational
  CHECK(sup_tg.overrides().count(9) == 0);  // exact tie equals the germ

  CHECK(rf_sup(t, g) == rf_sup(g, t));
  CHECK(rf_sup(t, t) == t);
}

TEST_CASE("abs negates a germ with negative leading coefficient") {
  auto s = s_half();
  RootFunction f = make(s, {{Rat(1, 2), Rat(-1)}, {Rat(1), Rat(1)}});
  RootFunction a = rf_abs(f);
  CHECK(a.germ() == Germ::from_terms({{Rat(1, 2), Rat(1)}, {Rat(1), Rat(-1)}}));
  CHECK(a.overrides().empty());
  CHECK(rf_abs(make(s, {{Rat(1), Rat(2)}})).germ() == Germ::from_terms({{Rat(1), Rat(2)}}));
}

TEST_CASE("psi maps germs onto Lex(S) with kernel P0") {
  auto s = s_half();
  RootFunction f = make(s, {{Rat(1, 2), Rat(3)}, {Rat(2), Rat(-1)}});
  LexElement image = psi(f);
  CHECK(to_string(image) == "3*e[1/2] - 1*e[2]");

  RootFunction kernel = make(s, {}, {{2, Germ::constant(Rat(5))}});
  CHECK(in_P0(kernel));
  CHECK(psi(kernel).is_zero());
  CHECK(!in_P0(f));

  RootFunction with_const = make(s, {{Rat(0), Rat(1)}, {Rat(1), Rat(1)}});
  CHECK_THROWS_WITH_AS(psi(with_const), doctest::Contains("NotInM0"), DomainError);

  // psi commutes with abs: f = -t^(1/2) + t
  RootFunction g = make(s, {{Rat(1, 2), Rat(-1)}, {Rat(1), Rat(1)}});
  CHECK(psi(rf_abs(g)) == abs(psi(g)));

  // P0 is an ideal: the inf of members stays inside
  RootFunction bump = make(s, {}, {{1, Germ::constant(Rat(2))}});
  CHECK(in_P0(rf_inf(kernel, bump)));
}

TEST_CASE("spectrum of R_S(K)") {
  ExponentSet s({Rat(1), Rat(2)});
  SpectrumRS spec = spectrum_rs(s, GridK::reciprocal(), 2);
  REQUIRE(spec.chain_below_m0.size() == 3);
  CHECK(spec.chain_below_m0[0].empty());
  CHECK(spec.chain_below_m0[1] == std::vector<Rat>{Rat(2)});
  CHECK(spec.chain_below_m0[2] == std::vector<Rat>{Rat(1), Rat(2)});
  REQUIRE(spec.point_maximal.size() == 2);
  CHECK(spec.point_maximal[1].second == Rat(1, 2));
  CHECK(spec.to_text().find("only prime") != std::string::npos);

  ExponentSet empty(std::vector<Rat>{});
  SpectrumRS degenerate = spectrum_rs(empty, GridK::reciprocal(), 1);
  CHECK(degenerate.chain_below_m0.size() == 1);
}

TEST_CASE("family classification comes from the order type") {
  RSClassification nat = classify_rs(SFamily::Naturals);
  CHECK(!nat.prime_artinian);
  CHECK(nat.prime_noetherian);
  RSClassification rec = classify_rs(SFamily::ReciprocalNaturals);
  CHECK(rec.prime_artinian);
  CHECK(!rec.prime_noetherian);
  RSClassification zi = classify_rs(SFamily::IntegersImage);
  CHECK(!zi.prime_artinian);
  CHECK(!zi.prime_noetherian);

  CHECK(family_exponent(SFamily::Naturals, 3) == Rat(3));
  CHECK(family_exponent(SFamily::ReciprocalNaturals, 4) == Rat(1, 4));
  CHECK(family_exponent(SFamily::IntegersImage, 0) == Rat(2));
  CHECK(family_exponent(SFamily::IntegersImage, -3) == Rat(1, 3));
  CHECK_THROWS_WITH_AS(parse_family("nope"), doctest::Contains("UnknownFamily"), DomainError);
}

TEST_CASE("lattice identities for root functions") {
  std::mt19937_64 rng(99);
  auto s = s_half();
  GridK grid = GridK::reciprocal();
  for (int trial = 0; trial < 60; ++trial) {
    RootFunction f(s, grid, random_germ_m0(rng, *s), {});
    RootFunction g(s, grid, random_germ_m0(rng, *s), {});
    RootFunction h(s, grid, random_germ_m0(rng, *s), {});
    CHECK(rf_sup(f, g) == rf_sup(g, f));
    CHECK(rf_inf(f, g) == rf_inf(g, f));
    CHECK(rf_sup(f, rf_sup(g, h)) == rf_sup(rf_sup(f, g), h));
    CHECK(rf_add(rf_sup(f, g), rf_inf(f, g)) == rf_add(f, g));
    CHECK(rf_abs(f) == rf_sup(f, rf_neg(f)));
  }
}

TEST_CASE("pointwise certification of produced suprema") {
  std::mt19937_64 rng(7);
  auto s = s_half();
  GridK grid = GridK::reciprocal();
  for (int trial = 0; trial < 10; ++trial) {
    RootFunction f(s, grid, random_germ_m0(rng, *s), {});
    RootFunction g(s, grid, random_germ_m0(rng, *s), {});
    RootFunction sup_fg = rf_sup(f, g);
    for (const CertifiedPoint& pt : certify_pointwise_max(f, g, sup_fg, 50)) {
      CHECK(pt.equals_max);
      CHECK(pt.width_ok);
    }
  }
}

TEST_CASE("cube-root exponents work through the general reduction") {
  auto s = std::make_shared<const ExponentSet>(std::vector<Rat>{Rat(1, 3), Rat(2, 3), Rat(1)});
  RootFunction f = RootFunction(s, GridK::reciprocal(), Germ::monomial(Rat(1, 3), Rat(1)), {});
  RootFunction g = RootFunction(s, GridK::reciprocal(), Germ::monomial(Rat(2, 3), Rat(4)), {});
  // the difference vanishes exactly at t = 1/64 and is decided elsewhere
  Germ d = f.germ() - g.germ();
  CHECK(d.sign_at(Rat(1, 64)) == Sign::Zero);
  CHECK(d.sign_at(Rat(1, 2)) == Sign::Negative);
  CHECK(d.sign_at(Rat(1, 100)) == Sign::Positive);
  RootFunction sup_fg = rf_sup(f, g);
  CHECK(sup_fg.germ() == f.germ());
  for (const CertifiedPoint& pt : certify_pointwise_max(f, g, sup_fg, 30)) {
    CHECK(pt.equals_max);
    CHECK(pt.width_ok);
  }
}

TEST_CASE("suprema with millions of exceptional points are refused") {
  // the difference germ t^(1/2)/72 - 18t stays negative out to t ~ 1/1679616,
  // so the pointwise max would need that many stored exceptional values
  auto s = s_half();
  RootFunction f = make(s, {{Rat(1, 2), Rat(1, 72)}});
  RootFunction g = make(s, {{Rat(1), Rat(18)}});
  CHECK(domination_cutoff(f.germ() - g.germ(), GridK::reciprocal()) > 1000000);
  CHECK_THROWS_WITH_AS(rf_sup(f, g), doctest::Contains("TooLarge"), DomainError);
}

TEST_CASE("operands must share the exponent set and the grid") {
  auto s1 = s_half();
  auto s2 = std::make_shared<const ExponentSet>(std::vector<Rat>{Rat(1)});
  RootFunction a(s1, GridK::reciprocal(), Germ::monomial(Rat(1), Rat(1)), {});
  RootFunction b(s2, GridK::reciprocal(), Germ::monomial(Rat(1), Rat(1)), {});
  CHECK_THROWS_WITH_AS(rf_add(a, b), doctest::Contains("ExponentNotInS"), DomainError);
  RootFunction c(s1, GridK::reciprocal_shifted(Rat(1)), Germ::monomial(Rat(1), Rat(1)), {});
  CHECK_THROWS_WITH_AS(rf_sup(a, c), doctest::Contains("PreconditionViolated"), DomainError);
}

TEST_CASE("grids") {
  GridK g = GridK::reciprocal();
  CHECK(g.alpha(3) == Rat(1, 3));
  CHECK_THROWS_AS(g.alpha(0), DomainError);
  GridK shifted = GridK::parse("1/(n+1/2)");
  CHECK(shifted.alpha(1) == Rat(2, 3));
  CHECK(GridK::parse("1/n") == g);
  CHECK(GridK::parse(shifted.name()) == shifted);
  CHECK_THROWS_AS(GridK::parse("n^2"), DomainError);
}
