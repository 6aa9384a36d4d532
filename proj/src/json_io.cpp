#include "lexlat/json_io.hpp"

#include <algorithm>

#include "lexlat/errors.hpp"

namespace lexlat {

namespace {

const Json& expect_object(const Json& j, const char* what) {
  require(j.is_object(), Err::ParseError, std::string(what) + " must be a JSON object");
  return j;
}

std::string expect_string(const Json& j, const char* what) {
  require(j.is_string(), Err::ParseError, std::string(what) + " must be a JSON string");
  return j.get<std::string>();
}

}  // namespace

Json element_to_json(const LexElement& f, const std::string& poset_spec) {
  Json coeffs = Json::object();
  for (const auto& [x, c] : f.coeffs()) coeffs[f.host().id_of(x)] = rat_str(c);
  return Json{{"poset", poset_spec}, {"coeffs", coeffs}};
}

LexElement element_from_json(const Json& j, const ForestPoset& host) {
  expect_object(j, "element");
  require(j.contains("coeffs"), Err::ParseError, "element JSON needs a \"coeffs\" field");
  expect_object(j.at("coeffs"), "\"coeffs\"");
  std::vector<std::pair<int, Rat>> coeffs;
  for (const auto& [id, value] : j.at("coeffs").items())
    coeffs.emplace_back(host.index_of(id), parse_rat(expect_string(value, "coefficient")));
  return LexElement::from_coeffs(host, std::move(coeffs));
}

Json upper_set_to_json(const UpperSet& u, const std::string& poset_spec) {
  Json members = Json::array();
  for (const auto& id : u.member_ids()) members.push_back(id);
  return Json{{"poset", poset_spec}, {"upper_set", members}};
}

UpperSet upper_set_from_json(const Json& j, const ForestPoset& host) {
  expect_object(j, "upper set");
  require(j.contains("upper_set") && j.at("upper_set").is_array(), Err::ParseError,
          "upper-set JSON needs an \"upper_set\" array");
  std::vector<int> members;
  for (const auto& id : j.at("upper_set"))
    members.push_back(host.index_of(expect_string(id, "member")));
  return UpperSet(host, std::move(members));
}

Json poset_to_json(const ForestPoset& p) {
  std::vector<std::string> elements = p.ids();
  std::sort(elements.begin(), elements.end());
  Json covers = Json::array();
  std::vector<std::pair<std::string, std::string>> pairs;
  for (int x = 0; x < p.size(); ++x)
    if (auto par = p.parent(x)) pairs.emplace_back(p.id_of(*par), p.id_of(x));
  std::sort(pairs.begin(), pairs.end());
  for (const auto& [lo, hi] : pairs) covers.push_back(Json::array({lo, hi}));
  return Json{{"elements", elements}, {"covers", covers}};
}

ForestPoset poset_from_json(const Json& j) {
  expect_object(j, "poset");
  require(j.contains("elements") && j.at("elements").is_array(), Err::ParseError,
          "poset JSON needs an \"elements\" array");
  std::vector<std::string> ids;
  for (const auto& id : j.at("elements")) ids.push_back(expect_string(id, "element"));
  std::vector<std::pair<std::string, std::string>> below;
  if (j.contains("covers")) {
    require(j.at("covers").is_array(), Err::ParseError, "\"covers\" must be an array");
    for (const auto& pair : j.at("covers")) {
      require(pair.is_array() && pair.size() == 2, Err::ParseError,
              "each cover must be a [lower, upper] pair");
      below.emplace_back(expect_string(pair.at(0), "cover"), expect_string(pair.at(1), "cover"));
    }
  }
  return ForestPoset::from_relation(ids, below);
}

Json germ_to_json_terms(const Germ& g) {
  Json terms = Json::array();
  for (const auto& t : g.terms())
    terms.push_back(Json{{"exp", rat_str(t.exp)}, {"coeff", rat_str(t.coeff)}});
  return terms;
}

Germ germ_from_json_terms(const Json& j) {
  require(j.is_array(), Err::ParseError, "germ terms must be a JSON array");
  std::vector<GermTerm> terms;
  for (const auto& item : j) {
    expect_object(item, "germ term");
    require(item.contains("exp") && item.contains("coeff"), Err::ParseError,
            "germ term needs \"exp\" and \"coeff\"");
    terms.push_back({parse_rat(expect_string(item.at("exp"), "\"exp\"")),
                     parse_rat(expect_string(item.at("coeff"), "\"coeff\""))});
  }
  return Germ::from_terms(std::move(terms));
}

Json root_to_json(const RootFunction& f) {
  Json s = Json::array();
  for (const auto& e : f.exponent_set()->exponents()) s.push_back(rat_str(e));
  Json overrides = Json::object();
  for (const auto& [n, value] : f.overrides()) {
    // a constant point value keeps the plain rational-string form
    if (value.is_zero())
      overrides[std::to_string(n)] = "0";
    else if (value.terms().size() == 1 && rat_sign(value.terms().front().exp) == 0)
      overrides[std::to_string(n)] = rat_str(value.terms().front().coeff);
    else
      overrides[std::to_string(n)] = germ_to_json_terms(value);
  }
  return Json{{"S", s},
              {"grid", f.grid().name()},
              {"terms", germ_to_json_terms(f.germ())},
              {"cutoff", f.cutoff()},
              {"overrides", overrides}};
}

RootFunction root_from_json(const Json& j, long max_bits) {
  expect_object(j, "root function");
  require(j.contains("terms"), Err::ParseError, "root-function JSON needs a \"terms\" field");
  Germ germ = germ_from_json_terms(j.at("terms"));

  std::map<long, Germ> overrides;
  if (j.contains("overrides")) {
    expect_object(j.at("overrides"), "\"overrides\"");
    for (const auto& [key, value] : j.at("overrides").items()) {
      long n = 0;
      try {
        size_t used = 0;
        n = std::stol(key, &used);
        require(used == key.size() && n >= 1, Err::ParseError, "bad override key");
      } catch (const std::exception&) {
        fail(Err::ParseError, "bad override key '" + key + "'");
      }
      if (value.is_string())
        overrides.emplace(n, Germ::constant(parse_rat(value.get<std::string>())));
      else
        overrides.emplace(n, germ_from_json_terms(value));
    }
  }
  if (j.contains("cutoff")) {
    require(j.at("cutoff").is_number_integer(), Err::ParseError, "\"cutoff\" must be an integer");
    long cutoff = j.at("cutoff").get<long>();
    for (const auto& [n, v] : overrides)
      require(n <= cutoff, Err::ParseError, "override key beyond the declared cutoff");
  }

  std::vector<Rat> exponents;
  if (j.contains("S")) {
    require(j.at("S").is_array(), Err::ParseError, "\"S\" must be an array");
    for (const auto& e : j.at("S")) exponents.push_back(parse_rat(expect_string(e, "exponent")));
  } else {
    for (const auto& t : germ.terms())
      if (rat_sign(t.exp) > 0) exponents.push_back(t.exp);
    for (const auto& [n, v] : overrides)
      for (const auto& t : v.terms())
        if (rat_sign(t.exp) > 0) exponents.push_back(t.exp);
  }
  auto s = std::make_shared<const ExponentSet>(std::move(exponents));

  GridK grid = GridK::reciprocal();
  if (j.contains("grid")) grid = GridK::parse(expect_string(j.at("grid"), "\"grid\""));

  return RootFunction(std::move(s), std::move(grid), std::move(germ), std::move(overrides),
                      max_bits);
}

std::string canonical_dump(const Json& j) { return j.dump(2) + "\n"; }

}  // namespace lexlat
