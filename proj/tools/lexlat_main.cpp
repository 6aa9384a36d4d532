#include <cstdlib>
#include <fstream>
#include <iostream>
#include <memory>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "lexlat/dot_export.hpp"
#include "lexlat/embed.hpp"
#include "lexlat/errors.hpp"
#include "lexlat/ideal.hpp"
#include "lexlat/json_io.hpp"
#include "lexlat/local.hpp"
#include "lexlat/root_function.hpp"

namespace {

using namespace lexlat;

struct Options {
  std::string format = "text";
  long precision_bits = kDefaultPrecisionCap;
};

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  require(in.good(), Err::ParseError, "cannot open '" + path + "'");
  std::stringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

Json read_json(const std::string& path) {
  Json j = Json::parse(read_file(path), nullptr, false);
  require(!j.is_discarded(), Err::ParseError, "invalid JSON in '" + path + "'");
  return j;
}

std::vector<int> parse_upper_set_arg(const ForestPoset& p, const std::string& arg) {
  std::vector<int> members;
  if (arg == "-" || arg.empty()) return members;
  std::stringstream in(arg);
  std::string id;
  while (std::getline(in, id, ',')) members.push_back(p.index_of(id));
  return members;
}

std::string set_label(const UpperSet& u) {
  std::string out = "{";
  auto ids = u.member_ids();
  for (size_t i = 0; i < ids.size(); ++i) {
    if (i) out += ",";
    out += ids[i];
  }
  return out + "}";
}

std::string bool_str(bool b) { return b ? "true" : "false"; }

// The poset spec of an element JSON must resolve to a finite forest; the
// parsed poset is owned here so elements can reference it.
struct LoadedElement {
  std::shared_ptr<const ForestPoset> poset;
  std::string poset_spec;
  LexElement elem;
};

LoadedElement load_element(const std::string& path) {
  Json j = read_json(path);
  require(j.contains("poset") && j.at("poset").is_string(), Err::ParseError,
          "element JSON needs a \"poset\" spec string");
  std::string spec = j.at("poset").get<std::string>();
  auto poset =
      std::make_shared<const ForestPoset>(SymbolicPoset::parse(spec).flatten_finite());
  LexElement elem = element_from_json(j, *poset);
  return {poset, spec, std::move(elem)};
}

std::string chain_spec_of(const ForestPoset& chain) {
  std::string dsl = chain.to_dsl();
  std::string out = "inline:";
  for (char c : dsl) out += (c == '\n') ? ';' : c;
  if (!out.empty() && out.back() == ';') out.pop_back();
  return out;
}

PosetFlags flags_of(const SymbolicPoset& p) { return p.classify(); }

void emit_poset_check(const SymbolicPoset& p, const Options& opt) {
  PosetFlags flags = flags_of(p);
  if (opt.format == "json") {
    Json j{{"components", p.describe()},
           {"well_founded", flags.well_founded},
           {"reverse_well_founded", flags.reverse_well_founded},
           {"finite_width", flags.finite_width}};
    if (p.is_finite()) j["poset"] = poset_to_json(p.flatten_finite());
    std::cout << canonical_dump(j);
    return;
  }
  std::cout << "ok\n";
  std::cout << "poset: " << p.describe() << "\n";
  std::cout << "well_founded=" << bool_str(flags.well_founded)
            << " reverse_well_founded=" << bool_str(flags.reverse_well_founded)
            << " finite_width=" << bool_str(flags.finite_width) << "\n";
}

void emit_poset_classify(const SymbolicPoset& p, const Options& opt) {
  PosetFlags flags = flags_of(p);
  LexFlags lex = lex_classification(p);
  if (opt.format == "json") {
    std::cout << canonical_dump(Json{{"artinian", lex.artinian},
                                     {"noetherian", lex.noetherian},
                                     {"well_founded", flags.well_founded},
                                     {"reverse_well_founded", flags.reverse_well_founded},
                                     {"finite_width", flags.finite_width}});
    return;
  }
  std::cout << "artinian=" << bool_str(lex.artinian) << " noetherian=" << bool_str(lex.noetherian)
            << "\n";
  std::cout << "well_founded=" << bool_str(flags.well_founded)
            << " reverse_well_founded=" << bool_str(flags.reverse_well_founded)
            << " finite_width=" << bool_str(flags.finite_width) << "\n";
  std::cout << "artinian criterion: X reverse well-founded with finite width\n";
  std::cout << "noetherian criterion: X well-founded with finite width\n";
}

int run(int argc, char** argv) {
  CLI::App app{"exact lattice computations in Lex(X) over forests and R_S(K)"};
  app.require_subcommand(1);

  Options opt;
  if (const char* env = std::getenv("LEXLAT_PRECISION_BITS")) opt.precision_bits = std::atol(env);
  app.add_option("--format", opt.format, "output format")
      ->check(CLI::IsMember({"text", "json", "dot"}))
      ->capture_default_str();
  app.add_option("--precision-bits", opt.precision_bits,
                 "interval precision cap for sign decisions");

  std::string spec, upper_arg, op_name, path_a, path_b, kind, s_arg, order_file;
  int n_points = 3;

  auto* poset_cmd = app.add_subcommand("poset", "validate and classify posets");
  auto* poset_check = poset_cmd->add_subcommand("check", "validate a poset spec");
  poset_check->add_option("spec", spec)->required();
  auto* poset_classify = poset_cmd->add_subcommand("classify", "Artinian/Noetherian verdicts");
  poset_classify->add_option("spec", spec)->required();

  auto* ideals_cmd = app.add_subcommand("ideals", "the ideal lattice of Lex(X)");
  auto* ideals_list = ideals_cmd->add_subcommand("list", "all upper sets");
  ideals_list->add_option("spec", spec)->required();
  auto* ideals_classify = ideals_cmd->add_subcommand("classify", "classify one upper set");
  ideals_classify->add_option("spec", spec)->required();
  ideals_classify->add_option("upper-set", upper_arg, "comma-separated ids, '-' for empty")
      ->required();
  auto* ideals_spectrum = ideals_cmd->add_subcommand("spectrum", "prime spectrum");
  ideals_spectrum->add_option("spec", spec)->required();

  auto* elem_cmd = app.add_subcommand("elem", "lattice operations on elements");
  auto* elem_op = elem_cmd->add_subcommand("op", "sup|inf|abs|add");
  elem_op->add_option("operation", op_name)->required()->check(CLI::IsMember({"sup", "inf", "abs", "add"}));
  elem_op->add_option("elem", path_a)->required();
  elem_op->add_option("elem2", path_b);

  auto* proj_cmd = app.add_subcommand("proj", "local projections");
  auto* proj_verify = proj_cmd->add_subcommand("verify", "check the compatibility axioms");
  proj_verify->add_option("spec", spec)->required();

  auto* decompose_cmd = app.add_subcommand("decompose", "split into local components");
  decompose_cmd->add_option("elem", path_a)->required();

  auto* radical_cmd = app.add_subcommand("radical", "intersection of the maximal ideals");
  radical_cmd->add_option("spec", spec)->required();

  auto* quotient_cmd = app.add_subcommand("quotient", "induced poset on X minus an upper set");
  quotient_cmd->add_option("spec", spec)->required();
  quotient_cmd->add_option("upper-set", upper_arg, "comma-separated ids, '-' for empty")
      ->required();

  auto* root_cmd = app.add_subcommand("root", "the root-function lattice R_S(K)");
  auto* root_op = root_cmd->add_subcommand("op", "sup|inf|abs|add");
  root_op->add_option("operation", op_name)->required()->check(CLI::IsMember({"sup", "inf", "abs", "add"}));
  root_op->add_option("germ", path_a)->required();
  root_op->add_option("germ2", path_b);
  auto* root_psi = root_cmd->add_subcommand("psi", "quotient homomorphism onto Lex(S)");
  root_psi->add_option("germ", path_a)->required();
  auto* root_spectrum = root_cmd->add_subcommand("spectrum", "prime structure of R_S(K)");
  root_spectrum->add_option("S", s_arg, "comma-separated exponents or a family name")->required();
  root_spectrum->add_option("--points", n_points, "number of point ideals to list");

  auto* embed_cmd = app.add_subcommand("embed", "order-embed a total order into Q+");
  embed_cmd->add_option("order-file", order_file)->required();

  auto* export_cmd = app.add_subcommand("export", "graph exports");
  auto* export_dot = export_cmd->add_subcommand("dot", "DOT diagrams");
  export_dot->add_option("kind", kind)->required()->check(CLI::IsMember({"hasse", "ideals"}));
  export_dot->add_option("spec", spec)->required();

  // let --format / --precision-bits appear after subcommand arguments
  auto enable_fallthrough = [](CLI::App* node, auto&& self) -> void {
    for (CLI::App* sub : node->get_subcommands([](const CLI::App*) { return true; })) {
      sub->fallthrough();
      self(sub, self);
    }
  };
  enable_fallthrough(&app, enable_fallthrough);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  if (*poset_check) {
    emit_poset_check(SymbolicPoset::parse(spec), opt);
  } else if (*poset_classify) {
    emit_poset_classify(SymbolicPoset::parse(spec), opt);
  } else if (*ideals_list) {
    ForestPoset p = SymbolicPoset::parse(spec).flatten_finite();
    auto ideals = enumerate_ideals(p);
    if (opt.format == "json") {
      Json arr = Json::array();
      for (const auto& u : ideals) arr.push_back(u.member_ids());
      std::cout << canonical_dump(Json{{"count", ideals.size()}, {"ideals", arr}});
    } else {
      for (const auto& u : ideals) std::cout << set_label(u) << "\n";
      std::cout << "count=" << ideals.size() << "\n";
    }
  } else if (*ideals_classify) {
    ForestPoset p = SymbolicPoset::parse(spec).flatten_finite();
    UpperSet u(p, parse_upper_set_arg(p, upper_arg));
    IdealClassification c = classify_ideal(u);
    std::vector<std::string> gen;
    for (int x : c.generating_antichain) gen.push_back(p.id_of(x));
    std::sort(gen.begin(), gen.end());
    if (opt.format == "json") {
      std::cout << canonical_dump(Json{{"upper_set", u.member_ids()},
                                       {"generating_antichain", gen},
                                       {"proper", c.is_proper},
                                       {"local", c.is_local},
                                       {"maximal", c.is_maximal},
                                       {"minimal_ideal", c.is_minimal_ideal},
                                       {"prime", c.is_prime}});
    } else {
      std::cout << "upper_set=" << set_label(u) << "\n";
      std::string gen_label = "{";
      for (size_t i = 0; i < gen.size(); ++i) {
        if (i) gen_label += ",";
        gen_label += gen[i];
      }
      gen_label += "}";
      std::cout << "generating_antichain=" << gen_label << "\n";
      std::cout << "proper=" << bool_str(c.is_proper) << " local=" << bool_str(c.is_local)
                << " maximal=" << bool_str(c.is_maximal)
                << " minimal_ideal=" << bool_str(c.is_minimal_ideal)
                << " prime=" << bool_str(c.is_prime) << "\n";
    }
  } else if (*ideals_spectrum) {
    ForestPoset p = SymbolicPoset::parse(spec).flatten_finite();
    auto primes = prime_spectrum(p);
    auto report = min_primes_finite_codim(p);
    if (opt.format == "json") {
      Json arr = Json::array();
      for (const auto& u : primes) arr.push_back(u.member_ids());
      Json mins = Json::array();
      for (const auto& entry : report.minimal_primes)
        mins.push_back(Json{{"upper_set", entry.prime.member_ids()}, {"codim", entry.codimension}});
      std::cout << canonical_dump(
          Json{{"primes", arr}, {"minimal_primes", mins}, {"count", primes.size()}});
    } else {
      for (const auto& u : primes) std::cout << "prime " << set_label(u) << "\n";
      for (const auto& entry : report.minimal_primes)
        std::cout << "minimal prime " << set_label(entry.prime) << " codim " << entry.codimension
                  << "\n";
      std::cout << "count=" << primes.size() << "\n";
    }
  } else if (*elem_op) {
    LoadedElement a = load_element(path_a);
    LexElement result(*a.poset);
    if (op_name == "abs") {
      require(path_b.empty(), Err::ParseError, "abs takes one element");
      result = abs(a.elem);
    } else {
      require(!path_b.empty(), Err::ParseError, op_name + " takes two elements");
      Json jb = read_json(path_b);
      require(jb.contains("poset") && jb.at("poset").is_string() &&
                  jb.at("poset").get<std::string>() == a.poset_spec,
              Err::PosetMismatch, "operands declare different posets");
      LexElement b = element_from_json(jb, *a.poset);
      if (op_name == "sup")
        result = sup(a.elem, b);
      else if (op_name == "inf")
        result = inf(a.elem, b);
      else
        result = a.elem + b;
    }
    if (opt.format == "json")
      std::cout << canonical_dump(element_to_json(result, a.poset_spec));
    else
      std::cout << to_string(result) << "\n";
  } else if (*proj_verify) {
    ForestPoset p = SymbolicPoset::parse(spec).flatten_finite();
    CompatReport report = verify_compatibility(p);
    std::cout << report.to_text(p);
    std::cout << (report.all_pass ? "ALL PASS" : "FAIL") << "\n";
    if (!report.all_pass) return 1;
  } else if (*decompose_cmd) {
    LoadedElement a = load_element(path_a);
    auto parts = decompose_principal(a.elem);
    if (opt.format == "json") {
      Json arr = Json::array();
      for (const auto& [local, piece] : parts)
        arr.push_back(Json{{"local", a.poset->id_of(local.base)},
                           {"handle", local.handle.member_ids()},
                           {"component", element_to_json(piece, a.poset_spec)}});
      std::cout << canonical_dump(arr);
    } else {
      for (const auto& [local, piece] : parts)
        std::cout << "local=" << a.poset->id_of(local.base) << " handle=" << set_label(local.handle)
                  << " component=" << to_string(piece) << "\n";
    }
  } else if (*radical_cmd) {
    ForestPoset p = SymbolicPoset::parse(spec).flatten_finite();
    IdealHandle r = radical(p);
    if (opt.format == "json")
      std::cout << canonical_dump(upper_set_to_json(r, spec));
    else
      std::cout << set_label(r) << "\n";
  } else if (*quotient_cmd) {
    ForestPoset p = SymbolicPoset::parse(spec).flatten_finite();
    UpperSet u(p, parse_upper_set_arg(p, upper_arg));
    QuotientResult q = quotient_poset(p, u);
    if (opt.format == "json") {
      std::cout << canonical_dump(poset_to_json(q.poset));
    } else if (q.poset.empty()) {
      std::cout << "empty\n";
    } else {
      std::cout << q.poset.to_dsl();
    }
  } else if (*root_op) {
    Json ja = read_json(path_a);
    RootFunction a = root_from_json(ja, opt.precision_bits);
    RootFunction result = a;
    if (op_name == "abs") {
      require(path_b.empty(), Err::ParseError, "abs takes one germ");
      result = rf_abs(a, opt.precision_bits);
    } else {
      require(!path_b.empty(), Err::ParseError, op_name + " takes two germs");
      RootFunction b = root_from_json(read_json(path_b), opt.precision_bits);
      // rebuild both over the union exponent set
      std::vector<Rat> exps(a.exponent_set()->exponents().begin(),
                            a.exponent_set()->exponents().end());
      exps.insert(exps.end(), b.exponent_set()->exponents().begin(),
                  b.exponent_set()->exponents().end());
      auto s = std::make_shared<const ExponentSet>(std::move(exps));
      RootFunction fa(s, a.grid(), a.germ(), a.overrides(), opt.precision_bits);
      RootFunction fb(s, b.grid(), b.germ(), b.overrides(), opt.precision_bits);
      if (op_name == "sup")
        result = rf_sup(fa, fb, opt.precision_bits);
      else if (op_name == "inf")
        result = rf_inf(fa, fb, opt.precision_bits);
      else
        result = rf_add(fa, fb);
    }
    if (opt.format == "json")
      std::cout << canonical_dump(root_to_json(result));
    else
      std::cout << result.to_text() << "\n";
  } else if (*root_psi) {
    RootFunction a = root_from_json(read_json(path_a), opt.precision_bits);
    LexElement image = psi(a);
    if (opt.format == "json")
      std::cout << canonical_dump(
          element_to_json(image, chain_spec_of(a.exponent_set()->chain_poset())));
    else
      std::cout << to_string(image) << "\n";
  } else if (*root_spectrum) {
    bool is_family = !s_arg.empty() && (s_arg[0] < '0' || s_arg[0] > '9');
    if (is_family) {
      SFamily fam = parse_family(s_arg);
      RSClassification cls = classify_rs(fam);
      std::string order;
      switch (family_order_type(fam)) {
        case ChainKind::Omega:
          order = "omega";
          break;
        case ChainKind::OmegaStar:
          order = "omega_star";
          break;
        case ChainKind::Zeta:
          order = "zeta";
          break;
      }
      if (opt.format == "json") {
        std::cout << canonical_dump(Json{{"family", family_name(fam)},
                                         {"order_type", order},
                                         {"prime_artinian", cls.prime_artinian},
                                         {"prime_noetherian", cls.prime_noetherian}});
      } else {
        std::cout << "family=" << family_name(fam) << " order_type=" << order << "\n";
        std::cout << "prime_artinian=" << bool_str(cls.prime_artinian)
                  << " prime_noetherian=" << bool_str(cls.prime_noetherian) << "\n";
        std::cout << "primes below M_0 form a chain order-isomorphic to the upper sets of "
                  << order << "\n";
        std::cout << "sample exponents:";
        for (long k = 1; k <= 4; ++k)
          std::cout << " " << rat_str(family_exponent(
                                 fam, fam == SFamily::IntegersImage ? k - 3 : k));
        std::cout << "\n";
      }
    } else {
      std::vector<Rat> exps;
      std::stringstream in(s_arg);
      std::string tok;
      while (std::getline(in, tok, ',')) exps.push_back(parse_rat(tok));
      ExponentSet s(std::move(exps));
      SpectrumRS spec_rs = spectrum_rs(s, GridK::reciprocal(), n_points);
      if (opt.format == "json") {
        Json chain = Json::array();
        for (const auto& upper : spec_rs.chain_below_m0) {
          Json u = Json::array();
          for (const auto& e : upper) u.push_back(rat_str(e));
          chain.push_back(u);
        }
        Json points = Json::array();
        for (const auto& [n, alpha] : spec_rs.point_maximal)
          points.push_back(Json{{"n", n}, {"alpha", rat_str(alpha)}});
        std::cout << canonical_dump(Json{{"chain_below_m0", chain}, {"point_maximal", points}});
      } else {
        std::cout << spec_rs.to_text();
      }
    }
  } else if (*embed_cmd) {
    std::vector<std::pair<std::string, Rat>> arrivals;
    std::stringstream in(read_file(order_file));
    std::string line;
    while (std::getline(in, line)) {
      if (auto h = line.find('#'); h != std::string::npos) line.erase(h);
      std::stringstream fields(line);
      std::string id, key;
      if (!(fields >> id >> key)) continue;
      arrivals.emplace_back(id, parse_rat(key));
    }
    auto values = embed_total_order(arrivals);
    if (opt.format == "json") {
      Json arr = Json::array();
      for (const auto& [id, value] : values) arr.push_back(Json::array({id, rat_str(value)}));
      std::cout << canonical_dump(arr);
    } else {
      for (const auto& [id, value] : values) std::cout << id << " " << rat_str(value) << "\n";
    }
  } else if (*export_dot) {
    ForestPoset p = SymbolicPoset::parse(spec).flatten_finite();
    std::cout << (kind == "hasse" ? hasse_dot(p) : ideal_lattice_dot(p));
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  try {
    return run(argc, argv);
  } catch (const DomainError& e) {
    std::cerr << e.what() << "\n";
    return 1;
  } catch (const std::exception& e) {
    std::cerr << "InternalError: " << e.what() << "\n";
    return 1;
  }
}
