#include "lexlat/symbolic.hpp"

#include <algorithm>
#include <cstdlib>
#include <fstream>
#include <set>
#include <sstream>

namespace lexlat {

PosetFlags classify_chain(ChainKind k) {
  switch (k) {
    case ChainKind::Omega:
      return {true, false, true};
    case ChainKind::OmegaStar:
      return {false, true, true};
    case ChainKind::Zeta:
      return {false, false, true};
  }
  return {};
}

namespace {

const char* chain_name(ChainKind k) {
  switch (k) {
    case ChainKind::Omega:
      return "omega";
    case ChainKind::OmegaStar:
      return "omega_star";
    case ChainKind::Zeta:
      return "zeta";
  }
  return "?";
}

bool parse_long(std::string_view s, long& out) {
  if (s.empty()) return false;
  std::string buf(s);
  char* end = nullptr;
  long v = std::strtol(buf.c_str(), &end, 10);
  if (end == nullptr || *end != '\0') return false;
  out = v;
  return true;
}

bool chain_accepts(ChainKind k, long idx) {
  switch (k) {
    case ChainKind::Omega:
      return idx >= 1;
    case ChainKind::OmegaStar:
      return idx <= -1;
    case ChainKind::Zeta:
      return true;
  }
  return false;
}

std::string trim_copy(std::string_view s) {
  size_t b = s.find_first_not_of(" \t\r\n");
  if (b == std::string_view::npos) return {};
  size_t e = s.find_last_not_of(" \t\r\n");
  return std::string(s.substr(b, e - b + 1));
}

}  // namespace

SymbolicPoset::SymbolicPoset(std::vector<Component> comps) : comps_(std::move(comps)) {
  std::set<std::string> ids;
  for (const auto& c : comps_) {
    if (const auto* f = std::get_if<ForestPoset>(&c)) {
      for (const auto& id : f->ids())
        require(ids.insert(id).second, Err::NotAPartialOrder,
                "duplicate element id '" + id + "' across components");
    }
  }
}

SymbolicPoset SymbolicPoset::parse(std::string_view literal) {
  std::vector<Component> comps;
  std::string text(literal);
  size_t start = 0;
  while (start <= text.size()) {
    size_t plus = text.find('+', start);
    std::string part =
        trim_copy(plus == std::string::npos ? text.substr(start) : text.substr(start, plus - start));
    require(!part.empty(), Err::ParseError, "empty poset component");
    if (part == "omega") {
      comps.emplace_back(ChainKind::Omega);
    } else if (part == "omega_star") {
      comps.emplace_back(ChainKind::OmegaStar);
    } else if (part == "zeta") {
      comps.emplace_back(ChainKind::Zeta);
    } else if (part.rfind("file:", 0) == 0) {
      std::string path = part.substr(5);
      std::ifstream in(path);
      require(in.good(), Err::ParseError, "cannot open poset file '" + path + "'");
      std::stringstream buf;
      buf << in.rdbuf();
      comps.emplace_back(ForestPoset::parse_dsl(buf.str()));
    } else if (part.rfind("inline:", 0) == 0) {
      comps.emplace_back(ForestPoset::parse_dsl(part.substr(7)));
    } else {
      fail(Err::ParseError, "unknown poset literal '" + part + "'");
    }
    if (plus == std::string::npos) break;
    start = plus + 1;
  }
  return SymbolicPoset(std::move(comps));
}

bool SymbolicPoset::is_finite() const {
  for (const auto& c : comps_)
    if (!std::holds_alternative<ForestPoset>(c)) return false;
  return true;
}

ForestPoset SymbolicPoset::flatten_finite() const {
  require(is_finite(), Err::NotFinite, "poset has an infinite chain component");
  std::vector<std::string> ids;
  std::vector<int> parent;
  for (const auto& c : comps_) {
    const auto& f = std::get<ForestPoset>(c);
    int offset = static_cast<int>(ids.size());
    for (int i = 0; i < f.size(); ++i) {
      ids.push_back(f.id_of(i));
      auto p = f.parent(i);
      parent.push_back(p ? *p + offset : -1);
    }
  }
  return ForestPoset::from_parents(std::move(ids), std::move(parent));
}

PosetFlags SymbolicPoset::classify() const {
  PosetFlags flags{true, true, true};
  for (const auto& c : comps_) {
    PosetFlags cf = std::holds_alternative<ForestPoset>(c) ? PosetFlags{true, true, true}
                                                           : classify_chain(std::get<ChainKind>(c));
    flags.well_founded = flags.well_founded && cf.well_founded;
    flags.reverse_well_founded = flags.reverse_well_founded && cf.reverse_well_founded;
    flags.finite_width = flags.finite_width && cf.finite_width;
  }
  return flags;
}

SymbolicPoset::Loc SymbolicPoset::locate(std::string_view id) const {
  long idx = 0;
  bool is_int = parse_long(id, idx);
  for (size_t ci = 0; ci < comps_.size(); ++ci) {
    if (const auto* f = std::get_if<ForestPoset>(&comps_[ci])) {
      if (auto i = f->find(id)) return {static_cast<int>(ci), *i, 0};
    } else if (is_int && chain_accepts(std::get<ChainKind>(comps_[ci]), idx)) {
      return {static_cast<int>(ci), -1, idx};
    }
  }
  fail(Err::UnknownElement, "no element '" + std::string(id) + "'");
}

bool SymbolicPoset::leq(std::string_view x, std::string_view y) const {
  Loc lx = locate(x);
  Loc ly = locate(y);
  if (lx.comp != ly.comp) return false;
  const auto& c = comps_[static_cast<size_t>(lx.comp)];
  if (const auto* f = std::get_if<ForestPoset>(&c)) return f->leq(lx.finite_index, ly.finite_index);
  return lx.chain_index <= ly.chain_index;
}

std::string SymbolicPoset::describe() const {
  std::ostringstream out;
  for (size_t i = 0; i < comps_.size(); ++i) {
    if (i) out << " + ";
    if (const auto* f = std::get_if<ForestPoset>(&comps_[i]))
      out << "forest(" << f->size() << ")";
    else
      out << chain_name(std::get<ChainKind>(comps_[i]));
  }
  if (comps_.empty()) out << "empty";
  return out.str();
}

ChainUpperSet chain_up_closure(ChainKind k, std::span<const long> points) {
  if (points.empty()) return {ChainUpperSet::Kind::Empty, 0};
  long lo = points[0];
  for (long p : points) {
    require(chain_accepts(k, p), Err::UnknownElement,
            "index " + std::to_string(p) + " not in " + chain_name(k));
    lo = std::min(lo, p);
  }
  if (k == ChainKind::Omega && lo == 1) return {ChainUpperSet::Kind::All, 0};
  return {ChainUpperSet::Kind::UpFrom, lo};
}

std::vector<long> chain_min_of(ChainKind k, const ChainUpperSet& u) {
  switch (u.kind) {
    case ChainUpperSet::Kind::Empty:
      return {};
    case ChainUpperSet::Kind::UpFrom:
      return {u.from};
    case ChainUpperSet::Kind::All:
      require(k == ChainKind::Omega, Err::NotFinite,
              std::string("the full upper set of ") + chain_name(k) + " has no minimal element");
      return {1};
  }
  return {};
}

}  // namespace lexlat
