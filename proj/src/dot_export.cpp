#include "lexlat/dot_export.hpp"

#include <sstream>

#include "lexlat/ideal.hpp"

namespace lexlat {

namespace {

std::string quote(const std::string& s) {
  std::string out = "\"";
  for (char c : s) {
    if (c == '"' || c == '\\') out += '\\';
    out += c;
  }
  out += '"';
  return out;
}

std::string set_label(const UpperSet& u) {
  std::string out = "{";
  auto ids = u.member_ids();
  for (size_t i = 0; i < ids.size(); ++i) {
    if (i) out += ",";
    out += ids[i];
  }
  out += "}";
  return out;
}

}  // namespace

std::string hasse_dot(const ForestPoset& p) {
  std::ostringstream out;
  out << "digraph hasse {\n  rankdir=BT;\n";
  for (int x = 0; x < p.size(); ++x) out << "  " << quote(p.id_of(x)) << ";\n";
  for (int x = 0; x < p.size(); ++x)
    if (auto par = p.parent(x))
      out << "  " << quote(p.id_of(*par)) << " -> " << quote(p.id_of(x)) << ";\n";
  out << "}\n";
  return out.str();
}

std::string ideal_lattice_dot(const ForestPoset& p) {
  auto ideals = enumerate_ideals(p);
  std::ostringstream out;
  out << "digraph ideal_lattice {\n  rankdir=BT;\n";
  std::vector<std::string> labels;
  labels.reserve(ideals.size());
  for (const auto& u : ideals) {
    IdealClassification c = classify_ideal(u);
    std::vector<const char*> glyphs;
    if (c.is_prime) glyphs.push_back("P");
    if (c.is_local) glyphs.push_back("L");
    if (c.is_maximal) glyphs.push_back("M");
    if (c.is_minimal_ideal) glyphs.push_back("min");
    std::string label = set_label(u);
    if (!glyphs.empty()) {
      label += " [";
      for (size_t g = 0; g < glyphs.size(); ++g) {
        if (g) label += ",";
        label += glyphs[g];
      }
      label += "]";
    }
    labels.push_back(set_label(u));
    out << "  " << quote(set_label(u)) << " [label=" << quote(label) << "];\n";
  }
  // covers in the inclusion order differ by exactly one element
  for (size_t i = 0; i < ideals.size(); ++i)
    for (size_t j = 0; j < ideals.size(); ++j) {
      if (ideals[i].size() + 1 != ideals[j].size()) continue;
      if (!ideals[i].subset_of(ideals[j])) continue;
      out << "  " << quote(labels[i]) << " -> " << quote(labels[j]) << ";\n";
    }
  out << "}\n";
  return out.str();
}

}  // namespace lexlat
