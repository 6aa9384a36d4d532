#include "lexlat/lex_element.hpp"

#include <algorithm>
#include <sstream>

namespace lexlat {

namespace {

void require_same_host(const LexElement& f, const LexElement& g) {
  require(f.host_ptr() == g.host_ptr(), Err::PosetMismatch, "elements on different posets");
}

}  // namespace

LexElement LexElement::unit(const ForestPoset& host, int x) {
  return from_coeffs(host, {{x, Rat(1)}});
}

LexElement LexElement::unit(const ForestPoset& host, std::string_view id) {
  return unit(host, host.index_of(id));
}

LexElement LexElement::from_coeffs(const ForestPoset& host,
                                   std::vector<std::pair<int, Rat>> coeffs) {
  std::sort(coeffs.begin(), coeffs.end(),
            [](const auto& a, const auto& b) { return a.first < b.first; });
  LexElement out(host);
  for (auto& [x, c] : coeffs) {
    require(x >= 0 && x < host.size(), Err::UnknownElement, "index out of range");
    c.canonicalize();
    if (rat_sign(c) == 0) continue;
    if (!out.coeffs_.empty() && out.coeffs_.back().first == x) {
      out.coeffs_.back().second += c;
      if (rat_sign(out.coeffs_.back().second) == 0) out.coeffs_.pop_back();
    } else {
      out.coeffs_.emplace_back(x, c);
    }
  }
  return out;
}

Rat LexElement::coeff(int x) const {
  auto it = std::lower_bound(coeffs_.begin(), coeffs_.end(), x,
                             [](const auto& a, int v) { return a.first < v; });
  if (it != coeffs_.end() && it->first == x) return it->second;
  return Rat(0);
}

std::vector<int> LexElement::support() const {
  std::vector<int> out;
  out.reserve(coeffs_.size());
  for (const auto& [x, c] : coeffs_) out.push_back(x);
  return out;
}

LexElement LexElement::operator+(const LexElement& other) const {
  require_same_host(*this, other);
  LexElement out(*host_);
  size_t i = 0, j = 0;
  while (i < coeffs_.size() || j < other.coeffs_.size()) {
    if (j == other.coeffs_.size() ||
        (i < coeffs_.size() && coeffs_[i].first < other.coeffs_[j].first)) {
      out.coeffs_.push_back(coeffs_[i++]);
    } else if (i == coeffs_.size() || other.coeffs_[j].first < coeffs_[i].first) {
      out.coeffs_.push_back(other.coeffs_[j++]);
    } else {
      Rat sum = coeffs_[i].second + other.coeffs_[j].second;
      if (rat_sign(sum) != 0) out.coeffs_.emplace_back(coeffs_[i].first, sum);
      ++i;
      ++j;
    }
  }
  return out;
}

LexElement LexElement::operator-() const {
  LexElement out(*host_);
  out.coeffs_.reserve(coeffs_.size());
  for (const auto& [x, c] : coeffs_) out.coeffs_.emplace_back(x, -c);
  return out;
}

LexElement LexElement::operator-(const LexElement& other) const { return *this + (-other); }

LexElement scale(const Rat& r, const LexElement& f) {
  if (rat_sign(r) == 0) return LexElement(f.host());
  std::vector<std::pair<int, Rat>> coeffs;
  coeffs.reserve(f.coeffs().size());
  for (const auto& [x, c] : f.coeffs()) coeffs.emplace_back(x, r * c);
  return LexElement::from_coeffs(f.host(), std::move(coeffs));
}

SignSplit min_support(const LexElement& f) {
  const ForestPoset& p = f.host();
  std::vector<char> in_supp(static_cast<size_t>(p.size()), 0);
  for (const auto& [x, c] : f.coeffs()) in_supp[static_cast<size_t>(x)] = 1;
  SignSplit out;
  for (const auto& [x, c] : f.coeffs()) {
    bool minimal = true;
    for (auto anc = p.parent(x); anc; anc = p.parent(*anc))
      if (in_supp[static_cast<size_t>(*anc)]) {
        minimal = false;
        break;
      }
    if (!minimal) continue;
    (rat_sign(c) > 0 ? out.plus : out.minus).push_back(x);
  }
  return out;
}

bool is_positive(const LexElement& f) { return min_support(f).minus.empty(); }

LexElement mask(const LexElement& f, const UpperSet& u) {
  require(f.host_ptr() == u.host_ptr(), Err::PosetMismatch, "mask on a different poset");
  std::vector<std::pair<int, Rat>> kept;
  for (const auto& [x, c] : f.coeffs())
    if (u.contains(x)) kept.emplace_back(x, c);
  return LexElement::from_coeffs(f.host(), std::move(kept));
}

LexElement mask_up(const LexElement& f, std::span<const int> antichain) {
  const ForestPoset& p = f.host();
  std::vector<std::pair<int, Rat>> kept;
  for (const auto& [x, c] : f.coeffs()) {
    for (int a : antichain)
      if (p.leq(a, x)) {
        kept.emplace_back(x, c);
        break;
      }
  }
  return LexElement::from_coeffs(p, std::move(kept));
}

LexElement pos_part(const LexElement& f) { return mask_up(f, min_support(f).plus); }

LexElement abs(const LexElement& f) {
  SignSplit split = min_support(f);
  return mask_up(f, split.plus) - mask_up(f, split.minus);
}

LexElement sup(const LexElement& f, const LexElement& g) {
  require_same_host(f, g);
  return g + pos_part(f - g);
}

LexElement inf(const LexElement& f, const LexElement& g) { return -sup(-f, -g); }

bool lattice_leq(const LexElement& f, const LexElement& g) { return is_positive(g - f); }

std::pair<LexElement, LexElement> riesz_decompose(const LexElement& z, const LexElement& x,
                                                  const LexElement& y) {
  require_same_host(z, x);
  require_same_host(z, y);
  require(is_positive(z) && is_positive(x) && is_positive(y), Err::PreconditionViolated,
          "riesz_decompose needs z, x, y >= 0");
  require(lattice_leq(z, x + y), Err::PreconditionViolated, "riesz_decompose needs z <= x + y");
  LexElement z1 = pos_part(z - y);
  LexElement z2 = z - z1;  // equals inf(z, y)
  return {std::move(z1), std::move(z2)};
}

bool is_archimedean(const ForestPoset& p) { return p.is_antichain_poset(); }

std::string to_string(const LexElement& f) {
  if (f.is_zero()) return "0";
  std::ostringstream out;
  bool first = true;
  for (const auto& [x, c] : f.coeffs()) {
    Rat a = c < 0 ? Rat(-c) : c;
    if (first) {
      if (rat_sign(c) < 0) out << "-";
      first = false;
    } else {
      out << (rat_sign(c) < 0 ? " - " : " + ");
    }
    out << rat_str(a) << "*e[" << f.host().id_of(x) << "]";
  }
  return out.str();
}

}  // namespace lexlat
