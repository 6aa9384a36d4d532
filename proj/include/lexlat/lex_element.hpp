#pragma once

#include <span>
#include <string>
#include <utility>
#include <vector>

#include "lexlat/poset.hpp"
#include "lexlat/rational.hpp"

namespace lexlat {

// A finitely supported element of Lex(X) over a finite forest: a sparse map
// from elements to nonzero exact rationals, kept sorted by element index with
// zero entries removed eagerly.
//
// Elements hold a raw pointer to their host poset; the poset must outlive
// them. Two elements interoperate only when they share the same host object
// (PosetMismatch otherwise).
class LexElement {
 public:
  explicit LexElement(const ForestPoset& host) : host_(&host) {}

  static LexElement unit(const ForestPoset& host, int x);
  static LexElement unit(const ForestPoset& host, std::string_view id);
  // Sorts, merges duplicate keys, drops zeros, and range-checks indices.
  static LexElement from_coeffs(const ForestPoset& host, std::vector<std::pair<int, Rat>> coeffs);

  const ForestPoset& host() const { return *host_; }
  const ForestPoset* host_ptr() const { return host_; }
  std::span<const std::pair<int, Rat>> coeffs() const { return coeffs_; }
  bool is_zero() const { return coeffs_.empty(); }
  Rat coeff(int x) const;
  std::vector<int> support() const;

  LexElement operator+(const LexElement& other) const;
  LexElement operator-(const LexElement& other) const;
  LexElement operator-() const;
  bool operator==(const LexElement& other) const {
    return host_ == other.host_ && coeffs_ == other.coeffs_;
  }
  bool operator!=(const LexElement& other) const { return !(*this == other); }

 private:
  const ForestPoset* host_;
  std::vector<std::pair<int, Rat>> coeffs_;
};

LexElement scale(const Rat& r, const LexElement& f);

// m(f) split by coefficient sign: plus holds m+(f), minus holds m-(f). Both
// are antichains and their up-closures are disjoint.
struct SignSplit {
  std::vector<int> plus;
  std::vector<int> minus;
};

SignSplit min_support(const LexElement& f);

// f >= 0 iff every minimal support element carries a positive coefficient
// (vacuously true for 0).
bool is_positive(const LexElement& f);

// f restricted to an upper set (pointwise multiplication by the indicator).
LexElement mask(const LexElement& f, const UpperSet& u);
// f restricted to the up-closure of an antichain, without materializing it.
LexElement mask_up(const LexElement& f, std::span<const int> antichain);

// f * 1_{up m+(f)}; the positive part.
LexElement pos_part(const LexElement& f);
// f * 1_{up m+(f)} - f * 1_{up m-(f)}; equals sup(f, -f).
LexElement abs(const LexElement& f);

LexElement sup(const LexElement& f, const LexElement& g);
LexElement inf(const LexElement& f, const LexElement& g);

bool lattice_leq(const LexElement& f, const LexElement& g);

// For z, x, y >= 0 with z <= x + y (PreconditionViolated otherwise), returns
// (z1, z2) with z1 + z2 = z, 0 <= z1 <= x, 0 <= z2 <= y. Deterministic:
// z1 = pos_part(z - y), z2 = inf(z, y).
std::pair<LexElement, LexElement> riesz_decompose(const LexElement& z, const LexElement& x,
                                                  const LexElement& y);

// Lex(X) is Archimedean iff X has no strict comparability at all.
bool is_archimedean(const ForestPoset& p);

// "3*e[a] - 1*e[b]" in element-index order; "0" for the zero element.
std::string to_string(const LexElement& f);

}  // namespace lexlat
