#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "lexlat/ideal.hpp"
#include "lexlat/lex_element.hpp"

namespace lexlat {

// The local ideal at x: handle up(x) with strong unit e_x and unique maximal
// ideal E(up(x) \ {x}).
struct LocalIdeal {
  int base;
  UpperSet handle;
  LexElement unit;
  UpperSet maximal_ideal;
};

std::vector<LocalIdeal> local_ideals(const ForestPoset& p);

// The masks up(x), one per element. Q_x(f) = f * 1_{up(x)}.
class ProjectionTable {
 public:
  explicit ProjectionTable(const ForestPoset& p);

  const ForestPoset& host() const { return *host_; }
  const UpperSet& mask_of(int x) const { return masks_[static_cast<size_t>(x)]; }
  LexElement apply(int x, const LexElement& f) const;

 private:
  const ForestPoset* host_;
  std::vector<UpperSet> masks_;
};

LexElement local_projection(int x, const LexElement& f);

// C_x = I - Q_x.
LexElement cut(int x, const LexElement& f);

// The coefficient of f at x: phi composed with Q_x. The total map
// f -> (coordinate_functional(x, f))_x is the identity representation of
// Lex(X) inside the function space over X.
Rat coordinate_functional(int x, const LexElement& f);

// f split into its components over the pairwise disjoint local ideals at
// m(f): pieces f * 1_{up(x)} for x in m(f), in element order. ZeroElement
// for f = 0.
std::vector<std::pair<LocalIdeal, LexElement>> decompose_principal(const LexElement& f);

// Report for the three compatibility axioms checked on every ordered pair of
// local ideals:
//   axiom 1 (per local L): Q_L(E) = L and Q_L^2 = Q_L
//   axiom 2 (disjoint):    Q_1 Q_2 = Q_2 Q_1 = 0
//   axiom 3 (nested L1 in L2): Q_1 Q_2 = Q_2 Q_1 = Q_1 and Q_1(e_{L2}) = 0
// Checked on all basis vectors plus `random_per_pair` random elements per
// pair, deterministic in `seed`.
struct CompatLine {
  int x;
  int y;
  int axiom;
  bool pass;
  std::string counterexample_json;  // empty when pass
};

struct CompatReport {
  std::vector<CompatLine> lines;
  bool all_pass = true;

  // "PAIR (x,y) AXIOM k PASS|FAIL [counterexample]" per line.
  std::string to_text(const ForestPoset& p) const;
};

CompatReport verify_compatibility(const ForestPoset& p, int random_per_pair = 50,
                                  std::uint64_t seed = 0x5eed);
CompatReport verify_compatibility_serial(const ForestPoset& p, int random_per_pair = 50,
                                         std::uint64_t seed = 0x5eed);
CompatReport verify_compatibility_parallel(const ForestPoset& p, int random_per_pair = 50,
                                           std::uint64_t seed = 0x5eed);

}  // namespace lexlat
