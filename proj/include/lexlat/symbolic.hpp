#pragma once

#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "lexlat/poset.hpp"

namespace lexlat {

// Infinite chain order types supported as symbolic components.
//   Omega:     1 < 2 < 3 < ...            (well-founded, not reverse)
//   OmegaStar: ... < -2 < -1              (reverse well-founded, not wf)
//   Zeta:      ... < -1 < 0 < 1 < ...     (neither)
// Chain elements are integers rendered as strings.
enum class ChainKind { Omega, OmegaStar, Zeta };

struct PosetFlags {
  bool well_founded = false;
  bool reverse_well_founded = false;
  bool finite_width = false;

  bool operator==(const PosetFlags&) const = default;
};

// The paper-style non-example "infinite antichain" is not representable as a
// value; its classification is documented here instead.
inline constexpr PosetFlags kInfiniteAntichainFlags{true, true, false};

PosetFlags classify_chain(ChainKind k);

// A finite disjoint union of components, each a finite forest or one of the
// symbolic chains. Still a forest. Identifiers must be unique across finite
// components; chain components answer for any integer id in their range, the
// first matching component winning on overlap.
class SymbolicPoset {
 public:
  using Component = std::variant<ForestPoset, ChainKind>;

  SymbolicPoset() = default;
  explicit SymbolicPoset(std::vector<Component> comps);

  // Literal syntax: `omega`, `omega_star`, `zeta`, `file:<path>` (forest DSL
  // file), or an inline forest DSL when the string contains '<' or names no
  // keyword; joined by `+` for disjoint union.
  static SymbolicPoset parse(std::string_view literal);

  const std::vector<Component>& components() const { return comps_; }
  bool is_finite() const;

  // Merges all components into a single ForestPoset. NotFinite if any
  // component is an infinite chain.
  ForestPoset flatten_finite() const;

  PosetFlags classify() const;

  // Cross-component pairs are incomparable. UnknownElement if either id
  // resolves to no component.
  bool leq(std::string_view x, std::string_view y) const;

  std::string describe() const;

 private:
  std::vector<Component> comps_;

  struct Loc {
    int comp;
    int finite_index;  // valid when the component is finite
    long chain_index;  // valid when the component is a chain
  };
  Loc locate(std::string_view id) const;
};

// An upper set of a single symbolic chain.
struct ChainUpperSet {
  enum class Kind { Empty, All, UpFrom } kind = Kind::Empty;
  long from = 0;  // meaningful for UpFrom

  bool operator==(const ChainUpperSet&) const = default;
};

// Smallest upper set of the chain containing the given points.
ChainUpperSet chain_up_closure(ChainKind k, std::span<const long> points);

// Minimal elements of an upper set of a chain. NotFinite when no minimal
// element exists (All over OmegaStar or Zeta).
std::vector<long> chain_min_of(ChainKind k, const ChainUpperSet& u);

}  // namespace lexlat
