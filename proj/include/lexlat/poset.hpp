#pragma once

#include <map>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "lexlat/errors.hpp"

namespace lexlat {

// A finite rooted forest: roots are the minimal elements, parent(x) is the
// unique element covered by x, and x <= y iff x lies on the root path of y.
// Every down-set is then a chain, which is exactly the forest condition.
//
// Instances are immutable after construction and freely shareable between
// threads. Elements are addressed by dense indices; identifiers are opaque
// strings, unique within the poset.
class ForestPoset {
 public:
  ForestPoset() = default;

  // parent_of[i] is the index of the parent of element i, or -1 for roots.
  // Validates uniqueness of ids and acyclicity of the parent map.
  static ForestPoset from_parents(std::vector<std::string> ids, std::vector<int> parent_of);

  // Builds the poset whose order is the reflexive-transitive closure of
  // `below` (pairs (x, y) meaning x < y) on the declared elements, provided
  // that closure is a partial order (else NotAPartialOrder) in which every
  // down-set is a chain (else NotAForest). The parent map is recovered from
  // the cover relation.
  static ForestPoset from_relation(const std::vector<std::string>& ids,
                                   const std::vector<std::pair<std::string, std::string>>& below);

  // Forest DSL: one `a < b` per line; a lone identifier declares an isolated
  // element; '#' starts a comment.
  static ForestPoset parse_dsl(std::string_view text);

  static ForestPoset chain(std::vector<std::string> ids_bottom_up);
  static ForestPoset antichain(std::vector<std::string> ids);

  int size() const { return static_cast<int>(ids_.size()); }
  bool empty() const { return ids_.empty(); }
  const std::vector<std::string>& ids() const { return ids_; }
  const std::string& id_of(int x) const { return ids_[static_cast<size_t>(x)]; }

  // UnknownElement if absent.
  int index_of(std::string_view id) const;
  std::optional<int> find(std::string_view id) const;

  std::optional<int> parent(int x) const {
    int p = parent_[static_cast<size_t>(x)];
    return p < 0 ? std::nullopt : std::optional<int>(p);
  }
  const std::vector<int>& children(int x) const { return children_[static_cast<size_t>(x)]; }
  int depth(int x) const { return depth_[static_cast<size_t>(x)]; }

  const std::vector<int>& roots() const { return roots_; }
  std::vector<int> maximal_elements() const;

  // Root-path containment, O(depth).
  bool leq(int x, int y) const;
  bool leq(std::string_view x, std::string_view y) const { return leq(index_of(x), index_of(y)); }
  bool strictly_less(int x, int y) const { return x != y && leq(x, y); }
  bool comparable(int x, int y) const { return leq(x, y) || leq(y, x); }

  bool is_antichain_set(std::span<const int> a) const;
  bool is_chain_set(std::span<const int> a) const;

  // True iff no two distinct elements are comparable (coordinatewise order).
  bool is_antichain_poset() const;

  // Minimal-first order used by well_founded_recursion: stable sort by
  // (depth, identifier).
  std::vector<int> canonical_linear_extension() const;

  std::string to_dsl() const;

  bool operator==(const ForestPoset& other) const {
    return ids_ == other.ids_ && parent_ == other.parent_;
  }

 private:
  std::vector<std::string> ids_;
  std::vector<int> parent_;  // -1 for roots
  std::vector<std::vector<int>> children_;
  std::vector<int> depth_;
  std::vector<int> roots_;
  std::map<std::string, int, std::less<>> index_;

  void build_derived();
};

// min(A): elements of A with no strictly smaller element in A. Result is an
// antichain, sorted by index.
std::vector<int> min_of_subset(const ForestPoset& p, std::span<const int> a);

// An upward-closed subset of a finite forest, the canonical handle for an
// ideal of Lex(X). Members are kept sorted; equality is host identity plus
// set equality.
class UpperSet {
 public:
  // Validates upward closure (NotUpperSet) and element range.
  UpperSet(const ForestPoset& host, std::vector<int> members);

  static UpperSet empty_set(const ForestPoset& host) { return UpperSet(host, {}); }
  static UpperSet full_set(const ForestPoset& host);

  const ForestPoset& host() const { return *host_; }
  const ForestPoset* host_ptr() const { return host_; }
  const std::vector<int>& members() const { return members_; }
  int size() const { return static_cast<int>(members_.size()); }
  bool is_empty() const { return members_.empty(); }
  bool is_full() const { return size() == host_->size(); }
  bool contains(int x) const;
  bool subset_of(const UpperSet& other) const;

  std::vector<int> complement() const;
  std::vector<int> min_elements() const { return min_of_subset(*host_, members_); }

  std::vector<std::string> member_ids() const;

  bool operator==(const UpperSet& other) const {
    return host_ == other.host_ && members_ == other.members_;
  }
  bool operator!=(const UpperSet& other) const { return !(*this == other); }

 private:
  const ForestPoset* host_;
  std::vector<int> members_;  // sorted indices
};

// Smallest upper set containing A.
UpperSet up_closure(const ForestPoset& p, std::span<const int> a);

// The unique F with F(x) = G(x, F restricted to the strict down-set of x),
// computed along a given minimal-first linear extension. Exceptions from the
// callback propagate. G: (int x, const std::map<int, T>& below) -> T.
template <class T, class G>
std::vector<T> well_founded_recursion_in_order(const ForestPoset& p, std::span<const int> order,
                                               G&& g) {
  std::vector<T> values(static_cast<size_t>(p.size()));
  std::vector<bool> done(static_cast<size_t>(p.size()), false);
  for (int x : order) {
    std::map<int, T> below;
    for (std::optional<int> a = p.parent(x); a; a = p.parent(*a)) {
      // order is a linear extension, so every strict ancestor is done
      below.emplace(*a, values[static_cast<size_t>(*a)]);
    }
    values[static_cast<size_t>(x)] = g(x, below);
    done[static_cast<size_t>(x)] = true;
  }
  for (bool b : done)
    if (!b) fail(Err::PreconditionViolated, "order is not a linear extension");
  return values;
}

template <class T, class G>
std::vector<T> well_founded_recursion(const ForestPoset& p, G&& g) {
  auto order = p.canonical_linear_extension();
  return well_founded_recursion_in_order<T>(p, order, std::forward<G>(g));
}

}  // namespace lexlat
