#pragma once

#include <algorithm>
#include <map>
#include <random>
#include <string>
#include <vector>

#include "lexlat/ideal.hpp"
#include "lexlat/lex_element.hpp"
#include "lexlat/poset.hpp"

namespace lexlat::testing {

using Rng = std::mt19937_64;

inline ForestPoset random_forest(Rng& rng, int n) {
  std::vector<std::string> ids;
  std::vector<int> parent;
  for (int i = 0; i < n; ++i) {
    ids.push_back("x" + std::to_string(i));
    std::uniform_int_distribution<int> pick(-1, i - 1);
    parent.push_back(i == 0 ? -1 : pick(rng));
  }
  return ForestPoset::from_parents(std::move(ids), std::move(parent));
}

inline Rat random_rat(Rng& rng) {
  std::uniform_int_distribution<int> num(-9, 9);
  std::uniform_int_distribution<int> den(1, 9);
  int n = num(rng);
  if (n == 0) n = 1;
  Rat q(n, den(rng));
  q.canonicalize();
  return q;
}

inline LexElement random_element(const ForestPoset& p, Rng& rng) {
  std::uniform_int_distribution<int> pick(0, 1);
  std::vector<std::pair<int, Rat>> coeffs;
  for (int x = 0; x < p.size(); ++x)
    if (pick(rng)) coeffs.emplace_back(x, random_rat(rng));
  return LexElement::from_coeffs(p, std::move(coeffs));
}

inline LexElement random_nonzero_element(const ForestPoset& p, Rng& rng) {
  for (int attempt = 0; attempt < 64; ++attempt) {
    LexElement f = random_element(p, rng);
    if (!f.is_zero()) return f;
  }
  return LexElement::unit(p, 0);
}

inline LexElement random_positive_element(const ForestPoset& p, Rng& rng) {
  return abs(random_nonzero_element(p, rng));
}

// --- exhaustive rooted forests up to isomorphism -------------------------

namespace detail {

// canonical code of a rooted tree: "(" + sorted child codes + ")"
struct Tree {
  int size;
  std::string code;
  std::vector<int> parents;  // parent indices within the tree, root = -1
};

inline std::vector<std::vector<Tree>>& tree_table(int max_n) {
  static std::vector<std::vector<Tree>> table;  // table[n] = trees of size n
  if (static_cast<int>(table.size()) > max_n) return table;
  table.assign(static_cast<size_t>(max_n) + 1, {});
  if (max_n >= 1) table[1].push_back({1, "()", {-1}});
  for (int n = 2; n <= max_n; ++n) {
    // a tree of size n is a root with a forest of total size n-1 below...
    // above it; children multisets are enumerated in non-increasing code order
    struct Item {
      std::vector<const Tree*> children;
    };
    std::vector<Item> stack;
    auto rec = [&](auto&& self, int remaining, int max_size, const std::string& max_code,
                   std::vector<const Tree*>& acc) -> void {
      if (remaining == 0) {
        std::vector<int> parents{-1};
        std::string code = "(";
        for (const Tree* child : acc) {
          int offset = static_cast<int>(parents.size());
          for (int cp : child->parents) parents.push_back(cp < 0 ? 0 : cp + offset);
          code += child->code;
        }
        code += ")";
        table[static_cast<size_t>(n)].push_back({n, code, parents});
        return;
      }
      for (int s = std::min(remaining, max_size); s >= 1; --s) {
        for (const Tree& t : table[static_cast<size_t>(s)]) {
          if (s == max_size && t.code > max_code) continue;
          acc.push_back(&t);
          self(self, remaining - s, s, t.code, acc);
          acc.pop_back();
        }
      }
    };
    std::vector<const Tree*> acc;
    rec(rec, n - 1, n - 1, std::string(1000, '~'), acc);
  }
  return table;
}

}  // namespace detail

// all rooted forests with exactly n elements, one per isomorphism class
inline std::vector<ForestPoset> forests_of_size(int n) {
  if (n == 0) return {ForestPoset()};
  auto& table = detail::tree_table(n);
  std::vector<ForestPoset> out;
  auto rec = [&](auto&& self, int remaining, int max_size, const std::string& max_code,
                 std::vector<const detail::Tree*>& acc) -> void {
    if (remaining == 0) {
      std::vector<std::string> ids;
      std::vector<int> parents;
      for (const detail::Tree* tree : acc) {
        int offset = static_cast<int>(parents.size());
        for (int tp : tree->parents) parents.push_back(tp < 0 ? -1 : tp + offset);
      }
      for (size_t i = 0; i < parents.size(); ++i) ids.push_back("x" + std::to_string(i));
      out.push_back(ForestPoset::from_parents(std::move(ids), std::move(parents)));
      return;
    }
    for (int s = std::min(remaining, max_size); s >= 1; --s) {
      for (const detail::Tree& t : table[static_cast<size_t>(s)]) {
        if (s == max_size && t.code > max_code) continue;
        acc.push_back(&t);
        self(self, remaining - s, s, t.code, acc);
        acc.pop_back();
      }
    }
  };
  std::vector<const detail::Tree*> acc;
  rec(rec, n, n, std::string(1000, '~'), acc);
  return out;
}

inline std::vector<ForestPoset> forests_up_to(int n) {
  std::vector<ForestPoset> out;
  for (int k = 0; k <= n; ++k) {
    auto batch = forests_of_size(k);
    out.insert(out.end(), std::make_move_iterator(batch.begin()),
               std::make_move_iterator(batch.end()));
  }
  return out;
}

// --- oracles --------------------------------------------------------------

// definitional membership in the principal ideal of f: some multiple of |f|
// dominates |g|; monotone in n, so testing the bound suffices
inline bool membership_oracle(const LexElement& g, const LexElement& f, long n_bound = 1000000) {
  LexElement h = scale(Rat(n_bound), abs(f));
  return is_positive(h - g) && is_positive(h + g);
}

// all upper sets by definition: subsets closed under <= with the order checked
// through leq, independent of the bitmask enumeration path
inline std::vector<std::vector<int>> brute_upper_sets(const ForestPoset& p) {
  std::vector<std::vector<int>> out;
  const int n = p.size();
  for (std::uint64_t m = 0; m < (1ull << n); ++m) {
    bool upper = true;
    for (int x = 0; x < n && upper; ++x) {
      if (!(m & (1ull << x))) continue;
      for (int y = 0; y < n && upper; ++y)
        if (p.leq(x, y) && !(m & (1ull << y))) upper = false;
    }
    if (!upper) continue;
    std::vector<int> members;
    for (int x = 0; x < n; ++x)
      if (m & (1ull << x)) members.push_back(x);
    out.push_back(std::move(members));
  }
  return out;
}

// definitional primality: no disjoint positive pair stays outside the ideal;
// complete because every incomparable basis pair is disjoint and is included
inline bool primality_oracle(const IdealHandle& u, Rng& rng, int random_pairs = 200) {
  const ForestPoset& p = u.host();
  if (u.is_full()) return false;  // proper ideals only
  auto violates = [&](const LexElement& a, const LexElement& b) {
    return !ideal_membership(a, u) && !ideal_membership(b, u);
  };
  for (int x = 0; x < p.size(); ++x)
    for (int y = x + 1; y < p.size(); ++y) {
      if (p.comparable(x, y)) continue;
      if (violates(LexElement::unit(p, x), LexElement::unit(p, y))) return false;
    }
  for (int k = 0; k < random_pairs; ++k) {
    LexElement a = random_positive_element(p, rng);
    LexElement b = random_positive_element(p, rng);
    LexElement w = inf(a, b);
    if (violates(a - w, b - w)) return false;
  }
  return true;
}

// minimal structural DOT check: digraph header, node/edge/attr statements,
// balanced braces
inline bool dot_syntax_ok(const std::string& dot) {
  std::vector<std::string> lines;
  std::string cur;
  for (char c : dot) {
    if (c == '\n') {
      lines.push_back(cur);
      cur.clear();
    } else {
      cur += c;
    }
  }
  if (!cur.empty()) return false;  // must end with a newline
  if (lines.size() < 2) return false;
  if (lines.front().rfind("digraph ", 0) != 0 || lines.front().back() != '{') return false;
  if (lines.back() != "}") return false;
  auto quoted = [](const std::string& s, size_t& i) {
    if (i >= s.size() || s[i] != '"') return false;
    for (++i; i < s.size(); ++i) {
      if (s[i] == '\\') {
        ++i;
      } else if (s[i] == '"') {
        ++i;
        return true;
      }
    }
    return false;
  };
  for (size_t li = 1; li + 1 < lines.size(); ++li) {
    const std::string& s = lines[li];
    if (s.rfind("  ", 0) != 0) return false;
    size_t i = 2;
    if (s.compare(i, 8, "rankdir=") == 0) {
      if (s.back() != ';') return false;
      continue;
    }
    if (!quoted(s, i)) return false;
    if (s.compare(i, 4, " -> ") == 0) {
      i += 4;
      if (!quoted(s, i)) return false;
    }
    if (s.compare(i, 8, " [label=") == 0) {
      i += 8;
      if (!quoted(s, i)) return false;
      if (s[i] != ']') return false;
      ++i;
    }
    if (s.compare(i, 1, ";") != 0 || i + 1 != s.size()) return false;
  }
  return true;
}

}  // namespace lexlat::testing
