#include "lexlat/poset.hpp"

#include <algorithm>
#include <sstream>

#include "lexlat/errors.hpp"

namespace lexlat {

void ForestPoset::build_derived() {
  const size_t n = ids_.size();
  index_.clear();
  for (size_t i = 0; i < n; ++i) {
    auto [it, fresh] = index_.emplace(ids_[i], static_cast<int>(i));
    require(fresh, Err::NotAPartialOrder, "duplicate element id '" + ids_[i] + "'");
  }

  children_.assign(n, {});
  roots_.clear();
  for (size_t i = 0; i < n; ++i) {
    int p = parent_[i];
    if (p < 0) {
      roots_.push_back(static_cast<int>(i));
    } else {
      require(p < static_cast<int>(n), Err::UnknownElement, "parent index out of range");
      children_[static_cast<size_t>(p)].push_back(static_cast<int>(i));
    }
  }

  // depths double as the acyclicity check: a cycle never reaches a root
  depth_.assign(n, -1);
  for (size_t i = 0; i < n; ++i) {
    if (depth_[i] >= 0) continue;
    std::vector<int> path;
    int cur = static_cast<int>(i);
    while (cur >= 0 && depth_[static_cast<size_t>(cur)] < 0) {
      path.push_back(cur);
      require(path.size() <= n, Err::NotAPartialOrder, "cycle in parent map");
      cur = parent_[static_cast<size_t>(cur)];
    }
    int base = cur < 0 ? -1 : depth_[static_cast<size_t>(cur)];
    for (auto it = path.rbegin(); it != path.rend(); ++it) depth_[static_cast<size_t>(*it)] = ++base;
  }
}

ForestPoset ForestPoset::from_parents(std::vector<std::string> ids, std::vector<int> parent_of) {
  require(ids.size() == parent_of.size(), Err::UnknownElement, "ids/parents size mismatch");
  ForestPoset p;
  p.ids_ = std::move(ids);
  p.parent_ = std::move(parent_of);
  p.build_derived();
  return p;
}

ForestPoset ForestPoset::from_relation(
    const std::vector<std::string>& ids,
    const std::vector<std::pair<std::string, std::string>>& below) {
  const int n = static_cast<int>(ids.size());
  std::map<std::string, int, std::less<>> pos;
  for (int i = 0; i < n; ++i) {
    auto [it, fresh] = pos.emplace(ids[static_cast<size_t>(i)], i);
    require(fresh, Err::NotAPartialOrder, "duplicate element id '" + ids[static_cast<size_t>(i)] + "'");
  }

  std::vector<std::vector<int>> up(static_cast<size_t>(n));  // edges x -> y for x < y
  for (const auto& [lo, hi] : below) {
    auto li = pos.find(lo);
    auto hi_it = pos.find(hi);
    require(li != pos.end(), Err::UnknownElement, "undeclared element '" + lo + "'");
    require(hi_it != pos.end(), Err::UnknownElement, "undeclared element '" + hi + "'");
    require(li->second != hi_it->second, Err::NotAPartialOrder, "reflexive strict pair '" + lo + "'");
    up[static_cast<size_t>(li->second)].push_back(hi_it->second);
  }

  // reach[x] = strict up-set of x; DFS with cycle detection
  std::vector<std::vector<bool>> reach(static_cast<size_t>(n),
                                       std::vector<bool>(static_cast<size_t>(n), false));
  std::vector<int> state(static_cast<size_t>(n), 0);  // 0 new, 1 active, 2 done
  auto dfs = [&](auto&& self, int x) -> void {
    state[static_cast<size_t>(x)] = 1;
    for (int y : up[static_cast<size_t>(x)]) {
      require(state[static_cast<size_t>(y)] != 1, Err::NotAPartialOrder, "cycle detected");
      if (state[static_cast<size_t>(y)] == 0) self(self, y);
      reach[static_cast<size_t>(x)][static_cast<size_t>(y)] = true;
      for (int z = 0; z < n; ++z)
        if (reach[static_cast<size_t>(y)][static_cast<size_t>(z)])
          reach[static_cast<size_t>(x)][static_cast<size_t>(z)] = true;
    }
    state[static_cast<size_t>(x)] = 2;
  };
  for (int x = 0; x < n; ++x)
    if (state[static_cast<size_t>(x)] == 0) dfs(dfs, x);
  for (int x = 0; x < n; ++x)
    require(!reach[static_cast<size_t>(x)][static_cast<size_t>(x)], Err::NotAPartialOrder,
            "cycle detected");

  // forest condition: the strict down-set of every element must be a chain
  std::vector<int> below_count(static_cast<size_t>(n), 0);
  for (int y = 0; y < n; ++y) {
    std::vector<int> down;
    for (int x = 0; x < n; ++x)
      if (reach[static_cast<size_t>(x)][static_cast<size_t>(y)]) down.push_back(x);
    below_count[static_cast<size_t>(y)] = static_cast<int>(down.size());
    for (size_t a = 0; a < down.size(); ++a)
      for (size_t b = a + 1; b < down.size(); ++b) {
        int xa = down[a], xb = down[b];
        bool cmp = reach[static_cast<size_t>(xa)][static_cast<size_t>(xb)] ||
                   reach[static_cast<size_t>(xb)][static_cast<size_t>(xa)];
        require(cmp, Err::NotAForest,
                "down-set of '" + ids[static_cast<size_t>(y)] + "' contains incomparable '" +
                    ids[static_cast<size_t>(xa)] + "', '" + ids[static_cast<size_t>(xb)] + "'");
      }
  }

  // the strict down-set is a chain, so its largest member is the parent
  std::vector<int> parent(static_cast<size_t>(n), -1);
  for (int y = 0; y < n; ++y) {
    int best = -1;
    for (int x = 0; x < n; ++x) {
      if (!reach[static_cast<size_t>(x)][static_cast<size_t>(y)]) continue;
      if (best < 0 || below_count[static_cast<size_t>(x)] > below_count[static_cast<size_t>(best)])
        best = x;
    }
    parent[static_cast<size_t>(y)] = best;
  }
  return from_parents(ids, std::move(parent));
}

namespace {

std::string trim(std::string_view s) {
  size_t b = s.find_first_not_of(" \t\r\n");
  if (b == std::string_view::npos) return {};
  size_t e = s.find_last_not_of(" \t\r\n");
  return std::string(s.substr(b, e - b + 1));
}

bool valid_id(const std::string& id) {
  if (id.empty()) return false;
  for (char c : id)
    if (c == '<' || c == '#' || c == ';' || c == ',' || c == ' ' || c == '\t') return false;
  return true;
}

}  // namespace

ForestPoset ForestPoset::parse_dsl(std::string_view text) {
  std::vector<std::string> ids;
  std::map<std::string, int, std::less<>> seen;
  auto declare = [&](const std::string& id) {
    require(valid_id(id), Err::ParseError, "bad identifier '" + id + "'");
    if (seen.emplace(id, 0).second) ids.push_back(id);
  };

  std::vector<std::pair<std::string, std::string>> below;
  std::string src(text);
  std::replace(src.begin(), src.end(), ';', '\n');
  std::istringstream in(src);
  std::string line;
  while (std::getline(in, line)) {
    if (auto h = line.find('#'); h != std::string::npos) line.erase(h);
    std::string body = trim(line);
    if (body.empty()) continue;
    size_t lt = body.find('<');
    if (lt == std::string::npos) {
      declare(body);
      continue;
    }
    std::string lo = trim(body.substr(0, lt));
    std::string hi = trim(body.substr(lt + 1));
    require(hi.find('<') == std::string::npos, Err::ParseError, "expected `a < b` in '" + body + "'");
    declare(lo);
    declare(hi);
    below.emplace_back(lo, hi);
  }
  return from_relation(ids, below);
}

ForestPoset ForestPoset::chain(std::vector<std::string> ids_bottom_up) {
  std::vector<int> parent(ids_bottom_up.size());
  for (size_t i = 0; i < ids_bottom_up.size(); ++i) parent[i] = static_cast<int>(i) - 1;
  return from_parents(std::move(ids_bottom_up), std::move(parent));
}

ForestPoset ForestPoset::antichain(std::vector<std::string> ids) {
  std::vector<int> parent(ids.size(), -1);
  return from_parents(std::move(ids), std::move(parent));
}

int ForestPoset::index_of(std::string_view id) const {
  auto it = index_.find(id);
  require(it != index_.end(), Err::UnknownElement, "no element '" + std::string(id) + "'");
  return it->second;
}

std::optional<int> ForestPoset::find(std::string_view id) const {
  auto it = index_.find(id);
  return it == index_.end() ? std::nullopt : std::optional<int>(it->second);
}

std::vector<int> ForestPoset::maximal_elements() const {
  std::vector<int> out;
  for (int i = 0; i < size(); ++i)
    if (children_[static_cast<size_t>(i)].empty()) out.push_back(i);
  return out;
}

bool ForestPoset::leq(int x, int y) const {
  require(x >= 0 && x < size() && y >= 0 && y < size(), Err::UnknownElement, "index out of range");
  int dx = depth(x);
  while (depth(y) > dx) y = parent_[static_cast<size_t>(y)];
  return x == y;
}

bool ForestPoset::is_antichain_set(std::span<const int> a) const {
  for (size_t i = 0; i < a.size(); ++i)
    for (size_t j = i + 1; j < a.size(); ++j)
      if (comparable(a[i], a[j])) return false;
  return true;
}

bool ForestPoset::is_chain_set(std::span<const int> a) const {
  for (size_t i = 0; i < a.size(); ++i)
    for (size_t j = i + 1; j < a.size(); ++j)
      if (!comparable(a[i], a[j])) return false;
  return true;
}

bool ForestPoset::is_antichain_poset() const {
  for (int p : parent_)
    if (p >= 0) return false;
  return true;
}

std::vector<int> ForestPoset::canonical_linear_extension() const {
  std::vector<int> order(static_cast<size_t>(size()));
  for (int i = 0; i < size(); ++i) order[static_cast<size_t>(i)] = i;
  std::stable_sort(order.begin(), order.end(), [this](int a, int b) {
    if (depth(a) != depth(b)) return depth(a) < depth(b);
    return id_of(a) < id_of(b);
  });
  return order;
}

std::string ForestPoset::to_dsl() const {
  std::ostringstream out;
  for (int i = 0; i < size(); ++i) {
    if (parent_[static_cast<size_t>(i)] < 0 && children_[static_cast<size_t>(i)].empty())
      out << id_of(i) << "\n";
  }
  for (int i = 0; i < size(); ++i) {
    if (int p = parent_[static_cast<size_t>(i)]; p >= 0)
      out << id_of(p) << " < " << id_of(i) << "\n";
  }
  return out.str();
}

std::vector<int> min_of_subset(const ForestPoset& p, std::span<const int> a) {
  std::vector<char> in_a(static_cast<size_t>(p.size()), 0);
  for (int x : a) {
    require(x >= 0 && x < p.size(), Err::UnknownElement, "index out of range");
    in_a[static_cast<size_t>(x)] = 1;
  }
  std::vector<int> out;
  for (int x = 0; x < p.size(); ++x) {
    if (!in_a[static_cast<size_t>(x)]) continue;
    bool minimal = true;
    for (auto anc = p.parent(x); anc; anc = p.parent(*anc))
      if (in_a[static_cast<size_t>(*anc)]) {
        minimal = false;
        break;
      }
    if (minimal) out.push_back(x);
  }
  return out;
}

UpperSet::UpperSet(const ForestPoset& host, std::vector<int> members)
    : host_(&host), members_(std::move(members)) {
  std::sort(members_.begin(), members_.end());
  members_.erase(std::unique(members_.begin(), members_.end()), members_.end());
  std::vector<char> in(static_cast<size_t>(host.size()), 0);
  for (int x : members_) {
    require(x >= 0 && x < host.size(), Err::UnknownElement, "index out of range");
    in[static_cast<size_t>(x)] = 1;
  }
  for (int x : members_)
    for (int c : host.children(x))
      require(in[static_cast<size_t>(c)], Err::NotUpperSet,
              "set contains '" + host.id_of(x) + "' but not '" + host.id_of(c) + "' above it");
}

UpperSet UpperSet::full_set(const ForestPoset& host) {
  std::vector<int> all(static_cast<size_t>(host.size()));
  for (int i = 0; i < host.size(); ++i) all[static_cast<size_t>(i)] = i;
  return UpperSet(host, std::move(all));
}

bool UpperSet::contains(int x) const {
  return std::binary_search(members_.begin(), members_.end(), x);
}

bool UpperSet::subset_of(const UpperSet& other) const {
  require(host_ == other.host_, Err::PosetMismatch, "upper sets on different posets");
  return std::includes(other.members_.begin(), other.members_.end(), members_.begin(),
                       members_.end());
}

std::vector<int> UpperSet::complement() const {
  std::vector<int> out;
  for (int x = 0; x < host_->size(); ++x)
    if (!contains(x)) out.push_back(x);
  return out;
}

std::vector<std::string> UpperSet::member_ids() const {
  std::vector<std::string> out;
  out.reserve(members_.size());
  for (int x : members_) out.push_back(host_->id_of(x));
  std::sort(out.begin(), out.end());
  return out;
}

UpperSet up_closure(const ForestPoset& p, std::span<const int> a) {
  std::vector<char> in(static_cast<size_t>(p.size()), 0);
  std::vector<int> stack;
  for (int x : a) {
    require(x >= 0 && x < p.size(), Err::UnknownElement, "index out of range");
    if (!in[static_cast<size_t>(x)]) {
      in[static_cast<size_t>(x)] = 1;
      stack.push_back(x);
    }
  }
  while (!stack.empty()) {
    int x = stack.back();
    stack.pop_back();
    for (int c : p.children(x))
      if (!in[static_cast<size_t>(c)]) {
        in[static_cast<size_t>(c)] = 1;
        stack.push_back(c);
      }
  }
  std::vector<int> members;
  for (int x = 0; x < p.size(); ++x)
    if (in[static_cast<size_t>(x)]) members.push_back(x);
  return UpperSet(p, std::move(members));
}

}  // namespace lexlat
