#include "lexlat/ideal.hpp"

#include <algorithm>
#include <cstdint>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace lexlat {

IdealHandle carrier(const ForestPoset& host, std::span<const LexElement> generators) {
  std::vector<int> support;
  for (const LexElement& f : generators) {
    require(f.host_ptr() == &host, Err::PosetMismatch, "generator on a different poset");
    for (const auto& [x, c] : f.coeffs()) support.push_back(x);
  }
  std::sort(support.begin(), support.end());
  support.erase(std::unique(support.begin(), support.end()), support.end());
  return up_closure(host, support);
}

IdealHandle principal_ideal(const LexElement& f) {
  SignSplit split = min_support(f);
  std::vector<int> m;
  std::merge(split.plus.begin(), split.plus.end(), split.minus.begin(), split.minus.end(),
             std::back_inserter(m));
  return up_closure(f.host(), m);
}

bool ideal_membership(const LexElement& f, const IdealHandle& ideal) {
  require(f.host_ptr() == ideal.host_ptr(), Err::PosetMismatch, "element on a different poset");
  for (const auto& [x, c] : f.coeffs())
    if (!ideal.contains(x)) return false;
  return true;
}

namespace {

// Membership bitmasks: m is an upper set iff every member has all its
// children in m.
std::vector<std::uint32_t> child_masks(const ForestPoset& p) {
  std::vector<std::uint32_t> cm(static_cast<size_t>(p.size()), 0);
  for (int x = 0; x < p.size(); ++x)
    for (int c : p.children(x)) cm[static_cast<size_t>(x)] |= (1u << c);
  return cm;
}

bool mask_is_upper(std::uint32_t m, const std::vector<std::uint32_t>& cm) {
  std::uint32_t rest = m;
  while (rest) {
    int x = __builtin_ctz(rest);
    rest &= rest - 1;
    if ((m & cm[static_cast<size_t>(x)]) != cm[static_cast<size_t>(x)]) return false;
  }
  return true;
}

std::vector<IdealHandle> masks_to_sets(const ForestPoset& p,
                                       const std::vector<std::uint32_t>& masks) {
  // canonical order: by size, then by the id-sorted member sequence
  std::vector<int> rank(static_cast<size_t>(p.size()));
  {
    std::vector<int> by_id(static_cast<size_t>(p.size()));
    for (int i = 0; i < p.size(); ++i) by_id[static_cast<size_t>(i)] = i;
    std::sort(by_id.begin(), by_id.end(),
              [&p](int a, int b) { return p.id_of(a) < p.id_of(b); });
    for (int r = 0; r < p.size(); ++r) rank[static_cast<size_t>(by_id[static_cast<size_t>(r)])] = r;
  }
  std::vector<std::vector<int>> keys;
  keys.reserve(masks.size());
  for (std::uint32_t m : masks) {
    std::vector<int> key;
    std::uint32_t rest = m;
    while (rest) {
      int x = __builtin_ctz(rest);
      rest &= rest - 1;
      key.push_back(rank[static_cast<size_t>(x)]);
    }
    std::sort(key.begin(), key.end());
    keys.push_back(std::move(key));
  }
  std::vector<size_t> order(masks.size());
  for (size_t i = 0; i < order.size(); ++i) order[i] = i;
  std::sort(order.begin(), order.end(), [&keys](size_t a, size_t b) {
    if (keys[a].size() != keys[b].size()) return keys[a].size() < keys[b].size();
    return keys[a] < keys[b];
  });

  std::vector<IdealHandle> out;
  out.reserve(masks.size());
  for (size_t i : order) {
    std::vector<int> members;
    std::uint32_t rest = masks[i];
    while (rest) {
      int x = __builtin_ctz(rest);
      rest &= rest - 1;
      members.push_back(x);
    }
    out.emplace_back(p, std::move(members));
  }
  return out;
}

void check_enumeration_size(const ForestPoset& p) {
  require(p.size() <= kEnumerationLimit, Err::TooLarge,
          "enumeration is limited to " + std::to_string(kEnumerationLimit) + " elements, got " +
              std::to_string(p.size()));
}

}  // namespace

std::vector<IdealHandle> enumerate_ideals_serial(const ForestPoset& p) {
  check_enumeration_size(p);
  auto cm = child_masks(p);
  std::vector<std::uint32_t> found;
  const std::uint64_t total = 1ull << p.size();
  for (std::uint64_t m = 0; m < total; ++m)
    if (mask_is_upper(static_cast<std::uint32_t>(m), cm))
      found.push_back(static_cast<std::uint32_t>(m));
  return masks_to_sets(p, found);
}

std::vector<IdealHandle> enumerate_ideals_parallel(const ForestPoset& p) {
  check_enumeration_size(p);
  auto cm = child_masks(p);
  const std::int64_t total = 1ll << p.size();
  std::vector<std::vector<std::uint32_t>> per_thread;
#ifdef _OPENMP
  per_thread.resize(static_cast<size_t>(omp_get_max_threads()));
#pragma omp parallel
  {
    auto& mine = per_thread[static_cast<size_t>(omp_get_thread_num())];
#pragma omp for schedule(static)
    for (std::int64_t m = 0; m < total; ++m)
      if (mask_is_upper(static_cast<std::uint32_t>(m), cm))
        mine.push_back(static_cast<std::uint32_t>(m));
  }
#else
  per_thread.resize(1);
  for (std::int64_t m = 0; m < total; ++m)
    if (mask_is_upper(static_cast<std::uint32_t>(m), cm))
      per_thread[0].push_back(static_cast<std::uint32_t>(m));
#endif
  std::vector<std::uint32_t> found;
  for (auto& chunk : per_thread) found.insert(found.end(), chunk.begin(), chunk.end());
  return masks_to_sets(p, found);
}

std::vector<IdealHandle> enumerate_ideals(const ForestPoset& p) {
  return p.size() >= 14 ? enumerate_ideals_parallel(p) : enumerate_ideals_serial(p);
}

IdealClassification classify_ideal(const IdealHandle& ideal) {
  const ForestPoset& p = ideal.host();
  IdealClassification out;
  out.generating_antichain = ideal.min_elements();
  out.is_proper = !ideal.is_full();
  out.is_local = out.generating_antichain.size() == 1;
  auto comp = ideal.complement();
  out.is_maximal = comp.size() == 1;
  out.is_minimal_ideal =
      ideal.size() == 1 && p.children(ideal.members().front()).empty();
  out.is_prime = out.is_proper && p.is_chain_set(comp);
  return out;
}

IdealHandle radical(const ForestPoset& p) {
  require(!p.empty(), Err::EmptyPoset, "radical of Lex over the empty poset");
  std::vector<int> members;
  for (int x = 0; x < p.size(); ++x)
    if (p.parent(x)) members.push_back(x);
  return IdealHandle(p, std::move(members));
}

QuotientResult quotient_poset(const ForestPoset& p, const IdealHandle& u) {
  require(u.host_ptr() == &p, Err::NotUpperSet, "upper set on a different poset");
  QuotientResult out;
  out.old_to_new.assign(static_cast<size_t>(p.size()), -1);
  std::vector<std::string> ids;
  std::vector<int> kept;
  for (int x = 0; x < p.size(); ++x) {
    if (u.contains(x)) continue;
    out.old_to_new[static_cast<size_t>(x)] = static_cast<int>(kept.size());
    kept.push_back(x);
    ids.push_back(p.id_of(x));
  }
  std::vector<int> parent;
  parent.reserve(kept.size());
  for (int x : kept) {
    auto par = p.parent(x);
    // the complement of an upper set is parent-closed
    parent.push_back(par ? out.old_to_new[static_cast<size_t>(*par)] : -1);
  }
  out.poset = ForestPoset::from_parents(std::move(ids), std::move(parent));
  return out;
}

LexElement quotient_restrict(const QuotientResult& q, const LexElement& f) {
  std::vector<std::pair<int, Rat>> coeffs;
  for (const auto& [x, c] : f.coeffs()) {
    int nx = q.old_to_new[static_cast<size_t>(x)];
    if (nx >= 0) coeffs.emplace_back(nx, c);
  }
  return LexElement::from_coeffs(q.poset, std::move(coeffs));
}

LexFlags lex_classification(const SymbolicPoset& p) {
  PosetFlags flags = p.classify();
  return {flags.reverse_well_founded && flags.finite_width,
          flags.well_founded && flags.finite_width};
}

std::vector<IdealHandle> prime_spectrum(const ForestPoset& p) {
  std::vector<IdealHandle> out;
  for (auto& u : enumerate_ideals(p))
    if (classify_ideal(u).is_prime) out.push_back(std::move(u));
  return out;
}

MinPrimeReport min_primes_finite_codim(const ForestPoset& p) {
  MinPrimeReport report;
  auto primes = prime_spectrum(p);
  for (const auto& u : primes) {
    bool minimal = true;
    for (const auto& v : primes)
      if (v != u && v.subset_of(u)) {
        minimal = false;
        break;
      }
    if (minimal) report.minimal_primes.push_back({u, p.size() - u.size()});
  }
  report.all_finite_codimension = true;
  return report;
}

}  // namespace lexlat
