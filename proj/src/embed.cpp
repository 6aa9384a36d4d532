#include "lexlat/embed.hpp"

#include <algorithm>

#include "lexlat/errors.hpp"

namespace lexlat {

const Rat& OrderEmbedding::insert(const std::string& id,
                                  const std::function<Cmp(size_t)>& against) {
  for (const auto& [prev, value] : assigned_)
    require(prev != id, Err::InconsistentOracle, "duplicate element '" + id + "'");

  Rat value;
  if (assigned_.empty()) {
    value = 1;
  } else {
    // lo = largest assigned value among elements below the new one,
    // hi = smallest among elements above; the oracle must keep lo < hi
    bool have_lo = false, have_hi = false;
    Rat lo, hi;
    Rat min_all = assigned_.front().second, max_all = assigned_.front().second;
    for (size_t i = 0; i < assigned_.size(); ++i) {
      const Rat& v = assigned_[i].second;
      min_all = std::min(min_all, v);
      max_all = std::max(max_all, v);
      if (against(i) == Cmp::Greater) {
        // previous element is below the new one
        if (!have_lo || v > lo) lo = v;
        have_lo = true;
      } else {
        if (!have_hi || v < hi) hi = v;
        have_hi = true;
      }
    }
    if (have_lo && have_hi)
      require(lo < hi, Err::InconsistentOracle,
              "oracle places '" + id + "' between elements already ordered the other way");
    if (!have_lo) {
      value = min_all / 2;
    } else if (!have_hi) {
      value = max_all * 2;
    } else {
      value = (lo + hi) / 2;
    }
  }
  value.canonicalize();
  assigned_.emplace_back(id, std::move(value));
  return assigned_.back().second;
}

std::vector<std::pair<std::string, Rat>> embed_total_order(
    const std::vector<std::pair<std::string, Rat>>& arrivals_with_keys) {
  OrderEmbedding emb;
  for (const auto& [id, key] : arrivals_with_keys) {
    emb.insert(id, [&](size_t i) {
      const Rat& prev_key = arrivals_with_keys[i].second;
      require(prev_key != key, Err::InconsistentOracle,
              "duplicate key for '" + id + "': the order must be strict");
      return key > prev_key ? OrderEmbedding::Cmp::Greater : OrderEmbedding::Cmp::Less;
    });
  }
  return emb.assignments();
}

}  // namespace lexlat
