#pragma once

#include <functional>
#include <string>
#include <utility>
#include <vector>

#include "lexlat/rational.hpp"

namespace lexlat {

// Streaming order embedding of a countable strict total order into the
// positive rationals. The first element is assigned 1; an element below all
// previous ones gets half the current minimum, one above all twice the
// current maximum, and one strictly between neighbors the midpoint of their
// values. Assigned values never change.
class OrderEmbedding {
 public:
  enum class Cmp { Less, Greater };  // the new element vs a previous one

  // against(i) orders the new element against arrival #i (0-based); it is
  // queried for every previous element. InconsistentOracle when the answers
  // contradict the order established so far, or on duplicate ids.
  const Rat& insert(const std::string& id, const std::function<Cmp(size_t)>& against);

  size_t size() const { return assigned_.size(); }
  const std::vector<std::pair<std::string, Rat>>& assignments() const { return assigned_; }

 private:
  std::vector<std::pair<std::string, Rat>> assigned_;  // arrival order
};

// Batch form: the oracle is comparison of the given rational keys (duplicate
// keys are an InconsistentOracle since the order must be strict).
std::vector<std::pair<std::string, Rat>> embed_total_order(
    const std::vector<std::pair<std::string, Rat>>& arrivals_with_keys);

}  // namespace lexlat
