#pragma once

#include <string>

#include "lexlat/poset.hpp"

namespace lexlat {

// Hasse diagram of the forest: one node per element, one edge per cover pair,
// drawn bottom-up.
std::string hasse_dot(const ForestPoset& p);

// Hasse diagram of the ideal lattice: one node per upper set, labeled with
// the member set and classification glyphs (P prime, L local, M maximal,
// m minimal ideal); edges are covers in the inclusion order, which for upper
// sets differ by exactly one element. TooLarge past the enumeration limit.
std::string ideal_lattice_dot(const ForestPoset& p);

}  // namespace lexlat
