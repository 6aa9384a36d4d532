#pragma once

#include <span>
#include <string>
#include <vector>

#include "lexlat/lex_element.hpp"
#include "lexlat/poset.hpp"
#include "lexlat/symbolic.hpp"

namespace lexlat {

// Ideals of Lex(X) over a finite forest are represented by their upper sets;
// the correspondence U <-> E(U) is a lattice isomorphism, so the handle type
// IS the upper set.
using IdealHandle = UpperSet;

struct IdealClassification {
  std::vector<int> generating_antichain;  // F with U = up(F), i.e. min(U)
  bool is_proper = false;
  bool is_local = false;
  bool is_maximal = false;
  bool is_minimal_ideal = false;
  bool is_prime = false;
};

// Enumeration refuses hosts beyond this size (TooLarge).
inline constexpr int kEnumerationLimit = 20;

// up(union of supports); the ideal generated by the set equals E(U).
IdealHandle carrier(const ForestPoset& host, std::span<const LexElement> generators);

// up(m(f)).
IdealHandle principal_ideal(const LexElement& f);

// supp(f) within U.
bool ideal_membership(const LexElement& f, const IdealHandle& ideal);

// All upper sets of P, each once, sorted by (size, member ids). Count equals
// the number of antichains of P. The default entry point picks the parallel
// scan for larger hosts; both variants return identical lists.
std::vector<IdealHandle> enumerate_ideals(const ForestPoset& p);
std::vector<IdealHandle> enumerate_ideals_serial(const ForestPoset& p);
std::vector<IdealHandle> enumerate_ideals_parallel(const ForestPoset& p);

// generating_antichain = min(U); local iff a single generator; maximal iff
// the complement is a single (necessarily minimal) element; minimal ideal iff
// U is one maximal element of X; prime iff proper and the complement is a
// chain.
IdealClassification classify_ideal(const IdealHandle& ideal);

// Intersection of all maximal ideals: E(X minus min(X)). EmptyPoset on the
// empty host.
IdealHandle radical(const ForestPoset& p);

struct QuotientResult {
  ForestPoset poset;            // induced order on X \ U (still a forest)
  std::vector<int> old_to_new;  // -1 for removed elements
};

// The complement of an upper set is closed under parents, so the parent map
// restricts directly.
QuotientResult quotient_poset(const ForestPoset& p, const IdealHandle& u);

// Coefficient restriction along the quotient map (drops coefficients in U).
LexElement quotient_restrict(const QuotientResult& q, const LexElement& f);

struct LexFlags {
  bool artinian = false;
  bool noetherian = false;

  bool operator==(const LexFlags&) const = default;
};

// artinian iff reverse well-founded with finite width; noetherian iff
// well-founded with finite width. Derived from classify(), never stored.
LexFlags lex_classification(const SymbolicPoset& p);

// All proper upper sets whose complement is a chain. TooLarge past the
// enumeration limit.
std::vector<IdealHandle> prime_spectrum(const ForestPoset& p);

struct MinPrimeEntry {
  IdealHandle prime;
  int codimension;  // |X \ U|
};

struct MinPrimeReport {
  bool all_finite_codimension = true;  // always true at finite scale
  std::vector<MinPrimeEntry> minimal_primes;
};

MinPrimeReport min_primes_finite_codim(const ForestPoset& p);

}  // namespace lexlat
