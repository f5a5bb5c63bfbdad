#pragma once

#include <optional>
#include <string_view>
#include <utility>
#include <vector>

#include "hyperforge/ideals.hpp"

namespace hyperforge {

// PrimeSimple:    a o b in T implies a in T or b in T.
// PrimeWithSplit: PrimeSimple, and every a o b lies inside T or misses it.
// WeaklyPrime:    two-sided ideals A, B with A*B in T have A or B in T.
// Semiprime:      a o a in T implies a in T.
enum class PrimeVariant { kPrimeSimple, kPrimeWithSplit, kWeaklyPrime, kSemiprime };

std::string_view to_string(PrimeVariant v);

struct SubsetVerdict {
  bool holds = true;
  // Offending operands: singletons for element-wise variants, the ideal pair
  // for WeaklyPrime.
  std::vector<ElementSet> witness;

  explicit operator bool() const { return holds; }
};

// The flavor selects which two-sided ideals WeaklyPrime quantifies over.
// Throws kEmptySubset; kNoOrder for WeaklyPrime under Ordered.
SubsetVerdict is_prime_subset(const HyperStructure& s, ElementSet T, PrimeVariant v,
                              Flavor flavor);

// Subset-quantified forms: A*B in T implies A or B in T over all nonempty
// A, B; A*A in T implies A in T over all nonempty A. Throws kEmptySubset.
bool is_prime_by_subsets(const HyperStructure& s, ElementSet T);
bool is_semiprime_by_subsets(const HyperStructure& s, ElementSet T);

// For ideals A, B: (A*B] & (B*A] in T implies A or B in T.
bool is_weakly_prime_symmetric(const HyperStructure& s, ElementSet T, Flavor flavor);

struct ChainCheck {
  bool chain = true;
  // First incomparable pair in enumeration order.
  std::optional<std::pair<ElementSet, ElementSet>> incomparable;
};

// Whether the two-sided ideals are totally ordered by inclusion.
ChainCheck ideals_form_chain(const HyperStructure& s, Flavor flavor);

}  // namespace hyperforge
