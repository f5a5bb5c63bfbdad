#pragma once

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "hyperforge/setcalc.hpp"

namespace hyperforge {

// Equivalence relation on 0..n-1 as class indices numbered in order of first
// occurrence, so equal relations have equal encodings.
class Partition {
 public:
  // Renumbers arbitrary labels into first-occurrence order.
  static Partition from_labels(const std::vector<int>& labels);
  static Partition from_blocks(int n, const std::vector<ElementSet>& blocks);
  static Partition identity(int n);
  static Partition universal(int n);

  int size() const { return static_cast<int>(class_of_.size()); }
  int class_of(Element a) const { return class_of_[a]; }
  const std::vector<int>& labels() const { return class_of_; }
  bool related(Element a, Element b) const { return class_of_[a] == class_of_[b]; }
  int block_count() const;
  // Blocks in class-index order.
  std::vector<ElementSet> blocks() const;
  // Every block of *this lies inside a block of other.
  bool refines(const Partition& other) const;

  // "{0,1}|{2}"
  std::string to_string() const;

  bool operator==(const Partition&) const = default;
  auto operator<=>(const Partition&) const = default;

 private:
  std::vector<int> class_of_;
};

// Common refinement. Throws kCarrierMismatch.
Partition meet(const Partition& p, const Partition& q);

// Bell number, saturating at UINT64_MAX.
std::uint64_t bell_number(int n);

// Visits every partition of n elements in restricted-growth order; the
// visitor returns false to stop.
void for_each_partition(int n, const std::function<bool(const Partition&)>& visit);

enum class CongruenceSide { kRight, kLeft, kBoth };

// Right: (a, b) related, u in a o c, v in b o c give (u, v) related; left
// symmetric. Witness (a, b, c, u, v).
Verdict is_congruence(const HyperStructure& s, const Partition& p,
                      CongruenceSide side = CongruenceSide::kBoth);

// u in a o a related to a; u in a o b related to v in b o a. Witness (a, u)
// or (a, b, u, v). Throws kNotACongruence.
Verdict is_semilattice_congruence(const HyperStructure& s, const Partition& p);

// a <= b and u in a o b give (a, u) related. Witness (a, b, u). Throws
// kNotACongruence, kNoOrder.
Verdict is_complete(const HyperStructure& s, const Partition& p);

// Conditions: x, y in F give x o y in F; x o y in F gives x, y in F; every
// x o y lies inside F or misses it; Ordered adds upward closure. Witness
// (x, y) or, for upward closure, (a, b) with a in F, a <= b, b outside F.
// Throws kEmptySubset, kNoOrder.
Verdict is_filter(const HyperStructure& s, ElementSet F, Flavor flavor);

// Ascending by bit pattern.
std::vector<ElementSet> enumerate_filters(const HyperStructure& s, Flavor flavor);

// Intersection of all filters containing x; the result is re-checked to be
// a filter.
ElementSet generated_filter(const HyperStructure& s, Element x, Flavor flavor);

// Elements related iff their generated filters coincide.
Partition relation_N(const HyperStructure& s, Flavor flavor);

// {I, H \ I}, or universal when I is empty or the carrier.
Partition sigma_I(int n, ElementSet I);

// Meet of all semilattice congruences from a sweep over every partition;
// the result is re-checked. Throws kCarrierTooLarge when the Bell number of
// the carrier exceeds the budget.
Partition least_semilattice_congruence(const HyperStructure& s, std::uint64_t budget = 1'000'000);

// Every semilattice congruence, restricted-growth order. Same budget rule.
std::vector<Partition> semilattice_congruences(const HyperStructure& s,
                                               std::uint64_t budget = 1'000'000);

// Set-lifted relation: x related to every element of A; every a in A
// related to every b in B.
bool related_to_set(const Partition& p, Element x, ElementSet A);
bool sets_related(const Partition& p, ElementSet A, ElementSet B);

// {y : x related to every element of x o y}.
ElementSet congruence_filter_seed(const HyperStructure& s, const Partition& sigma, Element x);

}  // namespace hyperforge
