#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include <boost/rational.hpp>

#include "hyperforge/setcalc.hpp"

namespace hyperforge {

using Grade = boost::rational<std::int64_t>;

// One grade in [0, 1] per carrier element.
using FuzzySubset = std::vector<Grade>;

// "p/q" or "p"; throws kParse on malformed text and kInvalidGrid outside [0, 1].
Grade parse_grade(std::string_view text);
// "p/q", or "p" when the denominator is 1.
std::string format_grade(const Grade& g);
std::string format_fuzzy(const FuzzySubset& f);

// Throws kInvalidGrid unless every grade lies in [0, 1].
void check_grades(const FuzzySubset& f);

// For each a, the pairs (y, z) with a in y o z (Plain) or with some u in
// y o z such that a <= u (Ordered), ascending.
class PairIndex {
 public:
  PairIndex(const HyperStructure& s, Flavor flavor);

  int size() const { return static_cast<int>(pairs_.size()); }
  const std::vector<std::pair<Element, Element>>& pairs(Element a) const { return pairs_[a]; }

 private:
  std::vector<std::vector<std::pair<Element, Element>>> pairs_;
};

// (f o g)(a) = max over the pairs of a of min(f(y), g(z)); 0 with no pairs.
// Throws kNoOrder, kCarrierMismatch.
FuzzySubset fuzzy_compose(const HyperStructure& s, const FuzzySubset& f, const FuzzySubset& g,
                          Flavor flavor);
FuzzySubset fuzzy_compose(const PairIndex& index, const FuzzySubset& f, const FuzzySubset& g);

// Pointwise min and pointwise <=. Throw kCarrierMismatch.
FuzzySubset fuzzy_meet(const FuzzySubset& f, const FuzzySubset& g);
bool fuzzy_leq(const FuzzySubset& f, const FuzzySubset& g);

enum class FuzzyIdealKind { kRight, kLeft, kTwoSided, kBi };

std::string_view to_string(FuzzyIdealKind kind);

// Right: u in x o y gives f(u) >= f(x). Left: f(u) >= f(y). Bi: u in
// (x o y) * {z} gives f(u) >= min(f(x), f(z)). Ordered additionally needs
// x <= y to give f(x) >= f(y). Witness (x, y, u), (x, y, z, u) for bi, or
// (x, y) for the order condition. Throws kNoOrder, kCarrierMismatch.
Verdict is_fuzzy_ideal(const HyperStructure& s, const FuzzySubset& f, FuzzyIdealKind kind,
                       Flavor flavor = Flavor::kPlain);

// Grade 1 on A, 0 elsewhere.
FuzzySubset characteristic(int n, ElementSet A);

// {0, 1/4, 1/2, 3/4, 1}.
std::vector<Grade> default_grid();

// Comma separated grades; throws kInvalidGrid (grid must contain 0 and 1)
// or kParse.
std::vector<Grade> parse_grid(std::string_view text);

// All |grid|^n grade maps over the grid, lexicographic in grid order with
// element 0 most significant. Throws kInvalidGrid, and kBudgetExceeded when
// |grid|^n exceeds the budget.
std::vector<FuzzySubset> grade_grid_samples(int n, const std::vector<Grade>& grid,
                                            std::uint64_t budget = 1'000'000);

}  // namespace hyperforge
