#pragma once

#include <array>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "hyperforge/setcalc.hpp"

namespace hyperforge {

// Each class is "every a lies in (chain]" (Plain: "in chain"), where the
// chain is a product over the tokens a and H:
//   Regular              a H a
//   IntraRegular         H a a H
//   LeftRegular          H a a
//   RightRegular         a a H
//   LeftQuasiRegular     H a H a
//   RightQuasiRegular    a H a H
//   Semisimple           H a H a H
enum class RegularityClass {
  kRegular,
  kIntraRegular,
  kLeftRegular,
  kRightRegular,
  kLeftQuasiRegular,
  kRightQuasiRegular,
  kSemisimple,
};

inline constexpr std::array<RegularityClass, 7> kAllClasses = {
    RegularityClass::kRegular,           RegularityClass::kIntraRegular,
    RegularityClass::kLeftRegular,       RegularityClass::kRightRegular,
    RegularityClass::kLeftQuasiRegular,  RegularityClass::kRightQuasiRegular,
    RegularityClass::kSemisimple,
};

std::string_view to_string(RegularityClass cls);

// The chain pattern, 'a' for the subject and 'H' for the carrier.
std::string_view chain_pattern(RegularityClass cls);

// Realizer for one element: the H-slots filled with single elements
// (lexicographically least tuple) and the element t of the resulting product
// with a <= t (Plain: t = a).
struct Realizer {
  Element element = 0;
  std::vector<Element> factors;
  Element target = 0;
};

struct ClassResult {
  bool holds = true;
  // Least element with no realizer.
  std::optional<Element> failing;
  // One realizer per element when holds.
  std::vector<Realizer> realizers;
};

// Element-wise classification. The realizer search and the set-product chain
// are evaluated independently and must agree; for n <= 6 the subset form
// (every nonempty A lies in chain(A)) is checked as well. Disagreement throws
// kInternal. Throws kNotAssociative, kNoOrder.
ClassResult classify(const HyperStructure& s, RegularityClass cls, Flavor flavor);

// Chain with A substituted for a, closed under the flavor.
ElementSet class_chain(const HyperStructure& s, RegularityClass cls, ElementSet A, Flavor flavor);

// Every a satisfies a in class_chain({a}).
bool classify_by_chain(const HyperStructure& s, RegularityClass cls, Flavor flavor);

// Every nonempty A satisfies A subset of class_chain(A).
bool classify_subsetwise(const HyperStructure& s, RegularityClass cls, Flavor flavor);

struct ClassVector {
  std::array<bool, 7> holds{};
  // Violated implications among the classes; nonempty means an engine bug.
  std::vector<std::string> violations;

  bool operator[](RegularityClass cls) const { return holds[static_cast<size_t>(cls)]; }
  // Seven 0/1 digits in kAllClasses order.
  std::string bits() const;
  bool operator==(const ClassVector&) const = default;
};

// All seven classes, with the implications
//   Regular => LeftQuasiRegular and RightQuasiRegular,
//   LeftQuasiRegular or RightQuasiRegular => Semisimple,
//   IntraRegular => Semisimple,
//   LeftRegular or RightRegular => IntraRegular
// checked on the result.
ClassVector classify_all(const HyperStructure& s, Flavor flavor);

// The implication violations of a raw vector.
std::vector<std::string> implication_violations(const std::array<bool, 7>& holds);

}  // namespace hyperforge
