#pragma once

#include <string_view>
#include <vector>

#include "hyperforge/element_set.hpp"

namespace hyperforge {

// Ordered evaluates every closure (A] through the structure's order; Plain
// drops closures and downward-closedness conditions.
enum class Flavor { kOrdered, kPlain };

inline std::string_view to_string(Flavor f) {
  return f == Flavor::kOrdered ? "ordered" : "plain";
}

// Predicate outcome; on failure the witness names the first offending
// elements in lexicographic search order.
struct Verdict {
  bool holds = true;
  std::vector<Element> witness;

  explicit operator bool() const { return holds; }

  static Verdict fail(std::vector<Element> w) { return {false, std::move(w)}; }
};

}  // namespace hyperforge
