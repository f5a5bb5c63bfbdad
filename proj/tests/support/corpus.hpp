#pragma once

#include <vector>

#include "hyperforge/explore.hpp"

namespace testing_support {

// Every associative n-element table; compatible adds each compatible order.
inline std::vector<hyperforge::HyperStructure> corpus(int n, bool ordered_compatible) {
  hyperforge::EnumSpec spec;
  spec.n = n;
  spec.require.associative = true;
  spec.require.compatible = ordered_compatible;
  return hyperforge::collect(spec);
}

inline std::vector<hyperforge::ElementSet> subsets(int n) {
  std::vector<hyperforge::ElementSet> out;
  for (hyperforge::ElementSet::Bits b = 1; b <= hyperforge::ElementSet::full(n).bits(); ++b) {
    out.push_back(hyperforge::ElementSet::from_bits(b));
  }
  return out;
}

}  // namespace testing_support
