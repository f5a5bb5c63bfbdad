#pragma once

#include <string_view>
#include <vector>

#include "hyperforge/setcalc.hpp"

namespace hyperforge {

enum class IdealKind { kRight, kLeft, kTwoSided, kBi, kQuasi };

std::string_view to_string(IdealKind kind);

// Containment condition of the kind, plus (A] = A under Ordered. Quasi uses
// (Q*H] & (H*Q] subset of Q, closures dropped under Plain. The witness is
// the least element violating the first failed condition.
// Throws kEmptySubset, kNoOrder.
Verdict is_ideal(const HyperStructure& s, ElementSet A, IdealKind kind, Flavor flavor);

// Generated right, left or two-sided ideal:
//   R(A) = (A | A*H], L(A) = (A | H*A], I(A) = (A | H*A | A*H | H*A*H],
// closures dropped under Plain. The result is re-checked to be an ideal of
// the kind. Throws kEmptySubset, kNotAssociative, and under Ordered kNoOrder
// or kNotCompatible; std::invalid_argument for kinds other than the three.
ElementSet generate_ideal(const HyperStructure& s, ElementSet A, IdealKind kind, Flavor flavor);

// Ordered: (A*A] == A. Plain: A*A == A. Throws kEmptySubset.
bool is_idempotent_subset(const HyperStructure& s, ElementSet A, Flavor flavor);

// (A*A] subset of A; Plain drops the closure. Throws kEmptySubset.
bool is_subidempotent_subset(const HyperStructure& s, ElementSet A, Flavor flavor);

// Every nonempty ideal of the kind, ascending by bit pattern.
std::vector<ElementSet> enumerate_ideals(const HyperStructure& s, IdealKind kind, Flavor flavor);

}  // namespace hyperforge
