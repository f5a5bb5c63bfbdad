#pragma once

#include <initializer_list>
#include <span>

#include "hyperforge/core.hpp"
#include "hyperforge/flavor.hpp"

namespace hyperforge {

// Union of a o b over a in A, b in B. Throws kEmptyOperand if A or B is empty.
ElementSet product(const HyperStructure& s, ElementSet A, ElementSet B);

// Left fold of product over the operands. Throws kNotAssociative unless the
// structure was validated associative, kEmptyOperand on an empty list or
// operand.
ElementSet product_chain(const HyperStructure& s, std::span<const ElementSet> operands);
ElementSet product_chain(const HyperStructure& s, std::initializer_list<ElementSet> operands);

// (A] = {t : t <= a for some a in A}. Throws kNoOrder.
ElementSet down_closure(const HyperStructure& s, ElementSet A);

// Every element of A lies below some element of B. Throws kNoOrder.
bool set_dominates(const HyperStructure& s, ElementSet A, ElementSet B);

// (A] under Ordered, A itself under Plain.
ElementSet close(const HyperStructure& s, ElementSet A, Flavor flavor);

// Throws kNoOrder when the flavor is Ordered and the structure is unordered.
void require_flavor(const HyperStructure& s, Flavor flavor);

// Throws kNotAssociative unless the associativity flag is set.
void require_associative(const HyperStructure& s);

// Throws kNoOrder or kNotCompatible unless an order is present and
// compatible.
void require_compatible(const HyperStructure& s);

}  // namespace hyperforge
