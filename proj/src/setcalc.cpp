#include "hyperforge/setcalc.hpp"

namespace hyperforge {

ElementSet product(const HyperStructure& s, ElementSet A, ElementSet B) {
  if (A.empty() || B.empty()) {
    throw Error(ErrorKind::kEmptyOperand, "product of an empty set");
  }
  return s.op().product(A, B);
}

ElementSet product_chain(const HyperStructure& s, std::span<const ElementSet> operands) {
  require_associative(s);
  if (operands.empty()) throw Error(ErrorKind::kEmptyOperand, "empty chain");
  ElementSet acc = operands.front();
  if (acc.empty()) throw Error(ErrorKind::kEmptyOperand, "empty chain operand");
  for (size_t i = 1; i < operands.size(); ++i) acc = product(s, acc, operands[i]);
  return acc;
}

ElementSet product_chain(const HyperStructure& s, std::initializer_list<ElementSet> operands) {
  return product_chain(s, std::span<const ElementSet>(operands.begin(), operands.size()));
}

ElementSet down_closure(const HyperStructure& s, ElementSet A) {
  const PartialOrder& order = s.order();
  ElementSet out;
  for (Element a : A) out |= order.down(a);
  return out;
}

bool set_dominates(const HyperStructure& s, ElementSet A, ElementSet B) {
  const PartialOrder& order = s.order();
  for (Element a : A) {
    if (!order.up(a).intersects(B)) return false;
  }
  return true;
}

ElementSet close(const HyperStructure& s, ElementSet A, Flavor flavor) {
  return flavor == Flavor::kOrdered ? down_closure(s, A) : A;
}

void require_flavor(const HyperStructure& s, Flavor flavor) {
  if (flavor == Flavor::kOrdered && !s.has_order()) {
    throw Error(ErrorKind::kNoOrder, "ordered flavor on an unordered structure");
  }
}

void require_associative(const HyperStructure& s) {
  if (!s.associative()) {
    throw Error(ErrorKind::kNotAssociative, "structure is not a validated hypersemigroup");
  }
}

void require_compatible(const HyperStructure& s) {
  if (!s.has_order()) throw Error(ErrorKind::kNoOrder, "structure has no order");
  if (!s.compatible()) {
    throw Error(ErrorKind::kNotCompatible, "order is not validated compatible");
  }
}

}  // namespace hyperforge
