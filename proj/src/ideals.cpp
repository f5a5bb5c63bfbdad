#include "hyperforge/ideals.hpp"

#include <stdexcept>

namespace hyperforge {

std::string_view to_string(IdealKind kind) {
  switch (kind) {
    case IdealKind::kRight: return "right";
    case IdealKind::kLeft: return "left";
    case IdealKind::kTwoSided: return "two-sided";
    case IdealKind::kBi: return "bi";
    case IdealKind::kQuasi: return "quasi";
  }
  return "unknown";
}

namespace {

void require_nonempty(ElementSet A) {
  if (A.empty()) throw Error(ErrorKind::kEmptySubset, "subset must be nonempty");
}

// Elements of `got` outside A; the least one becomes the witness.
Verdict contained(ElementSet got, ElementSet A) {
  const ElementSet extra = got - A;
  if (extra.empty()) return {};
  return Verdict::fail({extra.first()});
}

}  // namespace

Verdict is_ideal(const HyperStructure& s, ElementSet A, IdealKind kind, Flavor flavor) {
  require_nonempty(A);
  require_flavor(s, flavor);
  const HyperOp& op = s.op();
  const ElementSet h = s.carrier();
  Verdict v;
  switch (kind) {
    case IdealKind::kRight:
      v = contained(op.product(A, h), A);
      break;
    case IdealKind::kLeft:
      v = contained(op.product(h, A), A);
      break;
    case IdealKind::kTwoSided:
      v = contained(op.product(A, h), A);
      if (v) v = contained(op.product(h, A), A);
      break;
    case IdealKind::kBi:
      v = contained(op.product(op.product(A, h), A), A);
      break;
    case IdealKind::kQuasi:
      v = contained(close(s, op.product(A, h), flavor) & close(s, op.product(h, A), flavor), A);
      break;
  }
  if (v && flavor == Flavor::kOrdered) v = contained(down_closure(s, A), A);
  return v;
}

ElementSet generate_ideal(const HyperStructure& s, ElementSet A, IdealKind kind, Flavor flavor) {
  require_nonempty(A);
  require_associative(s);
  if (flavor == Flavor::kOrdered) require_compatible(s);
  const HyperOp& op = s.op();
  const ElementSet h = s.carrier();
  ElementSet raw = A;
  switch (kind) {
    case IdealKind::kRight:
      raw |= op.product(A, h);
      break;
    case IdealKind::kLeft:
      raw |= op.product(h, A);
      break;
    case IdealKind::kTwoSided:
      raw |= op.product(A, h) | op.product(h, A) | op.product(op.product(h, A), h);
      break;
    default:
      throw std::invalid_argument("generate_ideal supports right, left and two-sided kinds");
  }
  const ElementSet out = close(s, raw, flavor);
  if (!is_ideal(s, out, kind, flavor)) {
    throw Error(ErrorKind::kInternal, "generated set " + out.to_string() + " is not an ideal");
  }
  return out;
}

bool is_idempotent_subset(const HyperStructure& s, ElementSet A, Flavor flavor) {
  require_nonempty(A);
  require_flavor(s, flavor);
  return close(s, s.op().product(A, A), flavor) == A;
}

bool is_subidempotent_subset(const HyperStructure& s, ElementSet A, Flavor flavor) {
  require_nonempty(A);
  require_flavor(s, flavor);
  return close(s, s.op().product(A, A), flavor).subset_of(A);
}

std::vector<ElementSet> enumerate_ideals(const HyperStructure& s, IdealKind kind, Flavor flavor) {
  require_flavor(s, flavor);
  std::vector<ElementSet> out;
  const ElementSet::Bits last = s.carrier().bits();
  for (ElementSet::Bits b = 1; b <= last; ++b) {
    const ElementSet A = ElementSet::from_bits(b);
    if (is_ideal(s, A, kind, flavor)) out.push_back(A);
  }
  return out;
}

}  // namespace hyperforge
