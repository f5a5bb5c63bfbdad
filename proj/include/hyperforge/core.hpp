#pragma once

#include <array>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "hyperforge/element_set.hpp"
#include "hyperforge/error.hpp"

namespace hyperforge {

// n x n table of subsets. Totality (every cell nonempty) is checked by
// validate(), not enforced here, so that broken tables can be reported on.
class HyperOp {
 public:
  explicit HyperOp(int n);
  HyperOp(int n, std::vector<ElementSet> cells);

  int size() const { return n_; }
  ElementSet operator()(Element a, Element b) const { return cells_[a * n_ + b]; }
  void set(Element a, Element b, ElementSet value) { cells_[a * n_ + b] = value; }
  std::span<const ElementSet> cells() const { return cells_; }

  // Union of a o b over a in lhs, b in rhs.
  ElementSet product(ElementSet lhs, ElementSet rhs) const {
    ElementSet out;
    for (Element a : lhs) {
      for (Element b : rhs) out |= cells_[a * n_ + b];
    }
    return out;
  }

  bool operator==(const HyperOp&) const = default;

 private:
  int n_;
  std::vector<ElementSet> cells_;
};

// A binary relation meant to be a partial order; check_order_axioms decides.
class PartialOrder {
 public:
  // Identity relation.
  static PartialOrder discrete(int n);
  // Throws kDimensionMismatch unless the matrix is square with side in [1, 16].
  static PartialOrder from_matrix(const std::vector<std::vector<bool>>& le);

  int size() const { return n_; }
  bool le(Element a, Element b) const { return up_[a].contains(b); }
  void set(Element a, Element b, bool value);

  // {b : a <= b}
  ElementSet up(Element a) const { return up_[a]; }
  // {a : a <= b}
  ElementSet down(Element b) const { return down_[b]; }
  bool is_discrete() const;

  bool operator==(const PartialOrder& other) const {
    return n_ == other.n_ && up_ == other.up_;
  }

 private:
  explicit PartialOrder(int n);
  int n_;
  std::array<ElementSet, kMaxCarrier> up_{};
  std::array<ElementSet, kMaxCarrier> down_{};
};

class HyperStructure;
struct ValidationReport;
ValidationReport validate(HyperStructure& s);

class HyperStructure {
 public:
  struct Flags {
    bool associative = false;
    bool order_compatible = false;
  };

  explicit HyperStructure(HyperOp op,
                          std::optional<PartialOrder> order = std::nullopt);

  int size() const { return op_.size(); }
  ElementSet carrier() const { return ElementSet::full(op_.size()); }
  const HyperOp& op() const { return op_; }
  ElementSet operator()(Element a, Element b) const { return op_(a, b); }

  bool has_order() const { return order_.has_value(); }
  // Throws kNoOrder when the structure is unordered.
  const PartialOrder& order() const;
  const std::optional<PartialOrder>& maybe_order() const { return order_; }

  const Flags& flags() const { return flags_; }
  bool associative() const { return flags_.associative; }
  bool compatible() const { return flags_.order_compatible; }

  // Same table and order; cached flags are ignored.
  bool operator==(const HyperStructure& other) const {
    return op_ == other.op_ && order_ == other.order_;
  }

 private:
  friend ValidationReport validate(HyperStructure& s);

  HyperOp op_;
  std::optional<PartialOrder> order_;
  Flags flags_;
};

struct AssocCheck {
  bool associative = true;
  // First failing (a, b, c) in lexicographic order.
  std::optional<std::array<Element, 3>> witness;
};

// Throws kEmptyEntry if any cell is empty.
AssocCheck check_associativity(const HyperOp& op);

enum class OrderViolation { kNone, kReflexivity, kAntisymmetry, kTransitivity };

std::string_view to_string(OrderViolation v);

struct OrderCheck {
  bool ok = true;
  OrderViolation violation = OrderViolation::kNone;
  std::vector<Element> witness;
};

OrderCheck check_order_axioms(const PartialOrder& order);

struct CompatCheck {
  enum class Side { kRight, kLeft };
  struct Witness {
    Element lower;
    Element upper;
    Element multiplier;
    Side side;
  };
  bool compatible = true;
  std::optional<Witness> witness;
};

// a <= b implies a o c dominated by b o c and c o a dominated by c o b, where
// A is dominated by B iff every element of A lies below some element of B.
// Throws kNoOrder.
CompatCheck check_compatibility(const HyperStructure& s);

struct ValidationReport {
  int size = 0;
  bool total = true;
  std::optional<std::array<Element, 2>> empty_cell;
  // Absent when the table is not total.
  std::optional<AssocCheck> associativity;
  bool order_present = false;
  std::optional<OrderCheck> order_axioms;
  // Absent unless an order is present and satisfies the axioms.
  std::optional<CompatCheck> compatibility;

  bool passed() const;
  std::string to_text() const;

  bool operator==(const ValidationReport& other) const {
    return to_text() == other.to_text();
  }
};

// Runs every structural check and caches the associativity and
// compatibility flags on s.
ValidationReport validate(HyperStructure& s);

// Validated copy.
HyperStructure validated(HyperStructure s);

namespace fixtures {

// Meet semilattice on {0, 1}, discrete order.
HyperStructure sl2();
// sl2 ordered as the chain 0 <= 1.
HyperStructure ch2();
// x o y = H.
HyperStructure tot2();
// Left zero band, x o y = {x}.
HyperStructure lz2();
// Right zero band, x o y = {y}.
HyperStructure rz2();
// Null table, x o y = {0}.
HyperStructure z2();
// The only structure on one element.
HyperStructure trivial1();
// 0 o 0 = {1}, every other product {0}; not associative.
HyperStructure skew2();
// Zero 0 with idempotents 1, 2 and 1 o 2 = 2 o 1 = {0}; its ideals
// {0,1} and {0,2} are incomparable.
HyperStructure vee3();

}  // namespace fixtures

}  // namespace hyperforge
