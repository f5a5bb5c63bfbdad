#include "hyperforge/core.hpp"

#include <sstream>

namespace hyperforge {

std::string_view to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::kEmptyEntry: return "EmptyEntry";
    case ErrorKind::kDimensionMismatch: return "DimensionMismatch";
    case ErrorKind::kNoOrder: return "NoOrder";
    case ErrorKind::kNotCompatible: return "NotCompatible";
    case ErrorKind::kEmptyOperand: return "EmptyOperand";
    case ErrorKind::kNotAssociative: return "NotAssociative";
    case ErrorKind::kEmptySubset: return "EmptySubset";
    case ErrorKind::kCarrierMismatch: return "CarrierMismatch";
    case ErrorKind::kInvalidGrid: return "InvalidGrid";
    case ErrorKind::kNotACongruence: return "NotACongruence";
    case ErrorKind::kCarrierTooLarge: return "CarrierTooLarge";
    case ErrorKind::kBudgetExceeded: return "BudgetExceeded";
    case ErrorKind::kParse: return "Parse";
    case ErrorKind::kInternal: return "Internal";
  }
  return "Unknown";
}

std::string ElementSet::to_string() const {
  std::string out = "{";
  bool first = true;
  for (Element e : *this) {
    if (!first) out += ',';
    out += std::to_string(e);
    first = false;
  }
  out += '}';
  return out;
}

namespace {

void check_carrier(int n) {
  if (n < 1 || n > kMaxCarrier) {
    throw Error(ErrorKind::kCarrierTooLarge,
                "carrier size " + std::to_string(n) + " outside [1, 16]");
  }
}

}  // namespace

HyperOp::HyperOp(int n) : n_(n) {
  check_carrier(n);
  cells_.assign(static_cast<size_t>(n * n), ElementSet{});
}

HyperOp::HyperOp(int n, std::vector<ElementSet> cells)
    : n_(n), cells_(std::move(cells)) {
  check_carrier(n);
  if (cells_.size() != static_cast<size_t>(n * n)) {
    throw Error(ErrorKind::kDimensionMismatch, "table must have n*n cells");
  }
  const ElementSet h = ElementSet::full(n);
  for (ElementSet c : cells_) {
    if (!c.subset_of(h)) {
      throw Error(ErrorKind::kDimensionMismatch, "cell outside the carrier");
    }
  }
}

PartialOrder::PartialOrder(int n) : n_(n) { check_carrier(n); }

PartialOrder PartialOrder::discrete(int n) {
  PartialOrder p(n);
  for (Element a = 0; a < n; ++a) p.set(a, a, true);
  return p;
}

PartialOrder PartialOrder::from_matrix(
    const std::vector<std::vector<bool>>& le) {
  const int n = static_cast<int>(le.size());
  if (n < 1 || n > kMaxCarrier) {
    throw Error(ErrorKind::kDimensionMismatch, "order matrix side outside [1, 16]");
  }
  PartialOrder p(n);
  for (Element a = 0; a < n; ++a) {
    if (static_cast<int>(le[a].size()) != n) {
      throw Error(ErrorKind::kDimensionMismatch, "order matrix is not square");
    }
    for (Element b = 0; b < n; ++b) p.set(a, b, le[a][b]);
  }
  return p;
}

void PartialOrder::set(Element a, Element b, bool value) {
  if (value) {
    up_[a].insert(b);
    down_[b].insert(a);
  } else {
    up_[a].erase(b);
    down_[b].erase(a);
  }
}

bool PartialOrder::is_discrete() const {
  for (Element a = 0; a < n_; ++a) {
    if (up_[a] != ElementSet::singleton(a)) return false;
  }
  return true;
}

HyperStructure::HyperStructure(HyperOp op, std::optional<PartialOrder> order)
    : op_(std::move(op)), order_(std::move(order)) {
  if (order_ && order_->size() != op_.size()) {
    throw Error(ErrorKind::kDimensionMismatch,
                "order and table have different carriers");
  }
}

const PartialOrder& HyperStructure::order() const {
  if (!order_) throw Error(ErrorKind::kNoOrder, "structure has no order");
  return *order_;
}

AssocCheck check_associativity(const HyperOp& op) {
  const int n = op.size();
  for (ElementSet c : op.cells()) {
    if (c.empty()) throw Error(ErrorKind::kEmptyEntry, "table has an empty cell");
  }
  for (Element a = 0; a < n; ++a) {
    for (Element b = 0; b < n; ++b) {
      for (Element c = 0; c < n; ++c) {
        const ElementSet left = op.product(op(a, b), ElementSet::singleton(c));
        const ElementSet right = op.product(ElementSet::singleton(a), op(b, c));
        if (left != right) return {false, std::array<Element, 3>{a, b, c}};
      }
    }
  }
  return {};
}

std::string_view to_string(OrderViolation v) {
  switch (v) {
    case OrderViolation::kNone: return "none";
    case OrderViolation::kReflexivity: return "reflexivity";
    case OrderViolation::kAntisymmetry: return "antisymmetry";
    case OrderViolation::kTransitivity: return "transitivity";
  }
  return "unknown";
}

OrderCheck check_order_axioms(const PartialOrder& order) {
  const int n = order.size();
  for (Element a = 0; a < n; ++a) {
    if (!order.le(a, a)) return {false, OrderViolation::kReflexivity, {a}};
  }
  for (Element a = 0; a < n; ++a) {
    for (Element b = a + 1; b < n; ++b) {
      if (order.le(a, b) && order.le(b, a)) {
        return {false, OrderViolation::kAntisymmetry, {a, b}};
      }
    }
  }
  for (Element a = 0; a < n; ++a) {
    for (Element b : order.up(a)) {
      for (Element c : order.up(b)) {
        if (!order.le(a, c)) return {false, OrderViolation::kTransitivity, {a, b, c}};
      }
    }
  }
  return {};
}

namespace {

bool dominated(const PartialOrder& order, ElementSet lhs, ElementSet rhs) {
  for (Element x : lhs) {
    bool below = false;
    for (Element y : rhs) {
      if (order.le(x, y)) {
        below = true;
        break;
      }
    }
    if (!below) return false;
  }
  return true;
}

}  // namespace

CompatCheck check_compatibility(const HyperStructure& s) {
  const PartialOrder& order = s.order();
  const int n = s.size();
  for (Element a = 0; a < n; ++a) {
    for (Element b : order.up(a)) {
      if (a == b) continue;
      for (Element c = 0; c < n; ++c) {
        if (!dominated(order, s(a, c), s(b, c))) {
          return {false, CompatCheck::Witness{a, b, c, CompatCheck::Side::kRight}};
        }
        if (!dominated(order, s(c, a), s(c, b))) {
          return {false, CompatCheck::Witness{a, b, c, CompatCheck::Side::kLeft}};
        }
      }
    }
  }
  return {};
}

bool ValidationReport::passed() const {
  if (!total || !associativity || !associativity->associative) return false;
  if (order_present) {
    if (!order_axioms || !order_axioms->ok) return false;
    if (!compatibility || !compatibility->compatible) return false;
  }
  return true;
}

std::string ValidationReport::to_text() const {
  std::ostringstream out;
  out << "n: " << size << '\n';
  out << "totality: " << (total ? "pass" : "fail");
  if (empty_cell) out << " empty-cell=(" << (*empty_cell)[0] << ',' << (*empty_cell)[1] << ')';
  out << '\n';
  out << "associativity: ";
  if (!associativity) {
    out << "skipped";
  } else if (associativity->associative) {
    out << "pass";
  } else {
    const auto& w = *associativity->witness;
    out << "fail triple=(" << w[0] << ',' << w[1] << ',' << w[2] << ')';
  }
  out << '\n';
  out << "order-axioms: ";
  if (!order_present) {
    out << "absent";
  } else if (order_axioms->ok) {
    out << "pass";
  } else {
    out << "fail " << to_string(order_axioms->violation) << " witness=(";
    for (size_t i = 0; i < order_axioms->witness.size(); ++i) {
      out << (i ? "," : "") << order_axioms->witness[i];
    }
    out << ')';
  }
  out << '\n';
  out << "compatibility: ";
  if (!order_present) {
    out << "absent";
  } else if (!compatibility) {
    out << "skipped";
  } else if (compatibility->compatible) {
    out << "pass";
  } else {
    const auto& w = *compatibility->witness;
    out << "fail " << (w.side == CompatCheck::Side::kRight ? "right" : "left")
        << " lower=" << w.lower << " upper=" << w.upper << " by=" << w.multiplier;
  }
  out << '\n';
  out << "result: " << (passed() ? "pass" : "fail") << '\n';
  return out.str();
}

ValidationReport validate(HyperStructure& s) {
  ValidationReport r;
  r.size = s.size();
  const int n = s.size();
  for (Element a = 0; a < n && r.total; ++a) {
    for (Element b = 0; b < n; ++b) {
      if (s(a, b).empty()) {
        r.total = false;
        r.empty_cell = std::array<Element, 2>{a, b};
        break;
      }
    }
  }
  if (r.total) r.associativity = check_associativity(s.op());
  r.order_present = s.has_order();
  if (r.order_present) {
    r.order_axioms = check_order_axioms(*s.order_);
    if (r.order_axioms->ok) r.compatibility = check_compatibility(s);
  }
  s.flags_.associative = r.associativity && r.associativity->associative;
  s.flags_.order_compatible = r.compatibility && r.compatibility->compatible;
  return r;
}

HyperStructure validated(HyperStructure s) {
  validate(s);
  return s;
}

namespace fixtures {

namespace {

constexpr ElementSet E0 = ElementSet::singleton(0);
constexpr ElementSet E1 = ElementSet::singleton(1);
constexpr ElementSet E2 = ElementSet::singleton(2);

HyperStructure make(int n, std::vector<ElementSet> cells,
                    std::optional<PartialOrder> order = std::nullopt) {
  if (!order) order = PartialOrder::discrete(n);
  return validated(HyperStructure(HyperOp(n, std::move(cells)), std::move(order)));
}

}  // namespace

HyperStructure sl2() { return make(2, {E0, E0, E0, E1}); }

HyperStructure ch2() {
  PartialOrder chain = PartialOrder::discrete(2);
  chain.set(0, 1, true);
  return make(2, {E0, E0, E0, E1}, chain);
}

HyperStructure tot2() {
  const ElementSet h = ElementSet::full(2);
  return make(2, {h, h, h, h});
}

HyperStructure lz2() { return make(2, {E0, E0, E1, E1}); }

HyperStructure rz2() { return make(2, {E0, E1, E0, E1}); }

HyperStructure z2() { return make(2, {E0, E0, E0, E0}); }

HyperStructure trivial1() { return make(1, {E0}); }

HyperStructure skew2() { return make(2, {E1, E0, E0, E0}); }

HyperStructure vee3() {
  return make(3, {E0, E0, E0,
                  E0, E1, E0,
                  E0, E0, E2});
}

}  // namespace fixtures

}  // namespace hyperforge
