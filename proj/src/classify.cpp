#include "hyperforge/classify.hpp"

namespace hyperforge {

std::string_view to_string(RegularityClass cls) {
  switch (cls) {
    case RegularityClass::kRegular: return "regular";
    case RegularityClass::kIntraRegular: return "intra-regular";
    case RegularityClass::kLeftRegular: return "left-regular";
    case RegularityClass::kRightRegular: return "right-regular";
    case RegularityClass::kLeftQuasiRegular: return "left-quasi-regular";
    case RegularityClass::kRightQuasiRegular: return "right-quasi-regular";
    case RegularityClass::kSemisimple: return "semisimple";
  }
  return "unknown";
}

std::string_view chain_pattern(RegularityClass cls) {
  switch (cls) {
    case RegularityClass::kRegular: return "aHa";
    case RegularityClass::kIntraRegular: return "HaaH";
    case RegularityClass::kLeftRegular: return "Haa";
    case RegularityClass::kRightRegular: return "aaH";
    case RegularityClass::kLeftQuasiRegular: return "HaHa";
    case RegularityClass::kRightQuasiRegular: return "aHaH";
    case RegularityClass::kSemisimple: return "HaHaH";
  }
  return "";
}

namespace {

// Target t >= a inside `product`, least first; Plain needs a itself.
std::optional<Element> target_in(const HyperStructure& s, Element a, ElementSet product,
                                 Flavor flavor) {
  if (flavor == Flavor::kPlain) {
    if (product.contains(a)) return a;
    return std::nullopt;
  }
  const ElementSet above = s.order().up(a) & product;
  if (above.empty()) return std::nullopt;
  return above.first();
}

// Realizer search over single-element fillings of the H slots, with its own
// fold over table cells.
std::optional<Realizer> find_realizer(const HyperStructure& s, RegularityClass cls, Element a,
                                      Flavor flavor) {
  const std::string_view pattern = chain_pattern(cls);
  const int n = s.size();
  int slots = 0;
  for (char c : pattern) slots += c == 'H';
  std::vector<Element> fill(static_cast<size_t>(slots), 0);
  while (true) {
    ElementSet acc;
    size_t next = 0;
    bool first = true;
    for (char c : pattern) {
      const Element e = c == 'a' ? a : fill[next++];
      if (first) {
        acc = ElementSet::singleton(e);
        first = false;
        continue;
      }
      ElementSet step;
      for (Element u : acc) step |= s(u, e);
      acc = step;
    }
    if (auto t = target_in(s, a, acc, flavor)) return Realizer{a, fill, *t};
    int i = slots - 1;
    while (i >= 0 && fill[static_cast<size_t>(i)] == n - 1) fill[static_cast<size_t>(i--)] = 0;
    if (i < 0) return std::nullopt;
    ++fill[static_cast<size_t>(i)];
  }
}

}  // namespace

ElementSet class_chain(const HyperStructure& s, RegularityClass cls, ElementSet A, Flavor flavor) {
  require_flavor(s, flavor);
  std::vector<ElementSet> operands;
  for (char c : chain_pattern(cls)) operands.push_back(c == 'a' ? A : s.carrier());
  return close(s, product_chain(s, operands), flavor);
}

bool classify_by_chain(const HyperStructure& s, RegularityClass cls, Flavor flavor) {
  for (Element a = 0; a < s.size(); ++a) {
    if (!class_chain(s, cls, ElementSet::singleton(a), flavor).contains(a)) return false;
  }
  return true;
}

bool classify_subsetwise(const HyperStructure& s, RegularityClass cls, Flavor flavor) {
  const ElementSet::Bits last = s.carrier().bits();
  for (ElementSet::Bits b = 1; b <= last; ++b) {
    const ElementSet A = ElementSet::from_bits(b);
    if (!A.subset_of(class_chain(s, cls, A, flavor))) return false;
  }
  return true;
}

ClassResult classify(const HyperStructure& s, RegularityClass cls, Flavor flavor) {
  require_associative(s);
  require_flavor(s, flavor);
  ClassResult out;
  for (Element a = 0; a < s.size(); ++a) {
    auto r = find_realizer(s, cls, a, flavor);
    const bool by_chain = class_chain(s, cls, ElementSet::singleton(a), flavor).contains(a);
    if (r.has_value() != by_chain) {
      throw Error(ErrorKind::kInternal, std::string(to_string(cls)) +
                                            ": realizer search and chain disagree at element " +
                                            std::to_string(a));
    }
    if (!r) {
      if (out.holds) out.failing = a;
      out.holds = false;
      continue;
    }
    out.realizers.push_back(std::move(*r));
  }
  if (!out.holds) out.realizers.clear();
  if (s.size() <= 6 && classify_subsetwise(s, cls, flavor) != out.holds) {
    throw Error(ErrorKind::kInternal,
                std::string(to_string(cls)) + ": element and subset forms disagree");
  }
  return out;
}

std::string ClassVector::bits() const {
  std::string out;
  for (bool b : holds) out += b ? '1' : '0';
  return out;
}

std::vector<std::string> implication_violations(const std::array<bool, 7>& h) {
  using R = RegularityClass;
  auto at = [&](R c) { return h[static_cast<size_t>(c)]; };
  std::vector<std::string> out;
  if (at(R::kRegular) && !(at(R::kLeftQuasiRegular) && at(R::kRightQuasiRegular))) {
    out.emplace_back("regular => left and right quasi-regular");
  }
  if ((at(R::kLeftQuasiRegular) || at(R::kRightQuasiRegular)) && !at(R::kSemisimple)) {
    out.emplace_back("quasi-regular => semisimple");
  }
  if (at(R::kIntraRegular) && !at(R::kSemisimple)) {
    out.emplace_back("intra-regular => semisimple");
  }
  if (at(R::kLeftRegular) && !at(R::kIntraRegular)) {
    out.emplace_back("left regular => intra-regular");
  }
  if (at(R::kRightRegular) && !at(R::kIntraRegular)) {
    out.emplace_back("right regular => intra-regular");
  }
  return out;
}

ClassVector classify_all(const HyperStructure& s, Flavor flavor) {
  ClassVector out;
  for (RegularityClass cls : kAllClasses) {
    out.holds[static_cast<size_t>(cls)] = classify(s, cls, flavor).holds;
  }
  out.violations = implication_violations(out.holds);
  return out;
}

}  // namespace hyperforge
