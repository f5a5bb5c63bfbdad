#include "hyperforge/verify.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <exception>
#include <functional>
#include <map>
#include <mutex>
#include <thread>

#include <nlohmann/json.hpp>

#include "hyperforge/budget.hpp"
#include "hyperforge/classify.hpp"
#include "hyperforge/congruence.hpp"
#include "hyperforge/ideals.hpp"
#include "hyperforge/special.hpp"

namespace hyperforge {

namespace {

using R = RegularityClass;
using K = IdealKind;
using FK = FuzzyIdealKind;

struct TheoremInfo {
  TheoremId id;
  std::string_view name;
  Setting setting;
  bool grid;
};

constexpr std::array<TheoremInfo, kTheoremCount> kInfo = {{
    {TheoremId::kL4, "L4", Setting::kOrderedGroupoid, false},
    {TheoremId::kL5, "L5", Setting::kOrderedSemigroup, false},
    {TheoremId::kL6, "L6", Setting::kPlainGroupoid, false},
    {TheoremId::kL7, "L7", Setting::kOrderedGroupoid, false},
    {TheoremId::kT8, "T8", Setting::kOrderedSemigroup, false},
    {TheoremId::kT11, "T11", Setting::kOrderedSemigroup, false},
    {TheoremId::kP13, "P13", Setting::kOrderedSemigroup, false},
    {TheoremId::kP14, "P14", Setting::kOrderedSemigroup, false},
    {TheoremId::kP15, "P15", Setting::kOrderedSemigroup, false},
    {TheoremId::kP16, "P16", Setting::kOrderedSemigroup, false},
    {TheoremId::kT17, "T17", Setting::kOrderedSemigroup, false},
    {TheoremId::kP20, "P20", Setting::kOrderedSemigroup, false},
    {TheoremId::kT21, "T21", Setting::kOrderedSemigroup, false},
    {TheoremId::kP23, "P23", Setting::kPlainGroupoid, false},
    {TheoremId::kP26, "P26", Setting::kPlainGroupoid, false},
    {TheoremId::kP27, "P27", Setting::kOrderedGroupoid, false},
    {TheoremId::kT28, "T28", Setting::kOrderedGroupoid, false},
    {TheoremId::kT30, "T30", Setting::kOrderedSemigroup, false},
    {TheoremId::kP31, "P31", Setting::kOrderedSemigroup, false},
    {TheoremId::kC32, "C32", Setting::kOrderedSemigroup, false},
    {TheoremId::kT33, "T33", Setting::kOrderedGroupoid, false},
    {TheoremId::kT34, "T34", Setting::kOrderedSemigroup, false},
    {TheoremId::kR35, "R35", Setting::kOrderedSemigroup, false},
    {TheoremId::kR36_1, "R36.1", Setting::kOrderedSemigroup, false},
    {TheoremId::kR36_2, "R36.2", Setting::kOrderedSemigroup, false},
    {TheoremId::kT37, "T37", Setting::kPlainSemigroup, false},
    {TheoremId::kT38, "T38", Setting::kPlainSemigroup, true},
    {TheoremId::kT39, "T39", Setting::kPlainSemigroup, false},
    {TheoremId::kT40, "T40", Setting::kPlainSemigroup, true},
    {TheoremId::kP42, "P42", Setting::kPlainSemigroup, false},
    {TheoremId::kT43, "T43", Setting::kPlainSemigroup, false},
    {TheoremId::kT44, "T44", Setting::kPlainSemigroup, false},
    {TheoremId::kT45, "T45", Setting::kPlainSemigroup, false},
    {TheoremId::kT46, "T46", Setting::kPlainSemigroup, true},
    {TheoremId::kT47, "T47", Setting::kPlainSemigroup, true},
    {TheoremId::kT48, "T48", Setting::kPlainSemigroup, true},
    {TheoremId::kP50, "P50", Setting::kPlainSemigroup, false},
    {TheoremId::kT51, "T51", Setting::kPlainSemigroup, false},
    {TheoremId::kT52, "T52", Setting::kPlainSemigroup, false},
    {TheoremId::kT53, "T53", Setting::kPlainSemigroup, false},
    {TheoremId::kT54, "T54", Setting::kPlainSemigroup, true},
    {TheoremId::kT55, "T55", Setting::kPlainSemigroup, true},
    {TheoremId::kT56, "T56", Setting::kPlainSemigroup, true},
    {TheoremId::kP58, "P58", Setting::kPlainSemigroup, false},
    {TheoremId::kT59, "T59", Setting::kPlainSemigroup, false},
    {TheoremId::kP60, "P60", Setting::kPlainSemigroup, false},
    {TheoremId::kT61, "T61", Setting::kPlainSemigroup, true},
    {TheoremId::kP63, "P63", Setting::kOrderedSemigroup, false},
    {TheoremId::kT64, "T64", Setting::kOrderedSemigroup, false},
    {TheoremId::kT65, "T65", Setting::kOrderedSemigroup, false},
    {TheoremId::kT66, "T66", Setting::kOrderedSemigroup, false},
    {TheoremId::kT67, "T67", Setting::kOrderedSemigroup, true},
    {TheoremId::kT68, "T68", Setting::kOrderedSemigroup, true},
    {TheoremId::kP72, "P72", Setting::kPlainGroupoid, false},
    {TheoremId::kP76, "P76", Setting::kPlainGroupoid, false},
    {TheoremId::kP79, "P79", Setting::kPlainGroupoid, false},
    {TheoremId::kP81, "P81", Setting::kPlainSemigroup, false},
    {TheoremId::kP82, "P82", Setting::kPlainGroupoid, false},
    {TheoremId::kT83, "T83", Setting::kPlainSemigroup, false},
    {TheoremId::kT87, "T87", Setting::kRelation, false},
}};

const TheoremInfo& info(TheoremId id) { return kInfo[static_cast<size_t>(id)]; }

std::string sets(std::initializer_list<std::pair<std::string_view, ElementSet>> named) {
  std::string out;
  for (const auto& [name, set] : named) {
    if (!out.empty()) out += ' ';
    out += std::string(name) + "=" + set.to_string();
  }
  return out;
}

// Evaluation context: one structure, one flavor, shared caches and the work
// budget.
class Ctx {
 public:
  Ctx(const HyperStructure& s, Flavor flavor, const VerifyConfig& cfg)
      : s(s), fl(flavor), n(s.size()), H(s.carrier()), cfg(cfg) {}

  const HyperStructure& s;
  const Flavor fl;
  const int n;
  const ElementSet H;
  const VerifyConfig& cfg;

  ElementSet mul(ElementSet A, ElementSet B) const { return s.op().product(A, B); }
  ElementSet mul(ElementSet A, ElementSet B, ElementSet C) const { return mul(mul(A, B), C); }
  ElementSet cl(ElementSet A) const { return close(s, A, fl); }

  void charge(std::uint64_t work) {
    spent_ += work;
    if (spent_ > cfg.budget) {
      throw Error(ErrorKind::kBudgetExceeded,
                  "verification work exceeds budget " + std::to_string(cfg.budget));
    }
  }

  const std::vector<ElementSet>& subsets() {
    if (subsets_.empty()) {
      charge(H.bits());
      for (ElementSet::Bits b = 1; b <= H.bits(); ++b) subsets_.push_back(ElementSet::from_bits(b));
    }
    return subsets_;
  }

  const std::vector<ElementSet>& ideals(IdealKind kind) {
    auto it = ideals_.find(kind);
    if (it == ideals_.end()) it = ideals_.emplace(kind, enumerate_ideals(s, kind, fl)).first;
    return it->second;
  }

  ElementSet gen(ElementSet A, IdealKind kind) { return generate_ideal(s, A, kind, fl); }

  bool cls(RegularityClass c) { return classify(s, c, fl).holds; }

  const std::vector<FuzzySubset>& samples() {
    if (samples_.empty()) samples_ = grade_grid_samples(n, cfg.grid, cfg.budget);
    return samples_;
  }

  const std::vector<FuzzySubset>& fuzzy(FuzzyIdealKind kind) {
    auto it = fuzzy_.find(kind);
    if (it == fuzzy_.end()) {
      std::vector<FuzzySubset> keep;
      for (const FuzzySubset& f : samples()) {
        if (is_fuzzy_ideal(s, f, kind, fl)) keep.push_back(f);
      }
      it = fuzzy_.emplace(kind, std::move(keep)).first;
    }
    return it->second;
  }

  FuzzySubset compose(const FuzzySubset& f, const FuzzySubset& g) {
    if (!index_) index_.emplace(s, fl);
    return fuzzy_compose(*index_, f, g);
  }

  // First (A, B) pair with pred false, rendered.
  std::optional<std::string> all_pairs(const std::vector<ElementSet>& as, std::string_view an,
                                       const std::vector<ElementSet>& bs, std::string_view bn,
                                       const std::function<bool(ElementSet, ElementSet)>& pred) {
    charge(static_cast<std::uint64_t>(as.size()) * bs.size());
    for (ElementSet A : as) {
      for (ElementSet B : bs) {
        if (!pred(A, B)) return sets({{an, A}, {bn, B}});
      }
    }
    return std::nullopt;
  }

  std::optional<std::string> all_sets(const std::vector<ElementSet>& as, std::string_view an,
                                      const std::function<bool(ElementSet)>& pred) {
    charge(as.size());
    for (ElementSet A : as) {
      if (!pred(A)) return sets({{an, A}});
    }
    return std::nullopt;
  }

  std::optional<std::string> all_elements(const std::function<bool(Element)>& pred) {
    for (Element a = 0; a < n; ++a) {
      if (!pred(a)) return "a=" + std::to_string(a);
    }
    return std::nullopt;
  }

  std::optional<std::string> all_fuzzy_pairs(
      const std::vector<FuzzySubset>& fs, const std::vector<FuzzySubset>& gs,
      const std::function<bool(const FuzzySubset&, const FuzzySubset&)>& pred) {
    charge(static_cast<std::uint64_t>(fs.size()) * gs.size());
    for (const FuzzySubset& f : fs) {
      for (const FuzzySubset& g : gs) {
        if (!pred(f, g)) return "f=" + format_fuzzy(f) + " g=" + format_fuzzy(g);
      }
    }
    return std::nullopt;
  }

 private:
  std::uint64_t spent_ = 0;
  std::vector<ElementSet> subsets_;
  std::map<IdealKind, std::vector<ElementSet>> ideals_;
  std::vector<FuzzySubset> samples_;
  std::map<FuzzyIdealKind, std::vector<FuzzySubset>> fuzzy_;
  std::optional<PairIndex> index_;
};

// One item of an equivalence: its truth value and, when false, the first
// counterexample to its universal quantifier.
struct Item {
  std::string label;
  bool value = true;
  std::string witness;
};

Item item(std::string label, std::optional<std::string> failure) {
  Item it{std::move(label), !failure.has_value(), failure.value_or("")};
  return it;
}

Item item(std::string label, bool value, std::string witness = "") {
  return {std::move(label), value, value ? "" : std::move(witness)};
}

struct Outcome {
  bool holds = true;
  std::string witness;
  std::string note;
};

std::string describe(const std::vector<Item>& items) {
  std::string out;
  for (const Item& it : items) {
    if (!out.empty()) out += "; ";
    out += it.label + "=" + (it.value ? "true" : "false");
    if (!it.value && !it.witness.empty()) out += " [" + it.witness + "]";
  }
  return out;
}

// All items agree.
Outcome equivalent(const std::vector<Item>& items) {
  bool same = true;
  for (const Item& it : items) same = same && it.value == items.front().value;
  Outcome out;
  out.holds = same;
  if (same) {
    out.note = std::string("all items ") + (items.front().value ? "true" : "false");
  } else {
    out.witness = describe(items);
  }
  return out;
}

// Universal claim: holds unless a counterexample was found.
Outcome universal(std::optional<std::string> failure, std::string note = "") {
  Outcome out;
  out.holds = !failure.has_value();
  out.witness = failure.value_or("");
  out.note = std::move(note);
  return out;
}

// Implication premise => claim.
Outcome implication(bool premise, std::optional<std::string> failure) {
  if (!premise) return {true, "", "premise false"};
  return universal(std::move(failure), "premise true");
}

Outcome merge(std::vector<std::pair<std::string, Outcome>> parts) {
  Outcome out;
  for (auto& [label, o] : parts) {
    if (!o.note.empty()) out.note += (out.note.empty() ? "" : "; ") + label + ": " + o.note;
    if (!o.holds && out.holds) {
      out.holds = false;
      out.witness = label + ": " + o.witness;
    }
  }
  return out;
}

// ---- definitional element forms, written out without the chain machinery

bool lqr_realizer(const HyperStructure& s, Element a, Flavor fl) {
  for (Element x = 0; x < s.size(); ++x) {
    for (Element y = 0; y < s.size(); ++y) {
      const ElementSet t = s.op().product(s(x, a), s(y, a));
      if (fl == Flavor::kPlain ? t.contains(a) : s.order().up(a).intersects(t)) return true;
    }
  }
  return false;
}

bool rqr_realizer(const HyperStructure& s, Element a) {
  for (Element x = 0; x < s.size(); ++x) {
    for (Element y = 0; y < s.size(); ++y) {
      if (s.op().product(s(a, x), s(a, y)).contains(a)) return true;
    }
  }
  return false;
}

bool semisimple_realizer(const HyperStructure& s, Element a) {
  for (Element x = 0; x < s.size(); ++x) {
    for (Element y = 0; y < s.size(); ++y) {
      const ElementSet xy = s.op().product(s(x, a), s(y, a));
      for (Element z = 0; z < s.size(); ++z) {
        if (s.op().product(xy, ElementSet::singleton(z)).contains(a)) return true;
      }
    }
  }
  return false;
}

// Element realizer, chain and subset forms of one class.
Outcome three_forms(Ctx& c, RegularityClass cls, const std::function<bool(Element)>& realizer) {
  return equivalent({
      item("(1) element", !c.all_elements(realizer).has_value()),
      item("(2) chain", classify_by_chain(c.s, cls, c.fl)),
      item("(3) subsets", classify_subsetwise(c.s, cls, c.fl)),
  });
}

// ---- ordered-context statements

Outcome lemma4(Ctx& c) {
  return universal(c.all_pairs(c.subsets(), "A", c.subsets(), "B", [&](ElementSet A, ElementSet B) {
    return c.mul(c.cl(A), c.cl(B)).subset_of(c.cl(c.mul(A, B)));
  }));
}

Outcome lemma5(Ctx& c) {
  std::vector<std::pair<std::string, Outcome>> parts;
  for (IdealKind kind : {K::kRight, K::kLeft, K::kTwoSided}) {
    const auto& ideals = c.ideals(kind);
    parts.emplace_back(std::string(to_string(kind)), universal(c.all_sets(c.subsets(), "A", [&](ElementSet A) {
      ElementSet least = c.H;
      for (ElementSet I : ideals) {
        if (A.subset_of(I)) least &= I;
      }
      return c.gen(A, kind) == least;
    })));
  }
  return merge(std::move(parts));
}

Outcome lemma6(Ctx& c) {
  return universal(c.all_pairs(c.ideals(K::kRight), "A", c.ideals(K::kLeft), "B",
                               [](ElementSet A, ElementSet B) { return A.intersects(B); }));
}

Outcome lemma7(Ctx& c) {
  return universal(c.all_pairs(c.subsets(), "A", c.subsets(), "B", [&](ElementSet A, ElementSet B) {
    const ElementSet base = c.cl(c.mul(A, B));
    return base == c.cl(c.mul(c.cl(A), c.cl(B))) && base == c.cl(c.mul(c.cl(A), B)) &&
           base == c.cl(c.mul(A, c.cl(B)));
  }));
}

Outcome theorem8(Ctx& c) {
  const auto& right = c.ideals(K::kRight);
  const auto& left = c.ideals(K::kLeft);
  return equivalent({
      item("(1) regular", c.cls(R::kRegular)),
      item("(2) A&B=(A*B]", c.all_pairs(right, "A", left, "B", [&](ElementSet A, ElementSet B) {
        return (A & B) == c.cl(c.mul(A, B));
      })),
      item("(3) A&B<=(A*B]", c.all_pairs(right, "A", left, "B", [&](ElementSet A, ElementSet B) {
        return (A & B).subset_of(c.cl(c.mul(A, B)));
      })),
  });
}

Outcome theorem11(Ctx& c) {
  return equivalent({
      item("(1) intra-regular", c.cls(R::kIntraRegular)),
      item("(2) A&B<=(B*A]", c.all_pairs(c.ideals(K::kRight), "A", c.ideals(K::kLeft), "B",
                                         [&](ElementSet A, ElementSet B) {
                                           return (A & B).subset_of(c.cl(c.mul(B, A)));
                                         })),
  });
}

Outcome bi_products(Ctx& c, const std::vector<ElementSet>& cs, const std::vector<ElementSet>& ds) {
  return universal(c.all_pairs(cs, "C", ds, "D", [&](ElementSet C, ElementSet D) {
    return is_ideal(c.s, c.cl(c.mul(C, D)), K::kBi, c.fl).holds;
  }));
}

// Every (C*D] with C a right ideal and D a left ideal.
std::vector<ElementSet> right_left_products(Ctx& c) {
  std::vector<ElementSet> out;
  for (ElementSet C : c.ideals(K::kRight)) {
    for (ElementSet D : c.ideals(K::kLeft)) out.push_back(c.cl(c.mul(C, D)));
  }
  return out;
}

bool contains(const std::vector<ElementSet>& v, ElementSet x) {
  return std::find(v.begin(), v.end(), x) != v.end();
}

Outcome prop16(Ctx& c) {
  const bool regular = c.cls(R::kRegular);
  if (!regular) return implication(false, std::nullopt);
  const auto products = right_left_products(c);
  return implication(true, c.all_sets(c.ideals(K::kBi), "B",
                                      [&](ElementSet B) { return contains(products, B); }));
}

Outcome theorem17(Ctx& c) {
  const bool regular = c.cls(R::kRegular);
  if (!regular) return implication(false, std::nullopt);
  const auto products = right_left_products(c);
  return implication(true, c.all_sets(c.subsets(), "B", [&](ElementSet B) {
    return is_ideal(c.s, B, K::kBi, c.fl).holds == contains(products, B);
  }));
}

Outcome prop20(Ctx& c) {
  const bool regular = c.cls(R::kRegular);
  std::vector<std::pair<std::string, Outcome>> parts;
  for (IdealKind kind : {K::kRight, K::kLeft}) {
    const std::string name(to_string(kind));
    parts.emplace_back(name + " subidempotent", universal(c.all_sets(c.ideals(kind), "A", [&](ElementSet A) {
      return is_subidempotent_subset(c.s, A, c.fl);
    })));
    parts.emplace_back(name + " idempotent",
                       implication(regular, c.all_sets(c.ideals(kind), "A", [&](ElementSet A) {
                         return is_idempotent_subset(c.s, A, c.fl);
                       })));
  }
  return merge(std::move(parts));
}

std::optional<std::string> one_sided_idempotent(Ctx& c) {
  for (IdealKind kind : {K::kRight, K::kLeft}) {
    if (auto w = c.all_sets(c.ideals(kind), "A",
                            [&](ElementSet A) { return is_idempotent_subset(c.s, A, c.fl); })) {
      return std::string(to_string(kind)) + " " + *w;
    }
  }
  return std::nullopt;
}

Outcome theorem21(Ctx& c) {
  auto failure = one_sided_idempotent(c);
  if (!failure) {
    failure = c.all_pairs(c.ideals(K::kRight), "A", c.ideals(K::kLeft), "B", [&](ElementSet A, ElementSet B) {
      return is_ideal(c.s, c.cl(c.mul(A, B)), K::kQuasi, c.fl).holds;
    });
  }
  return equivalent({
      item("(1) regular", c.cls(R::kRegular)),
      item("(2) idempotent and quasi products", failure),
  });
}

Outcome prop23(Ctx& c) {
  c.charge(static_cast<std::uint64_t>(c.H.bits()) * c.H.bits() * c.H.bits());
  return universal(c.all_sets(c.subsets(), "T", [&](ElementSet T) {
    return is_prime_subset(c.s, T, PrimeVariant::kPrimeSimple, c.fl).holds ==
           is_prime_by_subsets(c.s, T);
  }));
}

Outcome prop26(Ctx& c) {
  c.charge(static_cast<std::uint64_t>(c.H.bits()) * c.H.bits());
  return universal(c.all_sets(c.subsets(), "T", [&](ElementSet T) {
    return is_prime_subset(c.s, T, PrimeVariant::kSemiprime, c.fl).holds ==
           is_semiprime_by_subsets(c.s, T);
  }));
}

Outcome prop27(Ctx& c) {
  const auto& ideals = c.ideals(K::kTwoSided);
  return universal(c.all_pairs(ideals, "A", ideals, "B", [&](ElementSet A, ElementSet B) {
    return !(A & B).empty() && is_ideal(c.s, A & B, K::kTwoSided, c.fl).holds;
  }));
}

std::optional<std::string> ideals_idempotent(Ctx& c, IdealKind kind) {
  return c.all_sets(c.ideals(kind), "A",
                    [&](ElementSet A) { return is_idempotent_subset(c.s, A, c.fl); });
}

Outcome theorem28(Ctx& c) {
  const auto& ideals = c.ideals(K::kTwoSided);
  return equivalent({
      item("(1) ideals idempotent", ideals_idempotent(c, K::kTwoSided)),
      item("(2) A&B=(A*B]", c.all_pairs(ideals, "A", ideals, "B", [&](ElementSet A, ElementSet B) {
        return (A & B) == c.cl(c.mul(A, B));
      })),
  });
}

Outcome theorem30(Ctx& c) {
  return equivalent({
      item("(1) semisimple", c.cls(R::kSemisimple)),
      item("(2) ideals idempotent", ideals_idempotent(c, K::kTwoSided)),
  });
}

Outcome ideal_products(Ctx& c, IdealKind first, IdealKind second) {
  return universal(c.all_pairs(c.ideals(first), "A", c.ideals(second), "B", [&](ElementSet A, ElementSet B) {
    return is_ideal(c.s, c.cl(c.mul(A, B)), K::kTwoSided, c.fl).holds;
  }));
}

std::optional<std::string> ideals_prime(Ctx& c, PrimeVariant v) {
  return c.all_sets(c.ideals(K::kTwoSided), "T",
                    [&](ElementSet T) { return is_prime_subset(c.s, T, v, c.fl).holds; });
}

Outcome theorem33(Ctx& c) {
  auto right = ideals_idempotent(c, K::kTwoSided);
  if (!right) {
    const ChainCheck chain = ideals_form_chain(c.s, c.fl);
    if (!chain.chain) right = sets({{"A", chain.incomparable->first}, {"B", chain.incomparable->second}});
  }
  return equivalent({
      item("(1) ideals weakly prime", ideals_prime(c, PrimeVariant::kWeaklyPrime)),
      item("(2) idempotent chain", right),
  });
}

Outcome theorem34(Ctx& c) {
  const ChainCheck chain = ideals_form_chain(c.s, c.fl);
  const bool intra = c.cls(R::kIntraRegular);
  Item rhs = item("(2) chain and intra-regular", chain.chain && intra,
                  chain.chain ? "not intra-regular"
                              : sets({{"A", chain.incomparable->first}, {"B", chain.incomparable->second}}));
  Outcome out = equivalent({item("(1) ideals prime", ideals_prime(c, PrimeVariant::kPrimeSimple)), rhs});
  const bool split = !ideals_prime(c, PrimeVariant::kPrimeWithSplit).has_value();
  out.note += std::string("; with split condition: ") + (split == rhs.value ? "agrees" : "differs");
  return out;
}

Outcome remark35(Ctx& c) {
  const ClassVector v = classify_all(c.s, c.fl);
  const bool lr = v[R::kLeftRegular];
  const bool rr = v[R::kRightRegular];
  const bool ir = v[R::kIntraRegular];
  std::vector<std::pair<std::string, Outcome>> parts;
  parts.emplace_back("left regular => intra-regular", implication(lr, ir ? std::nullopt : std::optional<std::string>("")));
  parts.emplace_back("right regular => intra-regular", implication(rr, ir ? std::nullopt : std::optional<std::string>("")));
  parts.emplace_back("regular => one-sided ideals idempotent",
                     implication(v[R::kRegular], one_sided_idempotent(c)));
  parts.emplace_back("left/right/intra-regular => ideals idempotent",
                     implication(lr || rr || ir, ideals_idempotent(c, K::kTwoSided)));
  for (RegularityClass cls : {R::kRegular, R::kLeftRegular, R::kRightRegular}) {
    parts.emplace_back(std::string(to_string(cls)) + " element/subset forms",
                       equivalent({item("element", v[cls]),
                                   item("subsets", classify_subsetwise(c.s, cls, c.fl))}));
    parts.back().second.note.clear();
  }
  return merge(std::move(parts));
}

Outcome remark36_1(Ctx& c) {
  return universal(c.all_sets(c.ideals(K::kTwoSided), "T", [&](ElementSet T) {
    return is_prime_subset(c.s, T, PrimeVariant::kWeaklyPrime, c.fl).holds ==
           is_weakly_prime_symmetric(c.s, T, c.fl);
  }));
}

Outcome remark36_2(Ctx& c) {
  bool split_agrees = true;
  Outcome out = universal(c.all_sets(c.ideals(K::kTwoSided), "T", [&](ElementSet T) {
    const bool both = is_prime_subset(c.s, T, PrimeVariant::kSemiprime, c.fl).holds &&
                      is_prime_subset(c.s, T, PrimeVariant::kWeaklyPrime, c.fl).holds;
    if (is_prime_subset(c.s, T, PrimeVariant::kPrimeWithSplit, c.fl).holds != both) split_agrees = false;
    return is_prime_subset(c.s, T, PrimeVariant::kPrimeSimple, c.fl).holds == both;
  }));
  out.note = std::string("with split condition: ") + (split_agrees ? "agrees" : "differs");
  return out;
}

// ---- plain statements

Outcome theorem37(Ctx& c) {
  const auto& right = c.ideals(K::kRight);
  const auto& left = c.ideals(K::kLeft);
  auto generated = [&](ElementSet A) {
    const ElementSet r = c.gen(A, K::kRight);
    const ElementSet l = c.gen(A, K::kLeft);
    return (r & l).subset_of(c.mul(r, l));
  };
  return equivalent({
      item("(1) regular", c.cls(R::kRegular)),
      item("(2) A&B=A*B", c.all_pairs(right, "A", left, "B",
                                      [&](ElementSet A, ElementSet B) { return (A & B) == c.mul(A, B); })),
      item("(3) A&B<=A*B", c.all_pairs(right, "A", left, "B", [&](ElementSet A, ElementSet B) {
        return (A & B).subset_of(c.mul(A, B));
      })),
      item("(4) R(A)&L(A)<=R(A)*L(A)", c.all_sets(c.subsets(), "A", generated)),
      item("(5) R(a)&L(a)<=R(a)*L(a)",
           c.all_elements([&](Element a) { return generated(ElementSet::singleton(a)); })),
  });
}

Outcome theorem38(Ctx& c) {
  const auto& fr = c.fuzzy(FK::kRight);
  const auto& fl = c.fuzzy(FK::kLeft);
  return equivalent({
      item("(1) regular", c.cls(R::kRegular)),
      item("(2) f^g=fog", c.all_fuzzy_pairs(fr, fl, [&](const FuzzySubset& f, const FuzzySubset& g) {
        return fuzzy_meet(f, g) == c.compose(f, g);
      })),
      item("(3) f^g<=fog", c.all_fuzzy_pairs(fr, fl, [&](const FuzzySubset& f, const FuzzySubset& g) {
        return fuzzy_leq(fuzzy_meet(f, g), c.compose(f, g));
      })),
  });
}

Outcome theorem39(Ctx& c) {
  auto generated = [&](ElementSet A) {
    const ElementSet r = c.gen(A, K::kRight);
    const ElementSet l = c.gen(A, K::kLeft);
    return (r & l).subset_of(c.mul(l, r));
  };
  return equivalent({
      item("(1) intra-regular", c.cls(R::kIntraRegular)),
      item("(2) A&B<=B*A", c.all_pairs(c.ideals(K::kRight), "A", c.ideals(K::kLeft), "B",
                                       [&](ElementSet A, ElementSet B) { return (A & B).subset_of(c.mul(B, A)); })),
      item("(3) R(A)&L(A)<=L(A)*R(A)", c.all_sets(c.subsets(), "A", generated)),
      item("(4) R(a)&L(a)<=L(a)*R(a)",
           c.all_elements([&](Element a) { return generated(ElementSet::singleton(a)); })),
  });
}

Outcome theorem40(Ctx& c) {
  return equivalent({
      item("(1) intra-regular", c.cls(R::kIntraRegular)),
      item("(2) f^g<=gof", c.all_fuzzy_pairs(c.fuzzy(FK::kRight), c.fuzzy(FK::kLeft),
                                             [&](const FuzzySubset& f, const FuzzySubset& g) {
                                               return fuzzy_leq(fuzzy_meet(f, g), c.compose(g, f));
                                             })),
  });
}

Outcome theorem43(Ctx& c) {
  const auto& ideals = c.ideals(K::kTwoSided);
  auto meet_in_product = [&](ElementSet A, ElementSet B) { return (A & B).subset_of(c.mul(A, B)); };
  auto generated = [&](ElementSet A) {
    const ElementSet i = c.gen(A, K::kTwoSided);
    const ElementSet l = c.gen(A, K::kLeft);
    return (i & l).subset_of(c.mul(i, l));
  };
  return equivalent({
      item("(1) left quasi-regular", c.cls(R::kLeftQuasiRegular)),
      item("(2) ideal x subset", c.all_pairs(ideals, "A", c.subsets(), "B", meet_in_product)),
      item("(3) ideal x bi", c.all_pairs(ideals, "A", c.ideals(K::kBi), "B", meet_in_product)),
      item("(4) ideal x left", c.all_pairs(ideals, "A", c.ideals(K::kLeft), "B", meet_in_product)),
      item("(5) I(A)&L(A)<=I(A)*L(A)", c.all_sets(c.subsets(), "A", generated)),
      item("(6) I(a)&L(a)<=I(a)*L(a)",
           c.all_elements([&](Element a) { return generated(ElementSet::singleton(a)); })),
  });
}

Outcome same_kind_meets(Ctx& c, RegularityClass cls, IdealKind kind, std::string label) {
  const auto& ideals = c.ideals(kind);
  return equivalent({
      item("(1) " + std::string(to_string(cls)), c.cls(cls)),
      item("(2) " + label, c.all_pairs(ideals, "A", ideals, "B", [&](ElementSet A, ElementSet B) {
        return (A & B).subset_of(c.cl(c.mul(A, B)));
      })),
  });
}

Outcome idempotent_kind(Ctx& c, RegularityClass cls, IdealKind kind) {
  return equivalent({
      item("(1) " + std::string(to_string(cls)), c.cls(cls)),
      item("(2) " + std::string(to_string(kind)) + " ideals idempotent", ideals_idempotent(c, kind)),
  });
}

Outcome theorem46(Ctx& c) {
  const auto& ideals = c.fuzzy(FK::kTwoSided);
  auto below = [&](const FuzzySubset& f, const FuzzySubset& g) {
    return fuzzy_leq(fuzzy_meet(f, g), c.compose(f, g));
  };
  return equivalent({
      item("(1) left quasi-regular", c.cls(R::kLeftQuasiRegular)),
      item("(2) fuzzy ideal x subset", c.all_fuzzy_pairs(ideals, c.samples(), below)),
      item("(3) fuzzy ideal x bi", c.all_fuzzy_pairs(ideals, c.fuzzy(FK::kBi), below)),
      item("(4) fuzzy ideal x left", c.all_fuzzy_pairs(ideals, c.fuzzy(FK::kLeft), below)),
  });
}

Outcome fuzzy_same_kind(Ctx& c, RegularityClass cls, FuzzyIdealKind kind) {
  const auto& fs = c.fuzzy(kind);
  return equivalent({
      item("(1) " + std::string(to_string(cls)), c.cls(cls)),
      item("(2) f^g<=fog", c.all_fuzzy_pairs(fs, fs, [&](const FuzzySubset& f, const FuzzySubset& g) {
        return fuzzy_leq(fuzzy_meet(f, g), c.compose(f, g));
      })),
  });
}

std::optional<std::string> fuzzy_idempotent(Ctx& c, FuzzyIdealKind kind) {
  const auto& fs = c.fuzzy(kind);
  c.charge(fs.size());
  for (const FuzzySubset& f : fs) {
    if (c.compose(f, f) != f) return "f=" + format_fuzzy(f);
  }
  return std::nullopt;
}

Outcome fuzzy_idempotent_kind(Ctx& c, RegularityClass cls, FuzzyIdealKind kind) {
  return equivalent({
      item("(1) " + std::string(to_string(cls)), c.cls(cls)),
      item("(2) " + std::string(to_string(kind)) + " idempotent", fuzzy_idempotent(c, kind)),
  });
}

Outcome theorem51(Ctx& c) {
  const auto& ideals = c.ideals(K::kTwoSided);
  auto meet_in_product = [&](ElementSet A, ElementSet B) { return (A & B).subset_of(c.mul(A, B)); };
  auto generated = [&](ElementSet A) {
    const ElementSet r = c.gen(A, K::kRight);
    const ElementSet i = c.gen(A, K::kTwoSided);
    return (r & i).subset_of(c.mul(r, i));
  };
  return equivalent({
      item("(1) right quasi-regular", c.cls(R::kRightQuasiRegular)),
      item("(2) subset x ideal", c.all_pairs(c.subsets(), "A", ideals, "B", meet_in_product)),
      item("(3) bi x ideal", c.all_pairs(c.ideals(K::kBi), "A", ideals, "B", meet_in_product)),
      item("(4) right x ideal", c.all_pairs(c.ideals(K::kRight), "A", ideals, "B", meet_in_product)),
      item("(5) R(A)&I(A)<=R(A)*I(A)", c.all_sets(c.subsets(), "A", generated)),
      item("(6) R(a)&I(a)<=R(a)*I(a)",
           c.all_elements([&](Element a) { return generated(ElementSet::singleton(a)); })),
  });
}

Outcome theorem54(Ctx& c) {
  const auto& ideals = c.fuzzy(FK::kTwoSided);
  auto below = [&](const FuzzySubset& f, const FuzzySubset& g) {
    return fuzzy_leq(fuzzy_meet(f, g), c.compose(f, g));
  };
  return equivalent({
      item("(1) right quasi-regular", c.cls(R::kRightQuasiRegular)),
      item("(2) subset x fuzzy ideal", c.all_fuzzy_pairs(c.samples(), ideals, below)),
      item("(3) bi x fuzzy ideal", c.all_fuzzy_pairs(c.fuzzy(FK::kBi), ideals, below)),
      item("(4) right x fuzzy ideal", c.all_fuzzy_pairs(c.fuzzy(FK::kRight), ideals, below)),
  });
}

Outcome theorem59(Ctx& c) {
  const auto& ideals = c.ideals(K::kTwoSided);
  auto generated = [&](ElementSet A) {
    const ElementSet i = c.gen(A, K::kTwoSided);
    return i == c.mul(i, i);
  };
  return equivalent({
      item("(1) semisimple", c.cls(R::kSemisimple)),
      item("(2) ideals idempotent", ideals_idempotent(c, K::kTwoSided)),
      item("(3) A&B=A*B", c.all_pairs(ideals, "A", ideals, "B",
                                      [&](ElementSet A, ElementSet B) { return (A & B) == c.mul(A, B); })),
      item("(4) I(A)=I(A)*I(A)", c.all_sets(c.subsets(), "A", generated)),
      item("(5) I(a)=I(a)*I(a)",
           c.all_elements([&](Element a) { return generated(ElementSet::singleton(a)); })),
  });
}

Outcome prop60(Ctx& c) {
  const ClassVector v = classify_all(c.s, c.fl);
  if (v.violations.empty()) return {};
  std::string w;
  for (const auto& s : v.violations) w += (w.empty() ? "" : ", ") + s;
  return {false, w, "classes " + v.bits()};
}

Outcome theorem61(Ctx& c) {
  const auto& ideals = c.fuzzy(FK::kTwoSided);
  return equivalent({
      item("(1) semisimple", c.cls(R::kSemisimple)),
      item("(2) f^g=fog", c.all_fuzzy_pairs(ideals, ideals, [&](const FuzzySubset& f, const FuzzySubset& g) {
        return fuzzy_meet(f, g) == c.compose(f, g);
      })),
      item("(3) f=fof", fuzzy_idempotent(c, FK::kTwoSided)),
  });
}

Outcome theorem64(Ctx& c) {
  const auto& ideals = c.ideals(K::kTwoSided);
  auto meet_in_product = [&](ElementSet A, ElementSet B) { return (A & B).subset_of(c.cl(c.mul(A, B))); };
  auto generated = [&](ElementSet A) {
    const ElementSet i = c.gen(A, K::kTwoSided);
    const ElementSet l = c.gen(A, K::kLeft);
    return (i & l).subset_of(c.cl(c.mul(i, l)));
  };
  Outcome out = equivalent({
      item("(1) left quasi-regular", c.cls(R::kLeftQuasiRegular)),
      item("(2) ideal x subset", c.all_pairs(ideals, "A", c.subsets(), "B", meet_in_product)),
      item("(3) ideal x bi", c.all_pairs(ideals, "A", c.ideals(K::kBi), "B", meet_in_product)),
      item("(4) ideal x left", c.all_pairs(ideals, "A", c.ideals(K::kLeft), "B", meet_in_product)),
      item("(5) I(A)&L(A)<=(I(A)*L(A)]", c.all_sets(c.subsets(), "A", generated)),
      item("(6) I(a)&L(a)<=(I(a)*L(a)]",
           c.all_elements([&](Element a) { return generated(ElementSet::singleton(a)); })),
  });
  out.note += "; items 5 and 6 use the product form";
  return out;
}

Outcome theorem68(Ctx& c) {
  const auto& ideals = c.fuzzy(FK::kTwoSided);
  auto below = [&](const FuzzySubset& f, const FuzzySubset& g) {
    return fuzzy_leq(fuzzy_meet(f, g), c.compose(f, g));
  };
  return equivalent({
      item("(1) left quasi-regular", c.cls(R::kLeftQuasiRegular)),
      item("(2) fuzzy ideal x subset", c.all_fuzzy_pairs(ideals, c.samples(), below)),
      item("(3) fuzzy ideal x bi", c.all_fuzzy_pairs(ideals, c.fuzzy(FK::kBi), below)),
      item("(4) fuzzy ideal x left", c.all_fuzzy_pairs(ideals, c.fuzzy(FK::kLeft), below)),
      item("(5) fuzzy left idempotent", fuzzy_idempotent(c, FK::kLeft)),
  });
}

// ---- congruences

std::uint64_t bell_charge(Ctx& c) {
  const std::uint64_t bell = bell_number(c.n);
  if (bell > c.cfg.budget) {
    throw Error(ErrorKind::kBudgetExceeded, "Bell(" + std::to_string(c.n) + ") exceeds budget");
  }
  c.charge(bell);
  return bell;
}

bool split_prime_ideal(Ctx& c, ElementSet T) {
  return !T.empty() && is_ideal(c.s, T, K::kTwoSided, Flavor::kPlain).holds &&
         is_prime_subset(c.s, T, PrimeVariant::kPrimeWithSplit, Flavor::kPlain).holds;
}

std::optional<std::string> semilattice_failure(const HyperStructure& s, const Partition& p) {
  if (Verdict v = is_congruence(s, p); !v) return "not a congruence: " + p.to_string();
  if (Verdict v = is_semilattice_congruence(s, p); !v) return "not semilattice: " + p.to_string();
  return std::nullopt;
}

Outcome prop72(Ctx& c) {
  const Partition N = relation_N(c.s, Flavor::kPlain);
  return universal(semilattice_failure(c.s, N), "N=" + N.to_string());
}

Outcome prop76(Ctx& c) {
  return universal(c.all_sets(c.ideals(K::kTwoSided), "I", [&](ElementSet I) {
    if (!split_prime_ideal(c, I)) return true;
    return !semilattice_failure(c.s, sigma_I(c.n, I)).has_value();
  }));
}

Outcome prop79(Ctx& c) {
  return universal(c.all_sets(c.subsets(), "F", [&](ElementSet F) {
    const ElementSet rest = c.H - F;
    return is_filter(c.s, F, Flavor::kPlain).holds == (rest.empty() || split_prime_ideal(c, rest));
  }));
}

Outcome prop81(Ctx& c) {
  bell_charge(c);
  const auto congruences = semilattice_congruences(c.s, c.cfg.budget);
  for (const Partition& sigma : congruences) {
    Partition acc = Partition::universal(c.n);
    for (Element z = 0; z < c.n; ++z) {
      const ElementSet seed = congruence_filter_seed(c.s, sigma, z);
      if (seed.empty() || !is_filter(c.s, seed, Flavor::kPlain)) {
        return {false, "sigma=" + sigma.to_string() + " seed of " + std::to_string(z) + "=" +
                           seed.to_string() + " is not a filter", ""};
      }
      const ElementSet rest = c.H - seed;
      if (rest.empty()) continue;
      if (!split_prime_ideal(c, rest)) {
        return {false, "sigma=" + sigma.to_string() + " complement " + rest.to_string() +
                           " is not a prime ideal", ""};
      }
      acc = meet(acc, sigma_I(c.n, rest));
    }
    if (acc != sigma) {
      return {false, "sigma=" + sigma.to_string() + " meet=" + acc.to_string(), ""};
    }
  }
  return {true, "", std::to_string(congruences.size()) + " semilattice congruences"};
}

Outcome prop82(Ctx& c) {
  const Partition N = relation_N(c.s, Flavor::kPlain);
  Partition acc = Partition::universal(c.n);
  for (ElementSet I : c.ideals(K::kTwoSided)) {
    if (split_prime_ideal(c, I)) acc = meet(acc, sigma_I(c.n, I));
  }
  if (acc == N) return {true, "", "N=" + N.to_string()};
  return {false, "N=" + N.to_string() + " meet=" + acc.to_string(), ""};
}

Outcome theorem83(Ctx& c) {
  bell_charge(c);
  const Partition N = relation_N(c.s, Flavor::kPlain);
  const Partition least = least_semilattice_congruence(c.s, c.cfg.budget);
  const std::string both = "N=" + N.to_string() + " least=" + least.to_string();
  if (N == least) return {true, "", both};
  return {false, both, ""};
}

Outcome theorem87(Ctx& c) {
  const Partition N = relation_N(c.s, Flavor::kOrdered);
  auto failure = semilattice_failure(c.s, N);
  if (!failure) {
    if (Verdict v = is_complete(c.s, N); !v) failure = "not complete: " + N.to_string();
  }
  return universal(failure, "N=" + N.to_string());
}

Outcome dispatch(Ctx& c, TheoremId id) {
  using T = TheoremId;
  switch (id) {
    case T::kL4: return lemma4(c);
    case T::kL5: return lemma5(c);
    case T::kL6: return lemma6(c);
    case T::kL7: return lemma7(c);
    case T::kT8: return theorem8(c);
    case T::kT11: return theorem11(c);
    case T::kP13: return bi_products(c, c.ideals(K::kRight), c.subsets());
    case T::kP14: return bi_products(c, c.ideals(K::kLeft), c.subsets());
    case T::kP15: return bi_products(c, c.ideals(K::kRight), c.ideals(K::kLeft));
    case T::kP16: return prop16(c);
    case T::kT17: return theorem17(c);
    case T::kP20: return prop20(c);
    case T::kT21: return theorem21(c);
    case T::kP23: return prop23(c);
    case T::kP26: return prop26(c);
    case T::kP27: return prop27(c);
    case T::kT28: return theorem28(c);
    case T::kT30: return theorem30(c);
    case T::kP31: return ideal_products(c, K::kLeft, K::kRight);
    case T::kC32: return ideal_products(c, K::kTwoSided, K::kTwoSided);
    case T::kT33: return theorem33(c);
    case T::kT34: return theorem34(c);
    case T::kR35: return remark35(c);
    case T::kR36_1: return remark36_1(c);
    case T::kR36_2: return remark36_2(c);
    case T::kT37: return theorem37(c);
    case T::kT38: return theorem38(c);
    case T::kT39: return theorem39(c);
    case T::kT40: return theorem40(c);
    case T::kP42:
      return three_forms(c, R::kLeftQuasiRegular, [&](Element a) { return lqr_realizer(c.s, a, c.fl); });
    case T::kT43: return theorem43(c);
    case T::kT44: return same_kind_meets(c, R::kLeftQuasiRegular, K::kLeft, "left A&B<=A*B");
    case T::kT45: return idempotent_kind(c, R::kLeftQuasiRegular, K::kLeft);
    case T::kT46: return theorem46(c);
    case T::kT47: return fuzzy_same_kind(c, R::kLeftQuasiRegular, FK::kLeft);
    case T::kT48: return fuzzy_idempotent_kind(c, R::kLeftQuasiRegular, FK::kLeft);
    case T::kP50:
      return three_forms(c, R::kRightQuasiRegular, [&](Element a) { return rqr_realizer(c.s, a); });
    case T::kT51: return theorem51(c);
    case T::kT52: return same_kind_meets(c, R::kRightQuasiRegular, K::kRight, "right A&B<=A*B");
    case T::kT53: return idempotent_kind(c, R::kRightQuasiRegular, K::kRight);
    case T::kT54: return theorem54(c);
    case T::kT55: return fuzzy_same_kind(c, R::kRightQuasiRegular, FK::kRight);
    case T::kT56: return fuzzy_idempotent_kind(c, R::kRightQuasiRegular, FK::kRight);
    case T::kP58:
      return three_forms(c, R::kSemisimple, [&](Element a) { return semisimple_realizer(c.s, a); });
    case T::kT59: return theorem59(c);
    case T::kP60: return prop60(c);
    case T::kT61: return theorem61(c);
    case T::kP63:
      return three_forms(c, R::kLeftQuasiRegular, [&](Element a) { return lqr_realizer(c.s, a, c.fl); });
    case T::kT64: return theorem64(c);
    case T::kT65: return same_kind_meets(c, R::kLeftQuasiRegular, K::kLeft, "left A&B<=(A*B]");
    case T::kT66: return idempotent_kind(c, R::kLeftQuasiRegular, K::kLeft);
    case T::kT67: return fuzzy_same_kind(c, R::kLeftQuasiRegular, FK::kLeft);
    case T::kT68: return theorem68(c);
    case T::kP72: return prop72(c);
    case T::kP76: return prop76(c);
    case T::kP79: return prop79(c);
    case T::kP81: return prop81(c);
    case T::kP82: return prop82(c);
    case T::kT83: return theorem83(c);
    case T::kT87: return theorem87(c);
  }
  throw Error(ErrorKind::kInternal, "unknown theorem id");
}

// Empty when applicable, else the reason.
std::string inapplicable(const ValidationReport& r, Setting setting) {
  if (!r.total) return "table is not total";
  const bool assoc = r.associativity && r.associativity->associative;
  const bool ordered = r.order_present && r.order_axioms && r.order_axioms->ok;
  const bool compatible = ordered && r.compatibility && r.compatibility->compatible;
  switch (setting) {
    case Setting::kOrderedSemigroup:
      if (!assoc) return "not associative";
      [[fallthrough]];
    case Setting::kOrderedGroupoid:
      if (!r.order_present) return "no order";
      if (!ordered) return "order axioms fail";
      if (!compatible) return "order not compatible";
      return "";
    case Setting::kRelation:
      return r.order_present ? "" : "no order";
    case Setting::kPlainSemigroup:
      return assoc ? "" : "not associative";
    case Setting::kPlainGroupoid:
      return "";
  }
  return "unknown setting";
}

Flavor flavor_of(Setting setting) {
  switch (setting) {
    case Setting::kOrderedSemigroup:
    case Setting::kOrderedGroupoid:
    case Setting::kRelation:
      return Flavor::kOrdered;
    default:
      return Flavor::kPlain;
  }
}

TheoremReport check_validated(const HyperStructure& s, const ValidationReport& r, TheoremId id,
                              const VerifyConfig& cfg) {
  const auto start = std::chrono::steady_clock::now();
  TheoremReport report;
  report.id = id;
  const Setting setting = setting_of(id);
  if (std::string why = inapplicable(r, setting); !why.empty()) {
    report.verdict = TheoremVerdict::kNotApplicable;
    report.note = why;
  } else {
    Ctx ctx(s, flavor_of(setting), cfg);
    Outcome o = dispatch(ctx, id);
    report.verdict = o.holds ? TheoremVerdict::kHolds : TheoremVerdict::kFails;
    report.witness = std::move(o.witness);
    report.note = std::move(o.note);
    if (uses_grid(id)) {
      report.note += std::string(report.note.empty() ? "" : "; ") + "fuzzy quantifiers over a " +
                     std::to_string(cfg.grid.size()) + "-value grade grid";
    }
  }
  report.micros = std::chrono::duration_cast<std::chrono::microseconds>(
                      std::chrono::steady_clock::now() - start)
                      .count();
  return report;
}

}  // namespace

const std::array<TheoremId, kTheoremCount>& all_theorems() {
  static const std::array<TheoremId, kTheoremCount> ids = [] {
    std::array<TheoremId, kTheoremCount> out{};
    for (size_t i = 0; i < kInfo.size(); ++i) out[i] = kInfo[i].id;
    return out;
  }();
  return ids;
}

std::string_view to_string(TheoremId id) { return info(id).name; }

std::optional<TheoremId> parse_theorem_id(std::string_view text) {
  for (const TheoremInfo& t : kInfo) {
    if (t.name == text) return t.id;
  }
  return std::nullopt;
}

Setting setting_of(TheoremId id) { return info(id).setting; }

bool uses_grid(TheoremId id) { return info(id).grid; }

std::uint64_t default_verify_budget() { return budget_or_env(20'000'000); }

std::string_view to_string(TheoremVerdict v) {
  switch (v) {
    case TheoremVerdict::kHolds: return "holds";
    case TheoremVerdict::kFails: return "fails";
    case TheoremVerdict::kNotApplicable: return "not-applicable";
  }
  return "unknown";
}

std::string TheoremReport::to_text(bool with_micros) const {
  std::string out = std::string(to_string(id)) + " " + std::string(to_string(verdict));
  if (!witness.empty()) out += " witness: " + witness;
  if (!note.empty()) out += " (" + note + ")";
  if (with_micros) out += " " + std::to_string(micros) + "us";
  return out;
}

std::string TheoremReport::to_record(bool with_micros) const {
  nlohmann::ordered_json j;
  j["record"] = "theorem";
  j["id"] = std::string(to_string(id));
  j["verdict"] = std::string(to_string(verdict));
  j["witness"] = witness;
  j["note"] = note;
  if (with_micros) j["micros"] = micros;
  return j.dump();
}

TheoremReport check_theorem(const HyperStructure& s, TheoremId id, const VerifyConfig& cfg) {
  HyperStructure copy = s;
  const ValidationReport r = validate(copy);
  return check_validated(copy, r, id, cfg);
}

std::vector<TheoremReport> run_suite(const HyperStructure& s, std::span<const TheoremId> ids,
                                     const VerifyConfig& cfg, int threads) {
  HyperStructure copy = s;
  const ValidationReport r = validate(copy);
  std::vector<TheoremReport> out(ids.size());
  std::atomic<size_t> next{0};
  std::exception_ptr error;
  std::mutex error_mutex;
  auto worker = [&] {
    for (size_t i = next++; i < ids.size(); i = next++) {
      try {
        out[i] = check_validated(copy, r, ids[i], cfg);
      } catch (...) {
        std::lock_guard lock(error_mutex);
        if (!error) error = std::current_exception();
      }
    }
  };
  const int count = std::max(1, std::min<int>(threads, static_cast<int>(ids.size())));
  if (count == 1) {
    worker();
  } else {
    std::vector<std::thread> pool;
    for (int t = 0; t < count; ++t) pool.emplace_back(worker);
    for (auto& t : pool) t.join();
  }
  if (error) std::rethrow_exception(error);
  return out;
}

bool any_fails(const std::vector<TheoremReport>& reports) {
  for (const auto& r : reports) {
    if (r.verdict == TheoremVerdict::kFails) return true;
  }
  return false;
}

}  // namespace hyperforge
