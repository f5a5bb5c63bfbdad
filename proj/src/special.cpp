#include "hyperforge/special.hpp"

namespace hyperforge {

std::string_view to_string(PrimeVariant v) {
  switch (v) {
    case PrimeVariant::kPrimeSimple: return "prime";
    case PrimeVariant::kPrimeWithSplit: return "prime-split";
    case PrimeVariant::kWeaklyPrime: return "weakly-prime";
    case PrimeVariant::kSemiprime: return "semiprime";
  }
  return "unknown";
}

namespace {

void require_nonempty(ElementSet T) {
  if (T.empty()) throw Error(ErrorKind::kEmptySubset, "subset must be nonempty");
}

SubsetVerdict prime_elementwise(const HyperStructure& s, ElementSet T) {
  for (Element a = 0; a < s.size(); ++a) {
    for (Element b = 0; b < s.size(); ++b) {
      if (s(a, b).subset_of(T) && !T.contains(a) && !T.contains(b)) {
        return {false, {ElementSet::singleton(a), ElementSet::singleton(b)}};
      }
    }
  }
  return {};
}

SubsetVerdict split_condition(const HyperStructure& s, ElementSet T) {
  for (Element a = 0; a < s.size(); ++a) {
    for (Element b = 0; b < s.size(); ++b) {
      const ElementSet c = s(a, b);
      if (!c.subset_of(T) && c.intersects(T)) {
        return {false, {ElementSet::singleton(a), ElementSet::singleton(b)}};
      }
    }
  }
  return {};
}

SubsetVerdict semiprime_elementwise(const HyperStructure& s, ElementSet T) {
  for (Element a = 0; a < s.size(); ++a) {
    if (s(a, a).subset_of(T) && !T.contains(a)) return {false, {ElementSet::singleton(a)}};
  }
  return {};
}

SubsetVerdict weakly_prime(const HyperStructure& s, ElementSet T, Flavor flavor) {
  const auto ideals = enumerate_ideals(s, IdealKind::kTwoSided, flavor);
  for (ElementSet A : ideals) {
    for (ElementSet B : ideals) {
      if (s.op().product(A, B).subset_of(T) && !A.subset_of(T) && !B.subset_of(T)) {
        return {false, {A, B}};
      }
    }
  }
  return {};
}

}  // namespace

SubsetVerdict is_prime_subset(const HyperStructure& s, ElementSet T, PrimeVariant v,
                              Flavor flavor) {
  require_nonempty(T);
  switch (v) {
    case PrimeVariant::kPrimeSimple:
      return prime_elementwise(s, T);
    case PrimeVariant::kPrimeWithSplit: {
      SubsetVerdict out = prime_elementwise(s, T);
      if (out) out = split_condition(s, T);
      return out;
    }
    case PrimeVariant::kWeaklyPrime:
      require_flavor(s, flavor);
      return weakly_prime(s, T, flavor);
    case PrimeVariant::kSemiprime:
      return semiprime_elementwise(s, T);
  }
  return {};
}

bool is_prime_by_subsets(const HyperStructure& s, ElementSet T) {
  require_nonempty(T);
  const ElementSet::Bits last = s.carrier().bits();
  for (ElementSet::Bits a = 1; a <= last; ++a) {
    const ElementSet A = ElementSet::from_bits(a);
    if (A.subset_of(T)) continue;
    for (ElementSet::Bits b = 1; b <= last; ++b) {
      const ElementSet B = ElementSet::from_bits(b);
      if (B.subset_of(T)) continue;
      if (s.op().product(A, B).subset_of(T)) return false;
    }
  }
  return true;
}

bool is_semiprime_by_subsets(const HyperStructure& s, ElementSet T) {
  require_nonempty(T);
  const ElementSet::Bits last = s.carrier().bits();
  for (ElementSet::Bits a = 1; a <= last; ++a) {
    const ElementSet A = ElementSet::from_bits(a);
    if (!A.subset_of(T) && s.op().product(A, A).subset_of(T)) return false;
  }
  return true;
}

bool is_weakly_prime_symmetric(const HyperStructure& s, ElementSet T, Flavor flavor) {
  require_nonempty(T);
  const auto ideals = enumerate_ideals(s, IdealKind::kTwoSided, flavor);
  for (ElementSet A : ideals) {
    for (ElementSet B : ideals) {
      const ElementSet both =
          close(s, s.op().product(A, B), flavor) & close(s, s.op().product(B, A), flavor);
      if (both.subset_of(T) && !A.subset_of(T) && !B.subset_of(T)) return false;
    }
  }
  return true;
}

ChainCheck ideals_form_chain(const HyperStructure& s, Flavor flavor) {
  const auto ideals = enumerate_ideals(s, IdealKind::kTwoSided, flavor);
  for (size_t i = 0; i < ideals.size(); ++i) {
    for (size_t j = i + 1; j < ideals.size(); ++j) {
      if (!ideals[i].subset_of(ideals[j]) && !ideals[j].subset_of(ideals[i])) {
        return {false, std::make_pair(ideals[i], ideals[j])};
      }
    }
  }
  return {};
}

}  // namespace hyperforge
