#include <gtest/gtest.h>

#include "corpus.hpp"
#include "hyperforge/special.hpp"

namespace hyperforge {
namespace {

using testing_support::corpus;
using testing_support::subsets;

constexpr ElementSet E0 = ElementSet::singleton(0);
constexpr ElementSet E1 = ElementSet::singleton(1);
constexpr std::array<PrimeVariant, 4> kVariants = {PrimeVariant::kPrimeSimple, PrimeVariant::kPrimeWithSplit,
                                                   PrimeVariant::kWeaklyPrime, PrimeVariant::kSemiprime};

TEST(Prime, Sl2ZeroIsPrime) {
  EXPECT_TRUE(is_prime_subset(fixtures::sl2(), E0, PrimeVariant::kPrimeSimple, Flavor::kPlain).holds);
}

// 1 o 1 = {0} lies in {0} while 1 does not.
TEST(Prime, Z2ZeroIsNotSemiprime) {
  const SubsetVerdict v = is_prime_subset(fixtures::z2(), E0, PrimeVariant::kSemiprime, Flavor::kPlain);
  EXPECT_FALSE(v.holds);
  EXPECT_EQ(v.witness, std::vector<ElementSet>{E1});
  EXPECT_FALSE(is_semiprime_by_subsets(fixtures::z2(), E0));
}

TEST(Prime, CarrierIsEveryVariant) {
  for (const HyperStructure& s : {fixtures::sl2(), fixtures::z2(), fixtures::vee3(), fixtures::ch2()}) {
    for (PrimeVariant v : kVariants) {
      EXPECT_TRUE(is_prime_subset(s, s.carrier(), v, Flavor::kPlain).holds);
    }
  }
}

TEST(Prime, EmptySubsetThrows) {
  try {
    is_prime_subset(fixtures::sl2(), ElementSet{}, PrimeVariant::kPrimeSimple, Flavor::kPlain);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::kEmptySubset);
  }
}

TEST(Chain, Examples) {
  EXPECT_TRUE(ideals_form_chain(fixtures::z2(), Flavor::kPlain).chain);
  EXPECT_TRUE(ideals_form_chain(fixtures::trivial1(), Flavor::kPlain).chain);
  const ChainCheck vee = ideals_form_chain(fixtures::vee3(), Flavor::kPlain);
  EXPECT_FALSE(vee.chain);
  ASSERT_TRUE(vee.incomparable);
  EXPECT_EQ(vee.incomparable->first, ElementSet::from_bits(0b011));
  EXPECT_EQ(vee.incomparable->second, ElementSet::from_bits(0b101));
}

// Element-wise and subset-quantified forms agree for every subset of every
// n <= 3 sample structure.
TEST(Prime, ElementAndSubsetFormsAgree) {
  std::vector<HyperStructure> cases = corpus(2, false);
  EnumSpec spec;
  spec.n = 3;
  spec.mode = EnumMode::kRandom;
  spec.count = 200;
  spec.seed = 3;
  for (const HyperStructure& s : collect(spec)) cases.push_back(s);
  cases.push_back(fixtures::vee3());
  for (const HyperStructure& s : cases) {
    for (ElementSet T : subsets(s.size())) {
      EXPECT_EQ(is_prime_subset(s, T, PrimeVariant::kPrimeSimple, Flavor::kPlain).holds, is_prime_by_subsets(s, T));
      EXPECT_EQ(is_prime_subset(s, T, PrimeVariant::kSemiprime, Flavor::kPlain).holds,
                is_semiprime_by_subsets(s, T));
    }
  }
}

TEST(WeaklyPrime, SymmetricFormAgreesOnIdeals) {
  for (bool ordered : {false, true}) {
    const Flavor f = ordered ? Flavor::kOrdered : Flavor::kPlain;
    for (const HyperStructure& s : corpus(2, ordered)) {
      for (ElementSet T : enumerate_ideals(s, IdealKind::kTwoSided, f)) {
        EXPECT_EQ(is_prime_subset(s, T, PrimeVariant::kWeaklyPrime, f).holds, is_weakly_prime_symmetric(s, T, f));
      }
    }
  }
}

}  // namespace
}  // namespace hyperforge
