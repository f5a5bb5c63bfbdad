#include <gtest/gtest.h>

#include <random>

#include "corpus.hpp"
#include "hyperforge/fuzzy.hpp"
#include "hyperforge/ideals.hpp"

namespace hyperforge {
namespace {

using testing_support::corpus;
using testing_support::subsets;

constexpr std::array<std::pair<FuzzyIdealKind, IdealKind>, 4> kBridge = {{
    {FuzzyIdealKind::kRight, IdealKind::kRight},
    {FuzzyIdealKind::kLeft, IdealKind::kLeft},
    {FuzzyIdealKind::kTwoSided, IdealKind::kTwoSided},
    {FuzzyIdealKind::kBi, IdealKind::kBi},
}};

TEST(Grade, ParseAndFormat) {
  EXPECT_EQ(parse_grade("1/2"), Grade(1, 2));
  EXPECT_EQ(parse_grade("2/4"), Grade(1, 2));
  EXPECT_EQ(parse_grade("0"), Grade(0));
  EXPECT_EQ(format_grade(Grade(3, 4)), "3/4");
  EXPECT_EQ(format_grade(Grade(1)), "1");
  EXPECT_EQ(format_fuzzy({Grade(1), Grade(0), Grade(1, 3)}), "(1,0,1/3)");
}

TEST(Grade, ParseErrors) {
  for (const char* bad : {"", "x", "1/", "/2", "1/0", "0.5", "1 /2"}) {
    try {
      parse_grade(bad);
      ADD_FAILURE() << bad;
    } catch (const Error& e) {
      EXPECT_EQ(e.kind(), ErrorKind::kParse) << bad;
    }
  }
  for (const char* out : {"2", "-1/2", "3/2"}) {
    try {
      parse_grade(out);
      ADD_FAILURE() << out;
    } catch (const Error& e) {
      EXPECT_EQ(e.kind(), ErrorKind::kInvalidGrid) << out;
    }
  }
}

TEST(Grid, SampleCounts) {
  EXPECT_EQ(grade_grid_samples(2, parse_grid("0,1")).size(), 4u);
  EXPECT_EQ(grade_grid_samples(2, parse_grid("0,1/2,1")).size(), 9u);
  EXPECT_EQ(grade_grid_samples(3, default_grid()).size(), 125u);
  const auto first = grade_grid_samples(2, parse_grid("0,1"));
  EXPECT_EQ(first[1], (FuzzySubset{Grade(0), Grade(1)}));
  EXPECT_THROW(parse_grid("1/2,1"), Error);
  try {
    grade_grid_samples(2, {Grade(1, 2), Grade(1)});
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::kInvalidGrid);
  }
  try {
    grade_grid_samples(16, default_grid(), 1000);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::kBudgetExceeded);
  }
}

TEST(FuzzyIdeal, Z2CharacteristicOfOneIsNotRight) {
  const Verdict v = is_fuzzy_ideal(fixtures::z2(), characteristic(2, ElementSet::singleton(1)),
                                   FuzzyIdealKind::kRight);
  EXPECT_FALSE(v.holds);
  EXPECT_EQ(v.witness, (std::vector<Element>{1, 0, 0}));
  EXPECT_TRUE(is_fuzzy_ideal(fixtures::z2(), characteristic(2, ElementSet::singleton(0)),
                             FuzzyIdealKind::kTwoSided)
                  .holds);
}

TEST(FuzzyIdeal, OrderConditionWitness) {
  // SL2 under 1 <= 0: grades (1, 0) satisfy every product condition but grow
  // downward.
  PartialOrder reversed = PartialOrder::discrete(2);
  reversed.set(1, 0, true);
  const HyperStructure rev = validated(HyperStructure(fixtures::sl2().op(), reversed));
  const FuzzySubset f = {Grade(1), Grade(0)};
  EXPECT_TRUE(is_fuzzy_ideal(rev, f, FuzzyIdealKind::kTwoSided, Flavor::kPlain).holds);
  const Verdict v = is_fuzzy_ideal(rev, f, FuzzyIdealKind::kRight, Flavor::kOrdered);
  EXPECT_FALSE(v.holds);
  EXPECT_EQ(v.witness, (std::vector<Element>{1, 0}));
}

TEST(FuzzyIdeal, Preconditions) {
  try {
    is_fuzzy_ideal(fixtures::z2(), {Grade(1)}, FuzzyIdealKind::kLeft);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::kCarrierMismatch);
  }
  EXPECT_THROW(fuzzy_meet({Grade(1)}, {Grade(1), Grade(0)}), Error);
  EXPECT_THROW(check_grades({Grade(2)}), Error);
  EXPECT_THROW(PairIndex(HyperStructure(fixtures::sl2().op()), Flavor::kOrdered), Error);
}

// A nonempty subset is an ideal of a kind exactly when its characteristic
// function is a fuzzy ideal of that kind.
TEST(FuzzyIdeal, CharacteristicBridge) {
  for (bool ordered : {false, true}) {
    const Flavor f = ordered ? Flavor::kOrdered : Flavor::kPlain;
    for (const HyperStructure& s : corpus(2, ordered)) {
      for (ElementSet A : subsets(2)) {
        for (auto [fk, k] : kBridge) {
          EXPECT_EQ(is_fuzzy_ideal(s, characteristic(2, A), fk, f).holds, is_ideal(s, A, k, f).holds);
        }
      }
    }
  }
}

TEST(FuzzyCompose, CharacteristicProducts) {
  for (bool ordered : {false, true}) {
    const Flavor f = ordered ? Flavor::kOrdered : Flavor::kPlain;
    for (const HyperStructure& s : corpus(2, ordered)) {
      for (ElementSet A : subsets(2)) {
        for (ElementSet B : subsets(2)) {
          EXPECT_EQ(fuzzy_compose(s, characteristic(2, A), characteristic(2, B), f),
                    characteristic(2, close(s, product(s, A, B), f)));
        }
      }
    }
  }
}

// Over the n=2 corpus with a three-value grid: the product of a right and a
// left fuzzy ideal lies under their meet, composition is monotone, and the
// cached index matches recomputation.
TEST(FuzzyCompose, OrderProperties) {
  const auto samples = grade_grid_samples(2, parse_grid("0,1/2,1"));
  for (bool ordered : {false, true}) {
    const Flavor fl = ordered ? Flavor::kOrdered : Flavor::kPlain;
    for (const HyperStructure& s : corpus(2, ordered)) {
      const PairIndex index(s, fl);
      for (const FuzzySubset& f : samples) {
        for (const FuzzySubset& g : samples) {
          const FuzzySubset fg = fuzzy_compose(index, f, g);
          EXPECT_EQ(fg, fuzzy_compose(s, f, g, fl));
          if (is_fuzzy_ideal(s, f, FuzzyIdealKind::kRight, fl) && is_fuzzy_ideal(s, g, FuzzyIdealKind::kLeft, fl)) {
            EXPECT_TRUE(fuzzy_leq(fg, fuzzy_meet(f, g)));
          }
          for (const FuzzySubset& h : samples) {
            if (fuzzy_leq(g, h)) EXPECT_TRUE(fuzzy_leq(fg, fuzzy_compose(index, f, h)));
          }
        }
      }
    }
  }
}

TEST(FuzzyCompose, RandomN4MatchesBruteForce) {
  EnumSpec spec;
  spec.n = 4;
  spec.require.associative = true;
  spec.require.compatible = true;
  spec.mode = EnumMode::kRandom;
  spec.count = 20;
  spec.seed = 11;
  std::mt19937_64 rng(9);
  const std::vector<Grade> grid = default_grid();
  std::uniform_int_distribution<size_t> pick(0, grid.size() - 1);
  for (const HyperStructure& s : collect(spec)) {
    FuzzySubset f(4), g(4);
    for (int i = 0; i < 4; ++i) {
      f[i] = grid[pick(rng)];
      g[i] = grid[pick(rng)];
    }
    const FuzzySubset fg = fuzzy_compose(s, f, g, Flavor::kOrdered);
    for (Element a = 0; a < 4; ++a) {
      Grade best(0);
      for (Element y = 0; y < 4; ++y) {
        for (Element z = 0; z < 4; ++z) {
          if (down_closure(s, s(y, z)).contains(a)) best = std::max(best, std::min(f[y], g[z]));
        }
      }
      EXPECT_EQ(fg[a], best);
    }
  }
}

}  // namespace
}  // namespace hyperforge
