#include <gtest/gtest.h>

#include "convert.hpp"
#include "hyperforge/classify.hpp"
#include "hyperforge/congruence.hpp"
#include "hyperforge/explore.hpp"
#include "hyperforge/ideals.hpp"
#include "oracle.hpp"

namespace hyperforge {
namespace {

using testing_support::to_engine;

constexpr std::array<std::pair<oracle::Kind, IdealKind>, 5> kKinds = {{
    {oracle::Kind::kRight, IdealKind::kRight},
    {oracle::Kind::kLeft, IdealKind::kLeft},
    {oracle::Kind::kTwoSided, IdealKind::kTwoSided},
    {oracle::Kind::kBi, IdealKind::kBi},
    {oracle::Kind::kQuasi, IdealKind::kQuasi},
}};

// Frozen counts from the naive oracle.
TEST(OracleAgreement, FrozenCounts) {
  EXPECT_EQ(oracle::all_total_tables(2).size(), 81u);
  int assoc = 0;
  for (const auto& t : oracle::all_total_tables(2)) assoc += oracle::associative(t);
  EXPECT_EQ(assoc, 30);
  EXPECT_EQ(testing_support::oracle_orders(2).size(), 3u);
  EXPECT_EQ(testing_support::oracle_orders(3).size(), 19u);
}

TEST(OracleAgreement, AssociativityN2) {
  for (const auto& t : oracle::all_total_tables(2)) {
    HyperStructure s = to_engine(t);
    EXPECT_EQ(s.associative(), oracle::associative(t));
  }
}

// Every associative n=2 table under every partial order (plus unordered):
// ideals, classes, filters, N and the least semilattice congruence.
TEST(OracleAgreement, N2Everything) {
  int compatible = 0;
  for (oracle::Structure t : oracle::all_total_tables(2)) {
    if (!oracle::associative(t)) continue;
    std::vector<oracle::Structure> variants = {t};
    for (const auto& le : testing_support::oracle_orders(2)) {
      oracle::Structure o = t;
      o.ordered = true;
      o.le = le;
      variants.push_back(o);
    }
    for (const oracle::Structure& o : variants) {
      const HyperStructure s = to_engine(o);
      const bool compat = o.ordered && oracle::compatible(o);
      if (o.ordered) EXPECT_EQ(s.compatible(), compat);
      compatible += compat;
      std::vector<bool> modes = {false};
      if (compat) modes.push_back(true);
      for (bool ordered : modes) {
        const Flavor f = ordered ? Flavor::kOrdered : Flavor::kPlain;
        for (auto [ok, ek] : kKinds) {
          std::set<oracle::Set> mine;
          for (ElementSet A : enumerate_ideals(s, ek, f)) mine.insert(oracle::from(A));
          EXPECT_EQ(mine, oracle::ideals(o, ok, ordered)) << to_string(ek);
        }
        for (RegularityClass cls : kAllClasses) {
          EXPECT_EQ(classify(s, cls, f).holds, oracle::in_class(o, std::string(chain_pattern(cls)), ordered));
        }
        std::set<oracle::Set> filters;
        for (ElementSet F : enumerate_filters(s, f)) filters.insert(oracle::from(F));
        EXPECT_EQ(filters, oracle::filters(o, ordered));
        EXPECT_EQ(oracle::from(relation_N(s, f)), oracle::relation_n(o, ordered));
      }
      EXPECT_EQ(oracle::from(least_semilattice_congruence(s)), oracle::least_semilattice_congruence(o));
    }
  }
  EXPECT_EQ(compatible, 78);
}

TEST(OracleAgreement, N3SampleIdealsAndLeast) {
  EnumSpec spec;
  spec.n = 3;
  spec.require.associative = true;
  spec.require.compatible = true;
  spec.mode = EnumMode::kRandom;
  spec.count = 150;
  spec.seed = 17;
  for (const HyperStructure& s : collect(spec)) {
    const oracle::Structure o = oracle::from(s);
    EXPECT_TRUE(oracle::associative(o));
    EXPECT_TRUE(oracle::compatible(o));
    for (bool ordered : {false, true}) {
      const Flavor f = ordered ? Flavor::kOrdered : Flavor::kPlain;
      for (auto [ok, ek] : kKinds) {
        std::set<oracle::Set> mine;
        for (ElementSet A : enumerate_ideals(s, ek, f)) mine.insert(oracle::from(A));
        EXPECT_EQ(mine, oracle::ideals(o, ok, ordered));
      }
      EXPECT_EQ(oracle::from(relation_N(s, f)), oracle::relation_n(o, ordered));
    }
    EXPECT_EQ(oracle::from(least_semilattice_congruence(s)), oracle::least_semilattice_congruence(o));
  }
}

// Ordered N differs from the least semilattice congruence on exactly two
// labeled n=2 structures, and never in the plain flavor.
TEST(OracleAgreement, OrderedNDiffersTwice) {
  int ordered_diff = 0, plain_diff = 0;
  for (oracle::Structure t : oracle::all_total_tables(2)) {
    if (!oracle::associative(t)) continue;
    plain_diff += oracle::relation_n(t, false) != oracle::least_semilattice_congruence(t);
    for (const auto& le : testing_support::oracle_orders(2)) {
      t.ordered = true;
      t.le = le;
      if (!oracle::compatible(t)) continue;
      ordered_diff += oracle::relation_n(t, true) != oracle::least_semilattice_congruence(t);
    }
  }
  EXPECT_EQ(ordered_diff, 2);
  EXPECT_EQ(plain_diff, 0);
}

}  // namespace
}  // namespace hyperforge
