#include <gtest/gtest.h>

#include <set>

#include "hyperforge/explore.hpp"

namespace hyperforge {
namespace {

EnumSpec spec_for(int n, bool assoc = false, bool compatible = false) {
  EnumSpec spec;
  spec.n = n;
  spec.require.associative = assoc;
  spec.require.compatible = compatible;
  return spec;
}

TEST(Enumerate, N2Counts) {
  EXPECT_EQ(collect(spec_for(2)).size(), 81u);
  EXPECT_EQ(collect(spec_for(2, true)).size(), 30u);
  EXPECT_EQ(collect(spec_for(2, true, true)).size(), 78u);
  EXPECT_EQ(collect(spec_for(1)).size(), 1u);
  EnumSpec ordered = spec_for(2, true);
  ordered.require.ordered = true;
  EXPECT_EQ(collect(ordered).size(), 90u);
  EnumSpec canonical = spec_for(2, true);
  canonical.canonical_only = true;
  EXPECT_EQ(collect(canonical).size(), 17u);
}

TEST(Enumerate, PartialOrderCounts) {
  EXPECT_EQ(all_partial_orders(1).size(), 1u);
  EXPECT_EQ(all_partial_orders(2).size(), 3u);
  EXPECT_EQ(all_partial_orders(3).size(), 19u);
  EXPECT_EQ(all_partial_orders(4).size(), 219u);
}

TEST(Enumerate, NonTotalSweep) {
  EnumSpec bare = spec_for(1);
  bare.require.total = false;
  EXPECT_EQ(collect(bare).size(), 2u);
  bare.require.associative = true;
  EXPECT_THROW(collect(bare), std::invalid_argument);
}

TEST(Enumerate, BudgetAndCarrierGuards) {
  EnumSpec big = spec_for(3);
  big.budget = 1000;
  try {
    collect(big);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::kBudgetExceeded);
  }
  EnumSpec random = spec_for(3);
  random.mode = EnumMode::kRandom;
  random.count = 20;
  random.budget = 10;
  EXPECT_THROW(collect(random), Error);
}

TEST(Enumerate, VisitorStops) {
  int seen = 0;
  enumerate(spec_for(2), [&](const HyperStructure&) { return ++seen < 5; });
  EXPECT_EQ(seen, 5);
}

TEST(Enumerate, RandomIsSeededAndValid) {
  EnumSpec spec = spec_for(4, true, true);
  spec.mode = EnumMode::kRandom;
  spec.count = 50;
  spec.seed = 7;
  const auto a = collect(spec);
  const auto b = collect(spec);
  ASSERT_EQ(a.size(), 50u);
  EXPECT_EQ(a, b);
  for (const HyperStructure& s : a) {
    HyperStructure copy = s;
    EXPECT_TRUE(validate(copy).passed());
  }
  spec.seed = 8;
  EXPECT_NE(collect(spec), a);
}

TEST(Encoding, RoundTrip) {
  for (const HyperStructure& s : {fixtures::sl2(), fixtures::ch2(), fixtures::vee3(), fixtures::trivial1()}) {
    EXPECT_EQ(decode(encode(s)), s);
  }
  const HyperStructure plain(fixtures::sl2().op());
  EXPECT_EQ(decode(encode(plain)), plain);
  EXPECT_THROW(decode({}), Error);
  EXPECT_THROW(decode({2, 1, 1}), Error);
}

TEST(Canonical, LeftAndRightZeroDiffer) {
  // Swapping the names of LZ2 gives LZ2 again; RZ2 is its opposite, not an
  // isomorphic copy.
  EXPECT_EQ(transport(fixtures::lz2(), {1, 0}), fixtures::lz2());
  EXPECT_EQ(canonical_form(transport(fixtures::sl2(), {1, 0})), canonical_form(fixtures::sl2()));
  EXPECT_NE(canonical_form(fixtures::lz2()), canonical_form(fixtures::rz2()));
  for (const HyperStructure& s : {fixtures::sl2(), fixtures::ch2(), fixtures::vee3()}) {
    const HyperStructure rep = canonical_representative(s);
    EXPECT_EQ(encode(rep), canonical_form(s));
    EXPECT_EQ(canonical_representative(rep), rep);
  }
  EXPECT_THROW(transport(fixtures::sl2(), {0, 0}), Error);
}

TEST(OrderedNSearch, SmallCarriers) {
  EnumSpec one = spec_for(1);
  EXPECT_TRUE(search_p85(one).findings.empty());
  EnumSpec labeled = spec_for(2);
  const SearchResult l = search_p85(labeled);
  EXPECT_EQ(l.examined, 78u);
  EXPECT_EQ(l.findings.size(), 2u);
  EnumSpec canonical = spec_for(2);
  canonical.canonical_only = true;
  const SearchResult c = search_p85(canonical);
  EXPECT_EQ(c.examined, 41u);
  ASSERT_EQ(c.findings.size(), 1u);
  const SearchFinding& f = c.findings[0];
  EXPECT_EQ(f.relation_n, Partition::universal(2));
  EXPECT_EQ(f.least, Partition::identity(2));
  EXPECT_TRUE(f.plain_sanity);
  ASSERT_TRUE(c.certificate);
  EXPECT_NE(c.certificate->find("examined: 41"), std::string::npos);
  EXPECT_NE(c.certificate->find("result: findings"), std::string::npos);
  EXPECT_EQ(search_p85(canonical).findings[0].to_record(), f.to_record());
}

TEST(OrderedNSearch, RandomHasNoCertificate) {
  EnumSpec spec = spec_for(3);
  spec.mode = EnumMode::kRandom;
  spec.count = 30;
  spec.seed = 2;
  const SearchResult r = search_p85(spec);
  EXPECT_EQ(r.examined, 30u);
  EXPECT_FALSE(r.certificate);
}

TEST(Census, TotalsAndThreadInvariance) {
  const std::vector<TheoremId> targets = {TheoremId::kP60, TheoremId::kT83};
  const Census one = classify_corpus(spec_for(2, true), Flavor::kPlain, targets, 1);
  const Census four = classify_corpus(spec_for(2, true), Flavor::kPlain, targets, 4);
  EXPECT_EQ(one, four);
  EXPECT_EQ(one.total, 30u);
  EXPECT_EQ(one.vectors.at("1111111"), 28u);
  EXPECT_EQ(one.vectors.at("0000000"), 2u);
  EXPECT_EQ(one.implication_violations, 0u);
  for (const auto& [id, counts] : one.verdicts) {
    EXPECT_EQ(counts[0] + counts[1] + counts[2], 30u);
    EXPECT_EQ(counts[1], 0u) << to_string(id);
  }
  EXPECT_EQ(one.to_text(), four.to_text());
}

}  // namespace
}  // namespace hyperforge
