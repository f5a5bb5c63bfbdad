#include <gtest/gtest.h>

#include "corpus.hpp"
#include "hyperforge/verify.hpp"

namespace hyperforge {
namespace {

TheoremReport check(const HyperStructure& s, TheoremId id) { return check_theorem(s, id); }

TEST(TheoremIds, RoundTrip) {
  EXPECT_EQ(all_theorems().size(), 60u);
  for (TheoremId id : all_theorems()) EXPECT_EQ(parse_theorem_id(to_string(id)), id);
  EXPECT_EQ(to_string(TheoremId::kR36_1), "R36.1");
  EXPECT_FALSE(parse_theorem_id("T99"));
  EXPECT_FALSE(parse_theorem_id("t8"));
  EXPECT_TRUE(uses_grid(TheoremId::kT38));
  EXPECT_FALSE(uses_grid(TheoremId::kT37));
}

TEST(Verify, Examples) {
  EXPECT_EQ(check(fixtures::ch2(), TheoremId::kT8).verdict, TheoremVerdict::kHolds);
  EXPECT_EQ(check(fixtures::sl2(), TheoremId::kL6).verdict, TheoremVerdict::kHolds);
  const TheoremReport t37 = check(fixtures::z2(), TheoremId::kT37);
  EXPECT_EQ(t37.verdict, TheoremVerdict::kHolds);
  EXPECT_NE(t37.note.find("all items false"), std::string::npos);
  const TheoremReport t83 = check(fixtures::z2(), TheoremId::kT83);
  EXPECT_EQ(t83.verdict, TheoremVerdict::kHolds);
  EXPECT_NE(t83.note.find("N={0,1} least={0,1}"), std::string::npos);
}

TEST(Verify, FixturesHaveNoFails) {
  for (const HyperStructure& s : {fixtures::sl2(), fixtures::ch2(), fixtures::tot2(), fixtures::lz2(),
                                  fixtures::rz2(), fixtures::z2(), fixtures::trivial1(), fixtures::vee3(),
                                  fixtures::skew2()}) {
    const auto reports = run_suite(s, all_theorems());
    EXPECT_FALSE(any_fails(reports));
    for (const TheoremReport& r : reports) {
      if (r.verdict != TheoremVerdict::kFails) EXPECT_TRUE(r.witness.empty());
    }
  }
}

TEST(Verify, SkewOnlyRunsGroupoidStatements) {
  for (TheoremId id : all_theorems()) {
    const Setting setting = setting_of(id);
    const bool needs_assoc = setting == Setting::kOrderedSemigroup || setting == Setting::kPlainSemigroup;
    const TheoremReport r = check(fixtures::skew2(), id);
    EXPECT_EQ(r.verdict == TheoremVerdict::kNotApplicable, needs_assoc) << r.to_text();
  }
}

TEST(Verify, OrderedStatementsSkipUnorderedInput) {
  const HyperStructure plain(fixtures::sl2().op());
  for (TheoremId id : all_theorems()) {
    const Setting setting = setting_of(id);
    const bool needs_order = setting == Setting::kOrderedSemigroup || setting == Setting::kOrderedGroupoid ||
                             setting == Setting::kRelation;
    EXPECT_EQ(check(plain, id).verdict == TheoremVerdict::kNotApplicable, needs_order) << to_string(id);
  }
}

TEST(Verify, DeterministicAcrossThreads) {
  const auto one = run_suite(fixtures::vee3(), all_theorems(), {}, 1);
  const auto four = run_suite(fixtures::vee3(), all_theorems(), {}, 4);
  ASSERT_EQ(one.size(), four.size());
  for (size_t i = 0; i < one.size(); ++i) {
    EXPECT_EQ(one[i].to_record(), four[i].to_record());
    EXPECT_EQ(one[i].to_text(), four[i].to_text());
  }
}

TEST(Verify, BudgetExceededPropagates) {
  VerifyConfig cfg;
  cfg.budget = 10;
  try {
    run_suite(fixtures::vee3(), all_theorems(), cfg, 3);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::kBudgetExceeded);
  }
}

TEST(Verify, RecordShape) {
  const TheoremReport r = check(fixtures::sl2(), TheoremId::kT8);
  const std::string rec = r.to_record();
  EXPECT_EQ(rec.rfind("{\"record\":", 0), 0u);
  EXPECT_NE(rec.find("\"id\":\"T8\""), std::string::npos);
  EXPECT_EQ(rec.find("micros"), std::string::npos);
  EXPECT_NE(r.to_record(true).find("micros"), std::string::npos);
  EXPECT_EQ(r.to_text().rfind("T8 holds", 0), 0u);
}

// Exhaustive n=2 sweep in both flavors: no statement fails.
TEST(Verify, NoFailsOverN2Corpus) {
  for (bool ordered : {false, true}) {
    for (const HyperStructure& s : testing_support::corpus(2, ordered)) {
      for (const TheoremReport& r : run_suite(s, all_theorems())) {
        EXPECT_NE(r.verdict, TheoremVerdict::kFails) << r.to_text();
      }
    }
  }
}

}  // namespace
}  // namespace hyperforge
