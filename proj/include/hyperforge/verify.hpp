#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "hyperforge/fuzzy.hpp"

namespace hyperforge {

enum class TheoremId {
  kL4, kL5, kL6, kL7, kT8, kT11, kP13, kP14, kP15, kP16,
  kT17, kP20, kT21, kP23, kP26, kP27, kT28, kT30, kP31, kC32,
  kT33, kT34, kR35, kR36_1, kR36_2, kT37, kT38, kT39, kT40, kP42,
  kT43, kT44, kT45, kT46, kT47, kT48, kP50, kT51, kT52, kT53,
  kT54, kT55, kT56, kP58, kT59, kP60, kT61, kP63, kT64, kT65,
  kT66, kT67, kT68, kP72, kP76, kP79, kP81, kP82, kT83, kT87,
};

inline constexpr int kTheoremCount = 60;

const std::array<TheoremId, kTheoremCount>& all_theorems();

// "L4", "R36.1", ...
std::string_view to_string(TheoremId id);
std::optional<TheoremId> parse_theorem_id(std::string_view text);

// Structure the statement is about.
enum class Setting {
  kOrderedSemigroup,  // associative, ordered, compatible
  kOrderedGroupoid,   // ordered, compatible
  kRelation,          // any order
  kPlainSemigroup,    // associative
  kPlainGroupoid,     // total table only
};

Setting setting_of(TheoremId id);

// Whether the statement quantifies over grade-grid fuzzy subsets.
bool uses_grid(TheoremId id);

std::uint64_t default_verify_budget();

struct VerifyConfig {
  std::vector<Grade> grid = default_grid();
  // Cap on quantifier work (subset pairs, fuzzy pairs, partitions).
  std::uint64_t budget = default_verify_budget();
};

enum class TheoremVerdict { kHolds, kFails, kNotApplicable };

std::string_view to_string(TheoremVerdict v);

struct TheoremReport {
  TheoremId id = TheoremId::kL4;
  TheoremVerdict verdict = TheoremVerdict::kNotApplicable;
  // Counterexample on fails; empty otherwise.
  std::string witness;
  std::string note;
  std::int64_t micros = 0;

  // "T8 holds ..." line; micros appended only when asked.
  std::string to_text(bool with_micros = false) const;
  // One JSON object per line.
  std::string to_record(bool with_micros = false) const;
};

// Evaluates both sides of the statement on a validated copy of s. Throws
// kBudgetExceeded when quantifier work exceeds the budget.
TheoremReport check_theorem(const HyperStructure& s, TheoremId id, const VerifyConfig& cfg = {});

// Reports in the order of ids, identical for any thread count. A budget
// overrun in any theorem is rethrown.
std::vector<TheoremReport> run_suite(const HyperStructure& s, std::span<const TheoremId> ids,
                                     const VerifyConfig& cfg = {}, int threads = 1);

bool any_fails(const std::vector<TheoremReport>& reports);

}  // namespace hyperforge
