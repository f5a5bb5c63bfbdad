#pragma once

#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "hyperforge/classify.hpp"
#include "hyperforge/congruence.hpp"
#include "hyperforge/verify.hpp"

namespace hyperforge {

struct Requirements {
  // Every cell nonempty. Only a bare sweep may drop it.
  bool total = true;
  bool associative = false;
  bool ordered = false;
  // Implies ordered.
  bool compatible = false;
};

enum class EnumMode { kExhaustive, kRandom };

std::uint64_t default_enum_budget();

struct EnumSpec {
  int n = 2;
  Requirements require;
  EnumMode mode = EnumMode::kExhaustive;
  std::uint64_t seed = 0;
  // Structures drawn in random mode.
  std::uint64_t count = 0;
  // Exhaustive: one structure per isomorphism class, the one whose encoding
  // is minimal. Random: every draw is replaced by its canonical relabeling.
  bool canonical_only = false;
  // Exhaustive: cap on tables x orders before pruning. Random: cap on count.
  std::uint64_t budget = default_enum_budget();
};

// Visitor returns false to stop. Structures arrive validated. Exhaustive
// order: orders outermost (when ordered), tables by row-major cell values.
// Throws kBudgetExceeded, kCarrierTooLarge; std::invalid_argument when a
// non-total sweep is combined with other requirements.
void enumerate(const EnumSpec& spec, const std::function<bool(const HyperStructure&)>& visit);

std::vector<HyperStructure> collect(const EnumSpec& spec);

// Every partial order on 0..n-1, each as a validated relation, in a fixed
// deterministic order.
std::vector<PartialOrder> all_partial_orders(int n);

// n, the n*n cell masks, then an order marker and the up-set masks.
using Encoding = std::vector<std::uint32_t>;

Encoding encode(const HyperStructure& s);
HyperStructure decode(const Encoding& e);

// perm[i] is the new name of element i.
HyperStructure transport(const HyperStructure& s, const std::vector<Element>& perm);

// Minimum encoding over all n! relabelings.
Encoding canonical_form(const HyperStructure& s);
HyperStructure canonical_representative(const HyperStructure& s);

struct SearchFinding {
  HyperStructure structure;
  // Seven class bits under the ordered flavor.
  std::string classes;
  Partition relation_n;
  Partition least;
  // Meet of the complete semilattice congruences.
  Partition least_complete;
  // Plain N and plain least congruence coincide, as they must.
  bool plain_sanity = true;

  std::string to_text() const;
  std::string to_record() const;
};

struct SearchResult {
  std::uint64_t examined = 0;
  std::vector<SearchFinding> findings;
  // Present after an exhaustive sweep.
  std::optional<std::string> certificate;
};

// Ordered hypersemigroups (associative, compatible) with ordered N differing
// from the least semilattice congruence. Each finding is re-derived from a
// fresh decode of its encoding before it is kept. Throws kBudgetExceeded,
// kInternal when a finding does not survive re-validation.
SearchResult search_p85(const EnumSpec& spec);

struct Census {
  std::uint64_t total = 0;
  Flavor flavor = Flavor::kPlain;
  // Seven-digit class vector -> structures.
  std::map<std::string, std::uint64_t> vectors;
  std::array<std::uint64_t, 7> per_class{};
  // Structures with a violated class implication.
  std::uint64_t implication_violations = 0;
  // Per theorem: holds, fails, not-applicable.
  std::map<TheoremId, std::array<std::uint64_t, 3>> verdicts;

  std::string to_text() const;
  std::vector<std::string> to_records() const;
  bool operator==(const Census&) const = default;
};

// Classifies every enumerated structure and runs the target theorems;
// counts are independent of the thread count.
Census classify_corpus(const EnumSpec& spec, Flavor flavor, const std::vector<TheoremId>& targets,
                       int threads = 1, const VerifyConfig& cfg = {});

}  // namespace hyperforge
