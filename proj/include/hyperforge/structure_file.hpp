#pragma once

#include <filesystem>
#include <map>
#include <string>
#include <string_view>
#include <vector>

#include "hyperforge/fuzzy.hpp"

namespace hyperforge {

// JSON document:
//   n         carrier size
//   elements  n distinct names (default "0".."n-1")
//   op        n x n array of nonempty name lists, row = left operand
//   le        optional list of [lower, upper] name pairs; reflexive pairs are
//             implied, so [] is the discrete order and an absent key means
//             unordered
//   grades    optional object of named fuzzy subsets, n "p/q" strings each
struct StructureFile {
  HyperStructure structure;
  std::vector<std::string> elements;
  std::map<std::string, FuzzySubset> grades;

  bool operator==(const StructureFile&) const = default;
};

// Throws kParse on malformed documents and unknown or duplicate names,
// kEmptyEntry on an empty op entry, kCarrierTooLarge, kInvalidGrid.
StructureFile parse_structure(std::string_view text);

// Canonical rendering; parse_structure(print_structure(f)) == f.
std::string print_structure(const StructureFile& f);

StructureFile with_default_names(const HyperStructure& s);

// Throws kParse when the file cannot be read.
StructureFile load_structure(const std::filesystem::path& path);

}  // namespace hyperforge
