#include "hyperforge/fuzzy.hpp"

#include <algorithm>
#include <charconv>

namespace hyperforge {

namespace {

std::int64_t parse_int(std::string_view text, std::string_view whole) {
  std::int64_t v = 0;
  const auto* end = text.data() + text.size();
  auto [ptr, ec] = std::from_chars(text.data(), end, v);
  if (text.empty() || ec != std::errc() || ptr != end) {
    throw Error(ErrorKind::kParse, "malformed grade '" + std::string(whole) + "'");
  }
  return v;
}

void check_carrier(const FuzzySubset& f, const FuzzySubset& g) {
  if (f.size() != g.size()) {
    throw Error(ErrorKind::kCarrierMismatch, "fuzzy subsets over different carriers");
  }
}

bool in_unit(const Grade& g) { return g >= 0 && g <= 1; }

void check_grid(const std::vector<Grade>& grid) {
  for (const Grade& g : grid) {
    if (!in_unit(g)) throw Error(ErrorKind::kInvalidGrid, "grid value outside [0, 1]");
  }
  if (std::find(grid.begin(), grid.end(), Grade(0)) == grid.end() ||
      std::find(grid.begin(), grid.end(), Grade(1)) == grid.end()) {
    throw Error(ErrorKind::kInvalidGrid, "grid must contain 0 and 1");
  }
}

}  // namespace

Grade parse_grade(std::string_view text) {
  const auto slash = text.find('/');
  Grade g;
  if (slash == std::string_view::npos) {
    g = Grade(parse_int(text, text));
  } else {
    const std::int64_t den = parse_int(text.substr(slash + 1), text);
    if (den == 0) throw Error(ErrorKind::kParse, "zero denominator in '" + std::string(text) + "'");
    g = Grade(parse_int(text.substr(0, slash), text), den);
  }
  if (!in_unit(g)) {
    throw Error(ErrorKind::kInvalidGrid, "grade '" + std::string(text) + "' outside [0, 1]");
  }
  return g;
}

std::string format_grade(const Grade& g) {
  if (g.denominator() == 1) return std::to_string(g.numerator());
  return std::to_string(g.numerator()) + "/" + std::to_string(g.denominator());
}

std::string format_fuzzy(const FuzzySubset& f) {
  std::string out = "(";
  for (size_t i = 0; i < f.size(); ++i) {
    if (i) out += ',';
    out += format_grade(f[i]);
  }
  return out + ")";
}

void check_grades(const FuzzySubset& f) {
  for (const Grade& g : f) {
    if (!in_unit(g)) throw Error(ErrorKind::kInvalidGrid, "grade outside [0, 1]");
  }
}

PairIndex::PairIndex(const HyperStructure& s, Flavor flavor) {
  require_flavor(s, flavor);
  const int n = s.size();
  pairs_.resize(static_cast<size_t>(n));
  for (Element y = 0; y < n; ++y) {
    for (Element z = 0; z < n; ++z) {
      const ElementSet reach = flavor == Flavor::kOrdered ? down_closure(s, s(y, z)) : s(y, z);
      for (Element a : reach) pairs_[a].emplace_back(y, z);
    }
  }
}

FuzzySubset fuzzy_compose(const PairIndex& index, const FuzzySubset& f, const FuzzySubset& g) {
  check_carrier(f, g);
  if (static_cast<int>(f.size()) != index.size()) {
    throw Error(ErrorKind::kCarrierMismatch, "fuzzy subset and structure differ in size");
  }
  FuzzySubset out(f.size(), Grade(0));
  for (Element a = 0; a < index.size(); ++a) {
    for (auto [y, z] : index.pairs(a)) out[a] = std::max(out[a], std::min(f[y], g[z]));
  }
  return out;
}

FuzzySubset fuzzy_compose(const HyperStructure& s, const FuzzySubset& f, const FuzzySubset& g,
                          Flavor flavor) {
  return fuzzy_compose(PairIndex(s, flavor), f, g);
}

FuzzySubset fuzzy_meet(const FuzzySubset& f, const FuzzySubset& g) {
  check_carrier(f, g);
  FuzzySubset out(f.size());
  for (size_t i = 0; i < f.size(); ++i) out[i] = std::min(f[i], g[i]);
  return out;
}

bool fuzzy_leq(const FuzzySubset& f, const FuzzySubset& g) {
  check_carrier(f, g);
  for (size_t i = 0; i < f.size(); ++i) {
    if (f[i] > g[i]) return false;
  }
  return true;
}

std::string_view to_string(FuzzyIdealKind kind) {
  switch (kind) {
    case FuzzyIdealKind::kRight: return "fuzzy-right";
    case FuzzyIdealKind::kLeft: return "fuzzy-left";
    case FuzzyIdealKind::kTwoSided: return "fuzzy-two-sided";
    case FuzzyIdealKind::kBi: return "fuzzy-bi";
  }
  return "unknown";
}

Verdict is_fuzzy_ideal(const HyperStructure& s, const FuzzySubset& f, FuzzyIdealKind kind,
                       Flavor flavor) {
  require_flavor(s, flavor);
  const int n = s.size();
  if (static_cast<int>(f.size()) != n) {
    throw Error(ErrorKind::kCarrierMismatch, "fuzzy subset and structure differ in size");
  }
  const bool right = kind == FuzzyIdealKind::kRight || kind == FuzzyIdealKind::kTwoSided;
  const bool left = kind == FuzzyIdealKind::kLeft || kind == FuzzyIdealKind::kTwoSided;
  for (Element x = 0; x < n; ++x) {
    for (Element y = 0; y < n; ++y) {
      if (kind == FuzzyIdealKind::kBi) {
        for (Element z = 0; z < n; ++z) {
          const ElementSet prod = s.op().product(s(x, y), ElementSet::singleton(z));
          const Grade bound = std::min(f[x], f[z]);
          for (Element u : prod) {
            if (f[u] < bound) return Verdict::fail({x, y, z, u});
          }
        }
        continue;
      }
      for (Element u : s(x, y)) {
        if ((right && f[u] < f[x]) || (left && f[u] < f[y])) return Verdict::fail({x, y, u});
      }
    }
  }
  if (flavor == Flavor::kOrdered) {
    const PartialOrder& order = s.order();
    for (Element x = 0; x < n; ++x) {
      for (Element y : order.up(x)) {
        if (f[x] < f[y]) return Verdict::fail({x, y});
      }
    }
  }
  return {};
}

FuzzySubset characteristic(int n, ElementSet A) {
  FuzzySubset out(static_cast<size_t>(n), Grade(0));
  for (Element a : A) {
    if (a < n) out[a] = Grade(1);
  }
  return out;
}

std::vector<Grade> default_grid() {
  return {Grade(0), Grade(1, 4), Grade(1, 2), Grade(3, 4), Grade(1)};
}

std::vector<Grade> parse_grid(std::string_view text) {
  std::vector<Grade> grid;
  size_t start = 0;
  while (start <= text.size()) {
    const size_t comma = text.find(',', start);
    const size_t end = comma == std::string_view::npos ? text.size() : comma;
    grid.push_back(parse_grade(text.substr(start, end - start)));
    if (comma == std::string_view::npos) break;
    start = comma + 1;
  }
  check_grid(grid);
  return grid;
}

std::vector<FuzzySubset> grade_grid_samples(int n, const std::vector<Grade>& grid,
                                            std::uint64_t budget) {
  check_grid(grid);
  std::uint64_t total = 1;
  for (int i = 0; i < n; ++i) {
    total *= grid.size();
    if (total > budget) {
      throw Error(ErrorKind::kBudgetExceeded,
                  "grade grid has more than " + std::to_string(budget) + " samples");
    }
  }
  std::vector<FuzzySubset> out;
  out.reserve(total);
  std::vector<size_t> digit(static_cast<size_t>(n), 0);
  for (std::uint64_t k = 0; k < total; ++k) {
    FuzzySubset f(static_cast<size_t>(n));
    for (int i = 0; i < n; ++i) f[i] = grid[digit[i]];
    out.push_back(std::move(f));
    for (int i = n - 1; i >= 0; --i) {
      if (++digit[i] < grid.size()) break;
      digit[i] = 0;
    }
  }
  return out;
}

}  // namespace hyperforge
