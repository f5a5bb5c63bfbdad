#include "hyperforge/explore.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <random>
#include <sstream>
#include <stdexcept>
#include <thread>

#include <nlohmann/json.hpp>

#include "hyperforge/budget.hpp"

namespace hyperforge {

std::uint64_t default_enum_budget() { return budget_or_env(1'000'000'000); }

namespace {

using Bits = ElementSet::Bits;

Requirements normalized(Requirements r) {
  if (r.compatible) r.ordered = true;
  if (!r.total && (r.associative || r.ordered)) {
    throw std::invalid_argument("a sweep with empty cells admits no further requirements");
  }
  return r;
}

void check_n(int n) {
  if (n < 1 || n > kMaxCarrier) {
    throw Error(ErrorKind::kCarrierTooLarge, "carrier size " + std::to_string(n) + " outside [1, 16]");
  }
}

// Partial table filled in row-major order; cells at index < filled are fixed.
class TableSearch {
 public:
  TableSearch(int n, const PartialOrder* order, bool associative)
      : n_(n), cells_(static_cast<size_t>(n * n), 0), order_(order), associative_(associative) {}

  int cell_count() const { return n_ * n_; }
  void assign(int k, Bits value) {
    cells_[k] = value;
    filled_ = k + 1;
  }

  // Every triple and comparable pair whose cells are all fixed passes.
  bool consistent() const {
    if (associative_ && !associative_so_far()) return false;
    if (order_ != nullptr && !compatible_so_far()) return false;
    return true;
  }

  HyperOp op() const {
    std::vector<ElementSet> cells;
    cells.reserve(cells_.size());
    for (Bits b : cells_) cells.push_back(ElementSet::from_bits(b));
    return HyperOp(n_, std::move(cells));
  }

 private:
  bool fixed(Element a, Element b) const { return a * n_ + b < filled_; }
  Bits at(Element a, Element b) const { return cells_[a * n_ + b]; }

  // Fixed part of a product with one operand open in places, and whether
  // every needed cell is fixed.
  struct Partial {
    Bits known = 0;
    bool complete = true;
  };
  Partial right_mult(Bits lhs, Element z) const {
    Partial p;
    for (Element u : ElementSet::from_bits(lhs)) {
      if (fixed(u, z)) {
        p.known |= at(u, z);
      } else {
        p.complete = false;
      }
    }
    return p;
  }
  Partial left_mult(Element x, Bits rhs) const {
    Partial p;
    for (Element v : ElementSet::from_bits(rhs)) {
      if (fixed(x, v)) {
        p.known |= at(x, v);
      } else {
        p.complete = false;
      }
    }
    return p;
  }

  // Only triples reading the most recently fixed cell can have changed. A
  // completed side must contain the fixed part of the other.
  bool associative_so_far() const {
    const Element a = (filled_ - 1) / n_;
    const Element b = (filled_ - 1) % n_;
    for (Element x = 0; x < n_; ++x) {
      for (Element y = 0; y < n_; ++y) {
        if (!fixed(x, y)) continue;
        for (Element z = 0; z < n_; ++z) {
          if (!fixed(y, z)) continue;
          const bool reads_last = (x == a && y == b) || (y == a && z == b) ||
                                  (z == b && ElementSet::from_bits(at(x, y)).contains(a)) ||
                                  (x == a && ElementSet::from_bits(at(y, z)).contains(b));
          if (!reads_last) continue;
          const Partial lhs = right_mult(at(x, y), z);
          const Partial rhs = left_mult(x, at(y, z));
          if (lhs.complete && (rhs.known & ~lhs.known) != 0) return false;
          if (rhs.complete && (lhs.known & ~rhs.known) != 0) return false;
        }
      }
    }
    return true;
  }

  bool dominated(Bits lower, Bits upper) const {
    for (Element x : ElementSet::from_bits(lower)) {
      if (!order_->up(x).intersects(ElementSet::from_bits(upper))) return false;
    }
    return true;
  }

  bool compatible_so_far() const {
    for (Element a = 0; a < n_; ++a) {
      for (Element b : order_->up(a)) {
        if (a == b) continue;
        for (Element c = 0; c < n_; ++c) {
          if (fixed(a, c) && fixed(b, c) && !dominated(at(a, c), at(b, c))) return false;
          if (fixed(c, a) && fixed(c, b) && !dominated(at(c, a), at(c, b))) return false;
        }
      }
    }
    return true;
  }

  int n_;
  std::vector<Bits> cells_;
  int filled_ = 0;
  const PartialOrder* order_;
  bool associative_;
};

std::optional<PartialOrder> order_or_none(const PartialOrder* order) {
  if (order == nullptr) return std::nullopt;
  return *order;
}

// Exhaustive DFS; false once the visitor asked to stop.
bool exhaust(int n, const PartialOrder* order, const Requirements& req, bool canonical_only,
             const std::function<bool(const HyperStructure&)>& visit) {
  TableSearch search(n, req.compatible ? order : nullptr, req.associative);
  const Bits lo = req.total ? 1 : 0;
  const Bits hi = ElementSet::full(n).bits();
  bool keep_going = true;
  std::function<void(int)> fill = [&](int k) {
    if (!keep_going) return;
    if (k == search.cell_count()) {
      HyperStructure s = validated(HyperStructure(search.op(), order_or_none(order)));
      if (canonical_only && encode(s) != canonical_form(s)) return;
      keep_going = visit(s);
      return;
    }
    for (Bits v = lo; v <= hi && keep_going; ++v) {
      search.assign(k, v);
      if (search.consistent()) fill(k + 1);
    }
  };
  fill(0);
  return keep_going;
}

// Randomized DFS with shuffled candidates; nullopt when the node cap hits.
std::optional<HyperOp> random_table(int n, const PartialOrder* order, const Requirements& req,
                                    std::mt19937_64& rng) {
  constexpr int kNodeCap = 1 << 14;
  TableSearch search(n, req.compatible ? order : nullptr, req.associative);
  std::vector<Bits> values;
  for (Bits v = req.total ? 1 : 0; v <= ElementSet::full(n).bits(); ++v) values.push_back(v);
  int nodes = 0;
  std::function<bool(int)> fill = [&](int k) {
    if (k == search.cell_count()) return true;
    std::vector<Bits> order_of_try = values;
    std::shuffle(order_of_try.begin(), order_of_try.end(), rng);
    for (Bits v : order_of_try) {
      if (++nodes > kNodeCap) return false;
      search.assign(k, v);
      if (search.consistent() && fill(k + 1)) return true;
      if (nodes > kNodeCap) return false;
    }
    return false;
  };
  if (!fill(0)) return std::nullopt;
  return search.op();
}

double space_size(int n, const Requirements& req, size_t orders) {
  const double values = std::pow(2.0, n) - (req.total ? 1.0 : 0.0);
  return std::pow(values, static_cast<double>(n) * n) * static_cast<double>(std::max<size_t>(orders, 1));
}

}  // namespace

std::vector<PartialOrder> all_partial_orders(int n) {
  check_n(n);
  std::vector<std::pair<Element, Element>> pairs;
  for (Element a = 0; a < n; ++a) {
    for (Element b = a + 1; b < n; ++b) pairs.emplace_back(a, b);
  }
  std::vector<PartialOrder> out;
  PartialOrder current = PartialOrder::discrete(n);
  // Each unordered pair is incomparable, a < b or b < a.
  std::function<void(size_t)> walk = [&](size_t i) {
    if (i == pairs.size()) {
      if (check_order_axioms(current).ok) out.push_back(current);
      return;
    }
    const auto [a, b] = pairs[i];
    for (int choice = 0; choice < 3; ++choice) {
      current.set(a, b, choice == 1);
      current.set(b, a, choice == 2);
      walk(i + 1);
    }
    current.set(a, b, false);
    current.set(b, a, false);
  };
  walk(0);
  return out;
}

Encoding encode(const HyperStructure& s) {
  const int n = s.size();
  Encoding e;
  e.reserve(static_cast<size_t>(2 + n * n + n));
  e.push_back(static_cast<std::uint32_t>(n));
  for (ElementSet c : s.op().cells()) e.push_back(c.bits());
  e.push_back(s.has_order() ? 1 : 0);
  if (s.has_order()) {
    for (Element a = 0; a < n; ++a) e.push_back(s.order().up(a).bits());
  }
  return e;
}

HyperStructure decode(const Encoding& e) {
  if (e.empty()) throw Error(ErrorKind::kParse, "empty encoding");
  const int n = static_cast<int>(e[0]);
  check_n(n);
  const size_t cells = static_cast<size_t>(n * n);
  if (e.size() < cells + 2) throw Error(ErrorKind::kParse, "truncated encoding");
  std::vector<ElementSet> table;
  for (size_t i = 0; i < cells; ++i) table.push_back(ElementSet::from_bits(e[1 + i]));
  std::optional<PartialOrder> order;
  if (e[1 + cells] != 0) {
    if (e.size() != cells + 2 + static_cast<size_t>(n)) throw Error(ErrorKind::kParse, "bad order block");
    PartialOrder p = PartialOrder::discrete(n);
    for (Element a = 0; a < n; ++a) {
      for (Element b = 0; b < n; ++b) p.set(a, b, ElementSet::from_bits(e[2 + cells + a]).contains(b));
    }
    order = p;
  } else if (e.size() != cells + 2) {
    throw Error(ErrorKind::kParse, "trailing encoding data");
  }
  return validated(HyperStructure(HyperOp(n, std::move(table)), std::move(order)));
}

namespace {

ElementSet rename(ElementSet s, const std::vector<Element>& perm) {
  ElementSet out;
  for (Element e : s) out.insert(perm[e]);
  return out;
}

Encoding encode_permuted(const HyperStructure& s, const std::vector<Element>& perm) {
  const int n = s.size();
  Encoding e(static_cast<size_t>(2 + n * n + (s.has_order() ? n : 0)), 0);
  e[0] = static_cast<std::uint32_t>(n);
  for (Element a = 0; a < n; ++a) {
    for (Element b = 0; b < n; ++b) e[1 + perm[a] * n + perm[b]] = rename(s(a, b), perm).bits();
  }
  e[1 + n * n] = s.has_order() ? 1 : 0;
  if (s.has_order()) {
    for (Element a = 0; a < n; ++a) e[2 + n * n + perm[a]] = rename(s.order().up(a), perm).bits();
  }
  return e;
}

}  // namespace

HyperStructure transport(const HyperStructure& s, const std::vector<Element>& perm) {
  if (static_cast<int>(perm.size()) != s.size()) {
    throw Error(ErrorKind::kDimensionMismatch, "permutation length differs from the carrier");
  }
  std::vector<Element> sorted = perm;
  std::sort(sorted.begin(), sorted.end());
  for (int i = 0; i < s.size(); ++i) {
    if (sorted[i] != i) throw Error(ErrorKind::kDimensionMismatch, "not a permutation");
  }
  return decode(encode_permuted(s, perm));
}

Encoding canonical_form(const HyperStructure& s) {
  std::vector<Element> perm(static_cast<size_t>(s.size()));
  std::iota(perm.begin(), perm.end(), 0);
  Encoding best = encode_permuted(s, perm);
  while (std::next_permutation(perm.begin(), perm.end())) {
    Encoding e = encode_permuted(s, perm);
    if (e < best) best = std::move(e);
  }
  return best;
}

HyperStructure canonical_representative(const HyperStructure& s) { return decode(canonical_form(s)); }

void enumerate(const EnumSpec& spec, const std::function<bool(const HyperStructure&)>& visit) {
  check_n(spec.n);
  const Requirements req = normalized(spec.require);
  std::vector<PartialOrder> orders;
  if (req.ordered) orders = all_partial_orders(spec.n);

  if (spec.mode == EnumMode::kExhaustive) {
    const double space = space_size(spec.n, req, orders.size());
    if (space > static_cast<double>(spec.budget)) {
      std::ostringstream msg;
      msg << "exhaustive space " << space << " exceeds budget " << spec.budget;
      throw Error(ErrorKind::kBudgetExceeded, msg.str());
    }
    if (!req.ordered) {
      exhaust(spec.n, nullptr, req, spec.canonical_only, visit);
      return;
    }
    for (const PartialOrder& order : orders) {
      if (!exhaust(spec.n, &order, req, spec.canonical_only, visit)) return;
    }
    return;
  }

  if (spec.count > spec.budget) {
    throw Error(ErrorKind::kBudgetExceeded,
                "random count " + std::to_string(spec.count) + " exceeds budget " + std::to_string(spec.budget));
  }
  constexpr int kRestarts = 10'000;
  std::mt19937_64 rng(spec.seed);
  for (std::uint64_t i = 0; i < spec.count; ++i) {
    const PartialOrder* order = nullptr;
    if (req.ordered) {
      std::uniform_int_distribution<size_t> pick(0, orders.size() - 1);
      order = &orders[pick(rng)];
    }
    std::optional<HyperOp> table;
    for (int attempt = 0; attempt < kRestarts && !table; ++attempt) table = random_table(spec.n, order, req, rng);
    if (!table) throw Error(ErrorKind::kBudgetExceeded, "random search found no table within its restarts");
    HyperStructure s = validated(HyperStructure(std::move(*table), order_or_none(order)));
    if (spec.canonical_only) s = canonical_representative(s);
    if (!visit(s)) return;
  }
}

std::vector<HyperStructure> collect(const EnumSpec& spec) {
  std::vector<HyperStructure> out;
  enumerate(spec, [&](const HyperStructure& s) {
    out.push_back(s);
    return true;
  });
  return out;
}

// ---- Problem 85 search

namespace {

std::string requirement_text(const Requirements& r) {
  std::string out;
  auto add = [&](bool on, const char* name) {
    if (!on) return;
    if (!out.empty()) out += ',';
    out += name;
  };
  add(r.total, "total");
  add(r.associative, "associative");
  add(r.ordered, "ordered");
  add(r.compatible, "compatible");
  return out;
}

Partition least_complete_congruence(const HyperStructure& s, const std::vector<Partition>& congruences) {
  Partition acc = Partition::universal(s.size());
  for (const Partition& p : congruences) {
    if (is_complete(s, p)) acc = meet(acc, p);
  }
  return acc;
}

std::optional<SearchFinding> examine(const HyperStructure& s, std::uint64_t budget) {
  const Partition n_ordered = relation_N(s, Flavor::kOrdered);
  const Partition least = least_semilattice_congruence(s, budget);
  if (n_ordered == least) return std::nullopt;
  const std::vector<Partition> congruences = semilattice_congruences(s, budget);
  return SearchFinding{
      s,
      classify_all(s, Flavor::kOrdered).bits(),
      n_ordered,
      least,
      least_complete_congruence(s, congruences),
      relation_N(s, Flavor::kPlain) == least,
  };
}

}  // namespace

std::string SearchFinding::to_text() const {
  std::ostringstream out;
  out << "classes: " << classes << '\n';
  out << "ordered N: " << relation_n.to_string() << '\n';
  out << "least semilattice congruence: " << least.to_string() << '\n';
  out << "least complete semilattice congruence: " << least_complete.to_string() << '\n';
  out << "plain N equals least: " << (plain_sanity ? "yes" : "no") << '\n';
  return out.str();
}

std::string SearchFinding::to_record() const {
  nlohmann::ordered_json j;
  j["record"] = "finding";
  j["encoding"] = encode(structure);
  j["classes"] = classes;
  j["ordered_n"] = relation_n.to_string();
  j["least"] = least.to_string();
  j["least_complete"] = least_complete.to_string();
  j["plain_sanity"] = plain_sanity;
  return j.dump();
}

SearchResult search_p85(const EnumSpec& spec) {
  EnumSpec sweep = spec;
  sweep.require.associative = true;
  sweep.require.ordered = true;
  sweep.require.compatible = true;
  const std::uint64_t partition_budget = budget_or_env(1'000'000);
  SearchResult result;
  enumerate(sweep, [&](const HyperStructure& s) {
    ++result.examined;
    std::optional<SearchFinding> finding = examine(s, partition_budget);
    if (!finding) return true;
    // Re-derive everything from the serialized form.
    HyperStructure fresh = decode(encode(s));
    if (!validate(fresh).passed()) throw Error(ErrorKind::kInternal, "finding does not re-validate");
    std::optional<SearchFinding> again = examine(fresh, partition_budget);
    if (!again || again->relation_n != finding->relation_n || again->least != finding->least) {
      throw Error(ErrorKind::kInternal, "finding does not reproduce");
    }
    result.findings.push_back(std::move(*again));
    return true;
  });
  if (sweep.mode == EnumMode::kExhaustive) {
    std::ostringstream cert;
    cert << "slice: n=" << sweep.n << " require=" << requirement_text(normalized(sweep.require))
         << " canonical=" << (sweep.canonical_only ? "true" : "false") << '\n';
    cert << "mode: exhaustive\n";
    cert << "examined: " << result.examined << '\n';
    cert << "findings: " << result.findings.size() << '\n';
    cert << "result: " << (result.findings.empty() ? "zero-findings" : "findings") << '\n';
    result.certificate = cert.str();
  }
  return result;
}

// ---- census

namespace {

struct StructureCensus {
  std::string vector;
  bool violation = false;
  std::vector<TheoremVerdict> verdicts;
};

StructureCensus census_one(const HyperStructure& s, Flavor flavor, const std::vector<TheoremId>& targets,
                           const VerifyConfig& cfg) {
  StructureCensus out;
  if (s.associative()) {
    const ClassVector v = classify_all(s, flavor);
    out.vector = v.bits();
    out.violation = !v.violations.empty();
  } else {
    out.vector = "-------";
  }
  for (const TheoremReport& r : run_suite(s, targets, cfg, 1)) out.verdicts.push_back(r.verdict);
  return out;
}

}  // namespace

std::string Census::to_text() const {
  std::ostringstream out;
  out << "total: " << total << '\n';
  out << "flavor: " << to_string(flavor) << '\n';
  for (size_t i = 0; i < kAllClasses.size(); ++i) {
    out << "class " << to_string(kAllClasses[i]) << ": " << per_class[i] << '\n';
  }
  for (const auto& [bits, count] : vectors) out << "vector " << bits << ": " << count << '\n';
  out << "implication-violations: " << implication_violations << '\n';
  for (const auto& [id, counts] : verdicts) {
    out << "theorem " << to_string(id) << ": holds=" << counts[0] << " fails=" << counts[1]
        << " not-applicable=" << counts[2] << '\n';
  }
  return out.str();
}

std::vector<std::string> Census::to_records() const {
  std::vector<std::string> out;
  nlohmann::ordered_json head;
  head["record"] = "census";
  head["total"] = total;
  head["flavor"] = std::string(to_string(flavor));
  head["implication_violations"] = implication_violations;
  nlohmann::ordered_json classes = nlohmann::ordered_json::object();
  for (size_t i = 0; i < kAllClasses.size(); ++i) classes[std::string(to_string(kAllClasses[i]))] = per_class[i];
  head["classes"] = classes;
  head["vectors"] = vectors;
  out.push_back(head.dump());
  for (const auto& [id, counts] : verdicts) {
    nlohmann::ordered_json j;
    j["record"] = "census-theorem";
    j["id"] = std::string(to_string(id));
    j["holds"] = counts[0];
    j["fails"] = counts[1];
    j["not_applicable"] = counts[2];
    out.push_back(j.dump());
  }
  return out;
}

Census classify_corpus(const EnumSpec& spec, Flavor flavor, const std::vector<TheoremId>& targets,
                       int threads, const VerifyConfig& cfg) {
  constexpr size_t kBatch = 4096;
  Census census;
  census.flavor = flavor;
  for (TheoremId id : targets) census.verdicts[id] = {0, 0, 0};
  std::vector<HyperStructure> batch;
  auto flush = [&] {
    std::vector<StructureCensus> results(batch.size());
    const int workers = std::max(1, std::min<int>(threads, static_cast<int>(batch.size())));
    auto run = [&](int w) {
      for (size_t i = static_cast<size_t>(w); i < batch.size(); i += static_cast<size_t>(workers)) {
        results[i] = census_one(batch[i], flavor, targets, cfg);
      }
    };
    if (workers == 1) {
      run(0);
    } else {
      std::vector<std::thread> pool;
      std::vector<std::exception_ptr> errors(static_cast<size_t>(workers));
      for (int w = 0; w < workers; ++w) {
        pool.emplace_back([&, w] {
          try {
            run(w);
          } catch (...) {
            errors[w] = std::current_exception();
          }
        });
      }
      for (auto& t : pool) t.join();
      for (auto& e : errors) {
        if (e) std::rethrow_exception(e);
      }
    }
    for (const StructureCensus& r : results) {
      ++census.total;
      ++census.vectors[r.vector];
      for (size_t i = 0; i < r.vector.size(); ++i) {
        if (r.vector[i] == '1') ++census.per_class[i];
      }
      if (r.violation) ++census.implication_violations;
      for (size_t t = 0; t < targets.size(); ++t) ++census.verdicts[targets[t]][static_cast<size_t>(r.verdicts[t])];
    }
    batch.clear();
  };
  enumerate(spec, [&](const HyperStructure& s) {
    batch.push_back(s);
    if (batch.size() == kBatch) flush();
    return true;
  });
  flush();
  return census;
}

}  // namespace hyperforge
