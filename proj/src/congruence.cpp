#include "hyperforge/congruence.hpp"

#include <algorithm>
#include <limits>
#include <optional>
#include <utility>

namespace hyperforge {

Partition Partition::from_labels(const std::vector<int>& labels) {
  Partition p;
  p.class_of_.resize(labels.size());
  std::vector<std::pair<int, int>> seen;
  for (size_t i = 0; i < labels.size(); ++i) {
    int id = -1;
    for (auto [label, assigned] : seen) {
      if (label == labels[i]) id = assigned;
    }
    if (id < 0) {
      id = static_cast<int>(seen.size());
      seen.emplace_back(labels[i], id);
    }
    p.class_of_[i] = id;
  }
  return p;
}

Partition Partition::from_blocks(int n, const std::vector<ElementSet>& blocks) {
  std::vector<int> labels(static_cast<size_t>(n), -1);
  for (size_t b = 0; b < blocks.size(); ++b) {
    for (Element e : blocks[b]) {
      if (e >= n || labels[e] >= 0) {
        throw Error(ErrorKind::kDimensionMismatch, "blocks do not partition the carrier");
      }
      labels[e] = static_cast<int>(b);
    }
  }
  for (int l : labels) {
    if (l < 0) throw Error(ErrorKind::kDimensionMismatch, "blocks do not cover the carrier");
  }
  return from_labels(labels);
}

Partition Partition::identity(int n) {
  std::vector<int> labels(static_cast<size_t>(n));
  for (int i = 0; i < n; ++i) labels[i] = i;
  return from_labels(labels);
}

Partition Partition::universal(int n) {
  return from_labels(std::vector<int>(static_cast<size_t>(n), 0));
}

int Partition::block_count() const {
  int m = 0;
  for (int c : class_of_) m = std::max(m, c + 1);
  return m;
}

std::vector<ElementSet> Partition::blocks() const {
  std::vector<ElementSet> out(static_cast<size_t>(block_count()));
  for (size_t i = 0; i < class_of_.size(); ++i) out[class_of_[i]].insert(static_cast<Element>(i));
  return out;
}

bool Partition::refines(const Partition& other) const {
  for (int a = 0; a < size(); ++a) {
    for (int b = a + 1; b < size(); ++b) {
      if (related(a, b) && !other.related(a, b)) return false;
    }
  }
  return true;
}

std::string Partition::to_string() const {
  std::string out;
  for (ElementSet b : blocks()) {
    if (!out.empty()) out += '|';
    out += b.to_string();
  }
  return out;
}

Partition meet(const Partition& p, const Partition& q) {
  if (p.size() != q.size()) throw Error(ErrorKind::kCarrierMismatch, "partitions differ in size");
  std::vector<int> labels(static_cast<size_t>(p.size()));
  for (int i = 0; i < p.size(); ++i) labels[i] = p.class_of(i) * kMaxCarrier + q.class_of(i);
  return Partition::from_labels(labels);
}

std::uint64_t bell_number(int n) {
  // Bell triangle with saturation.
  constexpr std::uint64_t kMax = std::numeric_limits<std::uint64_t>::max();
  std::vector<std::uint64_t> row{1};
  for (int i = 1; i <= n; ++i) {
    std::vector<std::uint64_t> next{row.back()};
    for (std::uint64_t v : row) {
      const std::uint64_t prev = next.back();
      next.push_back(prev > kMax - v ? kMax : prev + v);
    }
    row = std::move(next);
  }
  return row.front();
}

void for_each_partition(int n, const std::function<bool(const Partition&)>& visit) {
  if (n <= 0) return;
  std::vector<int> rgs(static_cast<size_t>(n), 0);
  std::vector<int> maxes(static_cast<size_t>(n), 0);
  while (true) {
    if (!visit(Partition::from_labels(rgs))) return;
    int i = n - 1;
    while (i > 0 && rgs[i] == maxes[i - 1] + 1) --i;
    if (i == 0) return;
    ++rgs[i];
    maxes[i] = std::max(maxes[i - 1], rgs[i]);
    for (int j = i + 1; j < n; ++j) {
      rgs[j] = 0;
      maxes[j] = maxes[i];
    }
  }
}

namespace {

// First unrelated (u, v) with u in x, v in y.
std::optional<std::pair<Element, Element>> unrelated(const Partition& p, ElementSet x,
                                                     ElementSet y) {
  for (Element u : x) {
    for (Element v : y) {
      if (!p.related(u, v)) return std::make_pair(u, v);
    }
  }
  return std::nullopt;
}

}  // namespace

Verdict is_congruence(const HyperStructure& s, const Partition& p, CongruenceSide side) {
  if (p.size() != s.size()) throw Error(ErrorKind::kCarrierMismatch, "partition size differs");
  const int n = s.size();
  for (Element a = 0; a < n; ++a) {
    for (Element b = 0; b < n; ++b) {
      if (!p.related(a, b)) continue;
      for (Element c = 0; c < n; ++c) {
        if (side != CongruenceSide::kLeft) {
          if (auto w = unrelated(p, s(a, c), s(b, c))) return Verdict::fail({a, b, c, w->first, w->second});
        }
        if (side != CongruenceSide::kRight) {
          if (auto w = unrelated(p, s(c, a), s(c, b))) return Verdict::fail({a, b, c, w->first, w->second});
        }
      }
    }
  }
  return {};
}

Verdict is_semilattice_congruence(const HyperStructure& s, const Partition& p) {
  if (!is_congruence(s, p)) {
    throw Error(ErrorKind::kNotACongruence, "partition " + p.to_string() + " is not a congruence");
  }
  const int n = s.size();
  for (Element a = 0; a < n; ++a) {
    for (Element u : s(a, a)) {
      if (!p.related(u, a)) return Verdict::fail({a, u});
    }
  }
  for (Element a = 0; a < n; ++a) {
    for (Element b = a + 1; b < n; ++b) {
      if (auto w = unrelated(p, s(a, b), s(b, a))) return Verdict::fail({a, b, w->first, w->second});
    }
  }
  return {};
}

Verdict is_complete(const HyperStructure& s, const Partition& p) {
  const PartialOrder& order = s.order();
  if (!is_congruence(s, p)) {
    throw Error(ErrorKind::kNotACongruence, "partition " + p.to_string() + " is not a congruence");
  }
  for (Element a = 0; a < s.size(); ++a) {
    for (Element b : order.up(a)) {
      for (Element u : s(a, b)) {
        if (!p.related(a, u)) return Verdict::fail({a, b, u});
      }
    }
  }
  return {};
}

Verdict is_filter(const HyperStructure& s, ElementSet F, Flavor flavor) {
  if (F.empty()) throw Error(ErrorKind::kEmptySubset, "filter must be nonempty");
  require_flavor(s, flavor);
  const int n = s.size();
  for (Element x = 0; x < n; ++x) {
    for (Element y = 0; y < n; ++y) {
      const ElementSet c = s(x, y);
      const bool inside = c.subset_of(F);
      if (F.contains(x) && F.contains(y) && !inside) return Verdict::fail({x, y});
      if (inside && !(F.contains(x) && F.contains(y))) return Verdict::fail({x, y});
      if (!inside && c.intersects(F)) return Verdict::fail({x, y});
    }
  }
  if (flavor == Flavor::kOrdered) {
    const PartialOrder& order = s.order();
    for (Element a : F) {
      const ElementSet escape = order.up(a) - F;
      if (!escape.empty()) return Verdict::fail({a, escape.first()});
    }
  }
  return {};
}

std::vector<ElementSet> enumerate_filters(const HyperStructure& s, Flavor flavor) {
  require_flavor(s, flavor);
  std::vector<ElementSet> out;
  const ElementSet::Bits last = s.carrier().bits();
  for (ElementSet::Bits b = 1; b <= last; ++b) {
    const ElementSet F = ElementSet::from_bits(b);
    if (is_filter(s, F, flavor)) out.push_back(F);
  }
  return out;
}

namespace {

ElementSet generated_from(const HyperStructure& s, const std::vector<ElementSet>& filters,
                          Element x, Flavor flavor) {
  ElementSet out = s.carrier();
  for (ElementSet F : filters) {
    if (F.contains(x)) out &= F;
  }
  if (!is_filter(s, out, flavor)) {
    throw Error(ErrorKind::kInternal, "intersection of filters is not a filter");
  }
  return out;
}

}  // namespace

ElementSet generated_filter(const HyperStructure& s, Element x, Flavor flavor) {
  return generated_from(s, enumerate_filters(s, flavor), x, flavor);
}

Partition relation_N(const HyperStructure& s, Flavor flavor) {
  const auto filters = enumerate_filters(s, flavor);
  std::vector<int> labels(static_cast<size_t>(s.size()));
  for (Element x = 0; x < s.size(); ++x) {
    labels[x] = static_cast<int>(generated_from(s, filters, x, flavor).bits());
  }
  return Partition::from_labels(labels);
}

Partition sigma_I(int n, ElementSet I) {
  std::vector<int> labels(static_cast<size_t>(n));
  for (Element a = 0; a < n; ++a) labels[a] = I.contains(a) ? 1 : 0;
  return Partition::from_labels(labels);
}

std::vector<Partition> semilattice_congruences(const HyperStructure& s, std::uint64_t budget) {
  const std::uint64_t bell = bell_number(s.size());
  if (bell > budget) {
    throw Error(ErrorKind::kCarrierTooLarge, "Bell(" + std::to_string(s.size()) + ") = " +
                                                 std::to_string(bell) + " exceeds budget " +
                                                 std::to_string(budget));
  }
  std::vector<Partition> out;
  for_each_partition(s.size(), [&](const Partition& p) {
    if (is_congruence(s, p) && is_semilattice_congruence(s, p)) out.push_back(p);
    return true;
  });
  return out;
}

Partition least_semilattice_congruence(const HyperStructure& s, std::uint64_t budget) {
  const auto all = semilattice_congruences(s, budget);
  Partition out = Partition::universal(s.size());
  for (const Partition& p : all) out = meet(out, p);
  if (!is_congruence(s, out) || !is_semilattice_congruence(s, out)) {
    throw Error(ErrorKind::kInternal, "meet of semilattice congruences is not one");
  }
  return out;
}

bool related_to_set(const Partition& p, Element x, ElementSet A) {
  for (Element a : A) {
    if (!p.related(x, a)) return false;
  }
  return true;
}

bool sets_related(const Partition& p, ElementSet A, ElementSet B) {
  for (Element a : A) {
    for (Element b : B) {
      if (!p.related(a, b)) return false;
    }
  }
  return true;
}

ElementSet congruence_filter_seed(const HyperStructure& s, const Partition& sigma, Element x) {
  ElementSet out;
  for (Element y = 0; y < s.size(); ++y) {
    if (related_to_set(sigma, x, s(x, y))) out.insert(y);
  }
  return out;
}

}  // namespace hyperforge
