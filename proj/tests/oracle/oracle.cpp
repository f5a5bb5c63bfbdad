#include "oracle.hpp"

#include <algorithm>
#include <functional>

namespace oracle {

Structure from(const hyperforge::HyperStructure& s) {
  Structure o;
  o.n = s.size();
  o.op.assign(o.n, std::vector<Set>(o.n));
  for (int a = 0; a < o.n; ++a) {
    for (int b = 0; b < o.n; ++b) {
      for (int c = 0; c < o.n; ++c) {
        if (s(a, b).contains(c)) o.op[a][b].insert(c);
      }
    }
  }
  if (s.has_order()) {
    o.ordered = true;
    for (int a = 0; a < o.n; ++a) {
      for (int b = 0; b < o.n; ++b) {
        if (s.order().le(a, b)) o.le.insert({a, b});
      }
    }
  }
  return o;
}

Set from(hyperforge::ElementSet s) {
  Set out;
  for (int e = 0; e < hyperforge::kMaxCarrier; ++e) {
    if (s.contains(e)) out.insert(e);
  }
  return out;
}

Blocks from(const hyperforge::Partition& p) {
  Blocks out;
  for (int a = 0; a < p.size(); ++a) {
    Set block;
    for (int b = 0; b < p.size(); ++b) {
      if (p.related(a, b)) block.insert(b);
    }
    out.insert(block);
  }
  return out;
}

Set carrier(int n) {
  Set h;
  for (int i = 0; i < n; ++i) h.insert(i);
  return h;
}

std::vector<Set> nonempty_subsets(int n) {
  std::vector<Set> out{Set{}};
  for (int e = 0; e < n; ++e) {
    const size_t count = out.size();
    for (size_t i = 0; i < count; ++i) {
      Set bigger = out[i];
      bigger.insert(e);
      out.push_back(bigger);
    }
  }
  out.erase(out.begin());
  return out;
}

std::vector<Structure> all_total_tables(int n) {
  const std::vector<Set> values = nonempty_subsets(n);
  const int cells = n * n;
  std::vector<int> digit(cells, 0);
  std::vector<Structure> out;
  while (true) {
    Structure s;
    s.n = n;
    s.op.assign(n, std::vector<Set>(n));
    for (int k = 0; k < cells; ++k) s.op[k / n][k % n] = values[digit[k]];
    out.push_back(s);
    int k = cells - 1;
    while (k >= 0 && digit[k] + 1 == static_cast<int>(values.size())) digit[k--] = 0;
    if (k < 0) break;
    ++digit[k];
  }
  return out;
}

Set prod(const Structure& s, const Set& a, const Set& b) {
  Set out;
  for (int x : a) {
    for (int y : b) out.insert(s.op[x][y].begin(), s.op[x][y].end());
  }
  return out;
}

Set down(const Structure& s, const Set& a) {
  Set out;
  for (int t = 0; t < s.n; ++t) {
    for (int x : a) {
      if (s.le.count({t, x})) out.insert(t);
    }
  }
  return out;
}

Set close(const Structure& s, const Set& a, bool ordered) { return ordered ? down(s, a) : a; }

bool subset(const Set& a, const Set& b) { return std::includes(b.begin(), b.end(), a.begin(), a.end()); }

bool associative(const Structure& s) {
  for (int a = 0; a < s.n; ++a) {
    for (int b = 0; b < s.n; ++b) {
      for (int c = 0; c < s.n; ++c) {
        if (prod(s, s.op[a][b], {c}) != prod(s, {a}, s.op[b][c])) return false;
      }
    }
  }
  return true;
}

bool order_axioms(const Structure& s) {
  for (int a = 0; a < s.n; ++a) {
    if (!s.le.count({a, a})) return false;
    for (int b = 0; b < s.n; ++b) {
      if (a != b && s.le.count({a, b}) && s.le.count({b, a})) return false;
      for (int c = 0; c < s.n; ++c) {
        if (s.le.count({a, b}) && s.le.count({b, c}) && !s.le.count({a, c})) return false;
      }
    }
  }
  return true;
}

namespace {

bool dominated(const Structure& s, const Set& lower, const Set& upper) {
  for (int x : lower) {
    bool found = false;
    for (int y : upper) found = found || s.le.count({x, y});
    if (!found) return false;
  }
  return true;
}

}  // namespace

bool compatible(const Structure& s) {
  for (const auto& [a, b] : s.le) {
    for (int c = 0; c < s.n; ++c) {
      if (!dominated(s, s.op[a][c], s.op[b][c])) return false;
      if (!dominated(s, s.op[c][a], s.op[c][b])) return false;
    }
  }
  return true;
}

bool is_ideal(const Structure& s, const Set& a, Kind kind, bool ordered) {
  const Set h = carrier(s.n);
  if (ordered && down(s, a) != a) return false;
  switch (kind) {
    case Kind::kRight: return subset(prod(s, a, h), a);
    case Kind::kLeft: return subset(prod(s, h, a), a);
    case Kind::kTwoSided: return subset(prod(s, a, h), a) && subset(prod(s, h, a), a);
    case Kind::kBi: return subset(prod(s, prod(s, a, h), a), a);
    case Kind::kQuasi: {
      const Set r = close(s, prod(s, a, h), ordered);
      const Set l = close(s, prod(s, h, a), ordered);
      for (int x : r) {
        if (l.count(x) && !a.count(x)) return false;
      }
      return true;
    }
  }
  return false;
}

std::set<Set> ideals(const Structure& s, Kind kind, bool ordered) {
  std::set<Set> out;
  for (const Set& a : nonempty_subsets(s.n)) {
    if (is_ideal(s, a, kind, ordered)) out.insert(a);
  }
  return out;
}

bool in_class(const Structure& s, const std::string& pattern, bool ordered) {
  const int slots = static_cast<int>(std::count(pattern.begin(), pattern.end(), 'H'));
  for (int a = 0; a < s.n; ++a) {
    bool realized = false;
    std::vector<int> choice(slots, 0);
    while (!realized) {
      Set acc;
      int slot = 0;
      for (size_t i = 0; i < pattern.size(); ++i) {
        const Set factor = pattern[i] == 'a' ? Set{a} : Set{choice[slot++]};
        acc = i == 0 ? factor : prod(s, acc, factor);
      }
      realized = close(s, acc, ordered).count(a) > 0;
      int k = slots - 1;
      while (k >= 0 && choice[k] + 1 == s.n) choice[k--] = 0;
      if (k < 0) break;
      ++choice[k];
    }
    if (!realized) return false;
  }
  return true;
}

bool is_filter(const Structure& s, const Set& f, bool ordered) {
  if (f.empty()) return false;
  for (int x = 0; x < s.n; ++x) {
    for (int y = 0; y < s.n; ++y) {
      const Set& xy = s.op[x][y];
      if (f.count(x) && f.count(y) && !subset(xy, f)) return false;
      if (subset(xy, f) && (!f.count(x) || !f.count(y))) return false;
      bool meets = false;
      for (int u : xy) meets = meets || f.count(u);
      if (meets && !subset(xy, f)) return false;
    }
  }
  if (ordered) {
    for (const auto& [a, b] : s.le) {
      if (f.count(a) && !f.count(b)) return false;
    }
  }
  return true;
}

std::set<Set> filters(const Structure& s, bool ordered) {
  std::set<Set> out;
  for (const Set& f : nonempty_subsets(s.n)) {
    if (is_filter(s, f, ordered)) out.insert(f);
  }
  return out;
}

Set generated_filter(const Structure& s, int x, bool ordered) {
  Set acc = carrier(s.n);
  for (const Set& f : filters(s, ordered)) {
    if (!f.count(x)) continue;
    Set meet;
    for (int e : acc) {
      if (f.count(e)) meet.insert(e);
    }
    acc = meet;
  }
  return acc;
}

Blocks relation_n(const Structure& s, bool ordered) {
  Blocks out;
  for (int x = 0; x < s.n; ++x) {
    Set block;
    for (int y = 0; y < s.n; ++y) {
      if (generated_filter(s, x, ordered) == generated_filter(s, y, ordered)) block.insert(y);
    }
    out.insert(block);
  }
  return out;
}

std::vector<Relation> equivalences(int n) {
  std::vector<std::pair<int, int>> off;
  for (int a = 0; a < n; ++a) {
    for (int b = 0; b < n; ++b) {
      if (a != b) off.push_back({a, b});
    }
  }
  std::vector<Relation> out;
  const unsigned long total = 1UL << off.size();
  for (unsigned long pick = 0; pick < total; ++pick) {
    Relation r;
    for (int a = 0; a < n; ++a) r.insert({a, a});
    for (size_t i = 0; i < off.size(); ++i) {
      if ((pick >> i) & 1UL) r.insert(off[i]);
    }
    bool ok = true;
    for (const auto& [a, b] : r) {
      if (!r.count({b, a})) ok = false;
      for (int c = 0; c < n && ok; ++c) {
        if (r.count({b, c}) && !r.count({a, c})) ok = false;
      }
    }
    if (ok) out.push_back(r);
  }
  return out;
}

bool is_congruence(const Structure& s, const Relation& r) {
  for (const auto& [a, b] : r) {
    for (int c = 0; c < s.n; ++c) {
      for (int u : s.op[a][c]) {
        for (int v : s.op[b][c]) {
          if (!r.count({u, v})) return false;
        }
      }
      for (int u : s.op[c][a]) {
        for (int v : s.op[c][b]) {
          if (!r.count({u, v})) return false;
        }
      }
    }
  }
  return true;
}

bool is_semilattice_congruence(const Structure& s, const Relation& r) {
  if (!is_congruence(s, r)) return false;
  for (int a = 0; a < s.n; ++a) {
    for (int u : s.op[a][a]) {
      if (!r.count({u, a})) return false;
    }
    for (int b = 0; b < s.n; ++b) {
      for (int u : s.op[a][b]) {
        for (int v : s.op[b][a]) {
          if (!r.count({u, v})) return false;
        }
      }
    }
  }
  return true;
}

Blocks blocks_of(int n, const Relation& r) {
  Blocks out;
  for (int a = 0; a < n; ++a) {
    Set block;
    for (int b = 0; b < n; ++b) {
      if (r.count({a, b})) block.insert(b);
    }
    out.insert(block);
  }
  return out;
}

Blocks least_semilattice_congruence(const Structure& s) {
  Relation acc;
  for (int a = 0; a < s.n; ++a) {
    for (int b = 0; b < s.n; ++b) acc.insert({a, b});
  }
  for (const Relation& r : equivalences(s.n)) {
    if (!is_semilattice_congruence(s, r)) continue;
    Relation meet;
    for (const auto& p : acc) {
      if (r.count(p)) meet.insert(p);
    }
    acc = meet;
  }
  return blocks_of(s.n, acc);
}

}  // namespace oracle
