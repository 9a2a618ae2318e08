#pragma once

// The structure poset of Z^n/H restricted to degrees [0, F_1], where
// [a] >= [b] iff a - b has a nonnegative representative, and the module
// posets P_k labelling which classes in the window m_k + [0, F_1] already
// carry k nonnegative points.

#include <algorithm>
#include <set>
#include <vector>

#include "genfrob/frobenius.hpp"

namespace genfrob {

struct StructurePoset {
  Int f1 = -1;
  std::vector<QuotientClass> elements;  // sorted by (degree, torsion)
  std::vector<std::vector<char>> geq;   // geq[i][j]: elements[i] >= elements[j]
  std::vector<std::pair<std::size_t, std::size_t>> hasse;  // (lower, upper) covers

  std::optional<std::size_t> index_of(const QuotientClass& c) const {
    auto it = std::lower_bound(elements.begin(), elements.end(), c);
    if (it == elements.end() || *it != c) return std::nullopt;
    return static_cast<std::size_t>(it - elements.begin());
  }
};

inline StructurePoset structure_poset(const LatticeBasis& b, Int f1) {
  StructurePoset p;
  p.f1 = f1;
  if (f1 < 0) return p;
  CountTable reach(b, f1, 1);
  for (Int d = 0; d <= f1; ++d)
    for (std::size_t t = 0; t < reach.classes_per_degree(); ++t) p.elements.push_back(reach.class_at(d, t));
  const std::size_t n = p.elements.size();
  p.geq.assign(n, std::vector<char>(n, 0));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) p.geq[i][j] = reach.count(b.subtract(p.elements[i], p.elements[j])) > 0;
  for (std::size_t lo = 0; lo < n; ++lo)
    for (std::size_t hi = 0; hi < n; ++hi) {
      if (lo == hi || !p.geq[hi][lo]) continue;
      bool cover = true;
      for (std::size_t mid = 0; mid < n && cover; ++mid)
        if (mid != lo && mid != hi && p.geq[hi][mid] && p.geq[mid][lo]) cover = false;
      if (cover) p.hasse.emplace_back(lo, hi);
    }
  std::sort(p.hasse.begin(), p.hasse.end());
  return p;
}

inline StructurePoset structure_poset(const LatticeBasis& b) { return structure_poset(b, first_frobenius(b)); }

/// x <= y in the structure poset.
inline bool leq(const StructurePoset& p, const QuotientClass& x, const QuotientClass& y) {
  auto i = p.index_of(x), j = p.index_of(y);
  if (!i || !j) throw InvalidInput("class outside the structure poset window");
  return p.geq[*j][*i] != 0;
}

/// Width of a finite poset given by its >= matrix (Dilworth via matching).
inline std::size_t max_antichain_size(const std::vector<std::vector<char>>& geq) {
  const std::size_t n = geq.size();
  std::vector<long> match(n, -1);
  auto augment = [&](auto&& self, std::size_t u, std::vector<char>& seen) -> bool {
    for (std::size_t v = 0; v < n; ++v) {
      if (v == u || !geq[v][u] || geq[u][v] || seen[v]) continue;
      seen[v] = 1;
      if (match[v] < 0 || self(self, static_cast<std::size_t>(match[v]), seen)) {
        match[v] = static_cast<long>(u);
        return true;
      }
    }
    return false;
  };
  std::size_t matched = 0;
  for (std::size_t u = 0; u < n; ++u) {
    std::vector<char> seen(n, 0);
    if (augment(augment, u, seen)) ++matched;
  }
  return n - matched;
}

inline std::size_t max_antichain_size(const StructurePoset& p) { return max_antichain_size(p.geq); }

struct ModulePoset {
  Int k = 0;
  Int m_k = 0;
  QuotientClass shift;                           // subtracted from every class
  std::vector<QuotientClass> min_degree_classes;  // classes of degree m_k with k points
  std::vector<QuotientClass> labels;              // sorted, offsets in [0, F_1]
  std::vector<QuotientClass> minimal;             // minimal labels, sorted

  bool full(const LatticeBasis& b, Int f1) const {
    return static_cast<Int>(labels.size()) == (f1 + 1) * b.index();
  }
};

inline ModulePoset module_poset(const LatticeBasis& b, Int f1, Int k) {
  if (k < 1) throw InvalidInput("k must be at least 1");
  ModulePoset p;
  p.k = k;
  p.m_k = m_value(b, k);
  const Int top = checked::add(p.m_k, std::max<Int>(f1, 0));
  CountTable t(b, top, k);
  for (std::size_t c = 0; c < t.classes_per_degree(); ++c)
    if (t.count(p.m_k, c) >= k) p.min_degree_classes.push_back(t.class_at(p.m_k, c));
  p.shift = p.min_degree_classes.front();
  for (Int d = p.m_k; d <= p.m_k + f1; ++d)
    for (std::size_t c = 0; c < t.classes_per_degree(); ++c)
      if (t.count(d, c) >= k) p.labels.push_back(b.subtract(t.class_at(d, c), p.shift));
  std::sort(p.labels.begin(), p.labels.end());
  if (f1 >= 0) {
    CountTable reach(b, f1, 1);
    for (const auto& x : p.labels) {
      bool above_other = false;
      for (const auto& y : p.labels)
        if (y != x && reach.count(b.subtract(x, y)) > 0) {
          above_other = true;
          break;
        }
      if (!above_other) p.minimal.push_back(x);
    }
  }
  return p;
}

inline ModulePoset module_poset(const LatticeBasis& b, Int k) { return module_poset(b, first_frobenius(b), k); }

struct FinitenessEntry {
  Int k = 0;
  Int m_k = 0;
  Int f_k = 0;
  Int b = 0;            // F_k - m_k
  Int b_from_poset = 0;  // largest offset with an unlabelled class, -1 if full
  bool full = false;
  std::vector<QuotientClass> labels;
};

struct FinitenessReport {
  Int f1 = -1;
  std::vector<FinitenessEntry> entries;
  std::size_t distinct_label_sets = 0;
  bool full_implies_f_eq_m_minus_1 = true;
  bool b_matches_poset = true;
};

inline FinitenessReport finiteness_report(const LatticeBasis& b, Int k_max) {
  if (k_max < 1) throw InvalidInput("k_max must be at least 1");
  FinitenessReport r;
  r.f1 = first_frobenius(b);
  std::set<std::vector<QuotientClass>> seen;
  for (Int k = 1; k <= k_max; ++k) {
    auto p = module_poset(b, r.f1, k);
    FinitenessEntry e;
    e.k = k;
    e.m_k = p.m_k;
    e.f_k = frobenius(b, k);
    e.b = e.f_k - e.m_k;
    e.full = p.full(b, r.f1);
    e.b_from_poset = -1;
    for (Int off = r.f1; off >= 0 && e.b_from_poset < 0; --off) {
      const auto present = std::count_if(p.labels.begin(), p.labels.end(),
                                         [&](const QuotientClass& c) { return c.degree == off; });
      if (present < b.index()) e.b_from_poset = off;
    }
    if (e.full && e.f_k != e.m_k - 1) r.full_implies_f_eq_m_minus_1 = false;
    if (e.b != e.b_from_poset) r.b_matches_poset = false;
    e.labels = p.labels;
    seen.insert(p.labels);
    r.entries.push_back(std::move(e));
  }
  r.distinct_label_sets = seen.size();
  return r;
}

}  // namespace genfrob
