#pragma once

// Pure-difference binomial ideals: a-weighted graded reverse lexicographic
// orders, Buchberger's algorithm, saturation by the variables to obtain the
// lattice ideal I_H, minimal Markov bases and fiber graphs.

#include <algorithm>
#include <compare>
#include <deque>
#include <numeric>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "genfrob/counting.hpp"
#include "genfrob/lattice.hpp"

namespace genfrob {

using Monomial = std::vector<Int>;  // nonnegative exponents

/// a-weighted degree first, ties broken reverse-lexicographically. The
/// permutation lists variables from most to least significant; the last
/// entry is the cheapest variable.
class TermOrder {
 public:
  TermOrder(WeightVector weight, std::vector<std::size_t> variables)
      : weight_(std::move(weight)), variables_(std::move(variables)) {
    std::vector<std::size_t> sorted = variables_;
    std::sort(sorted.begin(), sorted.end());
    for (std::size_t i = 0; i < sorted.size(); ++i)
      if (sorted[i] != i || sorted.size() != weight_.size()) throw InvalidInput("term order needs a permutation of the variables");
  }

  static TermOrder standard(const WeightVector& w) {
    std::vector<std::size_t> v(w.size());
    std::iota(v.begin(), v.end(), 0);
    return TermOrder(w, std::move(v));
  }

  /// Standard order with variable i moved to the cheapest position.
  static TermOrder cheapest(const WeightVector& w, std::size_t i) {
    std::vector<std::size_t> v;
    for (std::size_t j = 0; j < w.size(); ++j)
      if (j != i) v.push_back(j);
    v.push_back(i);
    return TermOrder(w, std::move(v));
  }

  std::strong_ordering compare(const Monomial& x, const Monomial& y) const {
    const Int dx = weight_.degree(x), dy = weight_.degree(y);
    if (dx != dy) return dx <=> dy;
    for (std::size_t k = variables_.size(); k-- > 0;) {
      const std::size_t v = variables_[k];
      if (x[v] != y[v]) return y[v] <=> x[v];  // smaller exponent in the cheapest variable wins
    }
    return std::strong_ordering::equal;
  }

  const WeightVector& weight() const { return weight_; }
  const std::vector<std::size_t>& variables() const { return variables_; }

 private:
  WeightVector weight_;
  std::vector<std::size_t> variables_;
};

/// x^head - x^tail with head > tail in the order it was built for.
struct PureBinomial {
  Monomial head;
  Monomial tail;

  friend bool operator==(const PureBinomial&, const PureBinomial&) = default;
};

/// x^{v+} - x^{v-} stored as its lattice vector v.
struct Binomial {
  LatticePoint vector;

  LatticePoint head() const { return vector.positive_part(); }
  LatticePoint tail() const { return vector.negative_part(); }

  PureBinomial pure() const { return {head().coords, tail().coords}; }

  /// Orient v so that x^{v+} is the leading term.
  static Binomial oriented(LatticePoint v, const TermOrder& ord) {
    if (v.is_zero()) throw InvalidInput("zero binomial");
    if (ord.compare(v.positive_part().coords, v.negative_part().coords) < 0) v = -v;
    return Binomial{std::move(v)};
  }

  friend bool operator==(const Binomial&, const Binomial&) = default;
};

inline std::string render_monomial(const Monomial& m) {
  std::string s;
  for (std::size_t i = 0; i < m.size(); ++i) {
    if (m[i] == 0) continue;
    if (!s.empty()) s += "*";
    s += "x" + std::to_string(i + 1);
    if (m[i] != 1) s += "^" + std::to_string(m[i]);
  }
  return s.empty() ? "1" : s;
}

inline std::string render(const PureBinomial& b) { return render_monomial(b.head) + " - " + render_monomial(b.tail); }
inline std::string render(const Binomial& b) { return render(b.pure()); }

namespace detail {

inline bool divides(const Monomial& d, const Monomial& m) {
  for (std::size_t i = 0; i < m.size(); ++i)
    if (d[i] > m[i]) return false;
  return true;
}

inline bool coprime(const Monomial& x, const Monomial& y) {
  for (std::size_t i = 0; i < x.size(); ++i)
    if (x[i] != 0 && y[i] != 0) return false;
  return true;
}

// Normal form of a monomial modulo pure binomials: each step replaces a
// divisible head by its tail, which strictly decreases in the order.
inline Monomial normal_form(Monomial m, const std::vector<PureBinomial>& basis) {
  for (bool again = true; again;) {
    again = false;
    for (const auto& g : basis)
      if (divides(g.head, m)) {
        for (std::size_t i = 0; i < m.size(); ++i) m[i] = checked::add(checked::sub(m[i], g.head[i]), g.tail[i]);
        again = true;
        break;
      }
  }
  return m;
}

inline std::optional<PureBinomial> orient(Monomial x, Monomial y, const TermOrder& ord) {
  auto c = ord.compare(x, y);
  if (c == 0) return std::nullopt;
  if (c < 0) std::swap(x, y);
  return PureBinomial{std::move(x), std::move(y)};
}

inline void sort_binomials(std::vector<PureBinomial>& v, const TermOrder& ord) {
  std::sort(v.begin(), v.end(), [&](const PureBinomial& a, const PureBinomial& b) {
    auto c = ord.compare(a.head, b.head);
    if (c != 0) return c < 0;
    return ord.compare(a.tail, b.tail) < 0;
  });
}

// Reduced Gröbner basis from an arbitrary Gröbner basis.
inline std::vector<PureBinomial> interreduce(std::vector<PureBinomial> g, const TermOrder& ord) {
  sort_binomials(g, ord);
  std::vector<PureBinomial> kept;
  for (std::size_t i = 0; i < g.size(); ++i) {
    bool redundant = false;
    for (std::size_t j = 0; j < g.size() && !redundant; ++j) {
      if (i == j) continue;
      if (divides(g[j].head, g[i].head) && (g[j].head != g[i].head || j < i)) redundant = true;
    }
    if (!redundant) kept.push_back(g[i]);
  }
  for (auto& b : kept) {
    std::vector<PureBinomial> others;
    for (const auto& o : kept)
      if (&o != &b) others.push_back(o);
    b.tail = normal_form(b.tail, others);
  }
  sort_binomials(kept, ord);
  return kept;
}

}  // namespace detail

/// Reduced Gröbner basis of the ideal generated by `gens`.
inline std::vector<PureBinomial> buchberger(const std::vector<PureBinomial>& gens, const TermOrder& ord) {
  std::vector<PureBinomial> g;
  for (const auto& b : gens) {
    auto o = detail::orient(b.head, b.tail, ord);
    if (o) g.push_back(std::move(*o));
  }
  std::deque<std::pair<std::size_t, std::size_t>> pairs;
  for (std::size_t j = 0; j < g.size(); ++j)
    for (std::size_t i = 0; i < j; ++i) pairs.emplace_back(i, j);

  while (!pairs.empty()) {
    auto [i, j] = pairs.front();
    pairs.pop_front();
    if (detail::coprime(g[i].head, g[j].head)) continue;
    const std::size_t n = g[i].head.size();
    Monomial l(n), x(n), y(n);
    for (std::size_t v = 0; v < n; ++v) {
      l[v] = std::max(g[i].head[v], g[j].head[v]);
      x[v] = l[v] - g[i].head[v] + g[i].tail[v];
      y[v] = l[v] - g[j].head[v] + g[j].tail[v];
    }
    auto s = detail::orient(detail::normal_form(std::move(x), g), detail::normal_form(std::move(y), g), ord);
    if (!s) continue;
    g.push_back(std::move(*s));
    for (std::size_t k = 0; k + 1 < g.size(); ++k) pairs.emplace_back(k, g.size() - 1);
  }
  return detail::interreduce(std::move(g), ord);
}

inline std::vector<PureBinomial> buchberger(const std::vector<Binomial>& gens, const TermOrder& ord) {
  std::vector<PureBinomial> p;
  for (const auto& b : gens) p.push_back(b.pure());
  return buchberger(p, ord);
}

/// True iff every element of `xs` lies in the ideal of the Gröbner basis `gb`.
inline bool reduces_to_zero(const std::vector<PureBinomial>& xs, const std::vector<PureBinomial>& gb) {
  for (const auto& b : xs)
    if (detail::normal_form(b.head, gb) != detail::normal_form(b.tail, gb)) return false;
  return true;
}

inline bool ideal_equal(const std::vector<PureBinomial>& a, const std::vector<PureBinomial>& b, const TermOrder& ord) {
  return reduces_to_zero(a, buchberger(b, ord)) && reduces_to_zero(b, buchberger(a, ord));
}

inline bool ideal_equal(const std::vector<Binomial>& a, const std::vector<Binomial>& b, const TermOrder& ord) {
  std::vector<PureBinomial> pa, pb;
  for (const auto& x : a) pa.push_back(x.pure());
  for (const auto& x : b) pb.push_back(x.pure());
  return ideal_equal(pa, pb, ord);
}

/// Minimal binomial generating set of the lattice ideal I_H.
struct MarkovBasis {
  LatticeBasis basis;
  std::vector<Binomial> elements;
  TermOrder order_used;

  std::vector<PureBinomial> pure() const {
    std::vector<PureBinomial> p;
    for (const auto& e : elements) p.push_back(e.pure());
    return p;
  }
};

namespace detail {

inline std::vector<PureBinomial> saturate_variable(const std::vector<PureBinomial>& gens, const WeightVector& w, std::size_t var) {
  auto gb = buchberger(gens, TermOrder::cheapest(w, var));
  for (auto& b : gb) {
    const Int e = std::min(b.head[var], b.tail[var]);
    b.head[var] -= e;
    b.tail[var] -= e;
  }
  return gb;
}

// Keep a candidate only when it is not in the ideal of the ones kept so far;
// candidates arrive in increasing (degree, term order).
inline std::vector<PureBinomial> minimalise(std::vector<PureBinomial> candidates, const TermOrder& ord) {
  sort_binomials(candidates, ord);
  std::vector<PureBinomial> kept;
  for (const auto& c : candidates) {
    if (!kept.empty() && reduces_to_zero({c}, buchberger(kept, ord))) continue;
    kept.push_back(c);
  }
  return kept;
}

}  // namespace detail

/// I_H = (J : (x_1...x_n)^inf) where J is generated by the basis binomials,
/// saturated one variable at a time, then reduced to a minimal generating set.
inline MarkovBasis lattice_ideal(const LatticeBasis& b) {
  const auto& w = b.weight();
  const TermOrder ord = TermOrder::standard(w);
  std::vector<PureBinomial> gens;
  for (const auto& v : b.vectors()) gens.push_back(Binomial::oriented(v, ord).pure());

  auto saturate_all = [&](std::vector<PureBinomial> g) {
    for (std::size_t var = 0; var < w.size(); ++var) g = detail::saturate_variable(g, w, var);
    return g;
  };
  // One pass already yields the saturation; further passes confirm it.
  auto current = saturate_all(gens);
  for (int pass = 0; pass < 4; ++pass) {
    auto next = saturate_all(current);
    if (ideal_equal(current, next, ord)) break;
    current = std::move(next);
  }
  auto minimal = detail::minimalise(buchberger(current, ord), ord);

  MarkovBasis mb{b, {}, ord};
  for (const auto& m : minimal) {
    LatticePoint v = LatticePoint::zero(w.size());
    for (std::size_t i = 0; i < w.size(); ++i) v[i] = checked::sub(m.head[i], m.tail[i]);
    mb.elements.push_back(Binomial{std::move(v)});
  }
  return mb;
}

/// Fiber of a class with edges joining points that differ by a Markov move.
struct FiberGraph {
  Fiber fiber;
  std::vector<std::pair<std::size_t, std::size_t>> edges;  // i < j into fiber.points

  /// Component id per fiber point (ids numbered by first appearance).
  std::vector<std::size_t> components() const {
    const std::size_t n = fiber.points.size();
    std::vector<std::size_t> parent(n);
    std::iota(parent.begin(), parent.end(), 0);
    auto find = [&](std::size_t x) {
      while (parent[x] != x) x = parent[x] = parent[parent[x]];
      return x;
    };
    for (auto [i, j] : edges) parent[find(i)] = find(j);
    std::vector<std::size_t> id(n), remap(n, n);
    std::size_t next = 0;
    for (std::size_t i = 0; i < n; ++i) {
      auto r = find(i);
      if (remap[r] == n) remap[r] = next++;
      id[i] = remap[r];
    }
    return id;
  }
};

inline FiberGraph fiber_graph(const MarkovBasis& mb, const QuotientClass& c) {
  FiberGraph g{fiber(mb.basis, c), {}};
  const auto& pts = g.fiber.points;
  for (std::size_t i = 0; i < pts.size(); ++i)
    for (std::size_t j = i + 1; j < pts.size(); ++j) {
      auto d = pts[i] - pts[j];
      for (const auto& e : mb.elements)
        if (d == e.vector || d == -e.vector) {
          g.edges.emplace_back(i, j);
          break;
        }
    }
  return g;
}

}  // namespace genfrob
