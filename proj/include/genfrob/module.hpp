#pragma once

// The S[H]-module M^(k) spanned by Laurent monomials x^u that dominate at
// least k points of H. Generators come from lcms of k-subsets of the ball
// N^(k-1)(0), reduced modulo divisibility up to H.

#include <algorithm>
#include <future>
#include <map>
#include <optional>
#include <set>
#include <thread>
#include <vector>

#include "genfrob/frobenius.hpp"
#include "genfrob/neighbourhood.hpp"

namespace genfrob {

struct LaurentMonomial {
  LatticePoint exponent;

  friend bool operator==(const LaurentMonomial&, const LaurentMonomial&) = default;
  friend auto operator<=>(const LaurentMonomial& a, const LaurentMonomial& b) { return a.exponent <=> b.exponent; }
};

inline std::string render(const LaurentMonomial& m) { return render_monomial(m.exponent.coords); }

inline LaurentMonomial lcm(const LaurentMonomial& x, const LaurentMonomial& y) {
  return {coordinate_max(x.exponent, y.exponent)};
}

/// x^a divides x^b in the Laurent ring sense over S: b - a >= 0.
inline bool divides(const LaurentMonomial& x, const LaurentMonomial& y) { return y.exponent.dominates(x.exponent); }

/// Shared, read-only state for module computations on one sublattice.
class Workspace {
 public:
  explicit Workspace(LatticeBasis b, FrobeniusOptions opts = {})
      : basis_(std::move(b)),
        markov_(lattice_ideal(basis_)),
        moves_(moves(markov_)),
        f1_(first_frobenius(basis_, opts)),
        options_(opts),
        reach_(basis_, std::max<Int>(f1_, 0), 1) {}

  const LatticeBasis& basis() const { return basis_; }
  const MarkovBasis& markov() const { return markov_; }
  const MoveSet& move_set() const { return moves_; }
  Int f1() const { return f1_; }
  const FrobeniusOptions& options() const { return options_; }

  /// Whether class c contains a nonnegative point.
  bool representable(const QuotientClass& c) const {
    if (c.degree < 0) return false;
    if (c.degree > f1_) return true;
    return reach_.count(c) > 0;
  }

 private:
  LatticeBasis basis_;
  MarkovBasis markov_;
  MoveSet moves_;
  Int f1_;
  FrobeniusOptions options_;
  CountTable reach_;
};

/// m' is divisible by m up to H: some translate m + l (l in H) divides m'.
inline bool divides_mod_L(const LatticeBasis& b, const LaurentMonomial& m, const LaurentMonomial& m2) {
  return has_nonneg_rep(b, b.label(m2.exponent - m.exponent));
}

inline bool divides_mod_L(const Workspace& ws, const LaurentMonomial& m, const LaurentMonomial& m2) {
  return ws.representable(ws.basis().label(m2.exponent - m.exponent));
}

/// lcm(0, p_1, ..., p_{k-1}) over (k-1)-subsets of ball \ {0}, one entry per
/// subset in lexicographic subset order. Subsets whose partial lcm exceeds
/// max_degree are pruned.
inline std::vector<LaurentMonomial> candidate_lcms(const Ball& ball, int k, const WeightVector* weight = nullptr,
                                                   std::optional<Int> max_degree = std::nullopt,
                                                   unsigned threads = 1) {
  if (k < 1) throw InvalidInput("k must be at least 1");
  if (ball.radius != k - 1) throw InvalidInput("candidate lcms need the ball of radius k-1");
  if (static_cast<std::size_t>(k) > ball.points.size()) throw InvalidInput("ball has fewer than k points");
  if (max_degree && !weight) throw InvalidInput("degree pruning needs a weight vector");
  const std::size_t n = ball.points.front().size();
  std::vector<LatticePoint> others;
  for (const auto& p : ball.points)
    if (!p.is_zero()) others.push_back(p);
  const std::size_t pick = static_cast<std::size_t>(k) - 1;
  const LatticePoint origin = LatticePoint::zero(n);
  if (pick == 0) return {LaurentMonomial{origin}};

  auto over = [&](const LatticePoint& x) { return max_degree && weight->degree(x) > *max_degree; };
  // Subsets whose smallest index is `first`.
  auto run_from = [&](std::size_t first) {
    std::vector<LaurentMonomial> out;
    auto rec = [&](auto&& self, std::size_t start, std::size_t left, const LatticePoint& acc) -> void {
      if (left == 0) {
        out.push_back({acc});
        return;
      }
      for (std::size_t i = start; i + left <= others.size(); ++i) {
        auto next = coordinate_max(acc, others[i]);
        if (over(next)) continue;
        self(self, i + 1, left - 1, next);
      }
    };
    auto acc = coordinate_max(origin, others[first]);
    if (!over(acc)) rec(rec, first + 1, pick - 1, acc);
    return out;
  };

  const std::size_t firsts = others.size() - pick + 1;
  std::vector<std::vector<LaurentMonomial>> parts(firsts);
  threads = std::max(1u, threads);
  if (threads == 1) {
    for (std::size_t f = 0; f < firsts; ++f) parts[f] = run_from(f);
  } else {
    std::vector<std::future<void>> jobs;
    for (unsigned t = 0; t < threads; ++t)
      jobs.push_back(std::async(std::launch::async, [&, t] {
        for (std::size_t f = t; f < firsts; f += threads) parts[f] = run_from(f);
      }));
    for (auto& j : jobs) j.get();
  }
  std::vector<LaurentMonomial> all;
  for (auto& p : parts) all.insert(all.end(), p.begin(), p.end());
  return all;
}

struct ModuleGenerator {
  LaurentMonomial monomial;           // orbit representative
  std::vector<LatticePoint> support;  // points of H dominated by monomial, sorted
  QuotientClass cls;

  Int degree() const { return cls.degree; }
};

struct ModuleGens {
  Int k = 0;
  Int m_k = 0;
  Int f1 = 0;
  std::vector<ModuleGenerator> generators;  // one per H-orbit, by (degree, torsion)
  std::size_t min_degree_witness = 0;       // index of a generator of degree m_k
};

/// The orbit representative of class c: its lexicographically largest
/// nonnegative point, so the monomial has no negative exponents.
inline LaurentMonomial orbit_representative(const LatticeBasis& b, const QuotientClass& c) {
  auto f = fiber(b, c);
  if (f.points.empty()) throw InvalidInput("class has no nonnegative point: " + to_string(c));
  return {f.points.back()};
}

inline ModuleGens minimal_generators(const Workspace& ws, Int k, unsigned threads = 1) {
  if (k < 1) throw InvalidInput("k must be at least 1");
  const auto& b = ws.basis();
  ModuleGens out;
  out.k = k;
  out.f1 = ws.f1();
  out.m_k = m_value(b, k);
  const Int top = checked::add(out.m_k, std::max<Int>(ws.f1(), 0));
  detail::check_cap(top, ws.options());

  const Ball nb = ball(ws.move_set(), static_cast<int>(k - 1));
  auto cands = candidate_lcms(nb, static_cast<int>(k), &b.weight(), top, threads);

  // One class per H-orbit; divisibility mod H only depends on classes.
  std::set<QuotientClass> classes;
  for (const auto& c : cands) classes.insert(b.label(c.exponent));
  std::vector<QuotientClass> cls(classes.begin(), classes.end());
  std::vector<QuotientClass> minimal;
  for (const auto& c : cls) {
    bool dominated = false;
    for (const auto& d : cls)
      if (d != c && ws.representable(b.subtract(c, d))) {
        dominated = true;
        break;
      }
    if (!dominated) minimal.push_back(c);
  }
  std::sort(minimal.begin(), minimal.end());
  for (const auto& c : minimal) {
    auto rep = orbit_representative(b, c);
    out.generators.push_back({rep, dominated_points(b, rep.exponent), c});
  }
  if (out.generators.empty() || out.generators.front().degree() != out.m_k)
    throw std::logic_error("no generator at degree m_k");
  out.min_degree_witness = 0;
  return out;
}

/// |supp(x^g)| >= k while every x^(g - e_i) dominates fewer than k points.
inline bool is_minimal(const LatticeBasis& b, const LaurentMonomial& g, Int k) {
  if (static_cast<Int>(dominated_points(b, g.exponent).size()) < k) return false;
  for (std::size_t i = 0; i < g.exponent.size(); ++i) {
    auto h = g.exponent - LatticePoint::unit(g.exponent.size(), i);
    if (static_cast<Int>(dominated_points(b, h).size()) >= k) return false;
  }
  return true;
}

/// A minimal generator of M^(k) dominating more than k points.
inline bool is_exceptional(const LatticeBasis& b, const LaurentMonomial& g, Int k) {
  return is_minimal(b, g, k) && static_cast<Int>(dominated_points(b, g.exponent).size()) > k;
}

/// {1} together with every H-translate of a minimal generator of M^(k) that
/// does not dominate 0 and whose support meets N^(k-1)(0).
inline std::vector<LaurentMonomial> modified_min_gens(const Workspace& ws, Int k) {
  const auto gens = minimal_generators(ws, k);
  const auto nb = ball(ws.move_set(), static_cast<int>(k - 1));
  const std::size_t n = ws.basis().dimension();
  std::set<LaurentMonomial> out{LaurentMonomial{LatticePoint::zero(n)}};
  for (const auto& g : gens.generators)
    for (const auto& s : g.support)
      for (const auto& p : nb.points) {
        const LatticePoint shift = p - s;
        // 0 in supp(g) + shift  <=>  -shift in supp(g)
        if (std::binary_search(g.support.begin(), g.support.end(), -shift)) continue;
        out.insert({g.monomial.exponent + shift});
      }
  return {out.begin(), out.end()};
}

inline LaurentMonomial phi(const LaurentMonomial& g1, const LaurentMonomial& g2) { return lcm(g1, g2); }

enum class GeneratorCase { Exceptional, SyzygyOfTwoGenerators, SyzygyWithUnit };

inline const char* to_string(GeneratorCase c) {
  switch (c) {
    case GeneratorCase::Exceptional: return "exceptional";
    case GeneratorCase::SyzygyOfTwoGenerators: return "syzygy_of_two_generators";
    case GeneratorCase::SyzygyWithUnit: return "syzygy_with_unit";
  }
  return "?";
}

struct Classification {
  GeneratorCase kind{};
  std::vector<LaurentMonomial> witnesses;
  std::vector<LatticePoint> support;
};

/// Which way a minimal generator g of M^(k_next) arises from M^(k_next - 1):
/// all lcms of (k_next-1)-subsets of supp(g) agree (exceptional), two of them
/// are incomparable (lcm of two generators), or one is a proper divisor of g
/// (lcm of a generator with 1). Witnesses are the first certificates in
/// lexicographic subset order.
inline Classification classify(const LatticeBasis& b, const LaurentMonomial& g, Int k_next) {
  if (k_next < 2) throw InvalidInput("classification needs k >= 2");
  if (!is_minimal(b, g, k_next)) throw InvalidInput("not a minimal generator of M^(k): " + render(g));
  Classification out;
  out.support = dominated_points(b, g.exponent);
  const auto& u = out.support;
  const std::size_t s = static_cast<std::size_t>(k_next - 1);

  std::vector<LatticePoint> lcms;
  std::vector<std::size_t> idx(s);
  for (std::size_t i = 0; i < s; ++i) idx[i] = i;
  for (;;) {
    LatticePoint acc = u[idx[0]];
    for (std::size_t i = 1; i < s; ++i) acc = coordinate_max(acc, u[idx[i]]);
    lcms.push_back(std::move(acc));
    std::size_t i = s;
    while (i > 0 && idx[i - 1] == u.size() - s + i - 1) --i;
    if (i == 0) break;
    ++idx[i - 1];
    for (std::size_t j = i; j < s; ++j) idx[j] = idx[j - 1] + 1;
  }

  if (std::all_of(lcms.begin(), lcms.end(), [&](const LatticePoint& l) { return l == lcms.front(); })) {
    out.kind = GeneratorCase::Exceptional;
    out.witnesses.push_back({lcms.front()});
    return out;
  }
  for (std::size_t i = 0; i < lcms.size(); ++i)
    for (std::size_t j = i + 1; j < lcms.size(); ++j)
      if (!lcms[i].dominates(lcms[j]) && !lcms[j].dominates(lcms[i])) {
        out.kind = GeneratorCase::SyzygyOfTwoGenerators;
        out.witnesses = {{lcms[i]}, {lcms[j]}};
        return out;
      }
  for (const auto& l : lcms)
    if (l != g.exponent && g.exponent.dominates(l)) {
      out.kind = GeneratorCase::SyzygyWithUnit;
      out.witnesses = {{l}};
      return out;
    }
  throw std::logic_error("generator fits no case: " + render(g));
}

inline Classification classify(const Workspace& ws, const LaurentMonomial& g, Int k_next) {
  return classify(ws.basis(), g, k_next);
}

}  // namespace genfrob
