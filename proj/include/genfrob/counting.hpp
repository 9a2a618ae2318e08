#pragma once

// Class-graded denumerants: the number of nonnegative integer points in each
// class of Z^n/H, fibers, dominated lattice points and the m_k sequence.
// Nothing here depends on Markov bases, balls or modules, so it doubles as
// the brute-force oracle for the rest of the library.

#include <algorithm>
#include <limits>
#include <vector>

#include "genfrob/lattice.hpp"

namespace genfrob {

/// min(#{u in N^n : class(u) = c}, cap) for every class c of degree
/// 0..max_degree.
class CountTable {
 public:
  static constexpr std::size_t kMaxEntries = std::size_t{1} << 25;

  CountTable(LatticeBasis basis, Int max_degree, Int cap)
      : basis_(std::move(basis)), max_degree_(max_degree), cap_(cap) {
    if (max_degree < 0) throw InvalidInput("max_degree must be nonnegative");
    if (cap < 1) throw InvalidInput("cap must be at least 1");
    if (cap == std::numeric_limits<Int>::max()) throw OverflowError("cap exceeds representable range");
    width_ = static_cast<std::size_t>(basis_.index());
    const std::size_t rows = static_cast<std::size_t>(max_degree) + 1;
    if (rows > kMaxEntries / width_) throw LimitExceeded("count table would need more than 2^25 entries");
    counts_.assign(rows * width_, 0);
    counts_[0] = 1;

    const std::size_t n = basis_.dimension();
    for (std::size_t i = 0; i < n; ++i) {
      const auto step = static_cast<std::size_t>(basis_.weight()[i]);
      // shift[t] = torsion index of (t - class(e_i))
      std::vector<std::size_t> shift(width_);
      for (std::size_t t = 0; t < width_; ++t) {
        QuotientClass c{0, basis_.torsion_at(t)};
        shift[t] = basis_.torsion_index(basis_.subtract(c, basis_.unit_class(i)).torsion);
      }
      for (std::size_t d = step; d < rows; ++d)
        for (std::size_t t = 0; t < width_; ++t) {
          Int& slot = counts_[d * width_ + t];
          slot = checked::sat_add(slot, counts_[(d - step) * width_ + shift[t]], cap_);
        }
    }
  }

  const LatticeBasis& basis() const { return basis_; }
  Int max_degree() const { return max_degree_; }
  Int cap() const { return cap_; }
  std::size_t classes_per_degree() const { return width_; }

  Int count(Int degree, std::size_t torsion_index) const {
    if (degree < 0) return 0;
    if (degree > max_degree_) throw LimitExceeded("degree beyond count table range");
    return counts_[static_cast<std::size_t>(degree) * width_ + torsion_index];
  }
  Int count(const QuotientClass& c) const { return count(c.degree, basis_.torsion_index(c.torsion)); }

  QuotientClass class_at(Int degree, std::size_t torsion_index) const {
    return QuotientClass{degree, basis_.torsion_at(torsion_index)};
  }

  /// Smallest count over all classes of the given degree.
  Int min_count(Int degree) const {
    Int m = cap_;
    for (std::size_t t = 0; t < width_; ++t) m = std::min(m, count(degree, t));
    return m;
  }
  Int max_count(Int degree) const {
    Int m = 0;
    for (std::size_t t = 0; t < width_; ++t) m = std::max(m, count(degree, t));
    return m;
  }

 private:
  LatticeBasis basis_;
  Int max_degree_;
  Int cap_;
  std::size_t width_ = 1;
  std::vector<Int> counts_;
};

inline CountTable count_table(const LatticeBasis& b, Int max_degree, Int cap) {
  return CountTable(b, max_degree, cap);
}

/// Nonnegative points of one quotient class.
struct Fiber {
  QuotientClass cls;
  std::vector<LatticePoint> points;  // sorted
};

namespace detail {

// Calls visit(u) for each u in N^n with a·u = degree; visit returns false to stop.
template <typename Visit>
bool for_each_of_degree(const WeightVector& a, Int degree, Visit&& visit) {
  if (degree < 0) return true;
  const std::size_t n = a.size();
  LatticePoint u = LatticePoint::zero(n);
  auto rec = [&](auto&& self, std::size_t i, Int rest) -> bool {
    if (i + 1 == n) {
      if (rest % a[i] != 0) return true;
      u[i] = rest / a[i];
      return visit(static_cast<const LatticePoint&>(u));
    }
    for (Int x = 0; x * a[i] <= rest; ++x) {
      u[i] = x;
      if (!self(self, i + 1, rest - x * a[i])) return false;
    }
    u[i] = 0;
    return true;
  };
  return rec(rec, 0, degree);
}

}  // namespace detail

inline Fiber fiber(const LatticeBasis& b, const QuotientClass& c) {
  Fiber f{c, {}};
  detail::for_each_of_degree(b.weight(), c.degree, [&](const LatticePoint& u) {
    if (b.label(u) == c) f.points.push_back(u);
    return true;
  });
  std::sort(f.points.begin(), f.points.end());
  return f;
}

/// Lattice points l in H with l <= p, i.e. p - u for u in the fiber of class(p).
inline std::vector<LatticePoint> dominated_points(const LatticeBasis& b, const LatticePoint& p) {
  auto c = b.label(p);
  if (c.degree < 0) return {};
  std::vector<LatticePoint> out;
  for (const auto& u : fiber(b, c).points) out.push_back(p - u);
  std::sort(out.begin(), out.end());
  return out;
}

inline bool has_nonneg_rep(const LatticeBasis& b, const QuotientClass& c) {
  if (c.degree < 0) return false;
  bool found = false;
  detail::for_each_of_degree(b.weight(), c.degree, [&](const LatticePoint& u) {
    found = b.label(u) == c;
    return !found;
  });
  return found;
}

/// Smallest degree at which some class reaches k nonnegative points.
inline Int m_value(const LatticeBasis& b, Int k) {
  if (k < 1) throw InvalidInput("k must be at least 1");
  Int limit = std::max<Int>(16, 2 * b.weight().min());
  for (;;) {
    CountTable t(b, limit, k);
    for (Int d = 0; d <= limit; ++d)
      if (t.max_count(d) >= k) return d;
    limit = checked::mul(limit, 2);
  }
}

}  // namespace genfrob
