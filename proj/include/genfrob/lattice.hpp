#pragma once

// Exact integer-lattice primitives for finite-index sublattices H of
// a^perp ∩ Z^n: weight vectors, points, bases, quotient-class labels.

#include <algorithm>
#include <compare>
#include <cstddef>
#include <functional>
#include <numeric>
#include <ostream>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "genfrob/checked.hpp"

namespace genfrob {

struct LatticePoint {
  std::vector<Int> coords;

  LatticePoint() = default;
  explicit LatticePoint(std::vector<Int> c) : coords(std::move(c)) {}
  LatticePoint(std::initializer_list<Int> c) : coords(c) {}

  static LatticePoint zero(std::size_t n) { return LatticePoint(std::vector<Int>(n, 0)); }
  static LatticePoint unit(std::size_t n, std::size_t i) {
    auto p = zero(n);
    p.coords[i] = 1;
    return p;
  }

  std::size_t size() const { return coords.size(); }
  Int operator[](std::size_t i) const { return coords[i]; }
  Int& operator[](std::size_t i) { return coords[i]; }

  bool is_zero() const {
    return std::all_of(coords.begin(), coords.end(), [](Int c) { return c == 0; });
  }

  /// Coordinatewise >= (domination).
  bool dominates(const LatticePoint& other) const {
    for (std::size_t i = 0; i < coords.size(); ++i)
      if (coords[i] < other.coords[i]) return false;
    return true;
  }

  LatticePoint positive_part() const {
    LatticePoint r = *this;
    for (auto& c : r.coords) c = std::max<Int>(c, 0);
    return r;
  }
  LatticePoint negative_part() const {
    LatticePoint r = *this;
    for (auto& c : r.coords) c = c < 0 ? checked::neg(c) : 0;
    return r;
  }

  friend LatticePoint operator+(const LatticePoint& a, const LatticePoint& b) {
    LatticePoint r = a;
    for (std::size_t i = 0; i < r.size(); ++i) r.coords[i] = checked::add(a.coords[i], b.coords[i]);
    return r;
  }
  friend LatticePoint operator-(const LatticePoint& a, const LatticePoint& b) {
    LatticePoint r = a;
    for (std::size_t i = 0; i < r.size(); ++i) r.coords[i] = checked::sub(a.coords[i], b.coords[i]);
    return r;
  }
  friend LatticePoint operator-(const LatticePoint& a) {
    LatticePoint r = a;
    for (auto& c : r.coords) c = checked::neg(c);
    return r;
  }
  friend LatticePoint operator*(Int s, const LatticePoint& a) {
    LatticePoint r = a;
    for (auto& c : r.coords) c = checked::mul(s, c);
    return r;
  }

  friend bool operator==(const LatticePoint&, const LatticePoint&) = default;
  friend auto operator<=>(const LatticePoint& a, const LatticePoint& b) { return a.coords <=> b.coords; }
};

/// Coordinatewise maximum (lcm of Laurent monomials).
inline LatticePoint coordinate_max(const LatticePoint& a, const LatticePoint& b) {
  LatticePoint r = a;
  for (std::size_t i = 0; i < r.size(); ++i) r.coords[i] = std::max(a.coords[i], b.coords[i]);
  return r;
}

inline std::string to_string(const LatticePoint& p) {
  std::string s = "(";
  for (std::size_t i = 0; i < p.size(); ++i) {
    if (i) s += ",";
    s += std::to_string(p[i]);
  }
  return s + ")";
}

inline std::ostream& operator<<(std::ostream& os, const LatticePoint& p) { return os << to_string(p); }

struct LatticePointHash {
  std::size_t operator()(const LatticePoint& p) const noexcept {
    std::size_t h = 0x9e3779b97f4a7c15ULL;
    for (Int c : p.coords) h ^= std::hash<Int>{}(c) + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
    return h;
  }
};

/// Positive weights (a_1..a_n) with n >= 2 and gcd 1.
class WeightVector {
 public:
  explicit WeightVector(std::vector<Int> a) : a_(std::move(a)) {
    if (a_.size() < 2) throw InvalidInput("weight vector needs at least two entries");
    Int g = 0;
    for (Int x : a_) {
      if (x < 1) throw InvalidInput("weights must be positive");
      g = std::gcd(g, x);
    }
    if (g != 1) throw InvalidInput("weights must have gcd 1");
  }

  std::size_t size() const { return a_.size(); }
  Int operator[](std::size_t i) const { return a_[i]; }
  const std::vector<Int>& values() const { return a_; }
  Int min() const { return *std::min_element(a_.begin(), a_.end()); }

  Int degree(std::span<const Int> v) const {
    if (v.size() != a_.size()) throw InvalidInput("dimension mismatch");
    Int d = 0;
    for (std::size_t i = 0; i < a_.size(); ++i) d = checked::add(d, checked::mul(a_[i], v[i]));
    return d;
  }
  Int degree(const LatticePoint& p) const { return degree(std::span<const Int>(p.coords)); }

  friend bool operator==(const WeightVector&, const WeightVector&) = default;

 private:
  std::vector<Int> a_;
};

/// Element of Z^n / H: the a-weighted degree (free part) and the torsion
/// residues read off the Smith normal form of the basis matrix.
struct QuotientClass {
  Int degree = 0;
  std::vector<Int> torsion;

  friend bool operator==(const QuotientClass&, const QuotientClass&) = default;
  friend auto operator<=>(const QuotientClass&, const QuotientClass&) = default;
};

inline std::string to_string(const QuotientClass& c) {
  std::string s = std::to_string(c.degree);
  if (!c.torsion.empty()) {
    s += "[";
    for (std::size_t i = 0; i < c.torsion.size(); ++i) {
      if (i) s += ",";
      s += std::to_string(c.torsion[i]);
    }
    s += "]";
  }
  return s;
}

struct QuotientClassHash {
  std::size_t operator()(const QuotientClass& c) const noexcept {
    std::size_t h = std::hash<Int>{}(c.degree);
    for (Int t : c.torsion) h ^= std::hash<Int>{}(t) + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
    return h;
  }
};

namespace detail {

using Matrix = std::vector<std::vector<Int>>;

struct SmithRows {
  Matrix row_transform;     // U with U * A * V = diag
  std::vector<Int> diagonal;  // |d_t|, t < rank
};

// Smith normal form of an n x m integer matrix of rank m, tracking only the
// row transform. Throws InvalidInput when the rank is smaller than m.
inline SmithRows smith_rows(Matrix a) {
  const std::size_t n = a.size();
  const std::size_t m = n ? a[0].size() : 0;
  Matrix u(n, std::vector<Int>(n, 0));
  for (std::size_t i = 0; i < n; ++i) u[i][i] = 1;

  auto row_axpy = [&](std::size_t dst, std::size_t src, Int q) {
    for (std::size_t j = 0; j < m; ++j) a[dst][j] = checked::sub(a[dst][j], checked::mul(q, a[src][j]));
    for (std::size_t j = 0; j < n; ++j) u[dst][j] = checked::sub(u[dst][j], checked::mul(q, u[src][j]));
  };
  auto col_axpy = [&](std::size_t dst, std::size_t src, Int q) {
    for (std::size_t i = 0; i < n; ++i) a[i][dst] = checked::sub(a[i][dst], checked::mul(q, a[i][src]));
  };

  std::vector<Int> diag;
  for (std::size_t t = 0; t < m; ++t) {
    for (;;) {
      std::size_t pi = n, pj = m;
      Int best = 0;
      for (std::size_t i = t; i < n; ++i)
        for (std::size_t j = t; j < m; ++j)
          if (a[i][j] != 0 && (best == 0 || checked::abs(a[i][j]) < best)) {
            best = checked::abs(a[i][j]);
            pi = i;
            pj = j;
          }
      if (best == 0) throw InvalidInput("basis vectors are linearly dependent");
      std::swap(a[t], a[pi]);
      std::swap(u[t], u[pi]);
      for (std::size_t i = 0; i < n; ++i) std::swap(a[i][t], a[i][pj]);

      bool clean = true;
      for (std::size_t i = t + 1; i < n; ++i) {
        if (a[i][t] == 0) continue;
        row_axpy(i, t, a[i][t] / a[t][t]);
        if (a[i][t] != 0) clean = false;
      }
      for (std::size_t j = t + 1; j < m; ++j) {
        if (a[t][j] == 0) continue;
        col_axpy(j, t, a[t][j] / a[t][t]);
        if (a[t][j] != 0) clean = false;
      }
      if (!clean) continue;

      bool divisible = true;
      for (std::size_t i = t + 1; i < n && divisible; ++i)
        for (std::size_t j = t + 1; j < m; ++j)
          if (a[i][j] % a[t][t] != 0) {
            // Fold row i into the pivot row and retry; the pivot shrinks.
            for (std::size_t c = 0; c < m; ++c) a[t][c] = checked::add(a[t][c], a[i][c]);
            for (std::size_t c = 0; c < n; ++c) u[t][c] = checked::add(u[t][c], u[i][c]);
            divisible = false;
            break;
          }
      if (divisible) break;
    }
    diag.push_back(checked::abs(a[t][t]));
  }
  return {std::move(u), std::move(diag)};
}

inline Int dot(const std::vector<Int>& a, const std::vector<Int>& b) {
  Int s = 0;
  for (std::size_t i = 0; i < a.size(); ++i) s = checked::add(s, checked::mul(a[i], b[i]));
  return s;
}

}  // namespace detail

/// Basis of a finite-index sublattice H of a^perp ∩ Z^n. Construction
/// validates the basis and precomputes the quotient labelling.
class LatticeBasis {
 public:
  LatticeBasis(WeightVector weight, std::vector<LatticePoint> vectors)
      : weight_(std::move(weight)), vectors_(std::move(vectors)) {
    const std::size_t n = weight_.size();
    if (vectors_.size() != n - 1)
      throw InvalidInput("a sublattice basis needs exactly n-1 vectors");
    for (const auto& v : vectors_) {
      if (v.size() != n) throw InvalidInput("basis vector has wrong dimension");
      if (weight_.degree(v) != 0) throw InvalidInput("basis vector " + to_string(v) + " has nonzero weighted degree");
    }
    detail::Matrix cols(n, std::vector<Int>(n - 1));
    for (std::size_t j = 0; j + 1 < n; ++j)
      for (std::size_t i = 0; i < n; ++i) cols[i][j] = vectors_[j][i];
    auto snf = detail::smith_rows(std::move(cols));
    index_ = 1;
    for (std::size_t t = 0; t < snf.diagonal.size(); ++t) {
      index_ = checked::mul(index_, snf.diagonal[t]);
      if (snf.diagonal[t] > 1) {
        moduli_.push_back(snf.diagonal[t]);
        torsion_rows_.push_back(snf.row_transform[t]);
      }
    }
    for (std::size_t i = 0; i < n; ++i) unit_classes_.push_back(label(LatticePoint::unit(n, i)));
  }

  const WeightVector& weight() const { return weight_; }
  const std::vector<LatticePoint>& vectors() const { return vectors_; }
  std::size_t dimension() const { return weight_.size(); }

  /// Nontrivial invariant factors of Z^n/H restricted to its torsion part.
  const std::vector<Int>& torsion_moduli() const { return moduli_; }
  /// Index of H in the full kernel lattice; equals the number of classes per degree.
  Int index() const { return index_; }

  QuotientClass label(const LatticePoint& p) const {
    if (p.size() != dimension()) throw InvalidInput("dimension mismatch");
    QuotientClass c;
    c.degree = weight_.degree(p);
    c.torsion.reserve(moduli_.size());
    for (std::size_t t = 0; t < moduli_.size(); ++t)
      c.torsion.push_back(checked::mod(detail::dot(torsion_rows_[t], p.coords), moduli_[t]));
    return c;
  }

  bool contains(const LatticePoint& p) const {
    auto c = label(p);
    return c.degree == 0 && std::all_of(c.torsion.begin(), c.torsion.end(), [](Int t) { return t == 0; });
  }

  QuotientClass zero_class() const { return QuotientClass{0, std::vector<Int>(moduli_.size(), 0)}; }
  const QuotientClass& unit_class(std::size_t i) const { return unit_classes_[i]; }

  QuotientClass add(const QuotientClass& x, const QuotientClass& y) const {
    QuotientClass r{checked::add(x.degree, y.degree), x.torsion};
    for (std::size_t t = 0; t < moduli_.size(); ++t) r.torsion[t] = checked::mod(x.torsion[t] + y.torsion[t], moduli_[t]);
    return r;
  }
  QuotientClass subtract(const QuotientClass& x, const QuotientClass& y) const {
    QuotientClass r{checked::sub(x.degree, y.degree), x.torsion};
    for (std::size_t t = 0; t < moduli_.size(); ++t) r.torsion[t] = checked::mod(x.torsion[t] - y.torsion[t], moduli_[t]);
    return r;
  }

  /// Mixed-radix encoding of torsion residues into [0, index()).
  std::size_t torsion_index(const std::vector<Int>& torsion) const {
    std::size_t idx = 0;
    for (std::size_t t = 0; t < moduli_.size(); ++t) idx = idx * static_cast<std::size_t>(moduli_[t]) + static_cast<std::size_t>(torsion[t]);
    return idx;
  }
  std::vector<Int> torsion_at(std::size_t idx) const {
    std::vector<Int> r(moduli_.size());
    for (std::size_t t = moduli_.size(); t-- > 0;) {
      r[t] = static_cast<Int>(idx % static_cast<std::size_t>(moduli_[t]));
      idx /= static_cast<std::size_t>(moduli_[t]);
    }
    return r;
  }

 private:
  WeightVector weight_;
  std::vector<LatticePoint> vectors_;
  std::vector<Int> moduli_;
  std::vector<std::vector<Int>> torsion_rows_;
  std::vector<QuotientClass> unit_classes_;
  Int index_ = 1;
};

namespace detail {

inline Int norm2(const LatticePoint& v) { return dot(v.coords, v.coords); }

// Pairwise size reduction: repeatedly subtract rounded projections while the
// norm strictly drops. Keeps kernel bases short without a full LLL.
inline void size_reduce(std::vector<LatticePoint>& basis) {
  bool changed = true;
  while (changed) {
    changed = false;
    for (std::size_t i = 0; i < basis.size(); ++i)
      for (std::size_t j = 0; j < basis.size(); ++j) {
        if (i == j) continue;
        const Int nj = norm2(basis[j]);
        const Int p = dot(basis[i].coords, basis[j].coords);
        // nearest integer to p / nj
        Int q = checked::add(checked::mul(2, p), p >= 0 ? nj : -nj) / checked::mul(2, nj);
        if (q == 0) continue;
        auto cand = basis[i] - q * basis[j];
        if (norm2(cand) < norm2(basis[i])) {
          basis[i] = std::move(cand);
          changed = true;
        }
      }
  }
  for (auto& v : basis) {
    auto first = std::find_if(v.coords.begin(), v.coords.end(), [](Int c) { return c != 0; });
    if (first != v.coords.end() && *first < 0) v = -v;
  }
}

}  // namespace detail

/// Basis of the full kernel lattice a^perp ∩ Z^n (index 1).
inline LatticeBasis kernel_basis(const WeightVector& a) {
  const std::size_t n = a.size();
  std::vector<Int> row = a.values();
  detail::Matrix u(n, std::vector<Int>(n, 0));  // columns are the transform
  for (std::size_t i = 0; i < n; ++i) u[i][i] = 1;
  for (;;) {
    std::size_t piv = n;
    for (std::size_t j = 0; j < n; ++j)
      if (row[j] != 0 && (piv == n || checked::abs(row[j]) < checked::abs(row[piv]))) piv = j;
    bool reduced = false;
    for (std::size_t j = 0; j < n; ++j) {
      if (j == piv || row[j] == 0) continue;
      Int q = row[j] / row[piv];
      row[j] = checked::sub(row[j], checked::mul(q, row[piv]));
      for (std::size_t i = 0; i < n; ++i) u[i][j] = checked::sub(u[i][j], checked::mul(q, u[i][piv]));
      reduced = true;
    }
    if (!reduced) break;
  }
  std::vector<LatticePoint> basis;
  for (std::size_t j = 0; j < n; ++j) {
    if (row[j] != 0) continue;
    LatticePoint v = LatticePoint::zero(n);
    for (std::size_t i = 0; i < n; ++i) v[i] = u[i][j];
    basis.push_back(std::move(v));
  }
  detail::size_reduce(basis);
  return LatticeBasis(a, std::move(basis));
}

inline bool member(const LatticeBasis& b, const LatticePoint& v) { return b.contains(v); }

inline QuotientClass class_label(const LatticeBasis& b, const LatticePoint& p) { return b.label(p); }

inline Int sublattice_index(const LatticeBasis& b) { return b.index(); }

/// Recovers the primitive positive weight vector orthogonal to the given
/// n-1 independent integer vectors.
inline WeightVector weight_from_basis(const std::vector<LatticePoint>& vectors) {
  if (vectors.empty()) throw InvalidInput("empty basis");
  const std::size_t n = vectors[0].size();
  if (vectors.size() + 1 != n) throw InvalidInput("a sublattice basis needs exactly n-1 vectors of length n");
  // Column-reduce the (n-1) x n matrix; the last unimodular column spans the kernel.
  detail::Matrix m(vectors.size(), std::vector<Int>(n));
  for (std::size_t i = 0; i < vectors.size(); ++i) {
    if (vectors[i].size() != n) throw InvalidInput("basis vectors have mixed dimensions");
    m[i] = vectors[i].coords;
  }
  detail::Matrix u(n, std::vector<Int>(n, 0));
  for (std::size_t i = 0; i < n; ++i) u[i][i] = 1;
  std::size_t col = 0;
  for (std::size_t r = 0; r < m.size() && col < n; ++r) {
    for (;;) {
      std::size_t piv = n;
      for (std::size_t j = col; j < n; ++j)
        if (m[r][j] != 0 && (piv == n || checked::abs(m[r][j]) < checked::abs(m[r][piv]))) piv = j;
      if (piv == n) break;
      for (std::size_t i = 0; i < m.size(); ++i) std::swap(m[i][col], m[i][piv]);
      for (std::size_t i = 0; i < n; ++i) std::swap(u[i][col], u[i][piv]);
      bool reduced = false;
      for (std::size_t j = col + 1; j < n; ++j) {
        if (m[r][j] == 0) continue;
        Int q = m[r][j] / m[r][col];
        for (std::size_t i = 0; i < m.size(); ++i) m[i][j] = checked::sub(m[i][j], checked::mul(q, m[i][col]));
        for (std::size_t i = 0; i < n; ++i) u[i][j] = checked::sub(u[i][j], checked::mul(q, u[i][col]));
        reduced = true;
      }
      if (!reduced) {
        ++col;
        break;
      }
    }
  }
  if (col != n - 1) throw InvalidInput("basis vectors are linearly dependent");
  std::vector<Int> w(n);
  for (std::size_t i = 0; i < n; ++i) w[i] = u[i][n - 1];
  if (w[0] < 0)
    for (auto& x : w) x = checked::neg(x);
  return WeightVector(std::move(w));
}

}  // namespace genfrob
