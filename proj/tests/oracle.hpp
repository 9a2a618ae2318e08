#pragma once

// Brute-force reference computations that share no code with the library:
// plain nested loops over nonnegative solutions and direct lattice
// membership by solving small integer systems.

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <random>
#include <vector>

namespace oracle {

using Vec = std::vector<std::int64_t>;

inline std::int64_t dot(const Vec& a, const Vec& u) {
  std::int64_t s = 0;
  for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * u[i];
  return s;
}

// All u >= 0 with a.u == d, stopping after `limit` solutions.
inline std::vector<Vec> solutions(const Vec& a, std::int64_t d, std::size_t limit = SIZE_MAX) {
  std::vector<Vec> out;
  if (d < 0) return out;
  Vec u(a.size(), 0);
  auto rec = [&](auto&& self, std::size_t i, std::int64_t rest) -> void {
    if (out.size() >= limit) return;
    if (i + 1 == a.size()) {
      if (rest % a[i] == 0) {
        u[i] = rest / a[i];
        out.push_back(u);
      }
      return;
    }
    for (std::int64_t x = 0; x * a[i] <= rest; ++x) {
      u[i] = x;
      self(self, i + 1, rest - x * a[i]);
    }
    u[i] = 0;
  };
  rec(rec, 0, d);
  return out;
}

// v in the span of `basis` (n - 1 vectors in Z^n, n = 2 or 3).
inline bool in_lattice(const std::vector<Vec>& basis, const Vec& v) {
  const std::size_t n = v.size();
  if (n == 2) {
    const Vec& b = basis[0];
    for (std::size_t i = 0; i < 2; ++i)
      if (b[i] != 0) {
        if (v[i] % b[i] != 0) return false;
        const auto x = v[i] / b[i];
        return v[0] == x * b[0] && v[1] == x * b[1];
      }
    return v[0] == 0 && v[1] == 0;
  }
  const Vec &b1 = basis[0], &b2 = basis[1];
  for (std::size_t i = 0; i < 3; ++i)
    for (std::size_t j = i + 1; j < 3; ++j) {
      const auto det = b1[i] * b2[j] - b1[j] * b2[i];
      if (det == 0) continue;
      const auto nx = v[i] * b2[j] - v[j] * b2[i];
      const auto ny = b1[i] * v[j] - b1[j] * v[i];
      if (nx % det != 0 || ny % det != 0) return false;
      const auto x = nx / det, y = ny / det;
      for (std::size_t t = 0; t < 3; ++t)
        if (v[t] != x * b1[t] + y * b2[t]) return false;
      return true;
    }
  return false;
}

// Number of nonnegative u with p - u in H (H given by a basis).
inline std::size_t count_dominated(const Vec& a, const std::vector<Vec>& basis, const Vec& p) {
  std::size_t c = 0;
  for (const auto& u : solutions(a, dot(a, p))) {
    Vec diff(p.size());
    for (std::size_t i = 0; i < p.size(); ++i) diff[i] = p[i] - u[i];
    if (in_lattice(basis, diff)) ++c;
  }
  return c;
}

// F_k for the full kernel: counts are per degree, and count(d + a_i) >= count(d)
// means max(a) consecutive good degrees settle every later degree.
inline std::int64_t frobenius(const Vec& a, std::int64_t k) {
  const auto window = *std::max_element(a.begin(), a.end());
  std::int64_t last = -1, run = 0;
  for (std::int64_t d = 0;; ++d) {
    if (static_cast<std::int64_t>(solutions(a, d, static_cast<std::size_t>(k)).size()) < k) {
      last = d;
      run = 0;
    } else if (++run == window) {
      return last;
    }
  }
}

inline std::int64_t m_value(const Vec& a, std::int64_t k) {
  for (std::int64_t d = 0;; ++d)
    if (static_cast<std::int64_t>(solutions(a, d, static_cast<std::size_t>(k)).size()) >= k) return d;
}

inline Vec random_weights(std::mt19937_64& rng, std::size_t n, std::int64_t max) {
  std::uniform_int_distribution<std::int64_t> dist(1, max);
  for (;;) {
    Vec a(n);
    std::int64_t g = 0;
    for (auto& x : a) {
      x = dist(rng);
      g = std::gcd(g, x);
    }
    if (g == 1) return a;
  }
}

// Sorted, pairwise distinct weights in [lo, hi] with gcd 1.
inline Vec random_distinct_weights(std::mt19937_64& rng, std::size_t n, std::int64_t lo, std::int64_t hi) {
  std::uniform_int_distribution<std::int64_t> dist(lo, hi);
  for (;;) {
    Vec a(n);
    for (auto& x : a) x = dist(rng);
    std::sort(a.begin(), a.end());
    if (std::adjacent_find(a.begin(), a.end()) != a.end()) continue;
    std::int64_t g = 0;
    for (auto x : a) g = std::gcd(g, x);
    if (g == 1) return a;
  }
}

}  // namespace oracle
