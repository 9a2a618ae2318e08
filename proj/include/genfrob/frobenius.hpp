#pragma once

// k-th Frobenius numbers of H: the largest weighted degree carrying a class
// with fewer than k nonnegative representatives. Also the m_k / F_k sequence
// analytics (generalised arithmetic progression structure).

#include <algorithm>
#include <optional>
#include <set>
#include <vector>

#include "genfrob/counting.hpp"

namespace genfrob {

struct FrobeniusOptions {
  /// Largest degree any count table may reach; nullopt means no cap.
  std::optional<Int> degree_cap;
};

namespace detail {

inline void check_cap(Int degree, const FrobeniusOptions& opts) {
  if (opts.degree_cap && degree > *opts.degree_cap)
    throw LimitExceeded("degree scan would exceed cap " + std::to_string(*opts.degree_cap));
}

// Upward scan that stops once `window` consecutive degrees have every class
// at count >= k; count(c, d) >= count(c - [e_i], d - a_i) makes that final.
inline Int window_scan(const LatticeBasis& b, Int k, Int window, const FrobeniusOptions& opts) {
  Int limit = std::max<Int>(64, 4 * window);
  if (opts.degree_cap) limit = std::min(limit, std::max<Int>(*opts.degree_cap, 0));
  for (;;) {
    CountTable t(b, limit, k);
    Int last_bad = -1, run = 0;
    for (Int d = 0; d <= limit; ++d) {
      if (t.min_count(d) < k) {
        last_bad = d;
        run = 0;
      } else if (++run >= window) {
        return last_bad;
      }
    }
    const Int next = checked::mul(limit, 2);
    if (opts.degree_cap && limit >= *opts.degree_cap) check_cap(next, opts);
    limit = opts.degree_cap ? std::min(next, *opts.degree_cap) : next;
  }
}

}  // namespace detail

/// F_1 of H; -1 when every nonnegative degree is covered in every class.
inline Int first_frobenius(const LatticeBasis& b, const FrobeniusOptions& opts = {}) {
  return detail::window_scan(b, 1, b.weight().min(), opts);
}

/// F_k via the degree window [m_k - 1, m_k + F_1].
inline Int frobenius(const LatticeBasis& b, Int k, const FrobeniusOptions& opts = {}) {
  if (k < 1) throw InvalidInput("k must be at least 1");
  const Int f1 = first_frobenius(b, opts);
  if (k == 1) return f1;
  const Int mk = m_value(b, k);
  const Int top = checked::add(mk, f1);
  detail::check_cap(top, opts);
  if (top < mk) return mk - 1;
  CountTable t(b, top, k);
  for (Int d = top; d >= mk; --d)
    if (t.min_count(d) < k) return d;
  return mk - 1;
}

/// Independent oracle: upward scan over the count table alone, terminated
/// by a_1 consecutive fully covered degrees. Uses no m_k, F_1 or module data.
inline Int brute_force_frobenius(const LatticeBasis& b, Int k) {
  if (k < 1) throw InvalidInput("k must be at least 1");
  const Int a1 = b.weight()[0];
  for (Int limit = 128;; limit = checked::mul(limit, 2)) {
    CountTable t(b, limit, k);
    Int answer = -1, run = 0;
    for (Int d = 0; d <= limit; ++d) {
      bool short_of_k = false;
      for (std::size_t c = 0; c < t.classes_per_degree(); ++c)
        if (t.count(d, c) < k) short_of_k = true;
      if (short_of_k) {
        answer = d;
        run = 0;
      } else if (++run == a1) {
        return answer;
      }
    }
  }
}

struct BoundChecks {
  bool m_nondecreasing = true;
  bool m_diffs_within_m2 = true;       // 0 <= m_{k+1} - m_k <= m_2
  bool f_within_window = true;         // m_k - 1 <= F_k <= m_k + F_1
  bool dimension_le_t_m2 = true;       // dim <= t (m_2 + 1)
  bool dimension_le_span = true;       // dim <= m_2 + b_t - b_1 + 1
  bool differences_bounded = true;     // |F_{k+1} - F_k| <= m_2 + b_t - b_1

  bool all() const {
    return m_nondecreasing && m_diffs_within_m2 && f_within_window && dimension_le_t_m2 && dimension_le_span &&
           differences_bounded;
  }
};

struct FrobeniusReport {
  Int k_max = 0;
  std::vector<Int> f_values;  // F_1..F_kmax
  std::vector<Int> m_values;
  std::vector<Int> b_values;  // F_k - m_k
  std::vector<Int> f_diffs;
  std::vector<Int> m_diffs;
  std::vector<Int> observed_b_set;  // sorted; observed up to k_max only
  std::size_t dimension = 0;        // |{F_{k+1} - F_k}|
  BoundChecks bound_checks;
};

inline FrobeniusReport sequence_report(const LatticeBasis& b, Int k_max, const FrobeniusOptions& opts = {}) {
  if (k_max < 2) throw InvalidInput("k_max must be at least 2");
  FrobeniusReport r;
  r.k_max = k_max;
  const Int f1 = first_frobenius(b, opts);
  for (Int k = 1; k <= k_max; ++k) {
    r.f_values.push_back(k == 1 ? f1 : frobenius(b, k, opts));
    r.m_values.push_back(m_value(b, k));
    r.b_values.push_back(r.f_values.back() - r.m_values.back());
  }
  for (std::size_t i = 0; i + 1 < r.f_values.size(); ++i) {
    r.f_diffs.push_back(r.f_values[i + 1] - r.f_values[i]);
    r.m_diffs.push_back(r.m_values[i + 1] - r.m_values[i]);
  }
  const std::set<Int> diffs(r.f_diffs.begin(), r.f_diffs.end());
  r.dimension = diffs.size();
  const std::set<Int> bset(r.b_values.begin(), r.b_values.end());
  r.observed_b_set.assign(bset.begin(), bset.end());

  const Int m2 = r.m_values[1];
  const Int b_lo = r.observed_b_set.front(), b_hi = r.observed_b_set.back();
  const auto t = static_cast<Int>(r.observed_b_set.size());
  auto& c = r.bound_checks;
  for (Int d : r.m_diffs) {
    if (d < 0) c.m_nondecreasing = false;
    if (d < 0 || d > m2) c.m_diffs_within_m2 = false;
  }
  for (std::size_t i = 0; i < r.f_values.size(); ++i)
    if (r.f_values[i] < r.m_values[i] - 1 || r.f_values[i] > r.m_values[i] + f1) c.f_within_window = false;
  const auto dim = static_cast<Int>(r.dimension);
  c.dimension_le_t_m2 = dim <= t * (m2 + 1);
  c.dimension_le_span = dim <= m2 + b_hi - b_lo + 1;
  for (Int d : r.f_diffs)
    if (std::abs(d) > m2 + b_hi - b_lo) c.differences_bounded = false;
  return r;
}

}  // namespace genfrob
