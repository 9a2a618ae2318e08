#pragma once

// The lattice graph G_H (edges are Markov moves), its metric, and balls
// N^(k)(0) computed by breadth-first search.

#include <algorithm>
#include <optional>
#include <unordered_map>
#include <unordered_set>
#include <vector>

#include "genfrob/ideal.hpp"

namespace genfrob {

struct MoveSet {
  LatticeBasis basis;
  std::vector<LatticePoint> moves;  // closed under negation, sorted
};

inline MoveSet moves(const MarkovBasis& mb) {
  if (mb.elements.empty()) throw InvalidInput("empty Markov basis has no moves");
  MoveSet ms{mb.basis, {}};
  for (const auto& e : mb.elements) {
    ms.moves.push_back(e.vector);
    ms.moves.push_back(-e.vector);
  }
  std::sort(ms.moves.begin(), ms.moves.end());
  ms.moves.erase(std::unique(ms.moves.begin(), ms.moves.end()), ms.moves.end());
  return ms;
}

struct Ball {
  int radius = 0;
  std::vector<LatticePoint> points;  // sorted
  std::vector<int> distances;        // parallel to points

  bool contains(const LatticePoint& p) const { return std::binary_search(points.begin(), points.end(), p); }

  std::optional<int> distance_to(const LatticePoint& p) const {
    auto it = std::lower_bound(points.begin(), points.end(), p);
    if (it == points.end() || *it != p) return std::nullopt;
    return distances[static_cast<std::size_t>(it - points.begin())];
  }
};

inline Ball ball(const MoveSet& ms, int k) {
  if (k < 0) throw InvalidInput("radius must be nonnegative");
  const std::size_t n = ms.basis.dimension();
  std::unordered_map<LatticePoint, int, LatticePointHash> seen;
  std::vector<LatticePoint> frontier{LatticePoint::zero(n)};
  seen.emplace(frontier.front(), 0);
  for (int d = 1; d <= k && !frontier.empty(); ++d) {
    std::vector<LatticePoint> next;
    for (const auto& p : frontier)
      for (const auto& m : ms.moves) {
        auto q = p + m;
        if (seen.emplace(q, d).second) next.push_back(std::move(q));
      }
    std::sort(next.begin(), next.end());
    frontier = std::move(next);
  }
  Ball b;
  b.radius = k;
  for (auto& [p, d] : seen) b.points.push_back(p);
  std::sort(b.points.begin(), b.points.end());
  for (const auto& p : b.points) b.distances.push_back(seen.at(p));
  return b;
}

/// Shortest move-path length between u and v, or nullopt beyond max_radius.
inline std::optional<int> distance(const MoveSet& ms, const LatticePoint& u, const LatticePoint& v, int max_radius = 32) {
  if (!ms.basis.contains(u) || !ms.basis.contains(v)) throw InvalidInput("distance is only defined on lattice points");
  const LatticePoint target = v - u;
  if (target.is_zero()) return 0;
  // Bidirectional BFS from 0 and from target; the move set is symmetric.
  std::unordered_map<LatticePoint, int, LatticePointHash> from_start{{LatticePoint::zero(u.size()), 0}}, from_end{{target, 0}};
  std::vector<LatticePoint> fs{LatticePoint::zero(u.size())}, fe{target};
  int ds = 0, de = 0;
  while (ds + de < max_radius && !fs.empty() && !fe.empty()) {
    const bool grow_start = fs.size() <= fe.size();
    auto& frontier = grow_start ? fs : fe;
    auto& mine = grow_start ? from_start : from_end;
    auto& other = grow_start ? from_end : from_start;
    int& depth = grow_start ? ds : de;
    ++depth;
    std::vector<LatticePoint> next;
    std::optional<int> best;
    for (const auto& p : frontier)
      for (const auto& m : ms.moves) {
        auto q = p + m;
        if (!mine.emplace(q, depth).second) continue;
        if (auto it = other.find(q); it != other.end()) {
          int total = depth + it->second;
          if (!best || total < *best) best = total;
        }
        next.push_back(std::move(q));
      }
    if (best) return best;
    frontier = std::move(next);
  }
  return std::nullopt;
}

}  // namespace genfrob
