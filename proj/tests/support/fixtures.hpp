#pragma once

// Shared windows and generators for the unit and acceptance suites.

#include <random>
#include <set>
#include <vector>

#include "infgon/triangulation.hpp"

namespace infgon::testing {

inline Arc arc(std::int64_t a, std::int64_t b) { return Arc(a, MarkedPoint(b)); }

// The right-fountain triangulation window 0..8 used as the running example:
// diagonals (0,3),(0,7),(0,8),(1,3),(3,5),(3,7),(5,7).
inline TriangulationWindow running_example() {
  return make_window(0, 8,
                     {arc(0, 3), arc(0, 7), arc(0, 8), arc(1, 3), arc(3, 5),
                      arc(3, 7), arc(5, 7)},
                     0);
}

// Fan window 0..hi with every arc (0,n); a fragment of the fountain
// triangulation {(0,n)} of the completed infinity-gon.
inline TriangulationWindow fan_right(std::int64_t hi) {
  std::set<Arc> arcs;
  for (std::int64_t n = 2; n <= hi; ++n) arcs.insert(arc(0, n));
  return make_window(0, hi, std::move(arcs), 0);
}

// Two-sided fan window -k..k with fountain at 0.
inline TriangulationWindow fan_fountain(std::int64_t k) {
  std::set<Arc> arcs;
  for (std::int64_t n = 2; n <= k; ++n) {
    arcs.insert(arc(0, n));
    arcs.insert(arc(-n, 0));
  }
  arcs.insert(arc(-k, 0));
  arcs.insert(arc(0, k));
  return make_window(-k, k, std::move(arcs), 0);
}

// The leapfrog triangulation restricted to -4..4: zigzag arcs
// (-n,n-1) for n=2..4 and (-n,n) for n=1..4.
inline TriangulationWindow leapfrog() {
  std::set<Arc> arcs;
  for (std::int64_t n = 2; n <= 4; ++n) arcs.insert(arc(-n, n - 1));
  for (std::int64_t n = 1; n <= 4; ++n) arcs.insert(arc(-n, n));
  return make_window(-4, 4, std::move(arcs));
}

// Every triangulation of the polygon lo..hi as a right-fountain window at lo.
inline std::vector<TriangulationWindow> all_fountain_windows(std::int64_t lo,
                                                             std::int64_t hi) {
  std::vector<TriangulationWindow> out;
  for (std::set<Arc>& arcs : all_polygon_triangulations(lo, hi))
    out.push_back(make_window(lo, hi, std::move(arcs), lo));
  return out;
}

inline std::mt19937_64& rng() {
  static std::mt19937_64 engine(20260809);
  return engine;
}

inline std::int64_t random_int(std::int64_t lo, std::int64_t hi) {
  return std::uniform_int_distribution<std::int64_t>(lo, hi)(rng());
}

}  // namespace infgon::testing
