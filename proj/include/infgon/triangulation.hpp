#pragma once

#include <array>
#include <optional>
#include <set>
#include <vector>

#include "infgon/arc.hpp"

namespace infgon {

// A finite, validated fragment of an infinity-gon triangulation. Arcs are
// finite and live inside [lo,hi]; a fountain flag at f means the window is a
// fragment of a fountain triangulation whose infinite arc (f,inf) is implied
// (and never stored). Windows are closed: they decompose into fully
// triangulated polygons, so all triangle counts at interior vertices are
// complete.
struct TriangulationWindow {
  std::int64_t lo = 0;
  std::int64_t hi = 1;
  std::set<Arc> arcs;
  std::optional<std::int64_t> fountain;

  bool contains(const Arc& arc) const { return arcs.count(arc) > 0; }
};

// Builds a window, inserting any missing boundary arcs, and validates it.
TriangulationWindow make_window(std::int64_t lo, std::int64_t hi,
                                std::set<Arc> arcs,
                                std::optional<std::int64_t> fountain = std::nullopt);

// Checks all window invariants; throws CrossingPair, MissingBoundary,
// NotClosed or WrongCount on the first violation found.
void validate_window(const TriangulationWindow& w);

using Triangle = std::array<std::int64_t, 3>;

// All vertex triples whose three sides are arcs of the window.
std::vector<Triangle> triangles(const TriangulationWindow& w);

// Number of triangles incident to v. Only interior vertices (and never the
// fountain point itself) have a complete star inside the window.
std::int64_t quiddity_at(const TriangulationWindow& w, std::int64_t v);

struct Quadrilateral {
  std::array<std::int64_t, 4> vertices;  // increasing
  Arc partner;                           // the flip partner diagonal
};

// The unique quadrilateral having arc as a diagonal, glued from the two
// adjacent triangles. Errors with NotMutableHere for boundary arcs and for
// arcs whose star is not complete inside the window.
Quadrilateral quadrilateral_of(const TriangulationWindow& w, const Arc& arc);

// Replaces arc by its flip partner; the result is validated.
TriangulationWindow flip(const TriangulationWindow& w, const Arc& arc);

struct FountainArcSets {
  std::vector<Arc> a1;               // fountain arcs (f,*)
  std::vector<Arc> a2;               // arcs (y_n, y_{n+1}) between consecutive endpoints
  std::vector<std::int64_t> y;       // absolute endpoints, starting at y_0 = f+1
};

// The two distinguished arc families of a fountain window, read on the right
// side of the fountain point (with y_0 = f+1).
FountainArcSets fountain_arc_sets(const TriangulationWindow& w);

// Reflection (a,b) -> (-b,-a).
TriangulationWindow mirror(const TriangulationWindow& w);

// Enumerates every triangulation of the polygon on vertices lo..hi as a valid
// closed window (Catalan-many); used by exhaustive tests and property checks.
std::vector<std::set<Arc>> all_polygon_triangulations(std::int64_t lo, std::int64_t hi);

}  // namespace infgon
