#include "infgon/triangulation.hpp"

#include <algorithm>

namespace infgon {

namespace {

std::string range_str(std::int64_t u, std::int64_t v) {
  return std::to_string(u) + ".." + std::to_string(v);
}

}  // namespace

TriangulationWindow make_window(std::int64_t lo, std::int64_t hi,
                                std::set<Arc> arcs,
                                std::optional<std::int64_t> fountain) {
  TriangulationWindow w;
  w.lo = lo;
  w.hi = hi;
  w.arcs = std::move(arcs);
  w.fountain = fountain;
  for (std::int64_t i = lo; i < hi; ++i) w.arcs.insert(Arc(i, MarkedPoint(i + 1)));
  validate_window(w);
  return w;
}

void validate_window(const TriangulationWindow& w) {
  if (w.lo >= w.hi)
    fail(ErrorCode::InvalidInput, "window needs lo < hi", range_str(w.lo, w.hi));
  if (w.fountain && (*w.fountain < w.lo || *w.fountain > w.hi))
    fail(ErrorCode::InvalidInput, "fountain point outside window");

  for (const Arc& arc : w.arcs) {
    if (arc.has_infinite_end())
      fail(ErrorCode::InvalidInput,
           "windows store finite arcs only; the fountain flag implies the infinite arc",
           arc.str());
    if (arc.a < w.lo || arc.b_int() > w.hi)
      fail(ErrorCode::InvalidInput, "arc outside window", arc.str());
  }

  for (std::int64_t i = w.lo; i < w.hi; ++i)
    if (!w.contains(Arc(i, MarkedPoint(i + 1))))
      fail(ErrorCode::MissingBoundary, "boundary arc missing",
           Arc(i, MarkedPoint(i + 1)).str());

  const std::vector<Arc> list(w.arcs.begin(), w.arcs.end());
  for (std::size_t i = 0; i < list.size(); ++i)
    for (std::size_t k = i + 1; k < list.size(); ++k)
      if (crossing(list[i], list[k]))
        fail(ErrorCode::CrossingPair, "arcs cross",
             list[i].str() + "," + list[k].str());
  if (w.fountain) {
    // No stored arc may cross the implied infinite arc (f,inf).
    for (const Arc& arc : w.arcs)
      if (arc.a < *w.fountain && arc.b_int() > *w.fountain)
        fail(ErrorCode::CrossingPair, "arc crosses the implied infinite arc",
             arc.str() + ",(" + std::to_string(*w.fountain) + ",inf)");
  }

  // Closure: the window decomposes into closed polygons.
  const auto require_arc = [&](std::int64_t u, std::int64_t v) {
    if (u < v && !w.contains(Arc(u, MarkedPoint(v))))
      fail(ErrorCode::NotClosed, "bounding arc missing", Arc(u, MarkedPoint(v)).str());
  };
  if (w.fountain && *w.fountain > w.lo && *w.fountain < w.hi) {
    require_arc(w.lo, *w.fountain);
    require_arc(*w.fountain, w.hi);
  } else {
    require_arc(w.lo, w.hi);
  }

  // Every arc spans a fully triangulated sub-polygon: a noncrossing family on
  // m consecutive vertices is a triangulation exactly when it has 2m-3 arcs.
  // Checking narrow spans first localizes the report.
  std::vector<Arc> spans;
  for (const Arc& arc : w.arcs)
    if (arc.length() >= 2) spans.push_back(arc);
  std::sort(spans.begin(), spans.end(),
            [](const Arc& l, const Arc& r) { return l.length() < r.length(); });
  for (const Arc& span : spans) {
    const std::int64_t u = span.a, v = span.b_int();
    std::int64_t count = 0;
    for (const Arc& arc : w.arcs)
      if (arc.a >= u && arc.b_int() <= v) ++count;
    const std::int64_t m = v - u + 1;
    if (count != 2 * m - 3)
      fail(ErrorCode::WrongCount, "sub-polygon is not fully triangulated",
           range_str(u, v));
  }
}

std::vector<Triangle> triangles(const TriangulationWindow& w) {
  std::vector<Triangle> out;
  for (const Arc& arc : w.arcs) {
    const std::int64_t u = arc.a, v = arc.b_int();
    for (std::int64_t t = v + 1; t <= w.hi; ++t)
      if (w.contains(Arc(u, MarkedPoint(t))) && w.contains(Arc(v, MarkedPoint(t))))
        out.push_back({u, v, t});
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::int64_t quiddity_at(const TriangulationWindow& w, std::int64_t v) {
  if (v <= w.lo || v >= w.hi)
    fail(ErrorCode::IncompleteAtVertex, "star may extend beyond the window",
         std::to_string(v));
  if (w.fountain && v == *w.fountain)
    fail(ErrorCode::IncompleteAtVertex,
         "the fountain point meets infinitely many triangles", std::to_string(v));
  std::int64_t count = 0;
  for (const Triangle& t : triangles(w))
    if (t[0] == v || t[1] == v || t[2] == v) ++count;
  return count;
}

Quadrilateral quadrilateral_of(const TriangulationWindow& w, const Arc& arc) {
  if (!w.contains(arc))
    fail(ErrorCode::NotMutableHere, "arc not in window", arc.str());
  if (classify_arc(arc) == ArcKind::Boundary)
    fail(ErrorCode::NotMutableHere, "boundary arcs are not mutable", arc.str());

  const std::int64_t a = arc.a, b = arc.b_int();
  std::vector<Triangle> adjacent;
  for (const Triangle& t : triangles(w)) {
    const bool has_a = t[0] == a || t[1] == a || t[2] == a;
    const bool has_b = t[0] == b || t[1] == b || t[2] == b;
    if (has_a && has_b) adjacent.push_back(t);
  }
  if (adjacent.size() != 2)
    fail(ErrorCode::NotMutableHere, "arc star incomplete inside window", arc.str());

  std::set<std::int64_t> vertices;
  std::vector<std::int64_t> apexes;
  for (const Triangle& t : adjacent)
    for (std::int64_t v : t) {
      vertices.insert(v);
      if (v != a && v != b) apexes.push_back(v);
    }

  Quadrilateral quad;
  std::copy(vertices.begin(), vertices.end(), quad.vertices.begin());
  std::sort(apexes.begin(), apexes.end());
  quad.partner = Arc(apexes[0], MarkedPoint(apexes[1]));
  return quad;
}

TriangulationWindow flip(const TriangulationWindow& w, const Arc& arc) {
  const Quadrilateral quad = quadrilateral_of(w, arc);
  TriangulationWindow out = w;
  out.arcs.erase(arc);
  out.arcs.insert(quad.partner);
  validate_window(out);
  return out;
}

FountainArcSets fountain_arc_sets(const TriangulationWindow& w) {
  if (!w.fountain)
    fail(ErrorCode::NoFountain, "window carries no fountain point");
  const std::int64_t f = *w.fountain;

  FountainArcSets sets;
  sets.y.push_back(f + 1);
  for (const Arc& arc : w.arcs)
    if (arc.a == f) {
      sets.a1.push_back(arc);
      if (arc.b_int() >= f + 2) sets.y.push_back(arc.b_int());
    }
  std::sort(sets.y.begin(), sets.y.end());
  for (std::size_t i = 0; i + 1 < sets.y.size(); ++i)
    sets.a2.push_back(Arc(sets.y[i], MarkedPoint(sets.y[i + 1])));
  return sets;
}

TriangulationWindow mirror(const TriangulationWindow& w) {
  TriangulationWindow out;
  out.lo = -w.hi;
  out.hi = -w.lo;
  if (w.fountain) out.fountain = -*w.fountain;
  for (const Arc& arc : w.arcs)
    out.arcs.insert(Arc(-arc.b_int(), MarkedPoint(-arc.a)));
  validate_window(out);
  return out;
}

namespace {

void gen(std::int64_t u, std::int64_t v, std::vector<std::set<Arc>>& out);

// Cartesian combination of the triangulations of two sub-polygons.
void combine(std::int64_t u, std::int64_t apex, std::int64_t v,
             std::vector<std::set<Arc>>& out) {
  std::vector<std::set<Arc>> left, right;
  gen(u, apex, left);
  gen(apex, v, right);
  for (const auto& l : left)
    for (const auto& r : right) {
      std::set<Arc> merged = l;
      merged.insert(r.begin(), r.end());
      if (apex - u >= 2) merged.insert(Arc(u, MarkedPoint(apex)));
      if (v - apex >= 2) merged.insert(Arc(apex, MarkedPoint(v)));
      out.push_back(std::move(merged));
    }
}

void gen(std::int64_t u, std::int64_t v, std::vector<std::set<Arc>>& out) {
  if (v - u < 2) {
    out.emplace_back();
    return;
  }
  for (std::int64_t apex = u + 1; apex < v; ++apex) combine(u, apex, v, out);
}

}  // namespace

std::vector<std::set<Arc>> all_polygon_triangulations(std::int64_t lo, std::int64_t hi) {
  std::vector<std::set<Arc>> diagonals;
  gen(lo, hi, diagonals);
  for (auto& set : diagonals) {
    for (std::int64_t i = lo; i < hi; ++i) set.insert(Arc(i, MarkedPoint(i + 1)));
    if (hi - lo >= 2) set.insert(Arc(lo, MarkedPoint(hi)));
  }
  return diagonals;
}

}  // namespace infgon
