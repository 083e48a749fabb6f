#pragma once

#include <string>

#include "infgon/frieze.hpp"
#include "infgon/triangulation.hpp"

namespace infgon {

// Deterministic rendering of windows and friezes: fixed float formatting, no
// timestamps, byte-stable across runs.
struct RenderSpec {
  enum class Format { Svg, Tikz, Text };
  enum class Geometry { Line, Disc };

  Format format = Format::Svg;
  Geometry geometry = Geometry::Line;
  double scale = 40.0;
  bool labels = true;
};

// Line geometry draws arcs as semicircles over a number line, the way the
// infinity-gon figures are usually drawn; disc geometry places the marked
// points on a circle with the accumulation point on top. A fountain window
// additionally draws the implied infinite arc toward the accumulation marker.
std::string render_window(const TriangulationWindow& w, const RenderSpec& spec);

// Friezes render as the staircase array (rows indexed by a, columns by b);
// hole cells print as a middle dot.
std::string render_frieze(const IntFrieze& f, const RenderSpec& spec);
std::string render_frieze(const PolyFrieze& f, const RenderSpec& spec);

}  // namespace infgon
