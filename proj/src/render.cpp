#include "infgon/render.hpp"

#include <cmath>
#include <cstdio>
#include <sstream>
#include <vector>

namespace infgon {

namespace {

std::string fmt(double v) {
  char buf[32];
  std::snprintf(buf, sizeof(buf), "%.2f", v + 0.0);  // normalize -0
  return buf;
}

struct Point {
  double x, y;
};

// Disc layout: integer vertices spread over the lower arc, accumulation point
// on top.
Point disc_point(const TriangulationWindow& w, std::int64_t v, double r) {
  const double n = static_cast<double>(w.hi - w.lo + 1);
  const double t = (static_cast<double>(v - w.lo) + 0.5) / n;  // 0..1
  const double angle = 90.0 + 360.0 * t;                       // start past the top
  const double rad = angle * 3.14159265358979323846 / 180.0;
  return {r * std::cos(rad), -r * std::sin(rad)};
}

std::string svg_window(const TriangulationWindow& w, const RenderSpec& spec) {
  std::ostringstream out;
  const double s = spec.scale;
  const std::int64_t span = w.hi - w.lo;

  if (spec.geometry == RenderSpec::Geometry::Line) {
    const double margin = s;
    const double height = s * static_cast<double>(span) / 2.0 + 2.0 * margin;
    const double width = s * static_cast<double>(span + 2) + 2.0 * margin;
    const double base = height - margin;
    const auto x_of = [&](std::int64_t v) {
      return margin + s * static_cast<double>(v - w.lo);
    };
    out << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << fmt(width)
        << "\" height=\"" << fmt(height) << "\" viewBox=\"0 0 " << fmt(width) << " "
        << fmt(height) << "\">\n";
    out << "<line class=\"axis\" x1=\"" << fmt(x_of(w.lo) - s / 2.0) << "\" y1=\""
        << fmt(base) << "\" x2=\"" << fmt(x_of(w.hi) + s) << "\" y2=\"" << fmt(base)
        << "\" stroke=\"black\"/>\n";
    for (const Arc& arc : w.arcs) {
      const double x1 = x_of(arc.a), x2 = x_of(arc.b_int());
      const double r = (x2 - x1) / 2.0;
      out << "<path class=\"arc\" d=\"M " << fmt(x1) << " " << fmt(base) << " A "
          << fmt(r) << " " << fmt(r) << " 0 0 1 " << fmt(x2) << " " << fmt(base)
          << "\" fill=\"none\" stroke=\"black\"/>\n";
    }
    if (w.fountain) {
      // Implied infinite arc from the fountain point to the accumulation marker.
      const double xf = x_of(*w.fountain);
      const double xm = x_of(w.hi) + s;
      const double r = (xm - xf) / 2.0;
      out << "<path class=\"arc-inf\" d=\"M " << fmt(xf) << " " << fmt(base) << " A "
          << fmt(r) << " " << fmt(r) << " 0 0 1 " << fmt(xm) << " " << fmt(base)
          << "\" fill=\"none\" stroke=\"black\" stroke-dasharray=\"4 2\"/>\n";
      out << "<circle class=\"accumulation\" cx=\"" << fmt(xm) << "\" cy=\""
          << fmt(base) << "\" r=\"3.00\" fill=\"black\"/>\n";
    }
    for (std::int64_t v = w.lo; v <= w.hi; ++v) {
      out << "<circle class=\"vertex\" cx=\"" << fmt(x_of(v)) << "\" cy=\""
          << fmt(base) << "\" r=\"2.00\" fill=\"black\"/>\n";
      if (spec.labels)
        out << "<text class=\"label\" x=\"" << fmt(x_of(v)) << "\" y=\""
            << fmt(base + 14.0) << "\" text-anchor=\"middle\" font-size=\"10\">" << v
            << "</text>\n";
    }
    out << "</svg>\n";
    return out.str();
  }

  // Disc geometry.
  const double r = 4.0 * s;
  const double c = r + s;
  out << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << fmt(2 * c)
      << "\" height=\"" << fmt(2 * c) << "\" viewBox=\"0 0 " << fmt(2 * c) << " "
      << fmt(2 * c) << "\">\n";
  out << "<circle class=\"boundary\" cx=\"" << fmt(c) << "\" cy=\"" << fmt(c)
      << "\" r=\"" << fmt(r) << "\" fill=\"none\" stroke=\"black\"/>\n";
  const auto at = [&](std::int64_t v) {
    Point p = disc_point(w, v, r);
    return Point{c + p.x, c + p.y};
  };
  for (const Arc& arc : w.arcs) {
    const Point p = at(arc.a), q = at(arc.b_int());
    out << "<line class=\"arc\" x1=\"" << fmt(p.x) << "\" y1=\"" << fmt(p.y)
        << "\" x2=\"" << fmt(q.x) << "\" y2=\"" << fmt(q.y) << "\" stroke=\"black\"/>\n";
  }
  if (w.fountain) {
    const Point p = at(*w.fountain);
    out << "<line class=\"arc-inf\" x1=\"" << fmt(p.x) << "\" y1=\"" << fmt(p.y)
        << "\" x2=\"" << fmt(c) << "\" y2=\"" << fmt(c - r)
        << "\" stroke=\"black\" stroke-dasharray=\"4 2\"/>\n";
  }
  out << "<circle class=\"accumulation\" cx=\"" << fmt(c) << "\" cy=\"" << fmt(c - r)
      << "\" r=\"3.00\" fill=\"black\"/>\n";
  for (std::int64_t v = w.lo; v <= w.hi; ++v) {
    const Point p = at(v);
    out << "<circle class=\"vertex\" cx=\"" << fmt(p.x) << "\" cy=\"" << fmt(p.y)
        << "\" r=\"2.00\" fill=\"black\"/>\n";
    if (spec.labels)
      out << "<text class=\"label\" x=\"" << fmt(p.x) << "\" y=\"" << fmt(p.y + 14.0)
          << "\" text-anchor=\"middle\" font-size=\"10\">" << v << "</text>\n";
  }
  if (spec.labels)
    out << "<text class=\"label-inf\" x=\"" << fmt(c) << "\" y=\"" << fmt(c - r - 6.0)
        << "\" text-anchor=\"middle\" font-size=\"10\">inf</text>\n";
  out << "</svg>\n";
  return out.str();
}

std::string tikz_window(const TriangulationWindow& w, const RenderSpec& spec) {
  std::ostringstream out;
  out << "\\begin{tikzpicture}\n";
  if (spec.geometry == RenderSpec::Geometry::Line) {
    out << "\\draw[thick] (" << w.lo << ",0) -- (" << w.hi << ",0);\n";
    if (spec.labels)
      for (std::int64_t v = w.lo; v <= w.hi; ++v)
        out << "\\node at (" << v << ",-0.3) {" << v << "};\n";
    for (const Arc& arc : w.arcs) {
      if (classify_arc(arc) == ArcKind::Boundary) continue;
      out << "\\draw[thick] (" << arc.a << ",0) to[bend left=45] (" << arc.b_int()
          << ",0);\n";
    }
    if (w.fountain)
      out << "\\draw[thick,dashed] (" << *w.fountain << ",0) to[bend left=50] ("
          << fmt(static_cast<double>(w.hi) + 1.0) << ",0);\n";
  } else {
    out << "\\draw (0,0) circle (3);\n";
    const std::int64_t n = w.hi - w.lo + 1;
    const auto angle = [&](std::int64_t v) {
      return 90.0 + 360.0 * ((static_cast<double>(v - w.lo) + 0.5) /
                             static_cast<double>(n));
    };
    for (std::int64_t v = w.lo; v <= w.hi; ++v) {
      out << "\\node[fill=black,circle,inner sep=1pt] (v" << (v - w.lo) << ") at ("
          << fmt(angle(v)) << ":3) {};\n";
      if (spec.labels)
        out << "\\node at (" << fmt(angle(v)) << ":3.4) {" << v << "};\n";
    }
    out << "\\node[fill=black,circle,inner sep=1.5pt] (vinf) at (90:3) {};\n";
    if (spec.labels) out << "\\node at (90:3.4) {$\\infty$};\n";
    for (const Arc& arc : w.arcs)
      out << "\\draw (v" << (arc.a - w.lo) << ") -- (v" << (arc.b_int() - w.lo)
          << ");\n";
    if (w.fountain)
      out << "\\draw[dashed] (v" << (*w.fountain - w.lo) << ") -- (vinf);\n";
  }
  out << "\\end{tikzpicture}\n";
  return out.str();
}

std::string text_window(const TriangulationWindow& w) {
  std::ostringstream out;
  out << "window " << w.lo << ".." << w.hi;
  if (w.fountain) out << " fountain " << *w.fountain;
  out << "\n";
  for (const Arc& arc : w.arcs) out << "  " << arc.str() << "\n";
  return out.str();
}

template <typename T, typename ToString>
std::string frieze_grid(const FriezeArray<T>& f, ToString cell) {
  // Staircase array: row a lists m_{a,a} .. m_{a,hi}.
  std::vector<std::vector<std::string>> rows;
  std::size_t cell_width = 1;
  for (std::int64_t a = f.lo(); a < f.hi(); ++a) {
    std::vector<std::string> row;
    for (std::int64_t b = f.lo(); b <= f.hi(); ++b) {
      std::string text;
      if (b < a)
        text = "";
      else if (b == a)
        text = "0";
      else if (f.is_hole(a, b))
        text = ".";
      else
        text = cell(f.at(a, b));
      cell_width = std::max(cell_width, text.size());
      row.push_back(std::move(text));
    }
    rows.push_back(std::move(row));
  }
  std::ostringstream out;
  for (std::size_t i = 0; i < rows.size(); ++i) {
    std::ostringstream line;
    line << (f.lo() + static_cast<std::int64_t>(i)) << " |";
    for (const std::string& text : rows[i]) {
      line << ' ';
      for (std::size_t pad = text.size(); pad < cell_width; ++pad) line << ' ';
      line << text;
    }
    std::string l = line.str();
    while (!l.empty() && l.back() == ' ') l.pop_back();
    out << l << "\n";
  }
  return out.str();
}

template <typename T, typename ToString>
std::string render_frieze_impl(const FriezeArray<T>& f, const RenderSpec& spec,
                               ToString cell) {
  const std::string grid = frieze_grid(f, cell);
  if (spec.format == RenderSpec::Format::Text) return grid;
  if (spec.format == RenderSpec::Format::Tikz) {
    std::ostringstream out;
    out << "\\begin{verbatim}\n" << grid << "\\end{verbatim}\n";
    return out.str();
  }
  // SVG: one text row per line, monospace.
  std::ostringstream out;
  std::vector<std::string> lines;
  std::istringstream in(grid);
  for (std::string line; std::getline(in, line);) lines.push_back(line);
  std::size_t longest = 0;
  for (const auto& line : lines) longest = std::max(longest, line.size());
  const double ch = 8.0, lh = 16.0;
  out << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\""
      << fmt(ch * static_cast<double>(longest) + 20.0) << "\" height=\""
      << fmt(lh * static_cast<double>(lines.size()) + 20.0) << "\">\n";
  for (std::size_t i = 0; i < lines.size(); ++i) {
    std::string escaped;
    for (char c : lines[i]) {
      if (c == '<')
        escaped += "&lt;";
      else if (c == '>')
        escaped += "&gt;";
      else if (c == '&')
        escaped += "&amp;";
      else
        escaped += c;
    }
    out << "<text class=\"frieze-row\" x=\"10.00\" y=\""
        << fmt(20.0 + lh * static_cast<double>(i))
        << "\" font-family=\"monospace\" font-size=\"12\" xml:space=\"preserve\">"
        << escaped << "</text>\n";
  }
  out << "</svg>\n";
  return out.str();
}

}  // namespace

std::string render_window(const TriangulationWindow& w, const RenderSpec& spec) {
  switch (spec.format) {
    case RenderSpec::Format::Svg: return svg_window(w, spec);
    case RenderSpec::Format::Tikz: return tikz_window(w, spec);
    case RenderSpec::Format::Text: return text_window(w);
  }
  fail(ErrorCode::InvalidInput, "unknown render format");
}

std::string render_frieze(const IntFrieze& f, const RenderSpec& spec) {
  return render_frieze_impl(f, spec, [](const BigInt& v) { return v.str(); });
}

std::string render_frieze(const PolyFrieze& f, const RenderSpec& spec) {
  return render_frieze_impl(f, spec, [](const LaurentPoly& p) { return p.str(); });
}

}  // namespace infgon
