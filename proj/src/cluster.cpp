#include "infgon/cluster.hpp"

#include <algorithm>

namespace infgon {

const char* to_string(StringSide side) {
  return side == StringSide::Near ? "near" : "far";
}

ClusterSeed initial_seed(const TriangulationWindow& w) {
  validate_window(w);
  ClusterSeed seed{w, {}};
  for (const Arc& arc : w.arcs)
    seed.assignment.emplace(arc, LaurentPoly::variable(arc));
  return seed;
}

ClusterSeed flip_seed(const ClusterSeed& seed, const Arc& arc) {
  const Quadrilateral quad = quadrilateral_of(seed.window, arc);
  const auto& [a, b, c, d] = quad.vertices;
  const auto value = [&](std::int64_t u, std::int64_t v) -> const LaurentPoly& {
    return seed.assignment.at(Arc(u, MarkedPoint(v)));
  };
  // Ptolemy exchange on the quadrilateral a<b<c<d.
  const LaurentPoly numerator = value(a, b) * value(c, d) + value(b, c) * value(a, d);

  ClusterSeed out;
  out.window = flip(seed.window, arc);
  out.assignment = seed.assignment;
  out.assignment.erase(arc);
  out.assignment.emplace(quad.partner, exact_div(numerator, seed.assignment.at(arc)));
  return out;
}

namespace {

void check_inside_window(const TriangulationWindow& w, const Arc& gamma) {
  if (gamma.has_infinite_end() || gamma.a < w.lo || gamma.b_int() > w.hi)
    fail(ErrorCode::IncompleteCrossings,
         "arc reaches beyond the window; its crossings are not all visible",
         gamma.str());
  if (w.fountain && gamma.a < *w.fountain && gamma.b_int() > *w.fountain)
    fail(ErrorCode::FountainCrossing,
         "arc crosses the fountain point; its character is a genuine series",
         gamma.str());
}

}  // namespace

std::vector<Arc> crossings_in_order(const TriangulationWindow& w, const Arc& gamma) {
  check_inside_window(w, gamma);
  const std::int64_t ga = gamma.a;

  // Walking gamma from its left endpoint: first leave the nested spans that
  // contain ga (innermost first), then enter the nested spans that contain gb
  // (outermost first).
  std::vector<Arc> exits, enters;
  for (const Arc& arc : w.arcs) {
    if (!crossing(arc, gamma)) continue;
    if (arc.a < ga)
      exits.push_back(arc);  // span contains ga, inner endpoint arc.b
    else
      enters.push_back(arc);  // span contains gb, inner endpoint arc.a
  }
  std::sort(exits.begin(), exits.end(), [](const Arc& l, const Arc& r) {
    if (l.b_int() != r.b_int()) return l.b_int() < r.b_int();
    return l.a > r.a;
  });
  std::sort(enters.begin(), enters.end(), [](const Arc& l, const Arc& r) {
    if (l.a != r.a) return l.a < r.a;
    return l.b_int() > r.b_int();
  });

  std::vector<Arc> ordered = std::move(exits);
  ordered.insert(ordered.end(), enters.begin(), enters.end());
  return ordered;
}

std::pair<LaurentPoly, int> cluster_variable_with_flips(const ClusterSeed& seed,
                                                        const Arc& gamma) {
  check_inside_window(seed.window, gamma);
  ClusterSeed current = seed;
  int flips = 0;
  for (;;) {
    auto it = current.assignment.find(gamma);
    if (it != current.assignment.end()) return {it->second, flips};
    const std::vector<Arc> crossed = crossings_in_order(current.window, gamma);
    if (crossed.empty())
      fail(ErrorCode::InvalidInput, "arc neither in nor crossing the seed",
           gamma.str());
    current = flip_seed(current, crossed.front());
    ++flips;
  }
}

LaurentPoly cluster_variable(const ClusterSeed& seed, const Arc& gamma) {
  return cluster_variable_with_flips(seed, gamma).first;
}

PolyFrieze coefficient_frieze(const TriangulationWindow& w) {
  const ClusterSeed seed = initial_seed(w);
  FriezeKind kind = FriezeKind::FiniteCC;
  std::int64_t param = w.hi - w.lo + 1;
  if (w.fountain) {
    if (*w.fountain == w.lo) {
      kind = FriezeKind::RightHalf;
      param = w.lo;
    } else if (*w.fountain == w.hi) {
      kind = FriezeKind::LeftHalf;
      param = w.hi;
    } else {
      kind = FriezeKind::Fountain;
      param = *w.fountain;
    }
  }
  PolyFrieze out(kind, param, w.lo, w.hi);
  for (std::int64_t a = w.lo; a < w.hi; ++a)
    for (std::int64_t b = a + 1; b <= w.hi; ++b) {
      if (out.is_hole(a, b)) continue;
      out.set(a, b, cluster_variable(seed, Arc(a, MarkedPoint(b))));
    }
  return out;
}

CrossingString crossing_string(const TriangulationWindow& w, const Arc& gamma) {
  CrossingString cs;
  cs.gamma = gamma;
  cs.crossed = crossings_in_order(w, gamma);
  for (std::size_t i = 0; i + 1 < cs.crossed.size(); ++i) {
    const Arc& cur = cs.crossed[i];
    const Arc& next = cs.crossed[i + 1];
    std::int64_t shared = 0;
    bool found = false;
    for (std::int64_t u : {cur.a, cur.b_int()})
      for (std::int64_t v : {next.a, next.b_int()})
        if (u == v) {
          shared = u;
          found = true;
        }
    if (!found)
      fail(ErrorCode::IncompleteCrossings,
           "consecutive crossed arcs share no endpoint", gamma.str());
    cs.shared.push_back(shared);
    const bool near = shared > gamma.a && shared < gamma.b_int();
    cs.sides.push_back(near ? StringSide::Near : StringSide::Far);
  }
  return cs;
}

BigInt submodule_count(const CrossingString& cs) {
  const std::size_t n = cs.crossed.size();
  if (n == 0) return 1;
  // Count subsets closed under the arrows: near side means arrow i -> i+1
  // (i in I forces i+1 in I), far side the reverse. Linear DP over positions.
  BigInt in = 1, out = 1;  // subsets of the prefix with position i in / out
  for (std::size_t i = 0; i + 1 < n; ++i) {
    BigInt next_in, next_out;
    if (cs.sides[i] == StringSide::Near) {
      // forbidden: i in I, i+1 not in I
      next_in = in + out;
      next_out = out;
    } else {
      // arrow i+1 -> i; forbidden: i+1 in I, i not in I
      next_in = in;
      next_out = in + out;
    }
    in = next_in;
    out = next_out;
  }
  return in + out;
}

}  // namespace infgon
