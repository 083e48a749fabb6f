#include "infgon/frieze.hpp"

#include <functional>

namespace infgon {

const char* to_string(FriezeKind kind) {
  switch (kind) {
    case FriezeKind::FiniteCC: return "cc";
    case FriezeKind::RightHalf: return "right_half";
    case FriezeKind::LeftHalf: return "left_half";
    case FriezeKind::Fountain: return "fountain";
  }
  return "?";
}

namespace {

std::string pair_str(std::int64_t a, std::int64_t b) {
  return "(" + std::to_string(a) + "," + std::to_string(b) + ")";
}

// The diamond rule solved for the widest entry:
//   m_{a,b} = (m_{a,b-1} * m_{a+1,b} - 1) / m_{a+1,b-1}
BigInt next_entry(const BigInt& left, const BigInt& right, const BigInt& inner,
                  std::int64_t a, std::int64_t b) {
  const BigInt numerator = left * right - 1;
  if (inner == 0 || numerator % inner != 0)
    fail(ErrorCode::NonIntegralEntry, "diamond rule forces a non-integral entry",
         pair_str(a, b));
  BigInt value = numerator / inner;
  if (value <= 0)
    fail(ErrorCode::NonPositiveEntry, "diamond rule forces a non-positive entry",
         pair_str(a, b));
  return value;
}

// Fills all entries u <= a < b <= v into out given the quiddity at the
// interior vertices u+1 .. v-1.
void fill_range(IntFrieze& out, std::int64_t u, std::int64_t v,
                const std::function<BigInt(std::int64_t)>& quiddity) {
  for (std::int64_t a = u; a < v; ++a) out.set(a, a + 1, 1);
  for (std::int64_t gap = 2; gap <= v - u; ++gap) {
    for (std::int64_t a = u; a + gap <= v; ++a) {
      const std::int64_t b = a + gap;
      if (gap == 2) {
        BigInt q = quiddity(a + 1);
        if (q <= 0)
          fail(ErrorCode::NonPositiveEntry, "quiddity entries must be positive",
               pair_str(a, b));
        out.set(a, b, std::move(q));
      } else {
        out.set(a, b, next_entry(out.at(a, b - 1), out.at(a + 1, b),
                                 out.at(a + 1, b - 1), a, b));
      }
    }
  }
}

IntFrieze finite_cc(const std::vector<BigInt>& q, std::int64_t at) {
  const std::int64_t m = static_cast<std::int64_t>(q.size());
  if (m < 3)
    fail(ErrorCode::InvalidInput, "a Conway-Coxeter frieze needs at least 3 vertices");

  for (const BigInt& value : q)
    if (value <= 0)
      fail(ErrorCode::NonPositiveEntry, "quiddity entries must be positive");

  // Each anti-diagonal d_g[a] = m_{a,a+g} is m-periodic in a, because the
  // quiddity is read cyclically, so one period per gap suffices. The strip
  // closes when the gap-(m-1) diagonal is identically 1.
  std::vector<std::vector<BigInt>> diag(m);  // diag[g][(a-at) mod m]
  diag[0].assign(m, 0);
  diag[1].assign(m, 1);
  for (std::int64_t g = 2; g <= m - 1; ++g) {
    diag[g].assign(m, 0);
    for (std::int64_t a = 0; a < m; ++a) {
      if (g == 2)
        diag[g][a] = q[a];
      else
        diag[g][a] = next_entry(diag[g - 1][a], diag[g - 1][(a + 1) % m],
                                diag[g - 2][(a + 1) % m], at + a, at + a + g);
    }
  }
  for (std::int64_t a = 0; a < m; ++a)
    if (diag[m - 1][a] != 1)
      fail(ErrorCode::DoesNotClose, "quiddity does not close up to a finite frieze",
           "row " + std::to_string(at + a));

  IntFrieze out(FriezeKind::FiniteCC, m, at, at + m - 1);
  for (std::int64_t g = 1; g <= m - 1; ++g)
    for (std::int64_t a = 0; a + g <= m - 1; ++a)
      out.set(at + a, at + a + g, diag[g][a]);
  return out;
}

}  // namespace

IntFrieze frieze_from_quiddity(const std::vector<BigInt>& q, FriezeKind kind,
                               std::int64_t at) {
  switch (kind) {
    case FriezeKind::FiniteCC:
      return finite_cc(q, at);
    case FriezeKind::RightHalf: {
      const std::int64_t hi = at + static_cast<std::int64_t>(q.size()) + 1;
      IntFrieze out(FriezeKind::RightHalf, at, at, hi);
      fill_range(out, at, hi, [&](std::int64_t v) { return q[v - at - 1]; });
      return out;
    }
    case FriezeKind::LeftHalf: {
      const std::int64_t lo = at - static_cast<std::int64_t>(q.size()) - 1;
      IntFrieze out(FriezeKind::LeftHalf, at, lo, at);
      fill_range(out, lo, at, [&](std::int64_t v) { return q[v - lo - 1]; });
      return out;
    }
    case FriezeKind::Fountain:
      fail(ErrorCode::InvalidInput,
           "fountain friezes are built from windows; use frieze_from_window");
  }
  fail(ErrorCode::InvalidInput, "unknown frieze kind");
}

IntFrieze frieze_from_window(const TriangulationWindow& w) {
  validate_window(w);

  if (w.fountain && *w.fountain > w.lo && *w.fountain < w.hi) {
    const std::int64_t f = *w.fountain;
    IntFrieze out(FriezeKind::Fountain, f, w.lo, w.hi);
    const auto quiddity = [&](std::int64_t v) { return BigInt(quiddity_at(w, v)); };
    fill_range(out, w.lo, f, quiddity);
    fill_range(out, f, w.hi, quiddity);
    return out;
  }
  if (w.fountain && *w.fountain == w.lo) {
    IntFrieze out(FriezeKind::RightHalf, w.lo, w.lo, w.hi);
    fill_range(out, w.lo, w.hi,
               [&](std::int64_t v) { return BigInt(quiddity_at(w, v)); });
    return out;
  }
  if (w.fountain && *w.fountain == w.hi) {
    IntFrieze out(FriezeKind::LeftHalf, w.hi, w.lo, w.hi);
    fill_range(out, w.lo, w.hi,
               [&](std::int64_t v) { return BigInt(quiddity_at(w, v)); });
    return out;
  }

  // No fountain: a closed triangulated polygon, including triangle counts at
  // the corner vertices. q[i] = m_{lo+i, lo+i+2} is the count at the vertex
  // after lo+i, cyclically.
  const std::vector<Triangle> tris = triangles(w);
  const auto count_at = [&](std::int64_t v) {
    std::int64_t count = 0;
    for (const Triangle& t : tris)
      if (t[0] == v || t[1] == v || t[2] == v) ++count;
    return count;
  };
  const std::int64_t m = w.hi - w.lo + 1;
  std::vector<BigInt> q;
  for (std::int64_t i = 0; i < m; ++i) q.emplace_back(count_at(w.lo + (i + 1) % m));
  return finite_cc(q, w.lo);
}

void entry_one_iff_arc(const IntFrieze& frieze, const TriangulationWindow& w) {
  for (const auto& [key, value] : frieze.entries()) {
    const Arc arc(key.first, MarkedPoint(key.second));
    if ((value == 1) != w.contains(arc))
      fail(ErrorCode::Mismatch, "1-entries do not match the triangulation",
           arc.str());
  }
}

}  // namespace infgon
