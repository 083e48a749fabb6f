#include "infgon/extensions.hpp"

#include <algorithm>

namespace infgon {

int ext_dimension(const Arc& m, const Arc& n) {
  const bool mi = m.has_infinite_end();
  const bool ni = n.has_infinite_end();
  if (mi && ni) return m.a < n.a ? 1 : 0;  // family (3)
  if (!mi && !ni) return crossing(m, n) ? 1 : 0;  // family (1), both directions
  return crossing(m, n) ? 1 : 0;  // family (2), both directions
}

std::vector<Arc> extension_middle(const Arc& m, const Arc& n) {
  if (ext_dimension(m, n) != 1)
    fail(ErrorCode::NoExtension, "Ext^1(M,N) vanishes", m.str() + "," + n.str());

  const bool mi = m.has_infinite_end();
  const bool ni = n.has_infinite_end();

  if (mi && ni) {
    // (3): 0 -> (b,inf) -> (a,b) -> (a,inf) -> 0 with M=(a,inf), N=(b,inf)
    return {Arc(m.a, MarkedPoint(n.a))};
  }
  if (!mi && !ni) {
    // (1): with N=(a,b), M=(c,d) interleaved as a<c<b<d
    if (n.a < m.a)
      return {Arc(n.a, m.b), Arc(m.a, n.b)};  // (a,d) + (c,b)
    // second sequence: N=(c,d), M=(a,b), a<c<b<d -> (a,c) + (b,d)
    return {Arc(m.a, MarkedPoint(n.a)), Arc(m.b_int(), n.b)};
  }
  if (ni) {
    // (2) first: M=(a,c) finite, N=(b,inf), a<b<c -> (a,b) + (c,inf)
    return {Arc(m.a, MarkedPoint(n.a)), Arc::infinite(m.b_int())};
  }
  // (2) second: M=(b,inf), N=(a,c), a<b<c -> (a,inf) + (b,c)
  return {Arc::infinite(n.a), Arc(m.a, n.b)};
}

Arc ar_translate(const Arc& arc) {
  if (classify_arc(arc) != ArcKind::FiniteInternal)
    fail(ErrorCode::NoTranslate,
         "no almost split sequence starts or ends at this arc", arc.str());
  return Arc(arc.a - 1, MarkedPoint(arc.b_int() - 1));
}

ShortExactSequence ar_sequence(const Arc& arc) {
  const Arc tau = ar_translate(arc);
  const std::int64_t a = arc.a, b = arc.b_int();
  return ShortExactSequence{tau, {Arc(a - 1, MarkedPoint(b)), Arc(a, MarkedPoint(b - 1))}, arc};
}

ShortExactSequence exchange_sequence(const Arc& arc) {
  const Arc tau = ar_translate(arc);
  const std::int64_t a = arc.a, b = arc.b_int();
  return ShortExactSequence{arc, {Arc(a - 1, MarkedPoint(a)), Arc(b - 1, MarkedPoint(b))}, tau};
}

}  // namespace infgon
