#include "infgon/arc.hpp"

namespace infgon {

ArcKind classify_arc(const Arc& arc) {
  if (arc.b.is_infinite()) return ArcKind::Infinite;
  return arc.length() == 1 ? ArcKind::Boundary : ArcKind::FiniteInternal;
}

bool crossing(const Arc& p, const Arc& q) {
  const MarkedPoint pa(p.a), qa(q.a);
  return (pa < qa && qa < p.b && p.b < q.b) || (qa < pa && pa < q.b && q.b < p.b);
}

}  // namespace infgon
