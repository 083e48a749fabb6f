#pragma once

#include <cstdint>
#include <string>

#include "infgon/errors.hpp"

namespace infgon {

// A marked point of the completed infinity-gon: an integer on the boundary
// line, or the unique accumulation point, which compares strictly greater
// than every integer.
class MarkedPoint {
 public:
  constexpr MarkedPoint(std::int64_t v = 0) : inf_(false), v_(v) {}

  static constexpr MarkedPoint infinity() {
    MarkedPoint p;
    p.inf_ = true;
    p.v_ = 0;
    return p;
  }

  constexpr bool is_infinite() const { return inf_; }

  std::int64_t value() const {
    if (inf_) fail(ErrorCode::InvalidInput, "accumulation point has no integer value");
    return v_;
  }

  friend constexpr bool operator==(MarkedPoint l, MarkedPoint r) {
    return l.inf_ == r.inf_ && l.v_ == r.v_;
  }
  friend constexpr bool operator<(MarkedPoint l, MarkedPoint r) {
    if (l.inf_ != r.inf_) return r.inf_;
    return !l.inf_ && l.v_ < r.v_;
  }
  friend constexpr bool operator>(MarkedPoint l, MarkedPoint r) { return r < l; }
  friend constexpr bool operator<=(MarkedPoint l, MarkedPoint r) { return !(r < l); }
  friend constexpr bool operator>=(MarkedPoint l, MarkedPoint r) { return !(l < r); }

  std::string str() const { return inf_ ? "inf" : std::to_string(v_); }

 private:
  bool inf_;
  std::int64_t v_;
};

enum class ArcKind { Boundary, FiniteInternal, Infinite };

// An arc (a,b) of the completed infinity-gon with a < b. The left endpoint is
// always an integer; the right endpoint may be the accumulation point.
struct Arc {
  std::int64_t a = 0;
  MarkedPoint b = MarkedPoint(1);

  Arc() = default;
  Arc(std::int64_t a_, MarkedPoint b_) : a(a_), b(b_) {
    if (!(MarkedPoint(a) < b))
      fail(ErrorCode::InvalidInput, "arc endpoints must satisfy a < b",
           "(" + std::to_string(a_) + "," + b_.str() + ")");
  }

  static Arc infinite(std::int64_t a_) { return Arc(a_, MarkedPoint::infinity()); }

  bool has_infinite_end() const { return b.is_infinite(); }
  std::int64_t b_int() const { return b.value(); }
  // b - a for finite arcs
  std::int64_t length() const { return b.value() - a; }

  friend bool operator==(const Arc& l, const Arc& r) { return l.a == r.a && l.b == r.b; }
  friend bool operator!=(const Arc& l, const Arc& r) { return !(l == r); }
  friend bool operator<(const Arc& l, const Arc& r) {
    if (l.a != r.a) return l.a < r.a;
    return l.b < r.b;
  }

  std::string str() const { return "(" + std::to_string(a) + "," + b.str() + ")"; }
};

ArcKind classify_arc(const Arc& arc);

// Strict interleaving a < c < b < d (in either role), with the accumulation
// point participating as the maximal point. Two infinite arcs never cross.
bool crossing(const Arc& p, const Arc& q);

}  // namespace infgon
