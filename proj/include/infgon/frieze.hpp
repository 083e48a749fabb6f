#pragma once

#include <map>
#include <utility>
#include <vector>

#include "infgon/laurent.hpp"
#include "infgon/triangulation.hpp"

namespace infgon {

enum class FriezeKind { FiniteCC, RightHalf, LeftHalf, Fountain };

const char* to_string(FriezeKind kind);

// Triangular table of frieze entries m_{a,b} indexed by pairs lo <= a < b <= hi,
// with m_{a,a} = 0 implicit. For the Fountain kind the pairs a < f < b form an
// undefined hole: reading them raises FountainCrossing.
template <typename T>
class FriezeArray {
 public:
  using EntryMap = std::map<std::pair<std::int64_t, std::int64_t>, T>;

  FriezeArray(FriezeKind kind, std::int64_t param, std::int64_t lo, std::int64_t hi)
      : kind_(kind), param_(param), lo_(lo), hi_(hi) {}

  FriezeKind kind() const { return kind_; }
  // m for FiniteCC, the anchor vertex for the half kinds, f for Fountain.
  std::int64_t param() const { return param_; }
  std::int64_t lo() const { return lo_; }
  std::int64_t hi() const { return hi_; }

  bool is_hole(std::int64_t a, std::int64_t b) const {
    return kind_ == FriezeKind::Fountain && a < param_ && param_ < b;
  }
  bool defined(std::int64_t a, std::int64_t b) const {
    return a >= lo_ && b <= hi_ && a <= b && !is_hole(a, b);
  }

  T at(std::int64_t a, std::int64_t b) const {
    if (a == b && a >= lo_ && a <= hi_) return T{};
    if (is_hole(a, b))
      fail(ErrorCode::FountainCrossing, "entry crosses the fountain point",
           "(" + std::to_string(a) + "," + std::to_string(b) + ")");
    auto it = entries_.find({a, b});
    if (it == entries_.end())
      fail(ErrorCode::InvalidInput, "entry outside frieze range",
           "(" + std::to_string(a) + "," + std::to_string(b) + ")");
    return it->second;
  }

  void set(std::int64_t a, std::int64_t b, T value) {
    entries_[{a, b}] = std::move(value);
  }

  const EntryMap& entries() const { return entries_; }

  // Quiddity row m_{a,a+2} over the defined pairs, keyed by a.
  std::map<std::int64_t, T> quiddity() const {
    std::map<std::int64_t, T> q;
    for (const auto& [key, value] : entries_)
      if (key.second - key.first == 2) q[key.first] = value;
    return q;
  }

  std::int64_t width() const { return hi_ - lo_ + 1 - 3; }

  friend bool operator==(const FriezeArray&, const FriezeArray&) = default;

 private:
  FriezeKind kind_;
  std::int64_t param_;
  std::int64_t lo_, hi_;
  EntryMap entries_;
};

using IntFrieze = FriezeArray<BigInt>;
using PolyFrieze = FriezeArray<LaurentPoly>;

// Fills a frieze from a quiddity row q (q[i] = m_{L+i, L+i+2} where L is the
// low end of the filled range, i.e. the triangle count at vertex L+i+1) by
// increasing b-a, asserting exact division and positivity at every step.
//   FiniteCC:  q has one value per polygon vertex, read cyclically; the table
//              must close up (DoesNotClose otherwise).
//   RightHalf: entries fill at <= a < b <= at+|q|+1.
//   LeftHalf:  entries fill at-|q|-1 <= a < b <= at.
IntFrieze frieze_from_quiddity(const std::vector<BigInt>& q, FriezeKind kind,
                               std::int64_t at = 0);

// Frieze of a window: quiddity via triangle counts, filled as above. Fountain
// windows produce a Fountain frieze whose hole pairs stay undefined; windows
// without a fountain are treated as closed polygons (FiniteCC).
IntFrieze frieze_from_window(const TriangulationWindow& w);

// Verifies m_{a,b} = 1 exactly for the arcs of w; throws Mismatch otherwise.
void entry_one_iff_arc(const IntFrieze& frieze, const TriangulationWindow& w);

template <typename T>
FriezeArray<T> shift_frieze(const FriezeArray<T>& f, std::int64_t i) {
  FriezeArray<T> out(f.kind(), f.param() + i, f.lo() + i, f.hi() + i);
  for (const auto& [key, value] : f.entries())
    out.set(key.first + i, key.second + i, value);
  return out;
}

}  // namespace infgon
