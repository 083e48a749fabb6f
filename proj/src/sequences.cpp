#include "infgon/sequences.hpp"

#include <algorithm>

namespace infgon {

BinarySeq BinarySeq::from_string(const std::string& s, std::int64_t origin) {
  BinarySeq seq;
  seq.origin = origin;
  seq.word.reserve(s.size());
  for (char c : s) {
    if (c == ',' || c == ' ') continue;
    if (c != '0' && c != '1')
      fail(ErrorCode::ParseError, "01-word may contain only 0 and 1",
           std::string(1, c));
    seq.word.push_back(c == '1' ? 1 : 0);
  }
  return seq;
}

std::string BinarySeq::str() const {
  std::string s;
  s.reserve(word.size());
  for (auto b : word) s.push_back(b ? '1' : '0');
  return s;
}

namespace {

std::int64_t fountain_point(const TriangulationWindow& w,
                            std::optional<std::int64_t> designated) {
  if (designated) return *designated;
  if (!w.fountain) fail(ErrorCode::NoFountain, "window carries no fountain point");
  return *w.fountain;
}

}  // namespace

BinarySeq x_sequence(const TriangulationWindow& w,
                     std::optional<std::int64_t> designated) {
  const std::int64_t f = fountain_point(w, designated);
  BinarySeq seq;
  seq.origin = 1;
  for (std::int64_t n = 1; n <= w.hi - f - 1; ++n)
    seq.word.push_back(w.contains(Arc(f, MarkedPoint(f + n + 1))) ? 1 : 0);
  return seq;
}

GapSeq y_sequence(const TriangulationWindow& w,
                  std::optional<std::int64_t> designated) {
  const std::int64_t f = fountain_point(w, designated);
  GapSeq y;
  y.values.push_back(1);
  for (std::int64_t l = 2; l <= w.hi - f; ++l)
    if (w.contains(Arc(f, MarkedPoint(f + l)))) y.values.push_back(l);
  return y;
}

GapSeq x_to_y(const BinarySeq& x) {
  GapSeq y;
  y.values.push_back(1);
  for (std::size_t i = 0; i < x.word.size(); ++i)
    if (x.word[i]) y.values.push_back(static_cast<std::int64_t>(i) + x.origin + 1);
  return y;
}

BinarySeq y_to_x(const GapSeq& y, std::size_t length) {
  if (y.values.empty() || y.values.front() != 1)
    fail(ErrorCode::InvalidInput, "gap sequence must start with y_0 = 1");
  for (std::size_t i = 0; i + 1 < y.values.size(); ++i)
    if (y.values[i] >= y.values[i + 1])
      fail(ErrorCode::InvalidInput, "gap sequence must increase strictly");
  BinarySeq x;
  x.origin = 1;
  x.word.assign(length, 0);
  for (std::size_t i = 1; i < y.values.size(); ++i) {
    const std::int64_t pos = y.values[i] - 1;  // arc (0,l) sits at position l-1
    if (pos >= 1 && static_cast<std::size_t>(pos) <= length) x.word[pos - 1] = 1;
  }
  return x;
}

MutationEffect predict_mutation_effect(const TriangulationWindow& w, const Arc& arc) {
  const Quadrilateral quad = quadrilateral_of(w, arc);  // NotMutableHere if not
  const std::int64_t f = fountain_point(w, std::nullopt);

  if (arc.a == f) {
    // Fountain arc (f, y_m): its presence bit clears.
    return MutationEffect{true, arc.b_int() - f - 1, 0};
  }

  const FountainArcSets sets = fountain_arc_sets(w);
  const auto it = std::find(sets.a2.begin(), sets.a2.end(), arc);
  if (it != sets.a2.end()) {
    // Arc (y_m, y_{m+1}): the new arc (f, l) appears, l the apex of the inner
    // triangle of the quadrilateral (f, y_m, l, y_{m+1}).
    std::int64_t apex = 0;
    for (std::int64_t v : quad.vertices)
      if (v > arc.a && v < arc.b_int()) apex = v;
    return MutationEffect{true, apex - f - 1, 1};
  }

  return MutationEffect{};
}

WordDiff compare_words(const BinarySeq& s, const BinarySeq& t) {
  const std::int64_t begin = std::max(s.origin, t.origin);
  const std::int64_t end = std::min(s.origin + static_cast<std::int64_t>(s.size()),
                                    t.origin + static_cast<std::int64_t>(t.size()));
  WordDiff diff;
  for (std::int64_t p = begin; p < end; ++p) {
    ++diff.overlap;
    if (s.word[p - s.origin] != t.word[p - t.origin]) ++diff.differences;
  }
  diff.tail = (s.size() + t.size()) - 2 * diff.overlap;
  return diff;
}

bool sequences_differ_finitely(const BinarySeq& s, const BinarySeq& t) {
  // Finite windows always differ in finitely many places; callers inspect
  // compare_words for the actual count.
  (void)s;
  (void)t;
  return true;
}

bool is_special_window(const TriangulationWindow& w) {
  return !has_consecutive_ones(x_sequence(w));
}

SpecializeResult specialize_with_trace(const TriangulationWindow& w) {
  if (!w.fountain) fail(ErrorCode::NoFountain, "window carries no fountain point");
  const std::int64_t f = *w.fountain;

  SpecializeResult result{w, {}};
  for (;;) {
    const BinarySeq x = x_sequence(result.window);
    std::size_t i = 0;
    while (i + 1 < x.word.size() && !(x.word[i] && x.word[i + 1])) ++i;
    if (i + 1 >= x.word.size()) break;

    // Pair at positions n, n+1 (origin 1): arcs (f, f+n+1) and (f, f+n+2).
    const std::int64_t n = static_cast<std::int64_t>(i) + 1;
    Arc later(f, MarkedPoint(f + n + 2));
    Arc earlier(f, MarkedPoint(f + n + 1));
    // The later arc may close the window; its quadrilateral would then extend
    // beyond hi, so the earlier arc of the pair is flipped instead.
    const Arc chosen = (f + n + 2 == w.hi) ? earlier : later;
    const MutationEffect effect = predict_mutation_effect(result.window, chosen);
    result.window = flip(result.window, chosen);
    result.flipped_positions.push_back(effect.position);
  }
  return result;
}

TriangulationWindow specialize(const TriangulationWindow& w) {
  return specialize_with_trace(w).window;
}

std::pair<BinarySeq, BinarySeq> psi(const TriangulationWindow& w,
                                    std::optional<std::int64_t> designated) {
  const std::int64_t f = fountain_point(w, designated);
  BinarySeq right = x_sequence(w, f);
  BinarySeq left;
  left.origin = 1;
  for (std::int64_t n = 1; n <= f - w.lo - 1; ++n)
    left.word.push_back(w.contains(Arc(f - n - 1, MarkedPoint(f))) ? 1 : 0);
  return {left, right};
}

BinarySeq penrose_encode(const BinarySeq& s) {
  BinarySeq out;
  out.origin = 1;
  for (auto b : s.word) {
    out.word.push_back(b);
    if (b) out.word.push_back(0);
  }
  return out;
}

BinarySeq penrose_decode(const BinarySeq& t) {
  BinarySeq out;
  out.origin = 1;
  std::size_t i = 0;
  while (i < t.word.size()) {
    if (t.word[i]) {
      if (i + 1 < t.word.size() && t.word[i + 1])
        fail(ErrorCode::ConsecutiveOnes, "word contains \"11\"",
             "position " + std::to_string(i + t.origin));
      out.word.push_back(1);
      i += 2;  // consumes "10", or a truncated trailing "1"
    } else {
      out.word.push_back(0);
      i += 1;
    }
  }
  return out;
}

bool has_consecutive_ones(const BinarySeq& s) {
  for (std::size_t i = 0; i + 1 < s.word.size(); ++i)
    if (s.word[i] && s.word[i + 1]) return true;
  return false;
}

}  // namespace infgon
