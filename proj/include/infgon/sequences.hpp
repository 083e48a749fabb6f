#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "infgon/triangulation.hpp"

namespace infgon {

// Finite 01-word. Position indices start at origin (default 1); for the
// x-word of a fountain window, position n records the arc (f, f+n+1).
struct BinarySeq {
  std::vector<std::uint8_t> word;
  std::int64_t origin = 1;

  static BinarySeq from_string(const std::string& s, std::int64_t origin = 1);
  std::string str() const;
  std::size_t size() const { return word.size(); }

  friend bool operator==(const BinarySeq&, const BinarySeq&) = default;
};

// Strictly increasing positive integers, prefixed with y_0 = 1. Values are
// relative to the fountain point.
struct GapSeq {
  std::vector<std::int64_t> values;

  friend bool operator==(const GapSeq&, const GapSeq&) = default;
};

// The x-word of the (right) fountain of a window: position n is 1 iff the arc
// (f, f+n+1) is present, for n = 1 .. hi-f-1. A designated fountain point may
// be supplied for windows that carry no fountain flag (the word is then read
// off without implying the infinite arc).
BinarySeq x_sequence(const TriangulationWindow& w,
                     std::optional<std::int64_t> designated = std::nullopt);

// y_0 = 1 followed by every l >= 2 with (f, f+l) present, increasing.
GapSeq y_sequence(const TriangulationWindow& w,
                  std::optional<std::int64_t> designated = std::nullopt);

GapSeq x_to_y(const BinarySeq& x);
BinarySeq y_to_x(const GapSeq& y, std::size_t length);

struct MutationEffect {
  bool changed = false;
  std::int64_t position = 0;       // word position that flips
  std::uint8_t new_value = 0;

  friend bool operator==(const MutationEffect&, const MutationEffect&) = default;
};

// Predicts the effect of flip(w, arc) on the x-word: a fountain arc (f,y_m)
// flips position y_m-1 to 0; an arc between consecutive fountain endpoints
// flips position l-1 to 1 where l is the apex of its inner triangle; any
// other mutation leaves the word unchanged. (Positions relative to f.)
MutationEffect predict_mutation_effect(const TriangulationWindow& w, const Arc& arc);

struct WordDiff {
  std::size_t differences = 0;  // over the aligned overlap
  std::size_t overlap = 0;
  std::size_t tail = 0;         // positions covered by only one word
};

WordDiff compare_words(const BinarySeq& s, const BinarySeq& t);

// Window-scale surrogate for the tail-equivalence of infinite sequences: on a
// finite overlap the difference count is always finite, so this reports the
// count and leaves thresholds to the caller.
bool sequences_differ_finitely(const BinarySeq& s, const BinarySeq& t);

// True when no arc between consecutive fountain endpoints y_m, y_{m+1}
// (m >= 1) is a boundary arc; equivalently the x-word has no consecutive 1s.
bool is_special_window(const TriangulationWindow& w);

struct SpecializeResult {
  TriangulationWindow window;
  std::vector<std::int64_t> flipped_positions;  // word positions cleared, in order
};

// Eliminates consecutive-1 pairs of the x-word by mutating at fountain arcs,
// scanning left to right; for each pair the later fountain arc is flipped,
// falling back to the earlier one when the later arc closes the window (its
// quadrilateral would extend beyond hi). The result is an equivalent special
// window of the same bounds.
SpecializeResult specialize_with_trace(const TriangulationWindow& w);
TriangulationWindow specialize(const TriangulationWindow& w);

// Pair of x-words (left fountain, right fountain) of a fountain window.
std::pair<BinarySeq, BinarySeq> psi(const TriangulationWindow& w,
                                    std::optional<std::int64_t> designated = std::nullopt);

// Substitution 1 -> 10, 0 -> 0; its image never contains "11".
BinarySeq penrose_encode(const BinarySeq& s);

// Greedy left-to-right inverse of penrose_encode. A trailing bare "1" is
// accepted as a truncated "10". Errors with ConsecutiveOnes on input "11".
BinarySeq penrose_decode(const BinarySeq& t);

bool has_consecutive_ones(const BinarySeq& s);

}  // namespace infgon
