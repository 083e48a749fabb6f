#pragma once

#include <vector>

#include "infgon/arc.hpp"

namespace infgon {

// Ext^1 data and Auslander-Reiten structure for the category of graded MCM
// modules, expressed on arcs. The nonsplit short exact sequences with
// indecomposable end terms come in three families:
//
//   (1) a<c<b<d:  0 -> (a,b) -> (a,d) + (c,b) -> (c,d) -> 0
//                 0 -> (c,d) -> (a,c) + (b,d) -> (a,b) -> 0
//   (2) a<b<c:    0 -> (b,inf) -> (a,b) + (c,inf) -> (a,c) -> 0
//                 0 -> (a,c) -> (a,inf) + (b,c) -> (b,inf) -> 0
//   (3) a<b:      0 -> (b,inf) -> (a,b) -> (a,inf) -> 0

// dim Ext^1(M,N), always 0 or 1.
int ext_dimension(const Arc& m, const Arc& n);

// Middle term of the unique nonsplit extension 0 -> N -> E -> M -> 0, as a
// multiset of arcs. Errors with NoExtension when ext_dimension(M,N) = 0.
std::vector<Arc> extension_middle(const Arc& m, const Arc& n);

// AR-translate (a,b) -> (a-1,b-1); defined for finite internal arcs only.
Arc ar_translate(const Arc& arc);

struct ShortExactSequence {
  Arc start;
  std::vector<Arc> middle;
  Arc end;

  friend bool operator==(const ShortExactSequence&, const ShortExactSequence&) = default;
};

// Almost split sequence ending at (a,b):
//   0 -> (a-1,b-1) -> (a-1,b) + (a,b-1) -> (a,b) -> 0
ShortExactSequence ar_sequence(const Arc& arc);

// Exchange sequence of (a,b):
//   0 -> (a,b) -> (a-1,a) + (b-1,b) -> (a-1,b-1) -> 0
ShortExactSequence exchange_sequence(const Arc& arc);

}  // namespace infgon
