#pragma once

#include <map>
#include <vector>

#include "infgon/frieze.hpp"
#include "infgon/laurent.hpp"
#include "infgon/triangulation.hpp"

namespace infgon {

// Cluster variables with coefficients over a triangulation window, computed by
// the Ptolemy flip recursion in the homogeneous coordinates of the infinite
// Grassmannian of planes: every flip of a quadrilateral a<b<c<d preserves
//   p_{a,c} * p_{b,d} = p_{a,b} * p_{c,d} + p_{b,c} * p_{a,d}.

struct ClusterSeed {
  TriangulationWindow window;
  std::map<Arc, LaurentPoly> assignment;
};

// Seed assigning each arc of the window its own variable x_{a,b}.
ClusterSeed initial_seed(const TriangulationWindow& w);

// Flips one diagonal; the new diagonal receives the exchange polynomial
// exact_div(p_{a,b} p_{c,d} + p_{b,c} p_{a,d}, p_old).
ClusterSeed flip_seed(const ClusterSeed& seed, const Arc& arc);

// The Laurent polynomial of gamma over the initial triangulation: flips the
// first diagonal crossing gamma (nearest crossing to gamma's left endpoint)
// until gamma joins the seed; terminates in exactly #crossings flips. Errors
// with FountainCrossing when gamma spans the fountain point.
LaurentPoly cluster_variable(const ClusterSeed& seed, const Arc& gamma);

// Same, also reporting how many flips were performed.
std::pair<LaurentPoly, int> cluster_variable_with_flips(const ClusterSeed& seed,
                                                        const Arc& gamma);

// Table of cluster variables for every pair in the window range; boundary
// pairs carry their frozen variables, fountain-hole pairs stay undefined.
PolyFrieze coefficient_frieze(const TriangulationWindow& w);

enum class StringSide { Near, Far };

const char* to_string(StringSide side);

// The ordered list of seed arcs crossed by gamma, walking gamma from its left
// endpoint, with the side of gamma holding each consecutive pair's shared
// endpoint. Near = the side of the vertices strictly between gamma's
// endpoints.
struct CrossingString {
  Arc gamma;
  std::vector<Arc> crossed;
  std::vector<StringSide> sides;            // size = max(0, |crossed| - 1)
  std::vector<std::int64_t> shared;         // shared endpoints, same indexing
};

CrossingString crossing_string(const TriangulationWindow& w, const Arc& gamma);

// Number of submodules of the thin string module attached to the crossing
// string: subsets of positions closed under the arrows (arrow i -> i+1 when
// the shared endpoint is on the near side). Fence orientations give Fibonacci
// counts. The empty string counts 1.
BigInt submodule_count(const CrossingString& cs);

// Arcs of the current seed triangulation that cross gamma, in crossing order.
std::vector<Arc> crossings_in_order(const TriangulationWindow& w, const Arc& gamma);

}  // namespace infgon
