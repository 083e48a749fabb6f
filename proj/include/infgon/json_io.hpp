#pragma once

#include <json.hpp>
#include <string>

#include "infgon/cluster.hpp"
#include "infgon/frieze.hpp"
#include "infgon/graded_module.hpp"
#include "infgon/sequences.hpp"
#include "infgon/triangulation.hpp"

// Single JSON persistence format, versioned with "format": "infgon/1".
// Arcs serialize as two-element arrays with the accumulation point written as
// the string "inf": (3,inf) -> [3,"inf"]. Emission is canonical (sorted keys,
// sorted arcs), so emit-read-emit round trips are byte-identical.

namespace infgon {

using Json = nlohmann::json;

extern const char* const kFormatTag;  // "infgon/1"

Json arc_to_json(const Arc& arc);
Arc arc_from_json(const Json& j);

Json window_to_json(const TriangulationWindow& w);
// Boundary arcs may be omitted on input; they are inserted before validation.
TriangulationWindow window_from_json(const Json& j);

Json word_to_json(const BinarySeq& s);
BinarySeq word_from_json(const Json& j);

Json frieze_to_json(const IntFrieze& f);
IntFrieze frieze_from_json(const Json& j);

Json poly_to_json(const LaurentPoly& p);
Json poly_frieze_to_json(const PolyFrieze& f, bool specialize_ones);

Json module_to_json(const GradedModuleDesc& desc);
GradedModuleDesc module_from_json(const Json& j);
Json factorization_to_json(const MatrixFactorization& mf);

Json crossing_string_to_json(const CrossingString& cs);

TriangulationWindow load_window(const std::string& path);
Json load_json(const std::string& path);

}  // namespace infgon
