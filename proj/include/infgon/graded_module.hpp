#pragma once

#include <array>
#include <cstdint>
#include <string>

#include "infgon/arc.hpp"

namespace infgon {

// Dictionary between arcs of the completed infinity-gon and the indecomposable
// graded maximal Cohen-Macaulay modules over C[x,y]/(x^2), plus the matrix
// factorizations presenting them.
//
// Grading convention (pinned, do not change silently): deg x = +1, deg y = -1,
// and the twist acts by M(j)_d = M_{d+j}. Under this convention the lowest
// power of y inside (x,y^k)(j) sits in internal degree -k-j, which is 0
// exactly for the modules matching arcs anchored at 0.

enum class ModuleVariant {
  Projective,  // S(j)
  Ideal,       // (x,y^k)(j), k >= 1
  Cy,          // C[y](j) = (S/(x))(j)
};

struct GradedModuleDesc {
  ModuleVariant variant = ModuleVariant::Projective;
  std::int64_t k = 0;  // ideal exponent, meaningful for Ideal only
  std::int64_t j = 0;  // grading twist

  static GradedModuleDesc projective(std::int64_t j);
  static GradedModuleDesc ideal(std::int64_t k, std::int64_t j);
  static GradedModuleDesc cy(std::int64_t j);

  friend bool operator==(const GradedModuleDesc&, const GradedModuleDesc&) = default;

  std::string str() const;
};

GradedModuleDesc arc_to_module(const Arc& arc);
Arc module_to_arc(const GradedModuleDesc& desc);

// Internal degree of the smallest power of y contained in an ideal module
// (x,y^k)(j); equals -k-j. Errors on non-Ideal descriptors.
std::int64_t min_y_degree(const GradedModuleDesc& desc);

// A single monomial c * x^p * y^q.
struct MonoXY {
  std::int64_t coeff = 0;
  std::int64_t xdeg = 0;
  std::int64_t ydeg = 0;
};

// Pair (A,B) with A*B = B*A = x^2 * I, together with the grading twists of the
// three free modules in the two-periodic resolution
//   F_src --B--> F_mid --A--> F_tgt.
struct MatrixFactorization {
  int size = 1;  // 1 or 2
  std::array<std::array<MonoXY, 2>, 2> A{};
  std::array<std::array<MonoXY, 2>, 2> B{};
  std::array<std::int64_t, 2> twist_src{};
  std::array<std::int64_t, 2> twist_mid{};
  std::array<std::int64_t, 2> twist_tgt{};
};

MatrixFactorization matrix_factorization(const GradedModuleDesc& desc);

// Checks A*B = B*A = x^2*I by exact polynomial arithmetic and that every
// nonzero entry is homogeneous of the degree forced by the twists.
void verify_factorization(const MatrixFactorization& mf);

}  // namespace infgon
