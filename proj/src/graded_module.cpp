#include "infgon/graded_module.hpp"

#include <map>
#include <utility>

namespace infgon {

GradedModuleDesc GradedModuleDesc::projective(std::int64_t j) {
  return GradedModuleDesc{ModuleVariant::Projective, 0, j};
}

GradedModuleDesc GradedModuleDesc::ideal(std::int64_t k, std::int64_t j) {
  if (k < 1) fail(ErrorCode::InvalidInput, "ideal (x,y^k) requires k >= 1");
  return GradedModuleDesc{ModuleVariant::Ideal, k, j};
}

GradedModuleDesc GradedModuleDesc::cy(std::int64_t j) {
  return GradedModuleDesc{ModuleVariant::Cy, 0, j};
}

std::string GradedModuleDesc::str() const {
  switch (variant) {
    case ModuleVariant::Projective: return "S(" + std::to_string(j) + ")";
    case ModuleVariant::Ideal:
      return "(x,y^" + std::to_string(k) + ")(" + std::to_string(j) + ")";
    case ModuleVariant::Cy: return "C[y](" + std::to_string(j) + ")";
  }
  return "?";
}

GradedModuleDesc arc_to_module(const Arc& arc) {
  switch (classify_arc(arc)) {
    case ArcKind::Boundary:
      return GradedModuleDesc::projective(-arc.a);
    case ArcKind::FiniteInternal:
      return GradedModuleDesc::ideal(arc.length() - 1, 1 - arc.b_int());
    case ArcKind::Infinite:
      return GradedModuleDesc::cy(-arc.a);
  }
  fail(ErrorCode::InvalidInput, "unclassifiable arc");
}

Arc module_to_arc(const GradedModuleDesc& desc) {
  switch (desc.variant) {
    case ModuleVariant::Projective:
      return Arc(-desc.j, MarkedPoint(1 - desc.j));
    case ModuleVariant::Ideal:
      return Arc(-desc.j - desc.k, MarkedPoint(1 - desc.j));
    case ModuleVariant::Cy:
      return Arc::infinite(-desc.j);
  }
  fail(ErrorCode::InvalidInput, "unknown module variant");
}

std::int64_t min_y_degree(const GradedModuleDesc& desc) {
  if (desc.variant != ModuleVariant::Ideal)
    fail(ErrorCode::InvalidInput, "min_y_degree is defined for ideal modules only",
         desc.str());
  // y^k has degree -k; the twist by j shifts it to internal degree -k-j.
  return -desc.k - desc.j;
}

MatrixFactorization matrix_factorization(const GradedModuleDesc& desc) {
  MatrixFactorization mf;
  const std::int64_t j = desc.j;
  switch (desc.variant) {
    case ModuleVariant::Projective:
      // C[x,y](-2) --1--> C[x,y](-2) --x^2--> C[x,y]
      mf.size = 1;
      mf.A[0][0] = MonoXY{1, 2, 0};
      mf.B[0][0] = MonoXY{1, 0, 0};
      mf.twist_src[0] = -2 + j;
      mf.twist_mid[0] = -2 + j;
      mf.twist_tgt[0] = 0 + j;
      break;
    case ModuleVariant::Cy:
      // C[x,y](-2) --x--> C[x,y](-1) --x--> C[x,y]
      mf.size = 1;
      mf.A[0][0] = MonoXY{1, 1, 0};
      mf.B[0][0] = MonoXY{1, 1, 0};
      mf.twist_src[0] = -2 + j;
      mf.twist_mid[0] = -1 + j;
      mf.twist_tgt[0] = 0 + j;
      break;
    case ModuleVariant::Ideal: {
      // A = B = [x, y^k; 0, -x] between twisted rank-2 frees.
      mf.size = 2;
      const std::int64_t k = desc.k;
      mf.A[0][0] = MonoXY{1, 1, 0};
      mf.A[0][1] = MonoXY{1, 0, k};
      mf.A[1][0] = MonoXY{0, 0, 0};
      mf.A[1][1] = MonoXY{-1, 1, 0};
      mf.B = mf.A;
      mf.twist_src = {-2 + j, k - 1 + j};
      mf.twist_mid = {-1 + j, k + j};
      mf.twist_tgt = {0 + j, k + 1 + j};
      break;
    }
  }
  return mf;
}

namespace {

// Exact polynomials in x,y as exponent -> coefficient maps; just enough for
// the 2x2 product checks.
using PolyXY = std::map<std::pair<std::int64_t, std::int64_t>, std::int64_t>;

void add_term(PolyXY& p, const MonoXY& m, const MonoXY& n) {
  if (m.coeff == 0 || n.coeff == 0) return;
  auto key = std::make_pair(m.xdeg + n.xdeg, m.ydeg + n.ydeg);
  p[key] += m.coeff * n.coeff;
  if (p[key] == 0) p.erase(key);
}

PolyXY product_entry(const MatrixFactorization& mf, bool ab, int r, int c) {
  PolyXY p;
  for (int t = 0; t < mf.size; ++t) {
    if (ab)
      add_term(p, mf.A[r][t], mf.B[t][c]);
    else
      add_term(p, mf.B[r][t], mf.A[t][c]);
  }
  return p;
}

// deg(x^p y^q) with deg x = 1, deg y = -1
std::int64_t mono_degree(const MonoXY& m) { return m.xdeg - m.ydeg; }

}  // namespace

void verify_factorization(const MatrixFactorization& mf) {
  const PolyXY x_squared{{{2, 0}, 1}};
  for (int r = 0; r < mf.size; ++r) {
    for (int c = 0; c < mf.size; ++c) {
      const PolyXY expect = (r == c) ? x_squared : PolyXY{};
      if (product_entry(mf, true, r, c) != expect ||
          product_entry(mf, false, r, c) != expect)
        fail(ErrorCode::Mismatch, "matrix factorization product is not x^2 * I",
             "entry (" + std::to_string(r) + "," + std::to_string(c) + ")");
    }
  }
  // Homogeneity: A maps F_mid -> F_tgt, B maps F_src -> F_mid.
  for (int r = 0; r < mf.size; ++r) {
    for (int c = 0; c < mf.size; ++c) {
      if (mf.A[r][c].coeff != 0 &&
          mono_degree(mf.A[r][c]) != mf.twist_tgt[r] - mf.twist_mid[c])
        fail(ErrorCode::Mismatch, "A entry degree inconsistent with twists");
      if (mf.B[r][c].coeff != 0 &&
          mono_degree(mf.B[r][c]) != mf.twist_mid[r] - mf.twist_src[c])
        fail(ErrorCode::Mismatch, "B entry degree inconsistent with twists");
    }
  }
}

}  // namespace infgon
