#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <map>
#include <string>

#include "infgon/arc.hpp"

namespace infgon {

using BigInt = boost::multiprecision::cpp_int;

/// One Laurent variable x_{a,b} per arc, totally ordered by the arc order.
using VarId = Arc;

/// Sparse exponent vector; exponents may be negative, zeros are never stored.
using Monomial = std::map<VarId, std::int64_t>;

/// Graded-lexicographic order on monomials over the VarId order. Leading
/// terms are the largest; used for canonical storage and division.
struct MonomialOrder {
  bool operator()(const Monomial& lhs, const Monomial& rhs) const;
};

// Exact sparse multivariate Laurent polynomial over arbitrary-precision
// integers. Immutable value semantics; equality is structural.
class LaurentPoly {
 public:
  using TermMap = std::map<Monomial, BigInt, MonomialOrder>;

  LaurentPoly() = default;

  static LaurentPoly constant(BigInt c);
  static LaurentPoly variable(const VarId& v);
  static LaurentPoly monomial(Monomial m, BigInt c);

  bool is_zero() const { return terms_.empty(); }
  std::size_t term_count() const { return terms_.size(); }
  const TermMap& terms() const { return terms_; }

  friend LaurentPoly operator+(const LaurentPoly& p, const LaurentPoly& q);
  friend LaurentPoly operator-(const LaurentPoly& p, const LaurentPoly& q);
  friend LaurentPoly operator*(const LaurentPoly& p, const LaurentPoly& q);
  LaurentPoly operator-() const;

  friend bool operator==(const LaurentPoly& p, const LaurentPoly& q) {
    return p.terms_ == q.terms_;
  }
  friend bool operator!=(const LaurentPoly& p, const LaurentPoly& q) {
    return !(p == q);
  }

  /// Sum of all coefficients: the specialization of every variable to 1.
  BigInt specialize_ones() const;

  bool has_positive_coefficients() const;

  std::string str() const;

 private:
  TermMap terms_;

  void insert_term(Monomial m, BigInt c);
};

/// Returns r with q*r = p; errors with NonExactDivision when no such Laurent
/// polynomial exists.
LaurentPoly exact_div(const LaurentPoly& p, const LaurentPoly& q);

}  // namespace infgon
