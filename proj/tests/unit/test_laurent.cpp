#include <doctest.h>

#include "infgon/laurent.hpp"
#include "support/fixtures.hpp"

using namespace infgon;
using testing::arc;

namespace {

LaurentPoly var(std::int64_t a, std::int64_t b) {
  return LaurentPoly::variable(arc(a, b));
}

// Random Laurent polynomial with small support.
LaurentPoly random_poly(int max_terms = 4) {
  LaurentPoly p;
  const int terms = static_cast<int>(testing::random_int(0, max_terms));
  for (int t = 0; t < terms; ++t) {
    Monomial m;
    const int vars = static_cast<int>(testing::random_int(0, 3));
    for (int v = 0; v < vars; ++v) {
      const std::int64_t a = testing::random_int(0, 3);
      m[arc(a, a + 1 + testing::random_int(0, 2))] = testing::random_int(-3, 3);
    }
    std::erase_if(m, [](const auto& kv) { return kv.second == 0; });
    p = p + LaurentPoly::monomial(std::move(m), testing::random_int(-5, 5));
  }
  return p;
}

}  // namespace

TEST_CASE("ring basics") {
  const LaurentPoly x01 = var(0, 1), x12 = var(1, 2);
  CHECK((x01 + (-x01)).is_zero());
  CHECK((x01 + x12) * (x01 - x12) == x01 * x01 - x12 * x12);
  const LaurentPoly one = LaurentPoly::constant(1);
  const LaurentPoly p = x01 * x12 + LaurentPoly::constant(3);
  CHECK(p * one == p);
  CHECK((p - p).is_zero());
}

TEST_CASE("ring axioms on random inputs") {
  for (int trial = 0; trial < 300; ++trial) {
    const LaurentPoly p = random_poly(), q = random_poly(), r = random_poly();
    CHECK(p + q == q + p);
    CHECK(p * q == q * p);
    CHECK((p + q) + r == p + (q + r));
    CHECK((p * q) * r == p * (q * r));
    CHECK(p * (q + r) == p * q + p * r);
  }
}

TEST_CASE("specialize_ones is a ring homomorphism") {
  CHECK((var(0, 1) * var(2, 3) + var(1, 2) * var(0, 3)).specialize_ones() == 2);
  CHECK(LaurentPoly().specialize_ones() == 0);
  CHECK(LaurentPoly::monomial({{arc(0, 2), -3}}, 5).specialize_ones() == 5);
  for (int trial = 0; trial < 200; ++trial) {
    const LaurentPoly p = random_poly(), q = random_poly();
    CHECK((p * q).specialize_ones() == p.specialize_ones() * q.specialize_ones());
    CHECK((p + q).specialize_ones() == p.specialize_ones() + q.specialize_ones());
  }
}

TEST_CASE("positivity check") {
  CHECK((var(0, 1) + var(1, 2)).has_positive_coefficients());
  CHECK(!(var(0, 1) - var(1, 2)).has_positive_coefficients());
  CHECK(LaurentPoly().has_positive_coefficients());
}

TEST_CASE("exact division") {
  CHECK(exact_div(var(0, 1) * var(1, 2), var(0, 1)) == var(1, 2));
  CHECK_THROWS_AS(
      exact_div(var(0, 1) * var(2, 3) + var(1, 2) * var(0, 3), var(0, 2)), Error);
  // Laurent shifts divide cleanly.
  const LaurentPoly inv = LaurentPoly::monomial({{arc(0, 1), -1}}, 1);
  CHECK(exact_div(LaurentPoly::constant(1), inv) == var(0, 1));
  CHECK(exact_div(var(0, 1) + LaurentPoly::constant(1), var(0, 1)) ==
        LaurentPoly::constant(1) + inv);
}

TEST_CASE("exact division round trips on random products") {
  int nonzero = 0;
  for (int trial = 0; trial < 1000; ++trial) {
    const LaurentPoly p = random_poly(), q = random_poly();
    if (q.is_zero()) continue;
    ++nonzero;
    CHECK(exact_div(p * q, q) == p);
  }
  CHECK(nonzero > 500);
}

TEST_CASE("rendering") {
  CHECK(LaurentPoly().str() == "0");
  CHECK(LaurentPoly::constant(-7).str() == "-7");
  const LaurentPoly p =
      LaurentPoly::monomial({{arc(0, 1), 2}, {arc(1, 2), -1}}, 1) +
      LaurentPoly::constant(3);
  CHECK(p.str() == "x[0,1]^2*x[1,2]^-1 + 3");
  CHECK((var(0, 1) - var(1, 2)).str() == "x[0,1] - x[1,2]");
  CHECK(LaurentPoly::variable(Arc::infinite(3)).str() == "x[3,inf]");
}

TEST_CASE("canonical term order puts higher grade first") {
  const LaurentPoly p = var(0, 1) * var(0, 1) + var(0, 1) + LaurentPoly::constant(1);
  auto it = p.terms().begin();
  CHECK(it->first.at(arc(0, 1)) == 2);
  ++it;
  CHECK(it->first.at(arc(0, 1)) == 1);
  ++it;
  CHECK(it->first.empty());
}
