#include <doctest.h>

#include <algorithm>

#include "infgon/extensions.hpp"
#include "infgon/graded_module.hpp"
#include "support/fixtures.hpp"

using namespace infgon;
using testing::arc;

TEST_CASE("marked point order treats the accumulation point as maximal") {
  CHECK(MarkedPoint(5) < MarkedPoint::infinity());
  CHECK(MarkedPoint(-100) < MarkedPoint::infinity());
  CHECK(!(MarkedPoint::infinity() < MarkedPoint::infinity()));
  CHECK(MarkedPoint::infinity() == MarkedPoint::infinity());
  CHECK(MarkedPoint(3) < MarkedPoint(4));
}

TEST_CASE("arc classification") {
  CHECK(classify_arc(arc(2, 3)) == ArcKind::Boundary);
  CHECK(classify_arc(arc(0, 3)) == ArcKind::FiniteInternal);
  CHECK(classify_arc(Arc::infinite(5)) == ArcKind::Infinite);
  CHECK_THROWS_AS(Arc(3, MarkedPoint(3)), Error);
  CHECK_THROWS_AS(Arc(4, MarkedPoint(3)), Error);
}

TEST_CASE("crossing is strict interleaving") {
  CHECK(crossing(arc(0, 3), arc(1, 4)));
  CHECK(!crossing(arc(0, 3), arc(1, 3)));  // shared endpoint
  CHECK(crossing(arc(1, 4), Arc::infinite(2)));
  CHECK(!crossing(Arc::infinite(1), Arc::infinite(5)));
  CHECK(!crossing(arc(0, 1), arc(1, 2)));
  CHECK(!crossing(arc(0, 5), arc(1, 3)));  // nested
}

TEST_CASE("crossing is symmetric, irreflexive, and blind to shared endpoints") {
  std::vector<Arc> arcs;
  for (std::int64_t a = -3; a <= 3; ++a) {
    for (std::int64_t b = a + 1; b <= 4; ++b) arcs.push_back(arc(a, b));
    arcs.push_back(Arc::infinite(a));
  }
  for (const Arc& p : arcs) {
    CHECK(!crossing(p, p));
    for (const Arc& q : arcs) {
      CHECK(crossing(p, q) == crossing(q, p));
      const bool share = p.a == q.a || p.b == q.b ||
                         (!p.has_infinite_end() && p.b_int() == q.a) ||
                         (!q.has_infinite_end() && q.b_int() == p.a);
      if (share) CHECK(!crossing(p, q));
    }
  }
}

TEST_CASE("arc to module dictionary") {
  CHECK(arc_to_module(arc(0, 3)) == GradedModuleDesc::ideal(2, -2));
  CHECK(arc_to_module(arc(2, 3)) == GradedModuleDesc::projective(-2));
  CHECK(arc_to_module(Arc::infinite(5)) == GradedModuleDesc::cy(-5));

  CHECK(module_to_arc(GradedModuleDesc::projective(3)) == arc(-3, -2));
  CHECK(module_to_arc(GradedModuleDesc::ideal(2, -2)) == arc(0, 3));
  CHECK(module_to_arc(GradedModuleDesc::cy(0)) == Arc::infinite(0));
}

TEST_CASE("dictionary round trips on all arcs with small endpoints") {
  for (std::int64_t a = -50; a <= 50; ++a) {
    for (std::int64_t b = a + 1; b <= 50; ++b) {
      const Arc original = arc(a, b);
      CHECK(module_to_arc(arc_to_module(original)) == original);
    }
    const Arc inf_arc = Arc::infinite(a);
    CHECK(module_to_arc(arc_to_module(inf_arc)) == inf_arc);
  }
  // and the other composition on descriptors
  for (std::int64_t j = -30; j <= 30; ++j) {
    CHECK(arc_to_module(module_to_arc(GradedModuleDesc::projective(j))) ==
          GradedModuleDesc::projective(j));
    CHECK(arc_to_module(module_to_arc(GradedModuleDesc::cy(j))) ==
          GradedModuleDesc::cy(j));
    for (std::int64_t k = 1; k <= 10; ++k)
      CHECK(arc_to_module(module_to_arc(GradedModuleDesc::ideal(k, j))) ==
            GradedModuleDesc::ideal(k, j));
  }
}

TEST_CASE("lowest y-power degree of ideal modules") {
  CHECK(min_y_degree(GradedModuleDesc::ideal(2, -2)) == 0);
  CHECK(min_y_degree(GradedModuleDesc::ideal(1, 0)) == -1);
  CHECK(module_to_arc(GradedModuleDesc::ideal(1, 0)) == arc(-1, 1));
  CHECK(min_y_degree(GradedModuleDesc::ideal(3, -4)) == 1);
  CHECK(module_to_arc(GradedModuleDesc::ideal(3, -4)) == arc(1, 5));
  CHECK_THROWS_AS(min_y_degree(GradedModuleDesc::projective(0)), Error);

  // degree zero exactly for the modules of arcs anchored at 0
  for (std::int64_t a = -6; a <= 6; ++a)
    for (std::int64_t b = a + 2; b <= 8; ++b) {
      const auto desc = arc_to_module(arc(a, b));
      CHECK((min_y_degree(desc) == 0) == (a == 0));
    }
}

TEST_CASE("matrix factorizations of the three families") {
  const MatrixFactorization ideal = matrix_factorization(GradedModuleDesc::ideal(1, 0));
  CHECK(ideal.size == 2);
  CHECK(ideal.A[0][0].xdeg == 1);
  CHECK(ideal.A[0][1].ydeg == 1);
  CHECK(ideal.A[1][1].coeff == -1);
  CHECK(ideal.twist_src == std::array<std::int64_t, 2>{-2, 0});
  CHECK(ideal.twist_mid == std::array<std::int64_t, 2>{-1, 1});
  CHECK(ideal.twist_tgt == std::array<std::int64_t, 2>{0, 2});
  verify_factorization(ideal);

  const MatrixFactorization proj = matrix_factorization(GradedModuleDesc::projective(0));
  CHECK(proj.size == 1);
  CHECK(proj.A[0][0].xdeg == 2);
  CHECK(proj.B[0][0].xdeg == 0);
  verify_factorization(proj);

  const MatrixFactorization cy = matrix_factorization(GradedModuleDesc::cy(0));
  CHECK(cy.size == 1);
  CHECK(cy.A[0][0].xdeg == 1);
  CHECK(cy.B[0][0].xdeg == 1);
  verify_factorization(cy);

  for (std::int64_t j = -8; j <= 8; ++j) {
    verify_factorization(matrix_factorization(GradedModuleDesc::projective(j)));
    verify_factorization(matrix_factorization(GradedModuleDesc::cy(j)));
    for (std::int64_t k = 1; k <= 20; ++k)
      verify_factorization(matrix_factorization(GradedModuleDesc::ideal(k, j)));
  }
}

TEST_CASE("ext dimension on the three extension families") {
  CHECK(ext_dimension(arc(2, 5), arc(0, 3)) == 1);
  CHECK(ext_dimension(arc(0, 3), arc(1, 3)) == 0);
  CHECK(ext_dimension(Arc::infinite(3), Arc::infinite(5)) == 1);
  CHECK(ext_dimension(Arc::infinite(5), Arc::infinite(3)) == 0);
  CHECK(ext_dimension(arc(0, 4), Arc::infinite(2)) == 1);
  CHECK(ext_dimension(Arc::infinite(2), arc(0, 4)) == 1);
}

TEST_CASE("ext of finite arcs is symmetric and matches crossing") {
  std::vector<Arc> arcs;
  for (std::int64_t a = 0; a <= 12; ++a)
    for (std::int64_t b = a + 1; b <= 12; ++b) arcs.push_back(arc(a, b));
  for (const Arc& m : arcs)
    for (const Arc& n : arcs) {
      const int expected = crossing(m, n) ? 1 : 0;
      CHECK(ext_dimension(m, n) == expected);
      CHECK(ext_dimension(n, m) == expected);
    }
}

TEST_CASE("extension middles") {
  CHECK(extension_middle(arc(2, 5), arc(0, 3)) ==
        std::vector<Arc>{arc(0, 5), arc(2, 3)});
  CHECK(extension_middle(arc(0, 3), arc(2, 5)) ==
        std::vector<Arc>{arc(0, 2), arc(3, 5)});
  CHECK(extension_middle(Arc::infinite(3), Arc::infinite(5)) ==
        std::vector<Arc>{arc(3, 5)});
  CHECK(extension_middle(arc(0, 4), Arc::infinite(2)) ==
        std::vector<Arc>{arc(0, 2), Arc::infinite(4)});
  CHECK(extension_middle(Arc::infinite(2), arc(0, 4)) ==
        std::vector<Arc>{Arc::infinite(0), arc(2, 4)});
  CHECK_THROWS_AS(extension_middle(arc(0, 3), arc(1, 3)), Error);
}

TEST_CASE("extension middles preserve total arc length for finite families") {
  for (int trial = 0; trial < 500; ++trial) {
    const std::int64_t a = testing::random_int(-20, 20);
    const std::int64_t c = a + testing::random_int(1, 5);
    const std::int64_t b = c + testing::random_int(1, 5);
    const std::int64_t d = b + testing::random_int(1, 5);
    const Arc outer = arc(a, b), inner = arc(c, d);
    for (const auto& [m, n] : {std::pair{inner, outer}, std::pair{outer, inner}}) {
      std::int64_t total = 0;
      for (const Arc& e : extension_middle(m, n)) total += e.length();
      CHECK(total == m.length() + n.length());
    }
  }
}

TEST_CASE("AR translate and sequences") {
  CHECK(ar_translate(arc(2, 5)) == arc(1, 4));
  CHECK(ar_translate(arc(0, 2)) == arc(-1, 1));
  CHECK_THROWS_AS(ar_translate(Arc::infinite(3)), Error);
  CHECK_THROWS_AS(ar_translate(arc(5, 6)), Error);

  const auto seq = ar_sequence(arc(0, 2));
  CHECK(seq.start == arc(-1, 1));
  CHECK(seq.middle == std::vector<Arc>{arc(-1, 2), arc(0, 1)});
  CHECK(seq.end == arc(0, 2));
  CHECK(ar_sequence(arc(3, 7)) ==
        ShortExactSequence{arc(2, 6), {arc(2, 7), arc(3, 6)}, arc(3, 7)});
  CHECK_THROWS_AS(ar_sequence(arc(5, 6)), Error);

  const auto ex = exchange_sequence(arc(1, 4));
  CHECK(ex.start == arc(1, 4));
  CHECK(ex.middle == std::vector<Arc>{arc(0, 1), arc(3, 4)});
  CHECK(ex.end == arc(0, 3));
  CHECK(exchange_sequence(arc(0, 2)) ==
        ShortExactSequence{arc(0, 2), {arc(-1, 0), arc(1, 2)}, arc(-1, 1)});
  CHECK_THROWS_AS(exchange_sequence(arc(2, 3)), Error);
}

TEST_CASE("AR formulas on random finite arcs") {
  for (int trial = 0; trial < 1000; ++trial) {
    const std::int64_t a = testing::random_int(-100, 100);
    const std::int64_t b = a + testing::random_int(2, 40);
    const Arc gamma = arc(a, b);
    // translate then shift back is the identity
    const Arc tau = ar_translate(gamma);
    CHECK(arc(tau.a + 1, tau.b_int() + 1) == gamma);
    const auto seq = ar_sequence(gamma);
    CHECK(seq.start == arc(a - 1, b - 1));
    CHECK(seq.middle == std::vector<Arc>{arc(a - 1, b), arc(a, b - 1)});
    CHECK(seq.end == gamma);
    const auto ex = exchange_sequence(gamma);
    CHECK(ex.middle == std::vector<Arc>{arc(a - 1, a), arc(b - 1, b)});
    CHECK(ex.end == arc(a - 1, b - 1));
    // the AR middle is the extension middle of the nonsplit extension
    CHECK(extension_middle(gamma, seq.start) == seq.middle);
  }
}
