#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "eddeg/formulas.hpp"
#include "eddeg/toric.hpp"

using namespace eddeg;

TEST_CASE("generic complete intersections") {
  CHECK(ed_generic_ci(3, {5}, true) == 25);
  CHECK(ed_generic_ci(4, {3, 3}, true) == 45);
  CHECK(ed_generic_ci(2, {2}, false) == 4);  // affine conic, same count as the ellipse
  CHECK_THROWS_AS(ed_generic_ci(2, {}, false), std::invalid_argument);
  CHECK_THROWS_AS(ed_generic_ci(3, {2, 2, 2}, true), std::invalid_argument);
  // order of the degrees cannot matter
  CHECK(ed_generic_ci(5, {2, 4}, true) == ed_generic_ci(5, {4, 2}, true));
}

TEST_CASE("a hypersurface is the one-degree complete intersection") {
  for (int n = 2; n <= 6; ++n)
    for (int d = 1; d <= 6; ++d)
      CHECK(ed_generic_hypersurface(n, d) == ed_generic_ci(n, {d}, true));
}

TEST_CASE("parametric images and patch surfaces") {
  CHECK(ed_generic_parametric(1, 3) == 5);
  CHECK(ed_generic_parametric(2, 2) == 9);
  CHECK(ed_generic_parametric(3, 1) == 1);
  CHECK(ed_bezier(1, 1, false) == 5);
  CHECK(ed_bezier(1, 1, true) == 6);
  // the projective count is the toric count of the [0,d1] x [0,d2] rectangle
  for (int d1 = 1; d1 <= 3; ++d1)
    for (int d2 = 1; d2 <= 3; ++d2)
      CHECK(ed_bezier(d1, d2, true) ==
            ed_toric(product_polytope(segment(d1), segment(d2))));
}

TEST_CASE("coefficient hypersurfaces of polynomials with opposite roots") {
  long long affine[5] = {5, 5, 13, 9, 21};
  long long projective[5] = {2, 10, 6, 18, 10};
  for (int n = 3; n <= 7; ++n) {
    CHECK(ed_hurwitz(n, false) == affine[n - 3]);
    CHECK(ed_hurwitz(n, true) == projective[n - 3]);
  }
  CHECK_THROWS_AS(ed_hurwitz(2, false), std::invalid_argument);
}

TEST_CASE("squared-distance matrices of points on a line") {
  CHECK(ed_cayley_menger(3) == 2);
  CHECK(ed_cayley_menger(4) == 13);
  CHECK(ed_cayley_menger(5) == 40);
  CHECK(ed_cayley_menger(6) == 91);  // (3^5-1)/2 minus the multinomial correction
  CHECK_THROWS_AS(ed_cayley_menger(2), std::invalid_argument);
}

TEST_CASE("low-rank matrix counts are binomial") {
  for (int s = 1; s <= 6; ++s)
    for (int t = s; t <= 6; ++t)
      for (int r = 1; r <= s; ++r) CHECK(ed_eckart_young(s, t, r) == binomial(s, r));
  CHECK_THROWS_AS(ed_eckart_young(3, 2, 1), std::invalid_argument);
  CHECK_THROWS_AS(ed_eckart_young(2, 3, 0), std::invalid_argument);
}

TEST_CASE("smooth curves and the Chern-class expansion") {
  CHECK(ed_smooth_curve(7, 5) == 29);
  for (int d = 1; d <= 10; ++d)
    for (int g = 0; g <= 5; ++g) {
      ChernDegrees cd;
      cd.degs = {Int(d), Int(2 - 2 * g)};  // deg c_0 = deg X, deg c_1 = 2 - 2g
      CHECK(ed_from_chern(cd) == ed_smooth_curve(d, g));
    }
}

TEST_CASE("polar classes sum to the ED degree on both sides of duality") {
  PolarClasses pc;
  pc.deltas = {Int(2), Int(5), Int(3)};
  CHECK(ed_from_polar(pc) == 10);
  CHECK(ed_from_polar(polar_reverse(pc)) == 10);
  CHECK(polar_reverse(polar_reverse(pc)).deltas == pc.deltas);

  auto tails = sectional_ed(pc, 4);
  REQUIRE(tails.size() == 3);
  CHECK(tails[0] == 10);
  CHECK(tails[1] == 8);
  CHECK(tails[2] == 3);
  for (size_t i = 1; i < tails.size(); ++i) CHECK(tails[i] <= tails[i - 1]);
}

TEST_CASE("projections and sections") {
  CHECK(ed_after_projection(Int(13), 2) == 13);
  CHECK_THROWS_AS(ed_after_projection(Int(13), 1), std::invalid_argument);
  CHECK(ed_after_section(Int(10), Int(4), 1) == 6);  // dual hypersurface drops its degree
  CHECK(ed_after_section(Int(10), Int(4), 2) == 10);
}

TEST_CASE("veronese and eigenvector counts") {
  CHECK(ed_veronese_generic(2, 2) == 13);
  CHECK(ed_veronese_generic(1, 2) == 4);  // conic in P^2, general coordinates
  CHECK(ed_eigen_count(2, 3) == 3);
  CHECK(ed_eigen_count(3, 3) == 7);
  CHECK(ed_eigen_count(4, 2) == 4);  // matrices: one eigenvalue per dimension
  CHECK_THROWS_AS(ed_eigen_count(2, 1), std::invalid_argument);
}

TEST_CASE("ED discriminant degrees") {
  CHECK(ed_discriminant_degree(DiscPlaneCurve{2, 0, 0}) == 6);    // conic evolute
  CHECK(ed_discriminant_degree(DiscGenericHypersurface{4, 2}) == 12);
  CHECK(ed_discriminant_degree(DiscPlaneCurve{4, 0, 0}) == 36);   // 3d(d-1)
  CHECK(ed_discriminant_degree(DiscPlaneCurve{4, 1, 0}) == 30);
  CHECK(ed_discriminant_degree(DiscPlaneCurve{4, 0, 1}) == 28);
  CHECK(ed_discriminant_degree(DiscSmoothSpaceCurve{3, 0}) == 12);

  // smooth surfaces in P^3 carry Chern data c1^2 = d(d-4)^2, c2 = d(d^2-4d+6),
  // deg c1 = d(4-d); the surface expression must then match the hypersurface one
  for (int d = 2; d <= 6; ++d) {
    DiscSmoothSurface s{d, Int(d) * (d - 4) * (d - 4), Int(d) * (d * d - 4 * d + 6),
                        Int(d) * (4 - d)};
    CHECK(ed_discriminant_degree(s) == ed_discriminant_degree(DiscGenericHypersurface{4, d}));
  }
}
