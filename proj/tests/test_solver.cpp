#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cmath>

#include "eddeg/formulas.hpp"
#include "eddeg/rng.hpp"
#include "eddeg/solver.hpp"

using namespace eddeg;

namespace {

Rational R(long long a, long long b = 1) { return Rational(a) / Rational(b); }

MultiPoly ellipse_form() { return MultiPoly::parse("x^2+4*y^2-4", 2); }

MultiPoly cardioid_form() {
  return MultiPoly::parse("x^4+2*x^2*y^2+y^4+2*x^3+2*x*y^2-y^2", 2);
}

std::vector<Rational> gaussian_point(std::uint64_t seed, std::uint64_t index, int dim) {
  SampleRng rng(seed, index, 424242);
  std::vector<Rational> u(dim);
  for (Rational& r : u) r = dyadic(rng.gaussian());
  return u;
}

}  // namespace

TEST_CASE("critical system construction") {
  PlaneCurve c = affine_curve(ellipse_form());
  DataPoint u{{R(1, 3), R(1, 5)}};
  auto [f, g] = build_affine_system(c, u);
  CHECK(f == ellipse_form());
  // g = (u1 - x) f_y - (u2 - y) f_x
  MultiPoly expected = (MultiPoly::constant(2, R(1, 3)) - MultiPoly::var(2, 0)) *
                           ellipse_form().derivative(1) -
                       (MultiPoly::constant(2, R(1, 5)) - MultiPoly::var(2, 1)) *
                           ellipse_form().derivative(0);
  CHECK(g == expected);
}

TEST_CASE("ellipse: four critical points, all real inside the evolute") {
  PlaneCurve c = affine_curve(ellipse_form());
  CriticalReport inside = count_critical(c, DataPoint{{R(1, 3), R(1, 5)}});
  CHECK(inside.complex_count == 4);
  CHECK(inside.real_count == 4);
  CHECK(inside.excluded_singular == 0);
  REQUIRE(inside.points.size() == 4);

  // points come back real-first and sorted by distance, and they satisfy
  // both defining equations
  DataPoint u{{R(1, 3), R(1, 5)}};
  auto [f, g] = build_affine_system(c, u);
  double last = -1.0;
  for (const CriticalPoint& p : inside.points) {
    CHECK(p.real);
    CHECK(p.distance >= last);
    last = p.distance;
    CHECK(std::abs(f.evaluate(p.x)) <= 1e-8);
    CHECK(std::abs(g.evaluate(p.x)) <= 1e-8);
  }

  CriticalReport outside = count_critical(c, DataPoint{{R(2), R(1)}});
  CHECK(outside.complex_count == 4);
  CHECK(outside.real_count == 2);

  // the nearest real point beats every other critical point
  REQUIRE(!outside.points.empty());
  CHECK(outside.points[0].real);
  for (const CriticalPoint& p : outside.points) CHECK(outside.points[0].distance <= p.distance);
}

TEST_CASE("unit circle and its translate") {
  PlaneCurve circle = affine_curve(MultiPoly::parse("x^2+y^2-1", 2));
  CriticalReport rep = count_critical(circle, DataPoint{{R(3, 7), R(2, 9)}});
  CHECK(rep.complex_count == 2);
  CHECK(rep.real_count == 2);

  // the center is equidistant from the whole circle: degenerate data
  CHECK_THROWS_AS(count_critical(circle, DataPoint{{R(0), R(0)}}), RetrySignal);

  // the closure of a translated circle picks up the cone contribution
  PlaneCurve moved = affine_curve(MultiPoly::parse("x^2+y^2-2*x-4*y+4", 2));
  ClosureComparison cmp = affine_vs_closure(moved, DataPoint{{R(5, 7), R(3, 11)}});
  CHECK(cmp.affine.complex_count == 2);
  CHECK(cmp.closure.complex_count == 4);
  CHECK(cmp.lemma_checked);
  CHECK(cmp.lemma_residual <= 1e-8);
}

TEST_CASE("cardioid: singular origin is removed exactly") {
  PlaneCurve c = affine_curve(cardioid_form(), {{R(0), R(0)}});
  CriticalReport rep = count_critical(c, DataPoint{{R(1, 4), R(1, 3)}});
  CHECK(rep.complex_count == 3);
  CHECK(rep.real_count == 3);

  ClosureComparison cmp = affine_vs_closure(c, DataPoint{{R(1, 4), R(1, 3)}});
  CHECK(cmp.closure.complex_count == 7);
  CHECK(cmp.closure.excluded_isotropic == 2);
  CHECK(cmp.closure.excluded_singular == 3);
  CHECK(cmp.lemma_checked);
  CHECK(cmp.lemma_residual <= 1e-8);
}

TEST_CASE("projective Fermat quintic excludes exactly two isotropic solutions") {
  PlaneCurve c = projective_curve(MultiPoly::parse("x^5+y^5+z^5", 3));
  CriticalReport rep = count_critical(c, DataPoint{{R(1, 2), R(1, 3), R(1, 7)}});
  CHECK(rep.complex_count == 23);
  CHECK(rep.excluded_isotropic == 2);
}

TEST_CASE("dense affine curves have the generic count d*d") {
  MultiPoly cubic = MultiPoly::parse(
      "3*x^3-2*x^2*y+5*x*y^2-y^3+x^2-7*x*y+2*y^2+x-y+4", 2);
  CriticalReport rep = count_critical(affine_curve(cubic), DataPoint{{R(1, 3), R(2, 5)}}, false);
  CHECK(rep.complex_count == 9);

  MultiPoly quintic = MultiPoly::parse(
      "2*x^5-3*x^4*y+x^3*y^2+4*x^2*y^3-x*y^4+5*y^5"
      "+x^4-2*x^3*y+3*x^2*y^2+x*y^3-4*y^4"
      "+3*x^3+x^2*y-5*x*y^2+2*y^3"
      "-x^2+6*x*y+y^2"
      "+4*x-3*y+7", 2);
  CriticalReport rep5 =
      count_critical(affine_curve(quintic), DataPoint{{R(1, 3), R(2, 7)}}, false);
  CHECK(rep5.complex_count == 25);
}

TEST_CASE("twisted cubic cone, plain and rescaled") {
  std::vector<MultiPoly> psi = {MultiPoly::parse("x^3", 2), MultiPoly::parse("x^2*y", 2),
                                MultiPoly::parse("x*y^2", 2), MultiPoly::parse("y^3", 2)};
  DataPoint u{{R(1, 2), R(1, 3), R(1, 5), R(1, 7)}};
  CriticalReport plain = param_critical_count(psi, {}, u, 3);
  CHECK(plain.complex_count == 7);

  CriticalReport weighted = param_critical_count(psi, {R(1), R(3), R(3), R(1)}, u, 3);
  CHECK(weighted.complex_count == 3);
}

TEST_CASE("the product surface x1 x2 = x3") {
  std::vector<MultiPoly> psi = {MultiPoly::parse("x", 2), MultiPoly::parse("y", 2),
                                MultiPoly::parse("x*y", 2)};
  CriticalReport rep = param_critical_count(psi, {}, DataPoint{{R(2, 3), R(3, 5), R(1, 6)}}, 1);
  CHECK(rep.complex_count == 5);
  CHECK(rep.real_count >= 1);
  CHECK(rep.real_count % 2 == 1);
}

TEST_CASE("constructive count on the opposite-roots hypersurface matches the formula") {
  for (int n = 3; n <= 7; ++n) {
    std::vector<Rational> uh, ua;
    for (int i = 0; i <= n; ++i) uh.push_back(R(2 * i + 3, 2 + (i * 7) % 5));
    for (int i = 1; i <= n; ++i) ua.push_back(R(3 * i + 1, 2 + (i * 3) % 7));
    CHECK(hurwitz_count(n, ua, false) == ed_hurwitz(n, false));
    CHECK(hurwitz_count(n, uh, true) == ed_hurwitz(n, true));
  }
  CHECK_THROWS_AS(hurwitz_count(2, {R(1), R(1)}, false), std::invalid_argument);
  CHECK_THROWS_AS(hurwitz_count(3, {R(1)}, false), std::invalid_argument);
}

TEST_CASE("homogenization round trip") {
  MultiPoly f = cardioid_form();
  MultiPoly F = homogenize_last(f);
  CHECK(F.arity() == 3);
  CHECK(F.total_degree() == 4);
  CHECK(F.substitute_tail({R(1)}) == f);
}

TEST_CASE("the symbolic counters agree with the one-shot solver") {
  AffineCounter ellipse(affine_curve(ellipse_form()));
  PlaneCurve one_shot = affine_curve(ellipse_form());
  for (int i = 0; i < 10; ++i) {
    std::vector<Rational> u = gaussian_point(3, static_cast<std::uint64_t>(i), 2);
    auto [c, r] = ellipse.counts(u);
    CriticalReport rep = count_critical(one_shot, DataPoint{u}, false);
    CHECK(c == rep.complex_count);
    CHECK(r == rep.real_count);
    CHECK(c == 4);
    CHECK((r == 2 || r == 4));
  }

  AffineCounter cardioid(affine_curve(cardioid_form(), {{R(0), R(0)}}));
  auto [cc, cr] = cardioid.counts({R(1, 4), R(1, 3)});
  CHECK(cc == 3);
  CHECK(cr == 3);

  std::vector<MultiPoly> psi = {MultiPoly::parse("x", 2), MultiPoly::parse("y", 2),
                                MultiPoly::parse("x*y", 2)};
  ParamCounter pc(psi, {}, 1);
  auto [gc, gr] = pc.counts({R(2, 3), R(3, 5), R(1, 6)});
  CriticalReport one = param_critical_count(psi, {}, DataPoint{{R(2, 3), R(3, 5), R(1, 6)}}, 1, false);
  CHECK(gc == 5);
  CHECK(gc == one.complex_count);
  CHECK(gr == one.real_count);
}

TEST_CASE("complex count is constant over generic data, real count has its parity") {
  AffineCounter counter(affine_curve(ellipse_form()));
  for (int i = 0; i < 50; ++i) {
    std::vector<Rational> u = gaussian_point(11, static_cast<std::uint64_t>(i), 2);
    auto [c, r] = counter.counts(u);
    CHECK(c == 4);
    CHECK(r >= 2);
    CHECK(r <= 4);
    CHECK(r % 2 == 0);
  }
}

TEST_CASE("curve preconditions") {
  // not square-free
  CHECK_THROWS(count_critical(affine_curve(MultiPoly::parse("x^2+2*x*y+y^2", 2)),
                              DataPoint{{R(1, 3), R(1, 5)}}));
  // contains the line at infinity
  CHECK_THROWS_AS(count_critical(projective_curve(MultiPoly::parse("x*z+y*z", 3)),
                                 DataPoint{{R(1), R(1), R(1)}}),
                  std::invalid_argument);
  // wrong data dimension
  CHECK_THROWS(count_critical(affine_curve(ellipse_form()), DataPoint{{R(1)}}));
}
