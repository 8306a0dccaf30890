// End-to-end conformance gates: one summary line per criterion, printed even
// when everything passes, with the failed expectations listed underneath.
#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <optional>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "eddeg/cli.hpp"
#include "eddeg/formulas.hpp"
#include "eddeg/montecarlo.hpp"
#include "eddeg/multipoly.hpp"
#include "eddeg/roots.hpp"
#include "eddeg/solver.hpp"
#include "eddeg/spectral.hpp"
#include "eddeg/tensors.hpp"
#include "eddeg/toric.hpp"
#include "eddeg/unipoly.hpp"

using namespace eddeg;

namespace {

struct Criterion {
  int index;
  std::string label;
  std::vector<std::string> failures;
  std::chrono::steady_clock::time_point start = std::chrono::steady_clock::now();

  Criterion(int i, std::string l) : index(i), label(std::move(l)) {}

  void expect(bool cond, const std::string& note) {
    if (!cond) failures.push_back(note);
  }

  bool finish() {
    double secs =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    bool ok = failures.empty();
    std::printf("ACCEPTANCE %d (%s): %s  [%.1fs]\n", index, label.c_str(),
                ok ? "PASS" : "FAIL", secs);
    for (const std::string& f : failures) std::printf("    failed: %s\n", f.c_str());
    std::fflush(stdout);
    return ok;
  }
};

Rational R(long long a, long long b = 1) { return Rational(a) / Rational(b); }

std::string istr(const Int& v) { return v.str(); }

}  // namespace

TEST_CASE("closed-form formula conformance") {
  Criterion c(1, "formula table");

  const long long affine[] = {5, 5, 13, 9, 21};
  const long long homog[] = {2, 10, 6, 18, 10};
  for (int n = 3; n <= 7; ++n) {
    c.expect(ed_hurwitz(n, false) == affine[n - 3],
             "hurwitz affine n=" + std::to_string(n) + " got " + istr(ed_hurwitz(n, false)));
    c.expect(ed_hurwitz(n, true) == homog[n - 3],
             "hurwitz homogeneous n=" + std::to_string(n) + " got " + istr(ed_hurwitz(n, true)));
  }

  c.expect(ed_cayley_menger(4) == 13, "cayley_menger(4)");

  for (int s = 1; s <= 6; ++s)
    for (int t = s; t <= 6; ++t)
      for (int r = 1; r <= s; ++r)
        c.expect(ed_eckart_young(s, t, r) == binomial(s, r),
                 "eckart_young(" + std::to_string(s) + "," + std::to_string(t) + "," +
                     std::to_string(r) + ")");

  c.expect(ed_smooth_curve(7, 5) == 29, "smooth_curve(7,5)");
  c.expect(ed_generic_ci(3, {5}, true) == 25, "generic_ci projective (3,{5})");
  c.expect(ed_generic_ci(4, {3, 3}, true) == 45, "generic_ci projective (4,{3,3})");
  c.expect(ed_veronese_generic(2, 2) == 13, "veronese(2,2)");
  c.expect(ed_eigen_count(2, 3) == 3, "eigen_count(2,3)");

  c.expect(ed_discriminant_degree(DiscPlaneCurve{2, 0, 0}) == 6, "conic evolute degree");
  c.expect(ed_discriminant_degree(DiscGenericHypersurface{4, 2}) == 12,
           "quadric surface discriminant");
  c.expect(ed_discriminant_degree(DiscPlaneCurve{4, 0, 0}) == 36, "plane quartic discriminant");

  CHECK(c.finish());
}

TEST_CASE("toric conformance") {
  Criterion c(2, "toric polytopes");

  for (int n = 1; n <= 12; ++n)
    c.expect(ed_toric(segment(n)) == 3 * n - 2, "segment n=" + std::to_string(n));
  c.expect(ed_toric(dilate(simplex(2), 2)) == 13, "dilated triangle");
  c.expect(ed_toric(cube(3)) == 34, "3-cube");

  const int pairs[][2] = {{1, 1}, {1, 2}, {1, 3}, {1, 4}, {2, 2}};
  const long long expected[] = {6, 10, 14, 18, 39};
  for (int i = 0; i < 5; ++i) {
    Int v = ed_toric(product_polytope(simplex(pairs[i][0]), simplex(pairs[i][1])));
    c.expect(v == expected[i], "simplex product (" + std::to_string(pairs[i][0]) + "," +
                                   std::to_string(pairs[i][1]) + ") got " + istr(v));
  }

  CHECK(c.finish());
}

TEST_CASE("rank-one tensor conformance") {
  Criterion c(3, "rank-one tensors");

  c.expect(ed_segre({2, 2}) == 2, "2x2 matrices");
  Int fact = 1;
  for (int p = 3; p <= 10; ++p) {
    fact = factorial(p);
    std::vector<int> dims(static_cast<size_t>(p), 2);
    c.expect(ed_segre(dims) == fact, "binary format p=" + std::to_string(p));
  }

  const int mixed[][3] = {{2, 2, 3}, {2, 2, 4}, {2, 2, 5}, {2, 3, 3}, {2, 3, 4},
                          {2, 3, 5}, {3, 3, 3}, {3, 3, 4}, {3, 3, 5}};
  const long long mixed_ed[] = {8, 8, 8, 15, 18, 18, 37, 55, 61};
  for (int i = 0; i < 9; ++i) {
    Int v = ed_segre({mixed[i][0], mixed[i][1], mixed[i][2]});
    c.expect(v == mixed_ed[i],
             "format " + std::to_string(mixed[i][0]) + "x" + std::to_string(mixed[i][1]) + "x" +
                 std::to_string(mixed[i][2]) + " got " + istr(v));
  }

  c.expect(ed_segre_veronese(TensorShape{{2, 3}, {3, 2}}) == 27, "partially symmetric (2,3)^(3,2)");

  for (int m = 2; m <= 5; ++m)
    for (int w = 2; w <= 5; ++w)
      c.expect(ed_segre_veronese(TensorShape{{m}, {w}}) == ed_eigen_count(m, w),
               "one-factor shape m=" + std::to_string(m) + " w=" + std::to_string(w));

  CHECK(c.finish());
}

TEST_CASE("exact critical-point counts") {
  Criterion c(4, "exact solving");

  MultiPoly cardioid = MultiPoly::parse("x^4+2*x^2*y^2+y^4+2*x^3+2*x*y^2-y^2", 2);
  PlaneCurve cardioid_curve = affine_curve(cardioid, {{R(0), R(0)}});
  DataPoint cd{{R(1, 4), R(1, 3)}};
  c.expect(count_critical(cardioid_curve, cd, false).complex_count == 3, "cardioid affine");
  c.expect(affine_vs_closure(cardioid_curve, cd).closure.complex_count == 7, "cardioid closure");

  PlaneCurve circle = affine_curve(MultiPoly::parse("x^2+y^2-1", 2));
  CriticalReport circ = count_critical(circle, DataPoint{{R(3, 7), R(2, 9)}}, false);
  c.expect(circ.complex_count == 2, "circle complex count");
  c.expect(circ.real_count == 2, "circle real count");

  PlaneCurve moved = affine_curve(MultiPoly::parse("x^2+y^2-2*x-4*y+4", 2));
  c.expect(affine_vs_closure(moved, DataPoint{{R(5, 7), R(3, 11)}}).closure.complex_count == 4,
           "translated circle closure");

  PlaneCurve ellipse = affine_curve(MultiPoly::parse("x^2+4*y^2-4", 2));
  c.expect(count_critical(ellipse, DataPoint{{R(1, 3), R(1, 5)}}, false).complex_count == 4,
           "ellipse");

  PlaneCurve fermat = projective_curve(MultiPoly::parse("x^5+y^5+z^5", 3));
  CriticalReport fr = count_critical(fermat, DataPoint{{R(1, 2), R(1, 3), R(1, 7)}}, false);
  c.expect(fr.complex_count == 23, "projective quintic count");
  c.expect(fr.excluded_isotropic == 2, "projective quintic isotropic exclusions");

  MultiPoly quintic = MultiPoly::parse(
      "2*x^5-3*x^4*y+x^3*y^2+4*x^2*y^3-x*y^4+5*y^5"
      "+x^4-2*x^3*y+3*x^2*y^2+x*y^3-4*y^4"
      "+3*x^3+x^2*y-5*x*y^2+2*y^3"
      "-x^2+6*x*y+y^2"
      "+4*x-3*y+7", 2);
  c.expect(count_critical(affine_curve(quintic), DataPoint{{R(1, 3), R(2, 7)}}, false)
                   .complex_count == 25,
           "dense quintic");

  std::vector<MultiPoly> cubic_psi = {MultiPoly::parse("x^3", 2), MultiPoly::parse("x^2*y", 2),
                                      MultiPoly::parse("x*y^2", 2), MultiPoly::parse("y^3", 2)};
  DataPoint tc{{R(1, 2), R(1, 3), R(1, 5), R(1, 7)}};
  c.expect(param_critical_count(cubic_psi, {}, tc, 3, false).complex_count == 7,
           "twisted cubic");
  c.expect(param_critical_count(cubic_psi, {R(1), R(3), R(3), R(1)}, tc, 3, false)
                   .complex_count == 3,
           "twisted cubic, rescaled");

  std::vector<MultiPoly> g3 = {MultiPoly::parse("x", 2), MultiPoly::parse("y", 2),
                               MultiPoly::parse("x*y", 2)};
  c.expect(param_critical_count(g3, {}, DataPoint{{R(2, 3), R(3, 5), R(1, 6)}}, 1, false)
                   .complex_count == 5,
           "product surface");

  for (int n = 3; n <= 7; ++n) {
    std::vector<Rational> uh, ua;
    for (int i = 0; i <= n; ++i) uh.push_back(R(2 * i + 3, 2 + (i * 7) % 5));
    for (int i = 1; i <= n; ++i) ua.push_back(R(3 * i + 1, 2 + (i * 3) % 7));
    c.expect(hurwitz_count(n, ua, false) == ed_hurwitz(n, false),
             "hurwitz constructive affine n=" + std::to_string(n));
    c.expect(hurwitz_count(n, uh, true) == ed_hurwitz(n, true),
             "hurwitz constructive homogeneous n=" + std::to_string(n));
  }

  CHECK(c.finish());
}

TEST_CASE("matrix critical points and duality") {
  Criterion c(5, "low-rank matrices");

  MatrixData u;
  u.rows = 2;
  u.cols = 2;
  u.entries = {3, 5, 7, 11};
  std::vector<CriticalMatrix> crit = eckart_young_critical(u, 1);
  c.expect(crit.size() == 2, "two rank-1 critical points");
  const MatrixData& b = crit.front().matrix;
  double v11 = b.at(0, 0), v12 = b.at(0, 1), v21 = b.at(1, 0), v22 = b.at(1, 1);
  c.expect(std::abs(v11 * v11 - 3.0 * v11 - 437.0 / 1300.0) <= 1e-9, "v11 quadratic");
  c.expect(std::abs(v12 - (62.0 / 41.0 * v11 + 19.0 / 82.0)) <= 1e-9, "v12 relation");
  c.expect(std::abs(v21 - (88.0 / 41.0 * v11 + 23.0 / 82.0)) <= 1e-9, "v21 relation");
  c.expect(std::abs(v22 - (141.0 / 41.0 * v11 + 14.0 / 41.0)) <= 1e-9, "v22 relation");

  std::mt19937 rng(271828);
  std::uniform_real_distribution<double> dist(-2.0, 2.0);
  auto random_matrix = [&](int s, int t) {
    MatrixData m;
    m.rows = s;
    m.cols = t;
    m.entries.resize(static_cast<size_t>(s) * t);
    for (double& e : m.entries) e = dist(rng);
    return m;
  };
  for (int trial = 0; trial < 20; ++trial) {
    for (auto [s, t] : {std::pair{3, 3}, std::pair{4, 5}}) {
      MatrixData m = random_matrix(s, t);
      for (int r = 1; r < s; ++r) {
        DualityReport dr = duality_check(m, r);
        std::string tag = std::to_string(s) + "x" + std::to_string(t) + " r=" +
                          std::to_string(r) + " trial " + std::to_string(trial);
        c.expect(dr.order_reversed, "proximity order reversed, " + tag);
        c.expect(dr.max_inner_residual <= 1e-9, "orthogonality, " + tag);
        c.expect(dr.max_pythagoras_residual <= 1e-9, "pythagoras, " + tag);
      }
    }
  }

  CHECK(c.finish());
}

TEST_CASE("average ED degrees") {
  Criterion c(6, "average degrees");

  auto band = [&](const char* model, long long samples, double target, double tol) {
    AEDEstimate e = aed_estimate(parse_model(model), samples, 2024, 0);
    std::ostringstream note;
    note << model << " mean " << e.mean << " vs " << target << " +- " << tol;
    c.expect(std::abs(e.mean - target) <= tol, note.str());
  };

  band("ellipse", 100000, 3.0466, 0.03);
  band("cardioid", 100000, 2.8375, 0.03);
  band("rnc:3", 100000, std::sqrt(7.0), 0.03);
  band("rnc:4", 100000, std::sqrt(10.0), 0.03);
  band("gamma3", 100000, 1.162, 0.05);

  double q = aed_quadrature_ellipse(64);
  c.expect(std::abs(q - 3.04658) <= 0.001, "ellipse quadrature " + std::to_string(q));

  band("tensor:2,2", 1000000, 2.000, 0.01);
  band("tensor:2,2,2", 1000000, 4.287, 0.05);
  band("tensor:2,3,3", 1000000, 8.817, 0.10);

  CHECK(c.finish());
}

TEST_CASE("structural properties") {
  Criterion c(7, "property suites");

  // histogram keys: right parity, right range
  auto keys_within = [&](const char* model, std::initializer_list<int> allowed) {
    AEDEstimate e = aed_estimate(parse_model(model), 10000, 77, 0);
    for (const auto& [k, freq] : e.histogram) {
      bool ok = std::find(allowed.begin(), allowed.end(), k) != allowed.end();
      c.expect(ok && freq > 0,
               std::string(model) + " histogram key " + std::to_string(k));
    }
  };
  keys_within("ellipse", {2, 4});
  keys_within("cardioid", {1, 3});
  keys_within("rnc:3", {1, 3});
  keys_within("rnc:4", {0, 2, 4});
  keys_within("gamma3", {1, 3, 5});

  // the count jumps exactly where the discriminant curve of the model
  // changes sign (checked in exact arithmetic on 10^4 fresh draws)
  {
    MultiPoly lame = MultiPoly::parse(
        "64*x^6+48*x^4*y^2+12*x^2*y^4+y^6-432*x^4+756*x^2*y^2-27*y^4"
        "+972*x^2+243*y^2-729", 2);
    ModelEngine engine(parse_model("ellipse"));
    long long mismatches = 0, used = 0;
    for (std::uint64_t i = 0; i < 10000; ++i) {
      SampleRng rng(31, i, 5);
      std::vector<Rational> u = engine.draw(rng);
      Rational sign = lame.evaluate(u);
      if (sign == 0) continue;
      try {
        long long r = engine.real_count(u);
        ++used;
        if ((sign < 0) != (r == 4)) ++mismatches;
      } catch (const RetrySignal&) {
      }
    }
    c.expect(mismatches == 0,
             "ellipse evolute sign vs count: " + std::to_string(mismatches) + " mismatches");
    c.expect(used >= 9990, "ellipse evolute sample yield");
  }
  {
    MultiPoly inner = MultiPoly::parse(
        "27*x^4+54*x^2*y^2+27*y^4+54*x^3+54*x*y^2+36*x^2+9*y^2+8*x", 2);
    ModelEngine engine(parse_model("cardioid"));
    long long mismatches = 0, used = 0;
    for (std::uint64_t i = 0; i < 10000; ++i) {
      SampleRng rng(32, i, 5);
      std::vector<Rational> u = engine.draw(rng);
      Rational sign = inner.evaluate(u);
      if (sign == 0) continue;
      try {
        long long r = engine.real_count(u);
        ++used;
        if ((sign > 0) != (r == 3)) ++mismatches;
      } catch (const RetrySignal&) {
      }
    }
    c.expect(mismatches == 0,
             "cardioid inner-curve sign vs count: " + std::to_string(mismatches) + " mismatches");
    c.expect(used >= 9990, "cardioid inner-curve sample yield");
  }

  // Sturm counting against certified isolation on 200 random polynomials
  {
    std::mt19937 rng(5489);
    std::uniform_int_distribution<int> coeff(-9, 9), deg(1, 12);
    int checked = 0;
    while (checked < 200) {
      int d = deg(rng);
      std::vector<Rational> cs(static_cast<size_t>(d) + 1);
      for (Rational& x : cs) x = Rational(coeff(rng));
      UniPoly p(cs);
      if (p.is_zero() || p.degree() == 0) continue;
      UniPoly sf = squarefree_part(p);
      int via_sturm = sturm_count(sf, std::nullopt, std::nullopt);
      int via_boxes = static_cast<int>(isolate_real_roots(sf).size());
      c.expect(via_sturm == via_boxes,
               "sturm vs isolation at sample " + std::to_string(checked));
      ++checked;
    }
  }

  // permutation symmetry and stabilization of the tensor count
  {
    std::vector<int> base = {2, 3, 4};
    Int ref = ed_segre(base);
    std::vector<int> perm = base;
    std::sort(perm.begin(), perm.end());
    do {
      c.expect(ed_segre(perm) == ref, "permutation invariance");
    } while (std::next_permutation(perm.begin(), perm.end()));
    c.expect(ed_segre({2, 2, 3}) == ed_segre({2, 2, 9}), "stabilization 2,2,*");
    c.expect(ed_segre({2, 3, 4}) == ed_segre({2, 3, 9}), "stabilization 2,3,*");
    c.expect(ed_segre({3, 3, 5}) == ed_segre({3, 3, 9}), "stabilization 3,3,*");
  }

  // curve count from Chern degrees equals the closed form
  for (int d = 1; d <= 10; ++d)
    for (int g = 0; g <= 5; ++g) {
      if (3 * d + 2 * g - 2 <= 0) continue;
      ChernDegrees cd;
      cd.degs = {Int(d), Int(2 - 2 * g)};
      c.expect(ed_from_chern(cd) == ed_smooth_curve(d, g),
               "chern identity d=" + std::to_string(d) + " g=" + std::to_string(g));
    }

  // scheduling must not leak into the numbers or the serialized document
  {
    ModelSpec spec = parse_model("rnc:3");
    AEDEstimate serial = aed_estimate_serial(spec, 2000, 17);
    for (int workers : {1, 2, 5}) {
      AEDEstimate e = aed_estimate(spec, 2000, 17, workers);
      c.expect(e.mean == serial.mean && e.std_error == serial.std_error &&
                   e.histogram == serial.histogram && e.retries == serial.retries,
               "estimate equality at workers=" + std::to_string(workers));
    }

    auto doc = [&](const char* workers) {
      std::vector<const char*> argv = {"eddeg",     "aed",    "--model", "rnc:3",
                                       "--samples", "300",    "--seed",  "5",
                                       "--workers", workers};
      std::ostringstream out, err;
      int code = run_cli(static_cast<int>(argv.size()), argv.data(), out, err);
      c.expect(code == 0, std::string("cli exit code at workers=") + workers);
      return out.str();
    };
    std::string one = doc("1");
    c.expect(!one.empty() && one == doc("4"), "bit-identical document across worker counts");
  }

  CHECK(c.finish());
}
