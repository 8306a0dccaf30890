#include "eddeg/montecarlo.hpp"

#include <algorithm>
#include <cmath>
#include <iterator>
#include <stdexcept>
#include <vector>

// Expected number of real critical points of the ellipse model, written as a
// closed-form double integral over the curve parameter t and a slack
// variable s.  The t-range is unbounded and the integrand only decays like
// 1/t^2, so the tail [1, inf) is folded onto (0, 1] exactly through t -> 1/t
// (the substituted integrand below is polynomial-smooth at 0).  The absolute
// value in the numerator has kinks where its quadratic-in-t^2 factor
// vanishes; integration segments are split at those roots so every Romberg
// pass sees an analytic integrand.

namespace eddeg {

namespace {

constexpr double kTwoPi = 6.283185307179586476925286766559;

// |n4 t^4 + n2 t^2 + n0| * 32 / (q t^2 + 1)^3 *
//   exp(-(e4 t^4 + e2 t^2 + e0) / (2 (q t^2 + 1)^2)) / (2 pi)
struct Kernel {
  double n4, n2, n0;
  double e4, e2, e0;
  double q, qc;  // (q t^2 + qc)

  double operator()(double t) const {
    double t2 = t * t, t4 = t2 * t2;
    double den = q * t2 + qc;
    double den2 = den * den;
    double ex = -(e4 * t4 + e2 * t2 + e0) / (2.0 * den2);
    if (ex < -745.0) return 0.0;  // exp underflow; the tail is exactly negligible
    double num = std::fabs(n4 * t4 + n2 * t2 + n0);
    return 32.0 * num * std::exp(ex) / (den2 * den * kTwoPi);
  }
};

Kernel direct_kernel(double s) {
  double a = 1.0 + 4.0 * s;
  double c = 7.0 + 8.0 * s - 8.0 * s * s;
  return {16.0 * (1.0 + s), 4.0 * (2.0 * s - 1.0), 1.0 + s,
          16.0 * a * a,     8.0 * c,               a * a,
          4.0,              1.0};
}

// the same density after t -> 1/t, including the 1/t^2 Jacobian
Kernel folded_kernel(double s) {
  double a = 1.0 + 4.0 * s;
  double c = 7.0 + 8.0 * s - 8.0 * s * s;
  return {1.0 + s, 4.0 * (2.0 * s - 1.0), 16.0 * (1.0 + s),
          a * a,   8.0 * c,               16.0 * a * a,
          1.0,     4.0};
}

// real roots of a z^2 + b z + c
std::vector<double> quadratic_roots(double a, double b, double c) {
  if (std::fabs(a) < 1e-300) {
    if (std::fabs(b) < 1e-300) return {};
    return {-c / b};
  }
  double disc = b * b - 4.0 * a * c;
  if (disc < 0.0) return {};
  if (disc == 0.0) return {-b / (2.0 * a)};
  double q = -(b + std::copysign(std::sqrt(disc), b)) / 2.0;
  if (q == 0.0) return {0.0};
  return {q / a, c / q};
}

template <typename F>
double romberg(const F& f, double a, double b, double tol, int min_level, int max_level,
               bool* converged) {
  if (converged) *converged = true;
  if (b - a < 1e-15) return 0.0;
  std::vector<double> prev = {0.5 * (b - a) * (f(a) + f(b))};
  double h = b - a;
  for (int k = 1; k <= max_level; ++k) {
    h *= 0.5;
    double sum = 0.0;
    long long halves = 1LL << (k - 1);
    for (long long i = 0; i < halves; ++i) sum += f(a + (2 * i + 1) * h);
    std::vector<double> cur(static_cast<size_t>(k) + 1);
    cur[0] = 0.5 * prev[0] + h * sum;
    double weight = 4.0;
    for (int j = 1; j <= k; ++j) {
      cur[j] = cur[j - 1] + (cur[j - 1] - prev[j - 1]) / (weight - 1.0);
      weight *= 4.0;
    }
    if (k >= min_level && std::fabs(cur[k] - prev[k - 1]) < tol) return cur[k];
    prev = std::move(cur);
  }
  if (converged)
    *converged = false;
  else
    throw std::runtime_error("romberg: no convergence");
  return prev.back();
}

// splits (0,1) at the kink positions sqrt(z) for positive roots z of the
// kernel's quadratic-in-t^2 numerator
std::vector<double> unit_segments(const Kernel& ker) {
  std::vector<double> cuts = {0.0, 1.0};
  for (double z : quadratic_roots(ker.n4, ker.n2, ker.n0))
    if (z > 1e-14 && z < 1.0 - 1e-14) cuts.push_back(std::sqrt(z));
  std::sort(cuts.begin(), cuts.end());
  return cuts;
}

double integrate_unit(const Kernel& ker) {
  std::vector<double> cuts = unit_segments(ker);
  double total = 0.0;
  for (size_t i = 0; i + 1 < cuts.size(); ++i)
    total += romberg(ker, cuts[i], cuts[i + 1], 1e-12, 3, 20, nullptr);
  return total;
}

// integral of the density over the whole real t-line for one slack value
double slice_integral(double s) {
  return 2.0 * (integrate_unit(direct_kernel(s)) + integrate_unit(folded_kernel(s)));
}

}  // namespace

double ellipse_aed_integrand(double t, double s) { return direct_kernel(s)(t); }

double aed_quadrature_ellipse(int resolution) {
  if (resolution < 64) throw std::invalid_argument("quadrature wants resolution >= 64");
  int base_level = 0;
  while ((1 << base_level) < resolution) ++base_level;

  // Outer cuts: +-8 bounds the Gaussian support of the slack variable; the
  // three interior points are where the kink structure of the inner
  // integrand changes (quartic coefficient sign, kink crossing t = 1,
  // discriminant sign), so every outer piece is analytic.
  const double cuts[] = {-40.0, -8.0, -1.0, -0.52, -0.25, 8.0, 40.0};
  double total = 0.0;
  for (size_t i = 0; i + 1 < std::size(cuts); ++i) {
    bool ok = false;
    double piece = romberg(slice_integral, cuts[i], cuts[i + 1], 5e-6, base_level,
                           base_level + 3, &ok);
    if (!ok)
      throw std::runtime_error("ellipse quadrature did not converge in three refinements");
    total += piece;
  }
  return total;
}

}  // namespace eddeg
