#pragma once

#include "eddeg/multipoly.hpp"
#include "eddeg/unipoly.hpp"

#include <complex>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace eddeg {

// The supplied data point lies on the bad locus (vanishing resultant,
// repeated roots, ...).  Callers should re-randomize the data and try again.
struct RetrySignal : std::runtime_error {
  explicit RetrySignal(const std::string& w) : std::runtime_error(w) {}
};

// A retry loop gave up; carries the last underlying reason.
struct RetryExhausted : std::runtime_error {
  explicit RetryExhausted(const std::string& w) : std::runtime_error(w) {}
};

// Plane curve V(form): arity 2 for an affine curve in C^2, arity 3 for a
// homogeneous curve in P^2.  Known singular points (exact rational
// coordinates; projective points given by any representative) let the solver
// remove the singular locus exactly instead of numerically.
struct PlaneCurve {
  MultiPoly form;
  bool projective = false;
  std::vector<std::vector<Rational>> known_singular_points;
};

PlaneCurve affine_curve(const MultiPoly& f,
                        std::vector<std::vector<Rational>> singular = {});
PlaneCurve projective_curve(const MultiPoly& f,
                            std::vector<std::vector<Rational>> singular = {});

struct DataPoint {
  std::vector<Rational> u;
};

struct CriticalPoint {
  std::vector<std::complex<double>> x;
  double residual = 0.0;
  double distance = 0.0;
  bool real = false;
};

struct CriticalReport {
  long long complex_count = 0;
  long long real_count = 0;
  long long excluded_singular = 0;   // multiplicity removed at the singular locus
  long long excluded_isotropic = 0;  // solutions on x1^2+x2^2+x3^2 = 0 discarded
  std::vector<CriticalPoint> points;  // real first, sorted by distance
};

// f together with g = (u1-x1) df/dx2 - (u2-x2) df/dx1.
std::pair<MultiPoly, MultiPoly> build_affine_system(const PlaneCurve& curve,
                                                    const DataPoint& u);
// F together with G = det of the 3x3 matrix stacking u, x and grad F.
std::pair<MultiPoly, MultiPoly> build_projective_system(const PlaneCurve& curve,
                                                        const DataPoint& u);

// Solves the critical system exactly and counts complex/real solutions with
// singular-locus and (projective) isotropic-quadric filtering.  Throws
// RetrySignal when the data point is degenerate for this curve.
CriticalReport count_critical(const PlaneCurve& curve, const DataPoint& u,
                              bool with_points = true);

// Critical points of D(t) = sum_i w_i (psi_i(t) - u_i)^2 for a bivariate
// parametrization psi; the surviving solution count is divided by the map
// degree k (std::domain_error if it does not divide).  Empty weights mean
// all ones.  real_count is the number of real parameter solutions (not
// divided; our parametrizations restrict to real bijections on fibers).
CriticalReport param_critical_count(const std::vector<MultiPoly>& psi,
                                    const std::vector<Rational>& weights,
                                    const DataPoint& u, int k,
                                    bool with_points = true);

// Constructive count of critical points on the Hurwitz determinant
// hypersurface via its (cz^2+d)-factor parametrization.
long long hurwitz_count(int n, const std::vector<Rational>& u, bool homogeneous);

struct ClosureComparison {
  CriticalReport affine;
  CriticalReport closure;
  bool lemma_checked = false;   // origin-data critical points mapped onto the cone
  double lemma_residual = 0.0;  // worst residual of the mapped points
};

// ED degree of an affine curve next to the ED degree of its projective
// closure (homogenized with the third variable), for the same data stream;
// also pushes the critical points of the distance-from-origin function
// through x -> (x, 1)/(1 + x.x) and checks they are critical on the cone.
ClosureComparison affine_vs_closure(const PlaneCurve& curve, const DataPoint& u);

// x3^deg(f) * f(x1/x3, x2/x3).
MultiPoly homogenize_last(const MultiPoly& f);

// Counts-only engine with the data left symbolic: the eliminant of the
// affine critical system is computed once with (u1, u2) as trailing
// variables, then specialized per data point.  This is what makes
// 1e5-sample Monte Carlo sweeps affordable.
class AffineCounter {
 public:
  explicit AffineCounter(const PlaneCurve& curve);
  // (complex_count, real_count); throws RetrySignal on degenerate data.
  std::pair<long long, long long> counts(const std::vector<Rational>& u) const;

 private:
  MultiPoly elim_;                 // arity 4 (x, y, u1, u2), y absent
  std::vector<Rational> strip_x_;  // x-coordinates of known singular points
  int expected_degree_ = 0;
};

// Same idea for a bivariate parametrization.
class ParamCounter {
 public:
  ParamCounter(const std::vector<MultiPoly>& psi, const std::vector<Rational>& weights,
               int k);
  std::pair<long long, long long> counts(const std::vector<Rational>& u) const;

 private:
  MultiPoly elim_;  // arity 2+n (t1, t2, u1..un), t2 absent
  int n_ = 0;
  int k_ = 1;
  int expected_degree_ = 0;
};

}  // namespace eddeg
