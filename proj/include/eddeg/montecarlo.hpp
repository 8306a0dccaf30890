#pragma once

#include "eddeg/estimate.hpp"
#include "eddeg/rng.hpp"
#include "eddeg/solver.hpp"

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace eddeg {

// A sampling experiment: draw Gaussian data in the model's coordinates,
// count its real critical points exactly, average.
struct ModelSpec {
  enum class Kind {
    Ellipse,              // x^2 + 4 y^2 = 4 in R^2
    Cardioid,             // (x^2 + y^2 + x)^2 = x^2 + y^2
    RationalNormalCurve,  // cone over the degree-n normal curve, invariant basis
    Gamma3,               // surface x1 x2 = x3 in R^3
    MatrixRank,           // s x t matrices of rank <= r, Frobenius distance
    Tensor,               // rank-one tensors of the given format
  };
  Kind kind = Kind::Ellipse;
  int degree = 0;                    // RationalNormalCurve
  int rows = 0, cols = 0, rank = 0;  // MatrixRank
  std::vector<int> dims;             // Tensor
};

// "ellipse" | "cardioid" | "gamma3" | "rnc:<n>" | "matrix:<s>,<t>,<r>" |
// "tensor:<d1>,<d2>,...".  Throws std::invalid_argument on anything else.
ModelSpec parse_model(const std::string& text);
std::string model_name(const ModelSpec& spec);

// Pointwise real-critical-count engine.  The symbolic elimination behind the
// curve and surface models runs once in the constructor; each data point then
// costs one specialization plus a Sturm count.
class ModelEngine {
 public:
  explicit ModelEngine(const ModelSpec& spec);

  const ModelSpec& spec() const { return spec_; }
  int ambient_dimension() const;
  long long ed_complex() const;  // complex count every generic sample must hit

  // Real critical points of the squared distance from u.  Throws RetrySignal
  // when u lies on the model's measure-zero degenerate set, and
  // std::logic_error for tensor models (no pointwise counter exists; the
  // sweep delegates to aed_tensor).
  long long real_count(const std::vector<Rational>& u) const;

  // One Gaussian data point in the model's coordinates (the rational normal
  // curve absorbs its sqrt-binomial basis weights here), dyadically truncated
  // so the downstream count is exact.
  std::vector<Rational> draw(SampleRng& rng) const;

 private:
  ModelSpec spec_;
  std::optional<AffineCounter> curve_;
  std::optional<ParamCounter> surface_;
  long long ed_ = 0;
};

// Mean real critical count over `samples` standard-Gaussian data points.
// Deterministic in (seed, samples) no matter how many workers run the sweep;
// retried samples draw from salted streams and are tallied in `retries`.
AEDEstimate aed_estimate(const ModelSpec& spec, long long samples, std::uint64_t seed,
                         int workers = 0);

// Plain-loop reference for the parallel sweep; agrees bit for bit.
AEDEstimate aed_estimate_serial(const ModelSpec& spec, long long samples,
                                std::uint64_t seed);

// The ellipse model's expected count as a 2-D integral in the closed-form
// (t, s) coordinates: Romberg in both directions, the unbounded t-range folded
// onto [0, 1] twice (once directly, once through t -> 1/t).  `resolution` is
// the base panel count of the outer pass; three refinements must converge or
// the call throws std::runtime_error.
double aed_quadrature_ellipse(int resolution = 64);

// Integrand of the above (density of the expected real-critical count).
double ellipse_aed_integrand(double t, double s);

}  // namespace eddeg
