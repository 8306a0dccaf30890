#include "eddeg/tensors.hpp"

#include <cmath>
#include <sstream>
#include <stdexcept>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "eddeg/multipoly.hpp"

namespace eddeg {

namespace {

void validate_shape(const TensorShape& shape) {
  if (shape.dims.empty()) throw std::invalid_argument("need at least one factor");
  for (int m : shape.dims)
    if (m < 2) throw std::invalid_argument("factor dimensions must be >= 2");
  if (!shape.weights.empty()) {
    if (shape.weights.size() != shape.dims.size())
      throw std::invalid_argument("weights must match dims in length");
    for (int w : shape.weights)
      if (w < 1) throw std::invalid_argument("weights must be >= 1");
  }
}

// Product that drops any term whose exponent in variable i exceeds caps[i];
// sound here because exponents never decrease.
MultiPoly capped_mul(const MultiPoly& a, const MultiPoly& b, const std::vector<int>& caps) {
  MultiPoly out(a.arity());
  for (const auto& [ma, ca] : a.terms()) {
    for (const auto& [mb, cb] : b.terms()) {
      Monomial m(a.arity());
      bool keep = true;
      for (int i = 0; i < a.arity(); ++i) {
        m[i] = ma[i] + mb[i];
        if (m[i] > caps[i]) {
          keep = false;
          break;
        }
      }
      if (keep) out.set_coeff(m, out.coeff(m) + ca * cb);
    }
  }
  return out;
}

}  // namespace

Int ed_segre_veronese(const TensorShape& shape) {
  validate_shape(shape);
  int p = static_cast<int>(shape.dims.size());
  std::vector<int> w = shape.weights.empty() ? std::vector<int>(p, 1) : shape.weights;
  std::vector<int> caps(p);
  for (int i = 0; i < p; ++i) caps[i] = shape.dims[i] - 1;

  MultiPoly weighted_sum(p);
  for (int j = 0; j < p; ++j)
    weighted_sum += MultiPoly::var(p, j).scaled(Rational(w[j]));

  MultiPoly acc = MultiPoly::constant(p, 1);
  for (int i = 0; i < p; ++i) {
    MultiPoly zi = MultiPoly::var(p, i);
    MultiPoly zhat = weighted_sum - zi;
    // sum_{k=0}^{caps[i]} zhat^k * zi^{caps[i]-k}
    MultiPoly factor(p);
    MultiPoly zhat_pow = MultiPoly::constant(p, 1);
    for (int k = 0; k <= caps[i]; ++k) {
      factor += capped_mul(zhat_pow, zi.pow(static_cast<unsigned>(caps[i] - k)), caps);
      if (k < caps[i]) zhat_pow = capped_mul(zhat_pow, zhat, caps);
    }
    acc = capped_mul(acc, factor, caps);
  }

  Monomial target(caps.begin(), caps.end());
  Rational c = acc.coeff(target);
  if (denominator(c) != 1) throw std::logic_error("coefficient extraction gave a non-integer");
  return numerator(c);
}

Int ed_segre(const std::vector<int>& dims) {
  return ed_segre_veronese(TensorShape{dims, {}});
}

EnsembleMatrix sample_ensemble(const std::vector<int>& dims, SampleRng& rng) {
  TensorShape shape{dims, {}};
  validate_shape(shape);
  EnsembleMatrix e;
  for (size_t i = 0; i < dims.size(); ++i)
    for (int j = 0; j < dims[i] - 1; ++j) e.block_of.push_back(static_cast<int>(i));
  e.m = static_cast<int>(e.block_of.size());
  e.a.assign(e.m, std::vector<double>(e.m, 0.0));
  double diag = rng.gaussian();
  for (int i = 0; i < e.m; ++i) e.a[i][i] = diag;
  for (int i = 0; i < e.m; ++i)
    for (int j = i + 1; j < e.m; ++j)
      if (e.block_of[i] != e.block_of[j]) {
        double v = rng.gaussian();
        e.a[i][j] = v;
        e.a[j][i] = v;
      }
  return e;
}

double ensemble_constant(const std::vector<int>& dims) {
  int p = static_cast<int>(dims.size());
  int m = 0;
  for (int mi : dims) m += mi - 1;
  Rational r = 1;       // rational part of 1 / prod Gamma(m_i/2)
  int pi_halves = p;    // exponent of sqrt(pi)
  for (int mi : dims) {
    if (mi % 2 == 0) {
      r /= factorial(mi / 2 - 1);
    } else {
      // Gamma(k + 1/2) = (2k)! / (4^k k!) * sqrt(pi)
      int k = (mi - 1) / 2;
      r *= Rational(int_pow(Int(4), static_cast<unsigned>(k)) * factorial(k), factorial(2 * k));
      pi_halves -= 1;
    }
  }
  return to_double(r) * std::pow(M_PI, pi_halves / 2.0) * std::pow(2.0, -m / 2.0);
}

namespace {

double det_lu(std::vector<std::vector<double>> a) {
  int n = static_cast<int>(a.size());
  double det = 1.0;
  for (int k = 0; k < n; ++k) {
    int piv = k;
    for (int i = k + 1; i < n; ++i)
      if (std::fabs(a[i][k]) > std::fabs(a[piv][k])) piv = i;
    if (a[piv][k] == 0.0) return 0.0;
    if (piv != k) {
      std::swap(a[piv], a[k]);
      det = -det;
    }
    det *= a[k][k];
    for (int i = k + 1; i < n; ++i) {
      double f = a[i][k] / a[k][k];
      for (int j = k + 1; j < n; ++j) a[i][j] -= f * a[k][j];
    }
  }
  return det;
}

std::string tensor_model_name(const std::vector<int>& dims) {
  std::ostringstream os;
  os << "tensor:";
  for (size_t i = 0; i < dims.size(); ++i) {
    if (i) os << 'x';
    os << dims[i];
  }
  return os.str();
}

double abs_det_sample(const std::vector<int>& dims, std::uint64_t seed, long long index) {
  SampleRng rng(seed, static_cast<std::uint64_t>(index));
  EnsembleMatrix e = sample_ensemble(dims, rng);
  return std::fabs(det_lu(std::move(e.a)));
}

AEDEstimate finalize(const std::vector<int>& dims, long long samples, std::uint64_t seed,
                     double sum, double sumsq) {
  double c = ensemble_constant(dims);
  double n = static_cast<double>(samples);
  double mean = sum / n;
  double var = samples > 1 ? std::max(0.0, (sumsq - sum * sum / n) / (n - 1.0)) : 0.0;
  AEDEstimate est;
  est.model = tensor_model_name(dims);
  est.samples = samples;
  est.seed = seed;
  est.mean = c * mean;
  est.std_error = c * std::sqrt(var / n);
  return est;
}

constexpr long long kChunk = 4096;

}  // namespace

AEDEstimate aed_tensor(const std::vector<int>& dims, long long samples, std::uint64_t seed,
                       int workers) {
  if (samples < 1) throw std::invalid_argument("need samples >= 1");
  validate_shape(TensorShape{dims, {}});
  long long nchunks = (samples + kChunk - 1) / kChunk;
  std::vector<double> sums(nchunks, 0.0), sumsqs(nchunks, 0.0);
  int nt = workers;
#ifdef _OPENMP
  if (nt <= 0) nt = omp_get_max_threads();
#else
  if (nt <= 0) nt = 1;
#endif
#pragma omp parallel for schedule(dynamic) num_threads(nt)
  for (long long chunk = 0; chunk < nchunks; ++chunk) {
    double s = 0.0, q = 0.0;
    long long lo = chunk * kChunk, hi = std::min(samples, lo + kChunk);
    for (long long i = lo; i < hi; ++i) {
      double v = abs_det_sample(dims, seed, i);
      s += v;
      q += v * v;
    }
    sums[chunk] = s;
    sumsqs[chunk] = q;
  }
  double sum = 0.0, sumsq = 0.0;
  for (long long c = 0; c < nchunks; ++c) {
    sum += sums[c];
    sumsq += sumsqs[c];
  }
  return finalize(dims, samples, seed, sum, sumsq);
}

AEDEstimate aed_tensor_serial(const std::vector<int>& dims, long long samples,
                              std::uint64_t seed) {
  if (samples < 1) throw std::invalid_argument("need samples >= 1");
  validate_shape(TensorShape{dims, {}});
  // same chunked accumulation as the parallel sweep, so the two agree bit
  // for bit (a single running sum would associate the additions differently)
  double sum = 0.0, sumsq = 0.0;
  for (long long lo = 0; lo < samples; lo += kChunk) {
    double s = 0.0, q = 0.0;
    long long hi = std::min(samples, lo + kChunk);
    for (long long i = lo; i < hi; ++i) {
      double v = abs_det_sample(dims, seed, i);
      s += v;
      q += v * v;
    }
    sum += s;
    sumsq += q;
  }
  return finalize(dims, samples, seed, sum, sumsq);
}

}  // namespace eddeg
