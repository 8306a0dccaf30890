#include "eddeg/montecarlo.hpp"

#include "eddeg/tensors.hpp"

#include <algorithm>
#include <cmath>
#include <exception>
#include <sstream>
#include <stdexcept>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace eddeg {

namespace {

std::vector<int> parse_int_list(const std::string& text) {
  std::vector<int> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    size_t pos = 0;
    int v = std::stoi(item, &pos);
    if (pos != item.size()) throw std::invalid_argument("bad integer '" + item + "'");
    out.push_back(v);
  }
  return out;
}

MultiPoly ellipse_form() { return MultiPoly::parse("x^2+4*y^2-4", 2); }

MultiPoly cardioid_form() {
  // (x^2 + y^2 + x)^2 - (x^2 + y^2), singular at the origin
  return MultiPoly::parse("x^4+2*x^2*y^2+y^4+2*x^3+2*x*y^2-y^2", 2);
}

std::vector<MultiPoly> gamma3_map() {
  return {MultiPoly::parse("x", 2), MultiPoly::parse("y", 2), MultiPoly::parse("x*y", 2)};
}

}  // namespace

ModelSpec parse_model(const std::string& text) {
  ModelSpec spec;
  std::string head = text, args;
  if (size_t colon = text.find(':'); colon != std::string::npos) {
    head = text.substr(0, colon);
    args = text.substr(colon + 1);
  }
  try {
    if (head == "ellipse" && args.empty()) {
      spec.kind = ModelSpec::Kind::Ellipse;
    } else if (head == "cardioid" && args.empty()) {
      spec.kind = ModelSpec::Kind::Cardioid;
    } else if (head == "gamma3" && args.empty()) {
      spec.kind = ModelSpec::Kind::Gamma3;
    } else if (head == "rnc") {
      spec.kind = ModelSpec::Kind::RationalNormalCurve;
      auto v = parse_int_list(args);
      if (v.size() != 1 || v[0] < 1 || v[0] > 12)
        throw std::invalid_argument("rnc wants a degree between 1 and 12");
      spec.degree = v[0];
    } else if (head == "matrix") {
      spec.kind = ModelSpec::Kind::MatrixRank;
      auto v = parse_int_list(args);
      if (v.size() != 3) throw std::invalid_argument("matrix wants s,t,r");
      spec.rows = v[0];
      spec.cols = v[1];
      spec.rank = v[2];
      if (spec.rows < 1 || spec.rows > spec.cols || spec.cols > 32 || spec.rank < 1 ||
          spec.rank > spec.rows)
        throw std::invalid_argument("matrix wants 1 <= r <= s <= t <= 32");
    } else if (head == "tensor") {
      spec.kind = ModelSpec::Kind::Tensor;
      spec.dims = parse_int_list(args);
      if (spec.dims.empty()) throw std::invalid_argument("tensor wants dimensions");
      for (int d : spec.dims)
        if (d < 2) throw std::invalid_argument("tensor dimensions must be >= 2");
    } else {
      throw std::invalid_argument("unknown model");
    }
  } catch (const std::invalid_argument& e) {
    throw std::invalid_argument("model '" + text + "': " + e.what());
  }
  return spec;
}

std::string model_name(const ModelSpec& spec) {
  switch (spec.kind) {
    case ModelSpec::Kind::Ellipse:
      return "ellipse";
    case ModelSpec::Kind::Cardioid:
      return "cardioid";
    case ModelSpec::Kind::Gamma3:
      return "gamma3";
    case ModelSpec::Kind::RationalNormalCurve:
      return "rnc:" + std::to_string(spec.degree);
    case ModelSpec::Kind::MatrixRank:
      return "matrix:" + std::to_string(spec.rows) + "," + std::to_string(spec.cols) + "," +
             std::to_string(spec.rank);
    case ModelSpec::Kind::Tensor: {
      std::string s = "tensor:";
      for (size_t i = 0; i < spec.dims.size(); ++i)
        s += (i ? "," : "") + std::to_string(spec.dims[i]);
      return s;
    }
  }
  return "?";
}

ModelEngine::ModelEngine(const ModelSpec& spec) : spec_(spec) {
  switch (spec_.kind) {
    case ModelSpec::Kind::Ellipse:
      curve_.emplace(affine_curve(ellipse_form()));
      ed_ = 4;
      break;
    case ModelSpec::Kind::Cardioid:
      curve_.emplace(affine_curve(cardioid_form(), {{Rational(0), Rational(0)}}));
      ed_ = 3;
      break;
    case ModelSpec::Kind::Gamma3:
      surface_.emplace(gamma3_map(), std::vector<Rational>{}, 1);
      ed_ = 5;
      break;
    case ModelSpec::Kind::RationalNormalCurve:
      if (spec_.degree < 1) throw std::invalid_argument("rnc degree must be >= 1");
      ed_ = spec_.degree;  // degree of the tangency form below
      break;
    case ModelSpec::Kind::MatrixRank:
      if (spec_.rank < 1 || spec_.rank > spec_.rows || spec_.rows > spec_.cols)
        throw std::invalid_argument("matrix model wants 1 <= r <= s <= t");
      ed_ = static_cast<long long>(binomial(spec_.rows, spec_.rank));
      break;
    case ModelSpec::Kind::Tensor:
      // no exact pointwise counter; sweeps go through aed_tensor
      ed_ = ed_segre(spec_.dims).convert_to<long long>();
      break;
  }
}

int ModelEngine::ambient_dimension() const {
  switch (spec_.kind) {
    case ModelSpec::Kind::Ellipse:
    case ModelSpec::Kind::Cardioid:
      return 2;
    case ModelSpec::Kind::Gamma3:
      return 3;
    case ModelSpec::Kind::RationalNormalCurve:
      return spec_.degree + 1;
    case ModelSpec::Kind::MatrixRank:
      return spec_.rows * spec_.cols;
    case ModelSpec::Kind::Tensor: {
      int n = 1;
      for (int d : spec_.dims) n *= d;
      return n;
    }
  }
  return 0;
}

long long ModelEngine::ed_complex() const { return ed_; }

// The cone over the rational normal curve carries the basis in which the
// curve is lambda (t1, t2) -> lambda * (sqrt(binom(n,i)) t1^i t2^(n-i))_i, so
// a data vector u is the binary form P = sum u_i t1^i t2^(n-i) and critical
// directions are the zeros of the rotational derivative W = t1 P_t2 - t2 P_t1
// (the radial coordinate has a unique solution along every direction).
long long ModelEngine::real_count(const std::vector<Rational>& u) const {
  if (static_cast<int>(u.size()) != ambient_dimension())
    throw std::invalid_argument("data dimension mismatch for " + model_name(spec_));
  switch (spec_.kind) {
    case ModelSpec::Kind::Ellipse:
    case ModelSpec::Kind::Cardioid: {
      auto [complex_n, real_n] = curve_->counts(u);
      if (complex_n != ed_)
        throw RetrySignal("complex count " + std::to_string(complex_n) + " != " +
                          std::to_string(ed_));
      return real_n;
    }
    case ModelSpec::Kind::Gamma3: {
      auto [complex_n, real_n] = surface_->counts(u);
      if (complex_n != ed_)
        throw RetrySignal("complex count " + std::to_string(complex_n) + " != " +
                          std::to_string(ed_));
      return real_n;
    }
    case ModelSpec::Kind::RationalNormalCurve: {
      const int n = spec_.degree;
      std::vector<Rational> w(static_cast<size_t>(n) + 1, Rational(0));
      for (int a = 0; a <= n; ++a) {
        if (a >= 1) w[a] += Rational(n - a + 1) * u[a - 1];
        if (a + 1 <= n) w[a] -= Rational(a + 1) * u[a + 1];
      }
      UniPoly tangency(w);
      if (tangency.is_zero() || tangency.degree() != n)
        throw RetrySignal("tangency form dropped degree");
      UniPoly form(std::vector<Rational>(u.begin(), u.end()));
      if (!form.is_zero() && form.degree() > 0 &&
          unipoly_gcd(tangency, form).degree() > 0)
        throw RetrySignal("critical direction lies on the cone's vertex fiber");
      SturmChain chain(tangency);
      if (!chain.valid()) throw RetrySignal("tangency form not square-free");
      return chain.count_all();
    }
    case ModelSpec::Kind::MatrixRank:
      return ed_;  // every critical matrix is real
    case ModelSpec::Kind::Tensor:
      throw std::logic_error("tensor models have no pointwise count; use aed_estimate");
  }
  throw std::logic_error("unreachable");
}

std::vector<Rational> ModelEngine::draw(SampleRng& rng) const {
  const int dim = ambient_dimension();
  std::vector<Rational> u;
  u.reserve(dim);
  if (spec_.kind == ModelSpec::Kind::RationalNormalCurve) {
    const int n = spec_.degree;
    for (int i = 0; i <= n; ++i) {
      double w = std::sqrt(to_double(binomial(n, i)));
      u.push_back(dyadic(w * rng.gaussian()));
    }
  } else {
    for (int i = 0; i < dim; ++i) u.push_back(dyadic(rng.gaussian()));
  }
  return u;
}

namespace {

struct Partial {
  long long sum = 0;
  long long sumsq = 0;
  std::map<int, long long> hist;
  long long retries = 0;
};

long long count_one(const ModelEngine& engine, std::uint64_t seed, long long index,
                    long long& retries) {
  std::string last = "";
  for (std::uint64_t salt = 0; salt < 32; ++salt) {
    SampleRng rng(seed, static_cast<std::uint64_t>(index), salt);
    std::vector<Rational> u = engine.draw(rng);
    try {
      return engine.real_count(u);
    } catch (const RetrySignal& e) {
      ++retries;
      last = e.what();
    }
  }
  throw RetryExhausted("sample " + std::to_string(index) + ": 32 degenerate draws (" +
                       last + ")");
}

AEDEstimate finalize_counts(const ModelSpec& spec, long long samples, std::uint64_t seed,
                            const std::vector<Partial>& parts) {
  AEDEstimate est;
  est.model = model_name(spec);
  est.samples = samples;
  est.seed = seed;
  long long sum = 0, sumsq = 0, retries = 0;
  for (const Partial& p : parts) {
    sum += p.sum;
    sumsq += p.sumsq;
    retries += p.retries;
    for (const auto& [k, v] : p.hist) est.histogram[k] += v;
  }
  est.mean = static_cast<double>(sum) / static_cast<double>(samples);
  if (samples > 1) {
    double var = (static_cast<double>(sumsq) -
                  static_cast<double>(sum) * static_cast<double>(sum) / samples) /
                 static_cast<double>(samples - 1);
    est.std_error = std::sqrt(std::max(0.0, var) / static_cast<double>(samples));
  }
  est.retries = static_cast<int>(retries);
  return est;
}

constexpr long long kChunk = 4096;

AEDEstimate run_exact(const ModelSpec& spec, long long samples, std::uint64_t seed,
                      int workers, bool parallel) {
  ModelEngine engine(spec);
  const long long nchunks = (samples + kChunk - 1) / kChunk;
  std::vector<Partial> parts(nchunks);
  std::exception_ptr failure;

  auto run_chunk = [&](long long c) {
    Partial& p = parts[c];
    const long long lo = c * kChunk, hi = std::min(samples, lo + kChunk);
    for (long long i = lo; i < hi; ++i) {
      long long k = count_one(engine, seed, i, p.retries);
      p.sum += k;
      p.sumsq += k * k;
      ++p.hist[static_cast<int>(k)];
    }
  };

  if (!parallel) {
    for (long long c = 0; c < nchunks; ++c) run_chunk(c);
  } else {
    int nt = workers;
#ifdef _OPENMP
    if (nt <= 0) nt = omp_get_max_threads();
#else
    if (nt <= 0) nt = 1;
#endif
#pragma omp parallel for schedule(dynamic) num_threads(nt)
    for (long long c = 0; c < nchunks; ++c) {
      try {
        run_chunk(c);
      } catch (...) {
#pragma omp critical
        if (!failure) failure = std::current_exception();
      }
    }
    if (failure) std::rethrow_exception(failure);
  }
  return finalize_counts(spec, samples, seed, parts);
}

AEDEstimate run_matrix(const ModelSpec& spec, long long samples, std::uint64_t seed) {
  // Every critical point of the rank-r approximation problem is real, so the
  // count is the same binomial for every data matrix: zero variance, no draws.
  AEDEstimate est;
  est.model = model_name(spec);
  est.samples = samples;
  est.seed = seed;
  long long k = static_cast<long long>(binomial(spec.rows, spec.rank));
  est.mean = static_cast<double>(k);
  est.std_error = 0.0;
  est.histogram[static_cast<int>(k)] = samples;
  return est;
}

}  // namespace

AEDEstimate aed_estimate(const ModelSpec& spec, long long samples, std::uint64_t seed,
                         int workers) {
  if (samples < 100) throw std::invalid_argument("aed_estimate wants samples >= 100");
  switch (spec.kind) {
    case ModelSpec::Kind::MatrixRank:
      return run_matrix(spec, samples, seed);
    case ModelSpec::Kind::Tensor: {
      AEDEstimate est = aed_tensor(spec.dims, samples, seed, workers);
      est.model = model_name(spec);
      return est;
    }
    default:
      return run_exact(spec, samples, seed, workers, true);
  }
}

AEDEstimate aed_estimate_serial(const ModelSpec& spec, long long samples,
                                std::uint64_t seed) {
  if (samples < 100) throw std::invalid_argument("aed_estimate wants samples >= 100");
  switch (spec.kind) {
    case ModelSpec::Kind::MatrixRank:
      return run_matrix(spec, samples, seed);
    case ModelSpec::Kind::Tensor: {
      AEDEstimate est = aed_tensor_serial(spec.dims, samples, seed);
      est.model = model_name(spec);
      return est;
    }
    default:
      return run_exact(spec, samples, seed, 1, false);
  }
}

}  // namespace eddeg
