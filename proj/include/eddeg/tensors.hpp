#pragma once

#include <vector>

#include "eddeg/estimate.hpp"
#include "eddeg/rational.hpp"
#include "eddeg/rng.hpp"

namespace eddeg {

struct TensorShape {
  std::vector<int> dims;     // m_1..m_p, each >= 2
  std::vector<int> weights;  // omega_1..omega_p >= 1; empty means all ones
};

// Rank-one tensors of the given format in invariant coordinates.
Int ed_segre(const std::vector<int>& dims);

// Partially symmetric rank-one tensors with symmetrization weights.
Int ed_segre_veronese(const TensorShape& shape);

// Symmetric m x m sample, m = sum(m_i - 1): one shared N(0,1) value down the
// diagonal, independent N(0,1) entries across blocks, zeros inside blocks.
struct EnsembleMatrix {
  int m = 0;
  std::vector<int> block_of;           // row -> factor index
  std::vector<std::vector<double>> a;  // symmetric entries
};

EnsembleMatrix sample_ensemble(const std::vector<int>& dims, SampleRng& rng);

// pi^{p/2} / (2^{m/2} prod Gamma(m_i/2)), evaluated from the exact
// half-integer Gamma values.
double ensemble_constant(const std::vector<int>& dims);

// Mean of constant * |det sample| with standard error; deterministic in
// (seed, samples) independent of worker count.
AEDEstimate aed_tensor(const std::vector<int>& dims, long long samples,
                       std::uint64_t seed, int workers = 0);

// Plain-loop reference implementation for the parallel kernel.
AEDEstimate aed_tensor_serial(const std::vector<int>& dims, long long samples,
                              std::uint64_t seed);

}  // namespace eddeg
