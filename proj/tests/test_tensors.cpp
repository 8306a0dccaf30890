#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <algorithm>
#include <cmath>

#include "eddeg/formulas.hpp"
#include "eddeg/tensors.hpp"
#include "eddeg/toric.hpp"

using namespace eddeg;

TEST_CASE("matrix formats reduce to singular values") {
  for (int s = 2; s <= 5; ++s)
    for (int t = s; t <= 5; ++t) CHECK(ed_segre({s, t}) == std::min(s, t));
}

TEST_CASE("pinned binary-format counts are factorials") {
  long long expected[] = {6, 24, 120, 720, 5040, 40320, 362880, 3628800};
  std::vector<int> dims;
  dims.push_back(2);
  dims.push_back(2);
  for (int p = 3; p <= 10; ++p) {
    dims.push_back(2);
    CHECK(ed_segre(dims) == expected[p - 3]);
  }
}

TEST_CASE("pinned mixed-format counts") {
  struct Row {
    std::vector<int> dims;
    long long ed;
  };
  const Row rows[] = {{{2, 2, 3}, 8},  {{2, 2, 4}, 8},  {{2, 2, 5}, 8},
                      {{2, 3, 3}, 15}, {{2, 3, 4}, 18}, {{2, 3, 5}, 18},
                      {{3, 3, 3}, 37}, {{3, 3, 4}, 55}, {{3, 3, 5}, 61}};
  for (const Row& row : rows) CHECK(ed_segre(row.dims) == row.ed);
}

TEST_CASE("permutation symmetry") {
  std::vector<int> dims = {2, 3, 4};
  Int expected = ed_segre(dims);
  std::sort(dims.begin(), dims.end());
  do {
    CHECK(ed_segre(dims) == expected);
  } while (std::next_permutation(dims.begin(), dims.end()));
}

TEST_CASE("the last factor stabilizes once it dominates") {
  // beyond m_p >= 1 + sum (m_i - 1) the count stops changing
  CHECK(ed_segre({2, 2, 3}) == ed_segre({2, 2, 9}));
  CHECK(ed_segre({2, 3, 4}) == ed_segre({2, 3, 9}));
  CHECK(ed_segre({3, 3, 5}) == ed_segre({3, 3, 9}));
}

TEST_CASE("invariant coordinates never beat general ones") {
  // the toric count over the product of simplices is the general-coordinates one
  for (int s = 2; s <= 3; ++s)
    for (int t = s; t <= 3; ++t)
      CHECK(ed_segre({s, t}) <=
            ed_toric(product_polytope(simplex(s - 1), simplex(t - 1))));
}

TEST_CASE("partially symmetric formats") {
  CHECK(ed_segre_veronese({{2, 3}, {3, 2}}) == 27);
  // weights of one reduce to the plain count
  CHECK(ed_segre_veronese({{2, 3, 3}, {1, 1, 1}}) == ed_segre({2, 3, 3}));
  CHECK(ed_segre_veronese({{3, 3}, {1, 1}}) == ed_segre({3, 3}));
  // one symmetric factor counts tensor eigenvectors
  for (int m = 2; m <= 5; ++m)
    for (int w = 2; w <= 5; ++w)
      CHECK(ed_segre_veronese({{m}, {w}}) == ed_eigen_count(m, w));
  CHECK_THROWS_AS(ed_segre_veronese({{2, 2}, {1}}), std::invalid_argument);
}

TEST_CASE("ensemble matrices have the advertised shape") {
  std::vector<int> dims = {3, 3, 3};
  int checked = 0;
  for (int sample = 0; sample < 1000; ++sample) {
    SampleRng rng(17, static_cast<uint64_t>(sample), 0);
    EnsembleMatrix e = sample_ensemble(dims, rng);
    REQUIRE(e.m == 6);
    REQUIRE(e.block_of.size() == 6);
    for (int i = 0; i < 6; ++i) CHECK(e.block_of[i] == i / 2);
    for (int i = 0; i < 6; ++i) {
      CHECK(e.a[i][i] == e.a[0][0]);  // one shared diagonal value
      for (int j = 0; j < 6; ++j) {
        CHECK(e.a[i][j] == e.a[j][i]);
        if (i != j && e.block_of[i] == e.block_of[j]) {
          CHECK(e.a[i][j] == 0.0);  // zeros inside diagonal blocks
          ++checked;
        }
      }
    }
  }
  CHECK(checked == 1000 * 6);
}

TEST_CASE("ensemble constant for the matrix case") {
  // p = 2, m = 2: pi / (2 * Gamma(1)^2) = pi/2
  CHECK(ensemble_constant({2, 2}) == doctest::Approx(1.5707963267948966).epsilon(1e-12));
  // p = 3, m = 3, Gamma(1) factors: pi^{3/2} / 2^{3/2}
  double expect = std::pow(M_PI, 1.5) / std::pow(2.0, 1.5);
  CHECK(ensemble_constant({2, 2, 2}) == doctest::Approx(expect).epsilon(1e-12));
}

TEST_CASE("sampled average for 2x2 matrices converges to 2") {
  AEDEstimate e = aed_tensor({2, 2}, 50000, 3);
  CHECK(e.samples == 50000);
  CHECK(e.histogram.empty());
  CHECK(e.retries == 0);
  CHECK(std::abs(e.mean - 2.0) < 4.0 * e.std_error + 0.01);
}

TEST_CASE("parallel tensor sweep is bit-identical to the serial loop") {
  for (std::uint64_t seed : {1ULL, 9ULL}) {
    AEDEstimate serial = aed_tensor_serial({2, 3, 3}, 20000, seed);
    AEDEstimate wide = aed_tensor({2, 3, 3}, 20000, seed, 4);
    AEDEstimate narrow = aed_tensor({2, 3, 3}, 20000, seed, 1);
    CHECK(serial.mean == wide.mean);
    CHECK(serial.std_error == wide.std_error);
    CHECK(serial.mean == narrow.mean);
    CHECK(serial.std_error == narrow.std_error);
  }
}
