#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace eddeg {

// Dense real matrix, row-major, rows <= cols.
struct MatrixData {
  int rows = 0;
  int cols = 0;
  std::vector<double> entries;

  double& at(int i, int j) { return entries[static_cast<size_t>(i) * cols + j]; }
  double at(int i, int j) const { return entries[static_cast<size_t>(i) * cols + j]; }
  double frobenius() const;
};

// Lines of whitespace-separated decimal numbers, one matrix row per line.
MatrixData read_matrix(std::istream& in);
MatrixData read_matrix_file(const std::string& path);

// U = left * diag(singular_values) * right, with left s x s and right t x t
// orthogonal and the singular values sorted descending.
struct SVDResult {
  int rows = 0, cols = 0;
  std::vector<double> left;             // s x s, row-major
  std::vector<double> singular_values;  // length s
  std::vector<double> right;            // t x t, row-major
};

SVDResult jacobi_svd(const MatrixData& u);

// One critical point of the squared-distance function on the variety of
// matrices of rank <= r: the data matrix with all but r singular values
// zeroed out in its SVD.
struct CriticalMatrix {
  std::vector<int> kept;  // which singular values survive, ascending indices
  MatrixData matrix;
  double distance = 0.0;  // Frobenius distance to the data matrix
};

// All binomial(s, r) critical rank-r matrices, sorted by distance ascending;
// the first entry is the best rank-r approximation.  Throws
// std::domain_error when two singular values coincide within 1e-8 (the
// enumeration is only valid for generic data).
std::vector<CriticalMatrix> eckart_young_critical(const MatrixData& u, int r);

struct DualityPair {
  std::vector<int> kept;        // index set of the rank-r critical point
  double distance_low = 0.0;    // distance of U_I (rank r list)
  double distance_high = 0.0;   // distance of the complementary point
  double inner_residual = 0.0;  // |<U_I, U_Ic>|
  double pythagoras_residual = 0.0;  // | |U|^2 - |U_I|^2 - |U_Ic|^2 |
};

struct DualityReport {
  int rank = 0;
  std::vector<DualityPair> pairs;  // in ascending rank-r distance order
  double max_inner_residual = 0.0;
  double max_pythagoras_residual = 0.0;
  bool order_reversed = false;  // complementary list is in exactly reversed order
};

// Pairs each critical point on the rank-r variety with its complement on the
// rank-(s-r) variety and verifies the orthogonal-decomposition identities.
DualityReport duality_check(const MatrixData& u, int r);

}  // namespace eddeg
