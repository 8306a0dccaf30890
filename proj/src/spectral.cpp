#include "eddeg/spectral.hpp"

#include <Eigen/Dense>
#include <Eigen/SVD>

#include <algorithm>
#include <cmath>
#include <fstream>
#include <map>
#include <sstream>
#include <stdexcept>

namespace eddeg {

namespace {

using RowMat = Eigen::Matrix<double, Eigen::Dynamic, Eigen::Dynamic, Eigen::RowMajor>;

RowMat to_eigen(const MatrixData& m) {
  return Eigen::Map<const RowMat>(m.entries.data(), m.rows, m.cols);
}

MatrixData from_eigen(const RowMat& e) {
  MatrixData m;
  m.rows = static_cast<int>(e.rows());
  m.cols = static_cast<int>(e.cols());
  m.entries.assign(e.data(), e.data() + e.size());
  return m;
}

}  // namespace

double MatrixData::frobenius() const {
  double s = 0.0;
  for (double v : entries) s += v * v;
  return std::sqrt(s);
}

MatrixData read_matrix(std::istream& in) {
  std::vector<std::vector<double>> rows;
  std::string line;
  while (std::getline(in, line)) {
    if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
    std::istringstream ls(line);
    std::vector<double> row;
    double v;
    while (ls >> v) row.push_back(v);
    if (!ls.eof()) throw std::invalid_argument("matrix file: non-numeric token");
    rows.push_back(std::move(row));
  }
  if (rows.empty()) throw std::invalid_argument("matrix file: no rows");
  MatrixData m;
  m.rows = static_cast<int>(rows.size());
  m.cols = static_cast<int>(rows[0].size());
  for (const auto& r : rows) {
    if (static_cast<int>(r.size()) != m.cols)
      throw std::invalid_argument("matrix file: ragged rows");
    m.entries.insert(m.entries.end(), r.begin(), r.end());
  }
  if (m.rows > m.cols)
    throw std::invalid_argument("matrix must have rows <= cols");
  return m;
}

MatrixData read_matrix_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::invalid_argument("cannot open matrix file: " + path);
  return read_matrix(in);
}

SVDResult jacobi_svd(const MatrixData& u) {
  if (u.rows <= 0 || u.rows > u.cols || u.cols > 32)
    throw std::invalid_argument("jacobi_svd expects 1 <= rows <= cols <= 32");
  RowMat a = to_eigen(u);
  Eigen::JacobiSVD<RowMat> svd(a, Eigen::ComputeFullU | Eigen::ComputeFullV);
  SVDResult r;
  r.rows = u.rows;
  r.cols = u.cols;
  RowMat left = svd.matrixU();
  RowMat right = svd.matrixV().transpose();
  r.left.assign(left.data(), left.data() + left.size());
  r.right.assign(right.data(), right.data() + right.size());
  const auto& sv = svd.singularValues();
  r.singular_values.assign(sv.data(), sv.data() + u.rows);
  return r;
}

std::vector<CriticalMatrix> eckart_young_critical(const MatrixData& u, int r) {
  const int s = u.rows;
  if (r < 1 || r > s) throw std::invalid_argument("rank out of range");
  SVDResult svd = jacobi_svd(u);
  for (int i = 0; i < s; ++i)
    for (int j = i + 1; j < s; ++j)
      if (std::abs(svd.singular_values[i] - svd.singular_values[j]) < 1e-8)
        throw std::domain_error("repeated singular values: data is not generic");

  RowMat t1 = Eigen::Map<const RowMat>(svd.left.data(), s, s);
  RowMat t2 = Eigen::Map<const RowMat>(svd.right.data(), u.cols, u.cols);

  std::vector<CriticalMatrix> out;
  std::vector<int> idx(r);
  for (int i = 0; i < r; ++i) idx[i] = i;
  while (true) {
    RowMat diag = RowMat::Zero(s, u.cols);
    double excluded = 0.0;
    for (int i = 0, k = 0; i < s; ++i) {
      if (k < r && idx[k] == i) {
        diag(i, i) = svd.singular_values[i];
        ++k;
      } else {
        excluded += svd.singular_values[i] * svd.singular_values[i];
      }
    }
    CriticalMatrix cm;
    cm.kept = idx;
    cm.matrix = from_eigen(t1 * diag * t2);
    cm.distance = std::sqrt(excluded);
    out.push_back(std::move(cm));

    // next r-subset in lexicographic order
    int pos = r - 1;
    while (pos >= 0 && idx[pos] == s - r + pos) --pos;
    if (pos < 0) break;
    ++idx[pos];
    for (int j = pos + 1; j < r; ++j) idx[j] = idx[j - 1] + 1;
  }
  std::sort(out.begin(), out.end(), [](const CriticalMatrix& a, const CriticalMatrix& b) {
    return a.distance < b.distance;
  });
  return out;
}

DualityReport duality_check(const MatrixData& u, int r) {
  const int s = u.rows;
  auto low = eckart_young_critical(u, r);

  std::vector<CriticalMatrix> high;
  if (r == s) {
    CriticalMatrix zero;
    zero.matrix.rows = u.rows;
    zero.matrix.cols = u.cols;
    zero.matrix.entries.assign(u.entries.size(), 0.0);
    zero.distance = u.frobenius();
    high.push_back(std::move(zero));
  } else {
    high = eckart_young_critical(u, s - r);
  }

  std::map<std::vector<int>, int> high_by_kept;
  for (size_t i = 0; i < high.size(); ++i) high_by_kept[high[i].kept] = static_cast<int>(i);

  const double norm2 = u.frobenius() * u.frobenius();
  DualityReport rep;
  rep.rank = r;
  rep.order_reversed = true;
  for (size_t i = 0; i < low.size(); ++i) {
    std::vector<int> complement;
    for (int j = 0, k = 0; j < s; ++j) {
      if (k < static_cast<int>(low[i].kept.size()) && low[i].kept[k] == j)
        ++k;
      else
        complement.push_back(j);
    }
    auto it = high_by_kept.find(complement);
    if (it == high_by_kept.end()) throw std::logic_error("missing complementary critical point");
    const CriticalMatrix& mate = high[it->second];
    if (it->second != static_cast<int>(high.size() - 1 - i)) rep.order_reversed = false;

    double inner = 0.0, a2 = 0.0, b2 = 0.0;
    for (size_t k = 0; k < u.entries.size(); ++k) {
      inner += low[i].matrix.entries[k] * mate.matrix.entries[k];
      a2 += low[i].matrix.entries[k] * low[i].matrix.entries[k];
      b2 += mate.matrix.entries[k] * mate.matrix.entries[k];
    }
    DualityPair pair;
    pair.kept = low[i].kept;
    pair.distance_low = low[i].distance;
    pair.distance_high = mate.distance;
    pair.inner_residual = std::abs(inner);
    pair.pythagoras_residual = std::abs(norm2 - a2 - b2);
    rep.max_inner_residual = std::max(rep.max_inner_residual, pair.inner_residual);
    rep.max_pythagoras_residual = std::max(rep.max_pythagoras_residual, pair.pythagoras_residual);
    rep.pairs.push_back(std::move(pair));
  }
  return rep;
}

}  // namespace eddeg
