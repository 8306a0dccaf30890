#include "eddeg/toric.hpp"

#include <algorithm>
#include <fstream>
#include <map>
#include <set>
#include <sstream>
#include <stdexcept>

#include "eddeg/polymatrix.hpp"

namespace eddeg {

namespace {

using QVec = std::vector<Rational>;
using QMat = std::vector<QVec>;
using Key = std::vector<int>;

// Reduced row echelon form in place; returns pivot column per pivot row.
std::vector<int> rref(QMat& m) {
  std::vector<int> pivots;
  if (m.empty()) return pivots;
  int rows = static_cast<int>(m.size()), cols = static_cast<int>(m[0].size());
  int r = 0;
  for (int c = 0; c < cols && r < rows; ++c) {
    int p = -1;
    for (int i = r; i < rows; ++i)
      if (m[i][c] != 0) {
        p = i;
        break;
      }
    if (p < 0) continue;
    std::swap(m[r], m[p]);
    Rational inv = m[r][c];
    for (int j = 0; j < cols; ++j) m[r][j] /= inv;
    for (int i = 0; i < rows; ++i) {
      if (i == r || m[i][c] == 0) continue;
      Rational f = m[i][c];
      for (int j = 0; j < cols; ++j) m[i][j] -= f * m[r][j];
    }
    pivots.push_back(c);
    ++r;
  }
  return pivots;
}

struct AffineCoords {
  int k = 0;                 // affine dimension of the point set
  std::vector<QVec> coords;  // per point, length k
};

// Coordinates of each point relative to an echelon basis of the affine hull.
AffineCoords affine_coords(const std::vector<QVec>& pts) {
  AffineCoords ac;
  int q = static_cast<int>(pts.size());
  if (q == 0) return ac;
  int amb = static_cast<int>(pts[0].size());
  QMat diffs;
  for (int i = 1; i < q; ++i) {
    QVec d(amb);
    for (int j = 0; j < amb; ++j) d[j] = pts[i][j] - pts[0][j];
    diffs.push_back(std::move(d));
  }
  QMat basis = diffs;
  std::vector<int> pivots = rref(basis);
  ac.k = static_cast<int>(pivots.size());
  ac.coords.assign(q, QVec(ac.k, Rational(0)));
  for (int i = 1; i < q; ++i) {
    // Echelon rows have unit pivots and cleared pivot columns, so the
    // coordinates can be read off directly.
    for (int r = 0; r < ac.k; ++r) ac.coords[i][r] = diffs[i - 1][pivots[r]];
  }
  return ac;
}

// One nonzero vector orthogonal to the rows of m (rank must be cols-1).
QVec nullvector(QMat m, int cols) {
  std::vector<int> pivots = rref(m);
  if (static_cast<int>(pivots.size()) != cols - 1) return {};
  std::vector<bool> is_pivot(cols, false);
  for (int c : pivots) is_pivot[c] = true;
  int free_col = -1;
  for (int c = 0; c < cols; ++c)
    if (!is_pivot[c]) {
      free_col = c;
      break;
    }
  QVec n(cols, Rational(0));
  n[free_col] = 1;
  for (size_t r = 0; r < pivots.size(); ++r) n[pivots[r]] = -m[r][free_col];
  return n;
}

QVec to_qvec(const std::vector<Int>& v) {
  QVec q(v.size());
  for (size_t i = 0; i < v.size(); ++i) q[i] = Rational(v[i]);
  return q;
}

// Is target a convex combination of some <= dim+1 of the given points?
bool in_convex_hull(const std::vector<QVec>& points, const QVec& target, int dim) {
  int n = static_cast<int>(points.size());
  int amb = static_cast<int>(target.size());
  int max_size = std::min(dim + 1, n);
  std::vector<int> subset;
  // iterative subset enumeration by size
  for (int s = 1; s <= max_size; ++s) {
    std::vector<int> idx(s);
    for (int i = 0; i < s; ++i) idx[i] = i;
    while (true) {
      // solve sum lambda_i * points[idx[i]] = target, sum lambda_i = 1
      QMat sys(amb + 1, QVec(s + 1, Rational(0)));
      for (int r = 0; r < amb; ++r) {
        for (int c = 0; c < s; ++c) sys[r][c] = points[idx[c]][r];
        sys[r][s] = target[r];
      }
      for (int c = 0; c < s; ++c) sys[amb][c] = 1;
      sys[amb][s] = 1;
      std::vector<int> pivots = rref(sys);
      // exactly s pivots, none in the right-hand-side column: unique solution
      bool unique = static_cast<int>(pivots.size()) == s && pivots.back() < s;
      if (unique) {
        bool nonneg = true;
        for (int r = 0; r < s; ++r)
          if (sys[r][s] < 0) nonneg = false;
        if (nonneg) return true;
      }
      // next subset
      int i = s - 1;
      while (i >= 0 && idx[i] == n - s + i) --i;
      if (i < 0) break;
      ++idx[i];
      for (int j = i + 1; j < s; ++j) idx[j] = idx[j - 1] + 1;
    }
  }
  return false;
}

// Full face lattice keyed by sorted vertex-index sets.
struct FaceData {
  Key verts;
  int dim = 0;
  std::vector<Key> facet_keys;
};

struct LatticeBuilder {
  const LatticePolytope& P;
  std::map<Key, FaceData> all;

  explicit LatticeBuilder(const LatticePolytope& p) : P(p) {}

  std::vector<QVec> points_of(const Key& key) const {
    std::vector<QVec> pts;
    pts.reserve(key.size());
    for (int i : key) pts.push_back(to_qvec(P.vertices[i]));
    return pts;
  }

  std::vector<Key> find_facets(const Key& key, const AffineCoords& ac) {
    int k = ac.k;
    int q = static_cast<int>(key.size());
    std::set<Key> found;
    std::vector<int> idx(k);
    for (int i = 0; i < k; ++i) idx[i] = i;
    while (true) {
      QMat diffs;
      for (int i = 1; i < k; ++i) {
        QVec d(k);
        for (int j = 0; j < k; ++j)
          d[j] = ac.coords[idx[i]][j] - ac.coords[idx[0]][j];
        diffs.push_back(std::move(d));
      }
      QVec normal = k == 1 ? QVec{Rational(1)} : nullvector(diffs, k);
      if (!normal.empty()) {
        int pos = 0, neg = 0;
        std::vector<int> on;
        for (int i = 0; i < q; ++i) {
          Rational side = 0;
          for (int j = 0; j < k; ++j)
            side += normal[j] * (ac.coords[i][j] - ac.coords[idx[0]][j]);
          int s = sign(side);
          if (s > 0) ++pos;
          else if (s < 0) ++neg;
          else on.push_back(key[i]);
        }
        if ((pos == 0 || neg == 0) && static_cast<int>(on.size()) < q)
          found.insert(on);
      }
      int i = k - 1;
      while (i >= 0 && idx[i] == q - k + i) --i;
      if (i < 0) break;
      ++idx[i];
      for (int j = i + 1; j < k; ++j) idx[j] = idx[j - 1] + 1;
    }
    return {found.begin(), found.end()};
  }

  void build(const Key& key) {
    if (all.count(key)) return;
    AffineCoords ac = affine_coords(points_of(key));
    FaceData fd;
    fd.verts = key;
    fd.dim = ac.k;
    if (ac.k > 0) fd.facet_keys = find_facets(key, ac);
    auto facets = fd.facet_keys;
    all.emplace(key, std::move(fd));
    for (const Key& fk : facets) build(fk);
  }
};

// Basis (as rows) of the saturation span_Q(rows) cap Z^ambient, found by
// diagonalizing with unimodular column operations and reading the inverse.
std::vector<std::vector<Int>> saturated_basis(std::vector<std::vector<Int>> d, int amb) {
  std::vector<std::vector<Int>> vinv(amb, std::vector<Int>(amb, Int(0)));
  for (int i = 0; i < amb; ++i) vinv[i][i] = 1;
  int rows = static_cast<int>(d.size());
  int t = 0;
  while (t < rows && t < amb) {
    // locate a pivot of minimal magnitude
    int pi = -1, pj = -1;
    Int best = 0;
    for (int i = t; i < rows; ++i)
      for (int j = t; j < amb; ++j) {
        if (d[i][j] == 0) continue;
        Int a = abs(d[i][j]);
        if (pi < 0 || a < best) {
          best = a;
          pi = i;
          pj = j;
        }
      }
    if (pi < 0) break;
    std::swap(d[t], d[pi]);
    if (pj != t) {
      for (auto& row : d) std::swap(row[t], row[pj]);
      std::swap(vinv[t], vinv[pj]);
    }
    bool dirty = true;
    while (dirty) {
      dirty = false;
      for (int i = t + 1; i < rows; ++i) {
        if (d[i][t] == 0) continue;
        Int q = d[i][t] / d[t][t];
        for (int j = 0; j < amb; ++j) d[i][j] -= q * d[t][j];
        if (d[i][t] != 0) {
          std::swap(d[t], d[i]);
          dirty = true;
        }
      }
      for (int j = t + 1; j < amb; ++j) {
        if (d[t][j] == 0) continue;
        Int q = d[t][j] / d[t][t];
        for (int i = 0; i < rows; ++i) d[i][j] -= q * d[i][t];
        for (int c = 0; c < amb; ++c) vinv[t][c] += q * vinv[j][c];
        if (d[t][j] != 0) {
          for (auto& row : d) std::swap(row[t], row[j]);
          std::swap(vinv[t], vinv[j]);
          dirty = true;
        }
      }
    }
    ++t;
  }
  return {vinv.begin(), vinv.begin() + t};
}

}  // namespace

LatticePolytope make_polytope(int ambient, std::vector<std::vector<Int>> vertices) {
  if (vertices.empty()) throw std::invalid_argument("polytope needs at least one vertex");
  if (static_cast<int>(vertices.size()) > kMaxPolytopeVertices)
    throw std::invalid_argument("vertex count exceeds the supported budget of 16");
  for (const auto& v : vertices)
    if (static_cast<int>(v.size()) != ambient)
      throw std::invalid_argument("vertex length does not match ambient dimension");
  std::set<std::vector<Int>> seen(vertices.begin(), vertices.end());
  if (seen.size() != vertices.size())
    throw std::invalid_argument("duplicate vertices");

  std::vector<QVec> pts;
  for (const auto& v : vertices) pts.push_back(to_qvec(v));
  int dim = affine_coords(pts).k;
  for (size_t i = 0; i < pts.size(); ++i) {
    std::vector<QVec> others;
    for (size_t j = 0; j < pts.size(); ++j)
      if (j != i) others.push_back(pts[j]);
    if (!others.empty() && in_convex_hull(others, pts[i], dim)) {
      std::ostringstream os;
      os << "point " << i << " is not a vertex of the hull";
      throw std::invalid_argument(os.str());
    }
  }
  LatticePolytope P;
  P.ambient = ambient;
  P.dim = dim;
  P.vertices = std::move(vertices);
  return P;
}

LatticePolytope simplex(int m) {
  if (m < 1) throw std::invalid_argument("simplex dimension must be >= 1");
  std::vector<std::vector<Int>> vs(m + 1, std::vector<Int>(m, Int(0)));
  for (int i = 0; i < m; ++i) vs[i + 1][i] = 1;
  return make_polytope(m, std::move(vs));
}

LatticePolytope segment(int n) {
  if (n < 1) throw std::invalid_argument("segment length must be >= 1");
  return make_polytope(1, {{Int(0)}, {Int(n)}});
}

LatticePolytope cube(int m) {
  if (m < 1 || m > 4) throw std::invalid_argument("cube dimension out of range");
  std::vector<std::vector<Int>> vs;
  for (int mask = 0; mask < (1 << m); ++mask) {
    std::vector<Int> v(m);
    for (int i = 0; i < m; ++i) v[i] = (mask >> i) & 1;
    vs.push_back(std::move(v));
  }
  return make_polytope(m, std::move(vs));
}

LatticePolytope dilate(const LatticePolytope& P, int k) {
  if (k < 1) throw std::invalid_argument("dilation factor must be >= 1");
  auto vs = P.vertices;
  for (auto& v : vs)
    for (auto& c : v) c *= k;
  return make_polytope(P.ambient, std::move(vs));
}

LatticePolytope product_polytope(const LatticePolytope& P, const LatticePolytope& Q) {
  if (P.vertices.size() * Q.vertices.size() > kMaxPolytopeVertices)
    throw std::invalid_argument("product exceeds the vertex budget");
  std::vector<std::vector<Int>> vs;
  for (const auto& a : P.vertices)
    for (const auto& b : Q.vertices) {
      std::vector<Int> v = a;
      v.insert(v.end(), b.begin(), b.end());
      vs.push_back(std::move(v));
    }
  return make_polytope(P.ambient + Q.ambient, std::move(vs));
}

LatticePolytope read_polytope(std::istream& in) {
  std::vector<std::vector<Int>> vs;
  std::string line;
  int ambient = -1;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    auto hash = line.find('#');
    if (hash != std::string::npos) line.erase(hash);
    std::istringstream ls(line);
    std::vector<Int> v;
    std::string tok;
    while (ls >> tok) {
      try {
        v.emplace_back(tok);
      } catch (const std::exception&) {
        std::ostringstream os;
        os << "line " << lineno << ": '" << tok << "' is not an integer";
        throw std::invalid_argument(os.str());
      }
    }
    if (v.empty()) continue;
    if (ambient < 0) ambient = static_cast<int>(v.size());
    if (static_cast<int>(v.size()) != ambient) {
      std::ostringstream os;
      os << "line " << lineno << ": expected " << ambient << " coordinates";
      throw std::invalid_argument(os.str());
    }
    vs.push_back(std::move(v));
  }
  if (vs.empty()) throw std::invalid_argument("no vertices in input");
  return make_polytope(ambient, std::move(vs));
}

LatticePolytope read_polytope_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::invalid_argument("cannot open polytope file: " + path);
  return read_polytope(in);
}

FaceTable enumerate_faces(const LatticePolytope& P) {
  LatticeBuilder lb(P);
  Key top(P.vertices.size());
  for (size_t i = 0; i < P.vertices.size(); ++i) top[i] = static_cast<int>(i);
  lb.build(top);

  FaceTable table;
  table.dim = P.dim;
  table.faces.assign(P.dim + 1, {});
  table.V.assign(P.dim + 1, Int(0));
  table.f.assign(P.dim + 1, 0);

  // combinatorial triangulations, memoized per face
  std::map<Key, std::vector<Key>> tri;
  auto triangulate = [&](auto&& self, const Key& key) -> const std::vector<Key>& {
    auto it = tri.find(key);
    if (it != tri.end()) return it->second;
    const FaceData& fd = lb.all.at(key);
    std::vector<Key> simps;
    if (fd.dim == 0) {
      simps.push_back(key);
    } else {
      int apex = key.front();
      for (const Key& fk : fd.facet_keys) {
        if (std::binary_search(fk.begin(), fk.end(), apex)) continue;
        for (Key s : self(self, fk)) {
          s.push_back(apex);
          simps.push_back(std::move(s));
        }
      }
    }
    return tri.emplace(key, std::move(simps)).first->second;
  };

  for (const auto& [key, fd] : lb.all) {
    Face face;
    face.vertex_indices = key;
    if (fd.dim == 0) {
      face.normalized_volume = 1;
    } else {
      std::vector<std::vector<Int>> diffs;
      const auto& base = P.vertices[key[0]];
      for (size_t i = 1; i < key.size(); ++i) {
        std::vector<Int> d(P.ambient);
        for (int j = 0; j < P.ambient; ++j) d[j] = P.vertices[key[i]][j] - base[j];
        diffs.push_back(std::move(d));
      }
      auto basis = saturated_basis(diffs, P.ambient);
      if (static_cast<int>(basis.size()) != fd.dim)
        throw std::logic_error("lattice basis rank mismatch");
      // integer coordinates of each vertex in the face lattice
      QMat sys(P.ambient, QVec(fd.dim, Rational(0)));
      for (int r = 0; r < P.ambient; ++r)
        for (int c = 0; c < fd.dim; ++c) sys[r][c] = Rational(basis[c][r]);
      std::map<int, std::vector<Int>> coord;
      coord[key[0]] = std::vector<Int>(fd.dim, Int(0));
      for (size_t i = 1; i < key.size(); ++i) {
        QMat aug = sys;
        for (int r = 0; r < P.ambient; ++r)
          aug[r].push_back(Rational(P.vertices[key[i]][r] - base[r]));
        std::vector<int> pivots = rref(aug);
        std::vector<Int> c(fd.dim, Int(0));
        for (size_t r = 0; r < pivots.size(); ++r) {
          if (pivots[r] == fd.dim) throw std::logic_error("point outside face lattice");
          Rational val = aug[r][fd.dim];
          if (denominator(val) != 1)
            throw std::logic_error("non-integral lattice coordinate");
          c[pivots[r]] = numerator(val);
        }
        coord[key[i]] = std::move(c);
      }
      Int total = 0;
      for (const Key& s : triangulate(triangulate, key)) {
        std::vector<std::vector<Rational>> m(fd.dim, std::vector<Rational>(fd.dim));
        const auto& c0 = coord.at(s[0]);
        for (int i = 1; i <= fd.dim; ++i) {
          const auto& ci = coord.at(s[i]);
          for (int j = 0; j < fd.dim; ++j) m[i - 1][j] = Rational(ci[j] - c0[j]);
        }
        Rational det = rational_det(m);
        total += abs(numerator(det));
      }
      face.normalized_volume = total;
    }
    table.faces[fd.dim].push_back(std::move(face));
  }

  Int euler = 0;
  for (int j = 0; j <= P.dim; ++j) {
    table.f[j] = static_cast<long long>(table.faces[j].size());
    for (const Face& face : table.faces[j]) table.V[j] += face.normalized_volume;
    euler += (j % 2 == 0) ? Int(table.f[j]) : Int(-table.f[j]);
  }
  if (euler != 1) throw std::logic_error("face lattice fails the Euler check");
  return table;
}

Int ed_toric(const LatticePolytope& P) {
  FaceTable t = enumerate_faces(P);
  Int acc = 0;
  for (int j = 0; j <= t.dim; ++j) {
    Int coef = (int_pow(Int(2), static_cast<unsigned>(j + 1)) - 1) * t.V[j];
    acc += ((t.dim - j) % 2 == 0) ? coef : -coef;
  }
  return acc;
}

}  // namespace eddeg
