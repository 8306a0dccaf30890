#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "eddeg/rational.hpp"

namespace eddeg {

// Convex hull of distinct lattice points, each of which must be a vertex.
struct LatticePolytope {
  int ambient = 0;                        // coordinate count
  int dim = 0;                            // affine hull dimension
  std::vector<std::vector<Int>> vertices; // one integer vector per vertex
};

inline constexpr int kMaxPolytopeVertices = 16;

// Validates distinctness and extremeness of every listed point.
LatticePolytope make_polytope(int ambient, std::vector<std::vector<Int>> vertices);

LatticePolytope simplex(int m);                 // conv{0, e_1, ..., e_m}
LatticePolytope segment(int n);                 // [0, n] on a line
LatticePolytope cube(int m);                    // {0,1}^m
LatticePolytope dilate(const LatticePolytope& P, int k);
LatticePolytope product_polytope(const LatticePolytope& P, const LatticePolytope& Q);

// One vertex per line, whitespace-separated integers; '#' starts a comment.
LatticePolytope read_polytope(std::istream& in);
LatticePolytope read_polytope_file(const std::string& path);

struct Face {
  std::vector<int> vertex_indices;  // sorted, indices into the polytope
  Int normalized_volume;            // lattice-normalized in the face's own lattice
};

struct FaceTable {
  int dim = 0;
  std::vector<std::vector<Face>> faces;  // by dimension 0..dim, top face included
  std::vector<Int> V;                    // per-dimension volume sums
  std::vector<long long> f;              // per-dimension face counts
};

FaceTable enumerate_faces(const LatticePolytope& P);

// Alternating sum sum_j (-1)^{dim-j} (2^{j+1}-1) V_j.
Int ed_toric(const LatticePolytope& P);

}  // namespace eddeg
