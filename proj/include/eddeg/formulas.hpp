#pragma once

#include <variant>
#include <vector>

#include "eddeg/rational.hpp"

namespace eddeg {

// Multidegrees of the polar classes delta_0..delta_{n-2} of a projective
// variety; reversing the sequence gives the classes of the dual variety.
struct PolarClasses {
  std::vector<Int> deltas;
};

// Degrees of the Chern classes c_0(X)..c_m(X), m = dim X.
struct ChernDegrees {
  std::vector<Int> degs;
};

// Generic complete intersection of codimension c cut out by hypersurfaces of
// the given degrees, in C^n (affine) or P^{n-1} (projective).
Int ed_generic_ci(int n, std::vector<int> degrees, bool projective);

// Generic hypersurface of degree d in P^{n-1}.
Int ed_generic_hypersurface(int n, int d);

// Image of a generic polynomial map with m parameters, coordinates of degree d.
Int ed_generic_parametric(int m, int d);

// Generic tensor-product (bidegree d1,d2) patch surface.
Int ed_bezier(int d1, int d2, bool projective);

// Hurwitz stability determinant hypersurfaces, n >= 3.
Int ed_hurwitz(int n, bool homogeneous);

// Cayley-Menger variety of p points on a line, p >= 3.
Int ed_cayley_menger(int p);

// s x t matrices of rank <= r, 1 <= r <= s <= t.
Int ed_eckart_young(int s, int t, int r);

// Smooth projective curve of degree d and genus g in general coordinates.
Int ed_smooth_curve(int d, int g);

Int ed_from_chern(const ChernDegrees& cd);

Int ed_from_polar(const PolarClasses& pc);
PolarClasses polar_reverse(const PolarClasses& pc);

// Generic linear projection from a point (needs codim >= 2).
Int ed_after_projection(Int ed, int codim);
// Generic hyperplane section; drops degree(X*) only when the dual is a
// hypersurface.
Int ed_after_section(Int ed, Int deg_dual, int codim_dual);
// Tail sums of polar classes: entry i is the value for a section by a generic
// linear space of codimension i.
std::vector<Int> sectional_ed(const PolarClasses& pc, int n);

// d-th Veronese embedding of P^m in general coordinates.
Int ed_veronese_generic(int m, int d);

// Eigenvalue count of a symmetric m-way tensor of order w.
Int ed_eigen_count(int m, int w);

// Degrees of ED discriminants.
struct DiscGenericHypersurface {
  int n, d;
};
struct DiscPlaneCurve {
  int d, nodes, cusps;
};
struct DiscSmoothSpaceCurve {
  int d, g;
};
struct DiscSmoothSurface {
  int d;
  Int c1sq, c2, degc1;
};
using DiscriminantKind = std::variant<DiscGenericHypersurface, DiscPlaneCurve,
                                      DiscSmoothSpaceCurve, DiscSmoothSurface>;

Int ed_discriminant_degree(const DiscriminantKind& kind);

}  // namespace eddeg
