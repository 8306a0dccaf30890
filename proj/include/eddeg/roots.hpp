#pragma once

#include <complex>
#include <vector>

#include "eddeg/unipoly.hpp"

namespace eddeg {

struct RootBox {
  std::complex<double> center;
  double radius = 0.0;
  int multiplicity = 1;
  bool is_real = false;
};

// All complex roots of p. Multiplicities come from the squarefree
// decomposition; real roots are certified by sign-variation counts and the
// non-real ones are returned as conjugate pairs. Throws on the zero
// polynomial; a nonzero constant has no roots.
std::vector<RootBox> isolate_roots(const UniPoly& p);

// Real roots only, ascending by center.
std::vector<RootBox> isolate_real_roots(const UniPoly& p);

}  // namespace eddeg
