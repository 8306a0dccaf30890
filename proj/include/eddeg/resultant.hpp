#pragma once

#include "eddeg/multipoly.hpp"

namespace eddeg {

// Exact multivariate division; throws std::domain_error if q does not divide p.
MultiPoly multipoly_divide_exact(const MultiPoly& p, const MultiPoly& q);

// Resultant of f and g with respect to variable v, computed by the
// subresultant pseudo-remainder sequence (sign-correct).  Preconditions:
// both nonzero and of positive degree in v; std::invalid_argument otherwise.
// The result does not involve v.  A zero result means f and g share a factor.
MultiPoly resultant(const MultiPoly& f, const MultiPoly& g, int v);

// The full subresultant chain in v (last nonzero pseudo-remainders), from
// which the solver reads off the degree-1 subresultant for back-substitution:
// chain entries are pairs (degree in v, polynomial).
std::vector<std::pair<int, MultiPoly>> subresultant_chain(const MultiPoly& f,
                                                          const MultiPoly& g, int v);

}  // namespace eddeg
