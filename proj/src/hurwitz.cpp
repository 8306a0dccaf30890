#include "eddeg/solver.hpp"

#include "eddeg/resultant.hpp"

#include <algorithm>

// Critical points of the squared distance from a degree-n binary form u to
// the hypersurface of forms with two roots adding to zero.  Such forms are
// exactly the products (c + d z^2) * g(z), so the coefficient vector is
// x = C(c,d) b with C the banded (n+1) x (n-1) matrix whose j-th column
// carries c at row j and d at row j+2.  For fixed (c:d) the optimal g solves
// the normal equations (C^T C) b = C^T u; eliminating b leaves one binary
// form r(c,d) whose projective roots are the critical points.
//
// C^T C couples only columns of equal parity, giving two tridiagonal Toeplitz
// blocks with diagonal c^2+d^2 and off-diagonal cd, so determinants and
// adjugates come from the classical recurrence
//   D_k = (c^2+d^2) D_{k-1} - (cd)^2 D_{k-2}
// and the closed form adj(T)[i][j] = (-b)^|i-j| D_min(i,j) D_{k-1-max(i,j)}.

namespace eddeg {

namespace {

bool homogeneous_form(const MultiPoly& f) {
  int d = -1;
  for (const auto& [mono, c] : f.terms()) {
    int t = 0;
    for (int e : mono) t += e;
    if (d < 0) d = t;
    if (t != d) return false;
  }
  return true;
}

// determinants of tridiagonal Toeplitz(a, b) up to size n
template <typename Poly>
std::vector<Poly> toeplitz_dets(const Poly& a, const Poly& b, int n, const Poly& one) {
  std::vector<Poly> d = {one, a};
  for (int k = 2; k <= n; ++k) d.push_back(a * d[k - 1] - b * b * d[k - 2]);
  return d;
}

struct ParityBlocks {
  std::vector<int> even, odd;  // column indices, ascending
};

ParityBlocks split_parity(int lo, int hi) {  // inclusive range of column indices
  ParityBlocks pb;
  for (int j = lo; j <= hi; ++j) (j % 2 == 0 ? pb.even : pb.odd).push_back(j);
  return pb;
}

// out[idx] = scale * adj(block) * rhs[idx], with scale = gamma / det(block).
template <typename Poly>
void apply_block_inverse(const std::vector<int>& idx, const Poly& b,
                         const std::vector<Poly>& dets, const Poly& scale,
                         const Poly& zero, const std::vector<Poly>& rhs,
                         std::vector<Poly>& out) {
  const int s = static_cast<int>(idx.size());
  for (int i = 0; i < s; ++i) {
    Poly acc = zero;
    for (int j = 0; j < s; ++j) {
      Poly entry = dets[std::min(i, j)] * dets[s - 1 - std::max(i, j)];
      for (int t = std::abs(i - j); t > 0; --t) entry = entry * b;
      if (std::abs(i - j) % 2 == 1) entry = entry.scaled(Rational(-1));
      acc = acc + entry * rhs[idx[j]];
    }
    out[idx[i]] = scale * acc;
  }
}

long long hurwitz_homogeneous(int n, const std::vector<Rational>& u) {
  // variables: x1 = c, x2 = d
  const MultiPoly c = MultiPoly::var(2, 0), d = MultiPoly::var(2, 1);
  const MultiPoly one = MultiPoly::constant(2, Rational(1));
  const MultiPoly zero = MultiPoly::zero(2);

  ParityBlocks pb = split_parity(0, n - 2);
  const int se = static_cast<int>(pb.even.size()), so = static_cast<int>(pb.odd.size());
  MultiPoly a = c * c + d * d, b = c * d;
  std::vector<MultiPoly> dets = toeplitz_dets(a, b, std::max(se, so), one);
  // Blocks of equal size share their determinant, so gamma * M^{-1} stays
  // polynomial with the smaller gamma.
  MultiPoly gamma = (se == so) ? dets[se] : dets[se] * dets[so];

  // right-hand side C^T u
  std::vector<MultiPoly> rhs(n - 1, zero);
  for (int j = 0; j <= n - 2; ++j) rhs[j] = c.scaled(u[j]) + d.scaled(u[j + 2]);

  std::vector<MultiPoly> gb(n - 1, zero);  // gamma * b
  apply_block_inverse(pb.even, b, dets, (se == so) ? one : dets[so], zero, rhs, gb);
  apply_block_inverse(pb.odd, b, dets, (se == so) ? one : dets[se], zero, rhs, gb);

  // v = gamma u - C (gamma b)
  std::vector<MultiPoly> v(n + 1, zero);
  for (int i = 0; i <= n; ++i) {
    v[i] = gamma.scaled(u[i]);
    if (i <= n - 2) v[i] -= c * gb[i];
    if (i >= 2) v[i] -= d * gb[i - 2];
  }

  // tangency along the two parameters of the quadratic factor
  MultiPoly p(2), q(2);
  for (int i = 0; i <= n - 2; ++i) p += gb[i] * v[i];
  for (int i = 2; i <= n; ++i) q += gb[i - 2] * v[i];
  if (!(c * p + d * q).is_zero())
    throw std::logic_error("hurwitz_count: Euler identity failed");
  if (p.is_zero()) throw RetrySignal("critical form vanished identically");

  MultiPoly r = multipoly_divide_exact(p, d);
  if (!homogeneous_form(r)) throw std::logic_error("hurwitz_count: r not homogeneous");
  UniPoly rr = UniPoly::from_multi(r.substitute(1, Rational(1)), 0);
  if (rr.is_zero()) throw RetrySignal("critical form supported only at infinity");
  int m_inf = r.total_degree() - rr.degree();
  if (m_inf > 1) throw RetrySignal("repeated critical factor at d = 0");
  if (rr.degree() > 0) {
    if (squarefree_part(rr).degree() != rr.degree())
      throw RetrySignal("critical form has repeated roots");
    UniPoly gc = UniPoly::from_multi(gamma.substitute(1, Rational(1)), 0);
    if (unipoly_gcd(rr, gc).degree() > 0)
      throw RetrySignal("critical point hits the singular fiber of the parametrization");
  }
  return rr.degree() + (m_inf == 1 ? 1 : 0);
}

long long hurwitz_affine(int n, const std::vector<Rational>& u) {
  // Forms with constant coefficient 1: x = C(1,d) b with b_0 = 1 fixed, so the
  // free unknowns are d and b_1..b_{n-2}, the data is (x_1, ..., x_n), and
  // eliminating b leaves one univariate condition E(d) = 0.
  const UniPoly dd({Rational(0), Rational(1)});
  const UniPoly one({Rational(1)});
  const UniPoly zero;
  auto cst = [](const Rational& r) { return UniPoly({r}); };
  auto ucoord = [&](int i) { return u[i - 1]; };  // u holds x_1..x_n

  ParityBlocks pb = split_parity(1, n - 2);
  const int se = static_cast<int>(pb.even.size()), so = static_cast<int>(pb.odd.size());
  UniPoly a = dd * dd + one, b = dd;
  std::vector<UniPoly> dets = toeplitz_dets(a, b, std::max(se, so), one);
  UniPoly gamma = (se == so) ? dets[se] : dets[se] * dets[so];

  // C~^T (u - c0), where c0 = d e_2 carries the fixed column b_0 = 1
  std::vector<UniPoly> rhs(n - 1, zero);
  for (int j = 1; j <= n - 2; ++j) {
    rhs[j] = cst(ucoord(j)) + dd.scaled(ucoord(j + 2));
    if (j == 2) rhs[j] = rhs[j] - dd;
  }

  std::vector<UniPoly> gb(n - 1, zero);
  apply_block_inverse(pb.even, b, dets, (se == so) ? one : dets[so], zero, rhs, gb);
  apply_block_inverse(pb.odd, b, dets, (se == so) ? one : dets[se], zero, rhs, gb);

  // v_i = gamma (u - c0)_i - (C~ gamma b)_i over the data rows i = 1..n
  std::vector<UniPoly> v(n + 1, zero);
  for (int i = 1; i <= n; ++i) {
    v[i] = gamma.scaled(ucoord(i));
    if (i == 2) v[i] = v[i] - gamma * dd;
    if (i <= n - 2) v[i] = v[i] - gb[i];
    if (i - 2 >= 1) v[i] = v[i] - dd * gb[i - 2];
  }

  // E = <(0, gamma, gamma b_1, ..., gamma b_{n-2}), v>: the derivative of x
  // in d reaches row i through b_{i-2}, with b_0 = 1 contributing at row 2.
  UniPoly e = gamma * v[2];
  for (int i = 3; i <= n; ++i) e = e + gb[i - 2] * v[i];

  if (e.is_zero()) throw RetrySignal("critical polynomial vanished identically");
  const int m = n / 2;
  const int expected = (n % 2 == 1) ? 8 * m - 3 : 4 * m - 3;
  if (e.degree() != expected)
    throw RetrySignal("critical polynomial dropped degree (data on the bad locus)");
  if (squarefree_part(e).degree() != e.degree())
    throw RetrySignal("critical polynomial has repeated roots");
  if (unipoly_gcd(e, gamma).degree() > 0)
    throw RetrySignal("critical point hits the singular fiber of the parametrization");
  return e.degree();
}

}  // namespace

long long hurwitz_count(int n, const std::vector<Rational>& u, bool homogeneous) {
  if (n < 3 || n > 9) throw std::invalid_argument("hurwitz_count: need 3 <= n <= 9");
  const size_t want = homogeneous ? static_cast<size_t>(n) + 1 : static_cast<size_t>(n);
  if (u.size() != want)
    throw std::invalid_argument("hurwitz_count: data must have " + std::to_string(want) +
                                " coordinates");
  return homogeneous ? hurwitz_homogeneous(n, u) : hurwitz_affine(n, u);
}

}  // namespace eddeg
