#include "eddeg/resultant.hpp"

#include <algorithm>

namespace eddeg {

MultiPoly multipoly_divide_exact(const MultiPoly& p, const MultiPoly& q) {
  if (q.is_zero()) throw std::domain_error("multipoly division by zero");
  if (p.arity() != q.arity()) throw std::invalid_argument("multipoly division: arity mismatch");
  MultiPoly rem = p;
  MultiPoly quot(p.arity());
  const auto& qlt = *q.terms().rbegin();  // lex-leading term of divisor
  Monomial diff(p.arity());
  while (!rem.is_zero()) {
    const auto& rlt = *rem.terms().rbegin();
    for (int i = 0; i < p.arity(); ++i) {
      diff[i] = rlt.first[i] - qlt.first[i];
      if (diff[i] < 0) throw std::domain_error("multipoly division: not divisible");
    }
    MultiPoly t(p.arity());
    t.set_coeff(diff, rlt.second / qlt.second);
    quot += t;
    rem -= t * q;
  }
  return quot;
}

namespace {

// Polynomial in v represented densely by MultiPoly coefficients.
using VPoly = std::vector<MultiPoly>;

VPoly to_vpoly(const MultiPoly& p, int v) {
  return p.coeffs_in(v);
}

void vnormalize(VPoly& a) {
  while (!a.empty() && a.back().is_zero()) a.pop_back();
}

int vdeg(const VPoly& a) { return static_cast<int>(a.size()) - 1; }

VPoly vscale(const VPoly& a, const MultiPoly& c) {
  VPoly r;
  r.reserve(a.size());
  for (const auto& x : a) r.push_back(x * c);
  vnormalize(r);
  return r;
}

// Pseudo-remainder: lc(B)^(deg A - deg B + 1) * A mod B.
VPoly vprem(const VPoly& A, const VPoly& B) {
  const MultiPoly& l = B.back();
  VPoly R = A;
  int e = vdeg(A) - vdeg(B) + 1;
  while (!R.empty() && vdeg(R) >= vdeg(B)) {
    MultiPoly lr = R.back();
    int shift = vdeg(R) - vdeg(B);
    VPoly next(R.size() - 1, MultiPoly(l.arity()));
    for (int i = 0; i < static_cast<int>(R.size()) - 1; ++i) {
      next[i] = R[i] * l;
      if (i - shift >= 0 && i - shift < static_cast<int>(B.size()) - 1)
        next[i] -= lr * B[i - shift];
    }
    R = std::move(next);
    vnormalize(R);
    --e;
  }
  if (e > 0) {
    MultiPoly le = l.pow(static_cast<unsigned>(e));
    R = vscale(R, le);
  }
  return R;
}

VPoly vdivide_exact(const VPoly& a, const MultiPoly& d) {
  VPoly r;
  r.reserve(a.size());
  for (const auto& x : a)
    r.push_back(x.is_zero() ? x : multipoly_divide_exact(x, d));
  return r;
}

struct PrsResult {
  MultiPoly res;                                // the resultant
  std::vector<std::pair<int, MultiPoly>> chain; // PRS elements with v-degrees
};

PrsResult subresultant_prs(const MultiPoly& f, const MultiPoly& g, int v) {
  if (f.is_zero() || g.is_zero())
    throw std::invalid_argument("resultant: zero input polynomial");
  if (f.degree_in(v) < 1 || g.degree_in(v) < 1)
    throw std::invalid_argument("resultant: inputs must have positive degree in the variable");
  int arity = f.arity();

  // Pull out rational contents so the PRS runs over integer coefficients:
  // Res(f, g) = cf^(deg g) * cg^(deg f) * Res(f/cf, g/cg).
  Rational cf = f.content(), cg = g.content();
  MultiPoly fp = f.primitive_part(), gp = g.primitive_part();
  Rational t = rat_pow(cf, static_cast<unsigned>(g.degree_in(v))) *
               rat_pow(cg, static_cast<unsigned>(f.degree_in(v)));

  VPoly A = to_vpoly(fp, v), B = to_vpoly(gp, v);
  int sgn = 1;
  if (vdeg(A) < vdeg(B)) {
    std::swap(A, B);
    if ((vdeg(A) % 2 == 1) && (vdeg(B) % 2 == 1)) sgn = -sgn;
  }

  PrsResult out{MultiPoly(arity), {}};
  auto record = [&](const VPoly& P) {
    MultiPoly whole(arity);
    std::vector<MultiPoly> cs(P.begin(), P.end());
    if (!cs.empty()) whole = MultiPoly::from_coeffs_in(v, cs);
    out.chain.emplace_back(vdeg(P), whole);
  };
  record(A);
  record(B);

  MultiPoly gcoef = MultiPoly::constant(arity, 1);
  MultiPoly h = MultiPoly::constant(arity, 1);
  while (true) {
    int dA = vdeg(A), dB = vdeg(B);
    int delta = dA - dB;
    if ((dA % 2 == 1) && (dB % 2 == 1)) sgn = -sgn;
    VPoly R = vprem(A, B);
    A = std::move(B);
    MultiPoly denom = gcoef * h.pow(static_cast<unsigned>(delta));
    B = vdivide_exact(R, denom);
    gcoef = A.back();
    if (delta == 1) {
      h = gcoef;
    } else if (delta > 1) {
      h = multipoly_divide_exact(gcoef.pow(static_cast<unsigned>(delta)),
                                 h.pow(static_cast<unsigned>(delta - 1)));
    }
    if (B.empty()) {
      out.res = MultiPoly(arity);  // common factor: resultant is zero
      return out;
    }
    record(B);
    if (vdeg(B) == 0) break;
  }
  int q = vdeg(A);
  MultiPoly num = B[0].pow(static_cast<unsigned>(q));
  MultiPoly finalh =
      q >= 2 ? multipoly_divide_exact(num, h.pow(static_cast<unsigned>(q - 1))) : num;
  out.res = finalh.scaled(t * sgn);
  return out;
}

}  // namespace

MultiPoly resultant(const MultiPoly& f, const MultiPoly& g, int v) {
  return subresultant_prs(f, g, v).res;
}

std::vector<std::pair<int, MultiPoly>> subresultant_chain(const MultiPoly& f,
                                                          const MultiPoly& g, int v) {
  return subresultant_prs(f, g, v).chain;
}

}  // namespace eddeg
