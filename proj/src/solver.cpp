#include "eddeg/solver.hpp"

#include "eddeg/resultant.hpp"
#include "eddeg/roots.hpp"

#include <algorithm>
#include <cmath>
#include <optional>

namespace eddeg {

namespace {

using Complex = std::complex<double>;

// ---------------------------------------------------------------------------
// validation

// A polynomial is square-free over Q iff for every variable in which it has
// degree >= 2 the resultant with its derivative is nonzero.  (Repeated
// factors must involve some variable quadratically; factors free of the
// tested variable only scale that resultant.)
void require_squarefree(const MultiPoly& f, const char* what) {
  if (f.is_zero()) throw std::invalid_argument(std::string(what) + ": zero polynomial");
  if (f.is_constant()) throw std::invalid_argument(std::string(what) + ": constant");
  for (int v = 0; v < f.arity(); ++v) {
    if (f.degree_in(v) < 2) continue;
    if (resultant(f, f.derivative(v), v).is_zero())
      throw std::invalid_argument(std::string(what) + ": form has a repeated factor");
  }
}

bool is_homogeneous(const MultiPoly& f) {
  int d = -1;
  for (const auto& [mono, c] : f.terms()) {
    int t = 0;
    for (int e : mono) t += e;
    if (d < 0) d = t;
    if (t != d) return false;
  }
  return true;
}

// ---------------------------------------------------------------------------
// bivariate elimination

// Eliminant of {f, g} with respect to `drop`, plus the degree-1 subresultant
// a(keep)*x_drop + b(keep) used for back-substitution.
struct Elimination {
  UniPoly r;
  UniPoly a, b;
  bool have_backsub = false;
};

Elimination eliminate(const MultiPoly& f, const MultiPoly& g, int keep, int drop) {
  if (f.is_zero() || g.is_zero()) throw RetrySignal("degenerate critical system");
  const int df = f.is_constant() ? 0 : f.degree_in(drop);
  const int dg = g.is_constant() ? 0 : g.degree_in(drop);
  Elimination e;
  if (df == 0 && dg == 0) throw RetrySignal("critical system independent of one variable");
  if (df == 0 || dg == 0) {
    // One equation is univariate in the kept variable; the other must pin the
    // dropped variable linearly for the solution count to be read off.
    const MultiPoly& uni = (df == 0) ? f : g;
    const MultiPoly& lin = (df == 0) ? g : f;
    if (lin.degree_in(drop) != 1)
      throw RetrySignal("critical system lost its second variable");
    e.r = UniPoly::from_multi(uni, keep);
    auto cs = lin.coeffs_in(drop);
    e.a = UniPoly::from_multi(cs[1], keep);
    e.b = UniPoly::from_multi(cs[0], keep);
    e.have_backsub = true;
    return e;
  }
  MultiPoly res = resultant(f, g, drop);
  if (res.is_zero()) throw RetrySignal("vanishing resultant (data on the bad locus)");
  e.r = UniPoly::from_multi(res, keep);
  for (const auto& [deg, poly] : subresultant_chain(f, g, drop)) {
    if (deg == 1) {
      auto cs = poly.coeffs_in(drop);
      e.a = UniPoly::from_multi(cs[1], keep);
      e.b = UniPoly::from_multi(cs[0], keep);
      e.have_backsub = !e.a.is_zero();
      break;
    }
  }
  return e;
}

// Pick the variable to eliminate: prefer one where f or g has a constant
// leading coefficient, so the resultant cannot acquire spurious roots.
int choose_drop(const MultiPoly& f, const MultiPoly& g) {
  auto lc_const = [](const MultiPoly& p, int v) {
    if (p.is_zero() || p.is_constant() || p.degree_in(v) == 0) return false;
    return p.coeffs_in(v).back().is_constant();
  };
  if (lc_const(f, 1) || lc_const(g, 1)) return 1;
  if (lc_const(f, 0) || lc_const(g, 0)) return 0;
  return 1;
}

int strip_known_roots(UniPoly& r, const std::vector<Rational>& coords) {
  int stripped = 0;
  std::vector<Rational> seen;
  for (const Rational& c : coords) {
    if (std::find(seen.begin(), seen.end(), c) != seen.end()) continue;
    seen.push_back(c);
    if (!r.is_zero() && r.degree() > 0) stripped += r.strip_root(c);
  }
  return stripped;
}

// Requires r square-free (returns false otherwise).
bool squarefree_ok(const UniPoly& r) {
  if (r.is_zero()) return false;
  if (r.degree() == 0) return true;
  return squarefree_part(r).degree() == r.degree();
}

int real_root_count(const UniPoly& r) {
  if (r.is_zero() || r.degree() == 0) return 0;
  SturmChain chain(r);
  if (!chain.valid()) throw RetrySignal("eliminant not square-free");
  return chain.count_all();
}

// ---------------------------------------------------------------------------
// numeric point recovery

struct System2 {
  MultiPoly f, g, fx, fy, gx, gy;  // partials with respect to vars 0, 1
};

System2 make_system(const MultiPoly& f, const MultiPoly& g) {
  return {f, g, f.derivative(0), f.derivative(1), g.derivative(0), g.derivative(1)};
}

Complex eval2(const MultiPoly& p, Complex x, Complex y) {
  return p.evaluate(std::vector<Complex>{x, y});
}

// Newton iteration on the 2x2 system; returns the final residual |f| + |g|.
double newton_polish(const System2& s, Complex& x, Complex& y) {
  for (int it = 0; it < 60; ++it) {
    Complex fv = eval2(s.f, x, y), gv = eval2(s.g, x, y);
    Complex a = eval2(s.fx, x, y), b = eval2(s.fy, x, y);
    Complex c = eval2(s.gx, x, y), d = eval2(s.gy, x, y);
    Complex det = a * d - b * c;
    if (std::abs(det) < 1e-300) break;
    Complex dx = (fv * d - b * gv) / det;
    Complex dy = (a * gv - fv * c) / det;
    x -= dx;
    y -= dy;
    if (std::abs(dx) + std::abs(dy) < 1e-15 * (1.0 + std::abs(x) + std::abs(y))) break;
  }
  return std::abs(eval2(s.f, x, y)) + std::abs(eval2(s.g, x, y));
}

bool point_less(const CriticalPoint& a, const CriticalPoint& b) {
  if (a.real != b.real) return a.real;  // real points first
  if (std::abs(a.distance - b.distance) > 1e-12 * (1.0 + std::abs(a.distance)))
    return a.distance < b.distance;
  for (size_t i = 0; i < a.x.size() && i < b.x.size(); ++i) {
    if (a.x[i].real() != b.x[i].real()) return a.x[i].real() < b.x[i].real();
    if (a.x[i].imag() != b.x[i].imag()) return a.x[i].imag() < b.x[i].imag();
  }
  return false;
}

}  // namespace

// ---------------------------------------------------------------------------
// construction

PlaneCurve affine_curve(const MultiPoly& f, std::vector<std::vector<Rational>> singular) {
  if (f.arity() != 2) throw std::invalid_argument("affine curve must have arity 2");
  require_squarefree(f, "affine curve");
  for (const auto& p : singular)
    if (p.size() != 2) throw std::invalid_argument("singular point must have 2 coordinates");
  return PlaneCurve{f, false, std::move(singular)};
}

PlaneCurve projective_curve(const MultiPoly& f, std::vector<std::vector<Rational>> singular) {
  if (f.arity() != 3) throw std::invalid_argument("projective curve must have arity 3");
  if (!is_homogeneous(f)) throw std::invalid_argument("projective curve must be homogeneous");
  require_squarefree(f, "projective curve");
  for (const auto& p : singular) {
    if (p.size() != 3) throw std::invalid_argument("singular point must have 3 coordinates");
    if (p[0] == 0 && p[1] == 0 && p[2] == 0)
      throw std::invalid_argument("(0,0,0) is not a projective point");
  }
  return PlaneCurve{f, true, std::move(singular)};
}

MultiPoly homogenize_last(const MultiPoly& f) {
  if (f.arity() != 2) throw std::invalid_argument("homogenize_last expects arity 2");
  const int d = f.total_degree();
  MultiPoly out(3);
  for (const auto& [mono, c] : f.terms())
    out.set_coeff({mono[0], mono[1], d - mono[0] - mono[1]}, c);
  return out;
}

std::pair<MultiPoly, MultiPoly> build_affine_system(const PlaneCurve& curve,
                                                    const DataPoint& u) {
  if (curve.projective) throw std::invalid_argument("affine system needs an affine curve");
  if (u.u.size() != 2) throw std::invalid_argument("affine data point needs 2 coordinates");
  const MultiPoly& f = curve.form;
  MultiPoly x = MultiPoly::var(2, 0), y = MultiPoly::var(2, 1);
  MultiPoly u1 = MultiPoly::constant(2, u.u[0]), u2 = MultiPoly::constant(2, u.u[1]);
  MultiPoly g = (u1 - x) * f.derivative(1) - (u2 - y) * f.derivative(0);
  return {f, g};
}

std::pair<MultiPoly, MultiPoly> build_projective_system(const PlaneCurve& curve,
                                                        const DataPoint& u) {
  if (!curve.projective) throw std::invalid_argument("projective system needs a projective curve");
  if (u.u.size() != 3) throw std::invalid_argument("projective data point needs 3 coordinates");
  const MultiPoly& f = curve.form;
  // G = det [[u], [x], [grad F]], expanded along the first row.
  std::vector<MultiPoly> grad = {f.derivative(0), f.derivative(1), f.derivative(2)};
  std::vector<MultiPoly> x = {MultiPoly::var(3, 0), MultiPoly::var(3, 1), MultiPoly::var(3, 2)};
  MultiPoly g =
      (x[1] * grad[2] - x[2] * grad[1]).scaled(u.u[0]) -
      (x[0] * grad[2] - x[2] * grad[0]).scaled(u.u[1]) +
      (x[0] * grad[1] - x[1] * grad[0]).scaled(u.u[2]);
  return {f, g};
}

// ---------------------------------------------------------------------------
// affine counting

namespace {

struct ChartAnalysis {
  UniPoly r;        // square-free eliminant with all exclusions divided out
  Elimination el;   // back-substitution data
  int keep = 0;
  long long excluded_singular = 0;
  long long excluded_isotropic = 0;
};

// Shared by the affine and in-chart projective paths.  `singular_coords`
// holds the kept-variable coordinates of known singular points;
// `with_isotropic` switches on removal of solutions on x^2 + y^2 + 1 = 0.
ChartAnalysis analyze_chart(const MultiPoly& f, const MultiPoly& g,
                            const std::vector<Rational>& sing_x,
                            const std::vector<Rational>& sing_y, bool with_isotropic) {
  ChartAnalysis out;
  const int drop = choose_drop(f, g);
  out.keep = 1 - drop;
  out.el = eliminate(f, g, out.keep, drop);
  out.r = out.el.r;
  if (out.r.is_zero()) throw RetrySignal("vanishing eliminant");
  out.excluded_singular = strip_known_roots(out.r, out.keep == 0 ? sing_x : sing_y);
  if (!squarefree_ok(out.r))
    throw RetrySignal("eliminant has repeated roots (degenerate data)");
  if (with_isotropic && out.r.degree() > 0) {
    if (!out.el.have_backsub)
      throw RetrySignal("no linear subresultant for back-substitution");
    if (unipoly_gcd(out.r, out.el.a).degree() > 0)
      throw RetrySignal("back-substitution denominator shares a root with the eliminant");
    // The kept coordinate of a solution lying on x^2 + y^2 + 1 = 0 is a root
    // of a^2 k^2 + b^2 + a^2 (substitute drop = -b/a and clear denominators).
    UniPoly k2 = UniPoly({Rational(0), Rational(0), Rational(1)});
    UniPoly w = out.el.a * out.el.a * (k2 + UniPoly({Rational(1)})) + out.el.b * out.el.b;
    if (w.is_zero()) throw RetrySignal("isotropic filter degenerated");
    UniPoly shared = unipoly_gcd(out.r, w);
    if (shared.degree() > 0) {
      out.excluded_isotropic = shared.degree();
      out.r = out.r.divide_exact(shared);
    }
  }
  return out;
}

// Recovers the solutions of the analyzed chart as polished points.
std::vector<CriticalPoint> chart_points(const ChartAnalysis& ca, const System2& sys) {
  std::vector<CriticalPoint> pts;
  if (ca.r.is_zero() || ca.r.degree() == 0) return pts;
  if (!ca.el.have_backsub)
    throw RetrySignal("no linear subresultant for back-substitution");
  if (unipoly_gcd(ca.r, ca.el.a).degree() > 0)
    throw RetrySignal("back-substitution denominator shares a root with the eliminant");
  for (const RootBox& rb : isolate_roots(ca.r)) {
    Complex kept = rb.center;
    Complex dropped = -ca.el.b.evaluate(kept) / ca.el.a.evaluate(kept);
    Complex x = (ca.keep == 0) ? kept : dropped;
    Complex y = (ca.keep == 0) ? dropped : kept;
    CriticalPoint p;
    p.residual = newton_polish(sys, x, y);
    p.x = {x, y};
    p.real = rb.is_real;
    pts.push_back(std::move(p));
  }
  return pts;
}

CriticalReport count_critical_affine(const PlaneCurve& curve, const DataPoint& u,
                                     bool with_points) {
  auto [f, g] = build_affine_system(curve, u);
  std::vector<Rational> sx, sy;
  for (const auto& p : curve.known_singular_points) {
    sx.push_back(p[0]);
    sy.push_back(p[1]);
  }
  ChartAnalysis ca = analyze_chart(f, g, sx, sy, false);

  CriticalReport rep;
  rep.excluded_singular = ca.excluded_singular;
  rep.complex_count = (ca.r.degree() == 0) ? 0 : ca.r.degree();
  rep.real_count = real_root_count(ca.r);

  if (with_points && rep.complex_count > 0) {
    System2 sys = make_system(f, g);
    MultiPoly fx = curve.form.derivative(0), fy = curve.form.derivative(1);
    for (CriticalPoint& p : chart_points(ca, sys)) {
      // Unlisted singular points: discard solutions with a numerically
      // vanishing gradient.
      double grad = std::abs(eval2(fx, p.x[0], p.x[1])) + std::abs(eval2(fy, p.x[0], p.x[1]));
      if (grad < 1e-10) {
        ++rep.excluded_singular;
        --rep.complex_count;
        if (p.real) --rep.real_count;
        continue;
      }
      Complex d2 = (Complex(to_double(u.u[0]), 0) - p.x[0]) * (Complex(to_double(u.u[0]), 0) - p.x[0]) +
                   (Complex(to_double(u.u[1]), 0) - p.x[1]) * (Complex(to_double(u.u[1]), 0) - p.x[1]);
      p.distance = std::sqrt(std::abs(d2));
      rep.points.push_back(std::move(p));
    }
    std::sort(rep.points.begin(), rep.points.end(), point_less);
  }
  return rep;
}

// ---------------------------------------------------------------------------
// projective counting

// Exact data about the solutions on the line x3 = 0: the square-free gcd of
// the two restricted binary forms, with isotropic and singular roots split
// off, plus whether (1:0:0) solves the system.
struct InfinityAnalysis {
  UniPoly h;  // remaining (counted) part, variable = x1/x2
  long long excluded_isotropic = 0;
  long long excluded_singular = 0;
  bool point_100 = false;  // (1:0:0) is an unexcluded solution
};

InfinityAnalysis analyze_infinity(const MultiPoly& F, const MultiPoly& G,
                                  const std::vector<std::vector<Rational>>& singular) {
  MultiPoly f_inf = F.substitute(2, Rational(0));
  MultiPoly g_inf = G.substitute(2, Rational(0));
  if (f_inf.is_zero())
    throw std::invalid_argument("curve contains the line at infinity");
  InfinityAnalysis out;
  if (g_inf.is_zero()) throw RetrySignal("critical system vanishes at infinity");

  // Dehomogenize with respect to x2; the forgotten point is (1:0:0).
  MultiPoly p1m = f_inf.substitute(1, Rational(1));
  MultiPoly p2m = g_inf.substitute(1, Rational(1));
  UniPoly p1 = UniPoly::from_multi(p1m, 0);
  UniPoly p2 = UniPoly::from_multi(p2m, 0);
  UniPoly h = unipoly_gcd(p1, p2);
  if (!h.is_zero() && h.degree() > 0) {
    h = squarefree_part(h);
    // isotropic points at infinity are the roots of x^2 + 1
    UniPoly iso = unipoly_gcd(h, UniPoly({Rational(1), Rational(0), Rational(1)}));
    if (iso.degree() > 0) {
      out.excluded_isotropic = iso.degree();
      h = h.divide_exact(iso);
    }
    for (const auto& sp : singular) {
      if (sp[2] != 0 || sp[1] == 0) continue;
      Rational x0 = sp[0] / sp[1];
      if (h.degree() > 0 && h.evaluate(x0) == 0) {
        h.strip_root(x0);
        ++out.excluded_singular;
      }
    }
    out.h = h;
  }

  // (1:0:0): x2 = x3 = 0
  bool f_at = true, g_at = true;
  std::vector<Rational> e100 = {Rational(1), Rational(0), Rational(0)};
  f_at = (F.evaluate(e100) == 0);
  g_at = (G.evaluate(e100) == 0);
  if (f_at && g_at) {
    bool is_singular_listed = false;
    for (const auto& sp : singular)
      if (sp[1] == 0 && sp[2] == 0) is_singular_listed = true;
    if (is_singular_listed)
      ++out.excluded_singular;
    else
      out.point_100 = true;  // not isotropic: q(1,0,0) = 1
  }
  return out;
}

CriticalReport count_critical_projective(const PlaneCurve& curve, const DataPoint& u,
                                         bool with_points) {
  auto [F, G] = build_projective_system(curve, u);
  if (G.is_zero()) {
    // grad F is proportional to x everywhere (only for the isotropic quadric
    // itself): the whole critical scheme lies on Q and saturates away.
    return CriticalReport{};
  }

  // chart x3 = 1 (arity drops to 2)
  MultiPoly f = F.substitute_tail({Rational(1)});
  MultiPoly g = G.substitute_tail({Rational(1)});
  std::vector<Rational> sx, sy;
  for (const auto& p : curve.known_singular_points) {
    if (p[2] == 0) continue;
    sx.push_back(p[0] / p[2]);
    sy.push_back(p[1] / p[2]);
  }
  ChartAnalysis ca = analyze_chart(f, g, sx, sy, true);
  InfinityAnalysis inf = analyze_infinity(F, G, curve.known_singular_points);

  CriticalReport rep;
  rep.excluded_singular = ca.excluded_singular + inf.excluded_singular;
  rep.excluded_isotropic = ca.excluded_isotropic + inf.excluded_isotropic;
  long long chart_complex = (ca.r.degree() == 0) ? 0 : ca.r.degree();
  long long inf_complex = inf.h.is_zero() ? 0 : inf.h.degree();
  rep.complex_count = chart_complex + inf_complex + (inf.point_100 ? 1 : 0);
  rep.real_count = real_root_count(ca.r) +
                   (inf.h.is_zero() ? 0 : real_root_count(inf.h)) +
                   (inf.point_100 ? 1 : 0);

  if (with_points) {
    std::vector<double> ud = {to_double(u.u[0]), to_double(u.u[1]), to_double(u.u[2])};
    auto add_cone_point = [&](Complex z1, Complex z2, Complex z3, bool real, double residual) {
      Complex zz = z1 * z1 + z2 * z2 + z3 * z3;
      Complex uz = ud[0] * z1 + ud[1] * z2 + ud[2] * z3;
      Complex lambda = uz / zz;  // radial coordinate of the cone critical point
      CriticalPoint p;
      p.x = {lambda * z1, lambda * z2, lambda * z3};
      p.real = real;
      p.residual = residual;
      Complex d2 = 0;
      for (int i = 0; i < 3; ++i) d2 += (ud[i] - p.x[i]) * (ud[i] - p.x[i]);
      p.distance = std::sqrt(std::abs(d2));
      rep.points.push_back(std::move(p));
    };
    if (chart_complex > 0) {
      System2 sys = make_system(f, g);
      for (CriticalPoint& p : chart_points(ca, sys))
        add_cone_point(p.x[0], p.x[1], Complex(1, 0), p.real, p.residual);
    }
    if (inf_complex > 0) {
      for (const RootBox& rb : isolate_roots(inf.h))
        add_cone_point(rb.center, Complex(1, 0), Complex(0, 0), rb.is_real, rb.radius);
    }
    if (inf.point_100) add_cone_point(Complex(1, 0), Complex(0, 0), Complex(0, 0), true, 0.0);
    std::sort(rep.points.begin(), rep.points.end(), point_less);
  }
  return rep;
}

}  // namespace

CriticalReport count_critical(const PlaneCurve& curve, const DataPoint& u, bool with_points) {
  return curve.projective ? count_critical_projective(curve, u, with_points)
                          : count_critical_affine(curve, u, with_points);
}

// ---------------------------------------------------------------------------
// parametrized varieties

namespace {

// F_j = sum_i w_i (psi_i - u_i) dpsi_i/dt_j with the data supplied as
// polynomials (constants here, trailing symbols in ParamCounter).
std::pair<MultiPoly, MultiPoly> build_param_system(const std::vector<MultiPoly>& psi,
                                                   const std::vector<Rational>& weights,
                                                   const std::vector<MultiPoly>& u) {
  if (psi.empty()) throw std::invalid_argument("empty parametrization");
  const int arity = psi[0].arity();
  MultiPoly f1(arity), f2(arity);
  for (size_t i = 0; i < psi.size(); ++i) {
    Rational w = weights.empty() ? Rational(1) : weights[i];
    MultiPoly diff = (psi[i] - u[i]).scaled(w);
    f1 += diff * psi[i].derivative(0);
    f2 += diff * psi[i].derivative(1);
  }
  return {f1, f2};
}

void validate_param(const std::vector<MultiPoly>& psi, const std::vector<Rational>& weights,
                    size_t ulen, int k) {
  if (psi.empty()) throw std::invalid_argument("empty parametrization");
  for (const auto& p : psi)
    if (p.arity() != 2) throw std::invalid_argument("parametrization must be bivariate");
  if (!weights.empty() && weights.size() != psi.size())
    throw std::invalid_argument("weights must match the parametrization length");
  if (ulen != psi.size()) throw std::invalid_argument("data dimension mismatch");
  if (k < 1) throw std::invalid_argument("map degree must be >= 1");
}

double smallest_singular_2col(const std::vector<Complex>& c1, const std::vector<Complex>& c2) {
  double a = 0, d = 0;
  Complex b = 0;
  for (size_t i = 0; i < c1.size(); ++i) {
    a += std::norm(c1[i]);
    d += std::norm(c2[i]);
    b += std::conj(c1[i]) * c2[i];
  }
  double tr = a + d;
  double det = a * d - std::norm(b);
  double disc = std::sqrt(std::max(0.0, tr * tr - 4 * det));
  return std::sqrt(std::max(0.0, (tr - disc) / 2));
}

}  // namespace

CriticalReport param_critical_count(const std::vector<MultiPoly>& psi,
                                    const std::vector<Rational>& weights,
                                    const DataPoint& u, int k, bool with_points) {
  validate_param(psi, weights, u.u.size(), k);
  std::vector<MultiPoly> uc;
  for (const Rational& v : u.u) uc.push_back(MultiPoly::constant(2, v));
  auto [f1, f2] = build_param_system(psi, weights, uc);

  ChartAnalysis ca = analyze_chart(f1, f2, {Rational(0)}, {Rational(0)}, false);
  CriticalReport rep;
  rep.excluded_singular = ca.excluded_singular;  // parameter origin (rank-drop locus)
  long long surviving = (ca.r.degree() == 0) ? 0 : ca.r.degree();
  if (surviving % k != 0)
    throw std::domain_error("critical count " + std::to_string(surviving) +
                            " is not divisible by the map degree " + std::to_string(k));
  rep.complex_count = surviving / k;
  rep.real_count = real_root_count(ca.r);

  if (with_points && surviving > 0) {
    System2 sys = make_system(f1, f2);
    std::vector<MultiPoly> d1, d2;
    for (const auto& p : psi) {
      d1.push_back(p.derivative(0));
      d2.push_back(p.derivative(1));
    }
    for (CriticalPoint& tp : chart_points(ca, sys)) {
      Complex t1 = tp.x[0], t2 = tp.x[1];
      std::vector<Complex> j1, j2;
      for (size_t i = 0; i < psi.size(); ++i) {
        j1.push_back(eval2(d1[i], t1, t2));
        j2.push_back(eval2(d2[i], t1, t2));
      }
      if (smallest_singular_2col(j1, j2) < 1e-10) {
        ++rep.excluded_singular;
        continue;  // parametrization drops rank here; not a point of the variety count
      }
      CriticalPoint p;
      p.real = tp.real;
      p.residual = tp.residual;
      Complex d2sum = 0;
      for (size_t i = 0; i < psi.size(); ++i) {
        Complex xi = eval2(psi[i], t1, t2);
        p.x.push_back(xi);
        Rational w = weights.empty() ? Rational(1) : weights[i];
        Complex diff = Complex(to_double(u.u[i]), 0) - xi;
        d2sum += to_double(w) * diff * diff;
      }
      p.distance = std::sqrt(std::abs(d2sum));
      rep.points.push_back(std::move(p));
    }
    std::sort(rep.points.begin(), rep.points.end(), point_less);
  }
  return rep;
}

// ---------------------------------------------------------------------------
// symbolic-data counters for Monte Carlo sweeps

AffineCounter::AffineCounter(const PlaneCurve& curve) {
  if (curve.projective) throw std::invalid_argument("AffineCounter needs an affine curve");
  MultiPoly f = curve.form.widened(2);  // (x, y, u1, u2)
  MultiPoly x = MultiPoly::var(4, 0), y = MultiPoly::var(4, 1);
  MultiPoly u1 = MultiPoly::var(4, 2), u2 = MultiPoly::var(4, 3);
  MultiPoly g = (u1 - x) * f.derivative(1) - (u2 - y) * f.derivative(0);
  if (f.degree_in(1) < 1 || g.degree_in(1) < 1)
    throw std::invalid_argument("AffineCounter requires genuine dependence on x2");
  elim_ = resultant(f, g, 1);
  for (const auto& p : curve.known_singular_points) strip_x_.push_back(p[0]);

  // If the origin column is a known singular x-coordinate, its multiplicity
  // is already visible symbolically; dividing it out once saves per-sample
  // work.
  bool zero_listed =
      std::find(strip_x_.begin(), strip_x_.end(), Rational(0)) != strip_x_.end();
  if (zero_listed && !elim_.is_zero()) {
    int min_pow = elim_.degree_in(0);
    for (const auto& [mono, c] : elim_.terms()) min_pow = std::min(min_pow, mono[0]);
    if (min_pow > 0) {
      MultiPoly reduced(elim_.arity());
      for (const auto& [mono, c] : elim_.terms()) {
        Monomial m = mono;
        m[0] -= min_pow;
        reduced.set_coeff(m, c);
      }
      elim_ = reduced;
    }
  }
  expected_degree_ = elim_.is_zero() ? 0 : elim_.degree_in(0);
  if (expected_degree_ == 0) throw std::invalid_argument("critical eliminant is trivial");
}

std::pair<long long, long long> AffineCounter::counts(const std::vector<Rational>& u) const {
  MultiPoly spec = elim_.substitute_tail(u);
  if (spec.is_zero()) throw RetrySignal("vanishing eliminant");
  UniPoly r = UniPoly::from_multi(spec, 0);
  if (r.degree() != expected_degree_)
    throw RetrySignal("eliminant degree dropped (leading coefficient vanished)");
  strip_known_roots(r, strip_x_);
  if (r.degree() == 0) return {0, 0};
  SturmChain chain(r);
  if (!chain.valid()) throw RetrySignal("eliminant not square-free");
  return {r.degree(), chain.count_all()};
}

ParamCounter::ParamCounter(const std::vector<MultiPoly>& psi,
                           const std::vector<Rational>& weights, int k)
    : n_(static_cast<int>(psi.size())), k_(k) {
  validate_param(psi, weights, psi.size(), k);
  std::vector<MultiPoly> wide, us;
  for (int i = 0; i < n_; ++i) {
    wide.push_back(psi[i].widened(n_));
    us.push_back(MultiPoly::var(2 + n_, 2 + i));
  }
  auto [f1, f2] = build_param_system(wide, weights, us);
  if (f1.is_zero() || f2.is_zero() || f1.degree_in(1) < 1 || f2.degree_in(1) < 1)
    throw std::invalid_argument("ParamCounter requires genuine dependence on t2");
  elim_ = resultant(f1, f2, 1);
  if (elim_.is_zero()) throw std::invalid_argument("parametrization eliminant vanishes");
  expected_degree_ = elim_.degree_in(0);
}

std::pair<long long, long long> ParamCounter::counts(const std::vector<Rational>& u) const {
  if (static_cast<int>(u.size()) != n_) throw std::invalid_argument("data dimension mismatch");
  MultiPoly spec = elim_.substitute_tail(u);
  if (spec.is_zero()) throw RetrySignal("vanishing eliminant");
  UniPoly r = UniPoly::from_multi(spec, 0);
  if (r.degree() != expected_degree_)
    throw RetrySignal("eliminant degree dropped (leading coefficient vanished)");
  r.strip_root(Rational(0));  // rank-drop locus of the parametrization
  if (r.degree() == 0) return {0, 0};
  SturmChain chain(r);
  if (!chain.valid()) throw RetrySignal("eliminant not square-free");
  if (r.degree() % k_ != 0) throw RetrySignal("count not divisible by the map degree");
  return {r.degree() / k_, chain.count_all()};
}

// ---------------------------------------------------------------------------
// affine variety versus projective closure

ClosureComparison affine_vs_closure(const PlaneCurve& curve, const DataPoint& u) {
  if (curve.projective) throw std::invalid_argument("affine_vs_closure needs an affine curve");
  ClosureComparison out;
  out.affine = count_critical(curve, u, true);

  std::vector<std::vector<Rational>> lifted;
  for (const auto& p : curve.known_singular_points)
    lifted.push_back({p[0], p[1], Rational(1)});
  PlaneCurve closure = projective_curve(homogenize_last(curve.form), lifted);
  // The set of degenerate data for the cone is itself a cone, so a generic
  // point on the slice u3 = 1 is generic for the closure problem.
  out.closure = count_critical(closure, DataPoint{{u.u[0], u.u[1], Rational(1)}}, true);

  // Push the critical points of the distance-from-origin function through
  // x -> (x, 1)/(1 + x.x) and verify they are critical on the cone for the
  // data point (0, 0, 1).  The origin is non-generic for some curves
  // (e.g. circles centered there); skip the check when it signals a retry.
  try {
    CriticalReport origin = count_critical(curve, DataPoint{{Rational(0), Rational(0)}}, true);
    MultiPoly F = closure.form;
    auto [Fq, Gq] = build_projective_system(closure, DataPoint{{Rational(0), Rational(0), Rational(1)}});
    for (const CriticalPoint& p : origin.points) {
      if (!p.real) continue;
      double x1 = p.x[0].real(), x2 = p.x[1].real();
      double t = 1.0 / (1.0 + x1 * x1 + x2 * x2);
      std::vector<Complex> z = {Complex(t * x1, 0), Complex(t * x2, 0), Complex(t, 0)};
      double res = std::abs(F.evaluate(z)) + std::abs(Gq.evaluate(z));
      out.lemma_residual = std::max(out.lemma_residual, res);
      out.lemma_checked = true;
    }
    (void)Fq;
  } catch (const RetrySignal&) {
    out.lemma_checked = false;
  }
  return out;
}

}  // namespace eddeg
