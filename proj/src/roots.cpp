#include "eddeg/roots.hpp"

#include <Eigen/Dense>
#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace eddeg {

namespace {

// Coefficients scaled so the largest magnitude is 1; keeps huge integer
// coefficients (eliminants) inside double range without moving the roots.
std::vector<double> scaled_double_coeffs(const UniPoly& q) {
  Rational amax = 0;
  for (int i = 0; i <= q.degree(); ++i) {
    Rational a = abs(q.coeff(i));
    if (a > amax) amax = a;
  }
  std::vector<double> cs(q.degree() + 1);
  for (int i = 0; i <= q.degree(); ++i) cs[i] = to_double(q.coeff(i) / amax);
  return cs;
}

std::complex<double> horner(const std::vector<double>& cs, std::complex<double> z) {
  std::complex<double> acc(0.0, 0.0);
  for (int i = static_cast<int>(cs.size()) - 1; i >= 0; --i) acc = acc * z + cs[i];
  return acc;
}

std::complex<double> horner_deriv(const std::vector<double>& cs, std::complex<double> z) {
  std::complex<double> acc(0.0, 0.0);
  for (int i = static_cast<int>(cs.size()) - 1; i >= 1; --i)
    acc = acc * z + cs[i] * static_cast<double>(i);
  return acc;
}

std::complex<double> newton_polish(const std::vector<double>& cs, std::complex<double> z) {
  for (int it = 0; it < 60; ++it) {
    std::complex<double> d = horner_deriv(cs, z);
    if (std::abs(d) < 1e-300) break;
    std::complex<double> step = horner(cs, z) / d;
    z -= step;
    if (std::abs(step) <= 1e-15 * std::max(1.0, std::abs(z))) break;
  }
  return z;
}

double residual_radius(const std::vector<double>& cs, std::complex<double> z) {
  double d = std::abs(horner_deriv(cs, z));
  if (d < 1e-300) return 1e-6;
  double r = static_cast<double>(cs.size()) * std::abs(horner(cs, z)) / d;
  return std::max(r, 1e-14);
}

// Cauchy bound: all roots lie strictly inside |x| < 1 + max|a_i|/|a_d|.
Rational root_bound(const UniPoly& q) {
  Rational m = 0;
  Rational lead = abs(q.lead());
  for (int i = 0; i < q.degree(); ++i) {
    Rational a = abs(q.coeff(i)) / lead;
    if (a > m) m = a;
  }
  Int b = numerator(m) / denominator(m) + 2;
  return Rational(b);
}

struct Isolated {
  Rational lo, hi;  // root is the unique one in (lo, hi]
  double approx;
};

std::vector<Isolated> sturm_isolate(const UniPoly& q, const SturmChain& chain) {
  Rational bound = root_bound(q);
  std::vector<Isolated> found;
  std::vector<std::pair<Rational, Rational>> stack;
  stack.emplace_back(-bound, bound);
  const Rational width_goal(1, Int(1) << 24);
  while (!stack.empty()) {
    auto [lo, hi] = stack.back();
    stack.pop_back();
    int c = chain.count(lo, hi);
    if (c == 0) continue;
    if (c == 1 && hi - lo <= width_goal) {
      found.push_back({lo, hi, to_double((lo + hi) / 2)});
      continue;
    }
    Rational mid = (lo + hi) / 2;
    stack.emplace_back(lo, mid);
    stack.emplace_back(mid, hi);
  }
  std::sort(found.begin(), found.end(),
            [](const Isolated& a, const Isolated& b) { return a.lo < b.lo; });
  return found;
}

// Roots of one squarefree integer-coefficient factor.
std::vector<RootBox> roots_of_squarefree(const UniPoly& q, int multiplicity) {
  std::vector<RootBox> out;
  int d = q.degree();
  if (d == 0) return out;
  SturmChain chain(q);
  if (!chain.valid()) throw std::logic_error("squarefree factor failed the squarefree check");
  std::vector<double> cs = scaled_double_coeffs(q);
  auto isolated = sturm_isolate(q, chain);

  for (const auto& iso : isolated) {
    std::complex<double> z = newton_polish(cs, {iso.approx, 0.0});
    double r = z.real();
    // Accept the polished value only if the original interval still certifies it.
    Rational eps(1, Int(1) << 30);
    Rational rr = dyadic(r, 60);
    bool certified = false;
    if (std::isfinite(r)) {
      int c = chain.count(rr - eps, rr + eps);
      certified = (c == 1) && (rr - eps >= iso.lo - Rational(1) && rr + eps <= iso.hi + Rational(1));
    }
    if (!certified) r = iso.approx;
    RootBox box;
    box.center = {r, 0.0};
    box.radius = std::max(residual_radius(cs, box.center), to_double(iso.hi - iso.lo));
    box.multiplicity = multiplicity;
    box.is_real = true;
    out.push_back(box);
  }

  int nonreal = d - static_cast<int>(isolated.size());
  if (nonreal == 0) return out;

  // Companion-matrix eigenvalues seed the non-real roots.
  Eigen::MatrixXd companion = Eigen::MatrixXd::Zero(d, d);
  double lead = cs[d];
  for (int i = 0; i < d; ++i) companion(i, d - 1) = -cs[i] / lead;
  for (int i = 1; i < d; ++i) companion(i, i - 1) = 1.0;
  Eigen::EigenSolver<Eigen::MatrixXd> es(companion);
  if (es.info() != Eigen::Success) throw std::runtime_error("eigenvalue iteration failed");
  std::vector<std::complex<double>> cand;
  for (int i = 0; i < d; ++i)
    cand.push_back(newton_polish(cs, es.eigenvalues()(i)));

  // Remove the candidate nearest each certified real root.
  for (const auto& box : out) {
    size_t best = 0;
    double bestd = 1e300;
    for (size_t i = 0; i < cand.size(); ++i) {
      double dist = std::abs(cand[i] - box.center);
      if (dist < bestd) {
        bestd = dist;
        best = i;
      }
    }
    if (!cand.empty()) cand.erase(cand.begin() + static_cast<long>(best));
  }

  // Pair the rest into conjugates, most-imaginary first.
  std::sort(cand.begin(), cand.end(), [](auto a, auto b) {
    return std::abs(a.imag()) > std::abs(b.imag());
  });
  while (cand.size() >= 2) {
    std::complex<double> z = cand.front();
    cand.erase(cand.begin());
    std::complex<double> zc = std::conj(z);
    size_t best = 0;
    double bestd = 1e300;
    for (size_t i = 0; i < cand.size(); ++i) {
      double dist = std::abs(cand[i] - zc);
      if (dist < bestd) {
        bestd = dist;
        best = i;
      }
    }
    std::complex<double> partner = cand[best];
    cand.erase(cand.begin() + static_cast<long>(best));
    std::complex<double> avg = (z + std::conj(partner)) / 2.0;
    if (avg.imag() < 0) avg = std::conj(avg);
    for (std::complex<double> root : {avg, std::conj(avg)}) {
      RootBox box;
      box.center = root;
      box.radius = residual_radius(cs, root);
      box.multiplicity = multiplicity;
      box.is_real = false;
      out.push_back(box);
    }
  }
  if (!cand.empty()) throw std::runtime_error("conjugate pairing left an odd root behind");
  return out;
}

}  // namespace

std::vector<RootBox> isolate_roots(const UniPoly& p) {
  if (p.is_zero()) throw std::domain_error("cannot isolate roots of the zero polynomial");
  std::vector<RootBox> all;
  for (const auto& [factor, mult] : squarefree_decomposition(p)) {
    auto part = roots_of_squarefree(factor.primitive_integer(), mult);
    all.insert(all.end(), part.begin(), part.end());
  }
  return all;
}

std::vector<RootBox> isolate_real_roots(const UniPoly& p) {
  auto all = isolate_roots(p);
  std::vector<RootBox> real;
  for (const auto& b : all)
    if (b.is_real) real.push_back(b);
  std::sort(real.begin(), real.end(),
            [](const RootBox& a, const RootBox& b) { return a.center.real() < b.center.real(); });
  return real;
}

}  // namespace eddeg
