#include "eddeg/formulas.hpp"

#include <algorithm>
#include <stdexcept>

namespace eddeg {

namespace {

Int divide_exact_int(const Int& a, const Int& b) {
  if (b == 0 || a % b != 0) throw std::logic_error("expected exact integer division");
  return a / b;
}

}  // namespace

Int ed_generic_ci(int n, std::vector<int> degrees, bool projective) {
  int c = static_cast<int>(degrees.size());
  if (c == 0) throw std::invalid_argument("need at least one degree");
  if (projective ? (c > n - 1) : (c > n))
    throw std::invalid_argument("codimension exceeds ambient dimension");
  for (int d : degrees)
    if (d < 1) throw std::invalid_argument("degrees must be positive");
  std::sort(degrees.rbegin(), degrees.rend());

  int bound = projective ? n - c - 1 : n - c;
  // T[b] = sum over exponent tuples for the degrees handled so far whose
  // total is <= b of prod (d_j - 1)^{i_j}.
  std::vector<Int> T(bound + 1, Int(1));
  for (int d : degrees) {
    std::vector<Int> next(bound + 1, Int(0));
    for (int b = 0; b <= bound; ++b) {
      Int pw = 1;
      for (int i = 0; i <= b; ++i) {
        next[b] += pw * T[b - i];
        pw *= (d - 1);
      }
    }
    T = std::move(next);
  }
  Int prod = 1;
  for (int d : degrees) prod *= d;
  return prod * T[bound];
}

Int ed_generic_hypersurface(int n, int d) {
  if (d < 1 || n < 2) throw std::invalid_argument("need d >= 1 and n >= 2");
  // d * sum_{i=0}^{n-2} (d-1)^i, written without the (d-2) denominator.
  Int acc = 0, pw = 1;
  for (int i = 0; i <= n - 2; ++i) {
    acc += pw;
    pw *= (d - 1);
  }
  return Int(d) * acc;
}

Int ed_generic_parametric(int m, int d) {
  if (m < 1 || d < 1) throw std::invalid_argument("need m >= 1 and d >= 1");
  return int_pow(Int(2 * d - 1), static_cast<unsigned>(m));
}

Int ed_bezier(int d1, int d2, bool projective) {
  if (d1 < 1 || d2 < 1) throw std::invalid_argument("bidegrees must be >= 1");
  Int a(d1), b(d2);
  if (projective) return 14 * a * b - 6 * a - 6 * b + 4;
  return 4 * a * b + (2 * a - 1) * (2 * b - 1);
}

Int ed_hurwitz(int n, bool homogeneous) {
  if (n < 3) throw std::invalid_argument("need n >= 3");
  int m = n / 2;
  if (n % 2 == 1) return homogeneous ? Int(4 * m - 2) : Int(8 * m - 3);
  return homogeneous ? Int(8 * m - 6) : Int(4 * m - 3);
}

Int ed_cayley_menger(int p) {
  if (p < 3) throw std::invalid_argument("need p >= 3");
  Int v = (int_pow(Int(3), static_cast<unsigned>(p - 1)) - 1) / 2;
  if (p % 3 == 0) {
    Int third = factorial(p / 3);
    v -= divide_exact_int(factorial(p), 3 * third * third * third);
  }
  return v;
}

Int ed_eckart_young(int s, int t, int r) {
  if (!(1 <= r && r <= s && s <= t))
    throw std::invalid_argument("need 1 <= r <= s <= t");
  return binomial(s, r);
}

Int ed_smooth_curve(int d, int g) {
  if (d < 1 || g < 0) throw std::invalid_argument("need d >= 1 and g >= 0");
  return Int(3 * d + 2 * g - 2);
}

Int ed_from_chern(const ChernDegrees& cd) {
  if (cd.degs.empty()) throw std::invalid_argument("need at least c_0");
  int m = static_cast<int>(cd.degs.size()) - 1;
  Int acc = 0;
  for (int i = 0; i <= m; ++i) {
    Int term = (int_pow(Int(2), static_cast<unsigned>(m + 1 - i)) - 1) * cd.degs[i];
    acc += (i % 2 == 0) ? term : -term;
  }
  return acc;
}

Int ed_from_polar(const PolarClasses& pc) {
  Int acc = 0;
  for (const Int& d : pc.deltas) acc += d;
  return acc;
}

PolarClasses polar_reverse(const PolarClasses& pc) {
  PolarClasses r = pc;
  std::reverse(r.deltas.begin(), r.deltas.end());
  return r;
}

Int ed_after_projection(Int ed, int codim) {
  if (codim < 2)
    throw std::invalid_argument("projection invariance needs codimension >= 2");
  return ed;
}

Int ed_after_section(Int ed, Int deg_dual, int codim_dual) {
  if (codim_dual < 1) throw std::invalid_argument("dual codimension must be >= 1");
  return codim_dual == 1 ? ed - deg_dual : ed;
}

std::vector<Int> sectional_ed(const PolarClasses& pc, int n) {
  if (static_cast<int>(pc.deltas.size()) != n - 1)
    throw std::invalid_argument("expected n-1 polar classes");
  std::vector<Int> out(pc.deltas.size());
  Int tail = 0;
  for (int i = static_cast<int>(pc.deltas.size()) - 1; i >= 0; --i) {
    tail += pc.deltas[i];
    out[i] = tail;
  }
  return out;
}

Int ed_veronese_generic(int m, int d) {
  if (m < 1 || d < 1) throw std::invalid_argument("need m >= 1 and d >= 1");
  Int num = int_pow(Int(2 * d - 1), static_cast<unsigned>(m + 1)) -
            int_pow(Int(d - 1), static_cast<unsigned>(m + 1));
  return divide_exact_int(num, Int(d));
}

Int ed_eigen_count(int m, int w) {
  if (m < 1 || w < 2) throw std::invalid_argument("need m >= 1 and w >= 2");
  if (w == 2) return Int(m);
  return divide_exact_int(int_pow(Int(w - 1), static_cast<unsigned>(m)) - 1, Int(w - 2));
}

namespace {

Int disc_generic_hypersurface(int n, int d) {
  if (d < 1 || n < 3) throw std::invalid_argument("need d >= 1 and n >= 3");
  Int first = Int(d) * (n - 2) * int_pow(Int(d - 1), static_cast<unsigned>(n - 2));
  Int geom = 0, pw = 1;  // sum_{i=0}^{n-3} (d-1)^i
  for (int i = 0; i <= n - 3; ++i) {
    geom += pw;
    pw *= (d - 1);
  }
  return first + 2 * d * (d - 1) * geom;
}

}  // namespace

Int ed_discriminant_degree(const DiscriminantKind& kind) {
  return std::visit(
      [](const auto& k) -> Int {
        using K = std::decay_t<decltype(k)>;
        if constexpr (std::is_same_v<K, DiscGenericHypersurface>) {
          return disc_generic_hypersurface(k.n, k.d);
        } else if constexpr (std::is_same_v<K, DiscPlaneCurve>) {
          if (k.d < 1 || k.nodes < 0 || k.cusps < 0)
            throw std::invalid_argument("bad plane-curve parameters");
          return Int(3) * k.d * k.d - 3 * k.d - 6 * k.nodes - 8 * k.cusps;
        } else if constexpr (std::is_same_v<K, DiscSmoothSpaceCurve>) {
          if (k.d < 1 || k.g < 0) throw std::invalid_argument("bad curve parameters");
          return Int(6) * (k.d + k.g - 1);
        } else {
          static_assert(std::is_same_v<K, DiscSmoothSurface>);
          if (k.d < 1) throw std::invalid_argument("bad surface parameters");
          return 2 * (Int(15) * k.d + k.c1sq + k.c2 - 9 * k.degc1);
        }
      },
      kind);
}

}  // namespace eddeg
