#pragma once

#include "eddeg/multipoly.hpp"
#include "eddeg/rational.hpp"

#include <complex>
#include <optional>
#include <vector>

namespace eddeg {

// Dense univariate polynomial over Q, coefficient of x^i at index i.
// Normalized: no trailing zero coefficients; the zero polynomial is {}.
class UniPoly {
 public:
  UniPoly() = default;
  explicit UniPoly(std::vector<Rational> coeffs);
  static UniPoly from_multi(const MultiPoly& p, int v = 0);
  MultiPoly to_multi(int arity = 1, int v = 0) const;

  bool is_zero() const { return c_.empty(); }
  int degree() const;  // throws on zero polynomial
  const std::vector<Rational>& coeffs() const { return c_; }
  const Rational& lead() const;
  Rational coeff(int i) const {
    return i < static_cast<int>(c_.size()) ? c_[i] : Rational(0);
  }

  UniPoly operator+(const UniPoly& o) const;
  UniPoly operator-(const UniPoly& o) const;
  UniPoly operator*(const UniPoly& o) const;
  UniPoly scaled(const Rational& r) const;
  bool operator==(const UniPoly& o) const = default;

  UniPoly derivative() const;
  Rational evaluate(const Rational& x) const;
  double evaluate(double x) const;
  std::complex<double> evaluate(std::complex<double> x) const;

  // Quotient/remainder over Q (denominators allowed).
  std::pair<UniPoly, UniPoly> divrem(const UniPoly& d) const;
  // Exact division; throws if the remainder is nonzero.
  UniPoly divide_exact(const UniPoly& d) const;
  // Divides out (x - a)^k for maximal k; returns k.
  int strip_root(const Rational& a);

  // Scales to integer coefficients with content 1 and positive leading
  // coefficient.
  UniPoly primitive_integer() const;

  std::string to_string() const { return to_multi().to_string(); }

 private:
  void normalize();
  std::vector<Rational> c_;
};

// gcd over Q, returned primitive-integer normalized (monic-free, positive
// lead); gcd(0,0) = 0.
UniPoly unipoly_gcd(const UniPoly& a, const UniPoly& b);

// p / gcd(p, p'), primitive-integer normalized with positive leading
// coefficient.  Errors on the zero polynomial.
UniPoly squarefree_part(const UniPoly& p);
MultiPoly squarefree_part(const MultiPoly& p);

// Yun's square-free decomposition: list of (factor, multiplicity) with
// factors primitive-integer, pairwise coprime, product of factor^mult equal
// to p up to a rational constant.  Factors of degree 0 are omitted.
std::vector<std::pair<UniPoly, int>> squarefree_decomposition(const UniPoly& p);

// Number of distinct real roots of the square-free polynomial p in the
// half-open interval (a, b]; unset bounds mean -infinity / +infinity.
// Throws std::invalid_argument if p is not square-free or is zero/constant-0.
int sturm_count(const UniPoly& p, const std::optional<Rational>& a,
                const std::optional<Rational>& b);
int sturm_count(const MultiPoly& p, const std::optional<Rational>& a,
                const std::optional<Rational>& b);

// Cached Sturm chain for repeated interval queries against one polynomial.
class SturmChain {
 public:
  explicit SturmChain(const UniPoly& p);  // p must be square-free
  int count(const std::optional<Rational>& a, const std::optional<Rational>& b) const;
  int count_all() const { return count(std::nullopt, std::nullopt); }
  bool valid() const { return valid_; }  // false if p was not square-free

 private:
  int variations_at(const std::optional<Rational>& x, bool neg_inf) const;
  std::vector<UniPoly> chain_;
  bool valid_ = true;
};

}  // namespace eddeg
