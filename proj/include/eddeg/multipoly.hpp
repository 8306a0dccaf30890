#pragma once

#include "eddeg/rational.hpp"

#include <complex>
#include <map>
#include <string>
#include <vector>

namespace eddeg {

// Exponent vector; size always equals the owning polynomial's arity.
using Monomial = std::vector<int>;

// Sparse multivariate polynomial over Q.  Invariants: no explicit zero
// coefficients are stored, every stored monomial has size() == arity().
// Asking the degree of the zero polynomial is an error by design -- there is
// no -1 sentinel that arithmetic can silently consume.
class MultiPoly {
 public:
  explicit MultiPoly(int arity = 1);

  static MultiPoly zero(int arity) { return MultiPoly(arity); }
  static MultiPoly constant(int arity, const Rational& c);
  static MultiPoly var(int arity, int index, int power = 1);  // x_index^power, 0-based

  // Parses the text grammar: terms joined by + or -, each term
  // [coef][*]x<i>[^e][*x<j>[^e]...], coefficient an integer or a/b, variables
  // x1..xn with x,y,z accepted as aliases for x1,x2,x3.  Whitespace ignored.
  // arity < 0 means "use the largest variable index seen".
  static MultiPoly parse(const std::string& text, int arity = -1);

  int arity() const { return arity_; }
  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const;
  Rational constant_value() const;  // requires is_constant() or zero

  int total_degree() const;   // throws std::domain_error on the zero polynomial
  int degree_in(int v) const; // likewise

  const std::map<Monomial, Rational>& terms() const { return terms_; }
  void set_coeff(const Monomial& m, const Rational& c);
  Rational coeff(const Monomial& m) const;

  MultiPoly operator-() const;
  MultiPoly operator+(const MultiPoly& o) const;
  MultiPoly operator-(const MultiPoly& o) const;
  MultiPoly operator*(const MultiPoly& o) const;
  MultiPoly& operator+=(const MultiPoly& o);
  MultiPoly& operator-=(const MultiPoly& o);
  bool operator==(const MultiPoly& o) const = default;

  MultiPoly scaled(const Rational& c) const;
  MultiPoly pow(unsigned e) const;

  MultiPoly derivative(int v) const;

  Rational evaluate(const std::vector<Rational>& point) const;
  std::complex<double> evaluate(const std::vector<std::complex<double>>& point) const;
  double evaluate(const std::vector<double>& point) const;

  // Fixes variable v to a rational value; arity is preserved (the variable
  // just no longer appears).
  MultiPoly substitute(int v, const Rational& value) const;

  // Fixes the last k variables to the given values and drops them, returning
  // a polynomial of arity arity()-k.  Used to specialize cached symbolic
  // eliminants to concrete data points.
  MultiPoly substitute_tail(const std::vector<Rational>& values) const;

  // Extends arity by appending `extra` fresh variables (exponent 0).
  MultiPoly widened(int extra) const;

  // Dense coefficient list in variable v (index 0 = constant term); each entry
  // has the same arity with v-exponent zero.
  std::vector<MultiPoly> coeffs_in(int v) const;
  static MultiPoly from_coeffs_in(int v, const std::vector<MultiPoly>& coeffs);

  // Content (gcd of coefficient numerators / lcm of denominators, sign of the
  // leading term under lex order) and the primitive part p/content.
  Rational content() const;
  MultiPoly primitive_part() const;

  std::string to_string() const;

 private:
  int arity_;
  std::map<Monomial, Rational> terms_;
};

inline MultiPoly operator*(const Rational& c, const MultiPoly& p) { return p.scaled(c); }

}  // namespace eddeg
