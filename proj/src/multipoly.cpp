#include "eddeg/multipoly.hpp"

#include <algorithm>
#include <cctype>
#include <numeric>
#include <sstream>

namespace eddeg {

MultiPoly::MultiPoly(int arity) : arity_(arity) {
  if (arity < 1) throw std::invalid_argument("MultiPoly: arity must be >= 1");
}

MultiPoly MultiPoly::constant(int arity, const Rational& c) {
  MultiPoly p(arity);
  if (c != 0) p.terms_[Monomial(arity, 0)] = c;
  return p;
}

MultiPoly MultiPoly::var(int arity, int index, int power) {
  if (index < 0 || index >= arity) throw std::invalid_argument("MultiPoly::var: bad index");
  if (power < 0) throw std::invalid_argument("MultiPoly::var: negative power");
  MultiPoly p(arity);
  Monomial m(arity, 0);
  m[index] = power;
  p.terms_[m] = 1;
  return p;
}

bool MultiPoly::is_constant() const {
  if (terms_.empty()) return true;
  if (terms_.size() > 1) return false;
  const Monomial& m = terms_.begin()->first;
  return std::all_of(m.begin(), m.end(), [](int e) { return e == 0; });
}

Rational MultiPoly::constant_value() const {
  if (terms_.empty()) return 0;
  if (!is_constant()) throw std::domain_error("MultiPoly: not a constant");
  return terms_.begin()->second;
}

int MultiPoly::total_degree() const {
  if (terms_.empty()) throw std::domain_error("MultiPoly: degree of zero polynomial");
  int d = 0;
  for (const auto& [m, c] : terms_)
    d = std::max(d, std::accumulate(m.begin(), m.end(), 0));
  return d;
}

int MultiPoly::degree_in(int v) const {
  if (terms_.empty()) throw std::domain_error("MultiPoly: degree of zero polynomial");
  if (v < 0 || v >= arity_) throw std::invalid_argument("MultiPoly::degree_in: bad variable");
  int d = 0;
  for (const auto& [m, c] : terms_) d = std::max(d, m[v]);
  return d;
}

void MultiPoly::set_coeff(const Monomial& m, const Rational& c) {
  if (static_cast<int>(m.size()) != arity_)
    throw std::invalid_argument("MultiPoly::set_coeff: arity mismatch");
  if (c == 0)
    terms_.erase(m);
  else
    terms_[m] = c;
}

Rational MultiPoly::coeff(const Monomial& m) const {
  auto it = terms_.find(m);
  return it == terms_.end() ? Rational(0) : it->second;
}

MultiPoly MultiPoly::operator-() const {
  MultiPoly r(arity_);
  for (const auto& [m, c] : terms_) r.terms_[m] = -c;
  return r;
}

MultiPoly& MultiPoly::operator+=(const MultiPoly& o) {
  if (o.arity_ != arity_) throw std::invalid_argument("MultiPoly: arity mismatch");
  for (const auto& [m, c] : o.terms_) {
    auto it = terms_.find(m);
    if (it == terms_.end()) {
      terms_.emplace(m, c);
    } else {
      it->second += c;
      if (it->second == 0) terms_.erase(it);
    }
  }
  return *this;
}

MultiPoly& MultiPoly::operator-=(const MultiPoly& o) {
  if (o.arity_ != arity_) throw std::invalid_argument("MultiPoly: arity mismatch");
  for (const auto& [m, c] : o.terms_) {
    auto it = terms_.find(m);
    if (it == terms_.end()) {
      terms_.emplace(m, -c);
    } else {
      it->second -= c;
      if (it->second == 0) terms_.erase(it);
    }
  }
  return *this;
}

MultiPoly MultiPoly::operator+(const MultiPoly& o) const {
  MultiPoly r = *this;
  r += o;
  return r;
}

MultiPoly MultiPoly::operator-(const MultiPoly& o) const {
  MultiPoly r = *this;
  r -= o;
  return r;
}

MultiPoly MultiPoly::operator*(const MultiPoly& o) const {
  if (o.arity_ != arity_) throw std::invalid_argument("MultiPoly: arity mismatch");
  MultiPoly r(arity_);
  Monomial prod(arity_);
  for (const auto& [ma, ca] : terms_) {
    for (const auto& [mb, cb] : o.terms_) {
      for (int i = 0; i < arity_; ++i) prod[i] = ma[i] + mb[i];
      auto it = r.terms_.find(prod);
      if (it == r.terms_.end()) {
        Rational c = ca * cb;
        if (c != 0) r.terms_.emplace(prod, std::move(c));
      } else {
        it->second += ca * cb;
        if (it->second == 0) r.terms_.erase(it);
      }
    }
  }
  return r;
}

MultiPoly MultiPoly::scaled(const Rational& c) const {
  MultiPoly r(arity_);
  if (c == 0) return r;
  for (const auto& [m, v] : terms_) r.terms_[m] = v * c;
  return r;
}

MultiPoly MultiPoly::pow(unsigned e) const {
  MultiPoly r = constant(arity_, 1);
  MultiPoly b = *this;
  while (e) {
    if (e & 1) r = r * b;
    if (e >>= 1) b = b * b;
  }
  return r;
}

MultiPoly MultiPoly::derivative(int v) const {
  if (v < 0 || v >= arity_) throw std::invalid_argument("MultiPoly::derivative: bad variable");
  MultiPoly r(arity_);
  for (const auto& [m, c] : terms_) {
    if (m[v] == 0) continue;
    Monomial d = m;
    d[v] -= 1;
    r.terms_[d] = c * m[v];
  }
  return r;
}

Rational MultiPoly::evaluate(const std::vector<Rational>& point) const {
  if (static_cast<int>(point.size()) != arity_)
    throw std::invalid_argument("MultiPoly::evaluate: wrong point size");
  Rational total = 0;
  for (const auto& [m, c] : terms_) {
    Rational t = c;
    for (int i = 0; i < arity_; ++i)
      if (m[i]) t *= rat_pow(point[i], static_cast<unsigned>(m[i]));
    total += t;
  }
  return total;
}

std::complex<double> MultiPoly::evaluate(const std::vector<std::complex<double>>& point) const {
  if (static_cast<int>(point.size()) != arity_)
    throw std::invalid_argument("MultiPoly::evaluate: wrong point size");
  std::complex<double> total = 0;
  for (const auto& [m, c] : terms_) {
    std::complex<double> t = to_double(c);
    for (int i = 0; i < arity_; ++i)
      for (int e = 0; e < m[i]; ++e) t *= point[i];
    total += t;
  }
  return total;
}

double MultiPoly::evaluate(const std::vector<double>& point) const {
  if (static_cast<int>(point.size()) != arity_)
    throw std::invalid_argument("MultiPoly::evaluate: wrong point size");
  double total = 0;
  for (const auto& [m, c] : terms_) {
    double t = to_double(c);
    for (int i = 0; i < arity_; ++i)
      for (int e = 0; e < m[i]; ++e) t *= point[i];
    total += t;
  }
  return total;
}

MultiPoly MultiPoly::substitute(int v, const Rational& value) const {
  if (v < 0 || v >= arity_) throw std::invalid_argument("MultiPoly::substitute: bad variable");
  MultiPoly r(arity_);
  for (const auto& [m, c] : terms_) {
    Rational nc = c * rat_pow(value, static_cast<unsigned>(m[v]));
    if (nc == 0) continue;
    Monomial nm = m;
    nm[v] = 0;
    auto it = r.terms_.find(nm);
    if (it == r.terms_.end()) {
      r.terms_.emplace(std::move(nm), std::move(nc));
    } else {
      it->second += nc;
      if (it->second == 0) r.terms_.erase(it);
    }
  }
  return r;
}

MultiPoly MultiPoly::substitute_tail(const std::vector<Rational>& values) const {
  int k = static_cast<int>(values.size());
  if (k >= arity_) throw std::invalid_argument("MultiPoly::substitute_tail: too many values");
  int na = arity_ - k;
  MultiPoly r(na);
  // Cache powers per variable to avoid recomputing rat_pow for every term.
  std::vector<std::vector<Rational>> pow_cache(k);
  for (const auto& [m, c] : terms_) {
    Rational nc = c;
    for (int j = 0; j < k; ++j) {
      int e = m[na + j];
      if (e == 0) continue;
      auto& cache = pow_cache[j];
      while (static_cast<int>(cache.size()) <= e)
        cache.push_back(cache.empty() ? Rational(1) : cache.back() * values[j]);
      nc *= cache[e];
    }
    if (nc == 0) continue;
    Monomial nm(m.begin(), m.begin() + na);
    auto it = r.terms_.find(nm);
    if (it == r.terms_.end()) {
      r.terms_.emplace(std::move(nm), std::move(nc));
    } else {
      it->second += nc;
      if (it->second == 0) r.terms_.erase(it);
    }
  }
  return r;
}

MultiPoly MultiPoly::widened(int extra) const {
  if (extra < 0) throw std::invalid_argument("MultiPoly::widened: negative");
  MultiPoly r(arity_ + extra);
  for (const auto& [m, c] : terms_) {
    Monomial nm = m;
    nm.resize(arity_ + extra, 0);
    r.terms_.emplace(std::move(nm), c);
  }
  return r;
}

std::vector<MultiPoly> MultiPoly::coeffs_in(int v) const {
  if (v < 0 || v >= arity_) throw std::invalid_argument("MultiPoly::coeffs_in: bad variable");
  int d = 0;
  for (const auto& [m, c] : terms_) d = std::max(d, m[v]);
  std::vector<MultiPoly> out(static_cast<size_t>(d) + 1, MultiPoly(arity_));
  for (const auto& [m, c] : terms_) {
    Monomial nm = m;
    nm[v] = 0;
    out[m[v]].terms_.emplace(std::move(nm), c);
  }
  return out;
}

MultiPoly MultiPoly::from_coeffs_in(int v, const std::vector<MultiPoly>& coeffs) {
  if (coeffs.empty()) throw std::invalid_argument("from_coeffs_in: empty");
  int arity = coeffs[0].arity();
  MultiPoly r(arity);
  for (size_t k = 0; k < coeffs.size(); ++k) {
    for (const auto& [m, c] : coeffs[k].terms_) {
      Monomial nm = m;
      nm[v] += static_cast<int>(k);
      auto it = r.terms_.find(nm);
      if (it == r.terms_.end()) {
        r.terms_.emplace(std::move(nm), c);
      } else {
        it->second += c;
        if (it->second == 0) r.terms_.erase(it);
      }
    }
  }
  return r;
}

Rational MultiPoly::content() const {
  if (terms_.empty()) return 0;
  Int num_gcd = 0, den_lcm = 1;
  for (const auto& [m, c] : terms_) {
    num_gcd = boost::multiprecision::gcd(num_gcd, boost::multiprecision::abs(numerator(c)));
    den_lcm = boost::multiprecision::lcm(den_lcm, denominator(c));
  }
  Rational r(num_gcd, den_lcm);
  // Sign convention: content carries the sign of the lex-leading coefficient,
  // so the primitive part has positive leading coefficient.
  if (terms_.rbegin()->second < 0) r = -r;
  return r;
}

MultiPoly MultiPoly::primitive_part() const {
  if (terms_.empty()) return *this;
  Rational c = content();
  MultiPoly r(arity_);
  for (const auto& [m, v] : terms_) r.terms_[m] = v / c;
  return r;
}

// ---------------------------------------------------------------------------
// Parser

namespace {

struct Cursor {
  const std::string& s;
  size_t i = 0;
  void skip_ws() {
    while (i < s.size() && std::isspace(static_cast<unsigned char>(s[i]))) ++i;
  }
  bool done() {
    skip_ws();
    return i >= s.size();
  }
  char peek() {
    skip_ws();
    return i < s.size() ? s[i] : '\0';
  }
  char take() {
    skip_ws();
    return s[i++];
  }
  [[noreturn]] void fail(const std::string& why) const {
    throw std::invalid_argument("polynomial parse error at position " + std::to_string(i) +
                                ": " + why);
  }
};

Int parse_uint(Cursor& c) {
  c.skip_ws();
  size_t start = c.i;
  while (c.i < c.s.size() && std::isdigit(static_cast<unsigned char>(c.s[c.i]))) ++c.i;
  if (c.i == start) c.fail("expected digits");
  return Int(c.s.substr(start, c.i - start));
}

// Returns 1-based variable index, or 0 if the cursor is not at a variable.
int parse_var(Cursor& c) {
  char ch = c.peek();
  if (ch == 'x') {
    ++c.i;
    if (c.i < c.s.size() && std::isdigit(static_cast<unsigned char>(c.s[c.i]))) {
      Int idx = parse_uint(c);
      if (idx < 1 || idx > 64) c.fail("variable index out of range");
      return idx.convert_to<int>();
    }
    return 1;  // bare x
  }
  if (ch == 'y') {
    ++c.i;
    return 2;
  }
  if (ch == 'z') {
    ++c.i;
    return 3;
  }
  return 0;
}

struct RawTerm {
  Rational coef;
  std::map<int, int> powers;  // 1-based variable -> exponent
};

RawTerm parse_term(Cursor& c) {
  RawTerm t;
  t.coef = 1;
  bool saw_anything = false;
  if (std::isdigit(static_cast<unsigned char>(c.peek()))) {
    Int num = parse_uint(c);
    if (c.peek() == '/') {
      ++c.i;
      Int den = parse_uint(c);
      if (den == 0) c.fail("zero denominator");
      t.coef = Rational(num, den);
    } else {
      t.coef = num;
    }
    saw_anything = true;
  }
  for (;;) {
    if (c.peek() == '*') {
      ++c.i;
      if (c.done()) c.fail("dangling '*'");
    }
    int v = parse_var(c);
    if (v == 0) break;
    int e = 1;
    if (c.peek() == '^') {
      ++c.i;
      Int exp = parse_uint(c);
      if (exp < 0 || exp > 4096) c.fail("exponent out of range");
      e = exp.convert_to<int>();
    }
    t.powers[v] += e;
    saw_anything = true;
  }
  if (!saw_anything) c.fail("expected a term");
  return t;
}

}  // namespace

MultiPoly MultiPoly::parse(const std::string& text, int arity) {
  Cursor c{text};
  std::vector<std::pair<RawTerm, int>> terms;  // term, sign
  int sign = 1;
  if (c.peek() == '+') {
    ++c.i;
  } else if (c.peek() == '-') {
    ++c.i;
    sign = -1;
  }
  if (c.done()) c.fail("empty polynomial");
  int max_var = 1;
  for (;;) {
    RawTerm t = parse_term(c);
    for (const auto& [v, e] : t.powers) max_var = std::max(max_var, v);
    terms.emplace_back(std::move(t), sign);
    if (c.done()) break;
    char op = c.take();
    if (op == '+') {
      sign = 1;
    } else if (op == '-') {
      sign = -1;
    } else {
      --c.i;
      c.fail("expected '+' or '-'");
    }
  }
  int n = arity < 0 ? max_var : arity;
  if (max_var > n)
    throw std::invalid_argument("polynomial uses x" + std::to_string(max_var) +
                                " but arity is " + std::to_string(n));
  MultiPoly p(n);
  for (const auto& [t, sg] : terms) {
    Monomial m(n, 0);
    for (const auto& [v, e] : t.powers) m[v - 1] = e;
    Rational c0 = t.coef * sg;
    auto it = p.terms_.find(m);
    if (it == p.terms_.end()) {
      if (c0 != 0) p.terms_.emplace(std::move(m), std::move(c0));
    } else {
      it->second += c0;
      if (it->second == 0) p.terms_.erase(it);
    }
  }
  return p;
}

std::string MultiPoly::to_string() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  // Print highest lex term first for readability.
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
    const auto& [m, c] = *it;
    Rational a = c;
    if (first) {
      if (a < 0) {
        os << "-";
        a = -a;
      }
    } else {
      os << (a < 0 ? " - " : " + ");
      if (a < 0) a = -a;
    }
    first = false;
    bool any_var = std::any_of(m.begin(), m.end(), [](int e) { return e > 0; });
    if (a != 1 || !any_var) {
      os << a;
      if (any_var) os << "*";
    }
    bool firstv = true;
    for (int i = 0; i < arity_; ++i) {
      if (m[i] == 0) continue;
      if (!firstv) os << "*";
      firstv = false;
      os << "x" << (i + 1);
      if (m[i] > 1) os << "^" << m[i];
    }
  }
  return os.str();
}

}  // namespace eddeg
