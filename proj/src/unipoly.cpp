#include "eddeg/unipoly.hpp"

#include <algorithm>

namespace eddeg {

UniPoly::UniPoly(std::vector<Rational> coeffs) : c_(std::move(coeffs)) { normalize(); }

void UniPoly::normalize() {
  while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

UniPoly UniPoly::from_multi(const MultiPoly& p, int v) {
  if (p.is_zero()) return UniPoly();
  for (const auto& [m, c] : p.terms())
    for (int i = 0; i < p.arity(); ++i)
      if (i != v && m[i] != 0)
        throw std::invalid_argument("UniPoly::from_multi: polynomial is not univariate in x" +
                                    std::to_string(v + 1));
  std::vector<Rational> out(static_cast<size_t>(p.degree_in(v)) + 1, Rational(0));
  for (const auto& [m, c] : p.terms()) out[m[v]] = c;
  return UniPoly(std::move(out));
}

MultiPoly MultiPoly_from_uni_impl(const UniPoly& u, int arity, int v) {
  MultiPoly p(arity);
  for (size_t i = 0; i < u.coeffs().size(); ++i) {
    if (u.coeffs()[i] == 0) continue;
    Monomial m(arity, 0);
    m[v] = static_cast<int>(i);
    p.set_coeff(m, u.coeffs()[i]);
  }
  return p;
}

MultiPoly UniPoly::to_multi(int arity, int v) const { return MultiPoly_from_uni_impl(*this, arity, v); }

int UniPoly::degree() const {
  if (c_.empty()) throw std::domain_error("UniPoly: degree of zero polynomial");
  return static_cast<int>(c_.size()) - 1;
}

const Rational& UniPoly::lead() const {
  if (c_.empty()) throw std::domain_error("UniPoly: lead of zero polynomial");
  return c_.back();
}

UniPoly UniPoly::operator+(const UniPoly& o) const {
  std::vector<Rational> out(std::max(c_.size(), o.c_.size()), Rational(0));
  for (size_t i = 0; i < c_.size(); ++i) out[i] = c_[i];
  for (size_t i = 0; i < o.c_.size(); ++i) out[i] += o.c_[i];
  return UniPoly(std::move(out));
}

UniPoly UniPoly::operator-(const UniPoly& o) const {
  std::vector<Rational> out(std::max(c_.size(), o.c_.size()), Rational(0));
  for (size_t i = 0; i < c_.size(); ++i) out[i] = c_[i];
  for (size_t i = 0; i < o.c_.size(); ++i) out[i] -= o.c_[i];
  return UniPoly(std::move(out));
}

UniPoly UniPoly::operator*(const UniPoly& o) const {
  if (c_.empty() || o.c_.empty()) return UniPoly();
  std::vector<Rational> out(c_.size() + o.c_.size() - 1, Rational(0));
  for (size_t i = 0; i < c_.size(); ++i) {
    if (c_[i] == 0) continue;
    for (size_t j = 0; j < o.c_.size(); ++j) out[i + j] += c_[i] * o.c_[j];
  }
  return UniPoly(std::move(out));
}

UniPoly UniPoly::scaled(const Rational& r) const {
  if (r == 0) return UniPoly();
  std::vector<Rational> out = c_;
  for (auto& x : out) x *= r;
  return UniPoly(std::move(out));
}

UniPoly UniPoly::derivative() const {
  if (c_.size() <= 1) return UniPoly();
  std::vector<Rational> out(c_.size() - 1);
  for (size_t i = 1; i < c_.size(); ++i) out[i - 1] = c_[i] * static_cast<int>(i);
  return UniPoly(std::move(out));
}

Rational UniPoly::evaluate(const Rational& x) const {
  Rational r = 0;
  for (auto it = c_.rbegin(); it != c_.rend(); ++it) r = r * x + *it;
  return r;
}

double UniPoly::evaluate(double x) const {
  double r = 0;
  for (auto it = c_.rbegin(); it != c_.rend(); ++it) r = r * x + to_double(*it);
  return r;
}

std::complex<double> UniPoly::evaluate(std::complex<double> x) const {
  std::complex<double> r = 0;
  for (auto it = c_.rbegin(); it != c_.rend(); ++it) r = r * x + to_double(*it);
  return r;
}

std::pair<UniPoly, UniPoly> UniPoly::divrem(const UniPoly& d) const {
  if (d.is_zero()) throw std::invalid_argument("UniPoly: division by zero");
  UniPoly rem = *this;
  if (rem.is_zero() || rem.degree() < d.degree()) return {UniPoly(), rem};
  std::vector<Rational> q(static_cast<size_t>(rem.degree() - d.degree()) + 1, Rational(0));
  while (!rem.is_zero() && rem.degree() >= d.degree()) {
    int shift = rem.degree() - d.degree();
    Rational f = rem.lead() / d.lead();
    q[shift] = f;
    for (size_t i = 0; i < d.c_.size(); ++i) rem.c_[i + shift] -= f * d.c_[i];
    rem.normalize();
  }
  return {UniPoly(std::move(q)), rem};
}

UniPoly UniPoly::divide_exact(const UniPoly& d) const {
  auto [q, r] = divrem(d);
  if (!r.is_zero()) throw std::domain_error("UniPoly: inexact division");
  return q;
}

int UniPoly::strip_root(const Rational& a) {
  int k = 0;
  while (!is_zero() && evaluate(a) == 0) {
    // synthetic division by (x - a)
    std::vector<Rational> out(c_.size() - 1);
    Rational carry = 0;
    for (size_t i = c_.size(); i-- > 1;) {
      carry = c_[i] + carry * a;
      out[i - 1] = carry;
    }
    c_ = std::move(out);
    normalize();
    ++k;
  }
  return k;
}

UniPoly UniPoly::primitive_integer() const {
  if (c_.empty()) return *this;
  Int den_lcm = 1;
  for (const auto& q : c_) den_lcm = boost::multiprecision::lcm(den_lcm, denominator(q));
  Int num_gcd = 0;
  for (const auto& q : c_)
    num_gcd = boost::multiprecision::gcd(
        num_gcd, boost::multiprecision::abs(numerator(q) * (den_lcm / denominator(q))));
  Rational scale(den_lcm, num_gcd);
  if (c_.back() < 0) scale = -scale;
  return scaled(scale);
}

// ---------------------------------------------------------------------------

namespace {

// Pseudo-remainder with a positive multiplier: prem = lc(d)^(2*ceil((delta+1)/2)) * n mod d.
// The even power keeps the sign of the remainder sequence meaningful for
// Sturm-style sign-variation counting.
UniPoly signed_prem(const UniPoly& n, const UniPoly& d) {
  int delta = n.degree() - d.degree();
  unsigned e = static_cast<unsigned>(delta + 1);
  if (e % 2 == 1) ++e;
  UniPoly r = n.scaled(rat_pow(d.lead(), e));
  while (!r.is_zero() && r.degree() >= d.degree()) {
    int shift = r.degree() - d.degree();
    Rational f = r.lead() / d.lead();
    std::vector<Rational> cs = r.coeffs();
    for (size_t i = 0; i < d.coeffs().size(); ++i) cs[i + shift] -= f * d.coeffs()[i];
    r = UniPoly(std::move(cs));
  }
  return r;
}

// Divide by the positive content; keeps the sign of every coefficient.
UniPoly positive_primitive(const UniPoly& p) {
  if (p.is_zero()) return p;
  UniPoly q = p.primitive_integer();
  if ((p.lead() < 0) != (q.lead() < 0)) q = q.scaled(-1);
  return q;
}

}  // namespace

UniPoly unipoly_gcd(const UniPoly& a, const UniPoly& b) {
  UniPoly f = positive_primitive(a), g = positive_primitive(b);
  if (f.is_zero()) return g.is_zero() ? g : g.primitive_integer();
  if (g.is_zero()) return f.primitive_integer();
  if (f.degree() < g.degree()) std::swap(f, g);
  while (!g.is_zero()) {
    UniPoly r = signed_prem(f, g);
    f = g;
    g = positive_primitive(r);
  }
  return f.primitive_integer();
}

UniPoly squarefree_part(const UniPoly& p) {
  if (p.is_zero()) throw std::invalid_argument("squarefree_part: zero polynomial");
  if (p.degree() == 0) return UniPoly({Rational(1)});
  UniPoly g = unipoly_gcd(p, p.derivative());
  UniPoly q = p.divide_exact(g);
  return q.primitive_integer();
}

MultiPoly squarefree_part(const MultiPoly& p) {
  UniPoly u = UniPoly::from_multi(p);
  return squarefree_part(u).to_multi(p.arity());
}

std::vector<std::pair<UniPoly, int>> squarefree_decomposition(const UniPoly& p) {
  if (p.is_zero()) throw std::invalid_argument("squarefree_decomposition: zero polynomial");
  std::vector<std::pair<UniPoly, int>> out;
  UniPoly f = p.primitive_integer();
  if (f.degree() == 0) return out;
  // Yun's algorithm.
  UniPoly fp = f.derivative();
  UniPoly a = unipoly_gcd(f, fp);
  UniPoly b = f.divide_exact(a);
  UniPoly c = fp.divide_exact(a);
  UniPoly d = c - b.derivative();
  int k = 1;
  while (true) {
    if (b.degree() == 0) break;
    UniPoly t = unipoly_gcd(b, d);
    if (t.degree() > 0) out.emplace_back(t.primitive_integer(), k);
    b = b.divide_exact(t);
    c = d.divide_exact(t);
    d = c - b.derivative();
    ++k;
  }
  return out;
}

// ---------------------------------------------------------------------------
// Sturm

SturmChain::SturmChain(const UniPoly& p) {
  if (p.is_zero()) throw std::invalid_argument("sturm: zero polynomial");
  UniPoly f = positive_primitive(p);
  chain_.push_back(f);
  if (f.degree() == 0) return;
  UniPoly g = positive_primitive(f.derivative());
  chain_.push_back(g);
  while (!chain_.back().is_zero() && chain_.back().degree() > 0) {
    const UniPoly& a = chain_[chain_.size() - 2];
    const UniPoly& b = chain_.back();
    UniPoly r = signed_prem(a, b);
    chain_.push_back(positive_primitive(r.scaled(-1)));
  }
  if (chain_.back().is_zero()) {
    chain_.pop_back();
    valid_ = chain_.back().degree() == 0;  // nontrivial gcd(p, p') otherwise
  }
}

int SturmChain::variations_at(const std::optional<Rational>& x, bool neg_inf) const {
  int var = 0, prev = 0;
  for (size_t i = 0; i < chain_.size(); ++i) {
    int s;
    if (!x.has_value()) {
      const UniPoly& q = chain_[i];
      s = sign(q.lead());
      if (neg_inf && q.degree() % 2 == 1) s = -s;
    } else {
      s = sign(chain_[i].evaluate(*x));
    }
    if (s == 0) continue;
    if (prev != 0 && s != prev) ++var;
    prev = s;
  }
  return var;
}

int SturmChain::count(const std::optional<Rational>& a, const std::optional<Rational>& b) const {
  if (!valid_) throw std::invalid_argument("sturm: polynomial is not square-free");
  if (chain_[0].degree() == 0) return 0;
  int va = a.has_value() ? variations_at(a, false) : variations_at(std::nullopt, true);
  int vb = b.has_value() ? variations_at(b, false) : variations_at(std::nullopt, false);
  return va - vb;
}

int sturm_count(const UniPoly& p, const std::optional<Rational>& a,
                const std::optional<Rational>& b) {
  SturmChain chain(p);
  return chain.count(a, b);
}

int sturm_count(const MultiPoly& p, const std::optional<Rational>& a,
                const std::optional<Rational>& b) {
  return sturm_count(UniPoly::from_multi(p), a, b);
}

}  // namespace eddeg
