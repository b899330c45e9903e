#pragma once

#include "torsioncover/numeric.hpp"

#include <algorithm>
#include <stdexcept>
#include <vector>

namespace tc {

// Coefficient-domain traits. A domain must be an integral domain with
// exact division of ring elements that are known to divide.
template <class K>
struct Domain;

template <>
struct Domain<Rational> {
  static constexpr bool is_field = true;
  static Rational zero() { return Rational(0); }
  static Rational one() { return Rational(1); }
  static bool is_zero(const Rational& a) { return sgn(a) == 0; }
  static Rational exact_div(const Rational& a, const Rational& b) {
    if (is_zero(b)) throw std::domain_error("division by zero");
    return a / b;
  }
};

// Dense univariate polynomial over K, coefficients constant-first.
// The zero polynomial has an empty coefficient vector and degree -1.
template <class K>
class Poly {
 public:
  Poly() = default;
  explicit Poly(std::vector<K> coeffs) : c_(std::move(coeffs)) { normalize(); }

  static Poly zero() { return Poly(); }
  static Poly constant(K a) {
    Poly p;
    if (!Domain<K>::is_zero(a)) p.c_.push_back(std::move(a));
    return p;
  }
  static Poly one() { return constant(Domain<K>::one()); }
  // c * x^e
  static Poly monomial(K c, long e) {
    Poly p;
    if (!Domain<K>::is_zero(c)) {
      p.c_.assign(static_cast<size_t>(e) + 1, Domain<K>::zero());
      p.c_.back() = std::move(c);
    }
    return p;
  }

  long degree() const { return static_cast<long>(c_.size()) - 1; }
  bool is_zero() const { return c_.empty(); }
  bool is_constant() const { return c_.size() <= 1; }
  const K& lc() const {
    if (is_zero()) throw std::domain_error("leading coefficient of zero polynomial");
    return c_.back();
  }
  K coeff(long i) const {
    return (i < 0 || i >= static_cast<long>(c_.size())) ? Domain<K>::zero()
                                                        : c_[static_cast<size_t>(i)];
  }
  const std::vector<K>& coeffs() const { return c_; }

  friend bool operator==(const Poly& a, const Poly& b) { return a.c_ == b.c_; }
  friend bool operator!=(const Poly& a, const Poly& b) { return !(a == b); }

  Poly operator-() const {
    Poly r = *this;
    for (auto& a : r.c_) a = -a;
    return r;
  }

  friend Poly operator+(const Poly& a, const Poly& b) {
    std::vector<K> c(std::max(a.c_.size(), b.c_.size()), Domain<K>::zero());
    for (size_t i = 0; i < a.c_.size(); ++i) c[i] = a.c_[i];
    for (size_t i = 0; i < b.c_.size(); ++i) c[i] = c[i] + b.c_[i];
    return Poly(std::move(c));
  }
  friend Poly operator-(const Poly& a, const Poly& b) { return a + (-b); }

  friend Poly operator*(const Poly& a, const Poly& b) {
    if (a.is_zero() || b.is_zero()) return Poly();
    std::vector<K> c(a.c_.size() + b.c_.size() - 1, Domain<K>::zero());
    for (size_t i = 0; i < a.c_.size(); ++i) {
      if (Domain<K>::is_zero(a.c_[i])) continue;
      for (size_t j = 0; j < b.c_.size(); ++j)
        c[i + j] = c[i + j] + a.c_[i] * b.c_[j];
    }
    return Poly(std::move(c));
  }

  Poly scaled(const K& s) const {
    Poly r;
    if (Domain<K>::is_zero(s)) return r;
    r.c_ = c_;
    for (auto& a : r.c_) a = a * s;
    r.normalize();
    return r;
  }

  Poly shifted(long e) const {  // * x^e
    if (is_zero() || e == 0) return *this;
    Poly r;
    r.c_.assign(static_cast<size_t>(e), Domain<K>::zero());
    r.c_.insert(r.c_.end(), c_.begin(), c_.end());
    return r;
  }

  Poly derivative() const {
    if (c_.size() <= 1) return Poly();
    std::vector<K> c;
    c.reserve(c_.size() - 1);
    for (size_t i = 1; i < c_.size(); ++i) {
      K m = Domain<K>::zero();
      for (size_t k = 0; k < i; ++k) m = m + c_[i];  // i * c_i without an int->K map
      c.push_back(std::move(m));
    }
    return Poly(std::move(c));
  }

  K eval(const K& x) const {
    K r = Domain<K>::zero();
    for (size_t i = c_.size(); i-- > 0;) r = r * x + c_[i];
    return r;
  }

  // Evaluate with coefficients mapped through `f` into another domain.
  template <class T, class Map>
  T eval_mapped(const T& x, const T& zero, Map&& f) const {
    T r = zero;
    for (size_t i = c_.size(); i-- > 0;) r = r * x + f(c_[i]);
    return r;
  }

 private:
  std::vector<K> c_;
  void normalize() {
    while (!c_.empty() && Domain<K>::is_zero(c_.back())) c_.pop_back();
  }
};

template <class K>
struct Domain<Poly<K>> {
  static constexpr bool is_field = false;
  static Poly<K> zero() { return Poly<K>(); }
  static Poly<K> one() { return Poly<K>::one(); }
  static bool is_zero(const Poly<K>& a) { return a.is_zero(); }
  static Poly<K> exact_div(const Poly<K>& a, const Poly<K>& b);
};

template <class K>
Poly<K> poly_pow(const Poly<K>& base, long e) {
  Poly<K> r = Poly<K>::one(), b = base;
  for (; e > 0; e >>= 1) {
    if (e & 1) r = r * b;
    if (e > 1) b = b * b;
  }
  return r;
}

template <class K>
K domain_pow(const K& base, long e) {
  K r = Domain<K>::one(), b = base;
  for (; e > 0; e >>= 1) {
    if (e & 1) r = r * b;
    if (e > 1) b = b * b;
  }
  return r;
}

// Quotient and remainder; requires every leading-coefficient division
// performed along the way to be exact in K (always true over a field).
template <class K>
std::pair<Poly<K>, Poly<K>> divrem(const Poly<K>& a, const Poly<K>& b) {
  if (b.is_zero()) throw std::domain_error("polynomial division by zero");
  Poly<K> q, r = a;
  while (!r.is_zero() && r.degree() >= b.degree()) {
    K c = Domain<K>::exact_div(r.lc(), b.lc());
    long e = r.degree() - b.degree();
    Poly<K> t = Poly<K>::monomial(c, e);
    q = q + t;
    r = r - t * b;
  }
  return {q, r};
}

template <class K>
Poly<K> Domain<Poly<K>>::exact_div(const Poly<K>& a, const Poly<K>& b) {
  auto [q, r] = divrem(a, b);
  if (!r.is_zero()) throw std::domain_error("inexact polynomial division");
  return q;
}

// Pseudo-remainder: R with lc(b)^(deg a - deg b + 1) * a = q*b + R.
template <class K>
Poly<K> prem(const Poly<K>& a, const Poly<K>& b) {
  if (b.is_zero()) throw std::domain_error("pseudo-division by zero");
  long d = a.degree() - b.degree();
  if (d < 0) return a;
  Poly<K> r = a;
  K lb = b.lc();
  long e = d + 1;
  while (!r.is_zero() && r.degree() >= b.degree()) {
    Poly<K> t = b.shifted(r.degree() - b.degree()).scaled(r.lc());
    r = r.scaled(lb) - t;
    --e;
  }
  if (e > 0) r = r.scaled(domain_pow(lb, e));
  return r;
}

// Resultant by the subresultant pseudo-remainder sequence. The divisions
// by g*h^d are exact in K by the subresultant theorem; no fractions occur.
// Convention: Sylvester determinant with f's coefficients in the top rows,
// i.e. Res(f,g) = lc(f)^(deg g) * prod g(roots of f).
template <class K>
K resultant(Poly<K> a, Poly<K> b) {
  if (a.is_zero() || b.is_zero()) throw std::domain_error("undefined resultant");
  bool negate = false;
  if (a.degree() < b.degree()) {
    if ((a.degree() & 1) && (b.degree() & 1)) negate = true;
    std::swap(a, b);
  }
  if (b.degree() == 0) {
    K r = domain_pow(b.lc(), a.degree());
    return negate ? -r : r;
  }
  K g = Domain<K>::one(), h = Domain<K>::one();
  while (true) {
    long da = a.degree(), db = b.degree();
    long d = da - db;
    if ((da & 1) && (db & 1)) negate = !negate;
    Poly<K> r = prem(a, b);
    a = std::move(b);
    K divisor = g * domain_pow(h, d);
    if (r.is_zero()) return Domain<K>::zero();  // deg a > 0 here, common factor
    {
      std::vector<K> c;
      c.reserve(static_cast<size_t>(r.degree()) + 1);
      for (long i = 0; i <= r.degree(); ++i)
        c.push_back(Domain<K>::exact_div(r.coeff(i), divisor));
      b = Poly<K>(std::move(c));
    }
    g = a.lc();
    if (d > 0) h = Domain<K>::exact_div(domain_pow(g, d), domain_pow(h, d - 1));
    if (b.degree() == 0) {
      long dl = a.degree();
      K num = domain_pow(b.lc(), dl);
      K res = dl > 1 ? Domain<K>::exact_div(num, domain_pow(h, dl - 1)) : num;
      return negate ? -res : res;
    }
  }
}

// Monic gcd over a field.
template <class K>
Poly<K> poly_gcd(Poly<K> a, Poly<K> b) {
  static_assert(Domain<K>::is_field, "poly_gcd needs field coefficients");
  while (!b.is_zero()) {
    auto [q, r] = divrem(a, b);
    (void)q;
    a = std::move(b);
    b = std::move(r);
  }
  if (a.is_zero()) return a;
  return a.scaled(Domain<K>::exact_div(Domain<K>::one(), a.lc()));
}

// ---- rational-coefficient helpers ----

// Positive content scale-out: returns f / content with integer coprime
// coefficients, preserving sign. Keeps Sturm chains and PRS outputs small.
Poly<Rational> primitive_part(const Poly<Rational>& f);

// Exact number of distinct real roots of a squarefree rational polynomial,
// by Sturm's theorem evaluated at -inf/+inf.
long sturm_real_root_count(const Poly<Rational>& f);

// deflate to the squarefree part f / gcd(f, f')
Poly<Rational> squarefree_part(const Poly<Rational>& f);

// disc(f) = (-1)^(d(d-1)/2) Res(f, f') / lc(f)
Rational poly_discriminant(const Poly<Rational>& f);

}  // namespace tc
