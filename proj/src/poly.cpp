#include "torsioncover/poly.hpp"

namespace tc {

Poly<Rational> primitive_part(const Poly<Rational>& f) {
  if (f.is_zero()) return f;
  Integer num_gcd(0), den_lcm(1);
  for (long i = 0; i <= f.degree(); ++i) {
    Rational c = f.coeff(i);
    if (Domain<Rational>::is_zero(c)) continue;
    num_gcd = igcd(num_gcd, c.get_num());
    den_lcm = ilcm(den_lcm, c.get_den());
  }
  Rational scale(den_lcm, num_gcd);
  scale.canonicalize();
  return f.scaled(scale);  // positive scale: sign pattern unchanged
}

namespace {

int sign_at_minus_inf(const Poly<Rational>& p) {
  int s = sgn(p.lc());
  return (p.degree() % 2 == 0) ? s : -s;
}

long sign_variations(const std::vector<int>& signs) {
  long v = 0;
  int prev = 0;
  for (int s : signs) {
    if (s == 0) continue;
    if (prev != 0 && s != prev) ++v;
    prev = s;
  }
  return v;
}

}  // namespace

Poly<Rational> squarefree_part(const Poly<Rational>& f) {
  if (f.is_zero() || f.degree() == 0) return f;
  Poly<Rational> g = poly_gcd(f, f.derivative());
  return Domain<Poly<Rational>>::exact_div(f, g);
}

long sturm_real_root_count(const Poly<Rational>& f) {
  if (f.is_zero()) throw std::domain_error("sturm: zero polynomial");
  if (f.degree() == 0) return 0;
  {
    Poly<Rational> g = poly_gcd(f, f.derivative());
    if (g.degree() > 0) throw std::domain_error("sturm: input not squarefree");
  }
  std::vector<int> at_pos, at_neg;
  Poly<Rational> a = primitive_part(f), b = primitive_part(f.derivative());
  at_pos.push_back(sgn(a.lc()));
  at_neg.push_back(sign_at_minus_inf(a));
  while (!b.is_zero()) {
    at_pos.push_back(sgn(b.lc()));
    at_neg.push_back(sign_at_minus_inf(b));
    auto [q, r] = divrem(a, b);
    (void)q;
    a = std::move(b);
    b = r.is_zero() ? r : primitive_part(-r);
  }
  return sign_variations(at_neg) - sign_variations(at_pos);
}

Rational poly_discriminant(const Poly<Rational>& f) {
  if (f.degree() < 1) throw std::domain_error("discriminant needs degree >= 1");
  long d = f.degree();
  if (d == 1) return Rational(1);
  Rational res = resultant(f, f.derivative());
  Rational disc = Domain<Rational>::exact_div(res, f.lc());
  if (((d * (d - 1) / 2) % 2) != 0) disc = -disc;
  return disc;
}

}  // namespace tc
