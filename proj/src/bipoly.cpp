#include "torsioncover/bipoly.hpp"

namespace tc {

long BiPoly::degree_x() const {
  long d = -1;
  for (const auto& [k, c] : terms_) d = std::max(d, k.first);
  return d;
}

long BiPoly::degree_y() const {
  long d = -1;
  for (const auto& [k, c] : terms_) d = std::max(d, k.second);
  return d;
}

BiPoly BiPoly::scaled(const Rational& s) const {
  BiPoly out;
  if (sgn(s) == 0) return out;
  for (const auto& [k, c] : terms_) out.terms_[k] = c * s;
  return out;
}

Poly<Rational> BiPoly::eval_x(const Rational& x0) const {
  std::vector<Rational> c(static_cast<size_t>(degree_y() + 1), Rational(0));
  for (const auto& [k, v] : terms_) {
    Rational xp(1);
    for (long i = 0; i < k.first; ++i) xp *= x0;
    c[static_cast<size_t>(k.second)] += v * xp;
  }
  return Poly<Rational>(std::move(c));
}

Poly<Rational> BiPoly::leading_y_coeff() const {
  long dy = degree_y();
  std::vector<Rational> c;
  for (const auto& [k, v] : terms_) {
    if (k.second != dy) continue;
    if (k.first >= static_cast<long>(c.size()))
      c.resize(static_cast<size_t>(k.first) + 1, Rational(0));
    c[static_cast<size_t>(k.first)] = v;
  }
  return Poly<Rational>(std::move(c));
}

FpPoly BiPoly::eval_x_mod(const Integer& x0, const FpCtx& F) const {
  FpPoly out(static_cast<size_t>(degree_y() + 1), Integer(0));
  Integer x = imod(x0, F.p());
  for (const auto& [k, v] : terms_) {
    Integer den = imod(v.get_den(), F.p());
    if (den == 0) throw std::domain_error("coefficient denominator divisible by p");
    Integer c = imod(v.get_num(), F.p()) * invmod(den, F.p()) % F.p();
    out[static_cast<size_t>(k.second)] += c * powmod(x, Integer(k.first), F.p());
  }
  fp_normalize(out, F);
  return out;
}

BiPoly BiPoly::from_nested(const Poly<Poly<Rational>>& f) {
  BiPoly out;
  for (long ey = 0; ey <= f.degree(); ++ey) {
    const Poly<Rational> cx = f.coeff(ey);
    for (long ex = 0; ex <= cx.degree(); ++ex) out.set(ex, ey, cx.coeff(ex));
  }
  return out;
}

}  // namespace tc
