#include "torsioncover/fibration.hpp"

#include "torsioncover/numtheory.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace tc {

namespace {

LamPoly lam_from_ints(std::initializer_list<long> cs) {
  std::vector<Rational> v;
  for (long c : cs) v.emplace_back(c);
  return LamPoly(std::move(v));
}

XPoly lift(const LamPoly& c) { return XPoly::constant(c); }

XPoly x_monomial(const LamPoly& c, long e) { return XPoly::monomial(c, e); }

}  // namespace

RatFun RatFun::reduced(LamPoly n, LamPoly d) {
  if (d.is_zero()) throw std::domain_error("rational function with zero denominator");
  if (n.is_zero()) return {LamPoly(), LamPoly::one()};
  LamPoly g = poly_gcd(n, d);
  n = Domain<LamPoly>::exact_div(n, g);
  d = Domain<LamPoly>::exact_div(d, g);
  // normalize: monic denominator
  Rational lc = d.lc();
  d = d.scaled(Domain<Rational>::exact_div(Rational(1), lc));
  n = n.scaled(Domain<Rational>::exact_div(Rational(1), lc));
  return {std::move(n), std::move(d)};
}

LamPoly FibrationCurve::b2() const { return a2.scaled(Rational(4)); }
LamPoly FibrationCurve::b4() const { return a4.scaled(Rational(2)); }
LamPoly FibrationCurve::b6() const { return a6.scaled(Rational(4)); }
LamPoly FibrationCurve::b8() const { return (a2 * a6).scaled(Rational(4)) - a4 * a4; }

LamPoly FibrationCurve::c4() const {
  LamPoly B2 = b2();
  return B2 * B2 - b4().scaled(Rational(24));
}

LamPoly FibrationCurve::c6() const {
  LamPoly B2 = b2();
  return -(B2 * B2 * B2) + (B2 * b4()).scaled(Rational(36)) - b6().scaled(Rational(216));
}

LamPoly FibrationCurve::disc() const {
  LamPoly B2 = b2(), B4 = b4(), B6 = b6(), B8 = b8();
  LamPoly d = -(B2 * B2 * B8) - (B4 * B4 * B4).scaled(Rational(8)) -
              (B6 * B6).scaled(Rational(27)) + (B2 * B4 * B6).scaled(Rational(9));
  if (d.is_zero()) throw std::domain_error("singular fibration");
  return d;
}

RatFun FibrationCurve::j() const {
  LamPoly C4 = c4();
  return RatFun::reduced(C4 * C4 * C4, disc());
}

WeierstrassInvariants weierstrass_invariants(const FibrationCurve& e) {
  WeierstrassInvariants inv{e.c4(), e.c6(), e.disc(), e.j()};
  // 1728 disc = c4^3 - c6^2, identically
  LamPoly lhs = inv.disc.scaled(Rational(1728));
  LamPoly rhs = inv.c4 * inv.c4 * inv.c4 - inv.c6 * inv.c6;
  if (lhs != rhs) throw std::logic_error("invariant identity 1728*disc = c4^3 - c6^2 failed");
  return inv;
}

FibrationCurve quadratic_twist(const FibrationCurve& e, const LamPoly& d) {
  if (d.is_zero()) throw std::domain_error("twist by zero");
  return {e.a2 * d, e.a4 * d * d, e.a6 * d * d * d};
}

FibrationCurve untwisted_fibration() {
  // y^2 = (x-2l)(x+2l)(x+l^2+1)
  return {lam_from_ints({1, 0, 1}),        // a2 = l^2 + 1
          lam_from_ints({0, 0, -4}),       // a4 = -4 l^2
          lam_from_ints({0, 0, -4, 0, -4})};  // a6 = -4 l^4 - 4 l^2
}

LamPoly twist_polynomial() { return lam_from_ints({0, -1, -2, 1}); }  // l(l^2-2l-1)

FibrationCurve twisted_fibration() {
  return quadratic_twist(untwisted_fibration(), twist_polynomial());
}

XPoly division_polynomial(const FibrationCurve& e, long ell) {
  if (ell < 3 || ell % 2 == 0)
    throw std::domain_error("division polynomial: ell must be odd and >= 3");
  LamPoly B2 = e.b2(), B4 = e.b4(), B6 = e.b6(), B8 = e.b8();

  // psi_2^2 = 4x^3 + b2 x^2 + 2 b4 x + b6
  XPoly B = x_monomial(lam_from_ints({4}), 3) + x_monomial(B2, 2) +
            x_monomial(B4.scaled(Rational(2)), 1) + lift(B6);

  // odd indices store psi_n itself, even indices store psi_n / psi_2
  std::vector<XPoly> f(static_cast<size_t>(ell) + 3), h(static_cast<size_t>(ell) + 3);
  f[1] = XPoly::one();
  h[0] = XPoly();
  h[2] = XPoly::one();
  f[3] = x_monomial(lam_from_ints({3}), 4) + x_monomial(B2, 3) +
         x_monomial(B4.scaled(Rational(3)), 2) + x_monomial(B6.scaled(Rational(3)), 1) +
         lift(B8);
  h[4] = x_monomial(lam_from_ints({2}), 6) + x_monomial(B2, 5) +
         x_monomial(B4.scaled(Rational(5)), 4) + x_monomial(B6.scaled(Rational(10)), 3) +
         x_monomial(B8.scaled(Rational(10)), 2) +
         x_monomial(B2 * B8 - B4 * B6, 1) + lift(B4 * B8 - B6 * B6);

  XPoly B2x = B * B;
  for (long n = 5; n <= ell; ++n) {
    long m = n / 2;
    if (n % 2 == 1) {
      if (m % 2 == 0)
        f[n] = B2x * h[m + 2] * h[m] * h[m] * h[m] - f[m - 1] * f[m + 1] * f[m + 1] * f[m + 1];
      else
        f[n] = f[m + 2] * f[m] * f[m] * f[m] - B2x * h[m - 1] * h[m + 1] * h[m + 1] * h[m + 1];
    } else {
      if (m % 2 == 0)
        h[n] = h[m] * (h[m + 2] * f[m - 1] * f[m - 1] - h[m - 2] * f[m + 1] * f[m + 1]);
      else
        h[n] = f[m] * (f[m + 2] * h[m - 1] * h[m - 1] - f[m - 2] * h[m + 1] * h[m + 1]);
    }
  }
  return f[static_cast<size_t>(ell)];
}

PlaneModel torsion_plane_model(const FibrationCurve& e, long ell) {
  if (ell < 3 || ell % 2 == 0 || !is_prime(Integer(ell)))
    throw std::domain_error("plane model: ell must be an odd prime");
  XPoly psi = division_polynomial(e, ell);

  // work in (Q[lambda][y])[x]
  using YPoly = Poly<LamPoly>;
  using XYPoly = Poly<YPoly>;
  auto liftxy = [](const XPoly& f) {
    std::vector<YPoly> cs;
    for (long i = 0; i <= f.degree(); ++i) cs.push_back(YPoly::constant(f.coeff(i)));
    return XYPoly(std::move(cs));
  };
  XYPoly F = liftxy(psi);
  // g = y^2 - (x^3 + a2 x^2 + a4 x + a6)
  YPoly ysq_minus_a6(std::vector<LamPoly>{-e.a6, LamPoly(), LamPoly::one()});
  XYPoly G = XYPoly::monomial(YPoly::constant(lam_from_ints({-1})), 3) +
             XYPoly::monomial(YPoly::constant(-e.a2), 2) +
             XYPoly::monomial(YPoly::constant(-e.a4), 1) + XYPoly::constant(ysq_minus_a6);

  YPoly r = resultant(F, G);  // polynomial in y with Q[lambda] coefficients
  PlaneModel m;
  m.ell = ell;
  m.poly = BiPoly::from_nested(r);  // lambda -> x
  return m;
}

std::string place_name(const Place& pl) {
  if (pl.at_infinity) return "infinity";
  std::ostringstream out;
  bool first = true;
  for (long i = pl.pi.degree(); i >= 0; --i) {
    Rational c = pl.pi.coeff(i);
    if (sgn(c) == 0) continue;
    if (!first) out << (sgn(c) > 0 ? "+" : "-");
    else if (sgn(c) < 0) out << "-";
    Rational a = abs(c);
    if (a != 1 || i == 0) out << to_string(a);
    if (i >= 1) out << "l";
    if (i > 1) out << "^" << i;
    first = false;
  }
  return out.str();
}

namespace {

// multiplicity of the monic factor pi in f
long multiplicity_of(LamPoly f, const LamPoly& pi) {
  long m = 0;
  while (true) {
    auto [q, r] = divrem(f, pi);
    if (!r.is_zero()) return m;
    ++m;
    f = q;
    if (f.is_zero()) return m;
  }
}

std::vector<Integer> positive_divisors(Integer n, long cap = 4096) {
  n = abs(n);
  if (n == 0) throw std::domain_error("divisors of zero");
  std::vector<std::pair<Integer, long>> fac;
  for (Integer d(2); d * d <= n && d < 1000000; ++d) {
    if (n % d == 0) {
      long e = 0;
      while (n % d == 0) {
        n /= d;
        ++e;
      }
      fac.emplace_back(d, e);
    }
  }
  if (n > 1) fac.emplace_back(n, 1);
  std::vector<Integer> divs{Integer(1)};
  for (auto& [pr, e] : fac) {
    size_t base = divs.size();
    Integer pk(1);
    for (long k = 1; k <= e; ++k) {
      pk *= pr;
      for (size_t i = 0; i < base; ++i) {
        divs.push_back(divs[i] * pk);
        if (static_cast<long>(divs.size()) > cap)
          throw std::domain_error("too many divisor candidates in root search");
      }
    }
  }
  return divs;
}

}  // namespace

std::vector<LamPoly> factor_squarefree_rational(const LamPoly& f0) {
  if (f0.is_zero()) throw std::domain_error("factor of zero polynomial");
  std::vector<LamPoly> out;
  LamPoly f = f0.scaled(Domain<Rational>::exact_div(Rational(1), f0.lc()));
  if (f.degree() == 0) return out;

  // factor x^k
  while (sgn(f.coeff(0)) == 0) {
    LamPoly x = LamPoly::monomial(Rational(1), 1);
    out.push_back(x);
    f = Domain<LamPoly>::exact_div(f, x);
    if (f.degree() == 0) return out;
  }

  // rational roots of the primitive integer form
  LamPoly prim = primitive_part(f);
  std::vector<Rational> roots;
  if (prim.degree() >= 1) {
    Integer c0 = prim.coeff(0).get_num();
    Integer cl = prim.lc().get_num();
    for (const Integer& r : positive_divisors(c0)) {
      for (const Integer& s : positive_divisors(cl)) {
        for (int sign : {1, -1}) {
          Rational cand(sign * r, s);
          cand.canonicalize();
          if (Domain<Rational>::is_zero(f.eval(cand))) roots.push_back(cand);
        }
      }
    }
  }
  std::sort(roots.begin(), roots.end());
  roots.erase(std::unique(roots.begin(), roots.end()), roots.end());
  for (const Rational& r : roots) {
    LamPoly lin(std::vector<Rational>{-r, Rational(1)});
    out.push_back(lin);
    f = Domain<LamPoly>::exact_div(f, lin);
  }

  if (f.degree() == 1) {
    out.push_back(f);
  } else if (f.degree() == 2) {
    // after root extraction a rational-root-free quadratic is irreducible;
    // assert via the discriminant anyway
    Rational a = f.coeff(2), b = f.coeff(1), c = f.coeff(0);
    Rational disc = b * b - a * c * 4;
    Integer n = disc.get_num() * disc.get_den();
    if (sgn(disc) >= 0 && is_perfect_square(n))
      throw std::logic_error("quadratic with square discriminant survived root extraction");
    out.push_back(f);
  } else if (f.degree() >= 3) {
    // mod-p irreducibility certificate
    bool certified = false;
    for (long q : primes_below(1000)) {
      FpCtx F(Integer(q), false);
      Rational den_lc = f.lc();
      (void)den_lc;
      try {
        FpPoly fq = fp_poly_from(f, F);
        if (fp_degree(fq) == f.degree() && fp_is_irreducible(fq, F)) {
          certified = true;
          break;
        }
      } catch (const std::domain_error&) {
        continue;  // p divides a denominator or the leading coefficient
      }
    }
    if (!certified)
      throw std::domain_error("cannot certify irreducibility of a bad-locus factor");
    out.push_back(f);
  }
  return out;
}

std::vector<Place> bad_locus(const FibrationCurve& e) {
  LamPoly d = e.disc();
  LamPoly sf = squarefree_part(d);
  std::vector<Place> places;
  for (LamPoly& pi : factor_squarefree_rational(sf)) places.push_back({false, pi});
  std::sort(places.begin(), places.end(), [](const Place& a, const Place& b) {
    if (a.pi.degree() != b.pi.degree()) return a.pi.degree() < b.pi.degree();
    for (long i = a.pi.degree(); i >= 0; --i) {
      if (a.pi.coeff(i) != b.pi.coeff(i)) return a.pi.coeff(i) < b.pi.coeff(i);
    }
    return false;
  });
  // infinity: minimal model under lambda = 1/mu; v(disc) = -deg(disc) - 12k
  // with k = min of floor(v/4), floor(v/6), floor(v/12) over nonzero invariants
  auto floordiv = [](long a, long b) { return a / b - ((a % b != 0 && (a < 0) != (b < 0)) ? 1 : 0); };
  long vdisc = -d.degree();
  std::vector<long> ks{floordiv(vdisc, 12)};
  if (!e.c4().is_zero()) ks.push_back(floordiv(-e.c4().degree(), 4));
  if (!e.c6().is_zero()) ks.push_back(floordiv(-e.c6().degree(), 6));
  long k = *std::min_element(ks.begin(), ks.end());
  if (vdisc - 12 * k > 0) places.push_back({true, LamPoly()});
  return places;
}

bool squarefree_at(const PlaneModel& m, const Rational& lam0) {
  if (Domain<Rational>::is_zero(m.poly.leading_y_coeff().eval(lam0)))
    throw std::domain_error("degenerate specialization: leading y-coefficient vanishes");
  Poly<Rational> f = m.poly.eval_x(lam0);
  if (f.degree() < 1) throw std::domain_error("degenerate specialization: constant in y");
  return poly_gcd(f, f.derivative()).degree() == 0;
}

bool fiber_consistency_check(const FibrationCurve& e, const PlaneModel& m,
                             const Integer& p, const Integer& lam0) {
  if (p == 2 || p == 3) throw std::domain_error("residue characteristic 2 or 3");
  if (p > 1000) throw std::domain_error("fiber check is brute force; use small p");
  FpCtx F(p);
  Integer l0 = imod(lam0, p);
  // bad fibre?
  FpPoly disc_p = fp_poly_from(e.disc(), F);
  if (fp_eval(disc_p, l0, F) == 0) throw std::domain_error("bad fibre at lambda0");

  FpPoly R = m.poly.eval_x_mod(l0, F);
  if (fp_degree(R) < 1) throw std::domain_error("degenerate specialization");
  if (fp_degree(fp_gcd(R, fp_derivative(R, F), F)) != 0)
    throw std::domain_error("non-squarefree specialization");

  // psi_3 and the cubic at lambda0 over F_p (coefficients in lambda)
  XPoly psi = division_polynomial(e, 3);
  FpPoly psi_p;
  for (long i = 0; i <= psi.degree(); ++i)
    psi_p.push_back(fp_eval(fp_poly_from(psi.coeff(i), F), l0, F));
  fp_normalize(psi_p, F);
  FpPoly cubic{fp_eval(fp_poly_from(e.a6, F), l0, F), fp_eval(fp_poly_from(e.a4, F), l0, F),
               fp_eval(fp_poly_from(e.a2, F), l0, F), Integer(1)};

  auto match_over = [&](long ext_degree) {
    auto ctx = ExtFieldCtx::make(p, ext_degree);
    auto elems = enumerate_field(ctx);
    // roots of R in K
    std::vector<Integer> model_roots;
    for (const FFElem& y : elems) {
      FFElem v = FFElem::zero(ctx);
      for (size_t i = R.size(); i-- > 0;) v = v * y + FFElem::from_integer(ctx, R[i]);
      if (v.is_zero()) model_roots.push_back(y.index());
    }
    // torsion y-coordinates in K
    std::vector<Integer> torsion_ys;
    for (const FFElem& xx : elems) {
      FFElem pv = FFElem::zero(ctx);
      for (size_t i = psi_p.size(); i-- > 0;) pv = pv * xx + FFElem::from_integer(ctx, psi_p[i]);
      if (!pv.is_zero()) continue;
      FFElem rhs = FFElem::zero(ctx);
      for (size_t i = cubic.size(); i-- > 0;) rhs = rhs * xx + FFElem::from_integer(ctx, cubic[i]);
      for (const FFElem& yy : elems)
        if (yy * yy == rhs) torsion_ys.push_back(yy.index());
    }
    std::sort(model_roots.begin(), model_roots.end());
    std::sort(torsion_ys.begin(), torsion_ys.end());
    torsion_ys.erase(std::unique(torsion_ys.begin(), torsion_ys.end()), torsion_ys.end());
    return model_roots == torsion_ys;
  };

  return match_over(1) && match_over(2);
}

}  // namespace tc
