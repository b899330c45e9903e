#pragma once

#include "torsioncover/bipoly.hpp"
#include "torsioncover/extfield.hpp"
#include "torsioncover/poly.hpp"

#include <vector>

namespace tc {

using LamPoly = Poly<Rational>;        // polynomials in the base parameter
using XPoly = Poly<LamPoly>;           // polynomials in x over Q[lambda]

// Reduced fraction of polynomials in lambda (denominator monic).
struct RatFun {
  LamPoly num, den;
  static RatFun reduced(LamPoly n, LamPoly d);
  bool operator==(const RatFun& o) const { return num == o.num && den == o.den; }
};

// Elliptic fibration in short Weierstrass form y^2 = x^3 + a2 x^2 + a4 x + a6
// with coefficients in Q[lambda].
struct FibrationCurve {
  LamPoly a2, a4, a6;

  LamPoly b2() const;
  LamPoly b4() const;
  LamPoly b6() const;
  LamPoly b8() const;
  LamPoly c4() const;
  LamPoly c6() const;
  LamPoly disc() const;  // throws if identically zero ("singular fibration")
  RatFun j() const;
};

struct WeierstrassInvariants {
  LamPoly c4, c6, disc;
  RatFun j;
};
WeierstrassInvariants weierstrass_invariants(const FibrationCurve& e);

FibrationCurve quadratic_twist(const FibrationCurve& e, const LamPoly& d);

// The base fibration y^2 = (x-2l)(x+2l)(x+l^2+1) and its twist by
// l(l^2-2l-1); the twisted curve is the one the torsion cover is built from.
FibrationCurve untwisted_fibration();
LamPoly twist_polynomial();
FibrationCurve twisted_fibration();

// psi_ell for odd ell >= 3; degree (ell^2-1)/2 in x, roots are the
// x-coordinates of the nonzero ell-torsion.
XPoly division_polynomial(const FibrationCurve& e, long ell);

struct PlaneModel {
  BiPoly poly;  // after the substitution lambda -> x
  long ell = 0;
  long degree_x() const { return poly.degree_x(); }
  long degree_y() const { return poly.degree_y(); }
};

// Res_x(psi_ell(x), y^2 - (x^3 + a2 x^2 + a4 x + a6)), then lambda -> x.
PlaneModel torsion_plane_model(const FibrationCurve& e, long ell);

// A place of Q(lambda): a monic irreducible polynomial, or infinity.
struct Place {
  bool at_infinity = false;
  LamPoly pi;  // monic irreducible; ignored when at_infinity
  long residue_degree() const { return at_infinity ? 1 : pi.degree(); }
  bool operator==(const Place& o) const {
    return at_infinity == o.at_infinity && (at_infinity || pi == o.pi);
  }
};
std::string place_name(const Place& pl);

// Monic irreducible factors of the numerator of disc, plus infinity when
// the minimal model at lambda = 1/mu has positive discriminant valuation.
std::vector<Place> bad_locus(const FibrationCurve& e);

// Monic irreducible factorization of a squarefree polynomial over Q.
// Handles the degrees that occur here: rational roots, quadratics by the
// discriminant test, and higher degrees only via a mod-p irreducibility
// certificate.
std::vector<LamPoly> factor_squarefree_rational(const LamPoly& f);

// true iff the specialized model R(lam0, y) is squarefree.
bool squarefree_at(const PlaneModel& m, const Rational& lam0);

// Cross-check of the plane model against brute-force ell=3 torsion of the
// specialized curve over F_p and F_{p^2}: the K-rational roots of
// R(lam0, y) must be exactly the y-coordinates of the K-rational points
// satisfying both psi_3 = 0 and the Weierstrass equation.
bool fiber_consistency_check(const FibrationCurve& e, const PlaneModel& m,
                             const Integer& p, const Integer& lam0);

}  // namespace tc
