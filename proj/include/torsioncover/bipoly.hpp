#pragma once

#include "torsioncover/fppoly.hpp"
#include "torsioncover/poly.hpp"

#include <map>
#include <utility>

namespace tc {

// Sparse bivariate polynomial over Q. Keys are (e_x, e_y); no zero
// coefficients are stored.
class BiPoly {
 public:
  using Key = std::pair<long, long>;

  BiPoly() = default;

  void set(long ex, long ey, Rational c) {
    if (sgn(c) == 0)
      terms_.erase({ex, ey});
    else
      terms_[{ex, ey}] = std::move(c);
  }
  void add(long ex, long ey, const Rational& c) {
    auto it = terms_.find({ex, ey});
    Rational v = (it == terms_.end()) ? c : it->second + c;
    set(ex, ey, v);
  }
  Rational coeff(long ex, long ey) const {
    auto it = terms_.find({ex, ey});
    return it == terms_.end() ? Rational(0) : it->second;
  }

  const std::map<Key, Rational>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  size_t term_count() const { return terms_.size(); }
  long degree_x() const;
  long degree_y() const;

  BiPoly scaled(const Rational& s) const;
  friend bool operator==(const BiPoly& a, const BiPoly& b) { return a.terms_ == b.terms_; }
  friend bool operator!=(const BiPoly& a, const BiPoly& b) { return !(a == b); }

  // substitute x = x0, leaving a univariate polynomial in y
  Poly<Rational> eval_x(const Rational& x0) const;
  // coefficient of y^max as a polynomial in x
  Poly<Rational> leading_y_coeff() const;
  // reduce mod p and substitute x = x0 in F_p; returns a polynomial in y
  FpPoly eval_x_mod(const Integer& x0, const FpCtx& F) const;

  // assemble from a y-polynomial whose coefficients are x-polynomials
  static BiPoly from_nested(const Poly<Poly<Rational>>& f_y_of_x);

 private:
  std::map<Key, Rational> terms_;
};

}  // namespace tc
