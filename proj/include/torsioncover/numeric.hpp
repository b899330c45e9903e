#pragma once

#include <gmpxx.h>

#include <stdexcept>
#include <string>

namespace tc {

// Exact arithmetic base types. Rationals are kept canonical by gmpxx
// (lowest terms, positive denominator); nothing here ever rounds.
using Integer = mpz_class;
using Rational = mpq_class;

inline Integer ipow(Integer base, unsigned long e) {
  Integer r;
  mpz_pow_ui(r.get_mpz_t(), base.get_mpz_t(), e);
  return r;
}

inline Integer pow10(unsigned long e) { return ipow(Integer(10), e); }

inline Integer igcd(const Integer& a, const Integer& b) {
  Integer r;
  mpz_gcd(r.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return r;
}

inline Integer ilcm(const Integer& a, const Integer& b) {
  Integer r;
  mpz_lcm(r.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return r;
}

// floor(a / b) for b > 0
inline Integer fdiv(const Integer& a, const Integer& b) {
  Integer q;
  mpz_fdiv_q(q.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return q;
}

// a mod b in [0, b)
inline Integer imod(const Integer& a, const Integer& b) {
  Integer r;
  mpz_fdiv_r(r.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return r;
}

inline Integer powmod(const Integer& base, const Integer& e, const Integer& m) {
  Integer r;
  mpz_powm(r.get_mpz_t(), base.get_mpz_t(), e.get_mpz_t(), m.get_mpz_t());
  return r;
}

inline Integer invmod(const Integer& a, const Integer& m) {
  Integer r;
  if (mpz_invert(r.get_mpz_t(), a.get_mpz_t(), m.get_mpz_t()) == 0)
    throw std::domain_error("invmod: not invertible");
  return r;
}

inline bool is_perfect_square(const Integer& n) {
  return n >= 0 && mpz_perfect_square_p(n.get_mpz_t()) != 0;
}

inline Integer isqrt(const Integer& n) {
  Integer r;
  mpz_sqrt(r.get_mpz_t(), n.get_mpz_t());
  return r;
}

inline Integer parse_integer(const std::string& s) {
  Integer n;
  if (mpz_set_str(n.get_mpz_t(), s.c_str(), 10) != 0)
    throw std::invalid_argument("not a decimal integer: " + s);
  return n;
}

inline std::string to_string(const Integer& n) { return n.get_str(); }
inline std::string to_string(const Rational& q) { return q.get_str(); }

inline Rational parse_rational(const std::string& s) {
  Rational q;
  if (mpq_set_str(q.get_mpq_t(), s.c_str(), 10) != 0)
    throw std::invalid_argument("not a rational: " + s);
  q.canonicalize();
  return q;
}

}  // namespace tc
