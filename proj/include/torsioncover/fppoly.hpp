#pragma once

#include "torsioncover/numeric.hpp"
#include "torsioncover/poly.hpp"

#include <memory>
#include <utility>
#include <vector>

namespace tc {

// Prime-field context. The modulus is checked (probabilistically for huge
// values) at construction; everything downstream assumes it.
class FpCtx {
 public:
  explicit FpCtx(Integer p, bool check_prime = true);
  const Integer& p() const { return p_; }

 private:
  Integer p_;
};

using FpCtxPtr = std::shared_ptr<const FpCtx>;

// Dense polynomial over F_p, coefficients constant-first in [0, p).
// Kept as a plain vector: the hot loops (big-prime Frobenius powers) want
// direct access and lazy reduction, not a generic coefficient domain.
using FpPoly = std::vector<Integer>;

FpPoly fp_poly_from(const Poly<Rational>& f, const FpCtx& F);
FpPoly fp_poly_from_ints(const std::vector<long>& coeffs, const FpCtx& F);
void fp_normalize(FpPoly& f, const FpCtx& F);
long fp_degree(const FpPoly& f);
bool fp_is_zero(const FpPoly& f);
Integer fp_eval(const FpPoly& f, const Integer& x, const FpCtx& F);

FpPoly fp_add(const FpPoly& a, const FpPoly& b, const FpCtx& F);
FpPoly fp_sub(const FpPoly& a, const FpPoly& b, const FpCtx& F);
// Schoolbook product with one reduction per output coefficient.
FpPoly fp_mul(const FpPoly& a, const FpPoly& b, const FpCtx& F);
FpPoly fp_scale(const FpPoly& a, const Integer& s, const FpCtx& F);
FpPoly fp_derivative(const FpPoly& a, const FpCtx& F);

// remainder of a modulo monic f
FpPoly fp_rem_monic(FpPoly a, const FpPoly& f, const FpCtx& F);
// general divrem (inverts lc of b)
std::pair<FpPoly, FpPoly> fp_divrem(const FpPoly& a, const FpPoly& b, const FpCtx& F);
FpPoly fp_gcd(FpPoly a, FpPoly b, const FpCtx& F);  // monic unless zero
FpPoly fp_make_monic(FpPoly a, const FpCtx& F);

// g^e mod f (f monic)
FpPoly fp_powmod(const FpPoly& g, const Integer& e, const FpPoly& f, const FpCtx& F);
// g(h) mod f by Horner (f monic)
FpPoly fp_compose_mod(const FpPoly& g, const FpPoly& h, const FpPoly& f, const FpCtx& F);

// Distinct-degree factorization fingerprint: (degree d, number of
// irreducible factors of degree d), ascending in d. Uses one x^p
// exponentiation and then iterated Frobenius by modular composition.
// Throws if f mod p is not squarefree ("ramified prime").
std::vector<std::pair<long, long>> ddf_cycle_type(const FpPoly& f, const FpCtx& F);

// flatten {(d, m)} into the partition d repeated m times, descending
std::vector<long> cycle_type_partition(const std::vector<std::pair<long, long>>& ddf);

// Power sums s_1..s_(d-1) of the roots of monic f via Newton's identities.
std::vector<Integer> fp_newton_power_sums(const FpPoly& f, const FpCtx& F);
// Trace of multiplication by g in F_p[x]/f, via the precomputed power sums.
Integer fp_trace_of(const FpPoly& g, const std::vector<Integer>& sums, long deg_f,
                    const FpCtx& F);

// All roots in F_p by exhaustive scan; requires small p.
std::vector<Integer> fp_roots_bruteforce(const FpPoly& f, const FpCtx& F);

// Irreducibility over F_p via squarefreeness + DDF shape.
bool fp_is_irreducible(const FpPoly& f, const FpCtx& F);

}  // namespace tc
