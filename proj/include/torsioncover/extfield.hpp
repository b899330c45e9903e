#pragma once

#include "torsioncover/fppoly.hpp"

#include <memory>
#include <vector>

namespace tc {

// F_(p^k) = F_p[t]/(m(t)) with m the lexicographically least monic
// irreducible of degree k (coefficients compared constant term first).
// The choice is deterministic, so contexts are reproducible across runs.
class ExtFieldCtx : public std::enable_shared_from_this<ExtFieldCtx> {
 public:
  static std::shared_ptr<const ExtFieldCtx> make(const Integer& p, long k);

  const Integer& p() const { return fp_->p(); }
  long degree() const { return k_; }
  const FpPoly& modulus() const { return modulus_; }
  const FpCtx& base() const { return *fp_; }
  Integer order() const { return ipow(p(), static_cast<unsigned long>(k_)); }

 private:
  ExtFieldCtx(FpCtxPtr fp, long k, FpPoly modulus);
  FpCtxPtr fp_;
  long k_;
  FpPoly modulus_;
};

using ExtFieldPtr = std::shared_ptr<const ExtFieldCtx>;

// Element of an extension field: reduced residue polynomial of degree < k.
class FFElem {
 public:
  FFElem() = default;
  FFElem(ExtFieldPtr ctx, FpPoly rep);
  static FFElem zero(ExtFieldPtr ctx) { return FFElem(std::move(ctx), {}); }
  static FFElem one(ExtFieldPtr ctx) { return FFElem(std::move(ctx), {Integer(1)}); }
  static FFElem from_integer(ExtFieldPtr ctx, const Integer& n);
  static FFElem generator(ExtFieldPtr ctx);  // the residue class of t
  // element with index n in the lexicographic enumeration (base-p digits)
  static FFElem from_index(ExtFieldPtr ctx, Integer n);

  const FpPoly& rep() const { return rep_; }
  const ExtFieldPtr& ctx() const { return ctx_; }
  bool is_zero() const { return rep_.empty(); }
  Integer index() const;  // inverse of from_index

  friend bool operator==(const FFElem& a, const FFElem& b) { return a.rep_ == b.rep_; }
  friend bool operator!=(const FFElem& a, const FFElem& b) { return !(a == b); }
  FFElem operator-() const;
  friend FFElem operator+(const FFElem& a, const FFElem& b);
  friend FFElem operator-(const FFElem& a, const FFElem& b);
  friend FFElem operator*(const FFElem& a, const FFElem& b);
  FFElem inverse() const;
  FFElem pow(Integer e) const;

 private:
  ExtFieldPtr ctx_;
  FpPoly rep_;
};

// Horner evaluation of a rational-coefficient polynomial at a field element.
FFElem eval_in_field(const Poly<Rational>& f, const FFElem& x);

// All field elements, in index order. Requires a small field.
std::vector<FFElem> enumerate_field(const ExtFieldPtr& ctx);

}  // namespace tc
