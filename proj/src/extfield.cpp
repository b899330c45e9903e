#include "torsioncover/extfield.hpp"

#include <stdexcept>

namespace tc {

namespace {

// next tuple of base-p digits, constant term most significant in the scan
bool next_tuple(FpPoly& digits, const Integer& p) {
  for (size_t i = digits.size(); i-- > 0;) {
    digits[i] += 1;
    if (digits[i] < p) return true;
    digits[i] = 0;
  }
  return false;
}

}  // namespace

ExtFieldCtx::ExtFieldCtx(FpCtxPtr fp, long k, FpPoly modulus)
    : fp_(std::move(fp)), k_(k), modulus_(std::move(modulus)) {}

std::shared_ptr<const ExtFieldCtx> ExtFieldCtx::make(const Integer& p, long k) {
  if (k < 1) throw std::domain_error("extension degree must be >= 1");
  auto fp = std::make_shared<const FpCtx>(p);
  if (k == 1) {
    FpPoly m{Integer(0), Integer(1)};  // t
    return std::shared_ptr<const ExtFieldCtx>(new ExtFieldCtx(fp, 1, std::move(m)));
  }
  if (ipow(p, static_cast<unsigned long>(k)) > Integer(100000000))
    throw std::domain_error("extension field too large for exhaustive modulus search");
  // scan monic x^k + c_{k-1} x^{k-1} + ... + c_0, ordered lexicographically
  // by (c_0, c_1, ..., c_{k-1})
  // digits[i] = c_i; next_tuple increments from the back, so c_0 varies slowest
  FpPoly digits(static_cast<size_t>(k), Integer(0));
  do {
    FpPoly cand = digits;
    cand.push_back(Integer(1));
    if (fp_is_irreducible(cand, *fp))
      return std::shared_ptr<const ExtFieldCtx>(new ExtFieldCtx(fp, k, std::move(cand)));
  } while (next_tuple(digits, p));
  throw std::logic_error("no irreducible modulus found");  // unreachable
}

FFElem::FFElem(ExtFieldPtr ctx, FpPoly rep) : ctx_(std::move(ctx)), rep_(std::move(rep)) {
  rep_ = fp_rem_monic(std::move(rep_), ctx_->modulus(), ctx_->base());
}

FFElem FFElem::from_integer(ExtFieldPtr ctx, const Integer& n) {
  FpPoly r{imod(n, ctx->p())};
  return FFElem(std::move(ctx), std::move(r));
}

FFElem FFElem::generator(ExtFieldPtr ctx) {
  return FFElem(std::move(ctx), FpPoly{Integer(0), Integer(1)});
}

FFElem FFElem::from_index(ExtFieldPtr ctx, Integer n) {
  FpPoly rep;
  for (long i = 0; i < ctx->degree(); ++i) {
    rep.push_back(imod(n, ctx->p()));
    n = fdiv(n, ctx->p());
  }
  return FFElem(std::move(ctx), std::move(rep));
}

Integer FFElem::index() const {
  Integer n(0);
  for (size_t i = rep_.size(); i-- > 0;) n = n * ctx_->p() + rep_[i];
  return n;
}

FFElem FFElem::operator-() const {
  FFElem r = *this;
  for (auto& c : r.rep_) c = imod(-c, ctx_->p());
  fp_normalize(r.rep_, ctx_->base());
  return r;
}

FFElem operator+(const FFElem& a, const FFElem& b) {
  return FFElem(a.ctx_, fp_add(a.rep_, b.rep_, a.ctx_->base()));
}
FFElem operator-(const FFElem& a, const FFElem& b) {
  return FFElem(a.ctx_, fp_sub(a.rep_, b.rep_, a.ctx_->base()));
}
FFElem operator*(const FFElem& a, const FFElem& b) {
  return FFElem(a.ctx_, fp_mul(a.rep_, b.rep_, a.ctx_->base()));
}

FFElem FFElem::inverse() const {
  if (is_zero()) throw std::domain_error("inverse of zero");
  // extended Euclid in F_p[t] against the modulus
  const FpCtx& F = ctx_->base();
  FpPoly r0 = ctx_->modulus(), r1 = rep_;
  FpPoly s0, s1{Integer(1)};
  while (!r1.empty()) {
    auto [q, r2] = fp_divrem(r0, r1, F);
    FpPoly s2 = fp_sub(s0, fp_mul(q, s1, F), F);
    r0 = std::move(r1);
    r1 = std::move(r2);
    s0 = std::move(s1);
    s1 = std::move(s2);
  }
  if (fp_degree(r0) != 0) throw std::domain_error("element not invertible");
  return FFElem(ctx_, fp_scale(s0, invmod(r0[0], F.p()), F));
}

FFElem FFElem::pow(Integer e) const {
  if (e < 0) return inverse().pow(-e);
  FFElem r = FFElem::one(ctx_), b = *this;
  long bits = (e == 0) ? 0 : static_cast<long>(mpz_sizeinbase(e.get_mpz_t(), 2));
  for (long i = bits - 1; i >= 0; --i) {
    r = r * r;
    if (mpz_tstbit(e.get_mpz_t(), static_cast<unsigned long>(i))) r = r * b;
  }
  return r;
}

FFElem eval_in_field(const Poly<Rational>& f, const FFElem& x) {
  const auto& ctx = x.ctx();
  FFElem r = FFElem::zero(ctx);
  for (long i = f.degree(); i >= 0; --i) {
    Rational c = f.coeff(i);
    Integer den = imod(c.get_den(), ctx->p());
    if (den == 0) throw std::domain_error("denominator divisible by p");
    Integer cv = imod(c.get_num(), ctx->p()) * invmod(den, ctx->p()) % ctx->p();
    r = r * x + FFElem::from_integer(ctx, cv);
  }
  return r;
}

std::vector<FFElem> enumerate_field(const ExtFieldPtr& ctx) {
  Integer q = ctx->order();
  if (q > 2000000) throw std::domain_error("field too large to enumerate");
  std::vector<FFElem> out;
  out.reserve(q.get_ui());
  for (Integer n(0); n < q; ++n) out.push_back(FFElem::from_index(ctx, n));
  return out;
}

}  // namespace tc
