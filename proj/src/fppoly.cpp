#include "torsioncover/fppoly.hpp"

#include "torsioncover/numtheory.hpp"

#include <stdexcept>

namespace tc {

FpCtx::FpCtx(Integer p, bool check_prime) : p_(std::move(p)) {
  if (p_ < 2) throw std::domain_error("FpCtx: modulus must be >= 2");
  if (check_prime && !is_prime(p_)) throw std::domain_error("FpCtx: modulus is not prime");
}

void fp_normalize(FpPoly& f, const FpCtx& F) {
  for (auto& c : f) c = imod(c, F.p());
  while (!f.empty() && f.back() == 0) f.pop_back();
}

FpPoly fp_poly_from(const Poly<Rational>& f, const FpCtx& F) {
  FpPoly out;
  out.reserve(static_cast<size_t>(f.degree() + 1));
  for (long i = 0; i <= f.degree(); ++i) {
    Rational c = f.coeff(i);
    Integer den = imod(c.get_den(), F.p());
    if (den == 0) throw std::domain_error("coefficient denominator divisible by p");
    out.push_back(imod(c.get_num(), F.p()) * invmod(den, F.p()) % F.p());
  }
  fp_normalize(out, F);
  return out;
}

FpPoly fp_poly_from_ints(const std::vector<long>& coeffs, const FpCtx& F) {
  FpPoly out;
  out.reserve(coeffs.size());
  for (long c : coeffs) out.push_back(imod(Integer(c), F.p()));
  fp_normalize(out, F);
  return out;
}

long fp_degree(const FpPoly& f) { return static_cast<long>(f.size()) - 1; }
bool fp_is_zero(const FpPoly& f) { return f.empty(); }

Integer fp_eval(const FpPoly& f, const Integer& x, const FpCtx& F) {
  Integer r(0);
  for (size_t i = f.size(); i-- > 0;) r = imod(r * x + f[i], F.p());
  return r;
}

FpPoly fp_add(const FpPoly& a, const FpPoly& b, const FpCtx& F) {
  FpPoly c(std::max(a.size(), b.size()), Integer(0));
  for (size_t i = 0; i < a.size(); ++i) c[i] = a[i];
  for (size_t i = 0; i < b.size(); ++i) c[i] += b[i];
  fp_normalize(c, F);
  return c;
}

FpPoly fp_sub(const FpPoly& a, const FpPoly& b, const FpCtx& F) {
  FpPoly c(std::max(a.size(), b.size()), Integer(0));
  for (size_t i = 0; i < a.size(); ++i) c[i] = a[i];
  for (size_t i = 0; i < b.size(); ++i) c[i] -= b[i];
  fp_normalize(c, F);
  return c;
}

FpPoly fp_mul(const FpPoly& a, const FpPoly& b, const FpCtx& F) {
  if (a.empty() || b.empty()) return {};
  FpPoly c(a.size() + b.size() - 1, Integer(0));
  for (size_t i = 0; i < a.size(); ++i) {
    if (a[i] == 0) continue;
    for (size_t j = 0; j < b.size(); ++j) {
      if (b[j] == 0) continue;
      c[i + j] += a[i] * b[j];
    }
  }
  fp_normalize(c, F);
  return c;
}

FpPoly fp_scale(const FpPoly& a, const Integer& s, const FpCtx& F) {
  FpPoly c = a;
  for (auto& x : c) x = imod(x * s, F.p());
  fp_normalize(c, F);
  return c;
}

FpPoly fp_derivative(const FpPoly& a, const FpCtx& F) {
  if (a.size() <= 1) return {};
  FpPoly c(a.size() - 1);
  for (size_t i = 1; i < a.size(); ++i) c[i - 1] = a[i] * static_cast<unsigned long>(i);
  fp_normalize(c, F);
  return c;
}

FpPoly fp_rem_monic(FpPoly a, const FpPoly& f, const FpCtx& F) {
  long df = fp_degree(f);
  if (df < 0) throw std::domain_error("reduction by zero polynomial");
  // lazy: subtract multiples top-down, reduce coefficients once at the end
  for (long i = fp_degree(a); i >= df; --i) {
    Integer c = imod(a[static_cast<size_t>(i)], F.p());
    if (c != 0) {
      for (long j = 0; j < df; ++j)
        a[static_cast<size_t>(i - df + j)] -= c * f[static_cast<size_t>(j)];
    }
    a[static_cast<size_t>(i)] = 0;
  }
  fp_normalize(a, F);
  return a;
}

std::pair<FpPoly, FpPoly> fp_divrem(const FpPoly& a, const FpPoly& b, const FpCtx& F) {
  long db = fp_degree(b);
  if (db < 0) throw std::domain_error("division by zero polynomial");
  Integer inv = invmod(b.back(), F.p());
  FpPoly r = a, q;
  fp_normalize(r, F);
  if (fp_degree(r) >= db) q.assign(static_cast<size_t>(fp_degree(r) - db) + 1, Integer(0));
  while (fp_degree(r) >= db) {
    long k = fp_degree(r) - db;
    Integer c = r.back() * inv % F.p();
    q[static_cast<size_t>(k)] = c;
    for (long j = 0; j <= db; ++j)
      r[static_cast<size_t>(k + j)] = imod(r[static_cast<size_t>(k + j)] - c * b[static_cast<size_t>(j)], F.p());
    while (!r.empty() && r.back() == 0) r.pop_back();
  }
  fp_normalize(q, F);
  return {q, r};
}

FpPoly fp_make_monic(FpPoly a, const FpCtx& F) {
  fp_normalize(a, F);
  if (a.empty()) return a;
  return fp_scale(a, invmod(a.back(), F.p()), F);
}

FpPoly fp_gcd(FpPoly a, FpPoly b, const FpCtx& F) {
  fp_normalize(a, F);
  fp_normalize(b, F);
  while (!b.empty()) {
    FpPoly r = fp_divrem(a, b, F).second;
    a = std::move(b);
    b = std::move(r);
  }
  return fp_make_monic(std::move(a), F);
}

FpPoly fp_powmod(const FpPoly& g, const Integer& e, const FpPoly& f, const FpCtx& F) {
  if (e < 0) throw std::domain_error("fp_powmod: negative exponent");
  FpPoly base = fp_rem_monic(g, f, F);
  FpPoly result{Integer(1)};
  long bits = (e == 0) ? 0 : static_cast<long>(mpz_sizeinbase(e.get_mpz_t(), 2));
  for (long i = bits - 1; i >= 0; --i) {
    result = fp_rem_monic(fp_mul(result, result, F), f, F);
    if (mpz_tstbit(e.get_mpz_t(), static_cast<unsigned long>(i)))
      result = fp_rem_monic(fp_mul(result, base, F), f, F);
  }
  return result;
}

FpPoly fp_compose_mod(const FpPoly& g, const FpPoly& h, const FpPoly& f, const FpCtx& F) {
  FpPoly r;
  for (size_t i = g.size(); i-- > 0;) {
    r = fp_rem_monic(fp_mul(r, h, F), f, F);
    if (g[i] != 0) {
      if (r.empty()) r.push_back(Integer(0));
      r[0] = imod(r[0] + g[i], F.p());
      fp_normalize(r, F);
    }
  }
  return r;
}

std::vector<std::pair<long, long>> ddf_cycle_type(const FpPoly& f0, const FpCtx& F) {
  FpPoly f = fp_make_monic(f0, F);
  long n = fp_degree(f);
  if (n < 1) throw std::domain_error("ddf: constant polynomial");
  {
    FpPoly g = fp_gcd(f, fp_derivative(f, F), F);
    if (fp_degree(g) != 0) throw std::domain_error("ramified prime");
  }
  std::vector<std::pair<long, long>> out;
  // x^p mod f: the single full-size exponentiation
  FpPoly x{Integer(0), Integer(1)};
  FpPoly xp = fp_powmod(x, F.p(), f, F);
  FpPoly xq = xp;  // x^(p^d) mod f, starting at d = 1
  long remaining = n;
  for (long d = 1; remaining > 0 && 2 * d <= remaining; ++d) {
    if (d > 1) xq = fp_compose_mod(xq, xp, f, F);  // x^(p^d) = (x^(p^(d-1)))(x^p)
    FpPoly g = fp_gcd(fp_sub(xq, x, F), f, F);
    if (fp_degree(g) > 0) {
      out.emplace_back(d, fp_degree(g) / d);
      f = fp_divrem(f, g, F).first;
      remaining = fp_degree(f);
      if (remaining > 0) {
        xq = fp_rem_monic(xq, f, F);
        xp = fp_rem_monic(xp, f, F);
      }
    }
  }
  if (remaining > 0) out.emplace_back(remaining, 1);  // leftover is irreducible
  return out;
}

std::vector<long> cycle_type_partition(const std::vector<std::pair<long, long>>& ddf) {
  std::vector<long> parts;
  for (auto [d, m] : ddf)
    for (long i = 0; i < m; ++i) parts.push_back(d);
  std::sort(parts.rbegin(), parts.rend());
  return parts;
}

std::vector<Integer> fp_newton_power_sums(const FpPoly& f, const FpCtx& F) {
  long n = fp_degree(f);
  if (n < 1 || f.back() != 1) throw std::domain_error("newton sums need a monic polynomial");
  // s_k + a_{n-1} s_{k-1} + ... + a_{n-k+1} s_1 + k a_{n-k} = 0
  std::vector<Integer> s(static_cast<size_t>(n), Integer(0));
  s[0] = imod(Integer(n), F.p());  // s_0 = n
  for (long k = 1; k < n; ++k) {
    Integer acc = Integer(k) * f[static_cast<size_t>(n - k)];
    for (long j = 1; j < k; ++j)
      acc += f[static_cast<size_t>(n - k + j)] * s[static_cast<size_t>(j)];
    s[static_cast<size_t>(k)] = imod(-acc, F.p());
  }
  return s;
}

Integer fp_trace_of(const FpPoly& g, const std::vector<Integer>& sums, long deg_f,
                    const FpCtx& F) {
  if (fp_degree(g) >= deg_f) throw std::domain_error("trace argument not reduced");
  Integer t(0);
  for (size_t i = 0; i < g.size(); ++i) t += g[i] * sums[i];
  return imod(t, F.p());
}

std::vector<Integer> fp_roots_bruteforce(const FpPoly& f, const FpCtx& F) {
  if (F.p() > 100000) throw std::domain_error("brute-force roots: p too large");
  std::vector<Integer> roots;
  for (Integer x(0); x < F.p(); ++x)
    if (fp_eval(f, x, F) == 0) roots.push_back(x);
  return roots;
}

bool fp_is_irreducible(const FpPoly& f0, const FpCtx& F) {
  FpPoly f = fp_make_monic(f0, F);
  long n = fp_degree(f);
  if (n <= 0) return false;
  if (n == 1) return true;
  FpPoly g = fp_gcd(f, fp_derivative(f, F), F);
  if (fp_degree(g) != 0) return false;
  auto t = ddf_cycle_type(f, F);
  return t.size() == 1 && t[0].first == n && t[0].second == 1;
}

}  // namespace tc
