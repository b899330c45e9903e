#include "torsioncover/kodaira.hpp"

#include <map>
#include <numeric>
#include <set>
#include <sstream>
#include <stdexcept>

namespace tc {

std::string kodaira_name(const KodairaType& t) {
  switch (t.cls) {
    case KodairaClass::I: return t.n == 0 ? "I0" : "I" + std::to_string(t.n);
    case KodairaClass::Istar: return "I" + std::to_string(t.n) + "*";
    case KodairaClass::II: return "II";
    case KodairaClass::III: return "III";
    case KodairaClass::IV: return "IV";
    case KodairaClass::IVstar: return "IV*";
    case KodairaClass::IIIstar: return "III*";
    case KodairaClass::IIstar: return "II*";
  }
  return "?";
}

namespace {

long poly_valuation(const LamPoly& f, const Place& pl) {
  if (f.is_zero()) throw std::domain_error("valuation of zero");
  if (pl.at_infinity) return -f.degree();
  long m = 0;
  LamPoly g = f;
  while (true) {
    auto [q, r] = divrem(g, pl.pi);
    if (!r.is_zero()) return m;
    ++m;
    g = q;
    if (g.is_zero()) return m;
  }
}

}  // namespace

long place_valuation(const LamPoly& f, const Place& pl) { return poly_valuation(f, pl); }

long place_valuation(const RatFun& r, const Place& pl) {
  if (r.num.is_zero()) throw std::domain_error("valuation of zero");
  return poly_valuation(r.num, pl) - poly_valuation(r.den, pl);
}

KodairaType kodaira_classify(ValuationTriple v) {
  auto floordiv = [](long a, long b) {
    return a / b - ((a % b != 0 && (a < 0) != (b < 0)) ? 1 : 0);
  };
  std::vector<long> ks{floordiv(v.vdisc, 12)};
  if (v.vc4) ks.push_back(floordiv(*v.vc4, 4));
  if (v.vc6) ks.push_back(floordiv(*v.vc6, 6));
  long k = *std::min_element(ks.begin(), ks.end());
  if (k != 0) {
    if (v.vc4) *v.vc4 -= 4 * k;
    if (v.vc6) *v.vc6 -= 6 * k;
    v.vdisc -= 12 * k;
  }
  const long INF = 1 << 30;  // stands for the valuation of an identically zero invariant
  long a = v.vc4 ? *v.vc4 : INF;
  long b = v.vc6 ? *v.vc6 : INF;
  long d = v.vdisc;
  if (a < 0 || b < 0 || d < 0) throw std::domain_error("negative minimal valuations");

  if (d == 0) return {KodairaClass::I, 0};
  if (a == 0) return {KodairaClass::I, d};
  if (a >= 1 && b == 1 && d == 2) return {KodairaClass::II, 0};
  if (a == 1 && b >= 2 && d == 3) return {KodairaClass::III, 0};
  if (a >= 2 && b == 2 && d == 4) return {KodairaClass::IV, 0};
  if (a >= 2 && b >= 3 && d == 6) return {KodairaClass::Istar, 0};
  if (a == 2 && b == 3 && d > 6) return {KodairaClass::Istar, d - 6};
  if (a >= 3 && b == 4 && d == 8) return {KodairaClass::IVstar, 0};
  if (a == 3 && b >= 5 && d == 9) return {KodairaClass::IIIstar, 0};
  if (a >= 4 && b == 5 && d == 10) return {KodairaClass::IIstar, 0};
  throw std::domain_error("non-minimal or inconsistent invariants");
}

std::string matrix_name(const MonodromyMatrix& t) {
  std::ostringstream out;
  out << "[" << t.m[0] << " " << t.m[1] << "; " << t.m[2] << " " << t.m[3] << "]";
  return out.str();
}

MonodromyMatrix monodromy_of(const KodairaType& t) {
  switch (t.cls) {
    case KodairaClass::I: return {{1, t.n, 0, 1}};
    case KodairaClass::Istar: return {{-1, -t.n, 0, -1}};
    case KodairaClass::II: return {{1, 1, -1, 0}};
    case KodairaClass::III: return {{0, 1, -1, 0}};
    case KodairaClass::IV: return {{0, 1, -1, -1}};
    case KodairaClass::IVstar: return {{-1, -1, 1, 0}};
    case KodairaClass::IIIstar: return {{0, -1, 1, 0}};
    case KodairaClass::IIstar: return {{0, -1, 1, 1}};
  }
  throw std::domain_error("unsupported fibre type");
}

OrbitCount orbit_count_checked(const MonodromyMatrix& t, long ell) {
  if (t.det() != 1) throw std::domain_error("monodromy must have determinant 1");
  if (ell < 3 || ell % 2 == 0) throw std::domain_error("ell must be an odd prime");
  auto mod = [ell](long a) { return ((a % ell) + ell) % ell; };
  using M = std::array<long, 4>;
  M T{mod(t.m[0]), mod(t.m[1]), mod(t.m[2]), mod(t.m[3])};
  auto mul = [&](const M& A, const M& B) {
    return M{mod(A[0] * B[0] + A[1] * B[2]), mod(A[0] * B[1] + A[1] * B[3]),
             mod(A[2] * B[0] + A[3] * B[2]), mod(A[2] * B[1] + A[3] * B[3])};
  };
  const M id{1, 0, 0, 1};
  std::vector<M> group{id};
  M cur = T;
  while (cur != id) {
    group.push_back(cur);
    cur = mul(cur, T);
    if (group.size() > 100000) throw std::logic_error("monodromy order runaway");
  }

  long nvec = ell * ell - 1;
  // Burnside: average number of fixed nonzero vectors
  long fixed_total = 0;
  for (const M& g : group) {
    long fixed = 0;
    for (long x = 0; x < ell; ++x)
      for (long y = 0; y < ell; ++y) {
        if (x == 0 && y == 0) continue;
        if (mod(g[0] * x + g[1] * y) == x && mod(g[2] * x + g[3] * y) == y) ++fixed;
      }
    fixed_total += fixed;
  }
  if (fixed_total % static_cast<long>(group.size()) != 0)
    throw std::logic_error("Burnside average is not an integer");
  long burnside = fixed_total / static_cast<long>(group.size());

  // direct enumeration
  std::vector<char> seen(static_cast<size_t>(ell * ell), 0);
  long direct = 0;
  for (long x = 0; x < ell; ++x)
    for (long y = 0; y < ell; ++y) {
      if (x == 0 && y == 0) continue;
      if (seen[static_cast<size_t>(x * ell + y)]) continue;
      ++direct;
      long cx = x, cy = y;
      do {
        seen[static_cast<size_t>(cx * ell + cy)] = 1;
        long nx = mod(T[0] * cx + T[1] * cy);
        long ny = mod(T[2] * cx + T[3] * cy);
        cx = nx;
        cy = ny;
      } while (!(cx == x && cy == y));
    }

  if (burnside != direct) throw std::logic_error("Burnside count disagrees with enumeration");
  (void)nvec;
  return {burnside, direct};
}

long orbit_count(const MonodromyMatrix& t, long ell) {
  return orbit_count_checked(t, ell).direct;
}

std::vector<FiberReport> kodaira_table(const FibrationCurve& e, long ell) {
  LamPoly c4 = e.c4(), c6 = e.c6(), disc = e.disc();
  std::vector<FiberReport> out;
  for (const Place& pl : bad_locus(e)) {
    FiberReport r;
    r.place = pl;
    r.valuations.vc4 = c4.is_zero() ? std::nullopt : std::optional<long>(place_valuation(c4, pl));
    r.valuations.vc6 = c6.is_zero() ? std::nullopt : std::optional<long>(place_valuation(c6, pl));
    r.valuations.vdisc = place_valuation(disc, pl);
    r.type = kodaira_classify(r.valuations);
    r.monodromy = monodromy_of(r.type);
    r.orbits_ell = orbit_count(r.monodromy, ell);
    out.push_back(std::move(r));
  }
  return out;
}

GenusReport cover_genus(const std::vector<std::pair<Place, KodairaType>>& fibres, long ell) {
  GenusReport rep;
  rep.ell = ell;
  rep.degree = ell * ell - 1;
  long twice_sum = 0;  // sum of residue_degree * (d - orbits), doubled bookkeeping below
  for (const auto& [pl, t] : fibres) {
    GenusReport::Contribution c;
    c.place = pl;
    c.type = t;
    c.residue_degree = pl.residue_degree();
    c.orbits = orbit_count(monodromy_of(t), ell);
    twice_sum += c.residue_degree * (rep.degree - c.orbits);
    rep.contributions.push_back(std::move(c));
  }
  if (twice_sum % 2 != 0) throw std::domain_error("inconsistent fibre data: genus not integral");
  long g = 1 - rep.degree + twice_sum / 2;
  if (g < 0) throw std::domain_error("inconsistent fibre data: negative genus");
  rep.genus = g;
  return rep;
}

GenusReport cover_genus(const FibrationCurve& e, long ell) {
  std::vector<std::pair<Place, KodairaType>> fibres;
  for (const FiberReport& r : kodaira_table(e, ell)) fibres.emplace_back(r.place, r.type);
  return cover_genus(fibres, ell);
}

}  // namespace tc
