#pragma once

#include "torsioncover/fibration.hpp"

#include <array>
#include <optional>
#include <string>
#include <vector>

namespace tc {

enum class KodairaClass { I, Istar, II, III, IV, IVstar, IIIstar, IIstar };

struct KodairaType {
  KodairaClass cls;
  long n = 0;  // only for I_n / I_n*
  bool operator==(const KodairaType& o) const { return cls == o.cls && n == o.n; }
};
std::string kodaira_name(const KodairaType& t);

// order of vanishing of num/den at a place; infinity via lambda = 1/mu
long place_valuation(const RatFun& r, const Place& pl);
long place_valuation(const LamPoly& f, const Place& pl);

// Valuation triple (v(c4), v(c6), v(disc)) with nullopt for an identically
// zero invariant.
struct ValuationTriple {
  std::optional<long> vc4, vc6;
  long vdisc = 0;
};

// Residue characteristic zero lookup. The triple is reduced by
// k = min(floor(vc4/4), floor(vc6/6), floor(vdisc/12)) first.
KodairaType kodaira_classify(ValuationTriple v);

struct MonodromyMatrix {
  std::array<long, 4> m;  // row major
  long det() const { return m[0] * m[3] - m[1] * m[2]; }
  bool operator==(const MonodromyMatrix& o) const { return m == o.m; }
};
std::string matrix_name(const MonodromyMatrix& t);

MonodromyMatrix monodromy_of(const KodairaType& t);

// Orbits of <T mod ell> on F_ell^2 minus the origin, computed both by
// Burnside averaging and by direct orbit enumeration; the two must agree.
struct OrbitCount {
  long burnside;
  long direct;
};
OrbitCount orbit_count_checked(const MonodromyMatrix& t, long ell);
long orbit_count(const MonodromyMatrix& t, long ell);

struct FiberReport {
  Place place;
  ValuationTriple valuations;
  KodairaType type;
  MonodromyMatrix monodromy;
  long orbits_ell = 0;  // orbit count for the requested ell
};

// Full bad-fibre analysis of a fibration (valuations, type, monodromy,
// orbit count at ell).
std::vector<FiberReport> kodaira_table(const FibrationCurve& e, long ell);

struct GenusReport {
  long ell;
  long degree;  // ell^2 - 1
  struct Contribution {
    Place place;
    KodairaType type;
    long residue_degree;
    long orbits;
  };
  std::vector<Contribution> contributions;
  long genus;
};

// Riemann-Hurwitz genus of the ell-torsion cover from the fibre data.
GenusReport cover_genus(const std::vector<std::pair<Place, KodairaType>>& fibres, long ell);
GenusReport cover_genus(const FibrationCurve& e, long ell);

}  // namespace tc
