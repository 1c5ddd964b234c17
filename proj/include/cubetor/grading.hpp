#pragma once

#include <array>
#include <map>
#include <string>

#include "cubetor/braid.hpp"
#include "cubetor/homfly.hpp"
#include "cubetor/koszul.hpp"

namespace cubetor {

enum class Side { Floer, Homfly };  // N-ideal side / Q-ideal side
std::string side_name(Side s);

/// Triply graded rank table for one summand or a whole assembled page.
/// Key (i, j, k) = (normalized gr_q [minus 1 when reduced], 2*gr_h~, 2*gr_v~).
/// On the Q side the Tor-degree alignment is already applied, so both sides
/// live in one grading frame.
struct GradedRankTable {
  Side side = Side::Floer;
  bool reduced = false;
  int D = 12;
  std::string knot;
  std::map<std::array<int, 3>, mpz_class> ranks;

  // exact Euler accumulators. Key = (a-exponent, q-parity); the series
  // variable is T = q^2 and the sign (-1)^{(k-j)/2} is folded in.
  std::map<std::pair<int, int>, RationalSeries> euler_q;
  // same data organized for the Floer-side Euler characteristic in
  // U = T^{-1}: key = u-parity (u = t^{-1}), sign (-1)^M folded in.
  std::map<int, RationalSeries> euler_t;

  GradedRankTable& accumulate(const GradedRankTable& o);
  /// Checks M = -gr_q~ - gr_h~ - gr_v~ + 1 is integral on every entry.
  bool gradings_consistent() const;
  std::string to_json() const;
};

GradedRankTable grade_summand(const DecoratedDiagram& d, const ResolutionAssignment& I, Side side,
                              bool reduced, const TorOptions& opts);

GradedRankTable assemble_E1(const DecoratedDiagram& d, Side side, bool reduced,
                            const TorOptions& opts);

/// chi of the table as an exact Laurent polynomial in (a, q): signs
/// (-1)^{(k-j)/2}, weights a^j q^i. Fails (returns false) if some graded cell
/// does not reduce to a polynomial (infinite chi).
bool euler_characteristic(const GradedRankTable& t, Laurent2* out);

/// Floer-side chi: sum (-1)^M t^{2A'} in u = t^{-1} units (Laurent1 exponent
/// convention: exponent n means u^n = T^{-n/2}).
bool euler_characteristic_T(const GradedRankTable& t, Laurent1* out);
/// Same but with one (1-U) factor multiplied in first (for middle tables,
/// which have an infinite tower).
bool euler_characteristic_T_times_1mU(const GradedRankTable& t, Laurent1* out);

struct UnitOffset {
  int sign = 1;
  int a = 0;
  int q = 0;
  bool operator==(const UnitOffset& o) const { return sign == o.sign && a == o.a && q == o.q; }
  std::string to_string() const;
};

struct EulerCheck {
  bool finite = false;
  bool match = false;
  bool mirrored = false;  // matched against P(a^-1, q^-1) rather than P(a, q)
  UnitOffset offset;
  std::string chi;
  std::string oracle;
};

/// Compares chi(E1) against the skein oracle (Q side, P_K(a,q)) or the
/// Alexander oracle (Floer side, Delta_K), up to one global unit.
EulerCheck check_euler(const DecoratedDiagram& d, Side side, bool reduced, const TorOptions& opts);

/// Matches f == sign * a^x q^y * g exactly; writes the offset.
bool match_up_to_unit(const Laurent2& f, const Laurent2& g, UnitOffset* off);
bool match_up_to_unit(const Laurent1& f, const Laurent1& g, UnitOffset* off);

}  // namespace cubetor
