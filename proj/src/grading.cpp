#include "cubetor/grading.hpp"

#include <sstream>

#include <json.hpp>

#include "cubetor/ideals.hpp"

namespace cubetor {

using nlohmann::json;

std::string side_name(Side s) { return s == Side::Floer ? "N" : "Q"; }

namespace {

mpz_class binom(int n, int k) {
  if (k < 0 || k > n) return 0;
  mpz_class b;
  mpz_bin_uiui(b.get_mpz_t(), n, k);
  return b;
}

void acc_cell(std::map<std::pair<int, int>, RationalSeries>& cells, int a_exp, int q_exp_const,
              const RationalSeries& s, const mpz_class& scale) {
  // contribution scale * q^{q_exp_const} * s(q^2)
  int rho = ((q_exp_const % 2) + 2) % 2;
  int shift = (q_exp_const - rho) / 2;
  auto key = std::make_pair(a_exp, rho);
  RationalSeries add = s.scale(scale).shift(shift);
  auto [it, fresh] = cells.emplace(key, add);
  if (!fresh) it->second = it->second.add(add);
}

void acc_cell_t(std::map<int, RationalSeries>& cells, int u_exp_const, const RationalSeries& s,
                const mpz_class& scale) {
  int rho = ((u_exp_const % 2) + 2) % 2;
  int shift = (u_exp_const - rho) / 2;
  RationalSeries add = s.scale(scale).shift(shift);
  auto [it, fresh] = cells.emplace(rho, add);
  if (!fresh) it->second = it->second.add(add);
}

}  // namespace

GradedRankTable& GradedRankTable::accumulate(const GradedRankTable& o) {
  for (const auto& [key, r] : o.ranks) {
    ranks[key] += r;
    if (ranks[key] == 0) ranks.erase(key);
  }
  for (const auto& [key, s] : o.euler_q) {
    auto [it, fresh] = euler_q.emplace(key, s);
    if (!fresh) it->second = it->second.add(s);
  }
  for (const auto& [key, s] : o.euler_t) {
    auto [it, fresh] = euler_t.emplace(key, s);
    if (!fresh) it->second = it->second.add(s);
  }
  return *this;
}

bool GradedRankTable::gradings_consistent() const {
  for (const auto& [key, r] : ranks) {
    (void)r;
    int i = key[0], j = key[1], k = key[2];
    // (k - j)/2 and M = -(i + [reduced]) - (j + k)/2 + 1 must be integers
    if ((k - j) % 2 != 0) return false;
    if ((j + k) % 2 != 0) return false;
    (void)i;
  }
  return true;
}

std::string GradedRankTable::to_json() const {
  json j;
  j["knot"] = knot;
  j["side"] = side_name(side);
  j["reduced"] = reduced;
  j["D"] = D;
  j["table"] = json::array();
  for (const auto& [key, r] : ranks)
    j["table"].push_back({key[0], key[1], key[2], r.get_str()});
  return j.dump(2);
}

GradedRankTable grade_summand(const DecoratedDiagram& d, const ResolutionAssignment& I, Side side,
                              bool reduced, const TorOptions& opts) {
  const Field& F = opts.field;
  PartialBraidGraph g = resolve(d, I);
  IdealSpec L = linear_ideal(g, F);
  IdealSpec J = side == Side::Homfly ? quadratic_ideal(g, F) : nonlocal_ideal(g, F);
  std::vector<Poly> Jp = J.polys();
  if (reduced) {
    if (g.e0 < 0) throw std::invalid_argument("reduced tables need a distinguished edge");
    Jp.push_back(Poly::variable(g.edge_count, g.e0, F));
  }

  MonomialOrder order = opts.order ? *opts.order : MonomialOrder::degrevlex(g.edge_count);
  std::string key = g.hash() + "|J=" + side_name(side) + (reduced ? "|red" : "") + "|" +
                    F.describe() + "|" + order.describe();
  TorTable tor = tor_dims_ideal(L.polys(), Jp, g.edge_count, opts, key);

  int comp_count = 0;
  auto comp = g.edge_components(&comp_count);
  const int wedge_rank = comp_count - 1;  // components away from e_0
  (void)comp;

  const int cS = g.four_valent_count();
  const int normI = I.norm();
  const int Np = d.word.n_plus();
  const int Nm = d.word.n_minus();
  const int k = d.word.closure_strands();

  GradedRankTable out;
  out.side = side;
  out.reduced = reduced;
  out.D = opts.D;
  out.knot = d.word.letters.empty() ? "unknot" : d.word.to_string();

  for (int i = 0; i <= tor.koszul_rank; ++i) {
    if (tor.series[i].is_zero()) continue;
    for (int w = 0; w <= wedge_rank; ++w) {
      mpz_class mult = binom(wedge_rank, w);
      // wedge generators carry (gr_q, gr_h) = (0, -1): the disjoint-union
      // circle factor pairs classes in the same Alexander grading. The Q-side
      // Tor degree is aligned into the same frame by -2i.
      int c0 = -(side == Side::Homfly ? 2 * i : 0) - cS - normI + Nm + k;
      int i_const = c0 - (reduced ? 1 : 0);  // i-index = 2d + i_const
      int j2 = -2 * (i + w) + (Np - Nm + k - 1);
      int k2 = 2 * normI - (Np + Nm + k - 1);
      int sign_exp = normI + i + w + 1 - Np - k;       // (k2 - j2)/2
      mpz_class signed_mult = (sign_exp % 2 == 0) ? mult : -mult;

      for (int dd = 0; dd <= opts.D; ++dd) {
        const mpz_class& r = tor.dims[i][dd];
        if (r == 0) continue;
        std::array<int, 3> key3{2 * dd + i_const, j2, k2};
        out.ranks[key3] += r * mult;
      }
      acc_cell(out.euler_q, j2, i_const, tor.series[i], signed_mult);
      // Floer-side chi: (-1)^M t^{2A'}, A' = (-gr_q~ + 1)/2, in u = t^{-1}:
      // u-exponent = i_index - (1 - [reduced]) = 2d + i_const - 1 + [reduced]
      int m_exp = i_const + (reduced ? 1 : 0) + (j2 + k2) / 2 + 1;  // parity of M (d-part even)
      mpz_class m_signed = (((m_exp % 2) + 2) % 2 == 0) ? mult : -mult;
      acc_cell_t(out.euler_t, i_const - 1 + (reduced ? 1 : 0), tor.series[i], m_signed);
    }
  }
  return out;
}

GradedRankTable assemble_E1(const DecoratedDiagram& d, Side side, bool reduced,
                            const TorOptions& opts) {
  const int n = d.crossing_count();
  GradedRankTable total;
  bool first = true;
  for (long mask = 0; mask < (1L << n); ++mask) {
    ResolutionAssignment I;
    I.bits.resize(n);
    for (int t = 0; t < n; ++t) I.bits[t] = (mask >> t) & 1;
    GradedRankTable part = grade_summand(d, I, side, reduced, opts);
    if (first) {
      total = part;
      first = false;
    } else {
      total.accumulate(part);
    }
  }
  return total;
}

bool euler_characteristic(const GradedRankTable& t, Laurent2* out) {
  Laurent2 chi;
  for (const auto& [key, s] : t.euler_q) {
    RationalSeries red = s.reduced();
    if (red.is_zero()) continue;
    if (red.denom_pow != 0) return false;
    for (int e = red.num.min_exp(); e <= red.num.max_exp(); ++e) {
      mpz_class c = red.num.coeff(e);
      if (c != 0) chi.addc(key.first, 2 * e + key.second, c);
    }
  }
  *out = chi;
  return true;
}

namespace {
bool euler_t_core(const GradedRankTable& t, int extra_1mU, Laurent1* out) {
  Laurent1 chi;
  for (const auto& [rho, s] : t.euler_t) {
    RationalSeries red = s.reduced();
    for (int i = 0; i < extra_1mU; ++i) red.num = red.num.mul_one_minus_T();
    red = red.reduced();
    if (red.is_zero()) continue;
    if (red.denom_pow != 0) return false;
    for (int e = red.num.min_exp(); e <= red.num.max_exp(); ++e) {
      mpz_class c = red.num.coeff(e);
      if (c != 0) chi.addc(2 * e + rho, c);
    }
  }
  *out = chi;
  return true;
}
}  // namespace

bool euler_characteristic_T(const GradedRankTable& t, Laurent1* out) {
  return euler_t_core(t, 0, out);
}

bool euler_characteristic_T_times_1mU(const GradedRankTable& t, Laurent1* out) {
  return euler_t_core(t, 1, out);
}

std::string UnitOffset::to_string() const {
  std::ostringstream os;
  os << (sign < 0 ? "-" : "+") << "a^" << a << "*q^" << q;
  return os.str();
}

bool match_up_to_unit(const Laurent2& f, const Laurent2& g, UnitOffset* off) {
  if (f.is_zero() || g.is_zero()) return f.is_zero() && g.is_zero();
  auto kf = f.c.begin();
  auto kg = g.c.begin();
  UnitOffset u;
  u.a = kf->first.first - kg->first.first;
  u.q = kf->first.second - kg->first.second;
  if (kf->second == kg->second)
    u.sign = 1;
  else if (kf->second == -kg->second)
    u.sign = -1;
  else
    return false;
  Laurent2 shifted;
  for (const auto& [key, v] : g.c)
    shifted.c[{key.first + u.a, key.second + u.q}] = u.sign > 0 ? v : -v;
  if (!(shifted == f)) return false;
  if (off) *off = u;
  return true;
}

bool match_up_to_unit(const Laurent1& f, const Laurent1& g, UnitOffset* off) {
  if (f.is_zero() || g.is_zero()) return f.is_zero() && g.is_zero();
  auto kf = f.c.begin();
  auto kg = g.c.begin();
  UnitOffset u;
  u.a = 0;
  u.q = kf->first - kg->first;
  if (kf->second == kg->second)
    u.sign = 1;
  else if (kf->second == -kg->second)
    u.sign = -1;
  else
    return false;
  Laurent1 shifted;
  for (const auto& [e, v] : g.c) shifted.c[e + u.q] = u.sign > 0 ? v : -v;
  if (!(shifted == f)) return false;
  if (off) *off = u;
  return true;
}

EulerCheck check_euler(const DecoratedDiagram& d, Side side, bool reduced, const TorOptions& opts) {
  EulerCheck res;
  GradedRankTable table = assemble_E1(d, side, reduced, opts);
  if (side == Side::Homfly) {
    if (!reduced) {
      // middle chi carries the (q^{-1} - q)^{-1} tower: one (1 - T) factor
      // makes it a Laurent polynomial comparable to P up to a unit
      for (auto& [key, s] : table.euler_q) {
        (void)key;
        s.num = s.num.mul_one_minus_T();
      }
    }
    Laurent2 chi;
    res.finite = euler_characteristic(table, &chi);
    HomflyPolynomial P = homfly_skein_oracle(d.word);
    res.oracle = P.to_string();
    res.chi = chi.to_string();
    if (!res.finite || !P.is_laurent()) return res;
    // the handedness pairing between the cube's crossing conventions and the
    // skein normalization is reported, not assumed
    if (match_up_to_unit(chi, P.num, &res.offset)) {
      res.match = true;
    } else if (match_up_to_unit(chi, P.num.mirror(), &res.offset)) {
      res.match = true;
      res.mirrored = true;
    }
    return res;
  }
  // Floer side in u = t^{-1} units; Delta is symmetric, so the flip only
  // costs a unit, which the policy absorbs.
  Laurent1 delta = alexander_oracle(d);
  res.oracle = delta.to_string_T();
  Laurent1 chi;
  if (reduced) {
    res.finite = euler_characteristic_T(table, &chi);
    res.chi = chi.to_string_T();
    if (!res.finite) return res;
    res.match = match_up_to_unit(chi, delta, &res.offset);
  } else {
    // middle: chi * (1 - U) should be Delta up to unit
    res.finite = euler_characteristic_T_times_1mU(table, &chi);
    res.chi = chi.to_string_T() + " (after one (1-T^-1) factor)";
    if (!res.finite) return res;
    res.match = match_up_to_unit(chi, delta, &res.offset);
  }
  return res;
}

}  // namespace cubetor
