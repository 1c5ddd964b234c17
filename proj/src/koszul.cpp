#include "cubetor/koszul.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <sstream>

#include <json.hpp>

namespace cubetor {

using nlohmann::json;

namespace {

std::vector<std::vector<int>> subsets_of_size(int n, int k) {
  std::vector<std::vector<int>> out;
  std::vector<int> cur;
  std::function<void(int)> rec = [&](int start) {
    if (static_cast<int>(cur.size()) == k) {
      out.push_back(cur);
      return;
    }
    for (int v = start; v < n; ++v) {
      cur.push_back(v);
      rec(v + 1);
      cur.pop_back();
    }
  };
  rec(0);
  return out;
}

mpz_class binom(int n, int k) {
  if (k < 0 || k > n) return 0;
  mpz_class b;
  mpz_bin_uiui(b.get_mpz_t(), n, k);
  return b;
}

RationalSeries scale_series(const RationalSeries& s, const mpz_class& k) { return s.scale(k); }

}  // namespace

std::vector<Poly> linear_span_basis(const std::vector<Poly>& linear_gens, int arity,
                                    const Field& F) {
  // echelon form over the coefficient field, natural variable order
  std::vector<std::vector<mpq_class>> rows;
  for (const auto& g : linear_gens) {
    if (g.is_zero()) continue;
    if (g.degree() != 1) throw std::invalid_argument("linear span basis needs degree-1 forms");
    std::vector<mpq_class> v(arity, 0);
    for (const auto& t : g.terms()) {
      for (int i = 0; i < arity; ++i)
        if (t.m[i] == 1) v[i] = t.c;
    }
    for (const auto& row : rows) {
      int p = -1;
      for (int i = 0; i < arity; ++i)
        if (!F.is_zero(row[i])) {
          p = i;
          break;
        }
      if (p >= 0 && !F.is_zero(v[p])) {
        mpq_class f = v[p];
        for (int i = 0; i < arity; ++i) v[i] = F.sub(v[i], F.mul(f, row[i]));
      }
    }
    int p = -1;
    for (int i = 0; i < arity; ++i)
      if (!F.is_zero(v[i])) {
        p = i;
        break;
      }
    if (p < 0) continue;
    mpq_class inv = F.inv(v[p]);
    for (int i = 0; i < arity; ++i) v[i] = F.mul(v[i], inv);
    rows.push_back(std::move(v));
    std::sort(rows.begin(), rows.end(), [&](const auto& a, const auto& b) {
      int pa = arity, pb = arity;
      for (int i = 0; i < arity; ++i)
        if (!F.is_zero(a[i])) {
          pa = i;
          break;
        }
      for (int i = 0; i < arity; ++i)
        if (!F.is_zero(b[i])) {
          pb = i;
          break;
        }
      return pa < pb;
    });
  }
  std::vector<Poly> basis;
  for (const auto& row : rows) {
    std::vector<std::pair<int, mpq_class>> terms;
    for (int i = 0; i < arity; ++i)
      if (!F.is_zero(row[i])) terms.push_back({i, row[i]});
    basis.push_back(Poly::linear(arity, terms, F));
  }
  return basis;
}

RationalSeries quotient_series(const std::vector<Poly>& J_gens, int arity,
                               const TorOptions& opts) {
  MonomialOrder order = opts.order ? *opts.order : MonomialOrder::degrevlex(arity);
  GroebnerBasis gb = buchberger_reduced(J_gens, order, opts.field, opts.gb);
  return quotient_hilbert_rational(gb);
}

TorTable tor_dims_ideal(const std::vector<Poly>& linear_gens, const std::vector<Poly>& J_gens,
                        int arity, const TorOptions& opts, const std::string& cache_key) {
  const Field& F = opts.field;
  MonomialOrder order = opts.order ? *opts.order : MonomialOrder::degrevlex(arity);

  std::vector<Poly> basis = linear_span_basis(linear_gens, arity, F);
  const int r = static_cast<int>(basis.size());

  GroebnerBasis gbJ;
  bool cached = false;
  if (opts.cache && !cache_key.empty()) {
    if (auto hit = opts.cache->get(cache_key, order, F)) {
      gbJ = std::move(*hit);
      cached = true;
    }
  }
  if (!cached) {
    gbJ = buchberger_reduced(J_gens, order, F, opts.gb);
    gbJ.source_key = cache_key;
    if (opts.cache && !cache_key.empty()) opts.cache->put(cache_key, gbJ);
  }
  RationalSeries hsJ = quotient_hilbert_rational(gbJ);

  // Q[i] = HS(K_{i-1} / im d_i) for i = 1..r, component shift included
  std::vector<RationalSeries> Q(r + 2, RationalSeries::zero());
  for (int i = 1; i <= r; ++i) {
    auto cols = subsets_of_size(r, i);
    auto rows_sub = subsets_of_size(r, i - 1);
    std::map<std::vector<int>, int> row_index;
    for (size_t t = 0; t < rows_sub.size(); ++t) row_index[rows_sub[t]] = static_cast<int>(t);
    const int rank_prev = static_cast<int>(rows_sub.size());

    std::vector<ModPoly> gens;
    for (const auto& T : cols) {
      std::vector<std::pair<int, Poly>> parts;
      for (size_t t = 0; t < T.size(); ++t) {
        std::vector<int> sub = T;
        sub.erase(sub.begin() + t);
        Poly coef = (t % 2 == 0) ? basis[T[t]] : basis[T[t]].neg(F);
        parts.push_back({row_index[sub], coef});
      }
      gens.push_back(make_mod_poly(rank_prev, parts, order, F));
    }
    for (int comp = 0; comp < rank_prev; ++comp)
      for (const auto& g : gbJ.gens)
        gens.push_back(make_mod_poly(rank_prev, {{comp, g}}, order, F));
    auto mgb = module_gb(std::move(gens), order, F, opts.gb);
    Q[i] = module_quotient_hilbert(mgb, rank_prev, arity).shift(i - 1).reduced();
  }

  TorTable table;
  table.koszul_rank = r;
  table.D = opts.D;
  table.series.resize(r + 1, RationalSeries::zero());
  if (r == 0) {
    table.series[0] = hsJ;
  } else {
    table.series[0] = Q[1];
    for (int i = 1; i < r; ++i) {
      RationalSeries k_prev = scale_series(hsJ, binom(r, i - 1)).shift(i - 1);
      table.series[i] = Q[i].add(Q[i + 1]).sub(k_prev).reduced();
    }
    RationalSeries k_r = scale_series(hsJ, binom(r, r)).shift(r);
    RationalSeries k_prev = scale_series(hsJ, binom(r, r - 1)).shift(r - 1);
    table.series[r] = k_r.sub(k_prev).add(Q[r]).reduced();
  }

  table.dims.resize(r + 1);
  for (int i = 0; i <= r; ++i) {
    table.dims[i] = table.series[i].expand(opts.D);
    for (const auto& c : table.dims[i])
      if (c < 0) throw std::logic_error("negative graded dimension: engine inconsistency");
  }
  return table;
}

TorTable tor_dims(const PartialBraidGraph& g, TorSide side, const TorOptions& opts) {
  const Field& F = opts.field;
  IdealSpec L = linear_ideal(g, F);
  IdealSpec J = side == TorSide::N ? nonlocal_ideal(g, F) : quadratic_ideal(g, F);
  MonomialOrder order = opts.order ? *opts.order : MonomialOrder::degrevlex(g.edge_count);
  std::string key = g.hash() + "|J=" + (side == TorSide::N ? "N" : "Q") + "|" + F.describe() +
                    "|" + order.describe();
  TorTable t = tor_dims_ideal(L.polys(), J.polys(), g.edge_count, opts, key);
  t.k = g.closure_strand_count();
  t.four_valent = g.four_valent_count();
  t.graph_hash = g.hash();
  t.side = side == TorSide::N ? "N" : "Q";
  return t;
}

bool TorTable::equal_dims(const TorTable& o) const {
  int top = std::max(koszul_rank, o.koszul_rank);
  for (int i = 0; i <= top; ++i) {
    RationalSeries a = i <= koszul_rank ? series[i] : RationalSeries::zero();
    RationalSeries b = i <= o.koszul_rank ? o.series[i] : RationalSeries::zero();
    if (!a.equals(b)) return false;
  }
  return true;
}

std::string TorTable::to_json() const {
  json j;
  j["graph_id"] = graph_hash;
  j["J"] = side;
  j["k"] = k;
  j["m"] = four_valent;
  j["koszul_rank"] = koszul_rank;
  j["D"] = D;
  j["series"] = json::array();
  for (int i = 0; i <= koszul_rank; ++i) {
    RationalSeries s = series[i].reduced();
    json js;
    js["i"] = i;
    // numerator coefficients from T^0 upward
    json num = json::array();
    if (!s.num.is_zero()) {
      if (s.num.min_exp() < 0) throw std::logic_error("negative numerator exponent");
      for (int e = 0; e <= s.num.max_exp(); ++e) num.push_back(static_cast<long>(s.num.coeff(e).get_si()));
    }
    js["num"] = num;
    js["denom_power"] = s.denom_pow;
    js["truncation"] = D;
    js["stable"] = stable;
    js["display"] = s.to_string();
    j["series"].push_back(js);
  }
  j["dims"] = json::array();
  for (int i = 0; i < static_cast<int>(dims.size()); ++i)
    for (int d = 0; d < static_cast<int>(dims[i].size()); ++d)
      if (dims[i][d] != 0) j["dims"].push_back({i, d, dims[i][d].get_str()});
  return j.dump(2);
}

std::string verdict_name(Verdict v) {
  switch (v) {
    case Verdict::Holds: return "holds";
    case Verdict::Fails: return "fails";
    case Verdict::Unstable: return "unstable";
  }
  return "?";
}

ConjectureReport check_graded_conjecture(const PartialBraidGraph& g, const TorOptions& opts) {
  ConjectureReport rep;
  rep.n_table = tor_dims(g, TorSide::N, opts);
  rep.q_table = tor_dims(g, TorSide::Q, opts);
  const int k = g.closure_strand_count();
  const int top = std::max(rep.n_table.koszul_rank, rep.q_table.koszul_rank);
  for (int i = 0; i <= std::min(top, k); ++i) {
    RationalSeries q = i <= rep.q_table.koszul_rank ? rep.q_table.series[i] : RationalSeries::zero();
    RationalSeries n = i <= rep.n_table.koszul_rank ? rep.n_table.series[i] : RationalSeries::zero();
    RationalSeries diff = q.sub(n.shift(i)).reduced();
    if (diff.is_zero()) continue;
    rep.verdict = Verdict::Fails;
    rep.fail_i = i;
    rep.fail_degree = diff.num.min_exp();
    int d = rep.fail_degree;
    rep.expected = n.shift(i).expand(d, std::min(0, d)).back();
    rep.got = q.expand(d, std::min(0, d)).back();
    break;
  }
  return rep;
}

VanishingReport check_vanishing(const PartialBraidGraph& g, const TorOptions& opts) {
  VanishingReport rep;
  rep.k = g.closure_strand_count();
  rep.open_graph = g.strands.empty();
  rep.q_table = tor_dims(g, TorSide::Q, opts);
  int from = rep.open_graph ? 1 : rep.k + 1;
  for (int i = from; i <= rep.q_table.koszul_rank; ++i) {
    if (!rep.q_table.series[i].is_zero()) {
      rep.ok = false;
      rep.failed_i.push_back(i);
    }
  }
  return rep;
}

bool check_regular_sequence(const std::vector<Poly>& gens, const TorOptions& opts,
                            int* certified_D) {
  if (gens.empty()) return true;
  const Field& F = opts.field;
  int arity = gens.front().arity();
  for (const auto& g : gens) {
    if (!g.is_homogeneous()) throw std::invalid_argument("regular sequence check needs homogeneous elements");
    if (g.is_zero()) return false;
    if (g.degree() == 0) throw std::invalid_argument("constant element in sequence");
  }
  MonomialOrder order = opts.order ? *opts.order : MonomialOrder::degrevlex(arity);
  const int s = static_cast<int>(gens.size());

  GroebnerBasis gb0 = buchberger_reduced(gens, order, F, opts.gb);
  RationalSeries Q1 = quotient_hilbert_rational(gb0);

  // image of d_2 inside K_1 = R^s, padded with the ideal in every component
  std::vector<ModPoly> mgens;
  for (int a = 0; a < s; ++a)
    for (int b = a + 1; b < s; ++b)
      mgens.push_back(make_mod_poly(s, {{a, gens[b]}, {b, gens[a].neg(F)}}, order, F));
  auto mgb = module_gb(std::move(mgens), order, F, opts.gb);
  // degree bookkeeping: component e_j of K_1 sits in internal degree deg(gens_j)
  std::vector<std::vector<Mono>> per_comp(s);
  for (const auto& g : mgb)
    if (!g.is_zero()) per_comp[g.lead().comp].push_back(g.lead().m);
  RationalSeries Q2 = RationalSeries::zero();
  for (int t = 0; t < s; ++t)
    Q2 = Q2.add(monomial_quotient_hilbert(per_comp[t], arity).shift(gens[t].degree()));

  RationalSeries K0{ZPoly::one(), arity};
  RationalSeries H1 = Q1.add(Q2).sub(K0).reduced();
  if (certified_D) {
    *certified_D = opts.D;
    for (const auto& c : H1.expand(opts.D))
      if (c != 0) return false;
  }
  return H1.is_zero();
}

bool chain_euler_identity_holds(const TorTable& t, const RationalSeries& hs_quotient) {
  RationalSeries lhs = RationalSeries::zero();
  for (int i = 0; i <= t.koszul_rank; ++i)
    lhs = (i % 2 == 0) ? lhs.add(t.series[i]) : lhs.sub(t.series[i]);
  RationalSeries rhs = hs_quotient;
  for (int i = 0; i < t.koszul_rank; ++i) rhs.num = rhs.num.mul_one_minus_T();
  return lhs.equals(rhs.reduced());
}

std::vector<DifferentialEntry> koszul_differential(const std::vector<Poly>& gens, int i,
                                                   const Field& F) {
  const int r = static_cast<int>(gens.size());
  auto cols = subsets_of_size(r, i);
  auto rows = subsets_of_size(r, i - 1);
  std::map<std::vector<int>, int> row_index;
  for (size_t t = 0; t < rows.size(); ++t) row_index[rows[t]] = static_cast<int>(t);
  std::vector<DifferentialEntry> out;
  for (size_t c = 0; c < cols.size(); ++c) {
    const auto& T = cols[c];
    for (size_t t = 0; t < T.size(); ++t) {
      std::vector<int> sub = T;
      sub.erase(sub.begin() + t);
      Poly v = (t % 2 == 0) ? gens[T[t]] : gens[T[t]].neg(F);
      out.push_back(DifferentialEntry{row_index[sub], static_cast<int>(c), v});
    }
  }
  return out;
}

// ---- dense no-Groebner oracle ----

namespace {

void enumerate_monomials(int arity, int degree, std::vector<Mono>& out) {
  Mono cur(arity);
  std::function<void(int, int)> rec = [&](int var, int remaining) {
    if (var == arity - 1) {
      Mono m = cur;
      m.bump(var, remaining);
      out.push_back(m);
      return;
    }
    for (int e = remaining; e >= 0; --e) {
      Mono saved = cur;
      cur.bump(var, e);
      rec(var + 1, remaining - e);
      cur = saved;
    }
  };
  if (arity == 0) {
    if (degree == 0) out.push_back(Mono(0));
    return;
  }
  rec(0, degree);
}

struct MonoLess {
  bool operator()(const Mono& a, const Mono& b) const {
    if (a.degree() != b.degree()) return a.degree() < b.degree();
    for (int i = 0; i < a.arity(); ++i)
      if (a[i] != b[i]) return a[i] < b[i];
    return false;
  }
};

// echelon row space with membership reduction
struct RowSpace {
  const Field* F;
  int width;
  std::map<int, std::vector<mpq_class>> rows;  // pivot column -> normalized row

  void reduce(std::vector<mpq_class>& v) const {
    for (const auto& [p, row] : rows) {
      if (F->is_zero(v[p])) continue;
      mpq_class f = v[p];
      for (int i = p; i < width; ++i) v[i] = F->sub(v[i], F->mul(f, row[i]));
    }
  }
  bool add(std::vector<mpq_class> v) {
    reduce(v);
    int p = -1;
    for (int i = 0; i < width; ++i)
      if (!F->is_zero(v[i])) {
        p = i;
        break;
      }
    if (p < 0) return false;
    mpq_class inv = F->inv(v[p]);
    for (int i = p; i < width; ++i) v[i] = F->mul(v[i], inv);
    rows.emplace(p, std::move(v));
    return true;
  }
  int rank() const { return static_cast<int>(rows.size()); }
};

struct DegreeBasis {
  std::vector<Mono> monos;
  std::map<Mono, int, MonoLess> index;
  RowSpace span;
  std::vector<int> free_cols;  // standard-monomial columns
};

DegreeBasis build_degree_basis(const std::vector<Poly>& J_gens, int arity, int d, const Field& F) {
  DegreeBasis B;
  enumerate_monomials(arity, d, B.monos);
  for (size_t i = 0; i < B.monos.size(); ++i) B.index.emplace(B.monos[i], static_cast<int>(i));
  B.span.F = &F;
  B.span.width = static_cast<int>(B.monos.size());
  for (const auto& g : J_gens) {
    if (g.is_zero()) continue;
    // multiples m*g landing in degree d; g need not be homogeneous, so we
    // take homogeneous parts separately
    std::map<int, std::vector<Term>> parts;
    for (const auto& t : g.terms()) parts[t.m.degree()].push_back(t);
    for (const auto& [dg, terms] : parts) {
      if (dg > d) continue;
      std::vector<Mono> mults;
      enumerate_monomials(arity, d - dg, mults);
      for (const auto& m : mults) {
        std::vector<mpq_class> v(B.monos.size(), 0);
        for (const auto& t : terms) v[B.index.at(t.m * m)] = F.reduce(v[B.index.at(t.m * m)] + t.c);
        B.span.add(std::move(v));
      }
    }
  }
  for (int i = 0; i < static_cast<int>(B.monos.size()); ++i)
    if (!B.span.rows.count(i)) B.free_cols.push_back(i);
  return B;
}

}  // namespace

std::vector<long> quotient_dims_bruteforce(const std::vector<Poly>& J_gens, int arity, int D,
                                           const Field& F) {
  std::vector<long> dims(D + 1, 0);
  for (int d = 0; d <= D; ++d) {
    DegreeBasis B = build_degree_basis(J_gens, arity, d, F);
    dims[d] = static_cast<long>(B.free_cols.size());
  }
  return dims;
}

std::vector<std::vector<long>> tor_dims_bruteforce(const std::vector<Poly>& linear_gens,
                                                   const std::vector<Poly>& J_gens, int arity,
                                                   int D, const Field& F) {
  const int s = static_cast<int>(linear_gens.size());
  // quotient bases per degree
  std::vector<DegreeBasis> bases(D + 2);
  for (int d = 0; d <= D + 1; ++d) bases[d] = build_degree_basis(J_gens, arity, d, F);

  auto subsets_per = [&](int i) { return subsets_of_size(s, i); };

  // rank of d_i on the internal-degree-d slice
  auto rank_of = [&](int i, int d) -> long {
    if (i < 1 || i > s) return 0;
    int src_deg = d - i;       // monomial degree in source components
    int dst_deg = d - (i - 1);  // in target components
    if (src_deg < 0 || dst_deg > D + 1) return 0;
    auto cols = subsets_per(i);
    auto rows = subsets_per(i - 1);
    std::map<std::vector<int>, int> row_index;
    for (size_t t = 0; t < rows.size(); ++t) row_index[rows[t]] = static_cast<int>(t);
    const DegreeBasis& SB = bases[src_deg];
    const DegreeBasis& TB = bases[dst_deg];
    int tcols = static_cast<int>(TB.free_cols.size());
    std::map<int, int> tpos;
    for (int t = 0; t < tcols; ++t) tpos[TB.free_cols[t]] = t;
    RowSpace image;
    image.F = &F;
    image.width = static_cast<int>(rows.size()) * tcols;
    long rank = 0;
    for (size_t c = 0; c < cols.size(); ++c) {
      const auto& T = cols[c];
      for (int fc : SB.free_cols) {
        const Mono& mu = SB.monos[fc];
        std::vector<mpq_class> vec(image.width, 0);
        for (size_t t = 0; t < T.size(); ++t) {
          std::vector<int> sub = T;
          sub.erase(sub.begin() + t);
          int comp = row_index[sub];
          Poly ell = (t % 2 == 0) ? linear_gens[T[t]] : linear_gens[T[t]].neg(F);
          // mu * ell reduced mod the degree-dst_deg row space
          std::vector<mpq_class> raw(TB.monos.size(), 0);
          for (const auto& term : ell.terms())
            raw[TB.index.at(term.m * mu)] = F.add(raw[TB.index.at(term.m * mu)], term.c);
          TB.span.reduce(raw);
          for (int col = 0; col < static_cast<int>(raw.size()); ++col) {
            if (F.is_zero(raw[col])) continue;
            vec[comp * tcols + tpos.at(col)] = F.add(vec[comp * tcols + tpos.at(col)], raw[col]);
          }
        }
        if (image.add(std::move(vec))) ++rank;
      }
    }
    return rank;
  };

  std::vector<std::vector<long>> dims(s + 1, std::vector<long>(D + 1, 0));
  for (int d = 0; d <= D; ++d) {
    std::vector<long> ranks(s + 2, 0);
    for (int i = 1; i <= s + 1; ++i) ranks[i] = rank_of(i, d);
    for (int i = 0; i <= s; ++i) {
      int src_deg = d - i;
      long chain = 0;
      if (src_deg >= 0)
        chain = static_cast<long>(binom(s, i).get_si()) *
                static_cast<long>(bases[src_deg].free_cols.size());
      dims[i][d] = chain - ranks[i] - ranks[i + 1];
    }
  }
  return dims;
}

}  // namespace cubetor
