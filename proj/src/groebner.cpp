#include "cubetor/groebner.hpp"

#include <algorithm>
#include <fstream>
#include <functional>
#include <map>
#include <set>
#include <sstream>

namespace cubetor {

namespace {

struct ModKey {
  int comp;
  Mono m;
};

// term-over-position: ring order first, lower component wins ties
struct KeyGreater {
  const MonomialOrder* order;
  bool operator()(const ModKey& a, const ModKey& b) const {
    int c = order->cmp(a.m, b.m);
    if (c != 0) return c > 0;
    return a.comp < b.comp;
  }
};

using WorkMap = std::map<ModKey, mpq_class, KeyGreater>;

void work_add(WorkMap& w, const ModKey& k, const mpq_class& c, const Field& F) {
  auto [it, fresh] = w.emplace(k, c);
  if (!fresh) {
    it->second = F.add(it->second, c);
    if (F.is_zero(it->second)) w.erase(it);
  } else if (F.is_zero(it->second)) {
    w.erase(it);
  }
}

ModPoly from_work(int rank, int arity, const WorkMap& w) {
  ModPoly p;
  p.rank = rank;
  p.arity = arity;
  p.terms.reserve(w.size());
  for (const auto& [k, c] : w) p.terms.push_back(ModTerm{k.comp, k.m, c});
  return p;
}

WorkMap to_work(const ModPoly& p, const KeyGreater& cmp, const Field& F) {
  WorkMap w(cmp);
  for (const auto& t : p.terms) work_add(w, ModKey{t.comp, t.m}, t.c, F);
  return w;
}

struct Budget {
  long remaining;
  void spend(long n = 1) {
    remaining -= n;
    if (remaining < 0) throw ResourceError("work budget exceeded in Groebner engine");
  }
};

/// Fully reduces `work` against the basis; irreducible terms accumulate in
/// front of the returned polynomial.
ModPoly reduce_work(WorkMap work, const std::vector<ModPoly>& basis, int rank, int arity,
                    const Field& F, Budget& budget) {
  std::vector<ModTerm> done;
  while (!work.empty()) {
    auto it = work.begin();
    ModKey key = it->first;
    mpq_class coef = it->second;
    const ModPoly* red = nullptr;
    for (const auto& g : basis) {
      if (g.is_zero()) continue;
      const ModTerm& lt = g.lead();
      if (lt.comp == key.comp && lt.m.divides(key.m)) {
        red = &g;
        break;
      }
    }
    if (!red) {
      done.push_back(ModTerm{key.comp, key.m, coef});
      work.erase(it);
      continue;
    }
    budget.spend();
    Mono shift = red->lead().m.quotient_of(key.m);
    mpq_class scale = F.div(coef, red->lead().c);
    for (const auto& t : red->terms)
      work_add(work, ModKey{t.comp, t.m * shift}, F.mul(t.c, F.neg(scale)), F);
    // the lead cancels exactly; done terms are untouched (they are larger
    // than everything remaining in work only for the lead — lower done
    // terms were already irreducible, and reduction never re-raises keys)
  }
  ModPoly p;
  p.rank = rank;
  p.arity = arity;
  p.terms = std::move(done);
  return p;
}

ModPoly make_monic(ModPoly p, const Field& F) {
  if (p.is_zero()) return p;
  mpq_class inv = F.inv(p.lead().c);
  for (auto& t : p.terms) t.c = F.mul(t.c, inv);
  return p;
}

struct PairEntry {
  int i, j;
  Mono lcm;
};

std::vector<ModPoly> buchberger_module(std::vector<ModPoly> gens, int rank, int arity,
                                       const MonomialOrder& order, const Field& F,
                                       const GBOptions& opts) {
  KeyGreater cmp{&order};
  Budget budget{opts.reduction_budget};

  std::vector<ModPoly> basis;
  for (auto& g : gens) {
    WorkMap w = to_work(g, cmp, F);
    ModPoly r = from_work(rank, arity, w);
    if (!r.is_zero()) basis.push_back(make_monic(std::move(r), F));
  }

  auto pair_less = [&](const PairEntry& a, const PairEntry& b) {
    if (a.lcm.degree() != b.lcm.degree()) return a.lcm.degree() < b.lcm.degree();
    int c = order.cmp(a.lcm, b.lcm);
    if (c != 0) return c < 0;
    if (a.i != b.i) return a.i < b.i;
    return a.j < b.j;
  };

  std::vector<PairEntry> queue;
  std::set<std::pair<int, int>> handled;
  auto push_pairs = [&](int j) {
    for (int i = 0; i < j; ++i) {
      if (basis[i].lead().comp != basis[j].lead().comp) continue;
      queue.push_back(PairEntry{i, j, basis[i].lead().m.lcm(basis[j].lead().m)});
    }
  };
  for (int j = 0; j < static_cast<int>(basis.size()); ++j) push_pairs(j);

  while (!queue.empty()) {
    auto it = std::min_element(queue.begin(), queue.end(), pair_less);
    PairEntry pr = *it;
    queue.erase(it);
    handled.insert({pr.i, pr.j});

    const ModPoly& f = basis[pr.i];
    const ModPoly& g = basis[pr.j];
    // product criterion (valid in the ring case only)
    if (rank == 1 && f.lead().m.coprime(g.lead().m)) continue;
    budget.spend();  // one unit per surviving S-pair
    // chain criterion
    bool skip = false;
    for (int k = 0; k < static_cast<int>(basis.size()) && !skip; ++k) {
      if (k == pr.i || k == pr.j) continue;
      if (basis[k].lead().comp != f.lead().comp) continue;
      if (!basis[k].lead().m.divides(pr.lcm)) continue;
      auto key1 = std::minmax(pr.i, k);
      auto key2 = std::minmax(pr.j, k);
      if (handled.count({key1.first, key1.second}) && handled.count({key2.first, key2.second}))
        skip = true;
    }
    if (skip) continue;

    WorkMap w(cmp);
    Mono sf = f.lead().m.quotient_of(pr.lcm);
    Mono sg = g.lead().m.quotient_of(pr.lcm);
    for (const auto& t : f.terms) work_add(w, ModKey{t.comp, t.m * sf}, t.c, F);
    for (const auto& t : g.terms) work_add(w, ModKey{t.comp, t.m * sg}, F.neg(t.c), F);
    ModPoly h = reduce_work(std::move(w), basis, rank, arity, F, budget);
    if (h.is_zero()) continue;
    basis.push_back(make_monic(std::move(h), F));
    push_pairs(static_cast<int>(basis.size()) - 1);
  }

  // minimalize: drop elements whose lead is divisible by another lead
  std::vector<ModPoly> minimal;
  for (size_t i = 0; i < basis.size(); ++i) {
    bool redundant = false;
    for (size_t j = 0; j < basis.size() && !redundant; ++j) {
      if (i == j) continue;
      const auto& li = basis[i].lead();
      const auto& lj = basis[j].lead();
      if (lj.comp == li.comp && lj.m.divides(li.m)) {
        if (li.m == lj.m) {
          redundant = j < i;  // keep the earlier of equal leads
        } else {
          redundant = true;
        }
      }
    }
    if (!redundant) minimal.push_back(basis[i]);
  }
  // inter-reduce tails
  std::vector<ModPoly> reduced;
  for (size_t i = 0; i < minimal.size(); ++i) {
    std::vector<ModPoly> others;
    for (size_t j = 0; j < minimal.size(); ++j)
      if (j != i) others.push_back(minimal[j]);
    WorkMap w = to_work(minimal[i], cmp, F);
    ModPoly r = reduce_work(std::move(w), others, rank, arity, F, budget);
    reduced.push_back(make_monic(std::move(r), F));
  }
  std::sort(reduced.begin(), reduced.end(), [&](const ModPoly& a, const ModPoly& b) {
    return cmp(ModKey{a.lead().comp, a.lead().m}, ModKey{b.lead().comp, b.lead().m});
  });
  return reduced;
}

Poly mod_to_poly(const ModPoly& mp, const Field& F) {
  std::vector<Term> ts;
  for (const auto& t : mp.terms) ts.push_back(Term{t.m, t.c});
  return Poly::from_terms(mp.arity, std::move(ts), F);
}

ModPoly poly_to_mod(const Poly& p, int comp, int rank, const MonomialOrder& order, const Field& F) {
  return make_mod_poly(rank, {{comp, p}}, order, F);
}

}  // namespace

ModPoly make_mod_poly(int rank, std::vector<std::pair<int, Poly>> parts, const MonomialOrder& order,
                      const Field& F) {
  KeyGreater cmp{&order};
  WorkMap w(cmp);
  int arity = 0;
  for (auto& [comp, p] : parts) {
    arity = p.arity();
    if (comp < 0 || comp >= rank) throw std::invalid_argument("module component out of range");
    for (const auto& t : p.terms()) work_add(w, ModKey{comp, t.m}, t.c, F);
  }
  return from_work(rank, arity, w);
}

std::vector<ModPoly> module_gb(std::vector<ModPoly> gens, const MonomialOrder& order,
                               const Field& F, const GBOptions& opts) {
  if (gens.empty()) return {};
  int rank = gens.front().rank;
  int arity = gens.front().arity;
  for (auto& g : gens) {
    if (!g.is_zero() && (g.rank != rank)) throw std::invalid_argument("module rank mismatch");
  }
  return buchberger_module(std::move(gens), rank, arity, order, F, opts);
}

std::vector<Mono> GroebnerBasis::leading_terms() const {
  std::vector<Mono> lts;
  lts.reserve(gens.size());
  for (const auto& g : gens) {
    const Term* lead = nullptr;
    for (const auto& t : g.terms())
      if (!lead || order.greater(t.m, lead->m)) lead = &t;
    if (lead) lts.push_back(lead->m);
  }
  return lts;
}

GroebnerBasis buchberger_reduced(const std::vector<Poly>& gens, const MonomialOrder& order,
                                 const Field& F, const GBOptions& opts) {
  GroebnerBasis gb;
  gb.order = order;
  gb.field = F;
  gb.arity = static_cast<int>(order.priority.size());
  if (gens.empty()) return gb;
  int arity = gens.front().arity();
  if (arity != gb.arity) throw std::invalid_argument("order arity does not match generators");
  std::vector<ModPoly> mgens;
  for (const auto& g : gens) {
    if (g.arity() != arity) throw std::invalid_argument("generator arity mismatch");
    mgens.push_back(poly_to_mod(g, 0, 1, order, F));
  }
  auto mg = buchberger_module(std::move(mgens), 1, arity, order, F, opts);
  for (const auto& m : mg) gb.gens.push_back(mod_to_poly(m, F));
  return gb;
}

Poly normal_form(const Poly& f, const GroebnerBasis& gb, const GBOptions& opts) {
  if (!gb.gens.empty() && f.arity() != gb.gens.front().arity())
    throw std::invalid_argument("normal form arity mismatch");
  KeyGreater cmp{&gb.order};
  Budget budget{opts.reduction_budget};
  std::vector<ModPoly> basis;
  for (const auto& g : gb.gens) basis.push_back(poly_to_mod(g, 0, 1, gb.order, gb.field));
  WorkMap w = to_work(poly_to_mod(f, 0, 1, gb.order, gb.field), cmp, gb.field);
  ModPoly r = reduce_work(std::move(w), basis, 1, f.arity(), gb.field, budget);
  return mod_to_poly(r, gb.field);
}

bool ideal_contains(const GroebnerBasis& gb, const Poly& f) {
  return normal_form(f, gb).is_zero();
}

bool ideal_equal(const std::vector<Poly>& a, const std::vector<Poly>& b,
                 const MonomialOrder& order, const Field& F, const GBOptions& opts) {
  GroebnerBasis ga = buchberger_reduced(a, order, F, opts);
  GroebnerBasis gbb = buchberger_reduced(b, order, F, opts);
  if (ga.gens.size() != gbb.gens.size()) return false;
  for (size_t i = 0; i < ga.gens.size(); ++i)
    if (ga.gens[i] != gbb.gens[i]) return false;
  return true;
}

namespace {

std::vector<Mono> minimalize_monomials(std::vector<Mono> gens) {
  std::sort(gens.begin(), gens.end(), [](const Mono& a, const Mono& b) {
    return a.degree() < b.degree();
  });
  std::vector<Mono> out;
  for (const auto& m : gens) {
    bool divisible = false;
    for (const auto& g : out)
      if (g.divides(m)) {
        divisible = true;
        break;
      }
    if (!divisible) out.push_back(m);
  }
  return out;
}

// numerator of HS(R/I) over (1-T)^arity, I a minimal monomial ideal
ZPoly hs_numerator(std::vector<Mono> gens, int arity) {
  if (gens.empty()) return ZPoly::one();
  for (const auto& g : gens)
    if (g.degree() == 0) return ZPoly::zero();
  if (gens.size() == 1) {
    return ZPoly::one().sub(ZPoly::monomial(gens[0].degree(), 1));
  }
  if (gens.size() == 2) {
    // inclusion-exclusion with the principal intersection
    ZPoly r = ZPoly::one();
    r = r.sub(ZPoly::monomial(gens[0].degree(), 1));
    r = r.sub(ZPoly::monomial(gens[1].degree(), 1));
    r = r.add(ZPoly::monomial(gens[0].lcm(gens[1]).degree(), 1));
    return r;
  }
  // split variable-disjoint blocks
  {
    std::vector<int> block(gens.size(), -1);
    std::vector<int> var_block(arity, -1);
    int nblocks = 0;
    for (size_t i = 0; i < gens.size(); ++i) {
      if (block[i] >= 0) continue;
      int id = nblocks++;
      std::vector<size_t> stack{i};
      block[i] = id;
      while (!stack.empty()) {
        size_t g = stack.back();
        stack.pop_back();
        for (int v = 0; v < arity; ++v) {
          if (gens[g][v] == 0) continue;
          if (var_block[v] < 0) var_block[v] = id;
          for (size_t j = 0; j < gens.size(); ++j) {
            if (block[j] >= 0 || gens[j][v] == 0) continue;
            block[j] = id;
            stack.push_back(j);
          }
        }
      }
    }
    if (nblocks > 1) {
      ZPoly prod = ZPoly::one();
      for (int b = 0; b < nblocks; ++b) {
        std::vector<Mono> sub;
        for (size_t i = 0; i < gens.size(); ++i)
          if (block[i] == b) sub.push_back(gens[i]);
        prod = prod.mul(hs_numerator(std::move(sub), arity));
      }
      return prod;
    }
  }
  // pivot on the most shared variable
  std::vector<int> occur(arity, 0);
  for (const auto& g : gens)
    for (int v = 0; v < arity; ++v)
      if (g[v] > 0) occur[v]++;
  int pivot = static_cast<int>(std::max_element(occur.begin(), occur.end()) - occur.begin());

  // I + (x): x plus the generators not involving x
  std::vector<Mono> plus;
  Mono xv(arity);
  xv.bump(pivot);
  plus.push_back(xv);
  for (const auto& g : gens)
    if (g[pivot] == 0) plus.push_back(g);
  // I : x — reduce the pivot exponent by one where present
  std::vector<Mono> colon;
  for (const auto& g : gens) {
    if (g[pivot] == 0) {
      colon.push_back(g);
    } else {
      Mono h = g;
      h.bump(pivot, -1);
      colon.push_back(h);
    }
  }
  colon = minimalize_monomials(std::move(colon));
  ZPoly a = hs_numerator(std::move(plus), arity);
  ZPoly b = hs_numerator(std::move(colon), arity);
  return a.add(b.shift(1));
}

}  // namespace

RationalSeries monomial_quotient_hilbert(std::vector<Mono> gens, int arity) {
  auto minimal = minimalize_monomials(std::move(gens));
  return RationalSeries{hs_numerator(std::move(minimal), arity), arity}.reduced();
}

RationalSeries quotient_hilbert_rational(const GroebnerBasis& gb) {
  return monomial_quotient_hilbert(gb.leading_terms(), gb.arity);
}

TruncatedSeries quotient_hilbert(const GroebnerBasis& gb, int D) {
  return TruncatedSeries::from_rational(quotient_hilbert_rational(gb), D);
}

long count_standard_monomials(const std::vector<Mono>& lts, int arity, int d) {
  long count = 0;
  Mono cur(arity);
  std::function<void(int, int)> rec = [&](int var, int remaining) {
    if (var == arity - 1) {
      Mono m = cur;
      m.bump(var, remaining);
      for (const auto& lt : lts)
        if (lt.divides(m)) return;
      ++count;
      return;
    }
    for (int e = 0; e <= remaining; ++e) {
      Mono saved = cur;
      cur.bump(var, e);
      bool dominated = false;
      for (const auto& lt : lts) {
        bool over = true;
        for (int v = 0; v <= var; ++v)
          if (lt[v] > cur[v]) {
            over = false;
            break;
          }
        bool rest_free = true;
        for (int v = var + 1; v < arity; ++v)
          if (lt[v] > 0) {
            rest_free = false;
            break;
          }
        if (over && rest_free) {
          dominated = true;
          break;
        }
      }
      if (!dominated) rec(var + 1, remaining - e);
      cur = saved;
    }
  };
  if (arity == 0) return d == 0 ? 1 : 0;
  rec(0, d);
  return count;
}

RationalSeries module_quotient_hilbert(const std::vector<ModPoly>& gb, int rank, int arity) {
  std::vector<std::vector<Mono>> per_comp(rank);
  for (const auto& g : gb) {
    if (g.is_zero()) continue;
    per_comp[g.lead().comp].push_back(g.lead().m);
  }
  RationalSeries total = RationalSeries::zero();
  for (int t = 0; t < rank; ++t)
    total = total.add(monomial_quotient_hilbert(per_comp[t], arity));
  return total;
}

// ---- serialization & cache ----

std::string poly_serialize(const Poly& p) {
  std::ostringstream os;
  for (const auto& t : p.terms()) {
    os << t.c.get_str() << ":";
    for (int v = 0; v < p.arity(); ++v) {
      if (v) os << ",";
      os << t.m[v];
    }
    os << ";";
  }
  return os.str();
}

Poly poly_deserialize(const std::string& s, int arity, const Field& F) {
  std::vector<Term> terms;
  size_t pos = 0;
  while (pos < s.size()) {
    size_t colon = s.find(':', pos);
    size_t semi = s.find(';', colon);
    if (colon == std::string::npos || semi == std::string::npos)
      throw std::invalid_argument("malformed polynomial record");
    mpq_class c(s.substr(pos, colon - pos));
    c.canonicalize();
    std::vector<uint16_t> exps;
    std::istringstream es(s.substr(colon + 1, semi - colon - 1));
    std::string tok;
    while (std::getline(es, tok, ',')) exps.push_back(static_cast<uint16_t>(std::stoi(tok)));
    if (static_cast<int>(exps.size()) != arity)
      throw std::invalid_argument("polynomial record arity mismatch");
    terms.push_back(Term{Mono(std::move(exps)), c});
    pos = semi + 1;
  }
  return Poly::from_terms(arity, std::move(terms), F);
}

GBCache::GBCache(std::filesystem::path dir) : dir_(std::move(dir)) {
  std::filesystem::create_directories(dir_);
}

std::filesystem::path GBCache::file_for(const std::string& key) const {
  uint64_t h = 1469598103934665603ULL;
  for (unsigned char c : key) h = (h ^ c) * 1099511628211ULL;
  std::ostringstream os;
  os << std::hex << h << "-" << key.size() << ".gb";
  return dir_ / os.str();
}

std::optional<GroebnerBasis> GBCache::get(const std::string& key, const MonomialOrder& order,
                                          const Field& F) {
  std::lock_guard<std::mutex> lock(mu_);
  auto path = file_for(key);
  std::ifstream in(path);
  if (!in) return std::nullopt;
  std::string line;
  if (!std::getline(in, line) || line != key) return std::nullopt;
  if (!std::getline(in, line) || line != order.describe()) return std::nullopt;
  if (!std::getline(in, line) || line != F.describe()) return std::nullopt;
  if (!std::getline(in, line)) return std::nullopt;
  int arity = std::stoi(line);
  GroebnerBasis gb;
  gb.order = order;
  gb.field = F;
  gb.arity = arity;
  gb.source_key = key;
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    gb.gens.push_back(poly_deserialize(line, arity, F));
  }
  return gb;
}

void GBCache::put(const std::string& key, const GroebnerBasis& gb) {
  std::lock_guard<std::mutex> lock(mu_);
  auto path = file_for(key);
  auto tmp = path;
  tmp += ".tmp";
  {
    std::ofstream out(tmp);
    out << key << "\n" << gb.order.describe() << "\n" << gb.field.describe() << "\n";
    out << gb.arity << "\n";
    for (const auto& g : gb.gens) out << poly_serialize(g) << "\n";
  }
  std::filesystem::rename(tmp, path);
}

}  // namespace cubetor
