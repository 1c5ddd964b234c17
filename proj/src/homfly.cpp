#include "cubetor/homfly.hpp"

#include <algorithm>
#include <functional>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <vector>

#include "cubetor/field.hpp"

namespace cubetor {

void Laurent2::set(int ae, int qe, mpz_class v) {
  if (v == 0)
    c.erase({ae, qe});
  else
    c[{ae, qe}] = std::move(v);
}

void Laurent2::addc(int ae, int qe, const mpz_class& v) {
  auto key = std::make_pair(ae, qe);
  auto [it, fresh] = c.emplace(key, v);
  if (!fresh) {
    it->second += v;
    if (it->second == 0) c.erase(it);
  } else if (it->second == 0) {
    c.erase(it);
  }
}

Laurent2 Laurent2::add(const Laurent2& o) const {
  Laurent2 r = *this;
  for (const auto& [k, v] : o.c) r.addc(k.first, k.second, v);
  return r;
}

Laurent2 Laurent2::mul(const Laurent2& o) const {
  Laurent2 r;
  for (const auto& [k1, v1] : c)
    for (const auto& [k2, v2] : o.c) r.addc(k1.first + k2.first, k1.second + k2.second, v1 * v2);
  return r;
}

Laurent2 Laurent2::scale(const mpz_class& k) const {
  Laurent2 r;
  if (k == 0) return r;
  for (const auto& [key, v] : c) r.c[key] = v * k;
  return r;
}

Laurent2 Laurent2::mirror() const {
  Laurent2 r;
  for (const auto& [key, v] : c) r.c[{-key.first, -key.second}] = v;
  return r;
}

std::string Laurent2::to_string() const {
  if (c.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [key, v] : c) {
    mpz_class a = abs(v);
    if (first) {
      if (v < 0) os << "-";
    } else {
      os << (v < 0 ? " - " : " + ");
    }
    bool unit = (a == 1) && !(key.first == 0 && key.second == 0);
    if (!unit) os << a.get_str();
    if (key.first != 0) {
      if (!unit || os.str().size() == 0) os << (a == 1 ? "" : "*");
      os << "a^" << key.first;
    }
    if (key.second != 0) {
      if (key.first != 0 || a != 1) os << "*";
      os << "q^" << key.second;
    }
    first = false;
  }
  return os.str();
}

void Laurent1::addc(int e, const mpz_class& v) {
  auto [it, fresh] = c.emplace(e, v);
  if (!fresh) {
    it->second += v;
    if (it->second == 0) c.erase(it);
  } else if (it->second == 0) {
    c.erase(it);
  }
}

Laurent1 Laurent1::add(const Laurent1& o) const {
  Laurent1 r = *this;
  for (const auto& [e, v] : o.c) r.addc(e, v);
  return r;
}

Laurent1 Laurent1::mul(const Laurent1& o) const {
  Laurent1 r;
  for (const auto& [e1, v1] : c)
    for (const auto& [e2, v2] : o.c) r.addc(e1 + e2, v1 * v2);
  return r;
}

Laurent1 Laurent1::scale(const mpz_class& k) const {
  Laurent1 r;
  if (k == 0) return r;
  for (const auto& [e, v] : c) r.c[e] = v * k;
  return r;
}

Laurent1 Laurent1::shift(int by) const {
  Laurent1 r;
  for (const auto& [e, v] : c) r.c[e + by] = v;
  return r;
}

std::string Laurent1::to_string_T() const {
  if (c.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [e, v] : c) {
    mpz_class a = abs(v);
    if (first) {
      if (v < 0) os << "-";
    } else {
      os << (v < 0 ? " - " : " + ");
    }
    if (a != 1 || e == 0) os << a.get_str();
    if (e != 0) {
      if (a != 1) os << "*";
      os << "T^";
      if (e % 2 == 0)
        os << e / 2;
      else
        os << "(" << e << "/2)";
    }
    first = false;
  }
  return os.str();
}

std::string HomflyPolynomial::to_string() const {
  std::string s = num.to_string();
  if (skein_denom_pow > 0)
    s = "(" + s + ") / (q - q^-1)^" + std::to_string(skein_denom_pow);
  return s;
}

namespace {

using Perm = std::vector<uint8_t>;
// coefficient ring Z[q^{\pm}][z]: key = (z-degree, q-exponent)
using ZQ = Laurent2;
using HeckeState = std::map<Perm, ZQ>;

void state_add(HeckeState& st, const Perm& w, const ZQ& v) {
  if (v.is_zero()) return;
  auto [it, fresh] = st.emplace(w, v);
  if (!fresh) {
    it->second = it->second.add(v);
    if (it->second.is_zero()) st.erase(it);
  }
}

// right multiplication by T_i^{sign}
HeckeState right_mul(const HeckeState& st, int i, int sign) {
  HeckeState out;
  ZQ skein;  // q - q^{-1}
  skein.addc(0, 1, 1);
  skein.addc(0, -1, -1);
  for (const auto& [w, coef] : st) {
    Perm ws = w;
    std::swap(ws[i], ws[i + 1]);
    bool ascending = w[i] < w[i + 1];
    if (sign > 0) {
      if (ascending) {
        state_add(out, ws, coef);
      } else {
        state_add(out, ws, coef);
        state_add(out, w, coef.mul(skein));
      }
    } else {
      if (ascending) {
        state_add(out, ws, coef);
        state_add(out, w, coef.mul(skein).scale(-1));
      } else {
        state_add(out, ws, coef);
      }
    }
  }
  return out;
}

// Ocneanu trace as a polynomial in z with Laurent-q coefficients
ZQ ocneanu_trace(HeckeState st, int n) {
  for (int level = n; level > 1; --level) {
    HeckeState next;
    for (const auto& [w, coef] : st) {
      int pos = -1;
      for (int j = 0; j < level; ++j)
        if (w[j] == level - 1) {
          pos = j;
          break;
        }
      if (pos == level - 1) {
        Perm wr(w.begin(), w.end() - 1);
        state_add(next, wr, coef);
        continue;
      }
      // w = wbar . (s_{level-2} ... s_{pos}) with additive lengths, so
      // tr(T_w) picks up one factor z and the residual chain multiplies back
      Perm wbar = w;
      for (int j = pos; j <= level - 2; ++j) std::swap(wbar[j], wbar[j + 1]);
      wbar.pop_back();
      ZQ zcoef;
      for (const auto& [k, v] : coef.c) zcoef.addc(k.first + 1, k.second, v);
      HeckeState h;
      h.emplace(wbar, zcoef);
      for (int j = level - 3; j >= pos; --j) h = right_mul(h, j, +1);
      for (const auto& [wp, vp] : h) state_add(next, wp, vp);
    }
    st = std::move(next);
  }
  ZQ total;
  for (const auto& [w, coef] : st) total = total.add(coef);
  return total;
}

// exact division of each a-slice by (q - q^{-1}); nullopt if not divisible
std::optional<Laurent2> divide_skein(const Laurent2& f) {
  if (f.is_zero()) return f;
  std::map<int, std::map<int, mpz_class>> slices;
  for (const auto& [k, v] : f.c) slices[k.first][k.second] = v;
  Laurent2 out;
  for (auto& [ae, slice] : slices) {
    // multiply by q, then long-divide by q^2 - 1 from the top
    std::map<int, mpz_class> h;
    for (const auto& [qe, v] : slice) h[qe + 1] = v;
    const int floor_exp = h.begin()->first;
    while (!h.empty() && std::prev(h.end())->first >= floor_exp + 2) {
      auto it = std::prev(h.end());
      int e = it->first;
      mpz_class v = it->second;
      h.erase(it);
      out.addc(ae, e - 2, v);
      auto [jt, fresh] = h.emplace(e - 2, v);
      if (!fresh) {
        jt->second += v;
        if (jt->second == 0) h.erase(jt);
      }
    }
    if (!h.empty()) return std::nullopt;  // remainder
  }
  Laurent2 skein;
  skein.addc(0, 1, 1);
  skein.addc(0, -1, -1);
  if (out.mul(skein) == f) return out;
  return std::nullopt;
}

}  // namespace

HomflyPolynomial homfly_skein_oracle(const BraidWord& w, const SkeinOptions& opts) {
  const int n = w.strand_count;
  if (n > opts.max_strands || w.crossing_count() > opts.max_letters)
    throw ResourceError("skein oracle budget exceeded (strands/letters)");
  int writhe = 0;
  Perm id(n);
  for (int i = 0; i < n; ++i) id[i] = static_cast<uint8_t>(i);
  HeckeState st;
  ZQ one;
  one.addc(0, 0, 1);
  st.emplace(id, one);
  for (int letter : w.letters) {
    int i = std::abs(letter) - 1;
    st = right_mul(st, i, letter > 0 ? +1 : -1);
    writhe += letter > 0 ? +1 : -1;
  }
  ZQ tr = ocneanu_trace(std::move(st), n);

  // P = a^{-writhe} delta^{n-1} tr, with z^m delta^{n-1} =
  //     a^m (q - q^{-1})^{m-(n-1)} (a - a^{-1})^{n-1-m}
  Laurent2 numerator;
  for (const auto& [k, v] : tr.c) {
    int m = k.first;
    int qe = k.second;
    if (m > n - 1) throw std::logic_error("trace z-degree exceeds strand bound");
    Laurent2 term;
    term.addc(m - writhe, qe, v);
    // (q - q^{-1})^m
    Laurent2 skein;
    skein.addc(0, 1, 1);
    skein.addc(0, -1, -1);
    for (int t = 0; t < m; ++t) term = term.mul(skein);
    Laurent2 adiff;
    adiff.addc(1, 0, 1);
    adiff.addc(-1, 0, -1);
    for (int t = 0; t < n - 1 - m; ++t) term = term.mul(adiff);
    numerator = numerator.add(term);
  }
  HomflyPolynomial P;
  P.num = numerator;
  P.skein_denom_pow = n - 1;
  while (P.skein_denom_pow > 0) {
    auto q = divide_skein(P.num);
    if (!q) break;
    P.num = *q;
    P.skein_denom_pow -= 1;
  }
  return P;
}

Laurent1 homfly_alexander_specialization(const HomflyPolynomial& p) {
  if (!p.is_laurent())
    throw std::domain_error("Alexander specialization needs a genuine Laurent polynomial (knot)");
  Laurent1 out;
  for (const auto& [k, v] : p.num.c) out.addc(k.second, v);  // a = 1, t-exp = q-exp
  return out;
}

namespace {

struct ArcFinder {
  std::vector<int> up;
  explicit ArcFinder(int n) : up(n) {
    for (int i = 0; i < n; ++i) up[i] = i;
  }
  int find(int x) {
    while (up[x] != x) x = up[x] = up[up[x]];
    return x;
  }
  void unite(int a, int b) { up[find(a)] = find(b); }
};

using TPoly = std::map<int, mpz_class>;  // Laurent in T

void tadd(TPoly& p, int e, const mpz_class& v) {
  auto [it, fresh] = p.emplace(e, v);
  if (!fresh) {
    it->second += v;
    if (it->second == 0) p.erase(it);
  } else if (it->second == 0) {
    p.erase(it);
  }
}

TPoly tmul(const TPoly& a, const TPoly& b) {
  TPoly r;
  for (const auto& [e1, v1] : a)
    for (const auto& [e2, v2] : b) tadd(r, e1 + e2, v1 * v2);
  return r;
}

TPoly tsub(const TPoly& a, const TPoly& b) {
  TPoly r = a;
  for (const auto& [e, v] : b) tadd(r, e, -v);
  return r;
}

// cofactor determinant; matrices here stay small
TPoly det(const std::vector<std::vector<TPoly>>& M) {
  const int n = static_cast<int>(M.size());
  if (n == 0) return TPoly{{0, 1}};
  std::function<TPoly(int, uint32_t)> rec = [&](int row, uint32_t colmask) -> TPoly {
    if (row == n) return TPoly{{0, 1}};
    TPoly acc;
    int sign = 1;
    for (int c = 0; c < n; ++c) {
      if (colmask & (1u << c)) continue;
      if (!M[row][c].empty()) {
        TPoly sub = rec(row + 1, colmask | (1u << c));
        TPoly term = tmul(M[row][c], sub);
        if (sign < 0) term = tsub(TPoly{}, term);
        for (const auto& [e, v] : term) tadd(acc, e, v);
      }
      sign = -sign;
    }
    return acc;
  };
  return rec(0, 0);
}

}  // namespace

Laurent1 alexander_oracle(const DecoratedDiagram& d) {
  const int n = d.crossing_count();
  Laurent1 one;
  one.addc(0, 1);
  if (n <= 1) return one;

  ArcFinder arcs(d.edge_count);
  if (d.e0 != d.e1) arcs.unite(d.e0, d.e1);
  for (const auto& cr : d.crossings) {
    if (cr.sign > 0)
      arcs.unite(cr.c, cr.b);  // the strand entering lower-left passes over
    else
      arcs.unite(cr.d, cr.a);
  }
  std::map<int, int> arc_index;
  for (int e = 0; e < d.edge_count; ++e) {
    int r = arcs.find(e);
    if (!arc_index.count(r)) arc_index[r] = static_cast<int>(arc_index.size());
  }
  const int A = static_cast<int>(arc_index.size());
  auto arc = [&](int e) { return arc_index.at(arcs.find(e)); };

  std::vector<std::vector<TPoly>> M(n, std::vector<TPoly>(A));
  for (int t = 0; t < n; ++t) {
    const auto& cr = d.crossings[t];
    int o, uin, uout, s;
    if (cr.sign > 0) {
      o = arc(cr.c);
      uin = arc(cr.d);
      uout = arc(cr.a);
      s = +1;
    } else {
      o = arc(cr.d);
      uin = arc(cr.c);
      uout = arc(cr.b);
      s = -1;
    }
    tadd(M[t][o], 0, 1);
    tadd(M[t][o], s, -1);  // 1 - t^{±1}
    tadd(M[t][uin], s, 1);
    tadd(M[t][uout], 0, -1);
  }

  // delete the distinguished arc's column and the last row
  int drop = arc(d.e0);
  std::vector<std::vector<TPoly>> minor;
  for (int r = 0; r + 1 < n; ++r) {
    std::vector<TPoly> row;
    for (int cidx = 0; cidx < A; ++cidx)
      if (cidx != drop) row.push_back(M[r][cidx]);
    if (static_cast<int>(row.size()) != n - 1)
      throw std::logic_error("unexpected Alexander matrix shape");
    minor.push_back(std::move(row));
  }
  TPoly f = det(minor);
  if (f.empty()) throw std::logic_error("vanishing Alexander determinant on a knot diagram");

  // normalize: symmetric representative with value 1 at T = 1
  int lo = f.begin()->first, hi = std::prev(f.end())->first;
  if ((hi - lo) % 2 != 0)
    throw std::logic_error("odd-span Alexander polynomial: closure is not a knot");
  int center = (lo + hi) / 2;
  mpz_class at_one = 0;
  for (const auto& [e, v] : f) at_one += v;
  if (at_one != 1 && at_one != -1)
    throw std::logic_error("Alexander determinant is not a unit at T=1: closure is not a knot");
  Laurent1 out;
  for (const auto& [e, v] : f) out.addc(2 * (e - center), at_one < 0 ? -v : v);
  // symmetry check
  for (const auto& [e, v] : out.c)
    if (out.c.count(-e) == 0 || out.c.at(-e) != v)
      throw std::logic_error("Alexander polynomial failed symmetry normalization");
  return out;
}

Laurent1 alexander_oracle(const BraidWord& w) {
  return alexander_oracle(build_decorated_diagram(w));
}

}  // namespace cubetor
