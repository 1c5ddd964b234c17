#include "cubetor/symfunc.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <set>

#include "cubetor/ideals.hpp"

namespace cubetor {

Poly elem_sym(const std::vector<int>& vars, int k, int arity, const Field& F) {
  if (k < 0) return Poly::zero(arity);
  std::vector<Poly> E(k + 1, Poly::zero(arity));
  E[0] = Poly::constant(arity, 1, F);
  for (int v : vars) {
    Poly y = Poly::variable(arity, v, F);
    for (int j = k; j >= 1; --j) E[j] = E[j].add(y.mul(E[j - 1], F), F);
  }
  return E[k];
}

Poly comp_hom(const std::vector<int>& vars, int k, int arity, const Field& F) {
  if (k < 0) return Poly::zero(arity);
  std::vector<Poly> H(k + 1, Poly::zero(arity));
  H[0] = Poly::constant(arity, 1, F);
  for (int v : vars) {
    Poly y = Poly::variable(arity, v, F);
    for (int j = 1; j <= k; ++j) H[j] = H[j].add(y.mul(H[j - 1], F), F);
  }
  return H[k];
}

bool verify_lemma_alternating(int m, int n, const Field& F) {
  std::vector<int> ys(m);
  for (int i = 0; i < m; ++i) ys[i] = i;
  Poly acc = Poly::zero(m);
  for (int l = 0; l <= n; ++l) {
    Poly t = elem_sym(ys, n - l, m, F).mul(comp_hom(ys, l, m, F), F);
    acc = (l % 2 == 0) ? acc.add(t, F) : acc.sub(t, F);
  }
  return acc.is_zero();
}

bool verify_lemma_split(int n, int m, const Field& F) {
  const int arity = n + m;
  std::vector<int> ys(n), zs(m), all(arity);
  for (int i = 0; i < n; ++i) ys[i] = i;
  for (int i = 0; i < m; ++i) zs[i] = n + i;
  for (int i = 0; i < arity; ++i) all[i] = i;
  Poly acc = Poly::zero(arity);
  for (int l = 0; l <= n; ++l) {
    Poly t = elem_sym(all, n - l, arity, F).mul(comp_hom(zs, l, arity, F), F);
    acc = (l % 2 == 0) ? acc.add(t, F) : acc.sub(t, F);
  }
  return acc == elem_sym(ys, n, arity, F);
}

bool verify_lemma_identities(int max_m, int max_n, const Field& F) {
  for (int m = 1; m <= max_m; ++m)
    for (int n = 1; n <= max_n; ++n)
      if (!verify_lemma_alternating(m, n, F)) return false;
  for (int n = 0; n <= max_n; ++n)
    for (int m = 0; m <= max_m; ++m)
      if (!verify_lemma_split(n, m, F)) return false;
  return true;
}

namespace {

std::vector<int> multiset_to_list(const std::map<int, int>& ms) {
  std::vector<int> out;
  for (const auto& [e, mult] : ms)
    for (int i = 0; i < mult; ++i) out.push_back(e);
  return out;
}

/// sum_{j >= 0} (-1)^j S_{top-j}(G) H_j(B)
Poly alternating_coefficient(const std::vector<int>& G, const std::vector<int>& B, int top,
                             int arity, const Field& F) {
  Poly acc = Poly::zero(arity);
  for (int j = 0; j <= top; ++j) {
    Poly t = elem_sym(G, top - j, arity, F).mul(comp_hom(B, j, arity, F), F);
    acc = (j % 2 == 0) ? acc.add(t, F) : acc.sub(t, F);
  }
  return acc;
}

Certificate certificate_for_component(const PartialBraidGraph& g, const std::vector<int>& subset,
                                      const Field& F) {
  const int arity = g.edge_count;
  Certificate cert;
  cert.target = nonlocal_generator(g, subset, F);
  if (subset.empty()) {
    cert.verified = cert.target.is_zero();
    return cert;
  }
  SweepDecomposition sd = sweep_decomposition_subset(g, subset);
  const int n = static_cast<int>(g.exterior_in(subset).size());
  std::vector<int> ordered(subset);
  std::sort(ordered.begin(), ordered.end());
  for (size_t idx = 0; idx < ordered.size(); ++idx) {
    int vi = ordered[idx];
    std::vector<int> G = multiset_to_list(sd.G[idx]);
    Poly A = alternating_coefficient(G, sd.strands, n - 1, arity, F);
    if (g.vertices[vi].kind == VertexKind::FourValent) {
      Poly B = alternating_coefficient(G, sd.strands, n - 2, arity, F);
      cert.terms.push_back(CertificateTerm{vi, 'L', A});
      cert.terms.push_back(CertificateTerm{vi, 'Q', B});
    } else {
      cert.terms.push_back(CertificateTerm{vi, 'Q', A});
    }
  }
  return cert;
}

std::vector<std::vector<int>> subgraph_components(const PartialBraidGraph& g,
                                                  const std::vector<int>& subset) {
  std::set<int> W(subset.begin(), subset.end());
  std::map<int, int> parent;
  for (int v : subset) parent[v] = v;
  std::function<int(int)> find = [&](int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  // unite vertices sharing an edge (both endpoints inside the subset)
  std::map<int, int> src, tgt;
  for (size_t vi = 0; vi < g.vertices.size(); ++vi) {
    if (!W.count(static_cast<int>(vi))) continue;
    for (int e : g.vertices[vi].out)
      if (e >= 0) src[e] = static_cast<int>(vi);
    for (int e : g.vertices[vi].in)
      if (e >= 0) tgt[e] = static_cast<int>(vi);
  }
  for (const auto& [e, sv] : src) {
    auto it = tgt.find(e);
    if (it != tgt.end()) parent[find(sv)] = find(it->second);
  }
  std::map<int, std::vector<int>> groups;
  for (int v : subset) groups[find(v)].push_back(v);
  std::vector<std::vector<int>> out;
  for (auto& [root, vs] : groups) {
    std::sort(vs.begin(), vs.end());
    out.push_back(vs);
  }
  std::sort(out.begin(), out.end());
  return out;
}

Poly product_of_edges(const std::vector<int>& edges, int arity, const Field& F) {
  Poly p = Poly::constant(arity, 1, F);
  for (int e : edges) p = p.mul(Poly::variable(arity, e, F), F);
  return p;
}

}  // namespace

Poly Certificate::residual(const PartialBraidGraph& g, const Field& F) const {
  Poly acc = target.neg(F);
  for (const auto& t : terms) {
    Poly gen = t.kind == 'L' ? vertex_linear(g, t.vertex, F) : vertex_local(g, t.vertex, F);
    acc = acc.add(t.coefficient.mul(gen, F), F);
  }
  return acc;
}

Certificate cube_identity_certificate(const PartialBraidGraph& g, const Field& F) {
  Certificate cert = certificate_for_component(g, g.all_vertices(), F);
  cert.verified = cert.residual(g, F).is_zero();
  std::set<int> specials(g.special.begin(), g.special.end());
  for (const auto& t : cert.terms)
    if (t.kind == 'Q' && specials.count(t.vertex) && !t.coefficient.is_zero())
      cert.uses_special = true;
  return cert;
}

Certificate nonlocal_membership_certificate(const PartialBraidGraph& g,
                                            const std::vector<int>& subset, const Field& F) {
  if (subset.empty()) throw std::invalid_argument("subset must be nonempty");
  const int arity = g.edge_count;
  auto components = subgraph_components(g, subset);
  Certificate cert;
  cert.target = nonlocal_generator(g, subset, F);
  // N(C_1 u ... u C_r) = sum_j In(C_1)..In(C_{j-1}) * N(C_j) * Out(C_{j+1})..Out(C_r)
  for (size_t j = 0; j < components.size(); ++j) {
    Poly pre = Poly::constant(arity, 1, F);
    for (size_t l = 0; l < j; ++l)
      pre = pre.mul(product_of_edges(g.exterior_in(components[l]), arity, F), F);
    Poly post = Poly::constant(arity, 1, F);
    for (size_t l = j + 1; l < components.size(); ++l)
      post = post.mul(product_of_edges(g.exterior_out(components[l]), arity, F), F);
    Poly factor = pre.mul(post, F);
    Certificate part = certificate_for_component(g, components[j], F);
    for (auto& t : part.terms) {
      t.coefficient = t.coefficient.mul(factor, F);
      if (!t.coefficient.is_zero()) cert.terms.push_back(t);
    }
  }
  cert.verified = cert.residual(g, F).is_zero();
  std::set<int> specials(g.special.begin(), g.special.end());
  for (const auto& t : cert.terms)
    if (t.kind == 'Q' && specials.count(t.vertex) && !t.coefficient.is_zero())
      cert.uses_special = true;
  return cert;
}

}  // namespace cubetor
