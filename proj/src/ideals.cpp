#include "cubetor/ideals.hpp"

#include <algorithm>
#include <functional>
#include <set>
#include <sstream>

namespace cubetor {

std::vector<Poly> IdealSpec::polys() const {
  std::vector<Poly> out;
  out.reserve(gens.size());
  for (const auto& gi : gens) out.push_back(gi.poly);
  return out;
}

std::string IdealSpec::to_string(const std::vector<std::string>& names) const {
  std::ostringstream os;
  os << "(";
  for (size_t i = 0; i < gens.size(); ++i) {
    if (i) os << ", ";
    os << gens[i].poly.to_string(names);
  }
  os << ")";
  return os.str();
}

Poly vertex_linear(const PartialBraidGraph& g, int vertex, const Field& F) {
  const auto& v = g.vertices.at(vertex);
  if (v.kind != VertexKind::FourValent)
    throw std::invalid_argument("linear generators come from four-valent vertices");
  return Poly::linear(g.edge_count,
                      {{v.out[0], 1}, {v.out[1], 1}, {v.in[0], -1}, {v.in[1], -1}}, F);
}

Poly vertex_local(const PartialBraidGraph& g, int vertex, const Field& F) {
  const auto& v = g.vertices.at(vertex);
  const int arity = g.edge_count;
  if (v.kind == VertexKind::FourValent) {
    Poly ab = Poly::variable(arity, v.out[0], F).mul(Poly::variable(arity, v.out[1], F), F);
    Poly cd = Poly::variable(arity, v.in[0], F).mul(Poly::variable(arity, v.in[1], F), F);
    return ab.sub(cd, F);
  }
  return Poly::linear(arity, {{v.out[0], 1}, {v.in[0], -1}}, F);
}

Poly nonlocal_generator(const PartialBraidGraph& g, const std::vector<int>& subset,
                        const Field& F) {
  const int arity = g.edge_count;
  Poly out_prod = Poly::constant(arity, 1, F);
  for (int e : g.exterior_out(subset)) out_prod = out_prod.mul(Poly::variable(arity, e, F), F);
  Poly in_prod = Poly::constant(arity, 1, F);
  for (int e : g.exterior_in(subset)) in_prod = in_prod.mul(Poly::variable(arity, e, F), F);
  return out_prod.sub(in_prod, F);
}

IdealSpec linear_ideal(const PartialBraidGraph& g, const Field& F) {
  IdealSpec s;
  s.kind = IdealKind::Linear;
  s.arity = g.edge_count;
  for (int vi = 0; vi < g.vertex_count(); ++vi) {
    if (g.vertices[vi].kind != VertexKind::FourValent) continue;
    s.gens.push_back(GeneratorInfo{vertex_linear(g, vi, F), "L(p" + std::to_string(vi) + ")", {vi}});
  }
  return s;
}

IdealSpec quadratic_ideal(const PartialBraidGraph& g, const Field& F) {
  IdealSpec s;
  s.kind = IdealKind::Quadratic;
  s.arity = g.edge_count;
  std::set<int> specials(g.special.begin(), g.special.end());
  for (int vi = 0; vi < g.vertex_count(); ++vi) {
    if (specials.count(vi)) continue;
    s.gens.push_back(GeneratorInfo{vertex_local(g, vi, F), "Q(p" + std::to_string(vi) + ")", {vi}});
  }
  return s;
}

bool nonlocal_complete(const PartialBraidGraph& g, NonlocalOptions opts) {
  const int m = g.vertex_count();
  if (m < 63 && (1LL << m) <= opts.subset_limit) return true;
  return false;
}

IdealSpec nonlocal_ideal(const PartialBraidGraph& g, const Field& F, NonlocalOptions opts) {
  const int m = g.vertex_count();
  IdealSpec s;
  s.kind = IdealKind::Nonlocal;
  s.arity = g.edge_count;
  if (!nonlocal_complete(g, opts) && opts.cap < 0)
    throw ResourceError("2^" + std::to_string(m) +
                        " vertex subsets exceed the enumeration limit; pass a subset-size cap");
  if (nonlocal_complete(g, opts)) {
    for (long mask = 1; mask < (1L << m); ++mask) {
      std::vector<int> subset;
      for (int i = 0; i < m; ++i)
        if (mask & (1L << i)) subset.push_back(i);
      if (opts.cap >= 0 && static_cast<int>(subset.size()) > opts.cap) continue;
      std::ostringstream tag;
      tag << "N{";
      for (size_t i = 0; i < subset.size(); ++i) tag << (i ? "," : "") << "p" << subset[i];
      tag << "}";
      s.gens.push_back(GeneratorInfo{nonlocal_generator(g, subset, F), tag.str(), subset});
    }
    return s;
  }
  // capped enumeration by subset size
  std::vector<int> subset;
  std::function<void(int)> rec = [&](int start) {
    if (!subset.empty()) {
      std::ostringstream tag;
      tag << "N{";
      for (size_t i = 0; i < subset.size(); ++i) tag << (i ? "," : "") << "p" << subset[i];
      tag << "}";
      s.gens.push_back(GeneratorInfo{nonlocal_generator(g, subset, F), tag.str(), subset});
    }
    if (static_cast<int>(subset.size()) == opts.cap) return;
    for (int v = start; v < m; ++v) {
      subset.push_back(v);
      rec(v + 1);
      subset.pop_back();
    }
  };
  rec(0);
  return s;
}

IdealSpec edge_ring_relations(const DecoratedDiagram& d, const Field& F) {
  IdealSpec s;
  s.kind = IdealKind::EdgeRing;
  s.arity = d.edge_count;
  for (int t = 0; t < d.crossing_count(); ++t) {
    const Crossing& c = d.crossings[t];
    Poly L = Poly::linear(d.edge_count, {{c.a, 1}, {c.b, 1}, {c.c, -1}, {c.d, -1}}, F);
    s.gens.push_back(GeneratorInfo{L, "L(c" + std::to_string(t) + ")", {t}});
  }
  return s;
}

IdealSpec ideal_sum(const IdealSpec& a, const IdealSpec& b) {
  if (a.arity != b.arity) throw std::invalid_argument("ideal arity mismatch");
  IdealSpec s;
  s.kind = IdealKind::Sum;
  s.arity = a.arity;
  s.gens = a.gens;
  s.gens.insert(s.gens.end(), b.gens.begin(), b.gens.end());
  return s;
}

}  // namespace cubetor
