#include "cubetor/braid.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <set>
#include <sstream>
#include <stdexcept>

#include <json.hpp>

namespace cubetor {

using nlohmann::json;

int BraidWord::n_plus() const {
  int n = 0;
  for (int l : letters)
    if (l > 0) ++n;
  return n;
}

int BraidWord::n_minus() const { return crossing_count() - n_plus(); }

std::string BraidWord::to_string() const {
  std::ostringstream os;
  for (size_t i = 0; i < letters.size(); ++i) {
    if (i) os << " ";
    os << letters[i];
  }
  return os.str();
}

BraidWord parse_braid_word(const std::string& text, int strands_override) {
  BraidWord w;
  std::istringstream is(text);
  std::string tok;
  int max_abs = 0;
  while (is >> tok) {
    size_t pos = 0;
    int v;
    try {
      v = std::stoi(tok, &pos);
    } catch (const std::exception&) {
      throw std::invalid_argument("malformed braid letter: '" + tok + "'");
    }
    if (pos != tok.size()) throw std::invalid_argument("malformed braid letter: '" + tok + "'");
    if (v == 0) throw std::invalid_argument("braid letters must be nonzero");
    w.letters.push_back(v);
    max_abs = std::max(max_abs, std::abs(v));
  }
  if (w.letters.empty()) throw std::invalid_argument("empty braid word");
  w.strand_count = strands_override > 0 ? strands_override : max_abs + 1;
  if (max_abs >= w.strand_count)
    throw std::invalid_argument("letter exceeds strand count");
  return w;
}

DecoratedDiagram DecoratedDiagram::unknot() {
  DecoratedDiagram d;
  d.word.strand_count = 1;
  d.edge_count = 1;
  d.e0 = 0;
  d.e1 = 0;
  return d;
}

namespace {

struct UnionFind {
  std::vector<int> up;
  explicit UnionFind(int n) : up(n) {
    for (int i = 0; i < n; ++i) up[i] = i;
  }
  int find(int x) {
    while (up[x] != x) x = up[x] = up[up[x]];
    return x;
  }
  void unite(int a, int b) { up[find(a)] = find(b); }
};

}  // namespace

DecoratedDiagram build_decorated_diagram(const BraidWord& w) {
  const int s = w.strand_count;
  const int n = w.crossing_count();
  DecoratedDiagram d;
  d.word = w;

  // provisional edges: s bottom edges, then two fresh per crossing
  int prov = s;
  std::vector<int> bottom(s), cur(s);
  for (int j = 0; j < s; ++j) bottom[j] = cur[j] = j;
  struct ProvCrossing {
    int sign, a, b, c, d;
  };
  std::vector<ProvCrossing> pcs;
  pcs.reserve(n);
  for (int t = 0; t < n; ++t) {
    int i = std::abs(w.letters[t]) - 1;  // acts on positions i, i+1
    ProvCrossing pc;
    pc.sign = w.letters[t] > 0 ? +1 : -1;
    pc.c = cur[i];
    pc.d = cur[i + 1];
    pc.a = prov++;
    pc.b = prov++;
    cur[i] = pc.a;
    cur[i + 1] = pc.b;
    pcs.push_back(pc);
  }

  UnionFind uf(prov);
  // close up positions 2..s; position 1 is cut at the gray dot instead
  for (int j = 1; j < s; ++j) uf.unite(cur[j], bottom[j]);

  // final ids: e0 (lower segment of the distinguished edge) = 0, e1 = 1,
  // then bottom-to-top, left-to-right
  std::map<int, int> id_of;
  int next = 0;
  auto assign = [&](int prov_edge) {
    int r = uf.find(prov_edge);
    if (!id_of.count(r)) id_of[r] = next++;
    return id_of[r];
  };
  d.e0 = assign(bottom[0]);
  d.e1 = assign(cur[0]);
  std::vector<int> strand_ids;
  for (int j = 1; j < s; ++j) strand_ids.push_back(assign(bottom[j]));
  for (const auto& pc : pcs) {
    assign(pc.a);
    assign(pc.b);
  }
  d.edge_count = next;
  for (const auto& pc : pcs) {
    Crossing c;
    c.sign = pc.sign;
    c.a = assign(pc.a);
    c.b = assign(pc.b);
    c.c = assign(pc.c);
    c.d = assign(pc.d);
    d.crossings.push_back(c);
  }
  d.strands = strand_ids;
  return d;
}

int ResolutionAssignment::norm() const {
  int s = 0;
  for (int b : bits) s += b;
  return s;
}

ResolutionAssignment ResolutionAssignment::all(int n, int bit) {
  ResolutionAssignment a;
  a.bits.assign(n, bit);
  return a;
}

ResolutionAssignment ResolutionAssignment::from_string(const std::string& bits01) {
  ResolutionAssignment a;
  for (char c : bits01) {
    if (c == '0')
      a.bits.push_back(0);
    else if (c == '1')
      a.bits.push_back(1);
    else
      throw std::invalid_argument("assignment must be a 0/1 string");
  }
  return a;
}

std::string ResolutionAssignment::to_string() const {
  std::string s;
  for (int b : bits) s += b ? '1' : '0';
  return s;
}

int PartialBraidGraph::four_valent_count() const {
  int c = 0;
  for (const auto& v : vertices)
    if (v.kind == VertexKind::FourValent) ++c;
  return c;
}

std::vector<int> PartialBraidGraph::edge_components(int* count) const {
  UnionFind uf(edge_count);
  for (const auto& v : vertices) {
    std::vector<int> inc;
    for (int e : v.out)
      if (e >= 0) inc.push_back(e);
    for (int e : v.in)
      if (e >= 0) inc.push_back(e);
    for (size_t i = 1; i < inc.size(); ++i) uf.unite(inc[0], inc[i]);
  }
  std::map<int, int> index;
  std::vector<int> comp(edge_count);
  for (int e = 0; e < edge_count; ++e) {
    int r = uf.find(e);
    auto [it, fresh] = index.emplace(r, static_cast<int>(index.size()));
    comp[e] = it->second;
    (void)fresh;
  }
  if (count) *count = static_cast<int>(index.size());
  return comp;
}

int PartialBraidGraph::component_count() const {
  int c = 0;
  edge_components(&c);
  return c;
}

std::vector<int> PartialBraidGraph::all_vertices() const {
  std::vector<int> v(vertices.size());
  for (size_t i = 0; i < v.size(); ++i) v[i] = static_cast<int>(i);
  return v;
}

namespace {
// source[e] / target[e]: vertex index the edge leaves / enters, or -1.
void incidence(const PartialBraidGraph& g, std::vector<int>& source, std::vector<int>& target) {
  source.assign(g.edge_count, -1);
  target.assign(g.edge_count, -1);
  for (size_t vi = 0; vi < g.vertices.size(); ++vi) {
    const auto& v = g.vertices[vi];
    for (int e : v.out)
      if (e >= 0) source[e] = static_cast<int>(vi);
    for (int e : v.in)
      if (e >= 0) target[e] = static_cast<int>(vi);
  }
}
}  // namespace

std::vector<int> PartialBraidGraph::exterior_in(const std::vector<int>& vertex_subset) const {
  std::vector<int> src, tgt;
  incidence(*this, src, tgt);
  std::set<int> W(vertex_subset.begin(), vertex_subset.end());
  std::vector<int> out;
  for (int e = 0; e < edge_count; ++e)
    if (tgt[e] >= 0 && W.count(tgt[e]) && !(src[e] >= 0 && W.count(src[e]))) out.push_back(e);
  return out;
}

std::vector<int> PartialBraidGraph::exterior_out(const std::vector<int>& vertex_subset) const {
  std::vector<int> src, tgt;
  incidence(*this, src, tgt);
  std::set<int> W(vertex_subset.begin(), vertex_subset.end());
  std::vector<int> out;
  for (int e = 0; e < edge_count; ++e)
    if (src[e] >= 0 && W.count(src[e]) && !(tgt[e] >= 0 && W.count(tgt[e]))) out.push_back(e);
  return out;
}

std::vector<std::string> PartialBraidGraph::names() const {
  if (!edge_names.empty()) return edge_names;
  std::vector<std::string> fallback(edge_count);
  for (int i = 0; i < edge_count; ++i) fallback[i] = "U" + std::to_string(i);
  return fallback;
}

void PartialBraidGraph::validate() const {
  auto check_edge = [&](int e) {
    if (e < 0 || e >= edge_count) throw std::invalid_argument("edge id out of range");
  };
  std::vector<int> src_count(edge_count, 0), tgt_count(edge_count, 0);
  for (const auto& v : vertices) {
    if (v.kind == VertexKind::FourValent) {
      for (int e : v.out) check_edge(e);
      for (int e : v.in) check_edge(e);
    } else {
      check_edge(v.out[0]);
      check_edge(v.in[0]);
      if (v.out[1] != -1 || v.in[1] != -1)
        throw std::invalid_argument("two-valent vertex with extra slots");
    }
    for (int e : v.out)
      if (e >= 0) src_count[e]++;
    for (int e : v.in)
      if (e >= 0) tgt_count[e]++;
  }
  for (int e = 0; e < edge_count; ++e) {
    if (src_count[e] > 1 || tgt_count[e] > 1)
      throw std::invalid_argument("edge with multiple sources or targets");
  }
  std::multiset<int> expected_loose;
  for (int e = 0; e < edge_count; ++e) {
    if (src_count[e] == 0) expected_loose.insert(e);
    if (tgt_count[e] == 0) expected_loose.insert(e);
  }
  // vertexless circles carry no endpoints at all; they show up above twice
  // but are not loose ends when recorded as strands
  for (int e : strands) {
    check_edge(e);
    if (src_count[e] == 0 && tgt_count[e] == 0) {
      expected_loose.erase(expected_loose.find(e));
      expected_loose.erase(expected_loose.find(e));
    }
  }
  std::multiset<int> got_loose(loose_ends.begin(), loose_ends.end());
  if (got_loose != expected_loose)
    throw std::invalid_argument("loose end list inconsistent with incidence");
  for (int v : special) {
    if (v < 0 || v >= vertex_count() || vertices[v].kind != VertexKind::TwoValent)
      throw std::invalid_argument("special vertex must be a two-valent vertex index");
  }
  if (e0 >= edge_count) throw std::invalid_argument("e0 out of range");
}

std::string PartialBraidGraph::canonical_serialization() const {
  // renumber edges in first-use order of a fixed walk
  std::map<int, int> relabel;
  int next = 0;
  auto lab = [&](int e) {
    auto [it, fresh] = relabel.emplace(e, next);
    if (fresh) ++next;
    return it->second;
  };
  std::ostringstream os;
  if (e0 >= 0) lab(e0);
  for (const auto& v : vertices) {
    os << (v.kind == VertexKind::FourValent ? "X" : "o");
    os << "(";
    for (int e : v.out)
      if (e >= 0) os << lab(e) << ",";
    os << ";";
    for (int e : v.in)
      if (e >= 0) os << lab(e) << ",";
    os << ")";
  }
  std::vector<int> rest;
  for (int e : loose_ends) rest.push_back(e);
  for (int e : strands) rest.push_back(e);
  std::sort(rest.begin(), rest.end());
  for (int e : rest) lab(e);
  for (int e = 0; e < edge_count; ++e) lab(e);

  std::vector<int> l2;
  for (int e : loose_ends) l2.push_back(relabel[e]);
  std::sort(l2.begin(), l2.end());
  os << "|L";
  for (int e : l2) os << e << ",";
  std::vector<int> s2;
  for (int e : strands) s2.push_back(relabel[e]);
  std::sort(s2.begin(), s2.end());
  os << "|S";
  for (int e : s2) os << e << ",";
  os << "|P";
  for (int v : special) os << v << ",";
  os << "|E" << edge_count;
  os << "|e" << (e0 >= 0 ? relabel[e0] : -1);
  return os.str();
}

std::string PartialBraidGraph::hash() const {
  std::string s = canonical_serialization();
  uint64_t h1 = 1469598103934665603ULL, h2 = 14695981039346656037ULL;
  for (unsigned char c : s) {
    h1 = (h1 ^ c) * 1099511628211ULL;
    h2 = (h2 ^ c) * 1099511628211ULL;
    h2 ^= h2 >> 33;
  }
  std::ostringstream os;
  os << std::hex << h1 << h2;
  return os.str();
}

std::string PartialBraidGraph::to_json() const {
  json j;
  j["edges"] = edge_count;
  j["vertices"] = json::array();
  for (const auto& v : vertices) {
    json jv;
    jv["valence"] = v.kind == VertexKind::FourValent ? 4 : 2;
    jv["out"] = json::array();
    jv["in"] = json::array();
    for (int e : v.out)
      if (e >= 0) jv["out"].push_back(e);
    for (int e : v.in)
      if (e >= 0) jv["in"].push_back(e);
    j["vertices"].push_back(jv);
  }
  j["loose_ends"] = loose_ends;
  j["strands"] = strands;
  j["special"] = special;
  if (e0 >= 0) j["e0"] = e0;
  if (!edge_names.empty()) j["names"] = edge_names;
  return j.dump(2);
}

PartialBraidGraph PartialBraidGraph::from_json(const std::string& text) {
  json j = json::parse(text);
  PartialBraidGraph g;
  g.edge_count = j.at("edges").get<int>();
  for (const auto& jv : j.at("vertices")) {
    GraphVertex v;
    int valence = jv.at("valence").get<int>();
    auto outs = jv.at("out").get<std::vector<int>>();
    auto ins = jv.at("in").get<std::vector<int>>();
    if (valence == 4) {
      v.kind = VertexKind::FourValent;
      if (outs.size() != 2 || ins.size() != 2)
        throw std::invalid_argument("four-valent vertex needs 2 out / 2 in edges");
      v.out = {outs[0], outs[1]};
      v.in = {ins[0], ins[1]};
    } else if (valence == 2) {
      v.kind = VertexKind::TwoValent;
      if (outs.size() != 1 || ins.size() != 1)
        throw std::invalid_argument("two-valent vertex needs 1 out / 1 in edge");
      v.out = {outs[0], -1};
      v.in = {ins[0], -1};
    } else {
      throw std::invalid_argument("vertex valence must be 2 or 4");
    }
    g.vertices.push_back(v);
  }
  g.loose_ends = j.at("loose_ends").get<std::vector<int>>();
  if (j.count("strands")) g.strands = j.at("strands").get<std::vector<int>>();
  if (j.count("special")) g.special = j.at("special").get<std::vector<int>>();
  if (j.count("e0")) g.e0 = j.at("e0").get<int>();
  if (j.count("names")) g.edge_names = j.at("names").get<std::vector<std::string>>();
  g.validate();
  return g;
}

namespace {
PartialBraidGraph resolve_impl(const DecoratedDiagram& d, const ResolutionAssignment& I,
                               bool closed) {
  const int n = d.crossing_count();
  if (static_cast<int>(I.bits.size()) != n)
    throw std::invalid_argument("assignment must cover every crossing");
  PartialBraidGraph g;
  g.edge_count = d.edge_count;
  g.e0 = closed ? d.e0 : -1;
  for (int t = 0; t < n; ++t) {
    const Crossing& c = d.crossings[t];
    bool singular = (c.sign > 0) == (I.bits[t] == 0);
    if (singular) {
      GraphVertex v;
      v.kind = VertexKind::FourValent;
      v.out = {c.a, c.b};
      v.in = {c.c, c.d};
      v.crossing = t;
      g.vertices.push_back(v);
    } else {
      GraphVertex l, r;
      l.kind = r.kind = VertexKind::TwoValent;
      l.out = {c.a, -1};
      l.in = {c.c, -1};
      l.crossing = t;
      l.side = 0;
      r.out = {c.b, -1};
      r.in = {c.d, -1};
      r.crossing = t;
      r.side = 1;
      g.vertices.push_back(l);
      g.vertices.push_back(r);
    }
  }
  // loose ends / strands from incidence
  std::vector<int> src, tgt;
  incidence(g, src, tgt);
  for (int e = 0; e < g.edge_count; ++e) {
    bool circle = closed && src[e] < 0 && tgt[e] < 0 &&
                  std::find(d.strands.begin(), d.strands.end(), e) != d.strands.end();
    if (circle) continue;
    if (src[e] < 0) g.loose_ends.push_back(e);
    if (tgt[e] < 0) g.loose_ends.push_back(e);
  }
  if (closed) g.strands = d.strands;

  if (closed) {
    // pick the special vertex on each component away from e_0: the lowest
    // right-hand half of a smoothing
    int comp_count = 0;
    auto comp = g.edge_components(&comp_count);
    int e0_comp = d.e0 >= 0 ? comp[d.e0] : -1;
    for (int c = 0; c < comp_count; ++c) {
      if (c == e0_comp) continue;
      int chosen = -1, fallback = -1;
      for (int vi = 0; vi < g.vertex_count(); ++vi) {
        const auto& v = g.vertices[vi];
        if (v.kind != VertexKind::TwoValent) continue;
        if (comp[v.out[0]] != c) continue;
        if (fallback < 0) fallback = vi;
        if (v.side == 1 && chosen < 0) chosen = vi;
      }
      if (chosen < 0) chosen = fallback;
      if (chosen >= 0) g.special.push_back(chosen);
      // components with no vertices at all (free circles) need no special
    }
    std::sort(g.special.begin(), g.special.end());
  }
  g.validate();
  return g;
}
}  // namespace

PartialBraidGraph resolve(const DecoratedDiagram& d, const ResolutionAssignment& I) {
  return resolve_impl(d, I, true);
}

PartialBraidGraph resolve_open(const DecoratedDiagram& d, const ResolutionAssignment& I) {
  // rebuild the diagram without closure merges: fresh edge per strand end
  const BraidWord& w = d.word;
  const int s = w.strand_count;
  const int n = w.crossing_count();
  DecoratedDiagram open;
  open.word = w;
  int next = s;
  std::vector<int> cur(s);
  for (int j = 0; j < s; ++j) cur[j] = j;
  for (int t = 0; t < n; ++t) {
    int i = std::abs(w.letters[t]) - 1;
    Crossing c;
    c.sign = w.letters[t] > 0 ? +1 : -1;
    c.c = cur[i];
    c.d = cur[i + 1];
    c.a = next++;
    c.b = next++;
    cur[i] = c.a;
    cur[i + 1] = c.b;
    open.crossings.push_back(c);
  }
  open.edge_count = next;
  open.e0 = -1;
  open.e1 = -1;
  return resolve_impl(open, I, false);
}

PartialBraidGraph insert_two_valent(const PartialBraidGraph& g, int edge) {
  if (edge < 0 || edge >= g.edge_count) throw std::invalid_argument("no such edge");
  std::vector<int> src, tgt;
  incidence(g, src, tgt);
  PartialBraidGraph out = g;

  if (src[edge] < 0 && tgt[edge] < 0) {
    // vertexless circle: one marked point, no new edge
    GraphVertex p;
    p.kind = VertexKind::TwoValent;
    p.out = {edge, -1};
    p.in = {edge, -1};
    out.vertices.push_back(p);
    out.validate();
    return out;
  }

  int fresh = out.edge_count++;
  if (!out.edge_names.empty()) out.edge_names.push_back("W" + std::to_string(fresh));
  GraphVertex p;
  p.kind = VertexKind::TwoValent;
  p.out = {edge, -1};  // the edge keeps its id as the outgoing side
  p.in = {fresh, -1};

  int pos = 0;  // insertion index in the sweep order
  if (src[edge] >= 0) {
    auto& u = out.vertices[src[edge]];
    for (int& e : u.out)
      if (e == edge) e = fresh;
    pos = src[edge] + 1;
  } else {
    // loose start moves to the fresh edge
    auto it = std::find(out.loose_ends.begin(), out.loose_ends.end(), edge);
    *it = fresh;
    pos = 0;
  }
  out.vertices.insert(out.vertices.begin() + pos, p);
  for (int& sp : out.special)
    if (sp >= pos) ++sp;
  out.validate();
  return out;
}

namespace {
SweepDecomposition sweep_core(const PartialBraidGraph& g, const std::vector<int>& subset,
                              const std::vector<int>& strand_list) {
  SweepDecomposition sd;
  sd.strands = strand_list;
  std::map<int, int> F;
  for (int e : g.exterior_in(subset)) F[e] += 1;
  for (int e : strand_list) F[e] += 1;
  sd.F.push_back(F);
  auto remove_one = [&](std::map<int, int>& ms, int e) {
    auto it = ms.find(e);
    if (it == ms.end()) throw std::invalid_argument("sweep order invalid: missing in-edge");
    if (--it->second == 0) ms.erase(it);
  };
  for (int vi : subset) {
    const auto& v = g.vertices[vi];
    std::map<int, int> G = F;
    for (int e : v.in)
      if (e >= 0) remove_one(G, e);
    sd.G.push_back(G);
    F = G;
    for (int e : v.out)
      if (e >= 0) F[e] += 1;
    sd.F.push_back(F);
  }
  std::map<int, int> expect;
  for (int e : g.exterior_out(subset)) expect[e] += 1;
  for (int e : strand_list) expect[e] += 1;
  if (sd.F.back() != expect)
    throw std::invalid_argument("sweep order invalid: final strip mismatch");
  return sd;
}
}  // namespace

SweepDecomposition sweep_decomposition(const PartialBraidGraph& g) {
  return sweep_core(g, g.all_vertices(), g.strands);
}

SweepDecomposition sweep_decomposition_subset(const PartialBraidGraph& g,
                                              const std::vector<int>& vertex_subset) {
  std::vector<int> src, tgt;
  incidence(g, src, tgt);
  std::set<int> W(vertex_subset.begin(), vertex_subset.end());
  std::vector<int> strands;
  for (int e : g.strands)
    if (src[e] >= 0 && tgt[e] >= 0 && W.count(src[e]) && W.count(tgt[e])) strands.push_back(e);
  std::vector<int> ordered(vertex_subset);
  std::sort(ordered.begin(), ordered.end());
  return sweep_core(g, ordered, strands);
}

PartialBraidGraph example_four_crossing_strip_graph() {
  // edges 0..8 = U1..U9, 9 = B1, 10 = B2
  PartialBraidGraph g;
  g.edge_count = 11;
  g.edge_names = {"U1", "U2", "U3", "U4", "U5", "U6", "U7", "U8", "U9", "B1", "B2"};
  auto four = [](int o1, int o2, int i1, int i2) {
    GraphVertex v;
    v.kind = VertexKind::FourValent;
    v.out = {o1, o2};
    v.in = {i1, i2};
    return v;
  };
  g.vertices.push_back(four(4, 6, 1, 9));   // out U5,U7  in U2,B1
  g.vertices.push_back(four(3, 7, 0, 10));  // out U4,U8  in U1,B2
  g.vertices.push_back(four(5, 8, 7, 6));   // out U6,U9  in U8,U7
  g.vertices.push_back(four(9, 10, 2, 8));  // out B1,B2  in U3,U9
  g.loose_ends = {0, 1, 2, 3, 4, 5};
  g.strands = {9, 10};
  g.validate();
  return g;
}

PartialBraidGraph example_three_vertex_partial_graph() {
  // edges 0..6 = a,b,c,d,e,f,g; the interior cycle d,b,g needs one wrap (d)
  PartialBraidGraph g;
  g.edge_count = 7;
  g.edge_names = {"Ua", "Ub", "Uc", "Ud", "Ue", "Uf", "Ug"};
  GraphVertex p1;
  p1.kind = VertexKind::FourValent;
  p1.out = {0, 1};
  p1.in = {2, 3};
  GraphVertex p3;
  p3.kind = VertexKind::TwoValent;
  p3.out = {6, -1};
  p3.in = {1, -1};
  GraphVertex p2;
  p2.kind = VertexKind::FourValent;
  p2.out = {4, 3};
  p2.in = {5, 6};
  g.vertices = {p1, p3, p2};
  g.loose_ends = {0, 2, 4, 5};
  g.strands = {3};
  g.validate();
  return g;
}

PartialBraidGraph example_kink_graph() {
  // one crossing with a loop: out {U1, U3}, in {U0... } named after the text
  PartialBraidGraph g;
  g.edge_count = 3;
  g.edge_names = {"U1", "U2", "U3"};
  GraphVertex p;
  p.kind = VertexKind::FourValent;
  p.out = {0, 2};
  p.in = {1, 2};
  g.vertices = {p};
  g.loose_ends = {0, 1};
  g.strands = {2};
  g.e0 = 1;
  g.validate();
  return g;
}

PartialBraidGraph example_total_graph() {
  // two kinks joined in a circle; no loose ends
  PartialBraidGraph g;
  g.edge_count = 4;
  g.edge_names = {"U1", "U2", "U3", "U4"};
  GraphVertex p1;
  p1.kind = VertexKind::FourValent;
  p1.out = {0, 1};  // U1 (loop), U2
  p1.in = {0, 3};   // U1, U4
  GraphVertex p2;
  p2.kind = VertexKind::FourValent;
  p2.out = {2, 3};  // U3 (loop), U4
  p2.in = {2, 1};   // U3, U2
  g.vertices = {p1, p2};
  g.strands = {0, 2, 3};
  g.validate();
  return g;
}

PartialBraidGraph example_by_name(const std::string& name) {
  if (name == "strip" || name == "figure-braid") return example_four_crossing_strip_graph();
  if (name == "partial") return example_three_vertex_partial_graph();
  if (name == "kink") return example_kink_graph();
  if (name == "total") return example_total_graph();
  throw std::invalid_argument("unknown example graph: " + name +
                              " (expected strip|partial|kink|total)");
}

}  // namespace cubetor
