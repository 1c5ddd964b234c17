#include <doctest.h>

#include <random>
#include <set>

#include "cubetor/braid.hpp"
#include "cubetor/homfly.hpp"

using namespace cubetor;

TEST_CASE("parse braid words") {
  BraidWord w = parse_braid_word("1 1 1");
  CHECK(w.letters == std::vector<int>({1, 1, 1}));
  CHECK(w.strand_count == 2);
  CHECK(w.n_plus() == 3);
  CHECK(w.closure_strands() == 1);

  BraidWord f8 = parse_braid_word("1 -2 1 -2");
  CHECK(f8.strand_count == 3);
  CHECK(f8.n_minus() == 2);

  CHECK_THROWS_AS(parse_braid_word("0 1"), std::invalid_argument);
  CHECK_THROWS_AS(parse_braid_word(""), std::invalid_argument);
  CHECK_THROWS_AS(parse_braid_word("1 x"), std::invalid_argument);
  CHECK(parse_braid_word("1", 4).strand_count == 4);
}

TEST_CASE("figure-eight word closes up to the figure-eight knot") {
  // independent check through the Alexander oracle
  Laurent1 delta = alexander_oracle(parse_braid_word("1 -2 1 -2"));
  Laurent1 expect;
  expect.addc(-2, -1);  // -T^{-1}
  expect.addc(0, 3);    // +3
  expect.addc(2, -1);   // -T
  CHECK(delta == expect);
}

TEST_CASE("decorated diagram shape") {
  DecoratedDiagram tr = build_decorated_diagram(parse_braid_word("1 1 1"));
  CHECK(tr.crossing_count() == 3);
  CHECK(tr.edge_count == 7);
  CHECK(tr.e0 == 0);

  DecoratedDiagram f8 = build_decorated_diagram(parse_braid_word("1 -2 1 -2"));
  CHECK(f8.crossing_count() == 4);
  CHECK(f8.edge_count == 9);

  DecoratedDiagram one = build_decorated_diagram(parse_braid_word("1"));
  CHECK(one.crossing_count() == 1);
  CHECK(one.edge_count == 3);
}

TEST_CASE("all-singularized trefoil resolution") {
  DecoratedDiagram d = build_decorated_diagram(parse_braid_word("1 1 1"));
  PartialBraidGraph g = resolve(d, ResolutionAssignment::all(3, 0));
  CHECK(g.connected());
  CHECK(g.four_valent_count() == 3);
  CHECK(g.loose_ends.size() == 2);
  CHECK(g.special.empty());
  CHECK(g.strands.size() == 1);
}

TEST_CASE("all-smoothed trefoil resolution is a two-component unlink") {
  DecoratedDiagram d = build_decorated_diagram(parse_braid_word("1 1 1"));
  PartialBraidGraph g = resolve(d, ResolutionAssignment::all(3, 1));
  CHECK(g.component_count() == 2);
  CHECK(g.four_valent_count() == 0);
  CHECK(g.vertex_count() == 6);
  REQUIRE(g.special.size() == 1);
  // the special vertex is a right-hand smoothing half away from e_0
  const auto& sp = g.vertices[g.special[0]];
  CHECK(sp.kind == VertexKind::TwoValent);
  CHECK(sp.side == 1);
  auto comp = g.edge_components(nullptr);
  CHECK(comp[sp.out[0]] != comp[g.e0]);
}

TEST_CASE("zero-crossing unknot diagram resolves to a cut circle") {
  DecoratedDiagram d = DecoratedDiagram::unknot();
  PartialBraidGraph g = resolve(d, ResolutionAssignment{});
  CHECK(g.vertex_count() == 0);
  CHECK(g.edge_count == 1);
  CHECK(g.loose_ends.size() == 2);
}

TEST_CASE("resolution is deterministic") {
  DecoratedDiagram d = build_decorated_diagram(parse_braid_word("1 -2 1 -2"));
  ResolutionAssignment I = ResolutionAssignment::from_string("0110");
  PartialBraidGraph a = resolve(d, I);
  PartialBraidGraph b = resolve(d, I);
  CHECK(a.hash() == b.hash());
  CHECK(a.special == b.special);
  CHECK(a.canonical_serialization() == b.canonical_serialization());
}

TEST_CASE("flow conservation on random resolutions") {
  std::mt19937 rng(11);
  for (int trial = 0; trial < 30; ++trial) {
    std::uniform_int_distribution<int> len(1, 5), strand(2, 3), sgn(0, 1), bit(0, 1);
    int s = strand(rng);
    BraidWord w;
    w.strand_count = s;
    int n = len(rng);
    for (int i = 0; i < n; ++i) {
      std::uniform_int_distribution<int> gen(1, s - 1);
      w.letters.push_back(gen(rng) * (sgn(rng) ? 1 : -1));
    }
    DecoratedDiagram d = build_decorated_diagram(w);
    int touched = 0;
    bool first_touched = false;
    for (int p = 1; p <= s; ++p) {
      bool hit = false;
      for (int l : w.letters) hit = hit || std::abs(l) == p || std::abs(l) == p - 1;
      if (hit) ++touched;
      if (p == 1) first_touched = hit;
    }
    // cutting the distinguished edge adds a segment only when that strand
    // carries a crossing; a bare circle cut open stays a single arc
    CHECK(d.edge_count == 2 * n + (s - touched) + (first_touched ? 1 : 0));
    ResolutionAssignment I;
    for (int i = 0; i < n; ++i) I.bits.push_back(bit(rng));
    PartialBraidGraph g = resolve(d, I);
    g.validate();  // throws on slot imbalance
    // edges missing a source match edges missing a target
    int no_src = 0, no_tgt = 0;
    std::vector<int> has_src(g.edge_count, 0), has_tgt(g.edge_count, 0);
    for (const auto& v : g.vertices) {
      for (int e : v.out)
        if (e >= 0) has_src[e] = 1;
      for (int e : v.in)
        if (e >= 0) has_tgt[e] = 1;
    }
    for (int e = 0; e < g.edge_count; ++e) {
      if (!has_src[e]) ++no_src;
      if (!has_tgt[e]) ++no_tgt;
    }
    CHECK(no_src == no_tgt);
    // connected complete resolutions keep at least two loose ends
    if (g.connected()) CHECK(g.loose_ends.size() >= 2);
  }
}

TEST_CASE("sweep of the four-crossing strip graph") {
  PartialBraidGraph g = example_four_crossing_strip_graph();
  SweepDecomposition sd = sweep_decomposition(g);
  REQUIRE(sd.F.size() == 5);
  // F_0 = {U1, U2, U3, B1, B2}; F_4 = {U4, U5, U6, B1, B2}
  std::map<int, int> f0{{0, 1}, {1, 1}, {2, 1}, {9, 1}, {10, 1}};
  std::map<int, int> f4{{3, 1}, {4, 1}, {5, 1}, {9, 1}, {10, 1}};
  CHECK(sd.F.front() == f0);
  CHECK(sd.F.back() == f4);
  for (const auto& f : sd.F) {
    int total = 0;
    for (const auto& [e, m] : f) total += m;
    CHECK(total == 5);  // |In(W)| + k
  }
}

TEST_CASE("sweep multiset identities on resolutions") {
  std::mt19937 rng(5);
  for (int trial = 0; trial < 20; ++trial) {
    std::uniform_int_distribution<int> len(1, 5), bit(0, 1);
    int n = len(rng);
    BraidWord w;
    w.strand_count = 3;
    for (int i = 0; i < n; ++i) {
      std::uniform_int_distribution<int> gen(1, 2);
      w.letters.push_back(gen(rng));
    }
    ResolutionAssignment I;
    for (int i = 0; i < n; ++i) I.bits.push_back(bit(rng));
    PartialBraidGraph g = resolve(build_decorated_diagram(w), I);
    SweepDecomposition sd = sweep_decomposition(g);
    // F_i minus out-edges = G_i = F_{i-1} minus in-edges, one copy each
    for (size_t i = 0; i < sd.G.size(); ++i) {
      std::map<int, int> fi = sd.F[i + 1];
      for (int e : g.vertices[i].out) {
        if (e < 0) continue;
        if (--fi[e] == 0) fi.erase(e);
      }
      CHECK(fi == sd.G[i]);
    }
  }
}

TEST_CASE("sweep of trivial graphs") {
  // single 2-valent vertex on a strand-free arc
  PartialBraidGraph g;
  g.edge_count = 2;
  GraphVertex v;
  v.kind = VertexKind::TwoValent;
  v.out = {1, -1};
  v.in = {0, -1};
  g.vertices = {v};
  g.loose_ends = {0, 1};
  g.validate();
  SweepDecomposition sd = sweep_decomposition(g);
  CHECK(sd.F.size() == 2);
  CHECK(sd.F[0] == std::map<int, int>{{0, 1}});
  CHECK(sd.F[1] == std::map<int, int>{{1, 1}});

  PartialBraidGraph empty;
  empty.edge_count = 0;
  SweepDecomposition sd2 = sweep_decomposition(empty);
  CHECK(sd2.F.size() == 1);
  CHECK(sd2.F[0].empty());
}

TEST_CASE("two-valent insertion") {
  PartialBraidGraph kink = example_kink_graph();
  // insert on the loop edge
  PartialBraidGraph g2 = insert_two_valent(kink, 2);
  CHECK(g2.vertex_count() == 2);
  CHECK(g2.edge_count == 4);
  g2.validate();

  // insertion on a loose end keeps exterior counts
  PartialBraidGraph g3 = insert_two_valent(kink, 1);
  CHECK(g3.edge_count == 4);
  CHECK(g3.loose_ends.size() == kink.loose_ends.size());
  CHECK(g3.exterior_in(g3.all_vertices()).size() ==
        kink.exterior_in(kink.all_vertices()).size());
  CHECK(g3.exterior_out(g3.all_vertices()).size() ==
        kink.exterior_out(kink.all_vertices()).size());
  g3.validate();
}

TEST_CASE("json graph round trip") {
  PartialBraidGraph g = example_four_crossing_strip_graph();
  std::string text = g.to_json();
  PartialBraidGraph back = PartialBraidGraph::from_json(text);
  CHECK(back.hash() == g.hash());
  CHECK(back.edge_count == g.edge_count);
  CHECK(back.strands == g.strands);
}

TEST_CASE("canonical hash is stable under edge relabeling") {
  PartialBraidGraph g = example_kink_graph();
  // relabel edges 0<->1 consistently
  PartialBraidGraph h = g;
  for (auto& v : h.vertices) {
    for (auto& e : v.out)
      if (e == 0)
        e = 1;
      else if (e == 1)
        e = 0;
    for (auto& e : v.in)
      if (e == 0)
        e = 1;
      else if (e == 1)
        e = 0;
  }
  for (auto& e : h.loose_ends)
    if (e == 0)
      e = 1;
    else if (e == 1)
      e = 0;
  h.e0 = 0;  // e0 relabeled from 1 to 0
  CHECK(h.hash() == g.hash());
}
