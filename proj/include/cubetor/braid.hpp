#pragma once

#include <array>
#include <map>
#include <optional>
#include <string>
#include <vector>

namespace cubetor {

/// A braid word: letter +i / -i is the generator sigma_i with that sign.
struct BraidWord {
  int strand_count = 0;
  std::vector<int> letters;

  int crossing_count() const { return static_cast<int>(letters.size()); }
  int n_plus() const;
  int n_minus() const;
  /// Number of strands closed up on the right (the cut strand excluded).
  int closure_strands() const { return strand_count - 1; }
  std::string to_string() const;
};

/// Parses whitespace-separated signed integers. strand_count defaults to
/// 1 + max|letter| unless overridden.
BraidWord parse_braid_word(const std::string& text, int strands_override = 0);

/// One crossing of the vertical diagram. a/b are the outgoing (upper) edge
/// ids, left/right; c/d the incoming (lower) ones.
struct Crossing {
  int sign = +1;
  int a = -1, b = -1, c = -1, d = -1;
};

/// The closed-up braid diagram with the distinguished edge cut at e0/e1.
struct DecoratedDiagram {
  BraidWord word;
  std::vector<Crossing> crossings;
  int edge_count = 0;
  int e0 = 0;
  int e1 = 1;
  std::vector<int> strands;  // closure strand edge ids B_1..B_k

  int crossing_count() const { return static_cast<int>(crossings.size()); }
  static DecoratedDiagram unknot();  // zero-crossing circle, cut open
};

DecoratedDiagram build_decorated_diagram(const BraidWord& w);

/// Assignment of 0/1 to each crossing; whether 0 means singularize depends
/// on the crossing sign (positive: 0 singularizes, 1 smooths; negative the
/// other way around).
struct ResolutionAssignment {
  std::vector<int> bits;

  int norm() const;  // ||I||
  static ResolutionAssignment all(int n, int bit);
  static ResolutionAssignment from_string(const std::string& bits01);
  std::string to_string() const;
};

enum class VertexKind { TwoValent, FourValent };

struct GraphVertex {
  VertexKind kind = VertexKind::FourValent;
  std::array<int, 2> out{-1, -1};  // 2-valent vertices use slot 0 only
  std::array<int, 2> in{-1, -1};
  int crossing = -1;  // provenance, -1 for inserted/raw vertices
  int side = 0;       // for 2-valent smoothing halves: 0 left, 1 right
};

/// A resolved / partial braid graph. Vertices are stored in sweep (height)
/// order; edge ids 0..edge_count-1 are the ring variables.
struct PartialBraidGraph {
  int edge_count = 0;
  std::vector<GraphVertex> vertices;
  std::vector<int> loose_ends;  // edge ids; an edge free at both ends appears twice
  std::vector<int> strands;     // closure strand edge ids B_1..B_k
  std::vector<int> special;     // special vertex indices (2-valent, skipped in Q)
  int e0 = -1;                  // edge id of e_0, or -1 for intrinsic graphs
  std::vector<std::string> edge_names;

  int four_valent_count() const;
  int vertex_count() const { return static_cast<int>(vertices.size()); }
  int closure_strand_count() const { return static_cast<int>(strands.size()); }

  /// Component index per edge; vertexless circles are their own components.
  std::vector<int> edge_components(int* count = nullptr) const;
  int component_count() const;
  bool connected() const { return component_count() <= 1; }

  /// In(W)/Out(W) for a vertex subset (default: all): edges entering but not
  /// leaving the subset, and vice versa.
  std::vector<int> exterior_in(const std::vector<int>& vertex_subset) const;
  std::vector<int> exterior_out(const std::vector<int>& vertex_subset) const;
  std::vector<int> all_vertices() const;

  std::vector<std::string> names() const;

  /// Consistency checks: slot fill per valence, loose-end balance, edge ids
  /// in range. Throws std::invalid_argument on violation.
  void validate() const;

  /// Serialization after canonical edge renumbering; stable cache/dedupe key.
  std::string canonical_serialization() const;
  std::string hash() const;

  std::string to_json() const;
  static PartialBraidGraph from_json(const std::string& text);
};

PartialBraidGraph resolve(const DecoratedDiagram& d, const ResolutionAssignment& I);

/// The resolved braid without taking the closure: every strand runs loose
/// from bottom to top, so the result has no closure strands.
PartialBraidGraph resolve_open(const DecoratedDiagram& d, const ResolutionAssignment& I);

/// Inserts a two-valent vertex on the given edge. The edge keeps its id as
/// the outgoing side of the new vertex; the new incoming edge gets a fresh id.
PartialBraidGraph insert_two_valent(const PartialBraidGraph& g, int edge);

/// Strip decomposition along the sweep order: F_0 = In(W) + strands, then
/// each vertex removes its in-edges and adds its out-edges (one copy each).
struct SweepDecomposition {
  std::vector<std::map<int, int>> F;  // F_0..F_m as multisets
  std::vector<std::map<int, int>> G;  // G_1..G_m (G[i-1] pairs with vertex i-1)
  std::vector<int> strands;
};

SweepDecomposition sweep_decomposition(const PartialBraidGraph& g);
/// Same, restricted to a vertex subset (inherited order); used on subgraphs.
SweepDecomposition sweep_decomposition_subset(const PartialBraidGraph& g,
                                              const std::vector<int>& vertex_subset);

/// Canned graphs from the worked examples.
PartialBraidGraph example_four_crossing_strip_graph();  // 9 edges + 2 strands, 4 vertices
PartialBraidGraph example_three_vertex_partial_graph();  // 7 edges, two 4-valent + one 2-valent
PartialBraidGraph example_kink_graph();                  // one crossing with a loop
PartialBraidGraph example_total_graph();                 // closed double kink, no loose ends
PartialBraidGraph example_by_name(const std::string& name);

}  // namespace cubetor
