#pragma once

#include <string>
#include <vector>

#include "cubetor/braid.hpp"
#include "cubetor/poly.hpp"

namespace cubetor {

enum class IdealKind { Linear, Quadratic, Nonlocal, EdgeRing, Sum };

struct GeneratorInfo {
  Poly poly;
  std::string tag;           // vertex id or vertex subset that produced it
  std::vector<int> subset;   // for nonlocal generators
};

struct IdealSpec {
  IdealKind kind = IdealKind::Sum;
  int arity = 0;
  std::vector<GeneratorInfo> gens;

  std::vector<Poly> polys() const;
  std::string to_string(const std::vector<std::string>& names) const;
};

/// L(p) = U_a + U_b - U_c - U_d for a four-valent vertex.
Poly vertex_linear(const PartialBraidGraph& g, int vertex, const Field& F);
/// Q(p): U_a U_b - U_c U_d for four-valent, U_e - U_f for two-valent.
Poly vertex_local(const PartialBraidGraph& g, int vertex, const Field& F);
/// N(W) = prod Out(W) - prod In(W).
Poly nonlocal_generator(const PartialBraidGraph& g, const std::vector<int>& subset, const Field& F);

/// One linear generator per four-valent vertex.
IdealSpec linear_ideal(const PartialBraidGraph& g, const Field& F);
/// One generator per non-special vertex.
IdealSpec quadratic_ideal(const PartialBraidGraph& g, const Field& F);
/// Generators over all nonempty vertex subsets. If 2^m exceeds the limit and
/// no cap is given, throws ResourceError; with a cap, only subsets of size
/// <= cap are emitted and `complete` is set false on the result.
struct NonlocalOptions {
  int cap = -1;
  long subset_limit = 1 << 16;
};
IdealSpec nonlocal_ideal(const PartialBraidGraph& g, const Field& F, NonlocalOptions opts = {});
bool nonlocal_complete(const PartialBraidGraph& g, NonlocalOptions opts = {});

/// Linear relations of every crossing of the unresolved diagram (the edge
/// ring is the quotient by these).
IdealSpec edge_ring_relations(const DecoratedDiagram& d, const Field& F);

IdealSpec ideal_sum(const IdealSpec& a, const IdealSpec& b);

}  // namespace cubetor
