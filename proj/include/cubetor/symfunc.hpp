#pragma once

#include <string>
#include <vector>

#include "cubetor/braid.hpp"
#include "cubetor/poly.hpp"

namespace cubetor {

/// Elementary symmetric polynomial S_k of the listed variables (repeats enter
/// with their multiplicity). k = 0 gives 1, negative k gives 0.
Poly elem_sym(const std::vector<int>& vars, int k, int arity, const Field& F);
/// Complete homogeneous symmetric polynomial H_k, same conventions.
Poly comp_hom(const std::vector<int>& vars, int k, int arity, const Field& F);

/// Alternating convolution: sum_{k+l=n} (-1)^l S_k(y) H_l(y) == 0 for n >= 1.
bool verify_lemma_alternating(int m, int n, const Field& F);
/// Split-variable identity:
/// sum_{k+l=n} (-1)^l S_k(y_1..y_n, z_1..z_m) H_l(z_1..z_m) == S_n(y_1..y_n).
bool verify_lemma_split(int n, int m, const Field& F);
/// Both identities over the stated ranges.
bool verify_lemma_identities(int max_m, int max_n, const Field& F);

struct CertificateTerm {
  int vertex;
  char kind;  // 'L' or 'Q'
  Poly coefficient;
};

/// Explicit membership decomposition N(W) = sum alpha_i L(p_i) + sum beta_i Q(p_i),
/// verified by exact expansion of the residual.
struct Certificate {
  Poly target;
  std::vector<CertificateTerm> terms;
  bool verified = false;
  bool uses_special = false;  // a special vertex's Q(p) appears with nonzero coefficient
  std::string note;

  Poly residual(const PartialBraidGraph& g, const Field& F) const;
};

/// Certificate for N(W) with W the full vertex set of a sweepable graph.
Certificate cube_identity_certificate(const PartialBraidGraph& g, const Field& F);

/// Certificate for an arbitrary nonempty vertex subset; disconnected subsets
/// are handled per component and recombined telescopically.
Certificate nonlocal_membership_certificate(const PartialBraidGraph& g,
                                            const std::vector<int>& subset, const Field& F);

}  // namespace cubetor
