#pragma once

#include <filesystem>
#include <mutex>
#include <optional>
#include <string>
#include <vector>

#include "cubetor/field.hpp"
#include "cubetor/mono.hpp"
#include "cubetor/poly.hpp"
#include "cubetor/series.hpp"

namespace cubetor {

struct GBOptions {
  long reduction_budget = 50'000'000;  // term reduction steps across the run
};

/// Reduced Groebner basis: monic generators, no term of any generator
/// divisible by another's leading term, sorted by leading term.
struct GroebnerBasis {
  std::vector<Poly> gens;
  MonomialOrder order;
  Field field;
  int arity = 0;
  std::string source_key;  // optional provenance (graph hash + ideal kind)

  const Poly& operator[](size_t i) const { return gens[i]; }
  size_t size() const { return gens.size(); }
  std::vector<Mono> leading_terms() const;
};

GroebnerBasis buchberger_reduced(const std::vector<Poly>& gens, const MonomialOrder& order,
                                 const Field& F, const GBOptions& opts = {});

/// Fully reduced normal form: no term of the result is divisible by any
/// leading term of the basis; f - result lies in the ideal.
Poly normal_form(const Poly& f, const GroebnerBasis& gb, const GBOptions& opts = {});

bool ideal_contains(const GroebnerBasis& gb, const Poly& f);
bool ideal_equal(const std::vector<Poly>& a, const std::vector<Poly>& b,
                 const MonomialOrder& order, const Field& F, const GBOptions& opts = {});

/// Hilbert series of R / (leading-term ideal), i.e. of R/I for homogeneous I:
/// exact rational form and truncated dimensions from standard monomials.
RationalSeries quotient_hilbert_rational(const GroebnerBasis& gb);
TruncatedSeries quotient_hilbert(const GroebnerBasis& gb, int D);

/// Exact Hilbert series of R/I for a monomial ideal, as num / (1-T)^arity.
RationalSeries monomial_quotient_hilbert(std::vector<Mono> gens, int arity);

/// Count of degree-d standard monomials by direct enumeration (small cases).
long count_standard_monomials(const std::vector<Mono>& lts, int arity, int d);

// ---- free-module layer (used by the Tor engine) ----

/// Element of a free module R^rank: terms (component, monomial, coefficient),
/// ordered term-over-position.
struct ModTerm {
  int comp;
  Mono m;
  mpq_class c;
};

struct ModPoly {
  int rank = 0;
  int arity = 0;
  std::vector<ModTerm> terms;  // sorted descending per the active order

  bool is_zero() const { return terms.empty(); }
  const ModTerm& lead() const { return terms.front(); }
};

ModPoly make_mod_poly(int rank, std::vector<std::pair<int, Poly>> parts, const MonomialOrder& order,
                      const Field& F);

/// Groebner basis of the submodule generated by gens (Buchberger over TOP
/// order with the given ring order; deterministic, reduced).
std::vector<ModPoly> module_gb(std::vector<ModPoly> gens, const MonomialOrder& order,
                               const Field& F, const GBOptions& opts = {});

/// Hilbert series of R^rank / M from a module GB's leading terms (no
/// component degree shifts; callers apply uniform shifts themselves).
RationalSeries module_quotient_hilbert(const std::vector<ModPoly>& gb, int rank, int arity);

/// On-disk cache of reduced bases, keyed by caller-provided strings.
/// Single-writer/multi-reader: writes go through temp-file + rename.
class GBCache {
public:
  explicit GBCache(std::filesystem::path dir);
  std::optional<GroebnerBasis> get(const std::string& key, const MonomialOrder& order,
                                   const Field& F);
  void put(const std::string& key, const GroebnerBasis& gb);

private:
  std::filesystem::path file_for(const std::string& key) const;
  std::filesystem::path dir_;
  std::mutex mu_;
};

std::string poly_serialize(const Poly& p);
Poly poly_deserialize(const std::string& s, int arity, const Field& F);

}  // namespace cubetor
