#pragma once

#include <functional>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "cubetor/field.hpp"
#include "cubetor/mono.hpp"

namespace cubetor {

struct Term {
  Mono m;
  mpq_class c;
  bool operator==(const Term& o) const { return m == o.m && c == o.c; }
};

/// Sparse exact multivariate polynomial. Terms are kept sorted descending in
/// a fixed canonical order (degrevlex with natural priority), so polynomials
/// are order-independent values; Groebner runs re-sort per their own order.
class Poly {
public:
  Poly() = default;
  explicit Poly(int arity) : arity_(arity) {}

  static Poly zero(int arity) { return Poly(arity); }
  static Poly constant(int arity, const mpq_class& c, const Field& F);
  static Poly variable(int arity, int var, const Field& F);
  /// Builds sum_i coeffs[i] * U_{vars[i]} (a linear form).
  static Poly linear(int arity, const std::vector<std::pair<int, mpq_class>>& terms, const Field& F);
  static Poly from_terms(int arity, std::vector<Term> terms, const Field& F);

  int arity() const { return arity_; }
  bool is_zero() const { return terms_.empty(); }
  int term_count() const { return static_cast<int>(terms_.size()); }
  const std::vector<Term>& terms() const { return terms_; }
  int degree() const;  // -1 for the zero polynomial
  bool is_homogeneous() const;

  Poly add(const Poly& o, const Field& F) const;
  Poly sub(const Poly& o, const Field& F) const;
  Poly mul(const Poly& o, const Field& F) const;
  Poly neg(const Field& F) const;
  Poly scale(const mpq_class& c, const Field& F) const;
  Poly mul_term(const Mono& m, const mpq_class& c, const Field& F) const;

  /// Sets the given variable to zero; the ambient variable list is unchanged.
  Poly specialize_zero(int var, const Field& F) const;

  /// Reinterprets in a larger ring (new variables appended).
  Poly extend(int new_arity) const;

  bool operator==(const Poly& o) const { return arity_ == o.arity_ && terms_ == o.terms_; }
  bool operator!=(const Poly& o) const { return !(*this == o); }

  std::string to_string(const std::vector<std::string>& names) const;
  std::string to_string() const { return to_string(default_names(arity_)); }

private:
  friend class PolyBuilder;
  int arity_ = 0;
  std::vector<Term> terms_;
};

/// Accumulates terms in canonical order; used by arithmetic and generators.
class PolyBuilder {
public:
  explicit PolyBuilder(int arity) : arity_(arity) {}
  void add(const Mono& m, const mpq_class& c);
  Poly build(const Field& F);

private:
  struct CanonicalLess {
    bool operator()(const Mono& a, const Mono& b) const;
  };
  int arity_;
  std::map<Mono, mpq_class, CanonicalLess> acc_;
};

enum class PolyOp { Add, Sub, Mul };
/// Dispatch form of the arithmetic entry point; rejects arity mismatches.
Poly poly_arith(PolyOp op, const Poly& f, const Poly& g, const Field& F);

}  // namespace cubetor
