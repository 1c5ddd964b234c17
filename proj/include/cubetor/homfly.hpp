#pragma once

#include <gmpxx.h>

#include <map>
#include <string>
#include <utility>

#include "cubetor/braid.hpp"
#include "cubetor/field.hpp"

namespace cubetor {

/// Integer Laurent polynomial in two variables a, q.
struct Laurent2 {
  std::map<std::pair<int, int>, mpz_class> c;  // (a-exp, q-exp) -> coefficient

  bool is_zero() const { return c.empty(); }
  void set(int ae, int qe, mpz_class v);
  void addc(int ae, int qe, const mpz_class& v);
  Laurent2 add(const Laurent2& o) const;
  Laurent2 mul(const Laurent2& o) const;
  Laurent2 scale(const mpz_class& k) const;
  /// (a, q) -> (a^-1, q^-1)
  Laurent2 mirror() const;
  bool operator==(const Laurent2& o) const { return c == o.c; }
  std::string to_string() const;
};

/// Integer Laurent polynomial in one variable; exponents are in units of
/// t = T^{1/2} when used for Alexander-type series (even exponents = integer
/// powers of T).
struct Laurent1 {
  std::map<int, mpz_class> c;

  bool is_zero() const { return c.empty(); }
  void addc(int e, const mpz_class& v);
  Laurent1 add(const Laurent1& o) const;
  Laurent1 mul(const Laurent1& o) const;
  Laurent1 scale(const mpz_class& k) const;
  Laurent1 shift(int by) const;
  bool operator==(const Laurent1& o) const { return c == o.c; }
  /// Prints in T with half-integer exponents when odd t-powers appear.
  std::string to_string_T() const;
};

/// P_K(a, q) with the skein normalization a P_+ - a^{-1} P_- = (q - q^{-1}) P_0
/// and P(unknot) = 1. For links the result may carry a residual power of
/// (q - q^{-1}) in the denominator.
struct HomflyPolynomial {
  Laurent2 num;
  int skein_denom_pow = 0;  // num / (q - q^{-1})^skein_denom_pow

  bool is_laurent() const { return skein_denom_pow == 0; }
  std::string to_string() const;
};

struct SkeinOptions {
  int max_strands = 9;
  int max_letters = 64;
};

HomflyPolynomial homfly_skein_oracle(const BraidWord& w, const SkeinOptions& opts = {});

/// a = 1, q = T^{1/2}: the Alexander-Conway specialization (knots only).
Laurent1 homfly_alexander_specialization(const HomflyPolynomial& p);

/// Independent Alexander oracle: Fox-calculus minor determinant of the
/// Wirtinger presentation read off the decorated diagram, normalized to the
/// symmetric representative with Delta(1) = 1. Exponents in t = T^{1/2}
/// (always even here).
Laurent1 alexander_oracle(const DecoratedDiagram& d);
Laurent1 alexander_oracle(const BraidWord& w);

}  // namespace cubetor
