#pragma once

#include <gmpxx.h>

#include <optional>
#include <string>
#include <vector>

namespace cubetor {

/// Integer Laurent polynomial in one variable T: coefficients for
/// T^{off}, T^{off+1}, ... Trailing/leading zeros are trimmed.
class ZPoly {
public:
  ZPoly() = default;
  static ZPoly zero() { return ZPoly(); }
  static ZPoly one() { return monomial(0, 1); }
  static ZPoly monomial(int exp, mpz_class c);
  static ZPoly from_coeffs(std::vector<mpz_class> coeffs, int offset = 0);

  bool is_zero() const { return c_.empty(); }
  int min_exp() const { return off_; }
  int max_exp() const { return off_ + static_cast<int>(c_.size()) - 1; }
  mpz_class coeff(int exp) const;
  const std::vector<mpz_class>& raw() const { return c_; }

  ZPoly add(const ZPoly& o) const;
  ZPoly sub(const ZPoly& o) const;
  ZPoly mul(const ZPoly& o) const;
  ZPoly scale(const mpz_class& k) const;
  ZPoly shift(int by) const;  // multiply by T^by
  mpz_class eval_at_one() const;

  /// Exact division by (1 - T); requires eval_at_one() == 0.
  ZPoly divide_one_minus_T() const;
  /// Multiplication by (1 - T).
  ZPoly mul_one_minus_T() const;

  bool operator==(const ZPoly& o) const { return off_ == o.off_ && c_ == o.c_; }
  bool operator!=(const ZPoly& o) const { return !(*this == o); }

  std::string to_string(const std::string& var = "T") const;

private:
  void trim();
  int off_ = 0;
  std::vector<mpz_class> c_;
};

/// num / (1 - T)^denom_pow, exact. The canonical reduced form cancels all
/// common (1 - T) factors (denom_pow may reach 0 for polynomials).
struct RationalSeries {
  ZPoly num;
  int denom_pow = 0;

  static RationalSeries zero() { return {ZPoly::zero(), 0}; }
  static RationalSeries polynomial(ZPoly p) { return {std::move(p), 0}; }

  bool is_zero() const { return num.is_zero(); }
  RationalSeries reduced() const;
  RationalSeries add(const RationalSeries& o) const;
  RationalSeries sub(const RationalSeries& o) const;
  RationalSeries scale(const mpz_class& k) const;
  RationalSeries shift(int by) const { return {num.shift(by), denom_pow}; }
  bool equals(const RationalSeries& o) const;
  bool is_polynomial() const { return reduced().denom_pow == 0; }

  /// Coefficients of T^0..T^D of the power-series expansion. Requires
  /// num.min_exp() >= 0 unless lowest_from is supplied.
  std::vector<mpz_class> expand(int D, int from = 0) const;

  std::string to_string(const std::string& var = "T") const;
};

/// Truncated power series of graded dimensions with an optionally recognized
/// rational form.
struct RationalForm {
  ZPoly num;
  int denom_pow = 0;
  bool stable = true;
};

struct TruncatedSeries {
  std::vector<mpz_class> coeff;  // T^0..T^D
  int truncation = 0;
  std::optional<RationalForm> rational;

  static TruncatedSeries from_dims(std::vector<mpz_class> dims);
  static TruncatedSeries from_rational(const RationalSeries& s, int D);
  bool is_zero() const;
  std::string to_string() const;
};

/// Attempts to write the series as num / (1 - T)^nvars, then cancels common
/// (1 - T) factors. If the computed numerator has nonzero coefficients in the
/// unstable tail window (degree > D - nvars), the form is flagged unstable.
TruncatedSeries series_recognize(const TruncatedSeries& s, int nvars);

}  // namespace cubetor
