#pragma once

#include <gmpxx.h>

#include <stdexcept>
#include <string>

namespace cubetor {

/// Thrown when a configurable work budget is exhausted.
class ResourceError : public std::runtime_error {
public:
  explicit ResourceError(const std::string& what) : std::runtime_error(what) {}
};

/// Coefficient field: exact rationals, or a prime field F_p.
///
/// Elements are carried as mpq_class values throughout; prime-field elements
/// are kept reduced to integers in [0, p). All arithmetic goes through the
/// field so there is a single exact code path.
class Field {
public:
  enum class Kind { Rationals, Prime };

  Field() = default;
  static Field rationals() { return Field(); }
  static Field prime(unsigned long p);

  /// Parses "q" or "fp:<p>".
  static Field parse(const std::string& text);

  Kind kind() const { return kind_; }
  unsigned long modulus() const { return p_; }
  bool operator==(const Field& o) const { return kind_ == o.kind_ && p_ == o.p_; }
  bool operator!=(const Field& o) const { return !(*this == o); }

  std::string describe() const;

  mpq_class reduce(const mpq_class& x) const;
  mpq_class add(const mpq_class& a, const mpq_class& b) const { return reduce(a + b); }
  mpq_class sub(const mpq_class& a, const mpq_class& b) const { return reduce(a - b); }
  mpq_class mul(const mpq_class& a, const mpq_class& b) const { return reduce(a * b); }
  mpq_class neg(const mpq_class& a) const { return reduce(-a); }
  mpq_class inv(const mpq_class& a) const;
  mpq_class div(const mpq_class& a, const mpq_class& b) const { return mul(a, inv(b)); }
  bool is_zero(const mpq_class& a) const { return sgn(a) == 0; }

private:
  Kind kind_ = Kind::Rationals;
  unsigned long p_ = 0;
};

}  // namespace cubetor
