#pragma once

#include <cstdint>
#include <numeric>
#include <stdexcept>
#include <string>
#include <vector>

namespace cubetor {

/// Exponent vector, dense over the ambient arity. Arities here are small
/// (one variable per diagram edge), so a packed encoding is not worth it.
class Mono {
public:
  Mono() = default;
  explicit Mono(int arity) : e_(arity, 0), deg_(0) {}
  Mono(std::vector<uint16_t> exps) : e_(std::move(exps)) {
    deg_ = std::accumulate(e_.begin(), e_.end(), 0);
  }

  int arity() const { return static_cast<int>(e_.size()); }
  int degree() const { return deg_; }
  uint16_t operator[](int i) const { return e_[i]; }
  bool is_one() const { return deg_ == 0; }

  void bump(int var, int by = 1) {
    e_[var] = static_cast<uint16_t>(e_[var] + by);
    deg_ += by;
  }

  Mono operator*(const Mono& o) const {
    Mono r = *this;
    for (int i = 0; i < arity(); ++i) r.e_[i] = static_cast<uint16_t>(r.e_[i] + o.e_[i]);
    r.deg_ = deg_ + o.deg_;
    return r;
  }

  bool divides(const Mono& o) const {
    if (deg_ > o.deg_) return false;
    for (int i = 0; i < arity(); ++i)
      if (e_[i] > o.e_[i]) return false;
    return true;
  }

  /// Quotient o / this. Requires divisibility.
  Mono quotient_of(const Mono& o) const {
    Mono r(arity());
    for (int i = 0; i < arity(); ++i) r.e_[i] = static_cast<uint16_t>(o.e_[i] - e_[i]);
    r.deg_ = o.deg_ - deg_;
    return r;
  }

  Mono lcm(const Mono& o) const {
    Mono r(arity());
    int d = 0;
    for (int i = 0; i < arity(); ++i) {
      r.e_[i] = std::max(e_[i], o.e_[i]);
      d += r.e_[i];
    }
    r.deg_ = d;
    return r;
  }

  bool coprime(const Mono& o) const {
    for (int i = 0; i < arity(); ++i)
      if (e_[i] > 0 && o.e_[i] > 0) return false;
    return true;
  }

  bool operator==(const Mono& o) const { return deg_ == o.deg_ && e_ == o.e_; }
  bool operator!=(const Mono& o) const { return !(*this == o); }

  std::string to_string(const std::vector<std::string>& names) const;

private:
  std::vector<uint16_t> e_;
  int deg_ = 0;
};

/// A monomial order: degrevlex (default), deglex or lex, refined by a
/// variable priority permutation (priority[0] is most significant).
struct MonomialOrder {
  enum class Kind { DegRevLex, DegLex, Lex };
  Kind kind = Kind::DegRevLex;
  std::vector<int> priority;

  static MonomialOrder degrevlex(int arity) { return natural(Kind::DegRevLex, arity); }
  static MonomialOrder deglex(int arity) { return natural(Kind::DegLex, arity); }
  static MonomialOrder lex(int arity) { return natural(Kind::Lex, arity); }
  static MonomialOrder natural(Kind k, int arity) {
    MonomialOrder o;
    o.kind = k;
    o.priority.resize(arity);
    std::iota(o.priority.begin(), o.priority.end(), 0);
    return o;
  }
  static MonomialOrder parse(const std::string& name, int arity);

  std::string describe() const;

  /// +1 if a > b in the order, -1 if a < b, 0 if equal.
  int cmp(const Mono& a, const Mono& b) const {
    switch (kind) {
      case Kind::DegRevLex: {
        if (a.degree() != b.degree()) return a.degree() > b.degree() ? 1 : -1;
        for (auto it = priority.rbegin(); it != priority.rend(); ++it) {
          if (a[*it] != b[*it]) return a[*it] < b[*it] ? 1 : -1;
        }
        return 0;
      }
      case Kind::DegLex:
        if (a.degree() != b.degree()) return a.degree() > b.degree() ? 1 : -1;
        [[fallthrough]];
      case Kind::Lex:
        for (int v : priority) {
          if (a[v] != b[v]) return a[v] > b[v] ? 1 : -1;
        }
        return 0;
    }
    return 0;
  }

  bool greater(const Mono& a, const Mono& b) const { return cmp(a, b) > 0; }
};

/// Default display names U0, U1, ... for a ring of the given arity.
std::vector<std::string> default_names(int arity);

}  // namespace cubetor
