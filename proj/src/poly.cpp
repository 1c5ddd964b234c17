#include "cubetor/poly.hpp"

#include <algorithm>
#include <sstream>

namespace cubetor {

std::string Mono::to_string(const std::vector<std::string>& names) const {
  if (is_one()) return "1";
  std::ostringstream os;
  bool first = true;
  for (int i = 0; i < arity(); ++i) {
    if (e_[i] == 0) continue;
    if (!first) os << "*";
    os << names[i];
    if (e_[i] > 1) os << "^" << e_[i];
    first = false;
  }
  return os.str();
}

std::vector<std::string> default_names(int arity) {
  std::vector<std::string> names(arity);
  for (int i = 0; i < arity; ++i) names[i] = "U" + std::to_string(i);
  return names;
}

MonomialOrder MonomialOrder::parse(const std::string& name, int arity) {
  if (name == "degrevlex") return degrevlex(arity);
  if (name == "deglex") return deglex(arity);
  if (name == "lex") return lex(arity);
  throw std::invalid_argument("unknown monomial order: " + name);
}

std::string MonomialOrder::describe() const {
  std::string base;
  switch (kind) {
    case Kind::DegRevLex: base = "degrevlex"; break;
    case Kind::DegLex: base = "deglex"; break;
    case Kind::Lex: base = "lex"; break;
  }
  bool natural = true;
  for (size_t i = 0; i < priority.size(); ++i)
    if (priority[i] != static_cast<int>(i)) natural = false;
  if (!natural) {
    base += "[";
    for (size_t i = 0; i < priority.size(); ++i) {
      if (i) base += ",";
      base += std::to_string(priority[i]);
    }
    base += "]";
  }
  return base;
}

namespace {
const MonomialOrder& canonical_order(int arity) {
  thread_local std::map<int, MonomialOrder> cache;
  auto it = cache.find(arity);
  if (it == cache.end()) it = cache.emplace(arity, MonomialOrder::degrevlex(arity)).first;
  return it->second;
}
}  // namespace

bool PolyBuilder::CanonicalLess::operator()(const Mono& a, const Mono& b) const {
  return canonical_order(a.arity()).cmp(a, b) < 0;
}

void PolyBuilder::add(const Mono& m, const mpq_class& c) {
  auto [it, inserted] = acc_.emplace(m, c);
  if (!inserted) it->second += c;
}

Poly PolyBuilder::build(const Field& F) {
  Poly p(arity_);
  p.terms_.reserve(acc_.size());
  // map iterates ascending; we store descending
  for (auto it = acc_.rbegin(); it != acc_.rend(); ++it) {
    mpq_class c = F.reduce(it->second);
    if (!F.is_zero(c)) p.terms_.push_back(Term{it->first, std::move(c)});
  }
  return p;
}

Poly Poly::constant(int arity, const mpq_class& c, const Field& F) {
  PolyBuilder b(arity);
  b.add(Mono(arity), c);
  return b.build(F);
}

Poly Poly::variable(int arity, int var, const Field& F) {
  if (var < 0 || var >= arity) throw std::out_of_range("variable index out of range");
  Mono m(arity);
  m.bump(var);
  PolyBuilder b(arity);
  b.add(m, 1);
  return b.build(F);
}

Poly Poly::linear(int arity, const std::vector<std::pair<int, mpq_class>>& terms, const Field& F) {
  PolyBuilder b(arity);
  for (const auto& [v, c] : terms) {
    Mono m(arity);
    m.bump(v);
    b.add(m, c);
  }
  return b.build(F);
}

Poly Poly::from_terms(int arity, std::vector<Term> terms, const Field& F) {
  PolyBuilder b(arity);
  for (auto& t : terms) b.add(t.m, t.c);
  return b.build(F);
}

int Poly::degree() const {
  int d = -1;
  for (const auto& t : terms_) d = std::max(d, t.m.degree());
  return d;
}

bool Poly::is_homogeneous() const {
  if (terms_.empty()) return true;
  int d = terms_.front().m.degree();
  for (const auto& t : terms_)
    if (t.m.degree() != d) return false;
  return true;
}

Poly Poly::add(const Poly& o, const Field& F) const {
  PolyBuilder b(arity_);
  for (const auto& t : terms_) b.add(t.m, t.c);
  for (const auto& t : o.terms_) b.add(t.m, t.c);
  return b.build(F);
}

Poly Poly::sub(const Poly& o, const Field& F) const {
  PolyBuilder b(arity_);
  for (const auto& t : terms_) b.add(t.m, t.c);
  for (const auto& t : o.terms_) b.add(t.m, -t.c);
  return b.build(F);
}

Poly Poly::mul(const Poly& o, const Field& F) const {
  PolyBuilder b(arity_);
  for (const auto& s : terms_)
    for (const auto& t : o.terms_) b.add(s.m * t.m, s.c * t.c);
  return b.build(F);
}

Poly Poly::neg(const Field& F) const {
  Poly r(arity_);
  r.terms_.reserve(terms_.size());
  for (const auto& t : terms_) r.terms_.push_back(Term{t.m, F.neg(t.c)});
  return r;
}

Poly Poly::scale(const mpq_class& c, const Field& F) const {
  if (F.is_zero(c)) return Poly(arity_);
  Poly r(arity_);
  r.terms_.reserve(terms_.size());
  for (const auto& t : terms_) r.terms_.push_back(Term{t.m, F.mul(t.c, c)});
  return r;
}

Poly Poly::mul_term(const Mono& m, const mpq_class& c, const Field& F) const {
  if (F.is_zero(c)) return Poly(arity_);
  Poly r(arity_);
  r.terms_.reserve(terms_.size());
  for (const auto& t : terms_) r.terms_.push_back(Term{t.m * m, F.mul(t.c, c)});
  // multiplying by a fixed monomial preserves the canonical term ordering
  return r;
}

Poly Poly::specialize_zero(int var, const Field& F) const {
  if (var < 0 || var >= arity_) throw std::out_of_range("unknown variable");
  PolyBuilder b(arity_);
  for (const auto& t : terms_)
    if (t.m[var] == 0) b.add(t.m, t.c);
  return b.build(F);
}

Poly Poly::extend(int new_arity) const {
  if (new_arity < arity_) throw std::invalid_argument("extend must not shrink the ring");
  Poly r(new_arity);
  r.terms_.reserve(terms_.size());
  for (const auto& t : terms_) {
    std::vector<uint16_t> e(new_arity, 0);
    for (int i = 0; i < arity_; ++i) e[i] = t.m[i];
    r.terms_.push_back(Term{Mono(std::move(e)), t.c});
  }
  return r;
}

std::string Poly::to_string(const std::vector<std::string>& names) const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& t : terms_) {
    mpq_class c = t.c;
    bool negative = sgn(c) < 0;
    if (first) {
      if (negative) os << "-";
    } else {
      os << (negative ? " - " : " + ");
    }
    mpq_class a = abs(c);
    if (a != 1 || t.m.is_one()) {
      os << a.get_str();
      if (!t.m.is_one()) os << "*";
    }
    if (!t.m.is_one()) os << t.m.to_string(names);
    first = false;
  }
  return os.str();
}

Poly poly_arith(PolyOp op, const Poly& f, const Poly& g, const Field& F) {
  if (f.arity() != g.arity()) throw std::invalid_argument("polynomial arity mismatch");
  switch (op) {
    case PolyOp::Add: return f.add(g, F);
    case PolyOp::Sub: return f.sub(g, F);
    case PolyOp::Mul: return f.mul(g, F);
  }
  throw std::logic_error("unreachable");
}

}  // namespace cubetor
