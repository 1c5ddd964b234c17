#include "cubetor/field.hpp"

namespace cubetor {

namespace {
bool is_prime(unsigned long p) {
  if (p < 2) return false;
  for (unsigned long d = 2; d * d <= p; ++d)
    if (p % d == 0) return false;
  return true;
}
}  // namespace

Field Field::prime(unsigned long p) {
  if (!is_prime(p)) throw std::invalid_argument("field modulus must be prime: " + std::to_string(p));
  Field f;
  f.kind_ = Kind::Prime;
  f.p_ = p;
  return f;
}

Field Field::parse(const std::string& text) {
  if (text == "q" || text == "Q" || text == "rationals") return rationals();
  if (text.rfind("fp:", 0) == 0) return prime(std::stoul(text.substr(3)));
  throw std::invalid_argument("unknown field spec: " + text + " (expected q or fp:<p>)");
}

std::string Field::describe() const {
  return kind_ == Kind::Rationals ? "q" : "fp:" + std::to_string(p_);
}

mpq_class Field::reduce(const mpq_class& x) const {
  if (kind_ == Kind::Rationals) {
    mpq_class r = x;
    r.canonicalize();
    return r;
  }
  mpz_class p(static_cast<unsigned long>(p_));
  mpz_class den = x.get_den();
  mpz_class num = x.get_num();
  mpz_class d = den % p;
  if (d < 0) d += p;
  if (d == 0) throw std::domain_error("denominator not invertible mod p");
  mpz_class dinv;
  if (mpz_invert(dinv.get_mpz_t(), d.get_mpz_t(), p.get_mpz_t()) == 0)
    throw std::domain_error("denominator not invertible mod p");
  mpz_class r = (num % p) * dinv % p;
  if (r < 0) r += p;
  return mpq_class(r);
}

mpq_class Field::inv(const mpq_class& a) const {
  if (is_zero(a)) throw std::domain_error("division by zero");
  if (kind_ == Kind::Rationals) {
    mpq_class r = 1 / a;
    r.canonicalize();
    return r;
  }
  mpz_class p(static_cast<unsigned long>(p_));
  mpq_class ra = reduce(a);
  mpz_class v = ra.get_num();
  mpz_class vinv;
  if (mpz_invert(vinv.get_mpz_t(), v.get_mpz_t(), p.get_mpz_t()) == 0)
    throw std::domain_error("element not invertible mod p");
  return mpq_class(vinv);
}

}  // namespace cubetor
