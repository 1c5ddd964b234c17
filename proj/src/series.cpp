#include "cubetor/series.hpp"

#include <sstream>
#include <stdexcept>

namespace cubetor {

ZPoly ZPoly::monomial(int exp, mpz_class c) {
  ZPoly p;
  if (c != 0) {
    p.off_ = exp;
    p.c_.push_back(std::move(c));
  }
  return p;
}

ZPoly ZPoly::from_coeffs(std::vector<mpz_class> coeffs, int offset) {
  ZPoly p;
  p.off_ = offset;
  p.c_ = std::move(coeffs);
  p.trim();
  return p;
}

void ZPoly::trim() {
  size_t lead = 0;
  while (lead < c_.size() && c_[lead] == 0) ++lead;
  if (lead > 0) {
    c_.erase(c_.begin(), c_.begin() + lead);
    off_ += static_cast<int>(lead);
  }
  while (!c_.empty() && c_.back() == 0) c_.pop_back();
  if (c_.empty()) off_ = 0;
}

mpz_class ZPoly::coeff(int exp) const {
  int i = exp - off_;
  if (i < 0 || i >= static_cast<int>(c_.size())) return 0;
  return c_[i];
}

ZPoly ZPoly::add(const ZPoly& o) const {
  if (is_zero()) return o;
  if (o.is_zero()) return *this;
  int lo = std::min(off_, o.off_);
  int hi = std::max(max_exp(), o.max_exp());
  std::vector<mpz_class> r(hi - lo + 1, 0);
  for (size_t i = 0; i < c_.size(); ++i) r[off_ - lo + i] += c_[i];
  for (size_t i = 0; i < o.c_.size(); ++i) r[o.off_ - lo + i] += o.c_[i];
  return from_coeffs(std::move(r), lo);
}

ZPoly ZPoly::sub(const ZPoly& o) const { return add(o.scale(-1)); }

ZPoly ZPoly::mul(const ZPoly& o) const {
  if (is_zero() || o.is_zero()) return zero();
  std::vector<mpz_class> r(c_.size() + o.c_.size() - 1, 0);
  for (size_t i = 0; i < c_.size(); ++i)
    for (size_t j = 0; j < o.c_.size(); ++j) r[i + j] += c_[i] * o.c_[j];
  return from_coeffs(std::move(r), off_ + o.off_);
}

ZPoly ZPoly::scale(const mpz_class& k) const {
  if (k == 0) return zero();
  ZPoly p = *this;
  for (auto& x : p.c_) x *= k;
  return p;
}

ZPoly ZPoly::shift(int by) const {
  ZPoly p = *this;
  if (!p.c_.empty()) p.off_ += by;
  return p;
}

mpz_class ZPoly::eval_at_one() const {
  mpz_class s = 0;
  for (const auto& x : c_) s += x;
  return s;
}

ZPoly ZPoly::divide_one_minus_T() const {
  if (is_zero()) return zero();
  if (eval_at_one() != 0) throw std::domain_error("not divisible by (1 - T)");
  // (1 - T) * (q_0 + q_1 T + ...) = q_0 + (q_1 - q_0) T + ...
  std::vector<mpz_class> q(c_.size() - 1);
  mpz_class acc = 0;
  for (size_t i = 0; i + 1 < c_.size(); ++i) {
    acc += c_[i];
    q[i] = acc;
  }
  return from_coeffs(std::move(q), off_);
}

ZPoly ZPoly::mul_one_minus_T() const {
  ZPoly t = shift(1);
  return sub(t);
}

std::string ZPoly::to_string(const std::string& var) const {
  if (is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (size_t i = 0; i < c_.size(); ++i) {
    if (c_[i] == 0) continue;
    int e = off_ + static_cast<int>(i);
    mpz_class a = abs(c_[i]);
    if (first) {
      if (c_[i] < 0) os << "-";
    } else {
      os << (c_[i] < 0 ? " - " : " + ");
    }
    if (a != 1 || e == 0) os << a.get_str();
    if (e != 0) {
      if (a != 1) os << "*";
      os << var;
      if (e != 1) os << "^" << e;
    }
    first = false;
  }
  return os.str();
}

RationalSeries RationalSeries::reduced() const {
  RationalSeries r = *this;
  if (r.num.is_zero()) {
    r.denom_pow = 0;
    return r;
  }
  while (r.denom_pow > 0 && r.num.eval_at_one() == 0) {
    r.num = r.num.divide_one_minus_T();
    r.denom_pow -= 1;
  }
  return r;
}

RationalSeries RationalSeries::add(const RationalSeries& o) const {
  int e = std::max(denom_pow, o.denom_pow);
  ZPoly a = num;
  for (int i = denom_pow; i < e; ++i) a = a.mul_one_minus_T();
  ZPoly b = o.num;
  for (int i = o.denom_pow; i < e; ++i) b = b.mul_one_minus_T();
  return RationalSeries{a.add(b), e}.reduced();
}

RationalSeries RationalSeries::sub(const RationalSeries& o) const {
  return add(o.scale(-1));
}

RationalSeries RationalSeries::scale(const mpz_class& k) const {
  RationalSeries r{num.scale(k), denom_pow};
  if (r.num.is_zero()) r.denom_pow = 0;
  return r;
}

bool RationalSeries::equals(const RationalSeries& o) const {
  return sub(o).is_zero();
}

std::vector<mpz_class> RationalSeries::expand(int D, int from) const {
  if (!num.is_zero() && num.min_exp() < from)
    throw std::domain_error("series has terms below the expansion window");
  std::vector<mpz_class> out(D - from + 1, 0);
  // 1/(1-T)^e has coefficients C(d+e-1, e-1)
  for (int d = from; d <= D; ++d) {
    mpz_class s = 0;
    for (int j = num.min_exp(); j <= std::min(num.max_exp(), d); ++j) {
      mpz_class c = num.coeff(j);
      if (c == 0) continue;
      if (denom_pow == 0) {
        if (j == d) s += c;
        continue;
      }
      mpz_class binom;
      mpz_bin_uiui(binom.get_mpz_t(), d - j + denom_pow - 1, denom_pow - 1);
      s += c * binom;
    }
    out[d - from] = s;
  }
  return out;
}

std::string RationalSeries::to_string(const std::string& var) const {
  RationalSeries r = reduced();
  if (r.num.is_zero()) return "0";
  std::string n = r.num.to_string(var);
  if (r.denom_pow == 0) return n;
  std::ostringstream os;
  os << "(" << n << ") / (1-" << var << ")";
  if (r.denom_pow != 1) os << "^" << r.denom_pow;
  return os.str();
}

TruncatedSeries TruncatedSeries::from_dims(std::vector<mpz_class> dims) {
  TruncatedSeries s;
  s.truncation = static_cast<int>(dims.size()) - 1;
  s.coeff = std::move(dims);
  return s;
}

TruncatedSeries TruncatedSeries::from_rational(const RationalSeries& r, int D) {
  TruncatedSeries s;
  s.truncation = D;
  s.coeff = r.expand(D);
  RationalSeries red = r.reduced();
  s.rational = RationalForm{red.num, red.denom_pow, true};
  return s;
}

bool TruncatedSeries::is_zero() const {
  for (const auto& c : coeff)
    if (c != 0) return false;
  return true;
}

std::string TruncatedSeries::to_string() const {
  if (rational) {
    RationalSeries r{rational->num, rational->denom_pow};
    std::string s = r.to_string();
    if (!rational->stable) s += " [unstable]";
    return s;
  }
  std::ostringstream os;
  os << "[";
  for (size_t i = 0; i < coeff.size(); ++i) {
    if (i) os << ", ";
    os << coeff[i].get_str();
  }
  os << "]";
  return os.str();
}

TruncatedSeries series_recognize(const TruncatedSeries& s, int nvars) {
  TruncatedSeries out = s;
  const int D = s.truncation;
  const int margin = std::max(1, std::min(6, (D + 1) / 2));
  // scan denominator exponents upward: the smallest e whose numerator
  // candidate ends in a zero window of the required width is the reduced form
  std::vector<mpz_class> numer = s.coeff;
  for (int e = 0; e <= nvars; ++e) {
    bool stable = true;
    for (int d = std::max(0, D - margin + 1); d <= D; ++d)
      if (numer[d] != 0) stable = false;
    if (stable) {
      ZPoly num = ZPoly::from_coeffs(std::vector<mpz_class>(
          numer.begin(), numer.begin() + std::max(0, D - margin + 1)));
      RationalSeries r = RationalSeries{num, e}.reduced();
      out.rational = RationalForm{r.num, r.denom_pow, true};
      return out;
    }
    if (e == nvars) break;
    std::vector<mpz_class> next(numer.size(), 0);
    for (size_t d = 0; d < numer.size(); ++d)
      next[d] = numer[d] - (d > 0 ? numer[d - 1] : mpz_class(0));
    numer = std::move(next);
  }
  ZPoly num = ZPoly::from_coeffs(std::vector<mpz_class>(numer.begin(), numer.end()));
  out.rational = RationalForm{num, nvars, false};
  return out;
}

}  // namespace cubetor
