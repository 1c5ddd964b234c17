#include <doctest.h>

#include "cubetor/series.hpp"

using namespace cubetor;

TEST_CASE("zpoly arithmetic and exact division") {
  ZPoly one = ZPoly::one();
  ZPoly t = ZPoly::monomial(1, 1);
  ZPoly f = one.sub(t);                       // 1 - T
  ZPoly g = f.mul(f);                         // (1 - T)^2
  CHECK(g.eval_at_one() == 0);
  CHECK(g.divide_one_minus_T() == f);
  CHECK(f.mul_one_minus_T() == g);
  CHECK_THROWS(one.add(t).divide_one_minus_T());
}

TEST_CASE("rational series reduce and expand") {
  // (1 - T^2) / (1-T)^3 = (1 + T) / (1-T)^2
  ZPoly num = ZPoly::one().sub(ZPoly::monomial(2, 1));
  RationalSeries s{num, 3};
  RationalSeries r = s.reduced();
  CHECK(r.denom_pow == 2);
  CHECK(r.num == ZPoly::one().add(ZPoly::monomial(1, 1)));
  auto dims = r.expand(4);
  // 1, 3, 5, 7, 9
  CHECK(dims == std::vector<mpz_class>({1, 3, 5, 7, 9}));
  CHECK(s.equals(r));
  CHECK(s.sub(r).is_zero());
}

TEST_CASE("recognize polynomial ring series") {
  // dims 1,2,3,... = 1/(1-T)^2
  std::vector<mpz_class> dims;
  for (int d = 0; d <= 10; ++d) dims.push_back(d + 1);
  TruncatedSeries s = TruncatedSeries::from_dims(dims);
  TruncatedSeries r = series_recognize(s, 2);
  REQUIRE(r.rational.has_value());
  CHECK(r.rational->stable);
  CHECK(r.rational->denom_pow == 2);
  CHECK(r.rational->num == ZPoly::one());
}

TEST_CASE("recognize quotient by a linear form in 3 variables") {
  RationalSeries truth{ZPoly::one(), 2};
  TruncatedSeries s = TruncatedSeries::from_dims(truth.expand(9));
  TruncatedSeries r = series_recognize(s, 3);
  REQUIRE(r.rational.has_value());
  CHECK(r.rational->stable);
  CHECK(r.rational->denom_pow == 2);
  CHECK(r.rational->num == ZPoly::one());
}

TEST_CASE("recognition window flags instability") {
  // dims of something that is not rational with denominator (1-T)^2
  std::vector<mpz_class> dims;
  for (int d = 0; d <= 8; ++d) dims.push_back(mpz_class(1) << d);  // 2^d
  TruncatedSeries r = series_recognize(TruncatedSeries::from_dims(dims), 2);
  REQUIRE(r.rational.has_value());
  CHECK_FALSE(r.rational->stable);
}

TEST_CASE("recognized form re-expands to the input") {
  ZPoly num = ZPoly::from_coeffs({1, 3, 2, -2});
  RationalSeries truth{num, 4};
  auto dims = truth.expand(12);
  TruncatedSeries r = series_recognize(TruncatedSeries::from_dims(dims), 11);
  REQUIRE(r.rational.has_value());
  CHECK(r.rational->stable);
  RationalSeries back{r.rational->num, r.rational->denom_pow};
  CHECK(back.expand(12) == dims);
  CHECK(back.reduced().denom_pow == 4);
}
