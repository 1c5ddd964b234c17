#include <doctest.h>

#include <random>

#include "cubetor/poly.hpp"

using namespace cubetor;

namespace {

Poly random_poly(std::mt19937& rng, int arity, const Field& F, int max_terms = 5,
                 int max_deg = 3) {
  std::uniform_int_distribution<int> nt(0, max_terms);
  std::uniform_int_distribution<int> exp(0, max_deg);
  std::uniform_int_distribution<int> coef(-4, 4);
  PolyBuilder b(arity);
  int terms = nt(rng);
  for (int t = 0; t < terms; ++t) {
    Mono m(arity);
    for (int v = 0; v < arity; ++v) {
      int e = exp(rng);
      if (e > 0 && m.degree() + e <= max_deg) m.bump(v, e);
    }
    b.add(m, coef(rng));
  }
  return b.build(F);
}

}  // namespace

TEST_CASE("linear combinations") {
  Field F = Field::rationals();
  Poly u1 = Poly::variable(4, 1, F), u2 = Poly::variable(4, 2, F), u3 = Poly::variable(4, 3, F);
  Poly a = u1.sub(u2, F);
  Poly b = u2.sub(u3, F);
  CHECK(poly_arith(PolyOp::Add, a, b, F) == u1.sub(u3, F));
  Poly prod = poly_arith(PolyOp::Mul, u1.sub(u2, F), u1.add(u2, F), F);
  CHECK(prod == u1.mul(u1, F).sub(u2.mul(u2, F), F));
  CHECK(poly_arith(PolyOp::Add, a, Poly::zero(4), F) == a);
}

TEST_CASE("arity mismatch rejected") {
  Field F = Field::rationals();
  CHECK_THROWS_AS(poly_arith(PolyOp::Add, Poly::zero(3), Poly::zero(4), F),
                  std::invalid_argument);
}

TEST_CASE("specialize to zero") {
  Field F = Field::rationals();
  Poly u0 = Poly::variable(4, 0, F), u2 = Poly::variable(4, 2, F), u3 = Poly::variable(4, 3, F);
  Poly f = u0.mul(u3, F).add(u2, F);
  CHECK(f.specialize_zero(0, F) == u2);
  Poly g = Poly::variable(4, 1, F).sub(u2, F);
  CHECK(g.specialize_zero(0, F) == g);
  CHECK(u0.mul(u0, F).specialize_zero(0, F).is_zero());
  CHECK_THROWS_AS(f.specialize_zero(9, F), std::out_of_range);
}

TEST_CASE("ring axioms on random triples, both fields") {
  for (const Field& F : {Field::rationals(), Field::prime(13)}) {
    std::mt19937 rng(2026);
    for (int trial = 0; trial < 80; ++trial) {
      Poly f = random_poly(rng, 3, F), g = random_poly(rng, 3, F), h = random_poly(rng, 3, F);
      CHECK(f.mul(g, F).mul(h, F) == f.mul(g.mul(h, F), F));
      CHECK(f.mul(g.add(h, F), F) == f.mul(g, F).add(f.mul(h, F), F));
      CHECK(f.add(g, F) == g.add(f, F));
      CHECK(f.mul(g, F) == g.mul(f, F));
    }
  }
}

TEST_CASE("multiplication is graded") {
  Field F = Field::rationals();
  std::mt19937 rng(7);
  for (int trial = 0; trial < 40; ++trial) {
    Poly f = random_poly(rng, 3, F);
    Poly g = random_poly(rng, 3, F);
    if (f.is_zero() || g.is_zero()) continue;
    PolyBuilder bf(3), bg(3);
    for (const auto& t : f.terms())
      if (t.m.degree() == f.degree()) bf.add(t.m, t.c);
    for (const auto& t : g.terms())
      if (t.m.degree() == g.degree()) bg.add(t.m, t.c);
    Poly fh = bf.build(F), gh = bg.build(F);
    Poly p = fh.mul(gh, F);
    CHECK(p.is_homogeneous());
    if (!p.is_zero()) CHECK(p.degree() == fh.degree() + gh.degree());
  }
}

TEST_CASE("prime field arithmetic reduces") {
  Field F = Field::prime(5);
  Poly three = Poly::constant(2, 3, F);
  Poly four = Poly::constant(2, 4, F);
  CHECK(three.add(four, F) == Poly::constant(2, 2, F));
  CHECK(three.mul(four, F) == Poly::constant(2, 2, F));
  CHECK(F.inv(2) == 3);
  CHECK_THROWS(Field::prime(6));
}

TEST_CASE("to_string is readable") {
  Field F = Field::rationals();
  Poly p = Poly::variable(3, 0, F).sub(Poly::variable(3, 1, F), F);
  CHECK(p.to_string({"x", "y", "z"}) == "x - y");
}
