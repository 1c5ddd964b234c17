#include <doctest.h>

#include <algorithm>
#include <random>

#include "cubetor/groebner.hpp"
#include "cubetor/ideals.hpp"
#include "cubetor/koszul.hpp"

using namespace cubetor;

namespace {
const Field F = Field::rationals();
Poly var(int arity, int i) { return Poly::variable(arity, i, F); }
}  // namespace

TEST_CASE("basic reduced bases") {
  MonomialOrder ord = MonomialOrder::degrevlex(3);
  // a single linear form is its own basis
  Poly f = var(3, 0).sub(var(3, 1), F);
  GroebnerBasis gb = buchberger_reduced({f}, ord, F);
  REQUIRE(gb.size() == 1);
  CHECK(gb[0] == f);

  // (U0*U2 - U1*U2, U0 - U1) collapses to the linear form
  Poly g = var(3, 0).mul(var(3, 2), F).sub(var(3, 1).mul(var(3, 2), F), F);
  GroebnerBasis gb2 = buchberger_reduced({g, f}, ord, F);
  REQUIRE(gb2.size() == 1);
  CHECK(gb2[0] == f);
}

TEST_CASE("normal forms") {
  MonomialOrder ord = MonomialOrder::degrevlex(3);
  Poly f = var(3, 0).sub(var(3, 1), F);
  GroebnerBasis gb = buchberger_reduced({f}, ord, F);
  CHECK(normal_form(var(3, 0), gb) == var(3, 1));
  CHECK(normal_form(f, gb).is_zero());
  // idempotent
  Poly h = var(3, 0).mul(var(3, 0), F).add(var(3, 2), F);
  Poly n1 = normal_form(h, gb);
  CHECK(normal_form(n1, gb) == n1);
}

TEST_CASE("membership matches listed generators") {
  PartialBraidGraph g = example_three_vertex_partial_graph();
  MonomialOrder ord = MonomialOrder::degrevlex(7);
  auto LQ = ideal_sum(linear_ideal(g, F), quadratic_ideal(g, F));
  GroebnerBasis gb = buchberger_reduced(LQ.polys(), ord, F);
  for (const auto& gi : LQ.gens) CHECK(normal_form(gi.poly, gb).is_zero());
  // the nonlocal top generator reduces to zero as well
  Poly NW = var(7, 0).mul(var(7, 4), F).sub(var(7, 2).mul(var(7, 5), F), F);
  CHECK(normal_form(NW, gb).is_zero());
}

TEST_CASE("ideal equality is insensitive to generator presentation") {
  PartialBraidGraph g = example_three_vertex_partial_graph();
  MonomialOrder ord = MonomialOrder::degrevlex(7);
  auto LQ = ideal_sum(linear_ideal(g, F), quadratic_ideal(g, F));
  auto LN = ideal_sum(linear_ideal(g, F), nonlocal_ideal(g, F));
  CHECK(ideal_equal(LQ.polys(), LN.polys(), ord, F));

  auto perm = LQ.polys();
  std::reverse(perm.begin(), perm.end());
  CHECK(ideal_equal(LQ.polys(), perm, ord, F));
}

TEST_CASE("reduced basis is unique under generator shuffles") {
  std::mt19937 rng(17);
  // twenty ideals from braid graphs, twenty shuffles each
  std::vector<std::vector<Poly>> ideals;
  for (const char* word : {"1 1", "1 1 1", "1 2", "2 1", "1 -2 1 -2"}) {
    DecoratedDiagram d = build_decorated_diagram(parse_braid_word(word));
    int n = d.crossing_count();
    for (long mask = 0; mask < (1L << n) && ideals.size() < 20; mask += (n >= 3 ? 3 : 1)) {
      ResolutionAssignment I;
      for (int t = 0; t < n; ++t) I.bits.push_back((mask >> t) & 1);
      PartialBraidGraph g = resolve(d, I);
      ideals.push_back(ideal_sum(linear_ideal(g, F), nonlocal_ideal(g, F)).polys());
    }
  }
  REQUIRE(ideals.size() >= 15);
  for (auto& gens : ideals) {
    MonomialOrder ord = MonomialOrder::degrevlex(gens.front().arity());
    GroebnerBasis ref = buchberger_reduced(gens, ord, F);
    for (int shuffle = 0; shuffle < 20; ++shuffle) {
      std::shuffle(gens.begin(), gens.end(), rng);
      GroebnerBasis gb = buchberger_reduced(gens, ord, F);
      REQUIRE(gb.size() == ref.size());
      for (size_t i = 0; i < gb.size(); ++i) CHECK(gb[i] == ref[i]);
    }
  }
}

TEST_CASE("hilbert series of simple quotients") {
  MonomialOrder ord = MonomialOrder::degrevlex(3);
  // R/(U0 - U1) in 3 variables: 1/(1-T)^2
  GroebnerBasis gb = buchberger_reduced({var(3, 0).sub(var(3, 1), F)}, ord, F);
  RationalSeries hs = quotient_hilbert_rational(gb);
  CHECK(hs.denom_pow == 2);
  CHECK(hs.num == ZPoly::one());
  TruncatedSeries ts = quotient_hilbert(gb, 6);
  CHECK(ts.coeff == std::vector<mpz_class>({1, 2, 3, 4, 5, 6, 7}));

  // R/(0) in 3 variables
  GroebnerBasis zero = buchberger_reduced(std::vector<Poly>{}, ord, F);
  RationalSeries hs0 = quotient_hilbert_rational(zero);
  CHECK(hs0.denom_pow == 3);
  CHECK(hs0.num == ZPoly::one());
}

TEST_CASE("hilbert function agrees with dense row reduction") {
  // every resolution of small words, both ideal kinds, degree by degree
  for (const char* word : {"1 1", "1 2"}) {
    DecoratedDiagram d = build_decorated_diagram(parse_braid_word(word));
    int n = d.crossing_count();
    for (long mask = 0; mask < (1L << n); ++mask) {
      ResolutionAssignment I;
      for (int t = 0; t < n; ++t) I.bits.push_back((mask >> t) & 1);
      PartialBraidGraph g = resolve(d, I);
      if (g.edge_count > 6) continue;
      for (auto kind : {IdealKind::Nonlocal, IdealKind::Quadratic}) {
        auto gens = kind == IdealKind::Nonlocal ? nonlocal_ideal(g, F).polys()
                                                : quadratic_ideal(g, F).polys();
        MonomialOrder ord = MonomialOrder::degrevlex(g.edge_count);
        GroebnerBasis gb = buchberger_reduced(gens, ord, F);
        auto hs = quotient_hilbert(gb, 6);
        auto brute = quotient_dims_bruteforce(gens, g.edge_count, 6, F);
        for (int deg = 0; deg <= 6; ++deg) CHECK(hs.coeff[deg] == brute[deg]);
        // and the standard-monomial enumeration agrees with the series
        auto lts = gb.leading_terms();
        for (int deg = 0; deg <= 5; ++deg)
          CHECK(count_standard_monomials(lts, g.edge_count, deg) == hs.coeff[deg]);
      }
    }
  }
}

TEST_CASE("results are order independent") {
  PartialBraidGraph g = example_three_vertex_partial_graph();
  auto LN = ideal_sum(linear_ideal(g, F), nonlocal_ideal(g, F)).polys();
  auto LQ = ideal_sum(linear_ideal(g, F), quadratic_ideal(g, F)).polys();
  for (auto kind : {MonomialOrder::Kind::DegRevLex, MonomialOrder::Kind::DegLex,
                    MonomialOrder::Kind::Lex}) {
    MonomialOrder ord = MonomialOrder::natural(kind, 7);
    CHECK(ideal_equal(LN, LQ, ord, F));
    GroebnerBasis gb = buchberger_reduced(LN, ord, F);
    RationalSeries hs = quotient_hilbert_rational(gb);
    // dimensions agree across orders
    GroebnerBasis drl = buchberger_reduced(LN, MonomialOrder::degrevlex(7), F);
    CHECK(hs.equals(quotient_hilbert_rational(drl)));
  }
}

TEST_CASE("work budget raises a resource error") {
  // cyclic-ish ideal with a tiny budget
  std::vector<Poly> gens;
  int arity = 4;
  for (int i = 0; i < 4; ++i) {
    Poly p = var(arity, i).mul(var(arity, (i + 1) % 4), F)
                 .add(var(arity, (i + 2) % 4).mul(var(arity, (i + 3) % 4), F), F);
    gens.push_back(p);
  }
  GBOptions tiny;
  tiny.reduction_budget = 3;
  CHECK_THROWS_AS(buchberger_reduced(gens, MonomialOrder::degrevlex(arity), F, tiny),
                  ResourceError);
}

TEST_CASE("prime field bases") {
  MonomialOrder ord = MonomialOrder::degrevlex(3);
  Field F2 = Field::prime(2);
  PartialBraidGraph g = example_kink_graph();
  auto LN = ideal_sum(linear_ideal(g, F2), nonlocal_ideal(g, F2));
  GroebnerBasis gb = buchberger_reduced(LN.polys(), ord, F2);
  RationalSeries hs = quotient_hilbert_rational(gb);
  CHECK(hs.denom_pow == 2);
  CHECK(hs.num == ZPoly::one());
}

TEST_CASE("gb cache round trip") {
  auto dir = std::filesystem::temp_directory_path() / "cubetor-gb-cache-test";
  std::filesystem::remove_all(dir);
  GBCache cache(dir);
  MonomialOrder ord = MonomialOrder::degrevlex(3);
  Poly f = var(3, 0).sub(var(3, 1), F);
  GroebnerBasis gb = buchberger_reduced({f}, ord, F);
  cache.put("k1", gb);
  auto hit = cache.get("k1", ord, F);
  REQUIRE(hit.has_value());
  REQUIRE(hit->size() == 1);
  CHECK((*hit)[0] == f);
  CHECK_FALSE(cache.get("k2", ord, F).has_value());
  CHECK_FALSE(cache.get("k1", MonomialOrder::lex(3), F).has_value());
  std::filesystem::remove_all(dir);
}
