#include "doctest.h"

#include "uwk/fingroups.hpp"

using namespace uwk;
using namespace uwk::fingroups;

TEST_SUITE("fingroups") {

TEST_CASE("finite field construction") {
  FiniteField F = FiniteField::make(3, 2);
  CHECK(F.q == 9);
  // least irreducible over F_3 is x^2 + 1
  CHECK(F.modulus == std::vector<int>{1, 0});
  for (int a = 1; a < F.q; ++a) {
    CHECK(F.mul(a, F.inv(a)) == 1);
    CHECK(F.frob(F.frob(a)) == a);  // Frobenius has order 2
  }
  CHECK(F.pow(2, 2) == 1);  // 2 lies in the prime field: 2*2 = 4 = 1 mod 3
  FiniteField F5 = FiniteField::make(5, 2);
  CHECK(F5.q == 25);
  // x^2 + 1 splits mod 5; x^2 + 2 is the least irreducible
  CHECK(F5.modulus == std::vector<int>{2, 0});
}

TEST_CASE("group enumeration at (3,1)") {
  Groups g = build_groups(3, 1);
  CHECK(g.U11.size() == 96);
  CHECK(g.GU11.size() == 192);
  CHECK(g.GL2k.size() == 48);
  CHECK(g.U1.size() == 4);
  // closure sanity: products stay inside
  std::vector<int> gens = g.U11.generators();
  CHECK(!gens.empty());
  for (int a : gens)
    for (int b : gens) CHECK(g.U11.mul(a, b) >= 0);
}

TEST_CASE("size guard") { CHECK_THROWS_AS(build_groups(13, 1), precondition_error); }

TEST_CASE("pushout decompositions at (3,1)") {
  Groups g = build_groups(3, 1);
  PushoutReport r = pushout_check(g);
  CHECK(r.ok);
  CHECK(r.u11 == 96);
  CHECK(r.gu11 == 192);
  CHECK(r.u1 == 4);
  CHECK(r.gu11 == r.u11 * 8 / 4);
  CHECK(r.gu11 == r.gl2k * 8 / 2);
}

TEST_CASE("central idempotents") {
  Groups g = build_groups(3, 1);
  IdempotentFamily fam = central_idempotents(g.F, g.U1);
  CHECK(fam.zelems.size() == 4);
  // completeness and orthogonality on a module
  FModule m = permutation_module(g.GU11, g.F, g.GU11.generators()[0]);
  CHECK(idempotent_module_check(g, m));
}

TEST_CASE("crossed product structure") {
  Groups g = build_groups(3, 1);
  CrossedProductReport r = crossed_product_check(g);
  CHECK(r.ok);
  CHECK(r.rank == 2);
}

TEST_CASE("weight modules are simple and transfer preserves simplicity") {
  Groups g = build_groups(3, 1);
  for (int r = 0; r <= 2; ++r)
    for (Int b = 0; b < 4; ++b) {
      FModule v = weight_module(g, r, b);
      TransferResult tr = transfer_module(g, v, (r + 2 * b) % 4);
      CHECK(tr.simple_before);
      CHECK(tr.simple_after);
    }
  // a central-character mismatch is rejected
  FModule v = weight_module(g, 1, 0);
  CHECK_THROWS_AS(transfer_module(g, v, 0), precondition_error);
}

TEST_CASE("transfer round trip") {
  Groups g = build_groups(3, 1);
  std::vector<int> gens = g.U11.generators();
  FModule v = weight_module(g, 2, 1);
  TransferResult tr = transfer_module(g, v, (2 + 2) % 4);
  FModule back = restrict_module(tr.over_gu, g.U11);
  CHECK(modules_isomorphic(v, back, gens));
}

TEST_CASE("trivial module transfers to the trivial module") {
  Groups g = build_groups(3, 1);
  FModule v = weight_module(g, 0, 0);
  TransferResult tr = transfer_module(g, v, 0);
  CHECK(tr.simple_before);
  CHECK(tr.simple_after);
  DMat one = DMat::identity_mat(1);
  for (int i : g.GL2k.generators()) CHECK(mat_equal(tr.over_gl2.act(i), one));
}

TEST_CASE("length-2 extension keeps its multiplicities") {
  Groups g = build_groups(3, 1);
  FModule v = weight_module(g, 3, 0);  // Sym^3, dimension 4
  std::vector<int> ugens = g.U11.generators();
  CHECK_FALSE(is_simple(v, ugens, 1ULL));
  std::vector<FModule> ufac = composition_factors(v, ugens);
  REQUIRE(ufac.size() == 2);
  CHECK(ufac[0].dim == 2);
  CHECK(ufac[1].dim == 2);
  TransferResult tr = transfer_module(g, v, 3);
  std::vector<int> ggens = g.GL2k.generators();
  std::vector<FModule> gfac = composition_factors(tr.over_gl2, ggens);
  REQUIRE(gfac.size() == 2);
  CHECK(gfac[0].dim == 2);
  CHECK(gfac[1].dim == 2);
  // the GU factors restrict to the U and GL2 factors with equal multiplicity
  std::vector<int> gugens = g.GU11.generators();
  std::vector<FModule> gufac = composition_factors(tr.over_gu, gugens);
  REQUIRE(gufac.size() == 2);
  for (const FModule& sig : gufac) {
    int mult_gu = 0;
    for (const FModule& x : gufac)
      if (modules_isomorphic(sig, x, gugens)) ++mult_gu;
    FModule su = restrict_module(sig, g.U11);
    int mult_u = 0;
    for (const FModule& x : ufac)
      if (modules_isomorphic(su, x, ugens)) ++mult_u;
    FModule sg = restrict_module(sig, g.GL2k);
    int mult_g = 0;
    for (const FModule& x : gfac)
      if (modules_isomorphic(sg, x, ggens)) ++mult_g;
    CHECK(mult_gu == mult_u);
    CHECK(mult_gu == mult_g);
  }
}

TEST_CASE("orders at (5,1)") {
  Groups g = build_groups(5, 1);
  PushoutReport r = pushout_check(g);
  CHECK(r.ok);
  CHECK(r.u11 == 720);
  CHECK(r.gu11 == 2880);
  CHECK(r.u1 == 6);
  CHECK(r.gl2k == 480);
}

}  // TEST_SUITE
