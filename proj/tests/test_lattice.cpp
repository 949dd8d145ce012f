#include "doctest.h"

#include <random>

#include "uwk/lattice.hpp"

using namespace uwk;
using namespace uwk::lattice;

namespace {
UnitaryCharacter uc(std::vector<IntPair> v) { return UnitaryCharacter(std::move(v)); }

UnitaryCharacter random_character(std::mt19937_64& rng, int f) {
  std::vector<IntPair> e(f);
  for (int j = 0; j < f; ++j)
    e[j] = {static_cast<Int>(rng() % 21) - 10, static_cast<Int>(rng() % 21) - 10};
  return UnitaryCharacter(std::move(e));
}
}  // namespace

TEST_SUITE("lattice") {

TEST_CASE("coroot pairing") {
  CHECK(coroot_pairing(uc({{2, 0}}), 0) == 2);
  CHECK(coroot_pairing(uc({{1, 1}}), 0) == 0);
  CHECK(coroot_pairing(eta_prime(1), 1) == 1);
  CHECK_THROWS_AS(coroot_pairing(uc({{2, 0}}), 1), precondition_error);
}

TEST_CASE("frobenius on characters") {
  CHECK(frobenius(uc({{2, 0}}), Direction::forward) == uc({{0, -2}}));
  CHECK(frobenius(uc({{1, 0}, {3, 1}}), Direction::forward) == uc({{-1, -3}, {1, 0}}));
  std::mt19937_64 rng(1);
  for (int f = 1; f <= 4; ++f)
    for (int t = 0; t < 20; ++t) {
      UnitaryCharacter mu = random_character(rng, f);
      CHECK(frobenius(frobenius(mu, Direction::forward), Direction::inverse) == mu);
      // pi^f = -w and pi^{2f} = id
      UnitaryCharacter x = mu;
      for (int k = 0; k < f; ++k) x = frobenius(x, Direction::forward);
      UnitaryCharacter y = weyl_act(WeylElement::longest(f), mu);
      for (IntPair& v : y.e) v = -v;
      CHECK(x == y);
      for (int k = 0; k < f; ++k) x = frobenius(x, Direction::forward);
      CHECK(x == mu);
    }
}

TEST_CASE("weyl action") {
  CHECK(weyl_act(WeylElement::longest(1), uc({{2, 0}})) == uc({{0, 2}}));
  CHECK(weyl_act(WeylElement::identity(2), uc({{2, 0}, {1, 5}})) == uc({{2, 0}, {1, 5}}));
  std::mt19937_64 rng(2);
  for (int t = 0; t < 20; ++t) {
    UnitaryCharacter mu = random_character(rng, 3);
    std::vector<uint8_t> bits(3);
    for (auto& b : bits) b = rng() & 1;
    WeylElement w(bits);
    CHECK(weyl_act(w, weyl_act(w, mu)) == mu);
  }
}

TEST_CASE("base change") {
  CHECK(base_change(uc({{2, 0}})) == DoubleCharacter({{2, 0}, {0, -2}}));
  CHECK(base_change(uc({{0, 0}})) == DoubleCharacter({{0, 0}, {0, 0}}));
  std::mt19937_64 rng(3);
  for (int f = 1; f <= 3; ++f)
    for (int t = 0; t < 20; ++t) {
      UnitaryCharacter mu = random_character(rng, f);
      DoubleCharacter bc = base_change(mu);
      // -(w,w) pi'^f BC(mu) = BC(mu)
      DoubleCharacter x = bc;
      for (int k = 0; k < f; ++k) x = frobenius(x, Direction::forward);
      x = weyl_act(DoubleWeylElement(std::vector<uint8_t>(2 * f, 1)), x);
      for (IntPair& v : x.e) v = -v;
      CHECK(x == bc);
      // BC commutes with the diagonal Weyl action
      std::vector<uint8_t> bits(f);
      for (auto& b : bits) b = rng() & 1;
      WeylElement w(bits);
      CHECK(base_change(weyl_act(w, mu)) == weyl_act(doubled(w), bc));
      for (int j = 0; j < f; ++j)
        CHECK(coroot_pairing(bc, j) == coroot_pairing(bc, j + f));
    }
}

TEST_CASE("depth") {
  CHECK(depth(uc({{2, 0}}), 7) == 2);
  CHECK(depth(uc({{0, 0}}), 7) == 0);
  CHECK(depth(uc({{6, 0}}), 7) == -1);
}

TEST_CASE("sublattice membership") {
  CHECK(in_sublattice(uc({{8, 8}}), Sublattice::pMinusPiX0, 7));
  CHECK(in_sublattice(uc({{1, -1}}), Sublattice::rootLattice, 7));
  CHECK_FALSE(in_sublattice(uc({{4, 4}}), Sublattice::pMinusPiX0, 7));
  // double side: (p - pi') c_0 at f = 1 is (7,7) at slot 0 and (-1,-1) at slot 1
  CHECK(in_sublattice(DoubleCharacter({{7, 7}, {-1, -1}}), Sublattice::pMinusPiX0, 7));
  CHECK_FALSE(in_sublattice(DoubleCharacter({{8, 8}, {0, 0}}), Sublattice::pMinusPiX0, 7));
}

TEST_CASE("index of (p - pi) X^0") {
  for (Int p : {3LL, 5LL, 7LL, 11LL, 13LL})
    for (int f = 1; f <= 3; ++f) {
      Int pf = 1;
      for (int i = 0; i < f; ++i) pf *= p;
      CHECK(sublattice_index_x0(p, f, Side::unitary) == pf + 1);
      CHECK(sublattice_index_x0(p, f, Side::dbl) == pf * pf - 1);
    }
}

TEST_CASE("params validation") {
  CHECK_THROWS_AS(Params(4, 1), precondition_error);
  CHECK_THROWS_AS(Params(2, 1), precondition_error);
  CHECK_THROWS_AS(Params(7, 0), precondition_error);
}

}  // TEST_SUITE
