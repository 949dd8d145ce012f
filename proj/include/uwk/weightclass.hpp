#pragma once

// Serre weight classes: p-restricted characters modulo (p - pi) X^0, stored
// through a canonical representative.  The coroot pairings are invariants of
// the class and the canonical form fixes them in [0, p-1]; the residual X^0
// coordinates are reduced against the Hermite form of (p - pi) X^0.

#include <string>
#include <vector>

#include "uwk/lattice.hpp"

namespace uwk::weights {

using lattice::DoubleCharacter;
using lattice::Side;
using lattice::UnitaryCharacter;

struct SerreWeightClass {
  Side side = Side::unitary;
  std::vector<IntPair> rep;  // canonical representative, length f or 2f
  Int p = 0;
  int f = 0;

  bool operator==(const SerreWeightClass& o) const {
    return side == o.side && p == o.p && f == o.f && rep == o.rep;
  }
  bool operator<(const SerreWeightClass& o) const {
    if (side != o.side) return side < o.side;
    return rep < o.rep;
  }
  UnitaryCharacter as_unitary() const {
    require(side == Side::unitary, "weight class is not on the unitary side");
    return UnitaryCharacter(rep);
  }
  DoubleCharacter as_double() const {
    require(side == Side::dbl, "weight class is not on the double side");
    return DoubleCharacter(rep);
  }
  std::string text() const;  // "(a0,b0),(a1,b1),..."
};

SerreWeightClass canonicalize(const UnitaryCharacter& lam, Int p);
SerreWeightClass canonicalize(const DoubleCharacter& lam, Int p);

bool weights_equal(const SerreWeightClass& a, const SerreWeightClass& b);

}  // namespace uwk::weights
