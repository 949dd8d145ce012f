#pragma once

// The symmetry ideals tying embedding j' variables to embedding j'+f
// variables, their elimination/rewriting structure, the Jacobian determinant
// of the symmetry generators in the presentation coordinates, and the
// symbolic polarization identity.
//
// Variable tokens carry the embedding as a suffix: "c11j" lives at j',
// "c11jf" at j'+f.  Starred tokens ("dstar12j", "estar11j", ...) are units.

#include <vector>

#include "uwk/poly.hpp"
#include "uwk/types.hpp"

namespace uwk::polysym {

using types::Letter;

// the 8 generators of the single-type symmetry ideal for the given shape
// letter; sign_flip applies the boundary-embedding rule (every trailing sign
// switched)
std::vector<MvPolynomial> table1_ideal(Letter shape_letter, bool sign_flip);

// the 8 + 1 generators of the multi-type symmetry ideal; the extra generator
// involves b_{1,2} for the t01 row and b_{2,1} for the t10 row
std::vector<MvPolynomial> table2_ideal(Letter shape_sigma_letter, bool sign_flip);

// Eliminate every j'+f variable of poly using the two-term generators of the
// ideal (solving each generator for its j'+f variable); the result lives in
// j' variables only, is congruent to poly modulo the ideal, and the map is an
// idempotent ring homomorphism on the localized ring.
MvPolynomial symmetry_rewrite(const std::vector<MvPolynomial>& ideal, const MvPolynomial& poly);

struct JacobianResult {
  MvPolynomial det;     // det of the 8x8 Jacobian of the generators in the
                        // j'+f presentation coordinates
  MvPolynomial quoted;  // (dstar12j dstar21j)^7 dstar12jf dstar21jf
  bool matches;         // det == +-quoted
};

// shape wt10 only; the coordinate dictionary treats the two ratio coordinates
// as atomic and the starred units as affine (slope one) in their x*
// coordinate, so differentiation is taken directly in the d* units
JacobianResult jacobian_det_check(bool sign_flip);

// E^3 Ad(perm)(A^{-T}) = a Ad(diag(-1,1))(A) for a generic 2x2 matrix subject
// to det A = a^{-1} E^3, checked after clearing denominators, in both sign
// cases
bool polarization_identity_check();

}  // namespace uwk::polysym
