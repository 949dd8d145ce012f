#pragma once

// Crystalline-lift data: Hodge-Tate weights attached to a predicted weight,
// the presentation element v found by type-equivalence search, the exponent
// vectors alpha_{j'} with their p-weighted sum, and the Fontaine-Laffaille
// range check.

#include <vector>

#include "uwk/types.hpp"

namespace uwk::lifts {

using lattice::DoubleCharacter;
using lattice::UnitaryCharacter;
using lattice::WeylElement;
using weights::TameParam;

struct LiftData {
  DoubleCharacter ht_weights;
  WeylElement v;
  std::vector<IntPair> alphas;  // length 2f
  IntPair a0;                   // sum of p^{j'} alpha_{j'}
};

// slot j: mu_j + (1,0); slot j+f: -w(mu_j) + (1,0); requires mu p-restricted
DoubleCharacter ht_weights(const UnitaryCharacter& mu, Int p);

// some v with tau'((v,v), BC(mu) + eta') equivalent to rho's base-changed
// presentation tau'((s,s), BC(nu) + eta'); requires F(mu) predicted for rho
WeylElement find_presentation_v(const TameParam& rho, const UnitaryCharacter& mu);

struct AlphaData {
  std::vector<IntPair> alphas;
  IntPair a0;
};

// alpha_{j'} = v_1^{-1} ... v_{j'}^{-1} ((-w)^{[j'>f-1]}(mu_{j' mod f}) + eta'_{j'})
AlphaData alpha_exponents(const WeylElement& v, const UnitaryCharacter& mu, Int p);

// alpha_{j'} = -v_tau^{-1} w(alpha_{j'-f}) + (1,1) for all j', with v_tau the
// ordered product of the components of v
bool alpha_duality_holds(const WeylElement& v, const std::vector<IntPair>& alphas);

// mu_{j',2} + p > mu_{j',1} > mu_{j',2} for all j' and mu_{j'+f,i} = 1 - mu_{j',3-i}
bool fl_range_check(const DoubleCharacter& mu_prime, Int p);

// full pipeline for one (rho, mu)
LiftData make_lift_data(const TameParam& rho, const UnitaryCharacter& mu);

}  // namespace uwk::lifts
