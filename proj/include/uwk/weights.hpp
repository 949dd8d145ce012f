#pragma once

// Predicted weight sets, Jordan-Hoelder sets of reduced Deligne-Lusztig
// representations, base change and the epsilon involution on Serre weights,
// and the closed-form Ext^1 dimension.

#include <vector>

#include "uwk/extgraph.hpp"
#include "uwk/lattice.hpp"
#include "uwk/presentation.hpp"
#include "uwk/weightclass.hpp"

namespace uwk::weights {

using extgraph::GraphVector;
using lattice::UnitaryCharacter;
using lattice::WeylElement;

// A tame parameter presented as (s, mu); the parameter itself is
// tau(s, mu + eta) and all depth conditions refer to mu.
struct TameParam {
  WeylElement s;
  UnitaryCharacter mu;
  Int p = 0;
  int f = 0;

  Int mu_depth() const { return lattice::depth(mu, p); }
};

// { F(t_mu(s omega)) : omega in Sigma }, sorted; requires mu 1-deep.
std::vector<SerreWeightClass> predicted_weights(const TameParam& rho);

struct JhFactors {
  std::vector<SerreWeightClass> factors;  // sorted, 2^f distinct classes
  types::DoubleTypePresentation tau;      // tau'((sw^-1, sw^-1), BC(mu + rho - sw^-1 nu))
};

// Jordan-Hoelder set of the reduced member attached to (mu, s, w, nu);
// requires nu in rho + root lattice and mu - sw^-1(nu) 1-deep.
JhFactors jh_factors(const UnitaryCharacter& mu, const WeylElement& s, const WeylElement& w,
                     const UnitaryCharacter& nu, Int p);

// F(mu) -> F'(BC(mu)) on classes
SerreWeightClass bc_weight(const SerreWeightClass& w);

// F'(mu1, mu2) -> F'(-w(mu2), -w(mu1)); fixed points are exactly base changes
SerreWeightClass epsilon_involution(const SerreWeightClass& w);

// dim Ext^1 between F(t_mu(omega)) and F(t_mu(omega')): 1 iff adjacent
Int ext1_dim(const UnitaryCharacter& mu, const GraphVector& omega, const GraphVector& omega_prime,
             Int p);

}  // namespace uwk::weights
