#include "uwk/weights.hpp"

#include <algorithm>

#include "uwk/types.hpp"

namespace uwk::weights {

std::vector<SerreWeightClass> predicted_weights(const TameParam& rho) {
  require(rho.mu_depth() >= 1, "predicted_weights: mu must be 1-deep");
  std::vector<SerreWeightClass> out;
  for (const GraphVector& om : extgraph::sigma_set(rho.f)) {
    GraphVector so = extgraph::weyl_act_graph(rho.s, om);
    out.push_back(extgraph::t_map(rho.mu, so, rho.p));
  }
  std::sort(out.begin(), out.end());
  check_internal(std::adjacent_find(out.begin(), out.end()) == out.end(),
                 "predicted_weights: classes are not distinct");
  return out;
}

JhFactors jh_factors(const UnitaryCharacter& mu, const WeylElement& s, const WeylElement& w,
                     const UnitaryCharacter& nu, Int p) {
  const int f = mu.f();
  require(s.f() == f && w.f() == f && nu.f() == f, "jh_factors: length mismatch");
  require(lattice::in_sublattice(lattice::sub(nu, lattice::rho_sum(f)),
                                 lattice::Sublattice::rootLattice, p),
          "jh_factors: nu must lie in rho + root lattice");
  WeylElement swi = lattice::compose(s, w);  // s w^{-1}; entries are involutions
  UnitaryCharacter swi_nu = lattice::weyl_act(swi, nu);
  require(lattice::depth(lattice::sub(mu, swi_nu), p) >= 1,
          "jh_factors: mu - s w^-1(nu) must be 1-deep");

  std::vector<Int> nubar(f);
  for (int j = 0; j < f; ++j) nubar[j] = lattice::coroot_pairing(nu, j);

  JhFactors out;
  for (const GraphVector& om : extgraph::sigma_set(f)) {
    std::vector<Int> c(f);
    for (int j = 0; j < f; ++j) c[j] = om.coords[j] - nubar[j];
    GraphVector arg = extgraph::weyl_act_graph(swi, GraphVector(std::move(c), lattice::Side::unitary));
    out.factors.push_back(extgraph::t_map(mu, arg, p));
  }
  std::sort(out.factors.begin(), out.factors.end());
  check_internal(std::adjacent_find(out.factors.begin(), out.factors.end()) == out.factors.end(),
                 "jh_factors: classes are not distinct");

  UnitaryCharacter arg = lattice::sub(lattice::add(mu, lattice::rho_sum(f)), swi_nu);
  out.tau = types::DoubleTypePresentation{lattice::doubled(swi), lattice::base_change(arg), p, f};
  check_internal(types::is_conjugate_self_dual(out.tau),
                 "jh_factors: attached type is not conjugate self-dual");
  return out;
}

SerreWeightClass bc_weight(const SerreWeightClass& w) {
  require(w.side == lattice::Side::unitary, "bc_weight expects a unitary-side class");
  return canonicalize(lattice::base_change(UnitaryCharacter(w.rep)), w.p);
}

SerreWeightClass epsilon_involution(const SerreWeightClass& w) {
  require(w.side == lattice::Side::dbl, "epsilon_involution expects a double-side class");
  const int f = w.f;
  std::vector<IntPair> r(2 * f);
  for (int j = 0; j < f; ++j) {
    r[j] = -swapped(w.rep[j + f]);
    r[j + f] = -swapped(w.rep[j]);
  }
  return canonicalize(lattice::DoubleCharacter(std::move(r)), w.p);
}

Int ext1_dim(const UnitaryCharacter& mu, const GraphVector& omega, const GraphVector& omega_prime,
             Int p) {
  require(extgraph::in_recentered_region(omega, mu, p) &&
              extgraph::in_recentered_region(omega_prime, mu, p),
          "ext1_dim: arguments must lie in the recentered region");
  return extgraph::adjacency(omega, omega_prime) ? 1 : 0;
}

}  // namespace uwk::weights
