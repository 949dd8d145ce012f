#pragma once

// The extension graph: weight-lattice classes recentred at mu, the set Sigma
// of 0/1 vectors, the alcove-stabilizer elements used by the translation maps
// t_map / t_map_double, base change on graph vectors, adjacency and graph
// distance.  Graph coordinates are coroot pairings, one per embedding.

#include <vector>

#include "uwk/lattice.hpp"
#include "uwk/weightclass.hpp"

namespace uwk::extgraph {

using lattice::DoubleCharacter;
using lattice::Side;
using lattice::UnitaryCharacter;
using weights::SerreWeightClass;

struct GraphVector {
  std::vector<Int> coords;
  Side side = Side::unitary;
  GraphVector() = default;
  GraphVector(std::vector<Int> c, Side s) : coords(std::move(c)), side(s) {}
  bool operator==(const GraphVector& o) const { return side == o.side && coords == o.coords; }
  bool operator<(const GraphVector& o) const {
    if (side != o.side) return side < o.side;
    return coords < o.coords;
  }
};

// all {0,1} vectors of length f, in binary counting order (2^f of them)
std::vector<GraphVector> sigma_set(int f);

// Weyl action on graph coordinates: negation at flagged slots
GraphVector weyl_act_graph(const lattice::WeylElement& w, const GraphVector& v);

bool in_recentered_region(const GraphVector& omega, const UnitaryCharacter& mu, Int p);
bool in_recentered_region(const GraphVector& omega, const DoubleCharacter& mu, Int p);

// An element w t_lambda of the extended affine Weyl group stabilizing the
// fundamental p-alcove under the p-dilated dot action.  The stabilizer
// condition per slot is <lambda, alpha^v> = 0 when the Weyl bit is trivial
// and -1 when it is the reflection; verify() checks this symbolically and
// re-checks on a 0-deep certificate character.
struct OmegaElement {
  std::vector<uint8_t> wbits;
  std::vector<IntPair> lambda;
  std::vector<IntPair> certificate;
  Int p = 0;

  // w(nu + p lambda + rho) - rho, slotwise
  std::vector<IntPair> dot_apply(const std::vector<IntPair>& nu) const;
  bool verify() const;
};

// The unique alcove-stabilizing element whose translation class in
// X^* / root lattice matches classvec (one integer per slot).  Found by the
// bounded search over per-slot translations with coordinates in [-2,2] before
// X^0 correction, widened once to [-3,3].
OmegaElement omega_element(const std::vector<Int>& classvec, Int p);

SerreWeightClass t_map(const UnitaryCharacter& mu, const GraphVector& omega, Int p);
SerreWeightClass t_map_double(const DoubleCharacter& mu, const GraphVector& omega, Int p);

// duplication (omega, omega); -w fixes coroot pairings
GraphVector bc_graph(const GraphVector& omega);

bool adjacency(const GraphVector& a, const GraphVector& b);
Int graph_distance(const GraphVector& a, const GraphVector& b);

}  // namespace uwk::extgraph
