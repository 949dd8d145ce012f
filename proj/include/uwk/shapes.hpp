#pragma once

// Shape determination for a (tame parameter, type) pair, per-embedding
// intersection profiles, and the matching of predicted weights to labelled
// irreducible components.

#include <optional>
#include <vector>

#include "uwk/types.hpp"

namespace uwk::shapes {

using extgraph::GraphVector;
using types::AdmissibleWord;
using types::DoubleTypePresentation;
using types::Letter;
using weights::SerreWeightClass;
using weights::TameParam;

enum class ComponentLabel : uint8_t { zero, c11, c22 };

const char* label_name(ComponentLabel l);  // "0" / "c11" / "c22"

// The unique symmetric admissible word w with t equivalent to tau'_w, or
// nullopt when the predicted set misses the type's JH set entirely.
std::optional<AdmissibleWord> shape_of(const TameParam& rho, const DoubleTypePresentation& t);

// Per-embedding size of Sigma_j intersected with the preimage of Sigma_j
// under the starred letter acting affinely on graph coordinates: 1 for t10
// and t01, 2 for wt10.
std::vector<Int> intersection_profile(const AdmissibleWord& w);

// The Sigma-coordinate of sigma in the predicted set: the omega with
// sigma = F(t_mu(s omega)), when it exists.
std::optional<GraphVector> sigma_coordinate(const TameParam& rho, const SerreWeightClass& sigma);

// Label vector indexed by graph coordinate j (the presentation matrices use
// the reversed slot 2f-1-j): zero at singleton-profile slots, else c22 when
// omega_j = 0 and c11 when omega_j = 1.
std::vector<ComponentLabel> component_match(const TameParam& rho, const DoubleTypePresentation& t,
                                            const SerreWeightClass& sigma);

// For two intersection weights at graph distance 1: the unique graph
// coordinate where their label vectors differ.
int unique_diff_embedding(const TameParam& rho, const DoubleTypePresentation& t,
                          const SerreWeightClass& sigma1, const SerreWeightClass& sigma2);

}  // namespace uwk::shapes
