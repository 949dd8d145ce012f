#include "uwk/shapes.hpp"

#include <algorithm>

namespace uwk::shapes {

const char* label_name(ComponentLabel l) {
  switch (l) {
    case ComponentLabel::c11: return "c11";
    case ComponentLabel::c22: return "c22";
    default: return "0";
  }
}

std::optional<AdmissibleWord> shape_of(const TameParam& rho, const DoubleTypePresentation& t) {
  require(rho.mu_depth() >= 1, "shape_of: rho must be 1-deep");
  require(types::is_conjugate_self_dual(t), "shape_of: type must be conjugate self-dual");
  std::optional<AdmissibleWord> found;
  for (const AdmissibleWord& w : types::admissible_symmetric(rho.f)) {
    if (types::equivalent(t, types::type_for_shape(rho, w))) {
      check_internal(!found, "shape_of: multiple symmetric words match");
      found = w;
    }
  }
  return found;
}

namespace {
// The starred letter at slot j acts on graph coordinates by x -> t + eps x,
// with t the pairing of its translation and eps = -1 exactly for wt10.
// x in Sigma_j lies in Sigma_j meet (star letter)^{-1}(Sigma_j) iff the
// image t + eps x lies back in {0,1}.
bool slot_in_intersection(const types::StarLetter& st, Int x) {
  Int t = st.translation[0] - st.translation[1];
  Int eps = st.weyl ? -1 : 1;
  Int img = t + eps * x;
  return img == 0 || img == 1;
}
}  // namespace

std::vector<Int> intersection_profile(const AdmissibleWord& w) {
  require(w.symmetric(), "intersection_profile: word must be symmetric");
  const int f = w.f();
  std::vector<types::StarLetter> st = types::star(w);
  std::vector<Int> out(f);
  for (int j = 0; j < f; ++j) {
    Int count = 0;
    for (Int x = 0; x <= 1; ++x)
      if (slot_in_intersection(st[j], x)) ++count;
    out[j] = count;
  }
  return out;
}

std::optional<GraphVector> sigma_coordinate(const TameParam& rho, const SerreWeightClass& sigma) {
  for (const GraphVector& om : extgraph::sigma_set(rho.f)) {
    GraphVector so = extgraph::weyl_act_graph(rho.s, om);
    if (extgraph::t_map(rho.mu, so, rho.p) == sigma) return om;
  }
  return std::nullopt;
}

std::vector<ComponentLabel> component_match(const TameParam& rho, const DoubleTypePresentation& t,
                                            const SerreWeightClass& sigma) {
  std::optional<AdmissibleWord> w = shape_of(rho, t);
  require(w.has_value(), "component_match: type has no shape relative to rho");
  std::optional<GraphVector> om = sigma_coordinate(rho, sigma);
  require(om.has_value(), "component_match: sigma is not a predicted weight");
  std::vector<Int> profile = intersection_profile(*w);
  std::vector<types::StarLetter> st = types::star(*w);
  const int f = rho.f;
  std::vector<ComponentLabel> out(f);
  for (int j = 0; j < f; ++j) {
    require(slot_in_intersection(st[j], om->coords[j]),
            "component_match: sigma is outside the intersection");
    if (profile[j] == 1)
      out[j] = ComponentLabel::zero;
    else
      out[j] = om->coords[j] == 0 ? ComponentLabel::c22 : ComponentLabel::c11;
  }
  return out;
}

int unique_diff_embedding(const TameParam& rho, const DoubleTypePresentation& t,
                          const SerreWeightClass& sigma1, const SerreWeightClass& sigma2) {
  std::optional<GraphVector> o1 = sigma_coordinate(rho, sigma1);
  std::optional<GraphVector> o2 = sigma_coordinate(rho, sigma2);
  require(o1 && o2, "unique_diff_embedding: weights must be predicted");
  require(extgraph::graph_distance(*o1, *o2) == 1,
          "unique_diff_embedding: weights must be at graph distance 1");
  std::vector<ComponentLabel> l1 = component_match(rho, t, sigma1);
  std::vector<ComponentLabel> l2 = component_match(rho, t, sigma2);
  int where = -1, count = 0;
  for (int j = 0; j < rho.f; ++j)
    if (l1[j] != l2[j]) {
      where = j;
      ++count;
    }
  check_internal(count == 1, "unique_diff_embedding: label vectors differ in != 1 slots");
  return where;
}

}  // namespace uwk::shapes
