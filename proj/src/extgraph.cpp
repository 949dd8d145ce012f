#include "uwk/extgraph.hpp"

namespace uwk::extgraph {

std::vector<GraphVector> sigma_set(int f) {
  require(f >= 1, "f must be >= 1");
  std::vector<GraphVector> out;
  out.reserve(size_t(1) << f);
  for (unsigned mask = 0; mask < (1u << f); ++mask) {
    std::vector<Int> c(f);
    for (int j = 0; j < f; ++j) c[j] = (mask >> j) & 1;
    out.emplace_back(std::move(c), Side::unitary);
  }
  return out;
}

GraphVector weyl_act_graph(const lattice::WeylElement& w, const GraphVector& v) {
  require(w.f() == static_cast<int>(v.coords.size()), "Weyl/graph length mismatch");
  GraphVector r = v;
  for (size_t j = 0; j < r.coords.size(); ++j)
    if (w.bits[j]) r.coords[j] = -r.coords[j];
  return r;
}

namespace {
bool region_check(const std::vector<IntPair>& e, const std::vector<Int>& omega, Int p) {
  require(e.size() == omega.size(), "graph vector length mismatch");
  for (size_t j = 0; j < e.size(); ++j) {
    Int v = (e[j][0] - e[j][1]) + omega[j];
    if (v < 0 || v >= p - 1) return false;
  }
  return true;
}
}  // namespace

bool in_recentered_region(const GraphVector& omega, const UnitaryCharacter& mu, Int p) {
  return region_check(mu.e, omega.coords, p);
}

bool in_recentered_region(const GraphVector& omega, const DoubleCharacter& mu, Int p) {
  return region_check(mu.e, omega.coords, p);
}

std::vector<IntPair> OmegaElement::dot_apply(const std::vector<IntPair>& nu) const {
  require(nu.size() == wbits.size(), "dot action length mismatch");
  std::vector<IntPair> r(nu.size());
  for (size_t j = 0; j < nu.size(); ++j) {
    IntPair x = nu[j] + p * lambda[j] + IntPair{1, 0};
    if (wbits[j]) x = swapped(x);
    r[j] = x - IntPair{1, 0};
  }
  return r;
}

bool OmegaElement::verify() const {
  for (size_t j = 0; j < wbits.size(); ++j) {
    Int pr = lambda[j][0] - lambda[j][1];
    if (wbits[j] ? (pr != -1) : (pr != 0)) return false;
  }
  std::vector<IntPair> img = dot_apply(certificate);
  for (const IntPair& x : img) {
    Int pr = x[0] - x[1] + 1;
    if (pr <= 0 || pr >= p) return false;
  }
  return true;
}

OmegaElement omega_element(const std::vector<Int>& classvec, Int p) {
  const int n = static_cast<int>(classvec.size());
  OmegaElement el;
  el.p = p;
  el.wbits.assign(n, 0);
  el.lambda.assign(n, IntPair{0, 0});
  el.certificate.assign(n, IntPair{(p - 1) / 2 - 1, 0});  // 0-deep test character
  for (int j = 0; j < n; ++j) {
    bool found = false;
    for (Int bound = 2; bound <= 3 && !found; ++bound) {
      for (int w = 0; w < 2 && !found; ++w) {
        for (Int a = -bound; a <= bound && !found; ++a) {
          for (Int b = -bound; b <= bound && !found; ++b) {
            if (a - b != (w ? -1 : 0)) continue;  // alcove inequalities, symbolically
            Int s = a + b;                        // class is invariant under the swap
            if ((classvec[j] - s) % 2 != 0) continue;
            Int t = (classvec[j] - s) / 2;  // X^0 correction
            el.wbits[j] = static_cast<uint8_t>(w);
            el.lambda[j] = {a + t, b + t};
            found = true;
          }
        }
      }
    }
    check_internal(found, "omega_element: search failed");
  }
  check_internal(el.verify(), "omega_element: candidate fails alcove verification");
  return el;
}

namespace {
// common core of t_map on either side
std::vector<IntPair> t_map_core(const std::vector<IntPair>& mu_e, const std::vector<Int>& omega,
                                Int p, Side side) {
  const int n = static_cast<int>(mu_e.size());
  // lift omega with second coordinates zero
  std::vector<IntPair> lift(n);
  for (int j = 0; j < n; ++j) lift[j] = {omega[j], 0};
  // classvec of -pi^{-1}(lift)
  std::vector<IntPair> shifted(n);
  if (side == Side::unitary) {
    lattice::UnitaryCharacter tmp =
        lattice::frobenius(lattice::UnitaryCharacter(lift), lattice::Direction::inverse);
    shifted = tmp.e;
  } else {
    lattice::DoubleCharacter tmp =
        lattice::frobenius(lattice::DoubleCharacter(lift), lattice::Direction::inverse);
    shifted = tmp.e;
  }
  std::vector<Int> classvec(n);
  for (int j = 0; j < n; ++j) classvec[j] = -(shifted[j][0] + shifted[j][1]);
  OmegaElement w = omega_element(classvec, p);
  std::vector<IntPair> arg(n);
  for (int j = 0; j < n; ++j) arg[j] = mu_e[j] + lift[j];
  return w.dot_apply(arg);
}
}  // namespace

SerreWeightClass t_map(const UnitaryCharacter& mu, const GraphVector& omega, Int p) {
  require(omega.side == Side::unitary && static_cast<int>(omega.coords.size()) == mu.f(),
          "t_map: graph vector must be unitary of length f");
  require(in_recentered_region(omega, mu, p), "t_map: omega outside the recentered region");
  return weights::canonicalize(
      UnitaryCharacter(t_map_core(mu.e, omega.coords, p, Side::unitary)), p);
}

SerreWeightClass t_map_double(const DoubleCharacter& mu, const GraphVector& omega, Int p) {
  require(static_cast<int>(omega.coords.size()) == 2 * mu.f(),
          "t_map_double: graph vector must have length 2f");
  require(in_recentered_region(omega, mu, p), "t_map_double: omega outside the recentered region");
  return weights::canonicalize(DoubleCharacter(t_map_core(mu.e, omega.coords, p, Side::dbl)), p);
}

GraphVector bc_graph(const GraphVector& omega) {
  require(omega.side == Side::unitary, "bc_graph expects a unitary-side vector");
  std::vector<Int> c(omega.coords);
  c.insert(c.end(), omega.coords.begin(), omega.coords.end());
  return GraphVector(std::move(c), Side::dbl);
}

bool adjacency(const GraphVector& a, const GraphVector& b) {
  require(a.coords.size() == b.coords.size(), "graph vector length mismatch");
  int diff = 0;
  bool unitstep = true;
  for (size_t j = 0; j < a.coords.size(); ++j) {
    Int d = a.coords[j] - b.coords[j];
    if (d != 0) {
      ++diff;
      if (d != 1 && d != -1) unitstep = false;
    }
  }
  return diff == 1 && unitstep;
}

Int graph_distance(const GraphVector& a, const GraphVector& b) {
  require(a.coords.size() == b.coords.size(), "graph vector length mismatch");
  Int d = 0;
  for (size_t j = 0; j < a.coords.size(); ++j)
    if (a.coords[j] != b.coords[j]) ++d;
  return d;
}

}  // namespace uwk::extgraph
