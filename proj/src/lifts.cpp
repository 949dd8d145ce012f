#include "uwk/lifts.hpp"

#include <algorithm>

namespace uwk::lifts {

DoubleCharacter ht_weights(const UnitaryCharacter& mu, Int p) {
  const int f = mu.f();
  for (int j = 0; j < f; ++j) {
    Int pr = lattice::coroot_pairing(mu, j);
    require(pr >= 0 && pr <= p - 1, "ht_weights: mu must be p-restricted");
  }
  std::vector<IntPair> r(2 * f);
  for (int j = 0; j < f; ++j) {
    r[j] = mu.e[j] + IntPair{1, 0};
    r[j + f] = -swapped(mu.e[j]) + IntPair{1, 0};
  }
  return DoubleCharacter(std::move(r));
}

WeylElement find_presentation_v(const TameParam& rho, const UnitaryCharacter& mu) {
  const int f = rho.f;
  require(mu.f() == f, "find_presentation_v: length mismatch");
  {
    // F(mu) must be a predicted weight of rho
    weights::SerreWeightClass target = weights::canonicalize(mu, rho.p);
    std::vector<weights::SerreWeightClass> predicted = weights::predicted_weights(rho);
    require(std::binary_search(predicted.begin(), predicted.end(), target),
            "find_presentation_v: F(mu) is not a predicted weight");
  }
  DoubleCharacter eta = lattice::eta_prime(f);
  types::DoubleTypePresentation target{lattice::doubled(rho.s),
                                       lattice::add(lattice::base_change(rho.mu), eta), rho.p, f};
  std::vector<WeylElement> found;
  for (unsigned mask = 0; mask < (1u << f); ++mask) {
    std::vector<uint8_t> vb(f);
    for (int j = 0; j < f; ++j) vb[j] = (mask >> j) & 1;
    WeylElement v(vb);
    types::DoubleTypePresentation cand{lattice::doubled(v),
                                       lattice::add(lattice::base_change(mu), eta), rho.p, f};
    if (types::equivalent(cand, target)) found.push_back(v);
  }
  require(!found.empty(), "find_presentation_v: no candidate v realizes the presentation");
  return found.front();
}

AlphaData alpha_exponents(const WeylElement& v, const UnitaryCharacter& mu, Int p) {
  const int f = mu.f();
  require(v.f() == f, "alpha_exponents: length mismatch");
  AlphaData out;
  out.alphas.resize(2 * f);
  uint8_t prefix = 0;  // parity of v_1 ... v_{j'}, indices mod f
  for (int jp = 0; jp < 2 * f; ++jp) {
    if (jp > 0) prefix ^= v.bits[jp % f];
    IntPair base = mu.e[jp % f];
    if (jp >= f) base = -swapped(base);
    IntPair x = base + IntPair{1, 0};
    out.alphas[jp] = prefix ? swapped(x) : x;
  }
  out.a0 = {0, 0};
  Int ppow = 1;
  for (int jp = 0; jp < 2 * f; ++jp) {
    out.a0 = out.a0 + ppow * out.alphas[jp];
    ppow *= p;
  }
  return out;
}

bool alpha_duality_holds(const WeylElement& v, const std::vector<IntPair>& alphas) {
  const int f = v.f();
  uint8_t vtau = 0;  // product of all components (elementary abelian group)
  for (uint8_t b : v.bits) vtau ^= b;
  const int n = 2 * f;
  for (int jp = 0; jp < n; ++jp) {
    IntPair prev = alphas[(jp - f + n) % n];
    IntPair rhs = -(vtau ? prev : swapped(prev)) + IntPair{1, 1};  // -v_tau^{-1} w(prev) + (1,1)
    if (alphas[jp] != rhs) return false;
  }
  return true;
}

bool fl_range_check(const DoubleCharacter& mu_prime, Int p) {
  const int f = mu_prime.f();
  for (int jp = 0; jp < 2 * f; ++jp) {
    const IntPair& x = mu_prime.e[jp];
    if (!(x[1] + p > x[0] && x[0] > x[1])) return false;
  }
  for (int jp = 0; jp < f; ++jp) {
    if (mu_prime.e[jp + f][0] != 1 - mu_prime.e[jp][1]) return false;
    if (mu_prime.e[jp + f][1] != 1 - mu_prime.e[jp][0]) return false;
  }
  return true;
}

LiftData make_lift_data(const TameParam& rho, const UnitaryCharacter& mu) {
  LiftData out;
  out.ht_weights = ht_weights(mu, rho.p);
  out.v = find_presentation_v(rho, mu);
  AlphaData a = alpha_exponents(out.v, mu, rho.p);
  out.alphas = std::move(a.alphas);
  out.a0 = a.a0;
  check_internal(alpha_duality_holds(out.v, out.alphas), "lift data violates alpha duality");
  return out;
}

}  // namespace uwk::lifts
