// Acceptance suite: runs the ten exactly-checkable criteria of the build and
// prints one pass/fail line per criterion.  Exit status is nonzero when any
// criterion fails.

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <random>
#include <set>
#include <vector>

#include "uwk/fingroups.hpp"
#include "uwk/lifts.hpp"
#include "uwk/parallel.hpp"
#include "uwk/shapes.hpp"
#include "uwk/symideal.hpp"

using namespace uwk;
namespace lat = uwk::lattice;
namespace eg = uwk::extgraph;
namespace wt = uwk::weights;
namespace ty = uwk::types;
namespace ps = uwk::polysym;
namespace fg = uwk::fingroups;

using lat::UnitaryCharacter;
using lat::WeylElement;

namespace {

int failures = 0;

void report(int idx, const char* what, bool pass, double seconds) {
  std::printf("%s criterion %d: %s (%.2fs)\n", pass ? "PASS" : "FAIL", idx, what, seconds);
  if (!pass) ++failures;
}

template <typename Fn>
void criterion(int idx, const char* what, Fn fn) {
  auto start = std::chrono::steady_clock::now();
  bool pass = false;
  try {
    pass = fn();
  } catch (const std::exception& e) {
    std::printf("     criterion %d threw: %s\n", idx, e.what());
    pass = false;
  }
  double sec = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  report(idx, what, pass, sec);
}

UnitaryCharacter random_deep(std::mt19937_64& rng, int f, Int p, Int depth) {
  std::vector<IntPair> e(f);
  for (int j = 0; j < f; ++j) {
    Int lo = depth, hi = p - depth - 2;
    Int r = lo + static_cast<Int>(rng() % static_cast<uint64_t>(hi - lo + 1));
    Int b = static_cast<Int>(rng() % (2 * static_cast<uint64_t>(p) + 1)) - p;
    e[j] = {r + b, b};
  }
  return UnitaryCharacter(std::move(e));
}

bool criterion1() {
  std::mt19937_64 rng(101);
  for (Int p : {7LL, 11LL, 13LL})
    for (int f = 1; f <= 3; ++f)
      for (int rep = 0; rep < 2; ++rep) {
        std::vector<uint8_t> sb(f, 0);
        if (rep == 1) sb[0] = 1;
        for (int t = 0; t < 20; ++t) {
          wt::TameParam rho{WeylElement(sb), random_deep(rng, f, p, 1), p, f};
          std::vector<wt::SerreWeightClass> pw = wt::predicted_weights(rho);
          if (static_cast<int>(pw.size()) != 1 << f) return false;
          if (std::adjacent_find(pw.begin(), pw.end()) != pw.end()) return false;
        }
      }
  return true;
}

bool criterion2() {
  std::mt19937_64 rng(102);
  for (int f = 1; f <= 3; ++f)
    for (int t = 0; t < 50; ++t) {
      Int p = 11;
      UnitaryCharacter mu = random_deep(rng, f, p, 0);
      lat::DoubleCharacter bc = lat::base_change(mu);
      // every omega in the recentered region
      std::vector<Int> lo(f), hi(f);
      for (int j = 0; j < f; ++j) {
        Int pr = lat::coroot_pairing(mu, j);
        lo[j] = -pr;
        hi[j] = p - 2 - pr;
      }
      std::vector<Int> cur = lo;
      while (true) {
        eg::GraphVector om(cur, lat::Side::unitary);
        wt::SerreWeightClass lhs = wt::bc_weight(eg::t_map(mu, om, p));
        wt::SerreWeightClass rhs = eg::t_map_double(bc, eg::bc_graph(om), p);
        if (!(lhs == rhs)) return false;
        int j = 0;
        while (j < f && cur[j] == hi[j]) {
          cur[j] = lo[j];
          ++j;
        }
        if (j == f) break;
        ++cur[j];
      }
    }
  return true;
}

bool criterion3() {
  for (int f : {1, 2}) {
    Int p = 11;
    wt::TameParam rho{WeylElement::identity(f), UnitaryCharacter(std::vector<IntPair>(f, {4, 0})),
                      p, f};
    std::vector<ty::AdmissibleWord> words = ty::admissible_all(f);
    std::vector<uint8_t> ok(words.size(), 0);
    parallel_for(words.size(), [&](size_t i) {
      bool sym = words[i].symmetric();
      bool csd = ty::is_conjugate_self_dual(ty::type_for_shape(rho, words[i]));
      ok[i] = csd == sym;
    });
    for (uint8_t x : ok)
      if (!x) return false;
  }
  return true;
}

bool criterion4() {
  std::mt19937_64 rng(104);
  for (int f = 1; f <= 3; ++f)
    for (int t = 0; t < 3; ++t) {
      Int p = 13;
      std::vector<uint8_t> sb(f);
      for (auto& x : sb) x = rng() & 1;
      wt::TameParam rho{WeylElement(sb), random_deep(rng, f, p, 4), p, f};
      ty::ThetaAssignment th = ty::theta(rho);  // asserts existence/uniqueness
      if (static_cast<int>(th.table.size()) != 1 << f) return false;
      // incidence over all symmetric words
      for (const ty::AdmissibleWord& w : ty::admissible_symmetric(f)) {
        std::vector<wt::SerreWeightClass> jh = ty::jh_of_symmetric_word(rho, w);
        for (const auto& [sigma, word] : th.table) {
          bool avoid = true;
          for (int j = 0; j < f; ++j)
            if (w.letters[j] == word[j]) avoid = false;
          if (std::binary_search(jh.begin(), jh.end(), sigma) != avoid) return false;
        }
      }
      for (const auto& [sigma, word] : th.table)
        if (static_cast<int>(ty::x_sigma(rho, sigma).size()) != 1 << f) return false;
    }
  return true;
}

bool criterion5() {
  Int p = 11;
  // exhaustive at f = 1 over canonical 2-deep classes
  {
    std::vector<std::pair<ty::DoubleTypePresentation, std::vector<std::vector<IntPair>>>> all;
    for (Int r = 2; r <= p - 4; ++r)
      for (Int b = 0; b <= p; ++b) {
        UnitaryCharacter mu({{r + b, b}});
        std::vector<ty::DoubleTypePresentation> ts = ty::types_containing_weight(mu, p);
        if (ts.size() != 2) return false;
        std::set<std::vector<std::vector<IntPair>>> jhs;
        wt::SerreWeightClass target = wt::canonicalize(mu, p);
        for (unsigned mask = 0; mask < 2; ++mask) {
          WeylElement s(std::vector<uint8_t>{static_cast<uint8_t>(mask)});
          wt::JhFactors jr =
              wt::jh_factors(mu, s, WeylElement::identity(1), lat::rho_sum(1), p);
          if (!std::binary_search(jr.factors.begin(), jr.factors.end(), target)) return false;
          std::vector<std::vector<IntPair>> key;
          for (const auto& x : jr.factors) key.push_back(x.rep);
          jhs.insert(key);
          all.emplace_back(jr.tau, key);
        }
        if (jhs.size() != 2) return false;
      }
    for (size_t i = 0; i < all.size(); ++i)
      for (size_t j = i + 1; j < all.size(); ++j)
        if (all[i].second == all[j].second && !ty::equivalent(all[i].first, all[j].first))
          return false;
  }
  // 200 random pairs at f = 2
  std::mt19937_64 rng(105);
  std::vector<std::pair<ty::DoubleTypePresentation, std::vector<std::vector<IntPair>>>> pool;
  for (int t = 0; t < 25; ++t) {
    UnitaryCharacter mu = random_deep(rng, 2, p, 2);
    wt::SerreWeightClass target = wt::canonicalize(mu, p);
    std::vector<ty::DoubleTypePresentation> ts = ty::types_containing_weight(mu, p);
    if (ts.size() != 4) return false;
    std::set<std::vector<std::vector<IntPair>>> jhs;
    for (unsigned mask = 0; mask < 4; ++mask) {
      std::vector<uint8_t> sb = {static_cast<uint8_t>(mask & 1),
                                 static_cast<uint8_t>((mask >> 1) & 1)};
      wt::JhFactors jr =
          wt::jh_factors(mu, WeylElement(sb), WeylElement::identity(2), lat::rho_sum(2), p);
      if (!std::binary_search(jr.factors.begin(), jr.factors.end(), target)) return false;
      std::vector<std::vector<IntPair>> key;
      for (const auto& x : jr.factors) key.push_back(x.rep);
      jhs.insert(key);
      pool.emplace_back(jr.tau, key);
    }
    if (jhs.size() != 4) return false;
  }
  for (int t = 0; t < 200; ++t) {
    size_t i = rng() % pool.size(), j = rng() % pool.size();
    bool same_jh = pool[i].second == pool[j].second;
    bool equiv = ty::equivalent(pool[i].first, pool[j].first);
    if (same_jh && !equiv) return false;
  }
  return true;
}

bool criterion6() {
  std::mt19937_64 rng(106);
  for (int f = 1; f <= 3; ++f) {
    Int p = 13;
    std::vector<uint8_t> sb(f);
    for (auto& x : sb) x = rng() & 1;
    wt::TameParam rho{WeylElement(sb), random_deep(rng, f, p, 2), p, f};
    std::vector<wt::SerreWeightClass> pw = wt::predicted_weights(rho);
    for (const ty::AdmissibleWord& w : ty::admissible_symmetric(f)) {
      ty::DoubleTypePresentation t = ty::type_for_shape(rho, w);
      std::vector<wt::SerreWeightClass> jh = ty::jh_of_symmetric_word(rho, w);
      std::vector<wt::SerreWeightClass> inter;
      for (const wt::SerreWeightClass& s : pw)
        if (std::binary_search(jh.begin(), jh.end(), s)) inter.push_back(s);
      // label vectors injective
      std::set<std::vector<shapes::ComponentLabel>> labels;
      for (const wt::SerreWeightClass& s : inter) labels.insert(shapes::component_match(rho, t, s));
      if (labels.size() != inter.size()) return false;
      // graph-distance-1 pairs differ in exactly one slot
      for (size_t i = 0; i < inter.size(); ++i)
        for (size_t j = i + 1; j < inter.size(); ++j) {
          auto oi = shapes::sigma_coordinate(rho, inter[i]);
          auto oj = shapes::sigma_coordinate(rho, inter[j]);
          if (!oi || !oj) return false;
          if (eg::graph_distance(*oi, *oj) != 1) continue;
          shapes::unique_diff_embedding(rho, t, inter[i], inter[j]);  // throws unless unique
        }
    }
  }
  return true;
}

bool criterion7() {
  if (!ps::polarization_identity_check()) return false;
  for (bool flip : {false, true}) {
    ps::JacobianResult r = ps::jacobian_det_check(flip);
    if (!r.matches) return false;
  }
  return true;
}

bool criterion8() {
  // exhaustive at f = 1 for p <= 13
  for (Int p : {3LL, 5LL, 7LL, 11LL, 13LL})
    for (Int r = 0; r <= p - 1; ++r)
      for (Int b = 0; b <= p; ++b)
        for (unsigned mask = 0; mask < 2; ++mask) {
          WeylElement v(std::vector<uint8_t>{static_cast<uint8_t>(mask)});
          lifts::AlphaData a = lifts::alpha_exponents(v, UnitaryCharacter({{r + b, b}}), p);
          if (!lifts::alpha_duality_holds(v, a.alphas)) return false;
          if (r <= p - 2 &&
              !lifts::fl_range_check(lifts::ht_weights(UnitaryCharacter({{r + b, b}}), p), p))
            return false;
        }
  // random sweeps at f = 2, 3
  std::mt19937_64 rng(108);
  for (int f : {2, 3})
    for (int t = 0; t < 10000; ++t) {
      Int p = 13;
      std::vector<IntPair> e(f);
      for (int j = 0; j < f; ++j) {
        Int r = static_cast<Int>(rng() % p);
        Int b = static_cast<Int>(rng() % 19) - 9;
        e[j] = {r + b, b};
      }
      std::vector<uint8_t> vb(f);
      for (auto& x : vb) x = rng() & 1;
      WeylElement v(vb);
      UnitaryCharacter mu(e);
      lifts::AlphaData a = lifts::alpha_exponents(v, mu, p);
      if (!lifts::alpha_duality_holds(v, a.alphas)) return false;
      if (lat::depth(mu, p) >= 0 && !lifts::fl_range_check(lifts::ht_weights(mu, p), p))
        return false;
    }
  return true;
}

bool criterion9() {
  fg::Groups g3 = fg::build_groups(3, 1);
  // enumeration is the oracle for the orders
  if (g3.U11.size() != 96 || g3.GU11.size() != 192 || g3.U1.size() != 4) return false;
  if (g3.GL2k.size() != 48) return false;
  fg::PushoutReport pr = fg::pushout_check(g3);
  if (!pr.ok) return false;
  // idempotents
  std::mt19937_64 rng(109);
  for (int t = 0; t < 3; ++t) {
    int gi = static_cast<int>(rng() % g3.GU11.size());
    fg::FModule m = fg::permutation_module(g3.GU11, g3.F, gi);
    if (m.dim > 100) {
      --t;
      continue;
    }
    if (!fg::idempotent_module_check(g3, m)) return false;
  }
  // crossed product
  fg::CrossedProductReport cp = fg::crossed_product_check(g3);
  if (!cp.ok || cp.rank != 2) return false;
  // transfer-simplicity on all weight modules
  for (int r = 0; r <= 2; ++r)
    for (Int b = 0; b < 4; ++b) {
      fg::TransferResult tr = fg::transfer_module(g3, fg::weight_module(g3, r, b), (r + 2 * b) % 4);
      if (!tr.simple_before || !tr.simple_after) return false;
    }
  // (5,1): orders and pushout only
  fg::Groups g5 = fg::build_groups(5, 1);
  if (g5.U11.size() != 720 || g5.GU11.size() != 2880 || g5.U1.size() != 6) return false;
  fg::PushoutReport pr5 = fg::pushout_check(g5);
  return pr5.ok;
}

bool criterion10() {
  fg::Groups g3 = fg::build_groups(3, 1);
  for (Int p : {3LL, 5LL, 7LL, 11LL, 13LL})
    for (int f = 1; f <= 3; ++f) {
      Int pf = 1;
      for (int i = 0; i < f; ++i) pf *= p;
      if (lat::sublattice_index_x0(p, f, lat::Side::unitary) != pf + 1) return false;
    }
  return lat::sublattice_index_x0(3, 1, lat::Side::unitary) ==
         static_cast<Int>(g3.U1.size());
}

}  // namespace

int main() {
  criterion(1, "predicted weight sets have size 2^f, multiplicity free", criterion1);
  criterion(2, "base change commutes with the extension-graph maps", criterion2);
  criterion(3, "conjugate self-duality iff the admissible word is symmetric", criterion3);
  criterion(4, "theta exists uniquely and the incidence law holds", criterion4);
  criterion(5, "types containing a weight: counts, JH sets, equivalence", criterion5);
  criterion(6, "component matching: injective labels, unique differing slot", criterion6);
  criterion(7, "polarization and Jacobian determinant identities", criterion7);
  criterion(8, "crystalline-lift exponent duality and FL range", criterion8);
  criterion(9, "finite-group enumeration, pushouts, idempotents, transfer", criterion9);
  criterion(10, "lattice index equals p^f + 1 and matches |U1|", criterion10);
  if (failures) {
    std::printf("%d criterion(s) FAILED\n", failures);
    return 1;
  }
  std::printf("all acceptance criteria passed\n");
  return 0;
}
