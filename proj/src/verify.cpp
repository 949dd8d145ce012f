#include "uwk/verify.hpp"

#include <algorithm>
#include <random>
#include <set>

#include "uwk/fingroups.hpp"
#include "uwk/lifts.hpp"
#include "uwk/shapes.hpp"
#include "uwk/symideal.hpp"
#include "uwk/types.hpp"

namespace uwk::verify {

namespace lat = uwk::lattice;
namespace eg = uwk::extgraph;
namespace wt = uwk::weights;
namespace ty = uwk::types;
namespace ps = uwk::polysym;
namespace fg = uwk::fingroups;

using lat::UnitaryCharacter;
using lat::WeylElement;

namespace {
void run(std::vector<Check>& out, const std::string& name, const std::function<bool()>& fn) {
  Check c;
  c.name = name;
  try {
    c.pass = fn();
  } catch (const std::exception& e) {
    c.pass = false;
    c.detail = e.what();
  }
  out.push_back(c);
}

UnitaryCharacter random_deep_character(std::mt19937_64& rng, int f, Int p, Int min_depth) {
  std::vector<IntPair> e(f);
  for (int j = 0; j < f; ++j) {
    Int lo = min_depth, hi = p - min_depth - 2;  // pairing range for the depth
    Int r = lo + static_cast<Int>(rng() % static_cast<uint64_t>(hi - lo + 1));
    Int b = static_cast<Int>(rng() % (2 * static_cast<uint64_t>(p) + 1)) - p;
    e[j] = {r + b, b};
  }
  return UnitaryCharacter(std::move(e));
}

WeylElement random_weyl(std::mt19937_64& rng, int f) {
  std::vector<uint8_t> b(f);
  for (int j = 0; j < f; ++j) b[j] = rng() & 1;
  return WeylElement(std::move(b));
}
}  // namespace

std::vector<Check> suite_graph() {
  std::vector<Check> out;
  std::mt19937_64 rng(20240811ULL);

  run(out, "frobenius order 2f and pi^f = -w", [&] {
    for (Int p : {7LL, 11LL, 13LL})
      for (int f = 1; f <= 3; ++f)
        for (int trial = 0; trial < 20; ++trial) {
          UnitaryCharacter mu = random_deep_character(rng, f, p, 0);
          UnitaryCharacter x = mu;
          for (int k = 0; k < f; ++k) x = lat::frobenius(x, lat::Direction::forward);
          UnitaryCharacter neg = lat::weyl_act(WeylElement::longest(f), mu);
          for (IntPair& v : neg.e) v = -v;
          if (!(x == neg)) return false;
          for (int k = 0; k < f; ++k) x = lat::frobenius(x, lat::Direction::forward);
          if (!(x == mu)) return false;
          UnitaryCharacter y = lat::frobenius(lat::frobenius(mu, lat::Direction::forward),
                                              lat::Direction::inverse);
          if (!(y == mu)) return false;
        }
    return true;
  });

  run(out, "base change pi' fixed point and Weyl compatibility", [&] {
    for (int f = 1; f <= 3; ++f)
      for (int trial = 0; trial < 20; ++trial) {
        UnitaryCharacter mu = random_deep_character(rng, f, 13, 0);
        lat::DoubleCharacter bc = lat::base_change(mu);
        lat::DoubleCharacter x = bc;
        for (int k = 0; k < f; ++k) x = lat::frobenius(x, lat::Direction::forward);
        lat::DoubleCharacter fixed = lat::weyl_act(
            lat::DoubleWeylElement(std::vector<uint8_t>(2 * f, 1)), x);
        for (IntPair& v : fixed.e) v = -v;
        if (!(fixed == bc)) return false;
        WeylElement w = random_weyl(rng, f);
        if (!(lat::base_change(lat::weyl_act(w, mu)) ==
              lat::weyl_act(lat::doubled(w), bc)))
          return false;
        for (int j = 0; j < f; ++j)
          if (lat::coroot_pairing(bc, j) != lat::coroot_pairing(bc, j + f)) return false;
      }
    return true;
  });

  run(out, "lattice index p^f + 1", [&] {
    for (Int p : {3LL, 5LL, 7LL, 11LL, 13LL})
      for (int f = 1; f <= 3; ++f) {
        Int want = 1;
        for (int i = 0; i < f; ++i) want *= p;
        if (lat::sublattice_index_x0(p, f, lat::Side::unitary) != want + 1) return false;
      }
    return true;
  });

  run(out, "t_map independent of the lift", [&] {
    for (Int p : {7LL, 13LL})
      for (int f = 1; f <= 3; ++f)
        for (int trial = 0; trial < 10; ++trial) {
          UnitaryCharacter mu = random_deep_character(rng, f, p, 1);
          for (const eg::GraphVector& om : eg::sigma_set(f)) {
            // perturb the canonical lift by a random X^0 element and redo the
            // whole computation through characters
            std::vector<IntPair> lift(f);
            for (int j = 0; j < f; ++j) {
              Int t = static_cast<Int>(rng() % 7) - 3;
              lift[j] = {om.coords[j] + t, t};
            }
            // mimic t_map on the perturbed lift
            UnitaryCharacter lifted(lift);
            UnitaryCharacter shifted = lat::frobenius(lifted, lat::Direction::inverse);
            std::vector<Int> classvec(f);
            for (int j = 0; j < f; ++j) classvec[j] = -(shifted.e[j][0] + shifted.e[j][1]);
            eg::OmegaElement wel = eg::omega_element(classvec, p);
            std::vector<IntPair> arg(f);
            for (int j = 0; j < f; ++j) arg[j] = mu.e[j] + lift[j];
            wt::SerreWeightClass perturbed =
                wt::canonicalize(UnitaryCharacter(wel.dot_apply(arg)), p);
            if (!(perturbed == eg::t_map(mu, om, p))) return false;
          }
        }
    return true;
  });

  run(out, "base change commutes with the translation maps", [&] {
    for (int f = 1; f <= 3; ++f)
      for (int trial = 0; trial < 10; ++trial) {
        UnitaryCharacter mu = random_deep_character(rng, f, 11, 1);
        for (const eg::GraphVector& om : eg::sigma_set(f)) {
          wt::SerreWeightClass lhs = wt::bc_weight(eg::t_map(mu, om, 11));
          wt::SerreWeightClass rhs =
              eg::t_map_double(lat::base_change(mu), eg::bc_graph(om), 11);
          if (!(lhs == rhs)) return false;
        }
      }
    return true;
  });

  run(out, "predicted weight sets: size, regularity, epsilon fixedness", [&] {
    for (Int p : {7LL, 11LL})
      for (int f = 1; f <= 2; ++f)
        for (int trial = 0; trial < 10; ++trial) {
          wt::TameParam rho{random_weyl(rng, f), random_deep_character(rng, f, p, 1), p, f};
          std::vector<wt::SerreWeightClass> pw = wt::predicted_weights(rho);
          if (static_cast<int>(pw.size()) != (1 << f)) return false;
          for (const wt::SerreWeightClass& s : pw) {
            for (int j = 0; j < f; ++j) {
              Int pr = s.rep[j][0] - s.rep[j][1];
              if (pr < 0 || pr >= p - 1) return false;  // regular
            }
            wt::SerreWeightClass b = wt::bc_weight(s);
            if (!(wt::epsilon_involution(b) == b)) return false;
          }
        }
    return true;
  });

  run(out, "ext1 is symmetric and detects adjacency", [&] {
    UnitaryCharacter mu(std::vector<IntPair>{{3, 0}, {4, 1}});
    for (const eg::GraphVector& a : eg::sigma_set(2))
      for (const eg::GraphVector& b : eg::sigma_set(2)) {
        Int d1 = wt::ext1_dim(mu, a, b, 11), d2 = wt::ext1_dim(mu, b, a, 11);
        if (d1 != d2) return false;
        if ((eg::graph_distance(a, b) == 1) != (d1 == 1)) return false;
      }
    return true;
  });

  return out;
}

std::vector<Check> suite_types(Int p, int f) {
  std::vector<Check> out;
  std::mt19937_64 rng(912ULL);
  require(f >= 1 && f <= 2, "verify types: f must be 1 or 2");
  require(p >= 7, "verify types: p must be at least 7");

  run(out, "conjugate self-duality iff the word is symmetric", [&] {
    wt::TameParam rho{WeylElement::identity(f), random_deep_character(rng, f, p, 2), p, f};
    for (const ty::AdmissibleWord& w : ty::admissible_all(f)) {
      bool sym = w.symmetric();
      if (ty::is_conjugate_self_dual(ty::type_for_shape(rho, w)) != sym) return false;
    }
    return true;
  });

  run(out, "theta incidence law and X(sigma) size", [&] {
    for (int trial = 0; trial < 3; ++trial) {
      wt::TameParam rho{random_weyl(rng, f), random_deep_character(rng, f, p, 2), p, f};
      ty::ThetaAssignment th = ty::theta(rho);
      if (static_cast<int>(th.table.size()) != (1 << f)) return false;
      for (const auto& [sigma, word] : th.table)
        if (static_cast<int>(ty::x_sigma(rho, sigma).size()) != (1 << f)) return false;
      // every X(sigma) member contains sigma in its JH set
      for (const auto& [sigma, word] : th.table)
        for (const ty::AdmissibleWord& w : ty::x_sigma(rho, sigma)) {
          std::vector<wt::SerreWeightClass> jh = ty::jh_of_symmetric_word(rho, w);
          if (!std::binary_search(jh.begin(), jh.end(), sigma)) return false;
        }
    }
    return true;
  });

  run(out, "types containing a fixed weight", [&] {
    UnitaryCharacter mu = random_deep_character(rng, f, p, 2);
    std::vector<ty::DoubleTypePresentation> ts = ty::types_containing_weight(mu, p);
    if (static_cast<int>(ts.size()) != (1 << f)) return false;
    // each contains F(mu): use the JH parameterization with (w, nu) = (1, rho)
    wt::SerreWeightClass target = wt::canonicalize(mu, p);
    for (unsigned mask = 0; mask < (1u << f); ++mask) {
      std::vector<uint8_t> sb(f);
      for (int j = 0; j < f; ++j) sb[j] = (mask >> j) & 1;
      wt::JhFactors r = wt::jh_factors(mu, WeylElement(sb), WeylElement::identity(f),
                                       lat::rho_sum(f), p);
      if (!std::binary_search(r.factors.begin(), r.factors.end(), target)) return false;
    }
    return true;
  });

  run(out, "equivalence is reflexive and respects dual/twist", [&] {
    for (int trial = 0; trial < 8; ++trial) {
      wt::TameParam rho{random_weyl(rng, f), random_deep_character(rng, f, p, 1), p, f};
      ty::DoubleTypePresentation t = ty::type_for_shape(rho, ty::admissible_symmetric(f)[0]);
      if (!ty::equivalent(t, t)) return false;
      if (!ty::equivalent(ty::dual(ty::dual(t)), t)) return false;
      if (!ty::equivalent(ty::frobenius_twist(ty::frobenius_twist(t)), t)) return false;
      if (!(ty::dual(ty::frobenius_twist(t)) == ty::frobenius_twist(ty::dual(t)))) return false;
    }
    return true;
  });

  return out;
}

std::vector<Check> suite_ideals(const std::vector<ps::MvPolynomial>& extra_generators) {
  std::vector<Check> out;
  std::mt19937_64 rng(77ULL);

  auto random_poly = [&](const std::vector<std::string>& vars) {
    ps::MvPolynomial r;
    int terms = 1 + static_cast<int>(rng() % 4);
    for (int t = 0; t < terms; ++t) {
      ps::MvPolynomial m = ps::MvPolynomial::constant(
          ps::Rational(static_cast<Int>(rng() % 7) - 3, 1 + static_cast<Int>(rng() % 3)));
      int nv = static_cast<int>(rng() % 3);
      for (int k = 0; k < nv; ++k)
        m = m * ps::MvPolynomial::variable(vars[rng() % vars.size()],
                                           1 + static_cast<int>(rng() % 2));
      r = r + m;
    }
    return r;
  };

  run(out, "ring axioms and Leibniz rule on random polynomials", [&] {
    std::vector<std::string> vars = {"c11j", "c12j", "d11j", "dstar12j", "dstar21j"};
    int x = ps::var_id("c11j");
    for (int t = 0; t < 25; ++t) {
      ps::MvPolynomial a = random_poly(vars), b = random_poly(vars), c = random_poly(vars);
      if (a * (b + c) != a * b + a * c) return false;
      if (a * b != b * a) return false;
      if ((a * b) * c != a * (b * c)) return false;
      if ((a * b).derivative(x) != a.derivative(x) * b + a * b.derivative(x)) return false;
    }
    return true;
  });

  run(out, "parser round trip", [&] {
    std::vector<std::string> vars = {"c11j", "c12j", "d11j", "dstar12j", "dstar21j"};
    for (int t = 0; t < 10; ++t) {
      ps::MvPolynomial a = random_poly(vars);
      if (ps::parse_polynomial(a.text()) != a) return false;
    }
    return ps::parse_polynomial("dstar12jf*dstar21j - 1") ==
           ps::table1_ideal(ty::Letter::WT10, false)[0];
  });

  run(out, "generators rewrite to zero (both tables, both flips)", [&] {
    for (bool flip : {false, true}) {
      for (ty::Letter l : {ty::Letter::T10, ty::Letter::WT10, ty::Letter::T01}) {
        std::vector<ps::MvPolynomial> ideal = ps::table1_ideal(l, flip);
        for (const ps::MvPolynomial& g : ideal)
          if (!ps::symmetry_rewrite(ideal, g).is_zero()) return false;
      }
      for (ty::Letter l : {ty::Letter::T10, ty::Letter::T01}) {
        std::vector<ps::MvPolynomial> ideal = ps::table2_ideal(l, flip);
        if (ideal.size() != 9) return false;
        for (const ps::MvPolynomial& g : ideal)
          if (!ps::symmetry_rewrite(ideal, g).is_zero()) return false;
      }
    }
    return true;
  });

  run(out, "rewriting is an idempotent ring homomorphism", [&] {
    std::vector<ps::MvPolynomial> ideal = ps::table1_ideal(ty::Letter::WT10, false);
    std::vector<std::string> vars = {"c11j",  "c12j",  "d11j",  "dstar12j", "dstar21j",
                                     "c11jf", "c12jf", "d11jf", "dstar12jf"};
    for (int t = 0; t < 15; ++t) {
      ps::MvPolynomial a = random_poly(vars), b = random_poly(vars);
      ps::MvPolynomial ra = ps::symmetry_rewrite(ideal, a);
      ps::MvPolynomial rb = ps::symmetry_rewrite(ideal, b);
      if (ps::symmetry_rewrite(ideal, ra) != ra) return false;
      if (ps::symmetry_rewrite(ideal, a * b) != ra * rb) return false;
      if (ps::symmetry_rewrite(ideal, a + b) != ra + rb) return false;
    }
    return true;
  });

  run(out, "unit product powers collapse (k = 1 and k = 7)", [&] {
    for (bool flip : {false, true}) {
      std::vector<ps::MvPolynomial> ideal = ps::table1_ideal(ty::Letter::WT10, flip);
      ps::MvPolynomial prod = ps::MvPolynomial::variable("dstar12j") *
                              ps::MvPolynomial::variable("dstar21j") *
                              ps::MvPolynomial::variable("dstar12jf") *
                              ps::MvPolynomial::variable("dstar21jf");
      for (int k : {1, 7}) {
        ps::MvPolynomial x = prod.pow(k) - ps::MvPolynomial::constant(ps::Rational(1));
        if (!ps::symmetry_rewrite(ideal, x).is_zero()) return false;
      }
    }
    return true;
  });

  run(out, "Jacobian determinant matches the quoted monomial (both flips)", [&] {
    for (bool flip : {false, true}) {
      ps::JacobianResult r = ps::jacobian_det_check(flip);
      if (!r.matches || r.det.terms.size() != 1) return false;
      // all starred units set to one gives +-1
      std::map<int, ps::MvPolynomial> ones;
      for (const char* n : {"dstar12j", "dstar21j", "dstar12jf", "dstar21jf"})
        ones[ps::var_id(n)] = ps::MvPolynomial::constant(ps::Rational(1));
      ps::MvPolynomial v = r.det.substitute(ones);
      if (v != ps::MvPolynomial::constant(ps::Rational(1)) &&
          v != ps::MvPolynomial::constant(ps::Rational(-1)))
        return false;
    }
    return true;
  });

  run(out, "polarization identity in both sign cases", [&] {
    return ps::polarization_identity_check();
  });

  for (size_t i = 0; i < extra_generators.size(); ++i) {
    run(out, "extra generator " + std::to_string(i) + " eliminates its j'+f variables", [&, i] {
      // the symmetry relations of some row must eliminate every j'+f variable
      for (ty::Letter l : {ty::Letter::T10, ty::Letter::WT10, ty::Letter::T01}) {
        try {
          ps::symmetry_rewrite(ps::table1_ideal(l, false), extra_generators[i]);
          return true;
        } catch (const precondition_error&) {
        }
      }
      return false;
    });
  }

  return out;
}

std::vector<Check> suite_groups(Int p, int f) {
  std::vector<Check> out;
  fg::Groups g = fg::build_groups(p, f);
  Int q = 1;
  for (int i = 0; i < f; ++i) q *= p;

  run(out, "enumerated orders satisfy the decomposition identities", [&] {
    fg::PushoutReport r = fg::pushout_check(g);
    if (!r.ok) return false;
    // |U1| = q + 1 cross-checks the lattice index
    if (r.u1 != q + 1) return false;
    if (r.u1 != lat::sublattice_index_x0(p, f, lat::Side::unitary)) return false;
    if (r.gu11 != r.u11 * (q * q - 1) / (q + 1)) return false;
    if (r.gu11 != r.gl2k * (q * q - 1) / (q - 1)) return false;
    return true;
  });

  run(out, "crossed product structure", [&] {
    fg::CrossedProductReport r = fg::crossed_product_check(g);
    return r.ok && r.rank == q - 1;
  });

  if (p == 3 && f == 1) {
    run(out, "central idempotents on ten permutation modules", [&] {
      std::mt19937_64 rng(5150ULL);
      int done = 0;
      while (done < 10) {
        int gi = static_cast<int>(rng() % g.GU11.size());
        fg::FModule m = fg::permutation_module(g.GU11, g.F, gi);
        if (m.dim > 100) continue;
        if (!fg::idempotent_module_check(g, m)) return false;
        ++done;
      }
      return true;
    });

    run(out, "transfer preserves simplicity on all weight modules", [&] {
      for (int r = 0; r <= 2; ++r)
        for (Int b = 0; b < 4; ++b) {
          fg::FModule v = fg::weight_module(g, r, b);
          Int chi = (r + 2 * b) % 4;
          fg::TransferResult tr = fg::transfer_module(g, v, chi);
          if (!tr.simple_before || !tr.simple_after) return false;
          // round trip: restriction of the extension back to U11 is v itself
          std::vector<int> gens = g.U11.generators();
          fg::FModule back = fg::restrict_module(tr.over_gu, g.U11);
          if (!fg::modules_isomorphic(v, back, gens)) return false;
        }
      return true;
    });

    run(out, "multiplicities preserved on a length-2 extension", [&] {
      fg::FModule v = fg::weight_module(g, 3, 0);  // dim 4, nonsplit of length 2
      std::vector<int> ugens = g.U11.generators();
      std::vector<fg::FModule> ufac = fg::composition_factors(v, ugens);
      if (ufac.size() != 2) return false;
      if (fg::is_simple(v, ugens, 7ULL)) return false;
      fg::TransferResult tr = fg::transfer_module(g, v, 3 % 4);
      std::vector<int> gugens = g.GU11.generators();
      std::vector<int> ggens = g.GL2k.generators();
      std::vector<fg::FModule> gufac = fg::composition_factors(tr.over_gu, gugens);
      std::vector<fg::FModule> gfac = fg::composition_factors(tr.over_gl2, ggens);
      if (gufac.size() != 2 || gfac.size() != 2) return false;
      // multiplicity comparison per Jordan-Hoelder factor of the GU module
      for (const fg::FModule& sig : gufac) {
        int mult_gu = 0;
        for (const fg::FModule& x : gufac)
          if (fg::modules_isomorphic(sig, x, gugens)) ++mult_gu;
        fg::FModule sig_u = fg::restrict_module(sig, g.U11);
        int mult_u = 0;
        for (const fg::FModule& x : ufac)
          if (fg::modules_isomorphic(sig_u, x, ugens)) ++mult_u;
        fg::FModule sig_g = fg::restrict_module(sig, g.GL2k);
        int mult_g = 0;
        for (const fg::FModule& x : gfac)
          if (fg::modules_isomorphic(sig_g, x, ggens)) ++mult_g;
        if (mult_gu != mult_u || mult_gu != mult_g) return false;
      }
      return true;
    });
  }

  return out;
}

}  // namespace uwk::verify
