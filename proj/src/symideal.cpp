#include "uwk/symideal.hpp"

#include <algorithm>

namespace uwk::polysym {

namespace {
struct GenSpec {
  const char* lead;    // j'+f variable (stored without the embedding suffix)
  const char* units;   // one or two unit tokens at j', '|'-separated
  int sign;            // trailing sign before the flip rule
  const char* trail;   // j' variable, or "" for the constant 1
};

MvPolynomial build_gen(const GenSpec& g, bool flip) {
  MvPolynomial lead = MvPolynomial::variable(std::string(g.lead) + "jf");
  std::string u(g.units);
  size_t bar = u.find('|');
  lead = lead * MvPolynomial::variable(u.substr(0, bar) + "j");
  if (bar != std::string::npos) lead = lead * MvPolynomial::variable(u.substr(bar + 1) + "j");
  int sign = flip ? -g.sign : g.sign;
  MvPolynomial trail = std::string(g.trail).empty()
                           ? MvPolynomial::constant(Rational(1))
                           : MvPolynomial::variable(std::string(g.trail) + "j");
  return sign > 0 ? lead + trail : lead - trail;
}

std::vector<MvPolynomial> build_row(const std::vector<GenSpec>& specs, bool flip) {
  std::vector<MvPolynomial> out;
  out.reserve(specs.size());
  for (const GenSpec& g : specs) out.push_back(build_gen(g, flip));
  return out;
}

const std::vector<GenSpec>& row_t10() {
  static const std::vector<GenSpec> r = {
      {"estar11", "dstar22", -1, ""},        {"dstar22", "estar11", -1, ""},
      {"d11", "estar11|dstar22", -1, "d11"}, {"c11", "estar11|dstar22", -1, "c11"},
      {"c12", "estar11|dstar22", +1, "c12"}, {"d21", "estar11|dstar22", +1, "d21"},
      {"c21", "estar11|dstar22", +1, "c21"}, {"c22", "estar11|dstar22", -1, "c22"},
  };
  return r;
}

const std::vector<GenSpec>& row_wt10() {
  static const std::vector<GenSpec> r = {
      {"dstar12", "dstar21", -1, ""},        {"dstar21", "dstar12", -1, ""},
      {"d11", "dstar12|dstar21", +1, "d11"}, {"c11", "dstar12|dstar21", +1, "c11"},
      {"c12", "dstar12|dstar21", -1, "c12"}, {"c21", "dstar12|dstar21", -1, "c21"},
      {"d22", "dstar12|dstar21", +1, "d22"}, {"c22", "dstar12|dstar21", +1, "c22"},
  };
  return r;
}

const std::vector<GenSpec>& row_t01() {
  static const std::vector<GenSpec> r = {
      {"dstar11", "estar22", -1, ""},        {"estar22", "dstar11", -1, ""},
      {"c11", "dstar11|estar22", -1, "c11"}, {"d12", "dstar11|estar22", +1, "d12"},
      {"c12", "dstar11|estar22", +1, "c12"}, {"c21", "dstar11|estar22", +1, "c21"},
      {"d22", "dstar11|estar22", -1, "d22"}, {"c22", "dstar11|estar22", -1, "c22"},
  };
  return r;
}
}  // namespace

std::vector<MvPolynomial> table1_ideal(Letter shape_letter, bool sign_flip) {
  switch (shape_letter) {
    case Letter::T10: return build_row(row_t10(), sign_flip);
    case Letter::WT10: return build_row(row_wt10(), sign_flip);
    default: return build_row(row_t01(), sign_flip);
  }
}

std::vector<MvPolynomial> table2_ideal(Letter shape_sigma_letter, bool sign_flip) {
  require(shape_sigma_letter == Letter::T01 || shape_sigma_letter == Letter::T10,
          "table2_ideal: the multi-type shape letter is t01 or t10");
  std::vector<MvPolynomial> out = build_row(row_wt10(), sign_flip);
  GenSpec extra = shape_sigma_letter == Letter::T01
                      ? GenSpec{"b12", "dstar12|dstar21", -1, "b12"}
                      : GenSpec{"b21", "dstar12|dstar21", -1, "b21"};
  out.push_back(build_gen(extra, sign_flip));
  return out;
}

namespace {
bool tagged_jf(int var) {
  const std::string& n = var_name(var);
  return n.size() >= 2 && n.compare(n.size() - 2, 2, "jf") == 0;
}

// Solve each two-term generator for its unique j'+f variable.
std::map<int, MvPolynomial> rewrite_rules(const std::vector<MvPolynomial>& ideal) {
  std::map<int, MvPolynomial> rules;
  for (const MvPolynomial& g : ideal) {
    require(g.terms.size() == 2, "symmetry rewrite: generator is not two-term");
    // locate the term carrying j'+f variables
    const Monomial* mjf = nullptr;
    const Monomial* mrest = nullptr;
    Rational cjf, crest;
    for (const auto& [m, c] : g.terms) {
      bool has = false;
      for (auto [v, e] : m.powers)
        if (tagged_jf(v)) has = true;
      if (has) {
        require(mjf == nullptr, "symmetry rewrite: both terms carry j'+f variables");
        mjf = &m;
        cjf = c;
      } else {
        mrest = &m;
        crest = c;
      }
    }
    require(mjf && mrest, "symmetry rewrite: generator has no j'+f side");
    int target = -1;
    Monomial cof;  // the j'-unit cofactor of the target variable
    for (auto [v, e] : mjf->powers) {
      if (tagged_jf(v)) {
        require(target == -1 && e == 1,
                "symmetry rewrite: expected a single linear j'+f variable");
        target = v;
      } else {
        cof.powers.emplace_back(v, e);
      }
    }
    // target * (cjf * cof) + crest * mrest = 0  =>  target = -crest/cjf * mrest * cof^{-1}
    MvPolynomial cofpoly;
    cofpoly.terms[cof] = cjf;
    MvPolynomial rest;
    rest.terms[*mrest] = -crest;
    MvPolynomial rhs = rest * cofpoly.inverse_monomial();
    require(rules.find(target) == rules.end(),
            "symmetry rewrite: conflicting rules for " + var_name(target));
    rules[target] = rhs;
  }
  return rules;
}
}  // namespace

MvPolynomial symmetry_rewrite(const std::vector<MvPolynomial>& ideal, const MvPolynomial& poly) {
  std::map<int, MvPolynomial> rules = rewrite_rules(ideal);
  MvPolynomial out = poly.substitute(rules);
  for (const auto& [m, c] : out.terms)
    for (auto [v, e] : m.powers)
      require(!tagged_jf(v), "symmetry rewrite: no rule for variable " + var_name(v));
  return out;
}

JacobianResult jacobian_det_check(bool sign_flip) {
  // wt10 presentation coordinates per embedding, with the two ratios atomic
  // and the starred units standing in for their affine x* coordinates:
  //   c11, r11 (= d11/dstar12), c12, dstar12, c21, dstar21, c22, r22 (= d22/dstar21)
  std::vector<MvPolynomial> gens = table1_ideal(Letter::WT10, sign_flip);
  // replace the plain d-variables by ratio * unit in both embeddings
  std::map<int, MvPolynomial> dict;
  for (const char* tag : {"j", "jf"}) {
    std::string t(tag);
    dict[var_id("d11" + t)] =
        MvPolynomial::variable("r11" + t) * MvPolynomial::variable("dstar12" + t);
    dict[var_id("d22" + t)] =
        MvPolynomial::variable("r22" + t) * MvPolynomial::variable("dstar21" + t);
  }
  std::vector<MvPolynomial> sigma;
  sigma.reserve(gens.size());
  for (const MvPolynomial& g : gens) sigma.push_back(g.substitute(dict));

  const char* coords[8] = {"c11", "r11", "c12", "dstar12", "c21", "dstar21", "c22", "r22"};
  std::vector<std::vector<MvPolynomial>> jac(8, std::vector<MvPolynomial>(8));
  for (int i = 0; i < 8; ++i)
    for (int l = 0; l < 8; ++l)
      jac[i][l] = sigma[i].derivative(var_id(std::string(coords[l]) + "jf"));

  JacobianResult out;
  out.det = matrix_det(jac);
  out.quoted = (MvPolynomial::variable("dstar12j") * MvPolynomial::variable("dstar21j")).pow(7) *
               MvPolynomial::variable("dstar12jf") * MvPolynomial::variable("dstar21jf");
  out.matches = (out.det == out.quoted) || (out.det == -out.quoted);
  return out;
}

bool polarization_identity_check() {
  MvPolynomial m11 = MvPolynomial::variable("m11"), m12 = MvPolynomial::variable("m12");
  MvPolynomial m21 = MvPolynomial::variable("m21"), m22 = MvPolynomial::variable("m22");
  MvPolynomial e3 = MvPolynomial::variable("E", 3);
  SymbolicMatrix2 a{m11, m12, m21, m22};
  // clear the denominator det A from A^{-T} = (det A)^{-1} adj(A)^T and use
  // det A = a^{-1} E^3 on the right-hand side
  SymbolicMatrix2 lhs = a.adjugate().transpose().conj_perm().scaled(e3);
  SymbolicMatrix2 rhs = a.conj_diag_sign().scaled(e3);
  bool plain = (lhs - rhs).is_zero();
  // the boundary-embedding case carries a global sign on both sides
  SymbolicMatrix2 lhs_f = lhs.scaled(-MvPolynomial::constant(Rational(1)));
  SymbolicMatrix2 rhs_f = rhs.scaled(-MvPolynomial::constant(Rational(1)));
  bool flipped = (lhs_f - rhs_f).is_zero();
  return plain && flipped;
}

}  // namespace uwk::polysym
