#pragma once

// Exact multivariate polynomial arithmetic over the rationals, with named
// variables interned in a process-wide registry.  Variables flagged as units
// (starred bases, E, a, delta*) may carry negative exponents; everything else
// is a plain polynomial variable.

#include <functional>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "uwk/common.hpp"

namespace uwk::polysym {

struct Rational {
  Int num = 0;
  Int den = 1;
  Rational() = default;
  Rational(Int n) : num(n), den(1) {}
  Rational(Int n, Int d);
  bool is_zero() const { return num == 0; }
  Rational operator-() const;
  Rational operator+(const Rational&) const;
  Rational operator-(const Rational&) const;
  Rational operator*(const Rational&) const;
  Rational operator/(const Rational&) const;
  bool operator==(const Rational& o) const { return num == o.num && den == o.den; }
  bool operator!=(const Rational& o) const { return !(*this == o); }
  std::string text() const;
};

// variable registry
int var_id(const std::string& name);           // interns on first use
const std::string& var_name(int id);
bool var_is_unit(int id);                      // negative exponents allowed

struct Monomial {
  // sorted (variable, exponent) pairs with nonzero exponents
  std::vector<std::pair<int, int>> powers;
  int degree() const {
    int d = 0;
    for (auto& p : powers) d += p.second;
    return d;
  }
  bool operator==(const Monomial& o) const { return powers == o.powers; }
};

// graded lexicographic order over the fixed variable order
struct MonomialOrder {
  bool operator()(const Monomial& a, const Monomial& b) const;
};

struct MvPolynomial {
  std::map<Monomial, Rational, MonomialOrder> terms;

  static MvPolynomial zero() { return {}; }
  static MvPolynomial constant(Rational c);
  static MvPolynomial variable(int id, int exponent = 1);
  static MvPolynomial variable(const std::string& name, int exponent = 1);

  bool is_zero() const { return terms.empty(); }
  bool is_monomial() const { return terms.size() == 1; }

  MvPolynomial operator+(const MvPolynomial&) const;
  MvPolynomial operator-(const MvPolynomial&) const;
  MvPolynomial operator-() const;
  MvPolynomial operator*(const MvPolynomial&) const;
  bool operator==(const MvPolynomial& o) const { return terms == o.terms; }
  bool operator!=(const MvPolynomial& o) const { return !(*this == o); }

  // integer powers; negative exponents require a single-term unit monomial
  MvPolynomial pow(int e) const;
  MvPolynomial inverse_monomial() const;

  MvPolynomial derivative(int var) const;

  // substitute listed variables; unlisted variables stay fixed.  A variable
  // occurring with a negative exponent must map to a nonzero monomial.
  MvPolynomial substitute(const std::map<int, MvPolynomial>& repl) const;

  bool uses_variable(int var) const;
  std::string text() const;  // deterministic rendering
};

struct SymbolicMatrix2 {
  MvPolynomial a, b, c, d;  // row-major

  SymbolicMatrix2 operator*(const SymbolicMatrix2&) const;
  SymbolicMatrix2 operator-(const SymbolicMatrix2&) const;
  SymbolicMatrix2 scaled(const MvPolynomial&) const;
  SymbolicMatrix2 transpose() const { return {a, c, b, d}; }
  SymbolicMatrix2 adjugate() const { return {d, -b, -c, a}; }
  MvPolynomial det() const { return a * d - b * c; }
  bool is_zero() const { return a.is_zero() && b.is_zero() && c.is_zero() && d.is_zero(); }

  // conjugation by the permutation matrix of the reflection: swap both rows
  // and columns
  SymbolicMatrix2 conj_perm() const { return {d, c, b, a}; }
  // conjugation by diag(-1, 1)
  SymbolicMatrix2 conj_diag_sign() const { return {a, -b, -c, d}; }
};

// determinant of a square polynomial matrix (expansion over column subsets)
MvPolynomial matrix_det(const std::vector<std::vector<MvPolynomial>>& m);

// Line-oriented polynomial parser: +, -, *, ^ (integer exponents, possibly
// negative on unit variables), integer or n/d rational coefficients,
// parentheses, variable tokens such as c11j, dstar12jf, xstar21j, b12jf,
// estar11j, deltastar12j, uprime, E, a.
MvPolynomial parse_polynomial(const std::string& line);
std::vector<MvPolynomial> parse_table_file(const std::string& path);

}  // namespace uwk::polysym
