#include "uwk/poly.hpp"

#include <algorithm>
#include <cctype>
#include <fstream>
#include <mutex>
#include <numeric>
#include <sstream>

namespace uwk::polysym {

namespace {
Int checked(__int128 v, const char* what) {
  check_internal(v <= INT64_MAX / 4 && v >= INT64_MIN / 4, std::string("overflow in ") + what);
  return static_cast<Int>(v);
}
}  // namespace

Rational::Rational(Int n, Int d) {
  check_internal(d != 0, "rational with zero denominator");
  if (d < 0) {
    n = -n;
    d = -d;
  }
  Int g = std::gcd(n < 0 ? -n : n, d);
  if (g == 0) g = 1;
  num = n / g;
  den = d / g;
}

Rational Rational::operator-() const { return Rational(-num, den); }

Rational Rational::operator+(const Rational& o) const {
  return Rational(checked(__int128(num) * o.den + __int128(o.num) * den, "rational add"),
                  checked(__int128(den) * o.den, "rational add"));
}

Rational Rational::operator-(const Rational& o) const { return *this + (-o); }

Rational Rational::operator*(const Rational& o) const {
  return Rational(checked(__int128(num) * o.num, "rational mul"),
                  checked(__int128(den) * o.den, "rational mul"));
}

Rational Rational::operator/(const Rational& o) const {
  require(!o.is_zero(), "division by zero rational");
  return Rational(checked(__int128(num) * o.den, "rational div"),
                  checked(__int128(den) * o.num, "rational div"));
}

std::string Rational::text() const {
  return den == 1 ? std::to_string(num) : std::to_string(num) + "/" + std::to_string(den);
}

namespace {
std::mutex reg_mutex;
std::vector<std::string> reg_names;
std::vector<bool> reg_units;
std::map<std::string, int> reg_index;

bool name_is_unit(const std::string& n) {
  if (n == "E" || n == "a") return true;
  return n.find("star") != std::string::npos;
}
}  // namespace

int var_id(const std::string& name) {
  std::lock_guard<std::mutex> lock(reg_mutex);
  auto it = reg_index.find(name);
  if (it != reg_index.end()) return it->second;
  int id = static_cast<int>(reg_names.size());
  reg_names.push_back(name);
  reg_units.push_back(name_is_unit(name));
  reg_index[name] = id;
  return id;
}

const std::string& var_name(int id) {
  std::lock_guard<std::mutex> lock(reg_mutex);
  return reg_names.at(id);
}

bool var_is_unit(int id) {
  std::lock_guard<std::mutex> lock(reg_mutex);
  return reg_units.at(id);
}

bool MonomialOrder::operator()(const Monomial& a, const Monomial& b) const {
  int da = a.degree(), db = b.degree();
  if (da != db) return da < db;
  return a.powers < b.powers;
}

MvPolynomial MvPolynomial::constant(Rational c) {
  MvPolynomial p;
  if (!c.is_zero()) p.terms[Monomial{}] = c;
  return p;
}

MvPolynomial MvPolynomial::variable(int id, int exponent) {
  if (exponent == 0) return constant(Rational(1));
  require(exponent > 0 || var_is_unit(id),
          "negative exponent on non-unit variable " + var_name(id));
  MvPolynomial p;
  Monomial m;
  m.powers = {{id, exponent}};
  p.terms[m] = Rational(1);
  return p;
}

MvPolynomial MvPolynomial::variable(const std::string& name, int exponent) {
  return variable(var_id(name), exponent);
}

MvPolynomial MvPolynomial::operator+(const MvPolynomial& o) const {
  MvPolynomial r = *this;
  for (const auto& [m, c] : o.terms) {
    auto it = r.terms.find(m);
    if (it == r.terms.end()) {
      r.terms[m] = c;
    } else {
      it->second = it->second + c;
      if (it->second.is_zero()) r.terms.erase(it);
    }
  }
  return r;
}

MvPolynomial MvPolynomial::operator-() const {
  MvPolynomial r = *this;
  for (auto& [m, c] : r.terms) c = -c;
  return r;
}

MvPolynomial MvPolynomial::operator-(const MvPolynomial& o) const { return *this + (-o); }

namespace {
Monomial mono_mul(const Monomial& x, const Monomial& y) {
  Monomial r;
  size_t i = 0, j = 0;
  while (i < x.powers.size() || j < y.powers.size()) {
    if (j == y.powers.size() || (i < x.powers.size() && x.powers[i].first < y.powers[j].first)) {
      r.powers.push_back(x.powers[i++]);
    } else if (i == x.powers.size() || y.powers[j].first < x.powers[i].first) {
      r.powers.push_back(y.powers[j++]);
    } else {
      int e = x.powers[i].second + y.powers[j].second;
      if (e != 0) r.powers.emplace_back(x.powers[i].first, e);
      ++i;
      ++j;
    }
  }
  return r;
}
}  // namespace

MvPolynomial MvPolynomial::operator*(const MvPolynomial& o) const {
  MvPolynomial r;
  for (const auto& [ma, ca] : terms)
    for (const auto& [mb, cb] : o.terms) {
      Monomial m = mono_mul(ma, mb);
      Rational c = ca * cb;
      auto it = r.terms.find(m);
      if (it == r.terms.end()) {
        if (!c.is_zero()) r.terms[m] = c;
      } else {
        it->second = it->second + c;
        if (it->second.is_zero()) r.terms.erase(it);
      }
    }
  return r;
}

MvPolynomial MvPolynomial::inverse_monomial() const {
  require(terms.size() == 1, "inverse of a non-monomial");
  const auto& [m, c] = *terms.begin();
  MvPolynomial r;
  Monomial im;
  for (auto [v, e] : m.powers) {
    require(var_is_unit(v), "inverse requires unit variables only: " + var_name(v));
    im.powers.emplace_back(v, -e);
  }
  r.terms[im] = Rational(1) / c;
  return r;
}

MvPolynomial MvPolynomial::pow(int e) const {
  if (e == 0) return constant(Rational(1));
  MvPolynomial base = *this;
  if (e < 0) {
    base = inverse_monomial();
    e = -e;
  }
  MvPolynomial r = constant(Rational(1));
  for (int i = 0; i < e; ++i) r = r * base;
  return r;
}

MvPolynomial MvPolynomial::derivative(int var) const {
  MvPolynomial r;
  for (const auto& [m, c] : terms) {
    for (size_t k = 0; k < m.powers.size(); ++k) {
      if (m.powers[k].first != var) continue;
      int e = m.powers[k].second;
      Monomial dm = m;
      if (e == 1)
        dm.powers.erase(dm.powers.begin() + k);
      else
        dm.powers[k].second = e - 1;
      Rational dc = c * Rational(e);
      auto it = r.terms.find(dm);
      if (it == r.terms.end()) {
        r.terms[dm] = dc;
      } else {
        it->second = it->second + dc;
        if (it->second.is_zero()) r.terms.erase(it);
      }
    }
  }
  return r;
}

MvPolynomial MvPolynomial::substitute(const std::map<int, MvPolynomial>& repl) const {
  MvPolynomial r;
  for (const auto& [m, c] : terms) {
    MvPolynomial term = constant(c);
    for (auto [v, e] : m.powers) {
      auto it = repl.find(v);
      if (it == repl.end()) {
        term = term * variable(v, e);
      } else if (e >= 0) {
        term = term * it->second.pow(e);
      } else {
        require(it->second.terms.size() == 1,
                "substitution of a non-monomial into a negative power of " + var_name(v));
        term = term * it->second.inverse_monomial().pow(-e);
      }
    }
    r = r + term;
  }
  return r;
}

bool MvPolynomial::uses_variable(int var) const {
  for (const auto& [m, c] : terms)
    for (auto [v, e] : m.powers)
      if (v == var) return true;
  return false;
}

std::string MvPolynomial::text() const {
  if (terms.empty()) return "0";
  std::string s;
  // render highest term first
  for (auto it = terms.rbegin(); it != terms.rend(); ++it) {
    const auto& [m, c] = *it;
    std::string t;
    bool neg = c.num < 0;
    Rational ab = neg ? -c : c;
    if (m.powers.empty() || ab != Rational(1)) t += ab.text();
    for (auto [v, e] : m.powers) {
      if (!t.empty() && t.back() != '*') t += "*";
      t += var_name(v);
      if (e != 1) t += "^" + std::to_string(e);
    }
    if (s.empty())
      s += neg ? "-" + t : t;
    else
      s += (neg ? " - " : " + ") + t;
  }
  return s;
}

SymbolicMatrix2 SymbolicMatrix2::operator*(const SymbolicMatrix2& o) const {
  return {a * o.a + b * o.c, a * o.b + b * o.d, c * o.a + d * o.c, c * o.b + d * o.d};
}

SymbolicMatrix2 SymbolicMatrix2::operator-(const SymbolicMatrix2& o) const {
  return {a - o.a, b - o.b, c - o.c, d - o.d};
}

SymbolicMatrix2 SymbolicMatrix2::scaled(const MvPolynomial& s) const {
  return {s * a, s * b, s * c, s * d};
}

MvPolynomial matrix_det(const std::vector<std::vector<MvPolynomial>>& m) {
  const int n = static_cast<int>(m.size());
  check_internal(n <= 16, "matrix_det: dimension too large");
  // dp over subsets of used columns, processing rows in order
  std::map<unsigned, MvPolynomial> dp;
  dp[0] = MvPolynomial::constant(Rational(1));
  for (int row = 0; row < n; ++row) {
    std::map<unsigned, MvPolynomial> next;
    for (const auto& [mask, val] : dp) {
      for (int col = 0; col < n; ++col) {
        if (mask & (1u << col)) continue;
        if (m[row][col].is_zero()) continue;
        int before = 0;  // parity of inversions: used columns greater than col
        for (int k = col + 1; k < n; ++k)
          if (mask & (1u << k)) ++before;
        MvPolynomial contrib = val * m[row][col];
        if (before & 1) contrib = -contrib;
        unsigned nm = mask | (1u << col);
        auto it = next.find(nm);
        if (it == next.end())
          next[nm] = contrib;
        else
          it->second = it->second + contrib;
      }
    }
    dp = std::move(next);
  }
  auto it = dp.find((1u << n) - 1);
  return it == dp.end() ? MvPolynomial::zero() : it->second;
}

// ---------------------------------------------------------------------------
// parser

namespace {
struct Parser {
  const std::string& s;
  size_t i = 0;
  explicit Parser(const std::string& str) : s(str) {}

  void skip() {
    while (i < s.size() && std::isspace(static_cast<unsigned char>(s[i]))) ++i;
  }
  bool eat(char c) {
    skip();
    if (i < s.size() && s[i] == c) {
      ++i;
      return true;
    }
    return false;
  }
  [[noreturn]] void fail(const std::string& why) {
    throw precondition_error("polynomial parse error at position " + std::to_string(i) + ": " +
                             why + " in '" + s + "'");
  }

  Int integer() {
    skip();
    bool neg = eat('-');
    skip();
    if (i >= s.size() || !std::isdigit(static_cast<unsigned char>(s[i]))) fail("expected integer");
    Int v = 0;
    while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) {
      v = v * 10 + (s[i] - '0');
      ++i;
    }
    return neg ? -v : v;
  }

  MvPolynomial factor() {
    skip();
    if (eat('(')) {
      MvPolynomial p = expr();
      if (!eat(')')) fail("expected ')'");
      return maybe_pow(p);
    }
    if (i < s.size() && (std::isdigit(static_cast<unsigned char>(s[i])))) {
      Int n = integer();
      skip();
      if (eat('/')) {
        Int d = integer();
        return maybe_pow(MvPolynomial::constant(Rational(n, d)));
      }
      return maybe_pow(MvPolynomial::constant(Rational(n)));
    }
    // variable token: letters then digits then optional embedding letters
    size_t start = i;
    while (i < s.size() &&
           (std::isalnum(static_cast<unsigned char>(s[i])) || s[i] == '_' || s[i] == '\''))
      ++i;
    if (i == start) fail("expected factor");
    std::string name = s.substr(start, i - start);
    return maybe_pow(MvPolynomial::variable(name));
  }

  MvPolynomial maybe_pow(MvPolynomial base) {
    skip();
    if (eat('^')) {
      Int e = integer();
      return base.pow(static_cast<int>(e));
    }
    return base;
  }

  MvPolynomial term() {
    MvPolynomial p = factor();
    while (true) {
      skip();
      if (eat('*')) {
        p = p * factor();
        continue;
      }
      break;
    }
    return p;
  }

  MvPolynomial expr() {
    skip();
    bool neg = false;
    if (eat('-'))
      neg = true;
    else
      eat('+');
    MvPolynomial p = term();
    if (neg) p = -p;
    while (true) {
      skip();
      if (eat('+')) {
        p = p + term();
      } else if (eat('-')) {
        p = p - term();
      } else {
        break;
      }
    }
    return p;
  }
};
}  // namespace

MvPolynomial parse_polynomial(const std::string& line) {
  Parser p(line);
  MvPolynomial r = p.expr();
  p.skip();
  if (p.i != line.size()) p.fail("trailing input");
  return r;
}

std::vector<MvPolynomial> parse_table_file(const std::string& path) {
  std::ifstream in(path);
  require(in.good(), "cannot open table file " + path);
  std::vector<MvPolynomial> out;
  std::string line;
  while (std::getline(in, line)) {
    // strip comments and blank lines
    size_t h = line.find('#');
    if (h != std::string::npos) line = line.substr(0, h);
    bool blank = true;
    for (char c : line)
      if (!std::isspace(static_cast<unsigned char>(c))) blank = false;
    if (blank) continue;
    out.push_back(parse_polynomial(line));
  }
  return out;
}

}  // namespace uwk::polysym
