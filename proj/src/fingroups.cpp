#include "uwk/fingroups.hpp"

#include <algorithm>
#include <cmath>
#include <memory>
#include <numeric>
#include <random>

namespace uwk::fingroups {

// --------------------------------------------------------------------------
// finite field

namespace {
// multiply polynomials over F_p and reduce modulo the monic modulus
std::vector<int> poly_mul_mod(const std::vector<int>& x, const std::vector<int>& y,
                              const std::vector<int>& modulus, Int p) {
  const int d = static_cast<int>(modulus.size());
  std::vector<int> prod(2 * d - 1, 0);
  for (size_t i = 0; i < x.size(); ++i)
    for (size_t j = 0; j < y.size(); ++j)
      prod[i + j] = static_cast<int>((prod[i + j] + Int(x[i]) * y[j]) % p);
  for (int k = 2 * d - 2; k >= d; --k) {
    int c = prod[k];
    if (c == 0) continue;
    prod[k] = 0;
    for (int i = 0; i < d; ++i)
      prod[k - d + i] = static_cast<int>(((prod[k - d + i] - Int(c) * modulus[i]) % p + p) % p);
  }
  prod.resize(d);
  return prod;
}

// remainder of monic-divisor division over F_p
std::vector<int> poly_rem(std::vector<int> num, const std::vector<int>& div, Int p) {
  int dd = static_cast<int>(div.size()) - 1;
  for (int k = static_cast<int>(num.size()) - 1; k >= dd; --k) {
    int c = num[k];
    if (c == 0) continue;
    for (int i = 0; i <= dd; ++i)
      num[k - dd + i] = static_cast<int>(((num[k - dd + i] - Int(c) * div[i]) % p + p) % p);
  }
  num.resize(std::max(dd, 1));
  return num;
}

bool poly_is_zero(const std::vector<int>& v) {
  for (int c : v)
    if (c) return false;
  return true;
}

// irreducibility by trial division by all monic polynomials of degree <= d/2
bool irreducible(const std::vector<int>& monic_full, Int p) {
  int d = static_cast<int>(monic_full.size()) - 1;
  for (int deg = 1; deg <= d / 2; ++deg) {
    Int total = 1;
    for (int i = 0; i < deg; ++i) total *= p;
    for (Int code = 0; code < total; ++code) {
      std::vector<int> div(deg + 1, 0);
      Int c = code;
      for (int i = 0; i < deg; ++i) {
        div[i] = static_cast<int>(c % p);
        c /= p;
      }
      div[deg] = 1;
      if (poly_is_zero(poly_rem(monic_full, div, p))) return false;
    }
  }
  return true;
}
}  // namespace

FiniteField FiniteField::make(Int p, int d) {
  require(is_prime(p), "finite field characteristic must be prime");
  require(d >= 1 && d <= 8, "finite field degree out of range");
  FiniteField F;
  F.p = p;
  F.d = d;
  Int qq = 1;
  for (int i = 0; i < d; ++i) qq *= p;
  require(qq <= 1 << 20, "finite field too large");
  F.q = static_cast<int>(qq);

  // lexicographically least monic irreducible: ascend through coefficient
  // tuples read as base-p numbers with the constant term least significant
  F.modulus.assign(d, 0);
  if (d == 1) {
    F.modulus[0] = 0;  // modulus x; the field is F_p itself
  } else {
    bool found = false;
    for (Int code = 0; code < qq && !found; ++code) {
      std::vector<int> mod(d, 0);
      Int c = code;
      for (int i = 0; i < d; ++i) {
        mod[i] = static_cast<int>(c % p);
        c /= p;
      }
      std::vector<int> full = mod;
      full.push_back(1);
      if (irreducible(full, p)) {
        F.modulus = mod;
        found = true;
      }
    }
    check_internal(found, "no irreducible modulus found");
  }

  auto decode = [&](int a) {
    std::vector<int> v(d);
    for (int i = 0; i < d; ++i) {
      v[i] = a % static_cast<int>(p);
      a /= static_cast<int>(p);
    }
    return v;
  };
  auto encode = [&](const std::vector<int>& v) {
    int a = 0;
    for (int i = d - 1; i >= 0; --i) a = a * static_cast<int>(p) + v[i];
    return a;
  };

  F.add_t.resize(size_t(F.q) * F.q);
  F.mul_t.resize(size_t(F.q) * F.q);
  F.neg_t.resize(F.q);
  for (int a = 0; a < F.q; ++a) {
    std::vector<int> va = decode(a);
    std::vector<int> na(d);
    for (int i = 0; i < d; ++i) na[i] = static_cast<int>((p - va[i]) % p);
    F.neg_t[a] = encode(na);
    for (int b = 0; b < F.q; ++b) {
      std::vector<int> vb = decode(b);
      std::vector<int> s(d);
      for (int i = 0; i < d; ++i) s[i] = static_cast<int>((va[i] + vb[i]) % p);
      F.add_t[size_t(a) * F.q + b] = encode(s);
      F.mul_t[size_t(a) * F.q + b] = encode(poly_mul_mod(va, vb, F.modulus, p));
    }
  }
  F.inv_t.assign(F.q, 0);
  for (int a = 1; a < F.q; ++a)
    for (int b = 1; b < F.q; ++b)
      if (F.mul_t[size_t(a) * F.q + b] == 1) {
        F.inv_t[a] = b;
        break;
      }
  F.frob_t.resize(F.q);
  for (int a = 0; a < F.q; ++a) F.frob_t[a] = F.pow(a, p);
  return F;
}

int FiniteField::inv(int a) const {
  require(a != 0, "inverse of zero field element");
  return inv_t[a];
}

int FiniteField::frob_iter(int a, int k) const {
  for (int i = 0; i < k; ++i) a = frob_t[a];
  return a;
}

int FiniteField::pow(int a, Int e) const {
  Int m = q - 1;
  if (a == 0) {
    require(e > 0, "0^e with e <= 0");
    return 0;
  }
  e %= m;
  if (e < 0) e += m;
  int r = 1, base = a;
  while (e) {
    if (e & 1) r = mul(r, base);
    base = mul(base, base);
    e >>= 1;
  }
  return r;
}

int FiniteField::element_order(int a) const {
  require(a != 0, "order of zero");
  int r = a, n = 1;
  while (r != 1) {
    r = mul(r, a);
    ++n;
  }
  return n;
}

// --------------------------------------------------------------------------
// group tables

namespace {
M2 m2_mul(const FiniteField& F, const M2& x, const M2& y) {
  return M2{F.add(F.mul(x.a, y.a), F.mul(x.b, y.c)), F.add(F.mul(x.a, y.b), F.mul(x.b, y.d)),
            F.add(F.mul(x.c, y.a), F.mul(x.d, y.c)), F.add(F.mul(x.c, y.b), F.mul(x.d, y.d))};
}

int m2_det(const FiniteField& F, const M2& x) {
  return F.sub(F.mul(x.a, x.d), F.mul(x.b, x.c));
}

M2 m2_inv(const FiniteField& F, const M2& x) {
  int di = F.inv(m2_det(F, x));
  return M2{F.mul(di, x.d), F.mul(di, F.neg(x.b)), F.mul(di, F.neg(x.c)), F.mul(di, x.a)};
}
}  // namespace

int GroupTable::mul(int i, int j) const {
  std::optional<int> k = find(m2_mul(*F, elems[i], elems[j]));
  check_internal(k.has_value(), name + ": product escapes the table");
  return *k;
}

int GroupTable::inverse(int i) const {
  std::optional<int> k = find(m2_inv(*F, elems[i]));
  check_internal(k.has_value(), name + ": inverse escapes the table");
  return *k;
}

std::vector<int> GroupTable::generators() const {
  std::vector<int> gens;
  std::vector<char> in(size(), 0);
  std::optional<int> id = find(M2{1, 0, 0, 1});
  check_internal(id.has_value(), name + ": identity missing");
  auto close = [&]() {
    std::fill(in.begin(), in.end(), 0);
    std::vector<int> queue = {*id};
    in[*id] = 1;
    for (size_t h = 0; h < queue.size(); ++h)
      for (int g : gens) {
        int x = mul(queue[h], g);
        if (!in[x]) {
          in[x] = 1;
          queue.push_back(x);
        }
      }
    return queue.size();
  };
  size_t covered = close();
  while (covered < static_cast<size_t>(size())) {
    for (int i = 0; i < size(); ++i)
      if (!in[i]) {
        gens.push_back(i);
        break;
      }
    covered = close();
  }
  return gens;
}

// --------------------------------------------------------------------------
// enumeration

Groups build_groups(Int p, int f) {
  require(is_prime(p) && p >= 3 && f >= 1, "build_groups: need an odd prime and f >= 1");
  // feasible exhaustive scan of GL2(k_{K2}): (p^{2f})^4 matrices
  double scan = std::pow(static_cast<double>(p), 8.0 * f);
  require(scan <= 1e8, "build_groups: enumeration size guard exceeded");

  Groups g;
  g.p = p;
  g.f = f;
  g.F = FiniteField::make(p, 2 * f);
  const FiniteField& F = g.F;
  const int q = F.q;
  g.U11.name = "U11";
  g.GU11.name = "GU11";
  g.GL2k.name = "GL2k";
  g.U11.F = g.GU11.F = g.GL2k.F = &F;

  for (int z = 1; z < q; ++z) {
    g.units.push_back(z);
    if (g.norm(z) == 1) g.U1.push_back(z);
  }

  const int negone = F.neg(1);
  for (int a = 0; a < q; ++a)
    for (int b = 0; b < q; ++b)
      for (int c = 0; c < q; ++c)
        for (int d = 0; d < q; ++d) {
          M2 m{a, b, c, d};
          if (m2_det(F, m) == 0) continue;
          // gram = conj-transpose(m) * Phi * m with Phi = [[0,1],[-1,0]]
          int fa = F.frob_iter(a, f), fb = F.frob_iter(b, f);
          int fc = F.frob_iter(c, f), fd = F.frob_iter(d, f);
          int m11 = F.sub(F.mul(fa, c), F.mul(fc, a));
          int m12 = F.sub(F.mul(fa, d), F.mul(fc, b));
          int m21 = F.sub(F.mul(fb, c), F.mul(fd, a));
          int m22 = F.sub(F.mul(fb, d), F.mul(fd, b));
          bool in_gu = m11 == 0 && m22 == 0 && m12 != 0 && m21 == F.neg(m12) &&
                       g.in_base_field(m12);
          if (in_gu) {
            g.GU11.add_element(m);
            if (m12 == 1 && m21 == negone) g.U11.add_element(m);
          }
          if (g.in_base_field(a) && g.in_base_field(b) && g.in_base_field(c) &&
              g.in_base_field(d))
            g.GL2k.add_element(m);
        }

  // decompose every GU11 element as u * z
  g.gu_decomp.assign(g.GU11.size(), {-1, -1});
  for (int z : g.units)
    for (int ui = 0; ui < g.U11.size(); ++ui) {
      const M2& u = g.U11.elems[ui];
      M2 m{F.mul(u.a, z), F.mul(u.b, z), F.mul(u.c, z), F.mul(u.d, z)};
      std::optional<int> gi = g.GU11.find(m);
      check_internal(gi.has_value(), "pushout image escapes GU11");
      if (g.gu_decomp[*gi].first < 0) g.gu_decomp[*gi] = {ui, z};
    }
  for (auto& pr : g.gu_decomp)
    check_internal(pr.first >= 0, "pushout map is not surjective onto GU11");
  return g;
}

PushoutReport pushout_check(const Groups& g) {
  PushoutReport rep;
  rep.u11 = g.U11.size();
  rep.gu11 = g.GU11.size();
  rep.gl2k = g.GL2k.size();
  rep.u1 = static_cast<Int>(g.U1.size());
  const FiniteField& F = g.F;
  auto fail = [&](const std::string& why) {
    rep.ok = false;
    rep.detail = why;
    return rep;
  };

  // unitary side: fibers of U11 x units -> GU11 are exactly U1-antidiagonals
  std::vector<int> hits(g.GU11.size(), 0);
  for (int z : g.units)
    for (int ui = 0; ui < g.U11.size(); ++ui) {
      const M2& u = g.U11.elems[ui];
      M2 m{F.mul(u.a, z), F.mul(u.b, z), F.mul(u.c, z), F.mul(u.d, z)};
      std::optional<int> gi = g.GU11.find(m);
      if (!gi) return fail("u*z escapes GU11");
      ++hits[*gi];
    }
  for (int h : hits)
    if (h != static_cast<int>(g.U1.size())) return fail("unitary pushout fiber size mismatch");
  // antidiagonal structure: (u,z) and (u t, t^{-1} z) agree for t in U1
  for (int t : g.U1) {
    const M2 tz = g.scalar(t);
    for (int ui = 0; ui < std::min(g.U11.size(), 16); ++ui) {
      M2 ut = m2_mul(F, g.U11.elems[ui], tz);
      if (!g.U11.find(ut)) return fail("U1 does not stabilize U11");
    }
  }
  if (rep.gu11 * rep.u1 != rep.u11 * static_cast<Int>(g.units.size()))
    return fail("unitary pushout order identity fails");

  // GL2 side: fibers of GL2(k_K) x units -> GU11 are k_K^x-antidiagonals
  Int base_units = 0;
  for (int z : g.units)
    if (g.in_base_field(z)) ++base_units;
  std::fill(hits.begin(), hits.end(), 0);
  for (int z : g.units)
    for (int gi2 = 0; gi2 < g.GL2k.size(); ++gi2) {
      const M2& u = g.GL2k.elems[gi2];
      M2 m{F.mul(u.a, z), F.mul(u.b, z), F.mul(u.c, z), F.mul(u.d, z)};
      std::optional<int> gi = g.GU11.find(m);
      if (!gi) return fail("g*z escapes GU11 on the GL2 side");
      ++hits[*gi];
    }
  for (int h : hits)
    if (h != base_units) return fail("GL2 pushout fiber size mismatch");
  if (rep.gu11 * base_units != rep.gl2k * static_cast<Int>(g.units.size()))
    return fail("GL2 pushout order identity fails");

  rep.ok = true;
  return rep;
}

// --------------------------------------------------------------------------
// dense linear algebra over the field

DMat DMat::identity_mat(int n) {
  DMat m(n);
  for (int i = 0; i < n; ++i) m.at(i, i) = 1;
  return m;
}

DMat mat_mul(const FiniteField& F, const DMat& x, const DMat& y) {
  check_internal(x.n == y.n, "mat_mul: size mismatch");
  DMat r(x.n);
  for (int i = 0; i < x.n; ++i)
    for (int k = 0; k < x.n; ++k) {
      int v = x.at(i, k);
      if (!v) continue;
      for (int j = 0; j < x.n; ++j)
        if (y.at(k, j)) r.at(i, j) = F.add(r.at(i, j), F.mul(v, y.at(k, j)));
    }
  return r;
}

bool mat_equal(const DMat& x, const DMat& y) { return x.n == y.n && x.a == y.a; }

std::optional<DMat> mat_inverse(const FiniteField& F, const DMat& m) {
  int n = m.n;
  DMat a = m, inv = DMat::identity_mat(n);
  for (int col = 0; col < n; ++col) {
    int piv = -1;
    for (int r = col; r < n; ++r)
      if (a.at(r, col)) {
        piv = r;
        break;
      }
    if (piv < 0) return std::nullopt;
    for (int j = 0; j < n; ++j) {
      std::swap(a.a[piv * n + j], a.a[col * n + j]);
      std::swap(inv.a[piv * n + j], inv.a[col * n + j]);
    }
    int s = F.inv(a.at(col, col));
    for (int j = 0; j < n; ++j) {
      a.at(col, j) = F.mul(a.at(col, j), s);
      inv.at(col, j) = F.mul(inv.at(col, j), s);
    }
    for (int r = 0; r < n; ++r) {
      if (r == col || !a.at(r, col)) continue;
      int c = a.at(r, col);
      for (int j = 0; j < n; ++j) {
        a.at(r, j) = F.sub(a.at(r, j), F.mul(c, a.at(col, j)));
        inv.at(r, j) = F.sub(inv.at(r, j), F.mul(c, inv.at(col, j)));
      }
    }
  }
  return inv;
}

namespace {
// row-echelon basis maintenance: rows with recorded pivot columns
struct Echelon {
  const FiniteField* F;
  int n;
  std::vector<std::vector<int>> rows;
  std::vector<int> pivots;
  explicit Echelon(const FiniteField& f, int n_) : F(&f), n(n_) {}
  // returns true when v was independent and is now part of the basis
  bool add(std::vector<int> v) {
    for (size_t r = 0; r < rows.size(); ++r) {
      int c = v[pivots[r]];
      if (c)
        for (int j = 0; j < n; ++j) v[j] = F->sub(v[j], F->mul(c, rows[r][j]));
    }
    int piv = -1;
    for (int j = 0; j < n; ++j)
      if (v[j]) {
        piv = j;
        break;
      }
    if (piv < 0) return false;
    int s = F->inv(v[piv]);
    for (int j = 0; j < n; ++j) v[j] = F->mul(v[j], s);
    rows.push_back(std::move(v));
    pivots.push_back(piv);
    return true;
  }
  int rank() const { return static_cast<int>(rows.size()); }
  // back-eliminate so that every pivot column is zero in the other rows
  void rrefize() {
    for (size_t r = 0; r < rows.size(); ++r)
      for (size_t s = 0; s < rows.size(); ++s) {
        if (s == r) continue;
        int c = rows[s][pivots[r]];
        if (c)
          for (int j = 0; j < n; ++j) rows[s][j] = F->sub(rows[s][j], F->mul(c, rows[r][j]));
      }
  }
};

std::vector<int> apply(const FiniteField& F, const DMat& m, const std::vector<int>& v) {
  std::vector<int> r(m.n, 0);
  for (int i = 0; i < m.n; ++i)
    for (int j = 0; j < m.n; ++j)
      if (m.at(i, j) && v[j]) r[i] = F.add(r[i], F.mul(m.at(i, j), v[j]));
  return r;
}
}  // namespace

std::vector<std::vector<int>> spin_up(const FModule& m, const std::vector<int>& gens,
                                      const std::vector<int>& v) {
  const FiniteField& F = *m.F;
  std::vector<DMat> gmats;
  gmats.reserve(gens.size());
  for (int gidx : gens) gmats.push_back(m.act(gidx));
  Echelon ech(F, m.dim);
  std::vector<std::vector<int>> work;
  if (ech.add(v)) work.push_back(ech.rows.back());
  for (size_t h = 0; h < work.size(); ++h) {
    std::vector<int> cur = work[h];
    for (const DMat& gm : gmats) {
      std::vector<int> img = apply(F, gm, cur);
      if (ech.add(img)) work.push_back(ech.rows.back());
    }
    if (ech.rank() == m.dim) break;
  }
  return ech.rows;
}

bool is_simple(const FModule& m, const std::vector<int>& gens, uint64_t seed) {
  const FiniteField& F = *m.F;
  if (m.dim == 0) return false;
  double total = std::pow(static_cast<double>(F.q), m.dim);
  if (total <= 300000.0) {
    // exhaustive: every nonzero vector must generate
    std::vector<int> v(m.dim, 0);
    long long count = static_cast<long long>(total);
    for (long long code = 1; code < count; ++code) {
      long long c = code;
      for (int i = 0; i < m.dim; ++i) {
        v[i] = static_cast<int>(c % F.q);
        c /= F.q;
      }
      if (static_cast<int>(spin_up(m, gens, v).size()) != m.dim) return false;
    }
    return true;
  }
  // randomized spin-up with the dual-module check
  std::mt19937_64 rng(seed);
  auto random_vec = [&]() {
    std::vector<int> v(m.dim);
    bool nz = false;
    while (!nz) {
      for (int& x : v) {
        x = static_cast<int>(rng() % F.q);
        if (x) nz = true;
      }
    }
    return v;
  };
  for (int t = 0; t < 8; ++t)
    if (static_cast<int>(spin_up(m, gens, random_vec()).size()) != m.dim) return false;
  FModule dual;
  dual.G = m.G;
  dual.F = m.F;
  dual.dim = m.dim;
  const GroupTable* G = m.G;
  auto base = m.act;
  dual.act = [G, base](int gidx) {
    DMat a = base(G->inverse(gidx));
    DMat t(a.n);
    for (int i = 0; i < a.n; ++i)
      for (int j = 0; j < a.n; ++j) t.at(i, j) = a.at(j, i);
    return t;
  };
  for (int t = 0; t < 8; ++t)
    if (static_cast<int>(spin_up(dual, gens, random_vec()).size()) != dual.dim) return false;
  return true;
}

namespace {
// sub and quotient module through a change of basis; sub_basis rows span the
// invariant subspace
std::pair<FModule, FModule> subquotient(const FModule& m,
                                        const std::vector<std::vector<int>>& sub_basis) {
  const FiniteField& F = *m.F;
  int n = m.dim, k = static_cast<int>(sub_basis.size());
  // columns of P: first the subspace basis, then a completion
  Echelon ech(F, n);
  std::vector<std::vector<int>> cols;
  for (const auto& r : sub_basis) {
    check_internal(ech.add(r), "subquotient: dependent subspace basis");
    cols.push_back(r);
  }
  for (int j = 0; j < n && static_cast<int>(cols.size()) < n; ++j) {
    std::vector<int> e(n, 0);
    e[j] = 1;
    if (ech.add(e)) cols.push_back(e);
  }
  DMat P(n);
  for (int j = 0; j < n; ++j)
    for (int i = 0; i < n; ++i) P.at(i, j) = cols[j][i];
  std::optional<DMat> Pi = mat_inverse(F, P);
  check_internal(Pi.has_value(), "subquotient: basis completion not invertible");
  auto shared_P = std::make_shared<DMat>(P);
  auto shared_Pi = std::make_shared<DMat>(*Pi);
  auto base = m.act;
  const FiniteField* Fp = m.F;

  FModule sub;
  sub.G = m.G;
  sub.F = m.F;
  sub.dim = k;
  sub.act = [base, shared_P, shared_Pi, Fp, k](int gidx) {
    DMat conj = mat_mul(*Fp, mat_mul(*Fp, *shared_Pi, base(gidx)), *shared_P);
    DMat r(k);
    for (int i = 0; i < k; ++i)
      for (int j = 0; j < k; ++j) r.at(i, j) = conj.at(i, j);
    return r;
  };
  FModule quot;
  quot.G = m.G;
  quot.F = m.F;
  quot.dim = m.dim - k;
  int n_ = m.dim;
  quot.act = [base, shared_P, shared_Pi, Fp, k, n_](int gidx) {
    DMat conj = mat_mul(*Fp, mat_mul(*Fp, *shared_Pi, base(gidx)), *shared_P);
    DMat r(n_ - k);
    for (int i = k; i < n_; ++i)
      for (int j = k; j < n_; ++j) r.at(i - k, j - k) = conj.at(i, j);
    return r;
  };
  return {sub, quot};
}

// exhaustive minimal proper invariant subspace (small dimensions only)
std::optional<std::vector<std::vector<int>>> minimal_submodule(const FModule& m,
                                                               const std::vector<int>& gens) {
  const FiniteField& F = *m.F;
  double total = std::pow(static_cast<double>(F.q), m.dim);
  check_internal(total <= 300000.0, "minimal_submodule: dimension too large for exhaustion");
  std::optional<std::vector<std::vector<int>>> best;
  std::vector<int> v(m.dim, 0);
  long long count = static_cast<long long>(total);
  for (long long code = 1; code < count; ++code) {
    long long c = code;
    for (int i = 0; i < m.dim; ++i) {
      v[i] = static_cast<int>(c % F.q);
      c /= F.q;
    }
    auto basis = spin_up(m, gens, v);
    if (static_cast<int>(basis.size()) < m.dim &&
        (!best || basis.size() < best->size()))
      best = basis;
  }
  return best;
}
}  // namespace

std::vector<FModule> composition_factors(const FModule& m, const std::vector<int>& gens) {
  if (m.dim == 0) return {};
  std::optional<std::vector<std::vector<int>>> sub = minimal_submodule(m, gens);
  if (!sub) return {m};
  auto [s, q] = subquotient(m, *sub);
  std::vector<FModule> out = composition_factors(s, gens);
  std::vector<FModule> rest = composition_factors(q, gens);
  out.insert(out.end(), rest.begin(), rest.end());
  return out;
}

bool modules_isomorphic(const FModule& m1, const FModule& m2, const std::vector<int>& gens) {
  if (m1.dim != m2.dim) return false;
  const FiniteField& F = *m1.F;
  const int n = m1.dim;
  // nullspace of T A - B T = 0 over all generators; unknown T is n x n
  Echelon ech(F, n * n);
  for (int gidx : gens) {
    DMat A = m1.act(gidx), B = m2.act(gidx);
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) {
        // row for equation (i,j): sum_k T_{ik} A_{kj} - B_{ik} T_{kj} = 0
        std::vector<int> row(n * n, 0);
        for (int k = 0; k < n; ++k) {
          row[i * n + k] = F.add(row[i * n + k], A.at(k, j));
          row[k * n + j] = F.sub(row[k * n + j], B.at(i, k));
        }
        ech.add(std::move(row));
      }
  }
  int null_dim = n * n - ech.rank();
  if (null_dim <= 0) return false;
  // nullspace basis from the fully reduced form: one vector per free column
  ech.rrefize();
  std::vector<char> is_pivot(n * n, 0);
  for (int p : ech.pivots) is_pivot[p] = 1;
  std::vector<std::vector<int>> null_basis;
  for (int freecol = 0; freecol < n * n; ++freecol) {
    if (is_pivot[freecol]) continue;
    std::vector<int> v(n * n, 0);
    v[freecol] = 1;
    for (size_t r = 0; r < ech.rows.size(); ++r)
      v[ech.pivots[r]] = F.neg(ech.rows[r][freecol]);
    null_basis.push_back(std::move(v));
    if (static_cast<int>(null_basis.size()) >= null_dim) break;
  }
  // search combinations for an invertible intertwiner
  int k = std::min<int>(static_cast<int>(null_basis.size()), 3);
  long long combos = 1;
  for (int i = 0; i < k; ++i) combos *= F.q;
  for (long long code = 1; code < combos; ++code) {
    long long c = code;
    DMat T(n);
    for (int i = 0; i < k; ++i) {
      int coef = static_cast<int>(c % F.q);
      c /= F.q;
      if (!coef) continue;
      for (int idx = 0; idx < n * n; ++idx)
        T.a[idx] = F.add(T.a[idx], F.mul(coef, null_basis[i][idx]));
    }
    if (mat_inverse(F, T)) return true;
  }
  return false;
}

// --------------------------------------------------------------------------
// module constructors

namespace {
// columns of Sym^r(g): expansion of (aX + cY)^{r-i} (bX + dY)^i
DMat sym_power(const FiniteField& F, const M2& g, int r) {
  DMat m(r + 1);
  for (int i = 0; i <= r; ++i) {
    std::vector<int> coeff(1, 1);  // coefficients in X-degree descending order
    auto mul_linear = [&](int u, int v) {  // multiply by (u X + v Y)
      std::vector<int> next(coeff.size() + 1, 0);
      for (size_t k = 0; k < coeff.size(); ++k) {
        next[k] = F.add(next[k], F.mul(coeff[k], u));
        next[k + 1] = F.add(next[k + 1], F.mul(coeff[k], v));
      }
      coeff = std::move(next);
    };
    for (int t = 0; t < r - i; ++t) mul_linear(g.a, g.c);
    for (int t = 0; t < i; ++t) mul_linear(g.b, g.d);
    for (int k = 0; k <= r; ++k) m.at(k, i) = coeff[k];
  }
  return m;
}
}  // namespace

FModule weight_module(const Groups& g, int r, Int b) {
  require(r >= 0, "weight_module: negative symmetric power");
  FModule m;
  m.G = &g.U11;
  m.F = &g.F;
  m.dim = r + 1;
  const FiniteField* F = &g.F;
  const GroupTable* G = &g.U11;
  m.act = [F, G, r, b](int gidx) {
    const M2& mat = G->elems[gidx];
    DMat s = sym_power(*F, mat, r);
    int det = F->sub(F->mul(mat.a, mat.d), F->mul(mat.b, mat.c));
    int scale = F->pow(det, b);
    for (int& x : s.a) x = F->mul(x, scale);
    return s;
  };
  return m;
}

FModule permutation_module(const GroupTable& G, const FiniteField& coeff, int g0) {
  // cosets of the cyclic subgroup generated by g0
  std::vector<int> H = {*G.find(M2{1, 0, 0, 1})};
  {
    int cur = g0;
    while (cur != H[0]) {
      H.push_back(cur);
      cur = G.mul(cur, g0);
    }
  }
  std::vector<int> coset_of(G.size(), -1);
  std::vector<int> reps;
  for (int i = 0; i < G.size(); ++i) {
    if (coset_of[i] >= 0) continue;
    int c = static_cast<int>(reps.size());
    reps.push_back(i);
    for (int h : H) coset_of[G.mul(i, h)] = c;
  }
  auto shared_cosets = std::make_shared<std::vector<int>>(coset_of);
  auto shared_reps = std::make_shared<std::vector<int>>(reps);
  FModule m;
  m.G = &G;
  m.F = &coeff;
  m.dim = static_cast<int>(reps.size());
  const GroupTable* Gp = &G;
  m.act = [Gp, shared_cosets, shared_reps](int gidx) {
    int n = static_cast<int>(shared_reps->size());
    DMat r(n);
    for (int c = 0; c < n; ++c) {
      int image = (*shared_cosets)[Gp->mul(gidx, (*shared_reps)[c])];
      r.at(image, c) = 1;
    }
    return r;
  };
  return m;
}

FModule restrict_module(const FModule& big, const GroupTable& sub) {
  FModule m;
  m.G = &sub;
  m.F = big.F;
  m.dim = big.dim;
  const GroupTable* bigG = big.G;
  const GroupTable* subG = &sub;
  auto base = big.act;
  m.act = [base, bigG, subG](int gidx) {
    std::optional<int> parent = bigG->find(subG->elems[gidx]);
    check_internal(parent.has_value(), "restrict_module: element not in the parent group");
    return base(*parent);
  };
  return m;
}

// --------------------------------------------------------------------------
// idempotents, crossed product, transfer

IdempotentFamily central_idempotents(const FiniteField& F, const std::vector<int>& Z) {
  const int n = static_cast<int>(Z.size());
  require(n >= 1, "central_idempotents: empty subgroup");
  require((F.q - 1) % n == 0, "central_idempotents: field lacks the roots of unity");
  require(n % F.p != 0, "central_idempotents: |Z| must be prime to p");
  // generator of the cyclic subgroup
  int z0 = 0;
  for (int z : Z)
    if (F.element_order(z) == n) {
      z0 = z;
      break;
    }
  require(z0 != 0, "central_idempotents: subgroup is not cyclic of its size");
  IdempotentFamily fam;
  fam.zelems.resize(n);
  int cur = 1;
  for (int k = 0; k < n; ++k) {
    fam.zelems[k] = cur;
    cur = F.mul(cur, z0);
  }
  // primitive n-th root of unity: generator of F^x to the power (q-1)/n
  int gen = 0;
  for (int a = 2; a < F.q; ++a)
    if (F.element_order(a) == F.q - 1) {
      gen = a;
      break;
    }
  check_internal(gen != 0, "field has no multiplicative generator");
  int xi = F.pow(gen, (F.q - 1) / n);
  int n_inv = F.inv(static_cast<int>(n % F.p));
  fam.coeffs.assign(n, std::vector<int>(n, 0));
  for (int t = 0; t < n; ++t)
    for (int k = 0; k < n; ++k) {
      // e_t = n^{-1} sum_k chi_t(z0^k) (z0^k)^{-1}; coefficient lands at the
      // subgroup position of z0^{-k}
      int pos = (n - k) % n;
      fam.coeffs[t][pos] = F.mul(n_inv, F.pow(xi, Int(t) * k));
    }
  return fam;
}

namespace {
std::vector<int> algebra_convolve(const FiniteField& F, const std::vector<int>& x,
                                  const std::vector<int>& y) {
  const int n = static_cast<int>(x.size());
  std::vector<int> r(n, 0);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      int k = (i + j) % n;  // z0^i z0^j = z0^{i+j}
      r[k] = F.add(r[k], F.mul(x[i], y[j]));
    }
  return r;
}
}  // namespace

bool idempotent_module_check(const Groups& g, const FModule& m_over_gu) {
  const FiniteField& F = g.F;
  IdempotentFamily fam = central_idempotents(F, g.units);
  const int n = static_cast<int>(fam.zelems.size());
  // algebra-level orthogonality and completeness
  for (int s = 0; s < n; ++s)
    for (int t = 0; t < n; ++t) {
      std::vector<int> prod = algebra_convolve(F, fam.coeffs[s], fam.coeffs[t]);
      std::vector<int> expect = s == t ? fam.coeffs[s] : std::vector<int>(n, 0);
      if (prod != expect) return false;
    }
  {
    std::vector<int> sum(n, 0);
    for (int t = 0; t < n; ++t)
      for (int k = 0; k < n; ++k) sum[k] = F.add(sum[k], fam.coeffs[t][k]);
    std::vector<int> one(n, 0);
    one[0] = 1;
    if (sum != one) return false;
  }
  // module-level projectors
  const int dim = m_over_gu.dim;
  std::vector<DMat> proj(n, DMat(dim));
  for (int t = 0; t < n; ++t)
    for (int k = 0; k < n; ++k) {
      if (!fam.coeffs[t][k]) continue;
      std::optional<int> zi = g.GU11.find(g.scalar(fam.zelems[k]));
      check_internal(zi.has_value(), "scalar escapes GU11");
      DMat zm = m_over_gu.act(*zi);
      for (int idx = 0; idx < dim * dim; ++idx)
        proj[t].a[idx] = F.add(proj[t].a[idx], F.mul(fam.coeffs[t][k], zm.a[idx]));
    }
  DMat sum(dim);
  Int rank_total = 0;
  for (int t = 0; t < n; ++t) {
    for (int idx = 0; idx < dim * dim; ++idx) sum.a[idx] = F.add(sum.a[idx], proj[t].a[idx]);
    if (!mat_equal(mat_mul(F, proj[t], proj[t]), proj[t])) return false;
    for (int u = t + 1; u < n; ++u) {
      DMat pr = mat_mul(F, proj[t], proj[u]);
      for (int x : pr.a)
        if (x) return false;
    }
    Echelon ech(F, dim);
    for (int r = 0; r < dim; ++r) {
      std::vector<int> row(dim);
      for (int c = 0; c < dim; ++c) row[c] = proj[t].at(r, c);
      ech.add(std::move(row));
    }
    rank_total += ech.rank();
    // eigenspace dimension must match: kernel of rho(z0) - chi_t(z0) I
    std::optional<int> zi = g.GU11.find(g.scalar(fam.zelems[1 % n]));
    if (n > 1) {
      DMat zm = m_over_gu.act(*zi);
      int gen0 = 0;
      for (int a = 2; a < F.q; ++a)
        if (F.element_order(a) == F.q - 1) {
          gen0 = a;
          break;
        }
      int xi = F.pow(gen0, (F.q - 1) / n);
      int chi = F.pow(xi, t);
      Echelon eig(F, dim);
      for (int r = 0; r < dim; ++r) {
        std::vector<int> row(dim);
        for (int c = 0; c < dim; ++c)
          row[c] = F.sub(zm.at(r, c), r == c ? chi : 0);
        eig.add(std::move(row));
      }
      int eig_dim = dim - eig.rank();
      Echelon prk(F, dim);
      for (int r = 0; r < dim; ++r) {
        std::vector<int> row(dim);
        for (int c = 0; c < dim; ++c) row[c] = proj[t].at(r, c);
        prk.add(std::move(row));
      }
      if (eig_dim != prk.rank()) return false;
    }
  }
  if (!mat_equal(sum, DMat::identity_mat(dim))) return false;
  if (rank_total != dim) return false;
  // projectors commute with the group action
  std::vector<int> gens = g.GU11.generators();
  for (int t = 0; t < n; ++t)
    for (int gi : gens) {
      DMat a = m_over_gu.act(gi);
      if (!mat_equal(mat_mul(F, proj[t], a), mat_mul(F, a, proj[t]))) return false;
    }
  return true;
}

CrossedProductReport crossed_product_check(const Groups& g) {
  CrossedProductReport rep;
  const FiniteField& F = g.F;
  auto fail = [&](const std::string& why) {
    rep.ok = false;
    rep.detail = why;
    return rep;
  };
  // coset representatives of k_{K2}^x / U1, indexed by norm value
  std::vector<int> reps;
  std::vector<char> norm_seen(F.q, 0);
  for (int z : g.units) {
    int nv = g.norm(z);
    if (!norm_seen[nv]) {
      norm_seen[nv] = 1;
      reps.push_back(z);
    }
  }
  rep.rank = static_cast<Int>(reps.size());
  if (rep.rank != static_cast<Int>(g.units.size() / g.U1.size()))
    return fail("coset representative count is off");
  if (rep.rank * g.U11.size() != g.GU11.size()) return fail("freeness rank identity fails");
  // the scalar cosets partition GU11 (left = right since scalars are central)
  std::vector<char> seen(g.GU11.size(), 0);
  for (int z : reps) {
    const M2 zm = g.scalar(z);
    for (int ui = 0; ui < g.U11.size(); ++ui) {
      M2 prod = m2_mul(F, zm, g.U11.elems[ui]);
      std::optional<int> gi = g.GU11.find(prod);
      if (!gi) return fail("coset element escapes GU11");
      if (seen[*gi]) return fail("cosets overlap");
      seen[*gi] = 1;
      // central basis: y Lambda = Lambda y elementwise
      M2 other = m2_mul(F, g.U11.elems[ui], zm);
      if (!(prod == other)) return fail("scalar basis fails centrality");
    }
  }
  for (char s : seen)
    if (!s) return fail("cosets do not cover GU11");
  // twisted-basis axiom y1 y2 Lambda = (y1y2)~ Lambda on all pairs
  for (int z1 : reps)
    for (int z2 : reps) {
      int prod = F.mul(z1, z2);
      int z3 = 0;
      for (int r : reps)
        if (g.norm(r) == g.norm(prod)) {
          z3 = r;
          break;
        }
      if (!z3) return fail("product class has no representative");
      // z1 z2 z3^{-1} must land in U1
      int t = F.mul(prod, F.inv(z3));
      if (g.norm(t) != 1) return fail("twisted-basis axiom fails");
    }
  rep.ok = true;
  return rep;
}

TransferResult transfer_module(const Groups& g, const FModule& v, Int chi_exponent) {
  const FiniteField& F = g.F;
  require(v.G == &g.U11, "transfer_module: input must be a U11 module");
  // central-character compatibility on U1
  for (int z : g.U1) {
    std::optional<int> zi = g.U11.find(g.scalar(z));
    check_internal(zi.has_value(), "U1 scalar escapes U11");
    DMat zm = v.act(*zi);
    int expect = F.pow(z, chi_exponent);
    DMat target = DMat::identity_mat(v.dim);
    for (int& x : target.a) x = F.mul(x, expect);
    require(mat_equal(zm, target),
            "transfer_module: character choice disagrees with the central character on U1");
  }
  TransferResult out;
  out.over_gu.G = &g.GU11;
  out.over_gu.F = v.F;
  out.over_gu.dim = v.dim;
  const Groups* gp = &g;
  auto base = v.act;
  Int t = chi_exponent;
  out.over_gu.act = [gp, base, t](int gidx) {
    auto [ui, z] = gp->gu_decomp[gidx];
    DMat m = base(ui);
    int scale = gp->F.pow(z, t);
    for (int& x : m.a) x = gp->F.mul(x, scale);
    return m;
  };
  out.over_gl2 = restrict_module(out.over_gu, g.GL2k);
  out.simple_before = is_simple(v, g.U11.generators(), 0x5eedULL);
  out.simple_after = is_simple(out.over_gl2, g.GL2k.generators(), 0x5eedULL);
  return out;
}

}  // namespace uwk::fingroups
