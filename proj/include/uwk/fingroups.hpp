#pragma once

// Concrete finite unitary groups over small residue fields: exhaustive
// enumeration of U11, GU11 and GL2(k_K) inside GL2(k_K2), the pushout
// decompositions, central idempotents of the group algebra, the crossed
// product structure, and the module transfer between U11 and GL2 through
// GU11.  Everything is table-driven; the enumeration is the oracle for all
// order claims.

#include <functional>
#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

#include "uwk/common.hpp"

namespace uwk::fingroups {

// F_{p^d} with elements encoded as integers in [0, p^d): base-p digit vectors
// of polynomial residues modulo the lexicographically least monic irreducible
// modulus (coefficient tuple (c_{d-1},...,c_0) compared as base-p numbers).
struct FiniteField {
  Int p = 0;
  int d = 0;
  int q = 0;
  std::vector<int> modulus;  // c_0 .. c_{d-1} of the non-leading part
  std::vector<int> mul_t, add_t;
  std::vector<int> inv_t, neg_t, frob_t;

  static FiniteField make(Int p, int d);

  int add(int a, int b) const { return add_t[a * q + b]; }
  int sub(int a, int b) const { return add_t[a * q + neg_t[b]]; }
  int mul(int a, int b) const { return mul_t[a * q + b]; }
  int neg(int a) const { return neg_t[a]; }
  int inv(int a) const;
  int frob(int a) const { return frob_t[a]; }  // x -> x^p
  int frob_iter(int a, int k) const;
  int pow(int a, Int e) const;
  int element_order(int a) const;  // multiplicative order, a != 0
};

struct M2 {
  int a = 0, b = 0, c = 0, d = 0;
  bool operator==(const M2& o) const { return a == o.a && b == o.b && c == o.c && d == o.d; }
};

struct GroupTable {
  std::string name;
  const FiniteField* F = nullptr;
  std::vector<M2> elems;
  std::unordered_map<uint64_t, int> index;

  uint64_t key(const M2& m) const {
    return ((uint64_t(m.a) * F->q + m.b) * F->q + m.c) * F->q + m.d;
  }
  void add_element(const M2& m) {
    index.emplace(key(m), static_cast<int>(elems.size()));
    elems.push_back(m);
  }
  int size() const { return static_cast<int>(elems.size()); }
  std::optional<int> find(const M2& m) const {
    auto it = index.find(key(m));
    return it == index.end() ? std::nullopt : std::optional<int>(it->second);
  }
  int mul(int i, int j) const;
  int inverse(int i) const;
  std::vector<int> generators() const;  // small generating set, deterministic
};

struct Groups {
  Int p = 0;
  int f = 0;
  FiniteField F;                 // k_{K_2} = F_{p^{2f}}
  GroupTable U11, GU11, GL2k;
  std::vector<int> U1;           // norm-one scalars, as field elements
  std::vector<int> units;        // all of k_{K_2}^x
  // decomposition of each GU11 element as u * z (indices into U11 / field)
  std::vector<std::pair<int, int>> gu_decomp;

  // the tables point at the owned field, so moves must relink
  Groups() = default;
  Groups(Groups&& o) noexcept
      : p(o.p), f(o.f), F(std::move(o.F)), U11(std::move(o.U11)), GU11(std::move(o.GU11)),
        GL2k(std::move(o.GL2k)), U1(std::move(o.U1)), units(std::move(o.units)),
        gu_decomp(std::move(o.gu_decomp)) {
    relink();
  }
  Groups(const Groups&) = delete;
  Groups& operator=(const Groups&) = delete;
  Groups& operator=(Groups&&) = delete;
  void relink() { U11.F = GU11.F = GL2k.F = &F; }

  M2 scalar(int z) const { return M2{z, 0, 0, z}; }
  int norm(int z) const { return F.mul(z, F.frob_iter(z, f)); }
  bool in_base_field(int x) const { return F.frob_iter(x, f) == x; }
};

// Modules and transfer results borrow the Groups object (group tables and
// field); it must outlive them.

// exhaustive enumeration; guard p^{4f} <= 10^7
Groups build_groups(Int p, int f);

struct PushoutReport {
  bool ok = false;
  // orders observed by enumeration
  Int u11 = 0, gu11 = 0, gl2k = 0, u1 = 0;
  std::string detail;  // first failure, empty when ok
};

PushoutReport pushout_check(const Groups& g);

// dense square matrices over the coefficient field
struct DMat {
  int n = 0;
  std::vector<int> a;
  DMat() = default;
  explicit DMat(int n_) : n(n_), a(n_ * n_, 0) {}
  int& at(int r, int c) { return a[r * n + c]; }
  int at(int r, int c) const { return a[r * n + c]; }
  static DMat identity_mat(int n);
};

DMat mat_mul(const FiniteField& F, const DMat& x, const DMat& y);
bool mat_equal(const DMat& x, const DMat& y);
std::optional<DMat> mat_inverse(const FiniteField& F, const DMat& m);

// A module over a group table: dimension plus the action matrix per element
// index.  Actions are produced on demand; helper constructors below.
struct FModule {
  const GroupTable* G = nullptr;
  const FiniteField* F = nullptr;
  int dim = 0;
  std::function<DMat(int)> act;
};

// Sym^r of the standard representation twisted by det^b (a Serre weight
// module of U11 at f = 1 when 0 <= r <= p-1)
FModule weight_module(const Groups& g, int r, Int b);

// permutation module on the cosets G / <g0>
FModule permutation_module(const GroupTable& G, const FiniteField& coeff, int g0);

// restriction along a subgroup inclusion (sub's matrices looked up in big)
FModule restrict_module(const FModule& big, const GroupTable& sub);

// Central idempotents e_chi of coeff[Z] for the cyclic scalar subgroup Z
// (given as field elements); verified mutually orthogonal and complete.
struct IdempotentFamily {
  std::vector<int> zelems;                  // the subgroup, z0^k ordering
  std::vector<std::vector<int>> coeffs;     // one row per character: e_chi[z_k]
};

IdempotentFamily central_idempotents(const FiniteField& F, const std::vector<int>& Z);

// checks completeness/orthogonality in the group algebra and, on the module,
// that the projector family decomposes it with the right dimensions
bool idempotent_module_check(const Groups& g, const FModule& m_over_gu);

struct CrossedProductReport {
  bool ok = false;
  Int rank = 0;  // |GU11| / |U11|
  std::string detail;
};

// freeness over the U11 group algebra with the scalar coset basis, and the
// twisted-basis axioms on all representative pairs
CrossedProductReport crossed_product_check(const Groups& g);

struct TransferResult {
  FModule over_gu;        // extension of the U11 module to GU11
  FModule over_gl2;       // restriction of that extension to GL2(k_K)
  bool simple_before = false;
  bool simple_after = false;
};

// Extend a U11-module to GU11 by letting the scalar group act through
// z -> z^chi_exponent, then restrict to GL2(k_K); the exponent must agree
// with the module's central character on U1.
TransferResult transfer_module(const Groups& g, const FModule& v, Int chi_exponent);

// spin-up based simplicity test: 8 seeded vectors plus the dual module
bool is_simple(const FModule& m, const std::vector<int>& gens, uint64_t seed);

// basis of the submodule generated by a vector (column convention)
std::vector<std::vector<int>> spin_up(const FModule& m, const std::vector<int>& gens,
                                      const std::vector<int>& v);

// all composition factors, for small dimensions (exhaustive minimal-submodule
// search over all vectors)
std::vector<FModule> composition_factors(const FModule& m, const std::vector<int>& gens);

// module isomorphism by solving the intertwiner system
bool modules_isomorphic(const FModule& m1, const FModule& m2, const std::vector<int>& gens);

}  // namespace uwk::fingroups
