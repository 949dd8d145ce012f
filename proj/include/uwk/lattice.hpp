#pragma once

// Character lattices of the diagonal tori of the rank-2 unramified unitary
// group over K and of GL2 over the quadratic extension K2, with the arithmetic
// Frobenius actions, Weyl actions, coroot pairings, depth, base change, and
// the sublattices (p - pi) X^0 and the root lattice.
//
// Embedding indices run j in {0..f-1} on the unitary side and j' in {0..2f-1}
// on the double (GL2/K2) side.  A character stores one integer pair per
// embedding; the coroot pairing in each embedding is a_j - b_j.

#include <vector>

#include "uwk/common.hpp"
#include "uwk/intlin.hpp"

namespace uwk::lattice {

struct Params {
  Int p;
  int f;
  Params(Int p_, int f_) : p(p_), f(f_) {
    require(is_prime(p) && p >= 3, "p must be an odd prime >= 3");
    require(f >= 1, "f must be >= 1");
  }
};

enum class Side { unitary, dbl };

struct UnitaryCharacter {
  std::vector<IntPair> e;  // length f
  UnitaryCharacter() = default;
  explicit UnitaryCharacter(std::vector<IntPair> v) : e(std::move(v)) {}
  int f() const { return static_cast<int>(e.size()); }
  bool operator==(const UnitaryCharacter& o) const { return e == o.e; }
};

struct DoubleCharacter {
  std::vector<IntPair> e;  // length 2f
  DoubleCharacter() = default;
  explicit DoubleCharacter(std::vector<IntPair> v) : e(std::move(v)) {}
  int f() const { return static_cast<int>(e.size()) / 2; }
  bool operator==(const DoubleCharacter& o) const { return e == o.e; }
};

struct WeylElement {
  std::vector<uint8_t> bits;  // length f, 1 = nontrivial reflection in that embedding
  WeylElement() = default;
  explicit WeylElement(std::vector<uint8_t> b) : bits(std::move(b)) {}
  static WeylElement identity(int f) { return WeylElement(std::vector<uint8_t>(f, 0)); }
  static WeylElement longest(int f) { return WeylElement(std::vector<uint8_t>(f, 1)); }
  int f() const { return static_cast<int>(bits.size()); }
  bool operator==(const WeylElement& o) const { return bits == o.bits; }
};

struct DoubleWeylElement {
  std::vector<uint8_t> bits;  // length 2f
  DoubleWeylElement() = default;
  explicit DoubleWeylElement(std::vector<uint8_t> b) : bits(std::move(b)) {}
  static DoubleWeylElement identity(int f2) { return DoubleWeylElement(std::vector<uint8_t>(f2, 0)); }
  int f() const { return static_cast<int>(bits.size()) / 2; }
  bool operator==(const DoubleWeylElement& o) const { return bits == o.bits; }
};

// duplicate s across the two halves: (s, s)
DoubleWeylElement doubled(const WeylElement& s);

// componentwise product (the Weyl group is elementary abelian 2-group)
WeylElement compose(const WeylElement& a, const WeylElement& b);
DoubleWeylElement compose(const DoubleWeylElement& a, const DoubleWeylElement& b);

Int coroot_pairing(const UnitaryCharacter& mu, int j);
Int coroot_pairing(const DoubleCharacter& mu, int jp);

enum class Direction { forward, inverse };

// Arithmetic Frobenius pi: shift right with (a,b) -> (-b,-a) wrapping on the
// unitary side; plain cyclic shift pi' on the double side.
UnitaryCharacter frobenius(const UnitaryCharacter& mu, Direction dir);
DoubleCharacter frobenius(const DoubleCharacter& mu, Direction dir);

// Frobenius on Weyl elements (shift right; entries are self-inverse)
WeylElement frobenius(const WeylElement& w, Direction dir);
DoubleWeylElement frobenius(const DoubleWeylElement& w, Direction dir);

UnitaryCharacter weyl_act(const WeylElement& w, const UnitaryCharacter& mu);
DoubleCharacter weyl_act(const DoubleWeylElement& w, const DoubleCharacter& mu);

// BC(mu) = (mu, -w(mu))
DoubleCharacter base_change(const UnitaryCharacter& mu);

// Largest N with N < <mu + rho, alpha_j^v> < p - N for every positive root,
// or -1 when mu is not 0-deep.  The shift character rho (resp. eta') has
// pairing 1 in every embedding on either side.
Int depth(const UnitaryCharacter& mu, Int p);
Int depth(const DoubleCharacter& mu, Int p);

enum class Sublattice { pMinusPiX0, rootLattice };

bool in_sublattice(const UnitaryCharacter& delta, Sublattice which, Int p);
bool in_sublattice(const DoubleCharacter& delta, Sublattice which, Int p);

// Matrix of (p - pi) on X^0 in the basis c_j = (1,1)-at-slot-j; columns are
// the images (p - pi) c_j expressed in the same basis.
intlin::Mat p_minus_pi_matrix(Int p, int slots, Side side);

// [X^0 : (p - pi) X^0] computed as the product of the Smith elementary
// divisors; equals p^f + 1 on the unitary side and p^{2f} - 1 on the double.
Int sublattice_index_x0(Int p, int f, Side side);

// characters with a single nonzero slot
UnitaryCharacter unit_rho(int f, int j);          // (1,0) at slot j
UnitaryCharacter unit_alpha(int f, int j);        // (1,-1) at slot j
UnitaryCharacter rho_sum(int f);                  // (1,0) in every slot
DoubleCharacter eta_prime(int f);                 // (1,0) in every double slot

UnitaryCharacter add(const UnitaryCharacter& x, const UnitaryCharacter& y);
UnitaryCharacter sub(const UnitaryCharacter& x, const UnitaryCharacter& y);
DoubleCharacter add(const DoubleCharacter& x, const DoubleCharacter& y);
DoubleCharacter sub(const DoubleCharacter& x, const DoubleCharacter& y);

}  // namespace uwk::lattice
