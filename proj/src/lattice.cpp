#include "uwk/lattice.hpp"

namespace uwk::lattice {

DoubleWeylElement doubled(const WeylElement& s) {
  std::vector<uint8_t> b(s.bits);
  b.insert(b.end(), s.bits.begin(), s.bits.end());
  return DoubleWeylElement(std::move(b));
}

WeylElement compose(const WeylElement& a, const WeylElement& b) {
  require(a.bits.size() == b.bits.size(), "Weyl length mismatch");
  std::vector<uint8_t> r(a.bits.size());
  for (size_t i = 0; i < r.size(); ++i) r[i] = a.bits[i] ^ b.bits[i];
  return WeylElement(std::move(r));
}

DoubleWeylElement compose(const DoubleWeylElement& a, const DoubleWeylElement& b) {
  require(a.bits.size() == b.bits.size(), "Weyl length mismatch");
  std::vector<uint8_t> r(a.bits.size());
  for (size_t i = 0; i < r.size(); ++i) r[i] = a.bits[i] ^ b.bits[i];
  return DoubleWeylElement(std::move(r));
}

Int coroot_pairing(const UnitaryCharacter& mu, int j) {
  require(j >= 0 && j < mu.f(), "embedding index out of range");
  return mu.e[j][0] - mu.e[j][1];
}

Int coroot_pairing(const DoubleCharacter& mu, int jp) {
  require(jp >= 0 && jp < 2 * mu.f(), "embedding index out of range");
  return mu.e[jp][0] - mu.e[jp][1];
}

UnitaryCharacter frobenius(const UnitaryCharacter& mu, Direction dir) {
  const int f = mu.f();
  std::vector<IntPair> r(f);
  if (dir == Direction::forward) {
    for (int j = 1; j < f; ++j) r[j] = mu.e[j - 1];
    r[0] = -swapped(mu.e[f - 1]);
  } else {
    for (int j = 0; j + 1 < f; ++j) r[j] = mu.e[j + 1];
    r[f - 1] = -swapped(mu.e[0]);
  }
  return UnitaryCharacter(std::move(r));
}

DoubleCharacter frobenius(const DoubleCharacter& mu, Direction dir) {
  const int n = 2 * mu.f();
  std::vector<IntPair> r(n);
  for (int j = 0; j < n; ++j)
    r[j] = (dir == Direction::forward) ? mu.e[(j - 1 + n) % n] : mu.e[(j + 1) % n];
  return DoubleCharacter(std::move(r));
}

WeylElement frobenius(const WeylElement& w, Direction dir) {
  const int f = w.f();
  std::vector<uint8_t> r(f);
  for (int j = 0; j < f; ++j)
    r[j] = (dir == Direction::forward) ? w.bits[(j - 1 + f) % f] : w.bits[(j + 1) % f];
  return WeylElement(std::move(r));
}

DoubleWeylElement frobenius(const DoubleWeylElement& w, Direction dir) {
  const int n = 2 * w.f();
  std::vector<uint8_t> r(n);
  for (int j = 0; j < n; ++j)
    r[j] = (dir == Direction::forward) ? w.bits[(j - 1 + n) % n] : w.bits[(j + 1) % n];
  return DoubleWeylElement(std::move(r));
}

UnitaryCharacter weyl_act(const WeylElement& w, const UnitaryCharacter& mu) {
  require(w.f() == mu.f(), "Weyl/character length mismatch");
  std::vector<IntPair> r(mu.e);
  for (int j = 0; j < mu.f(); ++j)
    if (w.bits[j]) r[j] = swapped(r[j]);
  return UnitaryCharacter(std::move(r));
}

DoubleCharacter weyl_act(const DoubleWeylElement& w, const DoubleCharacter& mu) {
  require(w.bits.size() == mu.e.size(), "Weyl/character length mismatch");
  std::vector<IntPair> r(mu.e);
  for (size_t j = 0; j < r.size(); ++j)
    if (w.bits[j]) r[j] = swapped(r[j]);
  return DoubleCharacter(std::move(r));
}

DoubleCharacter base_change(const UnitaryCharacter& mu) {
  const int f = mu.f();
  std::vector<IntPair> r(2 * f);
  for (int j = 0; j < f; ++j) {
    r[j] = mu.e[j];
    r[j + f] = -swapped(mu.e[j]);
  }
  return DoubleCharacter(std::move(r));
}

namespace {
Int depth_of_pairings(const std::vector<IntPair>& e, Int p) {
  Int d = p;  // larger than any attainable depth
  for (const IntPair& x : e) {
    Int pr = x[0] - x[1] + 1;  // <mu + rho, alpha^v>
    Int m = std::min(pr - 1, p - 1 - pr);
    d = std::min(d, m);
  }
  return d < 0 ? -1 : d;
}
}  // namespace

Int depth(const UnitaryCharacter& mu, Int p) { return depth_of_pairings(mu.e, p); }
Int depth(const DoubleCharacter& mu, Int p) { return depth_of_pairings(mu.e, p); }

intlin::Mat p_minus_pi_matrix(Int p, int slots, Side side) {
  intlin::Mat m(slots, intlin::Vec(slots, 0));
  for (int k = 0; k < slots; ++k) {
    m[k][k] += p;
    if (side == Side::unitary) {
      // pi(c_k) = c_{k+1} for k < slots-1, and pi(c_{slots-1}) = -c_0
      if (k + 1 < slots)
        m[k + 1][k] -= 1;
      else
        m[0][k] += 1;
    } else {
      m[(k + 1) % slots][k] -= 1;
    }
  }
  return m;
}

namespace {
bool in_p_minus_pi_x0(const std::vector<IntPair>& e, Int p, Side side) {
  const int n = static_cast<int>(e.size());
  intlin::Vec b(n);
  for (int j = 0; j < n; ++j) {
    if (e[j][0] != e[j][1]) return false;  // must lie in X^0 first
    b[j] = e[j][0];
  }
  intlin::Mat h = intlin::hermite_upper(p_minus_pi_matrix(p, n, side));
  return intlin::in_lattice(b, h);
}

bool in_root_lattice(const std::vector<IntPair>& e) {
  for (const IntPair& x : e)
    if (x[0] + x[1] != 0) return false;
  return true;
}
}  // namespace

bool in_sublattice(const UnitaryCharacter& delta, Sublattice which, Int p) {
  return which == Sublattice::rootLattice ? in_root_lattice(delta.e)
                                          : in_p_minus_pi_x0(delta.e, p, Side::unitary);
}

bool in_sublattice(const DoubleCharacter& delta, Sublattice which, Int p) {
  return which == Sublattice::rootLattice ? in_root_lattice(delta.e)
                                          : in_p_minus_pi_x0(delta.e, p, Side::dbl);
}

Int sublattice_index_x0(Int p, int f, Side side) {
  int slots = side == Side::unitary ? f : 2 * f;
  intlin::Vec d = intlin::smith_diagonal(p_minus_pi_matrix(p, slots, side));
  Int idx = 1;
  for (Int x : d) idx *= x;
  return idx;
}

UnitaryCharacter unit_rho(int f, int j) {
  std::vector<IntPair> r(f, IntPair{0, 0});
  r[j] = {1, 0};
  return UnitaryCharacter(std::move(r));
}

UnitaryCharacter unit_alpha(int f, int j) {
  std::vector<IntPair> r(f, IntPair{0, 0});
  r[j] = {1, -1};
  return UnitaryCharacter(std::move(r));
}

UnitaryCharacter rho_sum(int f) { return UnitaryCharacter(std::vector<IntPair>(f, IntPair{1, 0})); }

DoubleCharacter eta_prime(int f) { return DoubleCharacter(std::vector<IntPair>(2 * f, IntPair{1, 0})); }

UnitaryCharacter add(const UnitaryCharacter& x, const UnitaryCharacter& y) {
  require(x.e.size() == y.e.size(), "character length mismatch");
  std::vector<IntPair> r(x.e.size());
  for (size_t i = 0; i < r.size(); ++i) r[i] = x.e[i] + y.e[i];
  return UnitaryCharacter(std::move(r));
}

UnitaryCharacter sub(const UnitaryCharacter& x, const UnitaryCharacter& y) {
  require(x.e.size() == y.e.size(), "character length mismatch");
  std::vector<IntPair> r(x.e.size());
  for (size_t i = 0; i < r.size(); ++i) r[i] = x.e[i] - y.e[i];
  return UnitaryCharacter(std::move(r));
}

DoubleCharacter add(const DoubleCharacter& x, const DoubleCharacter& y) {
  require(x.e.size() == y.e.size(), "character length mismatch");
  std::vector<IntPair> r(x.e.size());
  for (size_t i = 0; i < r.size(); ++i) r[i] = x.e[i] + y.e[i];
  return DoubleCharacter(std::move(r));
}

DoubleCharacter sub(const DoubleCharacter& x, const DoubleCharacter& y) {
  require(x.e.size() == y.e.size(), "character length mismatch");
  std::vector<IntPair> r(x.e.size());
  for (size_t i = 0; i < r.size(); ++i) r[i] = x.e[i] - y.e[i];
  return DoubleCharacter(std::move(r));
}

}  // namespace uwk::lattice
