#include "uwk/weightclass.hpp"

namespace uwk::weights {

namespace {
std::vector<IntPair> canonical_rep(const std::vector<IntPair>& e, Int p, Side side) {
  const int n = static_cast<int>(e.size());
  intlin::Vec pairing(n), bcoord(n);
  for (int j = 0; j < n; ++j) {
    pairing[j] = e[j][0] - e[j][1];
    bcoord[j] = e[j][1];
    require(pairing[j] >= 0 && pairing[j] <= p - 1,
            "character is not p-restricted in any representative");
  }
  intlin::Mat h = intlin::hermite_upper(lattice::p_minus_pi_matrix(p, n, side));
  intlin::Vec red = intlin::reduce_mod_lattice(bcoord, h);
  std::vector<IntPair> rep(n);
  for (int j = 0; j < n; ++j) rep[j] = {pairing[j] + red[j], red[j]};
  return rep;
}
}  // namespace

SerreWeightClass canonicalize(const UnitaryCharacter& lam, Int p) {
  SerreWeightClass w;
  w.side = Side::unitary;
  w.p = p;
  w.f = lam.f();
  w.rep = canonical_rep(lam.e, p, Side::unitary);
  return w;
}

SerreWeightClass canonicalize(const DoubleCharacter& lam, Int p) {
  SerreWeightClass w;
  w.side = Side::dbl;
  w.p = p;
  w.f = lam.f();
  w.rep = canonical_rep(lam.e, p, Side::dbl);
  return w;
}

bool weights_equal(const SerreWeightClass& a, const SerreWeightClass& b) {
  require(a.side == b.side, "cannot compare weight classes across sides");
  return a == b;
}

std::string SerreWeightClass::text() const {
  std::string s;
  for (size_t i = 0; i < rep.size(); ++i) {
    if (i) s += ",";
    s += "(" + std::to_string(rep[i][0]) + "," + std::to_string(rep[i][1]) + ")";
  }
  return s;
}

}  // namespace uwk::weights
