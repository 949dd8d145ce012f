#pragma once

// Presentation (w', mu') of a tame inertial type for GL2 over the quadratic
// extension.  The pair is the data; equivalence under the change-of-
// presentation law lives in types.hpp.

#include <algorithm>

#include "uwk/lattice.hpp"

namespace uwk::types {

struct DoubleTypePresentation {
  lattice::DoubleWeylElement s;
  lattice::DoubleCharacter mu;
  Int p = 0;
  int f = 0;

  bool operator==(const DoubleTypePresentation& o) const {
    return s == o.s && mu == o.mu && p == o.p && f == o.f;
  }

  // N such that the presentation is N-generic: the largest N with
  // N < <mu', alpha^v> < p - N in every embedding (-1 if not 0-generic).
  Int genericity() const {
    Int d = p;
    for (const IntPair& x : mu.e) {
      Int pr = x[0] - x[1];
      d = std::min(d, std::min(pr - 1, p - 1 - pr));
    }
    return d < 0 ? -1 : d;
  }
};

}  // namespace uwk::types
