#pragma once

// Tame inertial type presentations and their calculus: equivalence under the
// change-of-presentation law, dual and Frobenius twist, conjugate
// self-duality, admissible words with the star involution, the types
// tau'_{w'} attached to shapes, the theta bijection and the type <-> weight
// incidence statements.

#include <optional>
#include <string>
#include <vector>

#include "uwk/presentation.hpp"
#include "uwk/weights.hpp"

namespace uwk::types {

using lattice::DoubleCharacter;
using lattice::DoubleWeylElement;
using lattice::UnitaryCharacter;
using lattice::WeylElement;
using weights::SerreWeightClass;
using weights::TameParam;

enum class Letter : uint8_t { T10, WT10, T01 };

const char* letter_name(Letter l);                    // "t10" / "wt10" / "t01"
std::optional<Letter> letter_from_name(const std::string& s);

struct AdmissibleWord {
  std::vector<Letter> letters;  // length 2f
  AdmissibleWord() = default;
  explicit AdmissibleWord(std::vector<Letter> l) : letters(std::move(l)) {}
  int f() const { return static_cast<int>(letters.size()) / 2; }
  bool symmetric() const {
    int f_ = f();
    for (int j = 0; j < f_; ++j)
      if (letters[j + f_] != letters[j]) return false;
    return true;
  }
  bool operator==(const AdmissibleWord& o) const { return letters == o.letters; }
  bool operator<(const AdmissibleWord& o) const { return letters < o.letters; }
};

// One slot of the starred sequence: a translation together with a Weyl bit.
struct StarLetter {
  IntPair translation;
  uint8_t weyl;
};

// (w^*)_{j'} read off from the letter at index 2f-1-j':
//   t_{(1,0)} -> (t_{(1,0)}, 1),  w t_{(1,0)} -> (t_{(1,0)}, w),  t_{(0,1)} -> (t_{(0,1)}, 1)
std::vector<StarLetter> star(const AdmissibleWord& w);

// all words with equal halves, 3^f of them, lexicographic in the first half
std::vector<AdmissibleWord> admissible_symmetric(int f);
// all 3^{2f} words
std::vector<AdmissibleWord> admissible_all(int f);

DoubleTypePresentation dual(const DoubleTypePresentation& t);
DoubleTypePresentation frobenius_twist(const DoubleTypePresentation& t);

struct EquivOutcome {
  bool isomorphic = false;
  bool generic = true;  // false when either presentation is below 0-generic
};

// Existence of (nu, s) with t2.s = s t1.s pi'(s)^{-1} and
// t2.mu = s(t1.mu) + p pi'^{-1}(nu) - t2.s(nu); the nu-system is solved
// exactly around the embedding cycle.
EquivOutcome equivalent_full(const DoubleTypePresentation& t1, const DoubleTypePresentation& t2);
bool equivalent(const DoubleTypePresentation& t1, const DoubleTypePresentation& t2);

bool is_conjugate_self_dual(const DoubleTypePresentation& t);

// tau'((s,s) w'^{-1}, BC(mu) + eta' - (s,s) w'^{-1}(nu')) with (nu', w') read
// off star(w)
DoubleTypePresentation type_for_shape(const TameParam& rho, const AdmissibleWord& w);

// For a symmetric word, the Jordan-Hoelder set of the attached type, computed
// through the unitary-side translation maps.
std::vector<SerreWeightClass> jh_of_symmetric_word(const TameParam& rho, const AdmissibleWord& w);

struct ThetaAssignment {
  // weight -> word over {T10, T01}^f, sorted by weight; a bijection
  std::vector<std::pair<SerreWeightClass, std::vector<Letter>>> table;
  const std::vector<Letter>* lookup(const SerreWeightClass& w) const;
};

// The unique assignment with: sigma in JH(tau'_{w'}) iff w'_{j'} differs from
// theta(sigma) at every slot, over all symmetric admissible words.  Memoized
// per (p, f, s, mu).
ThetaAssignment theta(const TameParam& rho);

// symmetric words avoiding theta(sigma) in every slot (2^f of them)
std::vector<AdmissibleWord> x_sigma(const TameParam& rho, const SerreWeightClass& sigma);

// the 2^f pairwise-inequivalent types tau'((s,s), BC(mu + rho - s(rho)));
// requires mu 2-deep
std::vector<DoubleTypePresentation> types_containing_weight(const UnitaryCharacter& mu, Int p);

}  // namespace uwk::types
