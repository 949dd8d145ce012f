#include "uwk/types.hpp"

#include <algorithm>
#include <map>
#include <mutex>

namespace uwk::types {

const char* letter_name(Letter l) {
  switch (l) {
    case Letter::T10: return "t10";
    case Letter::WT10: return "wt10";
    default: return "t01";
  }
}

std::optional<Letter> letter_from_name(const std::string& s) {
  if (s == "t10") return Letter::T10;
  if (s == "wt10") return Letter::WT10;
  if (s == "t01") return Letter::T01;
  return std::nullopt;
}

std::vector<StarLetter> star(const AdmissibleWord& w) {
  const int n = static_cast<int>(w.letters.size());
  std::vector<StarLetter> out(n);
  for (int jp = 0; jp < n; ++jp) {
    switch (w.letters[n - 1 - jp]) {
      case Letter::T10: out[jp] = {IntPair{1, 0}, 0}; break;
      case Letter::WT10: out[jp] = {IntPair{1, 0}, 1}; break;
      case Letter::T01: out[jp] = {IntPair{0, 1}, 0}; break;
    }
  }
  return out;
}

std::vector<AdmissibleWord> admissible_symmetric(int f) {
  std::vector<AdmissibleWord> out;
  int total = 1;
  for (int i = 0; i < f; ++i) total *= 3;
  out.reserve(total);
  for (int code = 0; code < total; ++code) {
    std::vector<Letter> l(2 * f);
    int c = code;
    for (int j = 0; j < f; ++j) {
      l[j] = static_cast<Letter>(c % 3);
      l[j + f] = l[j];
      c /= 3;
    }
    out.emplace_back(std::move(l));
  }
  return out;
}

std::vector<AdmissibleWord> admissible_all(int f) {
  std::vector<AdmissibleWord> out;
  long long total = 1;
  for (int i = 0; i < 2 * f; ++i) total *= 3;
  out.reserve(total);
  for (long long code = 0; code < total; ++code) {
    std::vector<Letter> l(2 * f);
    long long c = code;
    for (int j = 0; j < 2 * f; ++j) {
      l[j] = static_cast<Letter>(c % 3);
      c /= 3;
    }
    out.emplace_back(std::move(l));
  }
  return out;
}

DoubleTypePresentation dual(const DoubleTypePresentation& t) {
  DoubleTypePresentation r = t;
  for (IntPair& x : r.mu.e) x = -swapped(x);
  return r;
}

DoubleTypePresentation frobenius_twist(const DoubleTypePresentation& t) {
  DoubleTypePresentation r = t;
  const int f = t.f;
  for (int j = 0; j < f; ++j) {
    r.s.bits[j] = t.s.bits[j + f];
    r.s.bits[j + f] = t.s.bits[j];
    r.mu.e[j] = t.mu.e[j + f];
    r.mu.e[j + f] = t.mu.e[j];
  }
  return r;
}

namespace {
using Wide = __int128;
using WidePair = std::array<Wide, 2>;

// Solve p x_{j+1} - W_j x_j = delta_j cyclically over the integers, where
// W_j is the swap when wbit is set.  Returns false when no integral solution.
// 128-bit intermediates keep the unrolled constants exact up to f = 4.
bool solve_presentation_system(const std::vector<IntPair>& delta, const std::vector<uint8_t>& wbits,
                               Int p) {
  const int n = static_cast<int>(delta.size());
  check_internal(n <= 8, "presentation system: too many embeddings for exact arithmetic");
  auto apply_w = [](uint8_t bit, const WidePair& x) {
    return bit ? WidePair{x[1], x[0]} : x;
  };
  // unrolling the recurrence p x_{i+1} = delta_i + W_i x_i around the cycle:
  // p^n x_0 = C + T x_0 with T = W_{n-1} ... W_0 and
  // C = sum_i p^i (W_{n-1} ... W_{i+1}) delta_i
  std::vector<uint8_t> suffix(n + 1, 0);  // suffix[i] = parity of W_{n-1} ... W_i
  for (int i = n - 1; i >= 0; --i) suffix[i] = suffix[i + 1] ^ wbits[i];
  WidePair c{0, 0};
  Wide ppow = 1;
  for (int i = 0; i < n; ++i) {
    WidePair d = apply_w(suffix[i + 1], WidePair{delta[i][0], delta[i][1]});
    c[0] += ppow * d[0];
    c[1] += ppow * d[1];
    ppow *= p;
  }
  uint8_t tail = suffix[0];  // parity of the full product T
  Wide pn = ppow;
  WidePair x0;
  if (!tail) {
    Wide den = pn - 1;
    if (c[0] % den || c[1] % den) return false;
    x0 = {c[0] / den, c[1] / den};
  } else {
    Wide den = pn * pn - 1;
    WidePair num{pn * c[0] + c[1], pn * c[1] + c[0]};
    if (num[0] % den || num[1] % den) return false;
    x0 = {num[0] / den, num[1] / den};
  }
  // forward propagation must stay integral
  WidePair x = x0;
  for (int i = 0; i < n; ++i) {
    WidePair w = apply_w(wbits[i], x);
    WidePair rhs{delta[i][0] + w[0], delta[i][1] + w[1]};
    if (rhs[0] % p || rhs[1] % p) return false;
    x = {rhs[0] / p, rhs[1] / p};
  }
  check_internal(x[0] == x0[0] && x[1] == x0[1],
                 "presentation system: cyclic propagation mismatch");
  return true;
}
}  // namespace

EquivOutcome equivalent_full(const DoubleTypePresentation& t1, const DoubleTypePresentation& t2) {
  require(t1.p == t2.p && t1.f == t2.f, "presentations live over different (p, f)");
  const int n = 2 * t1.f;
  EquivOutcome out;
  out.generic = t1.genericity() >= 0 && t2.genericity() >= 0;
  for (unsigned mask = 0; mask < (1u << n); ++mask) {
    std::vector<uint8_t> s(n);
    for (int j = 0; j < n; ++j) s[j] = (mask >> j) & 1;
    bool weyl_ok = true;
    for (int j = 0; j < n && weyl_ok; ++j) {
      uint8_t w2 = s[j] ^ t1.s.bits[j] ^ s[(j - 1 + n) % n];
      if (w2 != t2.s.bits[j]) weyl_ok = false;
    }
    if (!weyl_ok) continue;
    DoubleCharacter smu = lattice::weyl_act(DoubleWeylElement(s), t1.mu);
    std::vector<IntPair> delta(n);
    for (int j = 0; j < n; ++j) delta[j] = t2.mu.e[j] - smu.e[j];
    if (solve_presentation_system(delta, t2.s.bits, t1.p)) {
      out.isomorphic = true;
      return out;
    }
  }
  return out;
}

bool equivalent(const DoubleTypePresentation& t1, const DoubleTypePresentation& t2) {
  return equivalent_full(t1, t2).isomorphic;
}

bool is_conjugate_self_dual(const DoubleTypePresentation& t) {
  return equivalent(dual(t), frobenius_twist(t));
}

DoubleTypePresentation type_for_shape(const TameParam& rho, const AdmissibleWord& w) {
  require(w.f() == rho.f, "type_for_shape: word length mismatch");
  require(rho.mu_depth() >= 1, "type_for_shape: mu must be at least 1-deep");
  const int n = 2 * rho.f;
  std::vector<StarLetter> st = star(w);
  std::vector<uint8_t> wprime(n);
  std::vector<IntPair> nuprime(n);
  for (int jp = 0; jp < n; ++jp) {
    wprime[jp] = st[jp].weyl;
    nuprime[jp] = st[jp].translation;
  }
  DoubleWeylElement ss = lattice::doubled(rho.s);
  DoubleWeylElement sswi = lattice::compose(ss, DoubleWeylElement(wprime));
  DoubleCharacter moved = lattice::weyl_act(sswi, DoubleCharacter(nuprime));
  DoubleCharacter mu_t = lattice::sub(
      lattice::add(lattice::base_change(rho.mu), lattice::eta_prime(rho.f)), moved);
  return DoubleTypePresentation{sswi, mu_t, rho.p, rho.f};
}

std::vector<SerreWeightClass> jh_of_symmetric_word(const TameParam& rho, const AdmissibleWord& w) {
  require(w.symmetric(), "jh_of_symmetric_word: word must be symmetric");
  const int f = rho.f;
  std::vector<StarLetter> st = star(w);
  // first-half star data (nu, w) with nu in rho + root lattice
  std::vector<uint8_t> wb(f);
  std::vector<IntPair> nu(f);
  for (int j = 0; j < f; ++j) {
    wb[j] = st[j].weyl;
    nu[j] = st[j].translation;
  }
  weights::JhFactors r = weights::jh_factors(rho.mu, rho.s, WeylElement(wb),
                                             UnitaryCharacter(nu), rho.p);
  return r.factors;
}

const std::vector<Letter>* ThetaAssignment::lookup(const SerreWeightClass& w) const {
  for (const auto& kv : table)
    if (kv.first == w) return &kv.second;
  return nullptr;
}

namespace {
std::mutex theta_mutex;
std::map<std::tuple<Int, int, std::vector<uint8_t>, std::vector<IntPair>>, ThetaAssignment>
    theta_cache;
}  // namespace

ThetaAssignment theta(const TameParam& rho) {
  require(rho.mu_depth() >= 1, "theta: mu must be at least 1-deep");
  auto key = std::make_tuple(rho.p, rho.f, rho.s.bits, rho.mu.e);
  {
    std::lock_guard<std::mutex> lock(theta_mutex);
    auto it = theta_cache.find(key);
    if (it != theta_cache.end()) return it->second;
  }
  const int f = rho.f;
  std::vector<SerreWeightClass> predicted = weights::predicted_weights(rho);
  std::vector<AdmissibleWord> words = admissible_symmetric(f);
  std::vector<std::vector<SerreWeightClass>> jh(words.size());
  for (size_t i = 0; i < words.size(); ++i) jh[i] = jh_of_symmetric_word(rho, words[i]);

  auto contains = [](const std::vector<SerreWeightClass>& v, const SerreWeightClass& w) {
    return std::binary_search(v.begin(), v.end(), w);
  };

  ThetaAssignment out;
  for (const SerreWeightClass& sigma : predicted) {
    std::vector<Letter> found;
    int hits = 0;
    for (unsigned mask = 0; mask < (1u << f); ++mask) {
      std::vector<Letter> cand(f);
      for (int j = 0; j < f; ++j) cand[j] = ((mask >> j) & 1) ? Letter::T01 : Letter::T10;
      bool ok = true;
      for (size_t i = 0; i < words.size() && ok; ++i) {
        bool avoid = true;
        for (int j = 0; j < f; ++j)
          if (words[i].letters[j] == cand[j]) avoid = false;
        if (contains(jh[i], sigma) != avoid) ok = false;
      }
      if (ok) {
        found = cand;
        ++hits;
      }
    }
    check_internal(hits == 1, "theta: incidence pattern admits no unique word");
    out.table.emplace_back(sigma, found);
  }
  // bijectivity onto its image
  for (size_t a = 0; a < out.table.size(); ++a)
    for (size_t b = a + 1; b < out.table.size(); ++b)
      check_internal(out.table[a].second != out.table[b].second, "theta: not injective");
  {
    std::lock_guard<std::mutex> lock(theta_mutex);
    theta_cache[key] = out;
  }
  return out;
}

std::vector<AdmissibleWord> x_sigma(const TameParam& rho, const SerreWeightClass& sigma) {
  ThetaAssignment th = theta(rho);
  const std::vector<Letter>* t = th.lookup(sigma);
  require(t != nullptr, "x_sigma: sigma is not a predicted weight");
  std::vector<AdmissibleWord> out;
  for (const AdmissibleWord& w : admissible_symmetric(rho.f)) {
    bool avoid = true;
    for (int j = 0; j < rho.f; ++j)
      if (w.letters[j] == (*t)[j]) avoid = false;
    if (avoid) out.push_back(w);
  }
  return out;
}

std::vector<DoubleTypePresentation> types_containing_weight(const UnitaryCharacter& mu, Int p) {
  const int f = mu.f();
  require(lattice::depth(mu, p) >= 2, "types_containing_weight: mu must be 2-deep");
  std::vector<DoubleTypePresentation> out;
  UnitaryCharacter rho = lattice::rho_sum(f);
  for (unsigned mask = 0; mask < (1u << f); ++mask) {
    std::vector<uint8_t> sb(f);
    for (int j = 0; j < f; ++j) sb[j] = (mask >> j) & 1;
    WeylElement s(sb);
    UnitaryCharacter arg = lattice::sub(lattice::add(mu, rho), lattice::weyl_act(s, rho));
    out.push_back(
        DoubleTypePresentation{lattice::doubled(s), lattice::base_change(arg), p, f});
  }
  for (size_t a = 0; a < out.size(); ++a)
    for (size_t b = a + 1; b < out.size(); ++b)
      check_internal(!equivalent(out[a], out[b]),
                     "types_containing_weight: presentations are not pairwise inequivalent");
  return out;
}

}  // namespace uwk::types
