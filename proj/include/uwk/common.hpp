#pragma once

#include <array>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace uwk {

// Thrown when a caller violates a documented precondition (CLI exit code 2).
struct precondition_error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Thrown when an internal consistency check fails, i.e. a bug (CLI exit code 1).
struct internal_error : std::logic_error {
  using std::logic_error::logic_error;
};

using Int = long long;
using IntPair = std::array<Int, 2>;

inline IntPair operator+(const IntPair& x, const IntPair& y) { return {x[0] + y[0], x[1] + y[1]}; }
inline IntPair operator-(const IntPair& x, const IntPair& y) { return {x[0] - y[0], x[1] - y[1]}; }
inline IntPair operator-(const IntPair& x) { return {-x[0], -x[1]}; }
inline IntPair operator*(Int c, const IntPair& x) { return {c * x[0], c * x[1]}; }

// swap of the two coordinates, the nontrivial Weyl element in one embedding
inline IntPair swapped(const IntPair& x) { return {x[1], x[0]}; }

inline bool is_prime(Int n) {
  if (n < 2) return false;
  for (Int d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

inline void require(bool cond, const std::string& msg) {
  if (!cond) throw precondition_error(msg);
}

inline void check_internal(bool cond, const std::string& msg) {
  if (!cond) throw internal_error(msg);
}

}  // namespace uwk
