#pragma once

#include <bit>
#include <cstdint>
#include <string>
#include <vector>

namespace qca {

// A basis blade is an ascending set of generator indices from {1..dim},
// stored as a bitmask: bit k-1 set <=> generator e_k present. Mask 0 is Id.
using Blade = std::uint32_t;

constexpr int kMaxDim = 9;

inline int grade(Blade b) { return std::popcount(b); }

inline Blade full_blade(int dim) { return (Blade(1) << dim) - 1; }

// Parity of merging two disjoint ascending index sets into one ascending
// sequence: counts pairs (a in A, b in B) with a > b. Returns +1 or -1.
inline int merge_sign(Blade a, Blade b) {
  int swaps = 0;
  Blade rest = a;
  while (rest) {
    int bit = std::countr_zero(rest);
    swaps += std::popcount(b & ((Blade(1) << bit) - 1));
    rest &= rest - 1;
  }
  return (swaps & 1) ? -1 : 1;
}

// Indices of a blade, ascending, 1-based.
inline std::vector<int> blade_indices(Blade b) {
  std::vector<int> out;
  while (b) {
    out.push_back(std::countr_zero(b) + 1);
    b &= b - 1;
  }
  return out;
}

inline Blade blade_from_indices(const std::vector<int>& idx) {
  Blade b = 0;
  for (int i : idx) b |= Blade(1) << (i - 1);
  return b;
}

// Canonical text form: "Id", "e3", "e1we2we5".
inline std::string blade_name(Blade b) {
  if (b == 0) return "Id";
  std::string s;
  for (int i : blade_indices(b)) {
    if (!s.empty()) s += "w";
    s += "e" + std::to_string(i);
  }
  return s;
}

// Graded-lexicographic order on blades: by grade, then lexicographically on
// the ascending index tuple. This is the fixed order used for Endo matrices
// and all serialized tables.
inline bool graded_lex_less(Blade a, Blade b) {
  int ga = grade(a), gb = grade(b);
  if (ga != gb) return ga < gb;
  Blade x = a, y = b;
  while (x && y) {
    int ix = std::countr_zero(x), iy = std::countr_zero(y);
    if (ix != iy) return ix < iy;
    x &= x - 1;
    y &= y - 1;
  }
  return false;
}

// All blades of a dim-dimensional generating space in graded-lex order.
std::vector<Blade> blade_order(int dim);

// Position of a blade in blade_order(dim).
int blade_position(Blade b, int dim);

}  // namespace qca
