#include "qca/blade.hpp"

#include <algorithm>
#include <stdexcept>

namespace qca {

std::vector<Blade> blade_order(int dim) {
  std::vector<Blade> order;
  order.reserve(std::size_t(1) << dim);
  for (Blade b = 0; b < (Blade(1) << dim); ++b) order.push_back(b);
  std::sort(order.begin(), order.end(), graded_lex_less);
  return order;
}

int blade_position(Blade b, int dim) {
  // Grade offset, then rank of the index tuple among ascending tuples.
  if (b >= (Blade(1) << dim)) throw std::invalid_argument("blade outside dimension");
  static const auto binom = [](int n, int k) {
    if (k < 0 || k > n) return 0LL;
    long long r = 1;
    for (int i = 1; i <= k; ++i) r = r * (n - k + i) / i;
    return r;
  };
  int g = grade(b);
  long long pos = 0;
  for (int k = 0; k < g; ++k) pos += binom(dim, k);
  // Lexicographic rank of the ascending tuple among g-subsets of {1..dim}.
  auto idx = blade_indices(b);
  int prev = 0;
  for (int k = 0; k < g; ++k) {
    for (int v = prev + 1; v < idx[k]; ++v) pos += binom(dim - v, g - k - 1);
    prev = idx[k];
  }
  return static_cast<int>(pos);
}

}  // namespace qca
