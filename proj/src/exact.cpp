#include "bergman/exact.hpp"

namespace bergman {

std::int64_t squarefree_part(std::int64_t n, std::int64_t& square_root) {
  if (n <= 0) throw std::invalid_argument("squarefree_part: argument must be positive");
  std::int64_t root = 1;
  std::int64_t rest = 1;
  for (std::int64_t p = 2; p * p <= n; p += (p == 2 ? 1 : 2)) {
    if (n % p != 0) continue;
    int e = 0;
    while (n % p == 0) {
      n /= p;
      ++e;
    }
    for (int i = 0; i < e / 2; ++i) root *= p;
    if (e % 2 != 0) rest *= p;
  }
  rest *= n;  // leftover prime (or 1)
  square_root = root;
  return rest;
}

}  // namespace bergman
