// Blow a random 2-coloring of K_6^3 up to larger n and compare its measure
// with the recursive shadow bound.
#include <cstdio>
#include <utility>

#include "hypercolor/hypercolor.hpp"

using namespace hypercolor;

int main() {
  const auto base = random_coloring(6, 2, 3, 2024);
  for (int n : {9, 15, 21}) {
    const auto c = blow_up(base, n);
    for (auto [t, s] : {std::pair{1, 2}, std::pair{1, 3}, std::pair{2, 3}})
      std::printf("n=%2d t=%d s=%d  measure=%6llu  bound=%10.1f  C(n,s)=%llu\n", n, t, s,
                  static_cast<unsigned long long>(measure(c, t, s).value), blowup_upper_bound(base, n, t, s),
                  static_cast<unsigned long long>(binom(n, s)));
  }
}
