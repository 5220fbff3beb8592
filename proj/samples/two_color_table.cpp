// Exact two-color values next to the majority and parity constructions for
// 3-graphs on a handful of vertices.
#include <cstdio>

#include "hypercolor/hypercolor.hpp"

using namespace hypercolor;

int main() {
  std::printf("%3s %4s %4s %10s %10s %10s\n", "n", "t", "s", "exact", "majority", "parity");
  for (int n = 4; n <= 6; ++n) {
    const auto maj = majority_coloring(n);
    const auto par = parity_coloring(n);
    for (int t = 1; t <= 2; ++t)
      for (int s = 1; s <= 3; ++s) {
        const auto exact = exact_M(n, 2, 3, t, s);
        std::printf("%3d %4d %4d %9llu%c %10llu %10llu\n", n, t, s, static_cast<unsigned long long>(exact.value),
                    exact.status == SearchStatus::exact ? ' ' : '?',
                    static_cast<unsigned long long>(measure(maj, t, s).value),
                    static_cast<unsigned long long>(measure(par, t, s).value));
      }
  }
}
