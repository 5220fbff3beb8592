// Parallel classes of an affine plane of order q give a (q+1)-coloring of
// K_{q^2} whose monochromatic components all have q vertices.
#include <cstdio>

#include "hypercolor/hypercolor.hpp"

using namespace hypercolor;

int main() {
  for (int q : {2, 3, 5, 7}) {
    const auto plane = affine_plane(q);
    const auto part = partition_blocks(plane, 1);
    const auto c = steiner_coloring(plane, part.classes, 1);
    const auto m = measure(c, 1, 1);
    std::printf("q=%d  n=%d  colors=%d  largest component=%llu vertices  n/(r-1)=%.3f\n", q, c.n(), c.r(),
                static_cast<unsigned long long>(m.value), reference_bounds(c.n(), c.r()).gyarfas_vertices);
  }

  const auto s348 = builtin_design("s348");
  const auto part = partition_blocks(s348, 1, BlockOrder::complement_paired);
  const auto c = steiner_coloring(s348, part.classes, 1);
  std::printf("S(3,4,8): %zu classes, measure(t=1,s=1)=%llu, lower bound %.4f\n", part.class_count(),
              static_cast<unsigned long long>(measure(c, 1, 1).value), general_lower_bound(8, c.r(), 3, 1, 1));
}
