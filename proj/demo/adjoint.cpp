// Builds the adjoint action of S3 on its own categorical group, checks it,
// and prints a few facts about the resulting double category.

#include <iostream>

#include "xmodcat.hpp"

using namespace xmodcat;

int main() {
  const CrossedModule xm = xm2();
  const StrictAction act = adjoint_action(xm);
  if (const Report r = validate_strict_action(act); !r.ok()) {
    std::cerr << "adjoint action failed " << r.violations().front().law << "\n";
    return 1;
  }

  const TransDoubleCat d = build_transformation_double(act);
  std::cout << "squares: " << d.squares() << "\n";

  const TransposeViews tv = transpose_views(d);
  const Components orbits = connected_components(*tv.objects.cat);
  std::cout << "conjugacy classes: " << orbits.count << "\n";

  // One square composed both ways with its units.
  const auto& G = xm.G();
  const TDSquare s{G.find("(1 2)"), G.find("(1 2 3)"), mor_index(xm, G.find("(1 3)"), 0)};
  const auto b = d.boundary(s);
  const auto [lg, lx] = d.vertical_label(b.left);
  const TDSquare left_unit = horizontal_unit(d, lg, lx);
  std::cout << "unit law holds: " << std::boolalpha
            << (compose_squares(d, left_unit, s, Axis::Horizontal) == s) << "\n";

  const Report laws = verify_double_category(d);
  std::cout << "double category laws: " << (laws.ok() ? "pass" : "FAIL") << " (" << laws.tally().size()
            << " laws)\n";
  return laws.ok() ? 0 : 1;
}
