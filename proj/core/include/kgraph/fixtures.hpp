#pragma once

// Built-in example graphs.
//
//   T2  one vertex v, one loop per colour (b, r): the 2-graph with a single
//       infinite path.
//   F   one vertex v, blue loops b0, b1, red loop r, squares b_x r = r b_(1-x).
//   D   two isolated copies of T2 at u and w.
//   D2  at u two blue and two red loops with trivial squares, at w a T2,
//       and a blue edge c and a red edge d from u into w. {u} is saturated
//       hereditary and the quotient by {u} is a T2.

#include <string>
#include <string_view>
#include <vector>

#include "kgraph/kgraph.hpp"

namespace kgraph {

std::vector<std::string> fixture_names();
/// Throws InputError for an unknown name.
GraphInput fixture(std::string_view name);

}  // namespace kgraph
