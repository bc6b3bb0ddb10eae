#pragma once

// Named witness graphs and small parametric families.

#include "nearopt/graph.hpp"

namespace nearopt {

// The 27-vertex, 135-edge complement-of-Schläfli graph, built from the
// classical 27-line incidence structure: vertices a_1..a_6 (ids 0..5),
// b_1..b_6 (ids 6..11), c_{ij} for i<j (ids 12..26 in lexicographic
// order). Strongly regular with parameters (27, 10, 1, 5); clique number
// 3 and chromatic number 6.
Graph schlafli_complement();

// C7 on ids 0..6 plus one vertex (id 7) adjacent to {0, 1, 3, 5}: a
// C5-free class member containing C7, with chi = omega = 3.
Graph gstar();

Graph complete_graph(int n);  // n >= 1
Graph cycle_graph(int n);     // n >= 3
Graph path_graph(int n);      // n >= 1

}  // namespace nearopt
