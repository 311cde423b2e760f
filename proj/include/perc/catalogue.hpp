#pragma once

#include <vector>

#include "perc/board.hpp"

namespace perc {

// Every connected loopless multigraph with 1..max_edges edges and two marked
// vertices (root 0, boundary 1), one representative per isomorphism class
// fixing the marks. Boards are generic with boundary {1}.
std::vector<Board> catalogue_multigraphs(int max_edges);

// Canonical edge list of a two-marked multigraph (marks fixed, others permuted).
std::vector<std::pair<int, int>> canonical_edges(int n, const std::vector<std::pair<int, int>>& edges);

}  // namespace perc
