#pragma once

#include <utility>
#include <vector>

namespace perc {

// Small multigraph helpers shared by the solvers. Arcs are undirected vertex pairs.
using Arc = std::pair<int, int>;

// mask[i] is true iff arc i lies on some simple s-t path.
std::vector<char> arcs_on_st_paths(int n, const std::vector<Arc>& arcs, int s, int t);

// Hop distances from s (-1 if unreachable).
std::vector<int> bfs_distances(int n, const std::vector<Arc>& arcs, int s);

// Minimum number of arcs separating s from t, capped: returns min(cut, limit + 1).
int min_cut_capped(int n, const std::vector<Arc>& arcs, int s, int t, int limit);

}  // namespace perc
