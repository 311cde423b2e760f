#pragma once

#include <optional>
#include <vector>

#include "perc/board.hpp"
#include "perc/engine.hpp"
#include "perc/graph_util.hpp"

namespace perc {

// Vertices refer to contract_boundary(board); edges are board edge ids.
struct LehmanCertificate {
    bool maker_wins = false;
    std::optional<EdgeId> opening;         // Maker's first edge when Maker moves first
    std::vector<VertexId> vertex_set;      // spans both trees, contains root and u0
    std::vector<EdgeId> tree1, tree2;
    // Failure witness: the largest vertex set containing the root that packs two
    // spanning trees, one per position examined (one per opening when Maker is first).
    std::vector<std::vector<VertexId>> closures;
};

struct LehmanResult {
    std::optional<Player> winner;  // empty: above the vertex cap
    LehmanCertificate certificate;
};

LehmanResult lehman_decide(const Board& b, Player first = Player::Maker, int vertex_cap = 18);

// Checks a positive certificate: disjoint spanning trees of vertex_set in the
// contracted graph (with the opening contracted), root and u0 included.
bool verify_lehman_certificate(const Board& b, const LehmanCertificate& c);

// Maximum size of a union of two forests; forest[i] in {-1, 0, 1}.
int two_forest_packing(int n, const std::vector<Arc>& arcs, std::vector<int>& forest);

}  // namespace perc
