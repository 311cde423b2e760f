#pragma once

#include <vector>

#include "perc/board.hpp"
#include "perc/union_find.hpp"

namespace perc {

// Edge colouring of a window tracked over the reduced graph. "Reaches the
// boundary" stands in for "lies on an infinite path".
class ColouringState {
public:
    // Axis colouring: an edge parallel to axis i gets colour i.
    explicit ColouringState(const Board& window);
    ColouringState(const Board& board, std::vector<int> colour, int num_colours);

    const Board& board() const { return *board_; }
    int num_colours() const { return k_; }
    int colour(EdgeId e) const { return colour_.at(e); }
    // Neither deleted nor contracted, and not a loop of the reduced graph.
    bool live(EdgeId e) const;
    bool deleted(EdgeId e) const { return state_.at(e) == kDeleted; }
    bool contracted(EdgeId e) const { return state_.at(e) == kContracted; }
    VertexId class_of(VertexId v) const { return uf_.find_const(v); }
    bool boundary_class(VertexId cls) const;

    void remove(EdgeId e);
    void contract(EdgeId e);

    // Classes that cannot reach a boundary class along live edges of colour c.
    std::vector<VertexId> stranded(int c) const;
    bool invariant_holds() const;

    // Classes reachable from `cls` along live colour-c edges, skipping `skip`.
    std::vector<VertexId> component(VertexId cls, int c, EdgeId skip = -1) const;

private:
    static constexpr char kLive = 0, kDeleted = 1, kContracted = 2;

    const Board* board_;
    std::vector<int> colour_;
    int k_;
    std::vector<char> state_;
    UnionFind uf_;
    std::vector<char> boundary_rep_;  // indexed by vertex; valid for class representatives
};

// Edge f of colour j such that deleting `destroyed` and contracting f keeps every
// class boundary-connected in every colour. `destroyed` must still be live or a
// loop; j must differ from its colour. Returns -1 if no live j-edge exists.
EdgeId colouring_repair(const ColouringState& cs, EdgeId destroyed, int j);

}  // namespace perc
