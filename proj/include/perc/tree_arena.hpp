#pragma once

#include <set>
#include <vector>

#include "perc/board.hpp"
#include "perc/engine.hpp"

namespace perc {

// Lazily grown infinite regular or bi-regular tree. Vertex 0 is the root and
// edge i joins vertex i+1 to its parent. Children of a vertex are created when
// it joins C (the root's Safe component), so every existing unclaimed edge
// whose parent lies in C is a frontier edge. Claims are restricted to the
// frontier, which is all an optimal player needs on a tree.
class TreeArena {
public:
    explicit TreeArena(const TreeSpec& spec);

    const TreeSpec& spec() const { return spec_; }
    int num_vertices() const { return static_cast<int>(parent_.size()); }
    int num_edges() const { return num_vertices() - 1; }
    VertexType type(VertexId v) const { return type_[v]; }
    VertexId child_of(EdgeId e) const { return e + 1; }
    VertexType far_type(EdgeId e) const { return type_[e + 1]; }
    Claim claim(EdgeId e) const { return claim_[e]; }

    const std::set<EdgeId>& frontier() const { return frontier_; }
    int frontier_size() const { return static_cast<int>(frontier_.size()); }
    int x_size() const { return x_; }  // frontier edges to Type I vertices
    int y_size() const { return y_; }  // frontier edges to Type II vertices
    bool breaker_won() const { return frontier_.empty(); }

    // Throws IllegalMove unless e is a frontier edge.
    void claim_edge(Player who, EdgeId e);

    // Greedy choice: frontier edge to a Type II vertex if any, else any; lowest id.
    EdgeId greedy_pick() const;
    EdgeId lowest_of(VertexType t) const;

private:
    void join(VertexId v);

    TreeSpec spec_;
    std::vector<VertexId> parent_;
    std::vector<VertexType> type_;
    std::vector<Claim> claim_;
    std::set<EdgeId> frontier_;
    int x_ = 0, y_ = 0;
};

}  // namespace perc
