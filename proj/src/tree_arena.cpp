#include "perc/tree_arena.hpp"

namespace perc {

TreeArena::TreeArena(const TreeSpec& spec) : spec_(spec) {
    spec_.validate();
    parent_.push_back(kNoVertex);
    type_.push_back(spec_.is_regular() ? VertexType::None : spec_.root_type);
    join(0);
}

void TreeArena::join(VertexId v) {
    const VertexType t = type_[v];
    const int children = spec_.degree(t) - (v == 0 ? 0 : 1);
    VertexType ct = VertexType::None;
    if (!spec_.is_regular()) ct = t == VertexType::TypeI ? VertexType::TypeII : VertexType::TypeI;
    for (int i = 0; i < children; ++i) {
        const VertexId w = static_cast<VertexId>(parent_.size());
        parent_.push_back(v);
        type_.push_back(ct);
        claim_.push_back(Claim::Unclaimed);
        frontier_.insert(w - 1);
        (ct == VertexType::TypeII ? y_ : x_) += 1;
    }
}

void TreeArena::claim_edge(Player who, EdgeId e) {
    if (!frontier_.count(e)) throw IllegalMove("edge " + std::to_string(e) + " is not a frontier edge");
    frontier_.erase(e);
    (far_type(e) == VertexType::TypeII ? y_ : x_) -= 1;
    claim_[e] = who == Player::Maker ? Claim::Safe : Claim::Destroyed;
    if (who == Player::Maker) join(child_of(e));
}

EdgeId TreeArena::lowest_of(VertexType t) const {
    for (EdgeId e : frontier_)
        if (far_type(e) == t) return e;
    return -1;
}

EdgeId TreeArena::greedy_pick() const {
    if (frontier_.empty()) return -1;
    if (!spec_.is_regular() && y_ > 0) return lowest_of(VertexType::TypeII);
    return *frontier_.begin();
}

}  // namespace perc
