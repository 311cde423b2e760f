#include "perc/engine.hpp"

#include <algorithm>
#include <deque>

#include "perc/union_find.hpp"

namespace perc {

const char* player_name(Player p) { return p == Player::Maker ? "Maker" : "Breaker"; }
char player_letter(Player p) { return p == Player::Maker ? 'M' : 'B'; }

void GameConfig::validate() const {
    if (p < 1) throw std::invalid_argument("p must be >= 1");
    if (q < 1) throw std::invalid_argument("q must be >= 1");
}

GameState::GameState(std::shared_ptr<const Board> board, GameConfig cfg)
    : GameState(std::move(board), cfg, {}) {}

GameState::GameState(std::shared_ptr<const Board> board, GameConfig cfg, std::span<const EdgeId> head_start)
    : board_(std::move(board)), cfg_(cfg) {
    cfg_.validate();
    claims_.assign(board_->num_edges(), Claim::Unclaimed);
    unclaimed_ = board_->num_edges();
    for (EdgeId e : head_start) {
        if (e < 0 || e >= board_->num_edges()) throw IllegalMove("head-start edge out of range");
        if (claims_[e] != Claim::Unclaimed) throw IllegalMove("duplicate head-start edge");
        claims_[e] = Claim::Safe;
        --unclaimed_;
        head_.push_back(e);
    }
}

Player GameState::mover_at(int t) const {
    const int pos = t % cfg_.period();
    return pos < cfg_.quota(cfg_.first) ? cfg_.first : opponent(cfg_.first);
}

int GameState::remaining_in_turn() const {
    const int pos = time() % cfg_.period();
    const int a = cfg_.quota(cfg_.first);
    return pos < a ? a - pos : cfg_.period() - pos;
}

int GameState::turns_started() const { return time() / cfg_.period() + 1; }

void GameState::apply(Player who, EdgeId e) {
    if (who != to_move())
        throw IllegalMove(std::string("out of turn: it is ") + player_name(to_move()) + "'s move");
    if (e < 0 || e >= board_->num_edges()) throw IllegalMove("edge " + std::to_string(e) + " does not exist");
    if (claims_[e] != Claim::Unclaimed) throw IllegalMove("edge " + std::to_string(e) + " is already claimed");
    claims_[e] = who == Player::Maker ? Claim::Safe : Claim::Destroyed;
    --unclaimed_;
    history_.push_back({time() + 1, who, e});
}

std::vector<EdgeId> GameState::unclaimed() const {
    std::vector<EdgeId> out;
    out.reserve(unclaimed_);
    for (EdgeId e = 0; e < board_->num_edges(); ++e)
        if (claims_[e] == Claim::Unclaimed) out.push_back(e);
    return out;
}

std::vector<EdgeId> GameState::last_batch(Player who) const {
    std::vector<EdgeId> out;
    int i = static_cast<int>(history_.size()) - 1;
    while (i >= 0 && history_[i].player != who) --i;
    while (i >= 0 && history_[i].player == who) out.push_back(history_[i--].edge);
    std::reverse(out.begin(), out.end());
    return out;
}

bool GameState::maker_won() const {
    const Board& b = *board_;
    if (b.is_boundary(b.root())) return true;
    std::vector<char> seen(b.num_vertices(), 0);
    std::deque<VertexId> q{b.root()};
    seen[b.root()] = 1;
    while (!q.empty()) {
        VertexId v = q.front();
        q.pop_front();
        for (EdgeId e : b.incident(v)) {
            if (claims_[e] != Claim::Safe) continue;
            VertexId w = b.edge(e).other(v);
            if (seen[w]) continue;
            if (b.is_boundary(w)) return true;
            seen[w] = 1;
            q.push_back(w);
        }
    }
    return false;
}

bool GameState::breaker_won() const {
    const Board& b = *board_;
    if (b.is_boundary(b.root())) return false;
    std::vector<char> seen(b.num_vertices(), 0);
    std::deque<VertexId> q{b.root()};
    seen[b.root()] = 1;
    while (!q.empty()) {
        VertexId v = q.front();
        q.pop_front();
        for (EdgeId e : b.incident(v)) {
            if (claims_[e] == Claim::Destroyed) continue;
            VertexId w = b.edge(e).other(v);
            if (seen[w]) continue;
            if (b.is_boundary(w)) return false;
            seen[w] = 1;
            q.push_back(w);
        }
    }
    return true;
}

ReducedGraph::ReducedGraph(const GameState& s) : board_(s.board_ptr()) {
    const Board& b = *board_;
    UnionFind uf(b.num_vertices());
    for (EdgeId e = 0; e < b.num_edges(); ++e)
        if (s.claim(e) == Claim::Safe) uf.unite(b.edge(e).u, b.edge(e).v);
    rep_.assign(b.num_vertices(), kNoVertex);
    std::vector<VertexId> smallest(b.num_vertices(), kNoVertex);
    for (VertexId v = 0; v < b.num_vertices(); ++v) {
        const int r = uf.find(v);
        if (smallest[r] == kNoVertex) {
            smallest[r] = v;
            classes_.push_back(v);
        }
        rep_[v] = smallest[r];
    }
    root_ = rep_[b.root()];
    for (VertexId v : b.boundary()) boundary_.push_back(rep_[v]);
    std::sort(boundary_.begin(), boundary_.end());
    boundary_.erase(std::unique(boundary_.begin(), boundary_.end()), boundary_.end());
    for (EdgeId e = 0; e < b.num_edges(); ++e) {
        if (s.claim(e) != Claim::Unclaimed) continue;
        if (rep_[b.edge(e).u] == rep_[b.edge(e).v]) continue;
        live_.push_back(e);
    }
}

std::pair<VertexId, VertexId> ReducedGraph::ends(EdgeId e) const {
    const Edge& ed = board_->edge(e);
    return {rep_[ed.u], rep_[ed.v]};
}

Board ReducedGraph::as_board() const {
    std::vector<int> index(board_->num_vertices(), -1);
    for (int i = 0; i < num_classes(); ++i) index[classes_[i]] = i;
    std::vector<Edge> edges;
    for (EdgeId e : live_) {
        auto [a, b] = ends(e);
        edges.push_back({index[a], index[b]});
    }
    std::vector<VertexId> boundary;
    for (VertexId c : boundary_) boundary.push_back(index[c]);
    return Board::generic(num_classes(), std::move(edges), index[root_], std::move(boundary));
}

bool ReducedGraph::operator==(const ReducedGraph& o) const {
    return rep_ == o.rep_ && live_ == o.live_ && root_ == o.root_ && boundary_ == o.boundary_;
}

}  // namespace perc
