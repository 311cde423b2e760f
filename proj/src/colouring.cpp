#include "perc/colouring.hpp"

#include <algorithm>
#include <deque>
#include <stdexcept>

namespace perc {

namespace {

std::vector<int> axis_colours(const Board& w) {
    if (w.kind() != BoardKind::LatticeWindow) throw BoardError("axis colouring needs a lattice window");
    std::vector<int> c(w.num_edges());
    for (EdgeId e = 0; e < w.num_edges(); ++e) {
        const Coord& a = w.coord(w.edge(e).u);
        const Coord& b = w.coord(w.edge(e).v);
        for (int i = 0; i < w.dimension(); ++i)
            if (a[i] != b[i]) c[e] = i;
    }
    return c;
}

}  // namespace

ColouringState::ColouringState(const Board& window)
    : ColouringState(window, axis_colours(window), window.dimension()) {}

ColouringState::ColouringState(const Board& board, std::vector<int> colour, int num_colours)
    : board_(&board), colour_(std::move(colour)), k_(num_colours), state_(board.num_edges(), kLive),
      uf_(board.num_vertices()), boundary_rep_(board.num_vertices(), 0) {
    if (static_cast<int>(colour_.size()) != board.num_edges()) throw std::invalid_argument("one colour per edge");
    for (VertexId v : board.boundary()) boundary_rep_[v] = 1;
}

bool ColouringState::live(EdgeId e) const {
    if (state_.at(e) != kLive) return false;
    return uf_.find_const(board_->edge(e).u) != uf_.find_const(board_->edge(e).v);
}

bool ColouringState::boundary_class(VertexId cls) const { return boundary_rep_[uf_.find_const(cls)] != 0; }

void ColouringState::remove(EdgeId e) {
    if (state_.at(e) != kLive) throw std::logic_error("edge already removed or contracted");
    state_[e] = kDeleted;
}

void ColouringState::contract(EdgeId e) {
    if (state_.at(e) != kLive) throw std::logic_error("edge already removed or contracted");
    state_[e] = kContracted;
    const Edge& ed = board_->edge(e);
    const bool flag = boundary_class(ed.u) || boundary_class(ed.v);
    uf_.unite(ed.u, ed.v);
    boundary_rep_[uf_.find(ed.u)] = flag ? 1 : 0;
}

std::vector<VertexId> ColouringState::component(VertexId cls, int c, EdgeId skip) const {
    const int n = board_->num_vertices();
    std::vector<std::vector<VertexId>> adj(n);
    for (EdgeId e = 0; e < board_->num_edges(); ++e) {
        if (e == skip || colour_[e] != c || !live(e)) continue;
        VertexId a = class_of(board_->edge(e).u), b = class_of(board_->edge(e).v);
        adj[a].push_back(b);
        adj[b].push_back(a);
    }
    std::vector<char> seen(n, 0);
    std::vector<VertexId> out{class_of(cls)};
    seen[out[0]] = 1;
    for (std::size_t i = 0; i < out.size(); ++i)
        for (VertexId w : adj[out[i]])
            if (!seen[w]) {
                seen[w] = 1;
                out.push_back(w);
            }
    return out;
}

std::vector<VertexId> ColouringState::stranded(int c) const {
    const int n = board_->num_vertices();
    std::vector<std::vector<VertexId>> adj(n);
    for (EdgeId e = 0; e < board_->num_edges(); ++e) {
        if (colour_[e] != c || !live(e)) continue;
        VertexId a = class_of(board_->edge(e).u), b = class_of(board_->edge(e).v);
        adj[a].push_back(b);
        adj[b].push_back(a);
    }
    std::vector<char> seen(n, 0);
    std::deque<VertexId> q;
    for (VertexId v = 0; v < n; ++v)
        if (class_of(v) == v && boundary_class(v)) {
            seen[v] = 1;
            q.push_back(v);
        }
    while (!q.empty()) {
        VertexId v = q.front();
        q.pop_front();
        for (VertexId w : adj[v])
            if (!seen[w]) {
                seen[w] = 1;
                q.push_back(w);
            }
    }
    std::vector<VertexId> out;
    for (VertexId v = 0; v < n; ++v)
        if (class_of(v) == v && !seen[v]) out.push_back(v);
    return out;
}

bool ColouringState::invariant_holds() const {
    for (int c = 0; c < k_; ++c)
        if (!stranded(c).empty()) return false;
    return true;
}

EdgeId colouring_repair(const ColouringState& cs, EdgeId destroyed, int j) {
    const int c = cs.colour(destroyed);
    if (j == c) throw std::invalid_argument("repair colour must differ from the destroyed edge's colour");
    if (j < 0 || j >= cs.num_colours()) throw std::invalid_argument("repair colour out of range");
    const Board& b = cs.board();

    std::vector<VertexId> D;
    VertexId start = kNoVertex;
    if (cs.live(destroyed)) {
        for (VertexId end : {b.edge(destroyed).u, b.edge(destroyed).v}) {
            auto comp = cs.component(end, c, destroyed);
            bool reaches = false;
            for (VertexId x : comp) reaches = reaches || cs.boundary_class(x);
            if (!reaches) {
                D = std::move(comp);
                start = cs.class_of(end);
                break;
            }
        }
    }
    if (D.empty()) {
        for (EdgeId e = 0; e < b.num_edges(); ++e)
            if (e != destroyed && cs.colour(e) == j && cs.live(e)) return e;
        return -1;
    }

    const int n = b.num_vertices();
    std::vector<char> in_d(n, 0);
    for (VertexId x : D) in_d[x] = 1;
    std::vector<std::vector<std::pair<VertexId, EdgeId>>> adj(n);
    for (EdgeId e = 0; e < b.num_edges(); ++e) {
        if (cs.colour(e) != j || !cs.live(e)) continue;
        VertexId x = cs.class_of(b.edge(e).u), y = cs.class_of(b.edge(e).v);
        adj[x].push_back({y, e});
        adj[y].push_back({x, e});
    }
    std::vector<EdgeId> via(n, -1);
    std::vector<char> seen(n, 0);
    std::deque<VertexId> q{start};
    seen[start] = 1;
    VertexId goal = kNoVertex;
    while (!q.empty() && goal == kNoVertex) {
        VertexId x = q.front();
        q.pop_front();
        for (auto [y, e] : adj[x]) {
            if (seen[y]) continue;
            seen[y] = 1;
            via[y] = e;
            if (cs.boundary_class(y)) {
                goal = y;
                break;
            }
            q.push_back(y);
        }
    }
    if (goal == kNoVertex) throw std::logic_error("colouring invariant violated before repair");
    std::vector<EdgeId> path;
    for (VertexId x = goal; x != start;) {
        EdgeId e = via[x];
        path.push_back(e);
        VertexId a = cs.class_of(b.edge(e).u), bb = cs.class_of(b.edge(e).v);
        x = (a == x) ? bb : a;
    }
    std::reverse(path.begin(), path.end());
    for (EdgeId e : path) {
        const bool ia = in_d[cs.class_of(b.edge(e).u)], ib = in_d[cs.class_of(b.edge(e).v)];
        if (ia != ib) return e;
    }
    throw std::logic_error("repair path never leaves the finite component");
}

}  // namespace perc
