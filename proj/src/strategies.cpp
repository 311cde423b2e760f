#include "perc/strategies.hpp"

#include <algorithm>
#include <deque>
#include <functional>
#include <set>

namespace perc {

void fill_lowest(const GameState& s, std::vector<EdgeId>& out, int quota) {
    std::set<EdgeId> taken(out.begin(), out.end());
    for (EdgeId e = 0; e < s.board().num_edges() && static_cast<int>(out.size()) < quota; ++e)
        if (s.claim(e) == Claim::Unclaimed && !taken.count(e)) out.push_back(e);
}

namespace {

// Calls `pick` on a scratch copy after each applied edge; falls back to the lowest
// unclaimed edge when it has no opinion.
std::vector<EdgeId> pick_sequential(const GameState& s, const TurnContext& ctx,
                                    const std::function<std::optional<EdgeId>(const GameState&)>& pick) {
    GameState t = s;
    std::vector<EdgeId> out;
    while (static_cast<int>(out.size()) < ctx.quota) {
        std::optional<EdgeId> e;
        if (!t.decided()) e = pick(t);
        if (!e || t.claim(*e) != Claim::Unclaimed) {
            std::vector<EdgeId> one = out;
            fill_lowest(t, one, static_cast<int>(out.size()) + 1);
            if (one.size() == out.size()) break;
            e = one.back();
        }
        t.apply(ctx.role, *e);
        out.push_back(*e);
    }
    return out;
}

bool contains(const std::vector<EdgeId>& v, EdgeId e) { return std::find(v.begin(), v.end(), e) != v.end(); }

}  // namespace

std::vector<EdgeId> FirstUnclaimed::next_edges(const GameState& s, const TurnContext& ctx) {
    std::vector<EdgeId> out;
    fill_lowest(s, out, ctx.quota);
    return out;
}

std::vector<EdgeId> GreedyPath::next_edges(const GameState& s, const TurnContext& ctx) {
    auto pick = [&](const GameState& t) -> std::optional<EdgeId> {
        const Board& b = t.board();
        const int n = b.num_vertices();
        std::vector<int> dist(n, -1);
        std::vector<EdgeId> via(n, -1);
        std::vector<char> done(n, 0);
        std::deque<VertexId> q{b.root()};
        dist[b.root()] = 0;
        VertexId goal = kNoVertex;
        while (!q.empty()) {
            VertexId v = q.front();
            q.pop_front();
            if (done[v]) continue;
            done[v] = 1;
            if (b.is_boundary(v)) {
                goal = v;
                break;
            }
            for (EdgeId e : b.incident(v)) {
                if (t.claim(e) == Claim::Destroyed) continue;
                const int w = t.claim(e) == Claim::Safe ? 0 : 1;
                VertexId u = b.edge(e).other(v);
                if (done[u] || (dist[u] >= 0 && dist[u] <= dist[v] + w)) continue;
                dist[u] = dist[v] + w;
                via[u] = e;
                if (w == 0) q.push_front(u);
                else q.push_back(u);
            }
        }
        if (goal == kNoVertex) return std::nullopt;
        std::vector<EdgeId> path;
        for (VertexId v = goal; v != b.root(); v = b.edge(via[v]).other(v)) path.push_back(via[v]);
        std::reverse(path.begin(), path.end());
        std::vector<EdgeId> open;
        for (EdgeId e : path)
            if (t.claim(e) == Claim::Unclaimed) open.push_back(e);
        if (open.empty()) return std::nullopt;
        return ctx.role == Player::Maker ? open.front() : open.back();
    };
    return pick_sequential(s, ctx, pick);
}

std::vector<EdgeId> RandomStrategy::next_edges(const GameState& s, const TurnContext& ctx) {
    std::seed_seq seq{static_cast<std::uint32_t>(seed_), static_cast<std::uint32_t>(seed_ >> 32),
                      static_cast<std::uint32_t>(s.time())};
    std::mt19937_64 rng(seq);
    auto pool = s.unclaimed();
    const int k = std::min<int>(ctx.quota, static_cast<int>(pool.size()));
    for (int i = 0; i < k; ++i) {
        std::uniform_int_distribution<int> d(i, static_cast<int>(pool.size()) - 1);
        std::swap(pool[i], pool[d(rng)]);
    }
    pool.resize(k);
    return pool;
}

std::vector<EdgeId> ScriptedStrategy::next_edges(const GameState& s, const TurnContext& ctx) {
    std::vector<EdgeId> out;
    for (EdgeId e : script_) {
        if (static_cast<int>(out.size()) >= ctx.quota) break;
        if (e >= 0 && e < s.board().num_edges() && s.claim(e) == Claim::Unclaimed && !contains(out, e))
            out.push_back(e);
    }
    fill_lowest(s, out, ctx.quota);
    return out;
}

std::vector<EdgeId> straight_line_script(const Board& w, int dx, int dy) {
    if (w.kind() != BoardKind::LatticeWindow || w.dimension() != 2)
        throw BoardError("straight-line script needs a 2-D lattice window");
    std::vector<EdgeId> out;
    Coord c = w.coord(w.root());
    while (true) {
        Coord n{c[0] + dx, c[1] + dy};
        auto a = w.vertex_at(c), b = w.vertex_at(n);
        if (!a || !b) break;
        out.push_back(*w.edge_between(*a, *b));
        c = n;
    }
    return out;
}

std::vector<EdgeId> spiral_script(const Board& w) {
    if (w.kind() != BoardKind::LatticeWindow || w.dimension() != 2)
        throw BoardError("spiral script needs a 2-D lattice window");
    static const int dx[4] = {1, 0, -1, 0}, dy[4] = {0, 1, 0, -1};
    std::vector<EdgeId> out;
    Coord c = w.coord(w.root());
    for (int len = 1, dir = 0;; ++len) {
        for (int rep = 0; rep < 2; ++rep, dir = (dir + 1) % 4) {
            for (int i = 0; i < len; ++i) {
                Coord n{c[0] + dx[dir], c[1] + dy[dir]};
                auto a = w.vertex_at(c), b = w.vertex_at(n);
                if (!a || !b) return out;
                out.push_back(*w.edge_between(*a, *b));
                c = n;
            }
        }
    }
}

std::vector<EdgeId> SolverOptimal::next_edges(const GameState& s, const TurnContext& ctx) {
    auto pick = [&](const GameState& t) -> std::optional<EdgeId> {
        SolveResult r = solve_escape(t, opt_);
        if (r.best_move) return r.best_move;
        if (!r.solved()) ++unsolved_;
        auto rel = relevant_edges(t);
        if (!rel.empty()) return rel.front();
        return std::nullopt;
    };
    return pick_sequential(s, ctx, pick);
}

std::vector<EdgeId> TreeGreedy::next_edges(const GameState& s, const TurnContext& ctx) {
    if (s.board().kind() != BoardKind::Tree) throw BoardError("tree-greedy needs a tree board");
    auto pick = [](const GameState& t) -> std::optional<EdgeId> {
        const Board& b = t.board();
        // Root component of Safe edges: a vertex is in it iff its parent edge chain is Safe.
        std::vector<char> in_c(b.num_vertices(), 0);
        in_c[b.root()] = 1;
        for (VertexId v = 0; v < b.num_vertices(); ++v)
            if (v != b.root() && in_c[b.parent(v)] && t.claim(b.parent_edge(v)) == Claim::Safe) in_c[v] = 1;
        std::optional<EdgeId> best;
        bool best_ii = false;
        for (VertexId v = 0; v < b.num_vertices(); ++v) {
            if (v == b.root() || !in_c[b.parent(v)]) continue;
            EdgeId e = b.parent_edge(v);
            if (t.claim(e) != Claim::Unclaimed) continue;
            const bool ii = b.vertex_type(v) == VertexType::TypeII;
            if (!best || (ii && !best_ii)) {
                best = e;
                best_ii = ii;
            }
        }
        return best;
    };
    return pick_sequential(s, ctx, pick);
}

PathColouringMaker::PathColouringMaker(const Board& w, const GameConfig& cfg) {
    if (w.kind() != BoardKind::LatticeWindow) throw BoardError("path-colouring needs a lattice window");
    if (cfg.q >= w.dimension())
        throw BoardError("path-colouring needs Breaker's quota below the dimension (q < d)");
    if (cfg.p < cfg.q) throw BoardError("path-colouring needs p >= q to repair every Breaker edge");
}

ColouringState PathColouringMaker::colouring_of(const GameState& s, std::span<const EdgeId> keep_live) {
    ColouringState cs(s.board());
    for (EdgeId e = 0; e < s.board().num_edges(); ++e) {
        if (s.claim(e) == Claim::Safe) cs.contract(e);
        else if (s.claim(e) == Claim::Destroyed && std::find(keep_live.begin(), keep_live.end(), e) == keep_live.end())
            cs.remove(e);
    }
    return cs;
}

std::vector<EdgeId> PathColouringMaker::next_edges(const GameState& s, const TurnContext& ctx) {
    std::vector<EdgeId> batch;
    for (EdgeId e : ctx.adversary)
        if (s.claim(e) == Claim::Destroyed) batch.push_back(e);
    std::vector<EdgeId> out;
    if (!batch.empty()) {
        ColouringState cs = colouring_of(s, batch);
        std::set<int> used;
        for (EdgeId b : batch) used.insert(cs.colour(b));
        int j = -1;
        for (int c = 0; c < cs.num_colours() && j < 0; ++c)
            if (!used.count(c)) j = c;
        for (EdgeId b : batch) {
            if (static_cast<int>(out.size()) >= ctx.quota) break;
            int jj = j;
            if (jj < 0) jj = cs.colour(b) == 0 ? 1 : 0;
            EdgeId f = -1;
            try {
                f = colouring_repair(cs, b, jj);
            } catch (const std::logic_error&) {
                f = -1;
            }
            cs.remove(b);
            if (f >= 0 && s.claim(f) == Claim::Unclaimed && !contains(out, f)) {
                cs.contract(f);
                out.push_back(f);
            }
        }
    }
    fill_lowest(s, out, ctx.quota);
    return out;
}

MakerColumn::MakerColumn(const Board& w, const GameConfig& cfg) {
    if (w.kind() != BoardKind::LatticeWindow || w.dimension() != 2)
        throw BoardError("maker-column needs a 2-D lattice window");
    if (cfg.p < 2 * cfg.q) throw BoardError("maker-column needs p >= 2q");
    const int p = cfg.p, r = w.radius();
    const Coord root = w.coord(w.root());
    if (root[1] + p > r) throw BoardError("window too small for the column above the root");
    for (int y = root[1]; y < root[1] + p; ++y) {
        auto a = w.vertex_at(Coord{root[0], y}), b = w.vertex_at(Coord{root[0], y + 1});
        column_.push_back(*w.edge_between(*a, *b));
    }
    const int m = 2 * r + 1;
    if ((m - 1) * p + m * (p - 1) > 64) throw BoardError("strip above the root exceeds 64 edges");
    strip_ = make_grid_strip(m, p);
    auto board_vertex = [&](int local) {
        const int x = local % m - r, y = local / m + root[1] + 1;
        return *w.vertex_at(Coord{x, y});
    };
    for (int j = 0; j < strip_.num_edges(); ++j) {
        EdgeId e = *w.edge_between(board_vertex(strip_.edges[j].first), board_vertex(strip_.edges[j].second));
        to_board_.push_back(e);
        to_strip_[e] = j;
    }
    h_ = make_double_response_h(strip_, cfg.q);
}

std::vector<EdgeId> MakerColumn::next_edges(const GameState& s, const TurnContext& ctx) {
    std::vector<EdgeId> out;
    for (EdgeId e : column_)
        if (static_cast<int>(out.size()) < ctx.quota && s.claim(e) == Claim::Unclaimed) out.push_back(e);

    StripGameState ss(strip_);
    for (int j = 0; j < strip_.num_edges(); ++j) {
        const Claim c = s.claim(to_board_[j]);
        if (c == Claim::Safe || contains(out, to_board_[j])) ss.claim_edge(j, StripClaim::H);
        else if (c == Claim::Destroyed) ss.claim_edge(j, StripClaim::V);
    }
    std::vector<int> vb;
    for (EdgeId e : ctx.adversary)
        if (auto it = to_strip_.find(e); it != to_strip_.end()) vb.push_back(it->second);
    if (!vb.empty() && !ss.v_won()) {
        for (int j : h_->respond(ss, vb)) {
            if (static_cast<int>(out.size()) >= ctx.quota) break;
            out.push_back(to_board_[j]);
            ss.claim_edge(j, StripClaim::H);
        }
    }
    while (static_cast<int>(out.size()) < ctx.quota && ss.unclaimed_count() > 0 && !ss.v_won() && !ss.h_won()) {
        int j = MinCutH::pick(strip_, ss.mask(StripClaim::V), ss.mask(StripClaim::H));
        if (j < 0) break;
        out.push_back(to_board_[j]);
        ss.claim_edge(j, StripClaim::H);
    }
    fill_lowest(s, out, ctx.quota);
    return out;
}

BreakerAnnulus::BreakerAnnulus(const Board& w, const GameConfig& cfg, int N)
    : geo_(cfg.p, N), p_(cfg.p) {
    if (w.kind() != BoardKind::LatticeWindow || w.dimension() != 2)
        throw BoardError("breaker-annulus needs a 2-D lattice window");
    if (cfg.q < 2 * cfg.p) throw BoardError("breaker-annulus needs q >= 2p");
    bound_ = bind_annulus(geo_, w);
    for (int k = 0; k < N; ++k) h_.push_back(make_double_response_h(geo_.strip_dual(k), p_));
}

std::vector<EdgeId> BreakerAnnulus::next_edges(const GameState& s, const TurnContext& ctx) {
    AnnulusTurnLog lg;
    std::map<std::pair<int, int>, std::vector<int>> strip_moves;
    for (EdgeId e : ctx.adversary) {
        const EdgeRole& role = bound_.role[e];
        if (role.region == AnnulusRegion::Corner) {
            ++lg.p_L;
        } else if (role.region == AnnulusRegion::Strip) {
            ++lg.p_ik[{role.strip, role.k}];
            strip_moves[{role.strip, role.k}].push_back(role.index);
        }
    }
    std::vector<EdgeId> out;
    auto room = [&] { return static_cast<int>(out.size()) < ctx.quota; };

    if (lg.p_L > 0) {
        const int M = 8 * p_;
        BoxGameState bs(p_, M, geo_.N());
        for (int k = 0; k < geo_.N(); ++k) {
            int destroyed = 0;
            bool removed = false;
            for (EdgeId e : bound_.corners[k]) {
                destroyed += s.claim(e) == Claim::Destroyed;
                removed = removed || s.claim(e) == Claim::Safe;
            }
            for (int i = 0; i < std::min(destroyed, M); ++i) bs.claim_item(k);
            if (removed) bs.remove_box(k);
        }
        if (bs.surviving() > 0) {
            for (int k : box_.respond(bs, lg.p_L)) {
                if (!room()) break;
                for (EdgeId e : bound_.corners[k])
                    if (s.claim(e) == Claim::Unclaimed && !contains(out, e)) {
                        out.push_back(e);
                        ++lg.box_responses;
                        break;
                    }
            }
        }
    }

    for (auto& [ik, moves] : strip_moves) {
        const auto [i, k] = ik;
        const auto& edges = bound_.strips[k][i - 1];
        StripGameState ss(geo_.strip_dual(k));
        for (int j = 0; j < static_cast<int>(edges.size()); ++j) {
            const Claim c = s.claim(edges[j]);
            if (c == Claim::Safe) ss.claim_edge(j, StripClaim::V);
            else if (c == Claim::Destroyed) ss.claim_edge(j, StripClaim::H);
        }
        if (ss.v_won()) continue;
        for (int j : h_[k]->respond(ss, moves)) {
            if (!room()) break;
            out.push_back(edges[j]);
            ++lg.strip_responses[ik];
        }
    }

    for (EdgeId e : bound_.sp) {
        if (!room()) break;
        if (s.claim(e) == Claim::Unclaimed && !contains(out, e)) {
            out.push_back(e);
            ++lg.sp_filler;
        }
    }
    const std::size_t before = out.size();
    fill_lowest(s, out, ctx.quota);
    lg.other_filler = static_cast<int>(out.size() - before);

    if (!k0_) {
        for (int k = 0; k < geo_.N() && !k0_; ++k) {
            bool all = true;
            for (EdgeId e : bound_.corners[k]) all = all && (s.claim(e) == Claim::Destroyed || contains(out, e));
            if (all) k0_ = k;
        }
    }
    log_.push_back(std::move(lg));
    return out;
}

}  // namespace perc
