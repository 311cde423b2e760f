#include "perc/solver.hpp"

#include <omp.h>

#include <algorithm>
#include <array>
#include <atomic>
#include <climits>
#include <mutex>
#include <string>
#include <unordered_map>

#include "perc/graph_util.hpp"
#include "perc/union_find.hpp"

namespace perc {

namespace {

enum class Status { Open, MakerWon, BreakerWon };

// Reduced position: vertex 0 is the root class, vertex 1 the merged boundary.
struct Pos {
    int n = 2;
    std::vector<Arc> arcs;
    std::vector<EdgeId> origin;  // board edge behind each arc
};

struct Phase {
    Player mover;
    int remaining;
};

Phase next_phase(Phase ph, const GameConfig& cfg) {
    if (ph.remaining > 1) return {ph.mover, ph.remaining - 1};
    const Player o = opponent(ph.mover);
    return {o, cfg.quota(o)};
}

// Drop arcs on no simple 0-1 path and compact labels (0 and 1 fixed).
Status normalize(Pos& p) {
    auto mask = arcs_on_st_paths(p.n, p.arcs, 0, 1);
    std::vector<int> label(p.n, -1);
    label[0] = 0;
    label[1] = 1;
    int next = 2;
    Pos q;
    for (std::size_t i = 0; i < p.arcs.size(); ++i) {
        if (!mask[i]) continue;
        q.arcs.push_back(p.arcs[i]);
        q.origin.push_back(p.origin[i]);
    }
    if (q.arcs.empty()) return Status::BreakerWon;
    std::vector<char> used(p.n, 0);
    for (auto [a, b] : q.arcs) used[a] = used[b] = 1;
    for (int v = 2; v < p.n; ++v)
        if (used[v]) label[v] = next++;
    for (auto& [a, b] : q.arcs) {
        a = label[a];
        b = label[b];
        if (a > b) std::swap(a, b);
    }
    q.n = next;
    p = std::move(q);
    return Status::Open;
}

Status contract(Pos& p, int i) {
    auto [a, b] = p.arcs[i];
    if (a > b) std::swap(a, b);
    if (a == 0 && b == 1) return Status::MakerWon;
    const int keep = a, gone = b;  // a < b, so 0 and 1 survive
    Pos q;
    q.n = p.n;
    for (std::size_t j = 0; j < p.arcs.size(); ++j) {
        if (static_cast<int>(j) == i) continue;
        auto [x, y] = p.arcs[j];
        if (x == gone) x = keep;
        if (y == gone) y = keep;
        if (x == y) continue;
        if (x > y) std::swap(x, y);
        q.arcs.push_back({x, y});
        q.origin.push_back(p.origin[j]);
    }
    p = std::move(q);
    return normalize(p);
}

Status remove(Pos& p, int i) {
    p.arcs.erase(p.arcs.begin() + i);
    p.origin.erase(p.origin.begin() + i);
    return normalize(p);
}

Status play(Pos& p, int i, Player who) { return who == Player::Maker ? contract(p, i) : remove(p, i); }

Status from_state(const GameState& s, Pos& out) {
    const Board& b = s.board();
    UnionFind uf(b.num_vertices());
    for (EdgeId e = 0; e < b.num_edges(); ++e)
        if (s.claim(e) == Claim::Safe) uf.unite(b.edge(e).u, b.edge(e).v);
    const int rr = uf.find(b.root());
    std::vector<int> label(b.num_vertices(), -1);
    for (VertexId v : b.boundary()) {
        if (uf.find(v) == rr) return Status::MakerWon;
        label[uf.find(v)] = 1;
    }
    label[rr] = 0;
    int next = 2;
    for (VertexId v = 0; v < b.num_vertices(); ++v) {
        int r = uf.find(v);
        if (label[r] < 0) label[r] = next++;
    }
    out = Pos{};
    out.n = next;
    for (EdgeId e = 0; e < b.num_edges(); ++e) {
        if (s.claim(e) != Claim::Unclaimed) continue;
        int x = label[uf.find(b.edge(e).u)], y = label[uf.find(b.edge(e).v)];
        if (x == y) continue;
        if (x > y) std::swap(x, y);
        out.arcs.push_back({x, y});
        out.origin.push_back(e);
    }
    return normalize(out);
}

using Key = std::basic_string<std::uint16_t>;

struct KeyHash {
    std::size_t operator()(const Key& k) const {
        std::uint64_t h = 0xcbf29ce484222325ULL;
        for (auto c : k) {
            h ^= c;
            h *= 0x100000001b3ULL;
        }
        return static_cast<std::size_t>(h ^ (h >> 31));
    }
};

void put_phase(Key& k, Phase ph) {
    k.push_back(static_cast<std::uint16_t>(ph.mover == Player::Maker ? 0 : 1));
    k.push_back(static_cast<std::uint16_t>(ph.remaining));
}

// BFS from the root with (degree, multiplicity to parent, old label) ordering.
Key general_key(const Pos& p, Phase ph) {
    std::vector<std::vector<std::pair<int, int>>> nb(p.n);  // (neighbour, multiplicity)
    std::vector<int> deg(p.n, 0);
    {
        std::vector<Arc> sorted = p.arcs;
        std::sort(sorted.begin(), sorted.end());
        for (std::size_t i = 0; i < sorted.size();) {
            std::size_t j = i;
            while (j < sorted.size() && sorted[j] == sorted[i]) ++j;
            auto [a, b] = sorted[i];
            int m = static_cast<int>(j - i);
            nb[a].push_back({b, m});
            nb[b].push_back({a, m});
            deg[a] += m;
            deg[b] += m;
            i = j;
        }
    }
    std::vector<int> label(p.n, -1);
    label[0] = 0;
    label[1] = 1;
    int next = 2;
    std::vector<int> queue{0, 1};
    for (std::size_t qi = 0; qi < queue.size(); ++qi) {
        const int v = queue[qi];
        std::vector<std::array<int, 3>> fresh;
        for (auto [w, m] : nb[v])
            if (label[w] < 0) fresh.push_back({deg[w], m, w});
        std::sort(fresh.begin(), fresh.end());
        for (auto& f : fresh) {
            label[f[2]] = next++;
            queue.push_back(f[2]);
        }
    }
    std::vector<std::pair<int, int>> enc;
    enc.reserve(p.arcs.size());
    for (auto [a, b] : p.arcs) {
        int x = label[a], y = label[b];
        if (x > y) std::swap(x, y);
        enc.push_back({x, y});
    }
    std::sort(enc.begin(), enc.end());
    Key k;
    k.reserve(4 + 2 * enc.size());
    k.push_back(0);
    put_phase(k, ph);
    k.push_back(static_cast<std::uint16_t>(p.n));
    for (auto [x, y] : enc) {
        k.push_back(static_cast<std::uint16_t>(x));
        k.push_back(static_cast<std::uint16_t>(y));
    }
    return k;
}

// AHU encoding of the tree hanging from the root; arcs into 1 are leaf stubs.
// Returns false if the graph minus vertex 1 is not a tree.
bool tree_key(const Pos& p, Phase ph, Key& out) {
    std::vector<std::vector<int>> nb(p.n);
    int non_target = 0;
    for (auto [a, b] : p.arcs) {
        nb[a].push_back(b);
        nb[b].push_back(a);
        if (a != 1 && b != 1) ++non_target;
    }
    if (non_target != p.n - 2) return false;  // p.n - 1 vertices excluding the target
    std::vector<std::string> code(p.n);
    std::vector<int> parent(p.n, -2), order;
    order.push_back(0);
    parent[0] = -1;
    for (std::size_t i = 0; i < order.size(); ++i) {
        int v = order[i];
        for (int w : nb[v]) {
            if (w == 1 || w == parent[v]) continue;
            if (parent[w] != -2) return false;
            parent[w] = v;
            order.push_back(w);
        }
    }
    if (static_cast<int>(order.size()) != p.n - 1) return false;
    for (auto it = order.rbegin(); it != order.rend(); ++it) {
        const int v = *it;
        std::vector<std::string> parts;
        for (int w : nb[v]) {
            if (w == 1)
                parts.push_back("t");
            else if (w != parent[v])
                parts.push_back(std::move(code[w]));
        }
        std::sort(parts.begin(), parts.end());
        std::string c = "(";
        for (auto& s : parts) c += s;
        c += ")";
        code[v] = std::move(c);
    }
    out.clear();
    out.push_back(1);
    put_phase(out, ph);
    for (char ch : code[0]) out.push_back(static_cast<std::uint16_t>(ch));
    return true;
}

class Memo {
public:
    explicit Memo(std::size_t cap) : cap_(cap) {}

    std::optional<bool> find(const Key& k) {
        Shard& s = shard(k);
        std::lock_guard<std::mutex> g(s.mu);
        auto it = s.map.find(k);
        if (it == s.map.end()) return std::nullopt;
        return it->second;
    }

    void insert(const Key& k, bool v) {
        if (size_.load(std::memory_order_relaxed) >= cap_) return;
        Shard& s = shard(k);
        std::lock_guard<std::mutex> g(s.mu);
        if (s.map.emplace(k, v).second) size_.fetch_add(1, std::memory_order_relaxed);
    }

private:
    struct Shard {
        std::mutex mu;
        std::unordered_map<Key, bool, KeyHash> map;
    };
    Shard& shard(const Key& k) { return shards_[KeyHash{}(k) % kShards]; }

    static constexpr std::size_t kShards = 64;
    std::array<Shard, kShards> shards_;
    std::size_t cap_;
    std::atomic<std::size_t> size_{0};
};

struct BudgetExceeded {};

class Searcher {
public:
    Searcher(const GameConfig& cfg, const SolveOptions& opt, bool tree)
        : cfg_(cfg), opt_(opt), tree_(tree && opt.tree_pruning), memo_(opt.max_memo_entries) {}

    // True iff Maker wins from the open position `p` with `ph` to play.
    bool solve(const Pos& p, Phase ph, int depth) {
        if (nodes_.fetch_add(1, std::memory_order_relaxed) >= opt_.max_nodes) throw BudgetExceeded{};
        bump_depth(depth);

        if (ph.mover == Player::Maker) {
            auto d = bfs_distances(p.n, p.arcs, 0);
            if (d[1] >= 0 && d[1] <= ph.remaining) return true;
        } else if (min_cut_capped(p.n, p.arcs, 0, 1, ph.remaining) <= ph.remaining) {
            return false;
        }

        Key key;
        if (opt_.memo) {
            if (!(tree_ && tree_key(p, ph, key))) key = general_key(p, ph);
            if (auto hit = memo_.find(key)) return *hit;
        }

        const bool maker = ph.mover == Player::Maker;
        bool result = !maker;
        const Phase nph = next_phase(ph, cfg_);
        for (int i : candidates(p, true)) {
            Pos child = p;
            const Status st = play(child, i, ph.mover);
            bool v;
            if (st == Status::MakerWon)
                v = true;
            else if (st == Status::BreakerWon)
                v = false;
            else
                v = solve(child, nph, depth + 1);
            if (v == maker) {
                result = maker;
                break;
            }
        }
        if (opt_.memo) memo_.insert(key, result);
        return result;
    }

    // Candidate arc indices: one per parallel class, optionally ordered by
    // shortest 0-1 path through the arc.
    std::vector<int> candidates(const Pos& p, bool ordered) const {
        std::vector<int> idx;
        for (int i = 0; i < static_cast<int>(p.arcs.size()); ++i) {
            if (tree_ && p.arcs[i].first != 0) continue;
            idx.push_back(i);
        }
        // Keep the lowest-origin representative of each parallel class.
        std::sort(idx.begin(), idx.end(), [&](int x, int y) {
            if (p.arcs[x] != p.arcs[y]) return p.arcs[x] < p.arcs[y];
            return p.origin[x] < p.origin[y];
        });
        idx.erase(std::unique(idx.begin(), idx.end(), [&](int x, int y) { return p.arcs[x] == p.arcs[y]; }),
                  idx.end());
        if (!ordered) {
            std::sort(idx.begin(), idx.end(), [&](int x, int y) { return p.origin[x] < p.origin[y]; });
            return idx;
        }
        auto d0 = bfs_distances(p.n, p.arcs, 0);
        auto d1 = bfs_distances(p.n, p.arcs, 1);
        auto score = [&](int i) {
            auto [a, b] = p.arcs[i];
            return std::min(d0[a] + d1[b], d0[b] + d1[a]);
        };
        std::stable_sort(idx.begin(), idx.end(), [&](int x, int y) {
            int sx = score(x), sy = score(y);
            if (sx != sy) return sx < sy;
            return p.origin[x] < p.origin[y];
        });
        return idx;
    }

    std::int64_t nodes() const { return nodes_.load(); }
    int depth() const { return depth_.load(); }

private:
    void bump_depth(int d) {
        int cur = depth_.load(std::memory_order_relaxed);
        while (d > cur && !depth_.compare_exchange_weak(cur, d, std::memory_order_relaxed)) {
        }
    }

    GameConfig cfg_;
    SolveOptions opt_;
    bool tree_;
    Memo memo_;
    std::atomic<std::int64_t> nodes_{0};
    std::atomic<int> depth_{0};
};

SolveResult run(const GameState& s, const SolveOptions& opt, bool parallel) {
    SolveResult res;
    Pos root;
    const Status st = from_state(s, root);
    if (st == Status::MakerWon) {
        res.winner = Player::Maker;
        return res;
    }
    if (st == Status::BreakerWon) {
        res.winner = Player::Breaker;
        return res;
    }
    const GameConfig& cfg = s.config();
    const Phase ph{s.to_move(), s.remaining_in_turn()};
    const bool tree = s.board().kind() == BoardKind::Tree;
    Searcher search(cfg, opt, tree);
    const auto cand = search.candidates(root, false);
    const int n = static_cast<int>(cand.size());
    const bool maker = ph.mover == Player::Maker;
    const Phase nph = next_phase(ph, cfg);

    // Lowest candidate position that wins for the mover; n if none.
    std::atomic<int> best{n};
    std::atomic<bool> budget_hit{false};
    auto eval = [&](int c) {
        if (c > best.load() || budget_hit.load()) return;
        Pos child = root;
        const Status cs = play(child, cand[c], ph.mover);
        bool maker_wins;
        try {
            if (cs == Status::MakerWon)
                maker_wins = true;
            else if (cs == Status::BreakerWon)
                maker_wins = false;
            else
                maker_wins = search.solve(child, nph, 1);
        } catch (const BudgetExceeded&) {
            budget_hit = true;
            return;
        }
        if (maker_wins == maker) {
            int cur = best.load();
            while (c < cur && !best.compare_exchange_weak(cur, c)) {
            }
        }
    };

    if (parallel) {
        const int threads = opt.threads > 0 ? opt.threads : omp_get_max_threads();
#pragma omp parallel for schedule(dynamic, 1) num_threads(threads)
        for (int c = 0; c < n; ++c) eval(c);
    } else {
        for (int c = 0; c < n && best.load() == n && !budget_hit.load(); ++c) eval(c);
    }

    res.nodes = search.nodes();
    res.depth = search.depth();
    // A budget hit only matters if it could hide a lower winning candidate.
    if (budget_hit.load()) return res;
    const int b = best.load();
    if (b < n) {
        res.winner = ph.mover;
        res.best_move = root.origin[cand[b]];
    } else {
        res.winner = opponent(ph.mover);
        res.best_move = root.origin[cand[0]];
    }
    return res;
}

}  // namespace

SolveResult solve_escape(const GameState& s, const SolveOptions& opt) { return run(s, opt, true); }

SolveResult solve_escape_serial(const GameState& s, const SolveOptions& opt) { return run(s, opt, false); }

SolveResult solve_escape(std::shared_ptr<const Board> board, const GameConfig& cfg, const SolveOptions& opt) {
    return solve_escape(GameState(std::move(board), cfg), opt);
}

std::vector<EdgeId> relevant_edges(const GameState& s) {
    Pos p;
    if (from_state(s, p) != Status::Open) return {};
    std::vector<EdgeId> out = p.origin;
    std::sort(out.begin(), out.end());
    return out;
}

}  // namespace perc
