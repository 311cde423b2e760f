#include "perc/strip_game.hpp"

#include <algorithm>
#include <bit>
#include <stdexcept>
#include <unordered_set>

#include "perc/union_find.hpp"

namespace perc {

StripGraph make_grid_strip(int m, int n) {
    if (m < 1 || n < 1) throw std::invalid_argument("strip needs m, n >= 1");
    StripGraph g;
    g.num_vertices = m * n;
    g.rows = n;
    g.columns = m;
    auto id = [m](int x, int y) { return y * m + x; };
    for (int y = 0; y < n; ++y)
        for (int x = 0; x + 1 < m; ++x) g.edges.push_back({id(x, y), id(x + 1, y)});
    for (int y = 0; y + 1 < n; ++y)
        for (int x = 0; x < m; ++x) g.edges.push_back({id(x, y), id(x, y + 1)});
    for (int y = 0; y < n; ++y) {
        g.left.push_back(id(0, y));
        g.right.push_back(id(m - 1, y));
    }
    return g;
}

namespace {

bool terminals_joined(const StripGraph& g, std::uint64_t use) {
    UnionFind uf(g.num_vertices);
    for (int v : g.left) uf.unite(v, g.left[0]);
    for (int v : g.right) uf.unite(v, g.right[0]);
    for (int e = 0; e < g.num_edges(); ++e)
        if (use >> e & 1) uf.unite(g.edges[e].first, g.edges[e].second);
    return uf.same(g.left[0], g.right[0]);
}

std::uint64_t all_edges(const StripGraph& g) {
    return g.num_edges() == 64 ? ~0ULL : ((1ULL << g.num_edges()) - 1);
}

// Unclaimed edges on some simple left-right path once H is contracted and V deleted.
std::vector<int> relevant_edges(const StripGraph& g, std::uint64_t v, std::uint64_t h) {
    UnionFind uf(g.num_vertices);
    for (int x : g.left) uf.unite(x, g.left[0]);
    for (int x : g.right) uf.unite(x, g.right[0]);
    for (int e = 0; e < g.num_edges(); ++e)
        if (h >> e & 1) uf.unite(g.edges[e].first, g.edges[e].second);
    std::vector<Arc> arcs;
    std::vector<int> ids;
    for (int e = 0; e < g.num_edges(); ++e) {
        if ((v | h) >> e & 1) continue;
        int a = uf.find(g.edges[e].first), b = uf.find(g.edges[e].second);
        if (a == b) continue;
        arcs.push_back({a, b});
        ids.push_back(e);
    }
    auto mask = arcs_on_st_paths(g.num_vertices, arcs, uf.find(g.left[0]), uf.find(g.right[0]));
    std::vector<int> out;
    for (std::size_t i = 0; i < ids.size(); ++i)
        if (mask[i]) out.push_back(ids[i]);
    return out;
}

int lowest_unclaimed(const StripGraph& g, std::uint64_t taken) {
    for (int e = 0; e < g.num_edges(); ++e)
        if (!(taken >> e & 1)) return e;
    return -1;
}

}  // namespace

StripGameState::StripGameState(const StripGraph& g) : g_(&g), claims_(g.num_edges(), StripClaim::None) {
    if (g.num_edges() > 64) throw std::invalid_argument("strip games support at most 64 edges");
}

void StripGameState::claim_edge(int e, StripClaim who) {
    if (e < 0 || e >= g_->num_edges()) throw std::out_of_range("strip edge out of range");
    if (claims_[e] != StripClaim::None) throw std::logic_error("strip edge already claimed");
    claims_[e] = who;
}

std::uint64_t StripGameState::mask(StripClaim who) const {
    std::uint64_t m = 0;
    for (int e = 0; e < g_->num_edges(); ++e)
        if (claims_[e] == who) m |= 1ULL << e;
    return m;
}

int StripGameState::unclaimed_count() const {
    return static_cast<int>(std::count(claims_.begin(), claims_.end(), StripClaim::None));
}

bool StripGameState::v_won() const {
    return !terminals_joined(*g_, all_edges(*g_) & ~mask(StripClaim::V));
}

bool StripGameState::h_won() const { return terminals_joined(*g_, mask(StripClaim::H)); }

int MinCutH::pick(const StripGraph& g, std::uint64_t vmask, std::uint64_t hmask) {
    const std::uint64_t taken = vmask | hmask;
    auto rel = relevant_edges(g, vmask, hmask);
    if (rel.empty()) return lowest_unclaimed(g, taken);
    int best = -1, best_cut = -1;
    for (int e : rel) {
        const std::uint64_t h2 = hmask | (1ULL << e);
        UnionFind uf(g.num_vertices);
        for (int x : g.left) uf.unite(x, g.left[0]);
        for (int x : g.right) uf.unite(x, g.right[0]);
        for (int f = 0; f < g.num_edges(); ++f)
            if (h2 >> f & 1) uf.unite(g.edges[f].first, g.edges[f].second);
        std::vector<Arc> arcs;
        for (int f = 0; f < g.num_edges(); ++f) {
            if ((vmask | h2) >> f & 1) continue;
            arcs.push_back({uf.find(g.edges[f].first), uf.find(g.edges[f].second)});
        }
        const int s = uf.find(g.left[0]), t = uf.find(g.right[0]);
        const int cut = (s == t) ? g.num_edges() + 1 : min_cut_capped(g.num_vertices, arcs, s, t, g.num_edges());
        if (cut > best_cut) {
            best_cut = cut;
            best = e;
        }
    }
    return best;
}

std::vector<int> MinCutH::respond(const StripGameState& s, std::span<const int> v_batch) {
    const StripGraph& g = s.graph();
    std::uint64_t v = s.mask(StripClaim::V), h = s.mask(StripClaim::H);
    const int n = std::min<int>(2 * static_cast<int>(v_batch.size()), s.unclaimed_count());
    std::vector<int> out;
    for (int i = 0; i < n; ++i) {
        int e = pick(g, v, h);
        out.push_back(e);
        h |= 1ULL << e;
    }
    return out;
}

ExactSearchH::ExactSearchH(const StripGraph& g, int q, std::int64_t node_budget)
    : g_(g), q_(q), budget_(node_budget) {
    if (g.num_edges() > 64) throw std::invalid_argument("exact H search supports at most 64 edges");
}

bool ExactSearchH::v_sep(std::uint64_t v) const { return !terminals_joined(g_, all_edges(g_) & ~v); }
bool ExactSearchH::h_conn(std::uint64_t h) const { return terminals_joined(g_, h); }
std::vector<int> ExactSearchH::relevant(std::uint64_t v, std::uint64_t h) const {
    return relevant_edges(g_, v, h);
}

bool ExactSearchH::search(std::uint64_t v, std::uint64_t h, int phase) {
    if (++nodes_ > budget_) throw Budget{};
    if (v_sep(v)) return false;
    if (h_conn(h)) return true;
    if (phase == 0) return search(v, h, -1);
    const Key key{v, h, phase};
    if (auto it = memo_.find(key); it != memo_.end()) return it->second;

    const auto rel = relevant(v, h);
    bool result;
    if (phase > 0) {
        result = false;
        for (int e : rel)
            if (search(v, h | (1ULL << e), phase - 1)) {
                result = true;
                break;
            }
    } else {
        const int placed = -phase - 1;
        result = true;
        if (placed >= 1 && !search(v, h, 2 * placed)) result = false;
        if (result && placed < q_) {
            for (int e : rel)
                if (!search(v | (1ULL << e), h, phase - 1)) {
                    result = false;
                    break;
                }
        }
    }
    if (memo_.size() > 20'000'000) memo_.clear();
    memo_.emplace(key, result);
    return result;
}

std::optional<bool> ExactSearchH::h_wins(std::uint64_t vmask, std::uint64_t hmask, int h_left) {
    nodes_ = 0;
    try {
        return search(vmask, hmask, h_left > 0 ? h_left : -1);
    } catch (const Budget&) {
        return std::nullopt;
    }
}

std::vector<int> ExactSearchH::respond(const StripGameState& s, std::span<const int> v_batch) {
    std::uint64_t v = s.mask(StripClaim::V), h = s.mask(StripClaim::H);
    const int n = std::min<int>(2 * static_cast<int>(v_batch.size()), s.unclaimed_count());
    std::vector<int> out;
    for (int i = 0; i < n; ++i) {
        int pick = -1;
        if (!v_sep(v) && !h_conn(h)) {
            for (int e : relevant(v, h)) {
                auto w = h_wins(v, h | (1ULL << e), n - i - 1);
                if (!w) break;
                if (*w) {
                    pick = e;
                    break;
                }
            }
            if (pick < 0) {
                ++fallbacks_;
                pick = MinCutH::pick(g_, v, h);
            }
        } else {
            pick = lowest_unclaimed(g_, v | h);
        }
        out.push_back(pick);
        h |= 1ULL << pick;
    }
    return out;
}

std::unique_ptr<HStrategy> make_double_response_h(const StripGraph& g, int q) {
    if (q < 1) throw std::invalid_argument("double-response game needs q >= 1");
    if (g.rows < q + 1) throw std::invalid_argument("double-response H needs at least q+1 rows");
    return std::make_unique<ExactSearchH>(g, q);
}

namespace {

struct StripChecker {
    const StripGraph& g;
    int q;
    HStrategy& h;
    StripCheckResult result;
    std::unordered_map<std::uint64_t, std::unordered_map<std::uint64_t, std::uint64_t>> done;  // v -> h -> subtree size
    std::vector<std::vector<int>> line;

    static constexpr std::uint64_t kSat = ~0ULL;
    static std::uint64_t add(std::uint64_t a, std::uint64_t b) { return (a > kSat - b) ? kSat : a + b; }

    // Returns subtree size, or 0 if V wins somewhere below (result updated).
    std::uint64_t visit(const StripGameState& s) {
        ++result.positions;
        if (s.v_won()) {
            fail();
            return 0;
        }
        if (s.h_won() || s.unclaimed_count() == 0) return 1;
        const std::uint64_t vm = s.mask(StripClaim::V), hm = s.mask(StripClaim::H);
        if (auto it = done.find(vm); it != done.end())
            if (auto jt = it->second.find(hm); jt != it->second.end()) return jt->second;

        std::vector<int> free;
        for (int e = 0; e < g.num_edges(); ++e)
            if (s.claim(e) == StripClaim::None) free.push_back(e);
        std::uint64_t size = 1;
        std::vector<int> pick;
        for (int r = 1; r <= q && r <= static_cast<int>(free.size()); ++r) {
            std::vector<int> idx(r);
            for (int i = 0; i < r; ++i) idx[i] = i;
            while (true) {
                pick.clear();
                for (int i : idx) pick.push_back(free[i]);
                std::uint64_t sub = batch(s, pick);
                if (!result.h_always_wins) return 0;
                size = add(size, sub);
                int i = r - 1;
                while (i >= 0 && idx[i] == static_cast<int>(free.size()) - r + i) --i;
                if (i < 0) break;
                ++idx[i];
                for (int j = i + 1; j < r; ++j) idx[j] = idx[j - 1] + 1;
            }
        }
        done[vm][hm] = size;
        return size;
    }

    std::uint64_t batch(const StripGameState& s, const std::vector<int>& vb) {
        StripGameState t = s;
        for (int e : vb) t.claim_edge(e, StripClaim::V);
        line.push_back(vb);
        if (t.v_won()) {
            fail();
            return 0;
        }
        auto resp = h.respond(t, vb);
        const int need = std::min<int>(2 * static_cast<int>(vb.size()), t.unclaimed_count());
        if (static_cast<int>(resp.size()) != need) throw std::logic_error("H returned the wrong number of edges");
        for (int e : resp) t.claim_edge(e, StripClaim::H);
        line.push_back(resp);
        std::uint64_t sub = visit(t);
        line.pop_back();
        line.pop_back();
        return sub;
    }

    void fail() {
        if (result.h_always_wins) {
            result.h_always_wins = false;
            result.counterexample = line;
        }
    }
};

}  // namespace

StripCheckResult check_h_exhaustive(const StripGraph& g, int q, HStrategy& h) {
    StripChecker c{g, q, h, {}, {}, {}};
    StripGameState s(g);
    c.result.tree_nodes = c.visit(s);
    return c.result;
}

}  // namespace perc
