#include "perc/lehman.hpp"

#include <algorithm>
#include <bit>
#include <deque>

#include "perc/union_find.hpp"

namespace perc {

namespace {

// Arc ids on the forest path between u and v, or empty with `joined` false.
std::vector<int> forest_path(int n, const std::vector<Arc>& arcs, const std::vector<int>& forest, int which,
                             int u, int v, bool& joined) {
    std::vector<std::vector<std::pair<int, int>>> adj(n);
    for (int i = 0; i < static_cast<int>(arcs.size()); ++i)
        if (forest[i] == which) {
            adj[arcs[i].first].push_back({arcs[i].second, i});
            adj[arcs[i].second].push_back({arcs[i].first, i});
        }
    std::vector<int> via(n, -2);
    std::deque<int> q{u};
    via[u] = -1;
    while (!q.empty() && via[v] == -2) {
        int x = q.front();
        q.pop_front();
        for (auto [y, id] : adj[x])
            if (via[y] == -2) {
                via[y] = id;
                q.push_back(y);
            }
    }
    joined = via[v] != -2;
    std::vector<int> path;
    if (!joined) return path;
    for (int x = v; x != u;) {
        int id = via[x];
        path.push_back(id);
        x = arcs[id].first == x ? arcs[id].second : arcs[id].first;
    }
    return path;
}

}  // namespace

int two_forest_packing(int n, const std::vector<Arc>& arcs, std::vector<int>& forest) {
    const int m = static_cast<int>(arcs.size());
    forest.assign(m, -1);
    int size = 0;
    for (int e = 0; e < m; ++e) {
        if (arcs[e].first == arcs[e].second) continue;
        std::vector<int> par(m, -1), par_forest(m, -1);
        std::vector<char> seen(m, 0);
        std::deque<int> q{e};
        seen[e] = 1;
        bool done = false;
        while (!q.empty() && !done) {
            const int x = q.front();
            q.pop_front();
            for (int i = 0; i < 2 && !done; ++i) {
                if (forest[x] == i) continue;
                bool joined;
                auto path = forest_path(n, arcs, forest, i, arcs[x].first, arcs[x].second, joined);
                if (!joined) {
                    int cur = x, f = i;
                    while (true) {
                        forest[cur] = f;
                        if (cur == e) break;
                        f = par_forest[cur];
                        cur = par[cur];
                    }
                    ++size;
                    done = true;
                    break;
                }
                for (int y : path)
                    if (!seen[y]) {
                        seen[y] = 1;
                        par[y] = x;
                        par_forest[y] = i;
                        q.push_back(y);
                    }
            }
        }
    }
    return size;
}

namespace {

struct SmallGraph {
    int n = 0;
    std::vector<Arc> arcs;
    std::vector<EdgeId> origin;
    int s = 0, t = 0;
};

struct Packing {
    std::vector<EdgeId> t1, t2;
};

// Does G[S] pack two spanning trees? S given as a bitmask.
bool packs(const SmallGraph& g, std::uint32_t S, Packing* out) {
    const int k = std::popcount(S);
    if (k == 1) {
        if (out) *out = {};
        return true;
    }
    std::vector<Arc> arcs;
    std::vector<EdgeId> orig;
    for (std::size_t i = 0; i < g.arcs.size(); ++i) {
        auto [a, b] = g.arcs[i];
        if (a != b && (S >> a & 1) && (S >> b & 1)) {
            arcs.push_back({a, b});
            orig.push_back(g.origin[i]);
        }
    }
    if (static_cast<int>(arcs.size()) < 2 * (k - 1)) return false;
    UnionFind uf(g.n);
    int comps = k;
    for (auto [a, b] : arcs) comps -= uf.unite(a, b) ? 1 : 0;
    if (comps != 1) return false;
    std::vector<int> forest;
    if (two_forest_packing(g.n, arcs, forest) != 2 * (k - 1)) return false;
    if (out) {
        out->t1.clear();
        out->t2.clear();
        for (std::size_t i = 0; i < arcs.size(); ++i) {
            if (forest[i] == 0) out->t1.push_back(orig[i]);
            if (forest[i] == 1) out->t2.push_back(orig[i]);
        }
        std::sort(out->t1.begin(), out->t1.end());
        std::sort(out->t2.begin(), out->t2.end());
    }
    return true;
}

// Subsets containing all `must` bits, largest first, then ascending mask.
std::vector<std::uint32_t> subsets_by_size(int n, std::uint32_t must) {
    std::vector<std::uint32_t> out;
    const std::uint32_t full = (n == 32) ? ~0u : ((1u << n) - 1);
    const std::uint32_t rest = full & ~must;
    for (std::uint32_t sub = rest;; sub = (sub - 1) & rest) {
        out.push_back(sub | must);
        if (sub == 0) break;
    }
    std::sort(out.begin(), out.end(), [](std::uint32_t a, std::uint32_t b) {
        int pa = std::popcount(a), pb = std::popcount(b);
        return pa != pb ? pa > pb : a < b;
    });
    return out;
}

std::vector<VertexId> members(std::uint32_t S) {
    std::vector<VertexId> out;
    for (int v = 0; v < 32; ++v)
        if (S >> v & 1) out.push_back(v);
    return out;
}

// Cutting player first: Maker wins iff some S containing s, t packs two trees.
bool cut_first(const SmallGraph& g, std::uint32_t& S_out, Packing& pk) {
    if (g.s == g.t) {
        S_out = 1u << g.s;
        pk = {};
        return true;
    }
    for (std::uint32_t S : subsets_by_size(g.n, (1u << g.s) | (1u << g.t)))
        if (packs(g, S, &pk)) {
            S_out = S;
            return true;
        }
    return false;
}

std::uint32_t closure_of_root(const SmallGraph& g) {
    for (std::uint32_t S : subsets_by_size(g.n, 1u << g.s))
        if (packs(g, S, nullptr)) return S;
    return 1u << g.s;
}

// Contract arc i; vertex ids are kept (the merged vertex answers to both names).
SmallGraph contract_arc(const SmallGraph& g, int i, std::vector<int>& rep) {
    SmallGraph h = g;
    auto [a, b] = g.arcs[i];
    rep.assign(g.n, 0);
    for (int v = 0; v < g.n; ++v) rep[v] = v;
    const int keep = std::min(a, b), gone = std::max(a, b);
    rep[gone] = keep;
    h.arcs.clear();
    h.origin.clear();
    for (std::size_t j = 0; j < g.arcs.size(); ++j) {
        if (static_cast<int>(j) == i) continue;
        int x = rep[g.arcs[j].first], y = rep[g.arcs[j].second];
        if (x == y) continue;
        h.arcs.push_back({x, y});
        h.origin.push_back(g.origin[j]);
    }
    h.s = rep[g.s];
    h.t = rep[g.t];
    return h;
}

std::vector<VertexId> expand(std::uint32_t S, const std::vector<int>& rep) {
    std::vector<VertexId> out;
    for (int v = 0; v < static_cast<int>(rep.size()); ++v)
        if (S >> rep[v] & 1) out.push_back(v);
    return out;
}

}  // namespace

LehmanResult lehman_decide(const Board& b, Player first, int vertex_cap) {
    LehmanResult res;
    std::vector<EdgeId> origin;
    const Board c = contract_boundary(b, &origin);
    if (c.num_vertices() > std::min(vertex_cap, 31)) return res;

    SmallGraph g;
    g.n = c.num_vertices();
    g.s = c.root();
    g.t = c.boundary().front();
    for (EdgeId e = 0; e < c.num_edges(); ++e) {
        g.arcs.push_back({c.edge(e).u, c.edge(e).v});
        g.origin.push_back(origin[e]);
    }
    LehmanCertificate& cert = res.certificate;

    if (g.s == g.t) {
        cert.maker_wins = true;
        cert.vertex_set = {g.s};
        res.winner = Player::Maker;
        return res;
    }

    if (first == Player::Breaker) {
        std::uint32_t S;
        Packing pk;
        if (cut_first(g, S, pk)) {
            cert.maker_wins = true;
            cert.vertex_set = members(S);
            cert.tree1 = pk.t1;
            cert.tree2 = pk.t2;
            res.winner = Player::Maker;
        } else {
            cert.closures.push_back(members(closure_of_root(g)));
            res.winner = Player::Breaker;
        }
        return res;
    }

    // Maker first: she wins iff some opening leaves a cut-first Maker win.
    std::vector<Arc> tried;
    for (int i = 0; i < static_cast<int>(g.arcs.size()); ++i) {
        Arc key = g.arcs[i];
        if (key.first > key.second) std::swap(key.first, key.second);
        if (std::find(tried.begin(), tried.end(), key) != tried.end()) continue;
        tried.push_back(key);
        std::vector<int> rep;
        SmallGraph h = contract_arc(g, i, rep);
        std::uint32_t S;
        Packing pk;
        if (cut_first(h, S, pk)) {
            cert.maker_wins = true;
            cert.opening = g.origin[i];
            cert.vertex_set = expand(S, rep);
            cert.tree1 = pk.t1;
            cert.tree2 = pk.t2;
            cert.closures.clear();
            res.winner = Player::Maker;
            return res;
        }
        cert.closures.push_back(expand(closure_of_root(h), rep));
    }
    res.winner = Player::Breaker;
    return res;
}

bool verify_lehman_certificate(const Board& b, const LehmanCertificate& cert) {
    if (!cert.maker_wins) return false;
    std::vector<EdgeId> origin;
    const Board c = contract_boundary(b, &origin);
    std::vector<int> to_c(b.num_edges(), -1);
    for (EdgeId e = 0; e < c.num_edges(); ++e) to_c[origin[e]] = e;
    const int n = c.num_vertices();
    UnionFind merged(n);
    if (cert.opening) {
        const int e = to_c.at(*cert.opening);
        if (e < 0) return false;
        merged.unite(c.edge(e).u, c.edge(e).v);
    }
    std::vector<char> in_set(n, 0);
    for (VertexId v : cert.vertex_set) {
        if (v < 0 || v >= n) return false;
        in_set[v] = 1;
    }
    const VertexId s = c.root(), t = c.boundary().front();
    if (!in_set[s] || !in_set[t]) return false;
    // Classes of the vertex set after the opening contraction.
    int classes = 0;
    std::vector<char> counted(n, 0);
    for (VertexId v = 0; v < n; ++v)
        if (in_set[v] && !counted[merged.find(v)]) {
            counted[merged.find(v)] = 1;
            ++classes;
        }
    std::vector<char> used(b.num_edges(), 0);
    if (cert.opening) used[*cert.opening] = 1;
    for (const auto* tree : {&cert.tree1, &cert.tree2}) {
        if (static_cast<int>(tree->size()) != classes - 1) return false;
        UnionFind uf = merged;
        for (EdgeId be : *tree) {
            if (be < 0 || be >= b.num_edges() || used[be]) return false;
            used[be] = 1;
            const int e = to_c[be];
            if (e < 0) return false;
            const VertexId x = c.edge(e).u, y = c.edge(e).v;
            if (!in_set[x] || !in_set[y]) return false;
            if (!uf.unite(x, y)) return false;
        }
    }
    return true;
}

}  // namespace perc
