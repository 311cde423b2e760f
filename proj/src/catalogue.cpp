#include "perc/catalogue.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>

namespace perc {

namespace {

using Edges = std::vector<std::pair<int, int>>;

Edges relabel(const Edges& edges, const std::vector<int>& perm) {
    Edges out;
    out.reserve(edges.size());
    for (auto [a, b] : edges) {
        int x = perm[a], y = perm[b];
        out.push_back(x < y ? std::make_pair(x, y) : std::make_pair(y, x));
    }
    std::sort(out.begin(), out.end());
    return out;
}

// Colour refinement with the marks as fixed singleton colours.
std::vector<int> refine(int n, const Edges& edges) {
    std::vector<std::vector<int>> adj(n);
    for (auto [a, b] : edges) {
        adj[a].push_back(b);
        adj[b].push_back(a);
    }
    std::vector<int> col(n);
    for (int v = 0; v < n; ++v) col[v] = v < 2 ? v : 2;
    for (int round = 0; round < n; ++round) {
        std::map<std::pair<int, std::vector<int>>, int> ids;
        std::vector<std::pair<int, std::vector<int>>> sig(n);
        for (int v = 0; v < n; ++v) {
            std::vector<int> nb;
            for (int w : adj[v]) nb.push_back(col[w]);
            std::sort(nb.begin(), nb.end());
            sig[v] = {col[v], std::move(nb)};
            ids.emplace(sig[v], 0);
        }
        int next = 0;
        for (auto& [k, id] : ids) id = next++;
        std::vector<int> nc(n);
        for (int v = 0; v < n; ++v) nc[v] = ids[sig[v]];
        const bool stable = std::set<int>(nc.begin(), nc.end()).size() == std::set<int>(col.begin(), col.end()).size();
        col = std::move(nc);
        if (stable) break;
    }
    return col;
}

}  // namespace

Edges canonical_edges(int n, const Edges& edges) {
    const std::vector<int> col = refine(n, edges);
    // Order vertices by colour; marks keep colours 0 and 1, which sort first.
    std::vector<int> order(n);
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(), [&](int a, int b) { return col[a] < col[b]; });
    std::vector<std::pair<int, int>> cells;  // [begin, end) in `order`
    for (int i = 0; i < n;) {
        int j = i;
        while (j < n && col[order[j]] == col[order[i]]) ++j;
        cells.push_back({i, j});
        i = j;
    }
    Edges best;
    bool have = false;
    auto rec = [&](auto&& self, std::size_t c) -> void {
        if (c == cells.size()) {
            std::vector<int> perm(n);
            for (int i = 0; i < n; ++i) perm[order[i]] = i;
            Edges e = relabel(edges, perm);
            if (!have || e < best) {
                best = std::move(e);
                have = true;
            }
            return;
        }
        auto [b, e] = cells[c];
        std::sort(order.begin() + b, order.begin() + e);
        do {
            self(self, c + 1);
        } while (std::next_permutation(order.begin() + b, order.begin() + e));
    };
    rec(rec, 0);
    return best;
}

std::vector<Board> catalogue_multigraphs(int max_edges) {
    // Growth states: vertices other than 1 form a connected graph containing 0;
    // vertex 1 is either isolated or attached.
    struct G {
        int n;
        Edges edges;
    };
    auto attached = [](const G& g, int v) {
        if (v != 1) return true;
        for (auto [a, b] : g.edges)
            if (a == 1 || b == 1) return true;
        return false;
    };
    std::vector<G> layer{{2, {}}};
    std::set<std::pair<int, Edges>> seen{{2, {}}};
    std::vector<Board> out;
    for (int m = 1; m <= max_edges; ++m) {
        std::vector<G> next;
        auto push = [&](G g) {
            std::sort(g.edges.begin(), g.edges.end());
            Edges key = canonical_edges(g.n, g.edges);
            if (!seen.insert({g.n, key}).second) return;
            next.push_back({g.n, key});
        };
        for (const G& g : layer) {
            for (int a = 0; a < g.n; ++a) {
                for (int b = a + 1; b < g.n; ++b) {
                    G h = g;
                    h.edges.push_back({a, b});
                    push(std::move(h));
                }
                if (!attached(g, a)) continue;
                G h = g;
                h.edges.push_back({a, g.n});
                ++h.n;
                push(std::move(h));
            }
        }
        for (const G& g : next) {
            if (!attached(g, 1)) continue;
            std::vector<Edge> es;
            for (auto [a, b] : g.edges) es.push_back({a, b});
            out.push_back(Board::generic(g.n, std::move(es), 0, {1}));
        }
        layer = std::move(next);
    }
    return out;
}

}  // namespace perc
