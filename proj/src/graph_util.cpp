#include "perc/graph_util.hpp"

#include <algorithm>
#include <deque>

namespace perc {

namespace {

struct Adj {
    std::vector<std::vector<std::pair<int, int>>> out;  // (neighbour, arc id)
    Adj(int n, const std::vector<Arc>& arcs) : out(n) {
        for (int i = 0; i < static_cast<int>(arcs.size()); ++i) {
            auto [a, b] = arcs[i];
            if (a == b) continue;
            out[a].push_back({b, i});
            out[b].push_back({a, i});
        }
    }
};

}  // namespace

std::vector<int> bfs_distances(int n, const std::vector<Arc>& arcs, int s) {
    Adj g(n, arcs);
    std::vector<int> dist(n, -1);
    std::deque<int> q{s};
    dist[s] = 0;
    while (!q.empty()) {
        int v = q.front();
        q.pop_front();
        for (auto [w, id] : g.out[v])
            if (dist[w] < 0) {
                dist[w] = dist[v] + 1;
                q.push_back(w);
            }
    }
    return dist;
}

// Biconnected components via iterative Tarjan; an arc is on a simple s-t path
// iff its block lies on the block-cut tree path between s and t.
std::vector<char> arcs_on_st_paths(int n, const std::vector<Arc>& arcs, int s, int t) {
    const int m = static_cast<int>(arcs.size());
    std::vector<char> result(m, 0);
    if (s == t) return result;
    Adj g(n, arcs);

    std::vector<int> disc(n, -1), low(n, 0), block_of(m, -1);
    std::vector<int> arc_stack;
    int timer = 0, blocks = 0;
    struct Frame { int v, parent_arc, next; };
    std::vector<Frame> stack;
    disc[s] = low[s] = timer++;
    stack.push_back({s, -1, 0});
    while (!stack.empty()) {
        Frame& f = stack.back();
        if (f.next < static_cast<int>(g.out[f.v].size())) {
            auto [w, id] = g.out[f.v][f.next++];
            if (id == f.parent_arc) continue;
            if (disc[w] < 0) {
                arc_stack.push_back(id);
                disc[w] = low[w] = timer++;
                stack.push_back({w, id, 0});
            } else if (disc[w] < disc[f.v]) {
                arc_stack.push_back(id);
                low[f.v] = std::min(low[f.v], disc[w]);
            }
            continue;
        }
        const int v = f.v, pa = f.parent_arc;
        stack.pop_back();
        if (stack.empty()) break;
        const int u = stack.back().v;
        low[u] = std::min(low[u], low[v]);
        if (low[v] >= disc[u]) {
            while (true) {
                int id = arc_stack.back();
                arc_stack.pop_back();
                block_of[id] = blocks;
                if (id == pa) break;
            }
            ++blocks;
        }
    }
    if (disc[t] < 0) return result;

    // Block-cut tree: nodes [0, blocks) are blocks, blocks + v is vertex v.
    const int total = blocks + n;
    std::vector<std::vector<int>> tree(total);
    std::vector<std::vector<int>> block_vertices(blocks);
    for (int id = 0; id < m; ++id) {
        if (block_of[id] < 0) continue;
        block_vertices[block_of[id]].push_back(arcs[id].first);
        block_vertices[block_of[id]].push_back(arcs[id].second);
    }
    for (int b = 0; b < blocks; ++b) {
        auto& vs = block_vertices[b];
        std::sort(vs.begin(), vs.end());
        vs.erase(std::unique(vs.begin(), vs.end()), vs.end());
        for (int v : vs) {
            tree[b].push_back(blocks + v);
            tree[blocks + v].push_back(b);
        }
    }
    std::vector<int> prev(total, -2);
    std::deque<int> q{blocks + s};
    prev[blocks + s] = -1;
    while (!q.empty()) {
        int x = q.front();
        q.pop_front();
        for (int y : tree[x])
            if (prev[y] == -2) {
                prev[y] = x;
                q.push_back(y);
            }
    }
    std::vector<char> on_path(blocks, 0);
    for (int x = blocks + t; x != -1 && x != -2; x = prev[x])
        if (x < blocks) on_path[x] = 1;
    for (int id = 0; id < m; ++id)
        if (block_of[id] >= 0 && on_path[block_of[id]]) result[id] = 1;
    return result;
}

int min_cut_capped(int n, const std::vector<Arc>& arcs, int s, int t, int limit) {
    if (s == t) return limit + 1;
    const int m = static_cast<int>(arcs.size());
    Adj g(n, arcs);
    // flow[id] in {-1,0,1}: direction relative to (first -> second).
    std::vector<int> flow(m, 0);
    int value = 0;
    while (value <= limit) {
        std::vector<int> via(n, -1), from(n, -1);
        std::deque<int> q{s};
        from[s] = s;
        while (!q.empty() && from[t] < 0) {
            int v = q.front();
            q.pop_front();
            for (auto [w, id] : g.out[v]) {
                if (from[w] >= 0) continue;
                const int dir = (arcs[id].first == v) ? 1 : -1;
                if (flow[id] == dir) continue;  // saturated in this direction
                from[w] = v;
                via[w] = id;
                q.push_back(w);
            }
        }
        if (from[t] < 0) break;
        for (int w = t; w != s; w = from[w]) {
            const int id = via[w];
            const int dir = (arcs[id].first == from[w]) ? 1 : -1;
            flow[id] += dir;
        }
        ++value;
    }
    return value;
}

}  // namespace perc
