#include "perc/dual_cycle.hpp"

#include <deque>
#include <map>

namespace perc {

namespace {

struct DualArc {
    int a = -1, b = -1;  // squares
    int w = 0;           // 1 if the dual segment crosses the root ray
};

// Squares are named by their lower-left corner (x, y) in [-r, r-1]^2.
DualArc dual_arc(const Board& w, EdgeId e) {
    const int r = w.radius();
    const Coord& p = w.coord(w.edge(e).u);
    const Coord& q = w.coord(w.edge(e).v);
    const Coord& root = w.coord(w.root());
    const int x = std::min(p[0], q[0]), y = std::min(p[1], q[1]);
    auto sq = [&](int sx, int sy) {
        if (sx < -r || sx > r - 1 || sy < -r || sy > r - 1) return -1;
        return (sx + r) * (2 * r) + (sy + r);
    };
    DualArc d;
    if (p[1] == q[1]) {  // horizontal primal: vertical dual at x + 0.5
        d.a = sq(x, y - 1);
        d.b = sq(x, y);
        d.w = (y == root[1] && x >= root[0]) ? 1 : 0;
    } else {
        d.a = sq(x - 1, y);
        d.b = sq(x, y);
    }
    return d;
}

struct ParityUF {
    std::vector<int> parent, parity;
    explicit ParityUF(int n) : parent(n), parity(n, 0) {
        for (int i = 0; i < n; ++i) parent[i] = i;
    }
    std::pair<int, int> find(int x) {
        int p = 0, y = x;
        while (parent[y] != y) {
            p ^= parity[y];
            y = parent[y];
        }
        // Path compression with parity fix-up.
        int acc = p;
        while (parent[x] != x) {
            int next = parent[x], px = parity[x];
            parent[x] = y;
            parity[x] = acc;
            acc ^= px;
            x = next;
        }
        return {y, p};
    }
};

void check_window(const Board& w) {
    if (w.kind() != BoardKind::LatticeWindow || w.dimension() != 2)
        throw BoardError("dual cycle detection needs a 2-D lattice window");
}

}  // namespace

DualCycle detect_dual_cycle(const Board& w, const std::vector<char>& destroyed) {
    check_window(w);
    const int r = w.radius();
    const int squares = 4 * r * r;
    ParityUF uf(squares);
    std::vector<DualArc> arcs(w.num_edges());
    int witness = -1;
    for (EdgeId e = 0; e < w.num_edges(); ++e) {
        if (!destroyed[e]) continue;
        arcs[e] = dual_arc(w, e);
        const DualArc& d = arcs[e];
        if (d.a < 0 || d.b < 0) continue;
        auto [ra, pa] = uf.find(d.a);
        auto [rb, pb] = uf.find(d.b);
        if (ra != rb) {
            uf.parent[ra] = rb;
            uf.parity[ra] = pa ^ pb ^ d.w;
        } else if ((pa ^ pb ^ d.w) == 1 && witness < 0) {
            witness = d.a;
        }
    }
    DualCycle out;
    if (witness < 0) return out;
    out.found = true;

    // Shortest odd closed walk from the witness square in the parity double cover.
    std::vector<std::vector<std::pair<int, EdgeId>>> adj(squares);
    for (EdgeId e = 0; e < w.num_edges(); ++e) {
        if (!destroyed[e] || arcs[e].a < 0 || arcs[e].b < 0) continue;
        adj[arcs[e].a].push_back({arcs[e].b, e});
        adj[arcs[e].b].push_back({arcs[e].a, e});
    }
    auto node = [](int s, int p) { return 2 * s + p; };
    std::vector<int> prev(2 * squares, -1);
    std::vector<EdgeId> via(2 * squares, -1);
    std::deque<int> q{node(witness, 0)};
    prev[node(witness, 0)] = node(witness, 0);
    while (!q.empty() && prev[node(witness, 1)] < 0) {
        const int x = q.front();
        q.pop_front();
        const int s = x / 2, p = x % 2;
        for (auto [t, e] : adj[s]) {
            const int y = node(t, p ^ arcs[e].w);
            if (prev[y] >= 0) continue;
            prev[y] = x;
            via[y] = e;
            q.push_back(y);
        }
    }
    std::vector<int> walk_sq{witness};
    std::vector<EdgeId> walk_e;
    for (int x = node(witness, 1); x != node(witness, 0); x = prev[x]) {
        walk_e.push_back(via[x]);
        walk_sq.push_back(prev[x] / 2);
    }
    // Split the closed walk into simple loops; one of them has odd parity.
    std::vector<int> st_sq{walk_sq[0]};
    std::vector<EdgeId> st_e;
    std::map<int, int> pos{{walk_sq[0], 0}};
    for (std::size_t i = 0; i < walk_e.size(); ++i) {
        const int s = walk_sq[i + 1];
        st_e.push_back(walk_e[i]);
        if (auto it = pos.find(s); it != pos.end()) {
            const int from = it->second;
            std::vector<EdgeId> loop(st_e.begin() + from, st_e.end());
            int parity = 0;
            for (EdgeId e : loop) parity ^= arcs[e].w;
            if (parity) {
                out.edges = loop;
                return out;
            }
            st_e.resize(from);
            while (static_cast<int>(st_sq.size()) > from + 1) {
                pos.erase(st_sq.back());
                st_sq.pop_back();
            }
        } else {
            pos[s] = static_cast<int>(st_sq.size());
            st_sq.push_back(s);
        }
    }
    out.edges = walk_e;
    return out;
}

DualCycle detect_dual_cycle(const Board& w, const std::vector<Claim>& claims) {
    std::vector<char> d(claims.size());
    for (std::size_t i = 0; i < claims.size(); ++i) d[i] = claims[i] == Claim::Destroyed;
    return detect_dual_cycle(w, d);
}

bool dual_cycle_surrounds_root(const Board& w, const std::vector<EdgeId>& edges) {
    check_window(w);
    std::map<int, int> degree;
    int parity = 0;
    for (EdgeId e : edges) {
        DualArc d = dual_arc(w, e);
        if (d.a < 0 || d.b < 0) return false;
        ++degree[d.a];
        ++degree[d.b];
        parity ^= d.w;
    }
    for (auto [s, k] : degree)
        if (k != 2) return false;
    return parity == 1;
}

bool root_cut_off(const Board& b, const std::vector<char>& destroyed) {
    if (b.is_boundary(b.root())) return false;
    std::vector<char> seen(b.num_vertices(), 0);
    std::deque<VertexId> q{b.root()};
    seen[b.root()] = 1;
    while (!q.empty()) {
        VertexId v = q.front();
        q.pop_front();
        for (EdgeId e : b.incident(v)) {
            if (destroyed[e]) continue;
            VertexId u = b.edge(e).other(v);
            if (seen[u]) continue;
            if (b.is_boundary(u)) return false;
            seen[u] = 1;
            q.push_back(u);
        }
    }
    return true;
}

}  // namespace perc
