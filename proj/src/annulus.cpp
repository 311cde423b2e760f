#include "perc/annulus.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <stdexcept>

namespace perc {

AnnulusGeometry::AnnulusGeometry(int p, int N) : p_(p), N_(N) {
    if (p < 1 || N < 1) throw std::invalid_argument("annulus geometry needs p >= 1 and N >= 1");
    const int w = width();
    strips_.resize(N);
    corners_.resize(N);
    duals_.resize(N);
    for (int k = 0; k < N; ++k) {
        std::vector<Seg> r1;
        for (int y = w * k; y <= w * (k + 1); ++y)
            for (int x = -w * k; x <= w * k; ++x) {
                if (x < w * k) r1.push_back(Seg::of({x, y}, {x + 1, y}));
                if (y < w * (k + 1)) r1.push_back(Seg::of({x, y}, {x, y + 1}));
            }
        std::erase_if(r1, [&](const Seg& s) { return inside_neighbour(s, k); });
        std::sort(r1.begin(), r1.end());
        strips_[k][0] = r1;
        for (int i = 1; i < 4; ++i) {
            strips_[k][i].clear();
            for (const Seg& s : strips_[k][i - 1]) strips_[k][i].push_back(s.rot());
        }

        std::set<P2> rverts;
        for (int y = w * k; y <= w * (k + 1); ++y)
            for (int x = -w * k; x <= w * k; ++x) {
                P2 u{x, y};
                for (int i = 0; i < 4; ++i) {
                    rverts.insert(u);
                    u = u.rot();
                }
            }
        std::vector<Seg> l;
        for (P2 u : annulus_vertices(k)) {
            if (rverts.count(u)) continue;
            for (P2 d : {P2{1, 0}, P2{-1, 0}, P2{0, 1}, P2{0, -1}}) {
                P2 v{u.x + d.x, u.y + d.y};
                if (rverts.count(v)) l.push_back(Seg::of(u, v));
            }
        }
        std::erase_if(l, [&](const Seg& s) { return inside_neighbour(s, k); });
        std::sort(l.begin(), l.end());
        l.erase(std::unique(l.begin(), l.end()), l.end());
        corners_[k] = l;

        // Dual strip: squares named by their lower-left corner.
        std::vector<std::pair<P2, P2>> dual;
        std::set<P2> squares;
        for (const Seg& s : r1) {
            std::pair<P2, P2> e = (s.a.x == s.b.x) ? std::pair{P2{s.a.x - 1, s.a.y}, P2{s.a.x, s.a.y}}
                                                   : std::pair{P2{s.a.x, s.a.y - 1}, P2{s.a.x, s.a.y}};
            dual.push_back(e);
            squares.insert(e.first);
            squares.insert(e.second);
        }
        std::map<P2, int> sid;
        for (P2 sq : squares) sid.emplace(sq, static_cast<int>(sid.size()));
        StripGraph& g = duals_[k];
        g.num_vertices = static_cast<int>(sid.size());
        g.rows = w;
        g.columns = 2 * w * k + 2;
        for (auto& [a, b] : dual) g.edges.push_back({sid[a], sid[b]});
        for (auto& [sq, id] : sid) {
            if (sq.x == -w * k - 1) g.left.push_back(id);
            if (sq.x == w * k) g.right.push_back(id);
        }
    }
}

bool AnnulusGeometry::in_annulus(P2 u, int k) const {
    const int n = u.norm_inf(), w = width();
    return k >= 0 && n >= k * w && n <= (k + 1) * w;
}

bool AnnulusGeometry::inside_neighbour(const Seg& s, int k) const {
    for (int j : {k - 1, k + 1})
        if (j >= 0 && in_annulus(s.a, j) && in_annulus(s.b, j)) return true;
    return false;
}

std::vector<P2> AnnulusGeometry::annulus_vertices(int k) const {
    std::vector<P2> out;
    const int R = (k + 1) * width();
    for (int x = -R; x <= R; ++x)
        for (int y = -R; y <= R; ++y)
            if (in_annulus({x, y}, k)) out.push_back({x, y});
    return out;
}

std::vector<Seg> AnnulusGeometry::sp_edges() const {
    std::vector<Seg> out;
    const int R = outer_radius();
    for (int x = -R; x <= R; ++x)
        for (int y = -R; y <= R; ++y) {
            if (x < R) out.push_back(Seg::of({x, y}, {x + 1, y}));
            if (y < R) out.push_back(Seg::of({x, y}, {x, y + 1}));
        }
    std::sort(out.begin(), out.end());
    return out;
}

BoundAnnulus bind_annulus(const AnnulusGeometry& g, const Board& w) {
    if (w.kind() != BoardKind::LatticeWindow || w.dimension() != 2)
        throw BoardError("annulus geometry needs a 2-D lattice window");
    const Coord& root = w.coord(w.root());
    if (root.norm_inf() + g.outer_radius() > w.radius())
        throw BoardError("window too small for the requested annuli");
    auto edge_of = [&](const Seg& s) {
        auto a = w.vertex_at(Coord{root[0] + s.a.x, root[1] + s.a.y});
        auto b = w.vertex_at(Coord{root[0] + s.b.x, root[1] + s.b.y});
        if (!a || !b) throw BoardError("annulus edge outside the window");
        return *w.edge_between(*a, *b);
    };

    BoundAnnulus out;
    out.role.assign(w.num_edges(), {});
    for (const Seg& s : g.sp_edges()) {
        EdgeId e = edge_of(s);
        out.sp.push_back(e);
        out.role[e].region = AnnulusRegion::FreeSp;
    }
    std::sort(out.sp.begin(), out.sp.end());
    auto assign = [&](EdgeId e, EdgeRole r) {
        if (out.role[e].region != AnnulusRegion::FreeSp)
            throw std::logic_error("annulus regions overlap");
        out.role[e] = r;
    };
    out.strips.resize(g.N());
    out.corners.resize(g.N());
    for (int k = 0; k < g.N(); ++k) {
        for (int i = 1; i <= 4; ++i) {
            const auto& segs = g.strip(i, k);
            for (int j = 0; j < static_cast<int>(segs.size()); ++j) {
                EdgeId e = edge_of(segs[j]);
                out.strips[k][i - 1].push_back(e);
                assign(e, {AnnulusRegion::Strip, k, i, j});
            }
        }
        const auto& cs = g.corners(k);
        for (int j = 0; j < static_cast<int>(cs.size()); ++j) {
            EdgeId e = edge_of(cs[j]);
            out.corners[k].push_back(e);
            assign(e, {AnnulusRegion::Corner, k, 0, j});
        }
    }
    return out;
}

}  // namespace perc
