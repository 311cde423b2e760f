#include "perc/board.hpp"

#include <algorithm>
#include <cstdio>
#include <deque>
#include <sstream>

#include "perc/union_find.hpp"

namespace perc {

int Coord::norm_inf() const {
    int m = 0;
    for (int x : c) m = std::max(m, std::abs(x));
    return m;
}

TreeSpec TreeSpec::regular(int d) {
    TreeSpec s;
    s.shape = Shape::Regular;
    s.d = d;
    s.root_type = VertexType::None;
    return s;
}

TreeSpec TreeSpec::bi_regular(int a, int b, VertexType root_type) {
    TreeSpec s;
    s.shape = Shape::BiRegular;
    s.a = a;
    s.b = b;
    s.root_type = root_type;
    return s;
}

int TreeSpec::degree(VertexType t) const {
    if (is_regular()) return d;
    return t == VertexType::TypeII ? b : a;
}

void TreeSpec::validate() const {
    if (is_regular()) {
        if (d < 2) throw BoardError("regular tree needs d >= 2");
        return;
    }
    if (a < 2) throw BoardError("bi-regular tree needs a >= 2");
    if (a > b) throw BoardError("bi-regular tree needs a <= b");
    if (root_type == VertexType::None) throw BoardError("bi-regular tree needs a root type");
}

namespace {

std::string hex64(std::uint64_t h) {
    char buf[17];
    std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
    return buf;
}

std::uint64_t fnv1a(std::uint64_t h, std::uint64_t x) {
    for (int i = 0; i < 8; ++i) {
        h ^= (x >> (8 * i)) & 0xff;
        h *= 0x100000001b3ULL;
    }
    return h;
}

}  // namespace

void Board::finalize(std::vector<VertexId> boundary) {
    const int n = static_cast<int>(incident_.size());
    std::sort(boundary.begin(), boundary.end());
    boundary.erase(std::unique(boundary.begin(), boundary.end()), boundary.end());
    boundary_ = std::move(boundary);
    is_boundary_.assign(n, 0);
    for (VertexId v : boundary_) {
        if (v < 0 || v >= n) throw BoardError("boundary vertex out of range");
        is_boundary_[v] = 1;
    }
    validate();
}

void Board::validate() const {
    const int n = num_vertices();
    if (n == 0) throw BoardError("board has no vertices");
    if (root_ < 0 || root_ >= n) throw BoardError("root out of range");
    for (const Edge& e : edges_) {
        if (e.u < 0 || e.u >= n || e.v < 0 || e.v >= n) throw BoardError("edge endpoint out of range");
        if (e.u == e.v) throw BoardError("loops are not allowed");
    }
    if (n == 1) return;
    if (is_boundary_[root_]) throw BoardError("root lies on the boundary");
    if (boundary_.empty()) throw BoardError("board has an empty boundary");
    for (VertexId v : boundary_)
        if (incident_[v].empty()) throw BoardError("boundary vertex has degree 0");
    UnionFind uf(n);
    int comps = n;
    for (const Edge& e : edges_) comps -= uf.unite(e.u, e.v) ? 1 : 0;
    if (comps != 1) throw BoardError("board is not connected");
}

Board Board::generic(int num_vertices, std::vector<Edge> edges, VertexId root,
                     std::vector<VertexId> boundary) {
    if (num_vertices < 1) throw BoardError("board has no vertices");
    Board b;
    b.kind_ = BoardKind::Generic;
    b.edges_ = std::move(edges);
    b.incident_.assign(num_vertices, {});
    for (EdgeId i = 0; i < static_cast<EdgeId>(b.edges_.size()); ++i) {
        const Edge& e = b.edges_[i];
        if (e.u < 0 || e.u >= num_vertices || e.v < 0 || e.v >= num_vertices)
            throw BoardError("edge endpoint out of range");
        b.incident_[e.u].push_back(i);
        if (e.v != e.u) b.incident_[e.v].push_back(i);
    }
    b.root_ = root;
    b.finalize(std::move(boundary));

    std::uint64_t h = 0xcbf29ce484222325ULL;
    h = fnv1a(h, static_cast<std::uint64_t>(num_vertices));
    h = fnv1a(h, static_cast<std::uint64_t>(root));
    for (const Edge& e : b.edges_) h = fnv1a(h, (static_cast<std::uint64_t>(e.u) << 32) | e.v);
    for (VertexId v : b.boundary_) h = fnv1a(h, static_cast<std::uint64_t>(v) + (1ULL << 40));
    b.id_ = "generic-" + hex64(h);
    return b;
}

std::optional<VertexId> Board::vertex_at(const Coord& x) const {
    if (kind_ != BoardKind::LatticeWindow || x.dim() != dim_) return std::nullopt;
    const int side = 2 * radius_ + 1;
    VertexId idx = 0;
    for (int i = 0; i < dim_; ++i) {
        if (x[i] < -radius_ || x[i] > radius_) return std::nullopt;
        idx = idx * side + (x[i] + radius_);
    }
    return idx;
}

std::optional<EdgeId> Board::edge_between(VertexId a, VertexId b) const {
    for (EdgeId e : incident_.at(a))
        if (edges_[e].other(a) == b) return e;
    return std::nullopt;
}

Board build_lattice_window(int d, int r, const Coord& root) {
    if (d < 1) throw BoardError("dimension must be >= 1");
    if (r < 1) throw BoardError("radius must be >= 1");
    if (root.dim() != d) throw BoardError("root dimension mismatch");
    if (root.norm_inf() >= r) throw BoardError("root must lie strictly inside the window");

    Board b;
    b.kind_ = BoardKind::LatticeWindow;
    b.dim_ = d;
    b.radius_ = r;
    const int side = 2 * r + 1;
    int n = 1;
    for (int i = 0; i < d; ++i) n *= side;
    b.coords_.resize(n);
    b.incident_.assign(n, {});
    std::vector<VertexId> boundary;
    for (VertexId v = 0; v < n; ++v) {
        std::vector<int> c(d);
        int rem = v;
        for (int i = d - 1; i >= 0; --i) {
            c[i] = rem % side - r;
            rem /= side;
        }
        b.coords_[v] = Coord(std::move(c));
        if (b.coords_[v].norm_inf() == r) boundary.push_back(v);
    }
    int stride = n;
    std::vector<int> strides(d);
    for (int i = 0; i < d; ++i) {
        stride /= side;
        strides[i] = stride;
    }
    for (VertexId v = 0; v < n; ++v) {
        for (int i = 0; i < d; ++i) {
            if (b.coords_[v][i] == r) continue;
            const VertexId w = v + strides[i];
            const EdgeId e = static_cast<EdgeId>(b.edges_.size());
            b.edges_.push_back({v, w});
            b.incident_[v].push_back(e);
            b.incident_[w].push_back(e);
        }
    }
    b.root_ = *b.vertex_at(root);
    b.finalize(std::move(boundary));

    std::ostringstream id;
    id << "lattice-d" << d << "-r" << r << "-root";
    for (int i = 0; i < d; ++i) id << (i ? "," : "") << root[i];
    b.id_ = id.str();
    return b;
}

Board build_tree(const TreeSpec& spec, int h) {
    spec.validate();
    if (h < 1) throw BoardError("tree height must be >= 1");
    Board b;
    b.kind_ = BoardKind::Tree;
    b.tree_ = spec;
    b.radius_ = h;
    const bool typed = !spec.is_regular();
    auto child_type = [&](VertexType t) {
        if (!typed) return VertexType::None;
        return t == VertexType::TypeI ? VertexType::TypeII : VertexType::TypeI;
    };

    b.incident_.push_back({});
    b.depth_.push_back(0);
    b.parent_.push_back(kNoVertex);
    if (typed) b.types_.push_back(spec.root_type);
    std::vector<VertexId> boundary;
    std::deque<VertexId> queue{0};
    while (!queue.empty()) {
        const VertexId v = queue.front();
        queue.pop_front();
        if (b.depth_[v] == h) {
            boundary.push_back(v);
            continue;
        }
        const VertexType t = typed ? b.types_[v] : VertexType::None;
        const int children = spec.degree(t) - (v == 0 ? 0 : 1);
        for (int i = 0; i < children; ++i) {
            const VertexId w = static_cast<VertexId>(b.incident_.size());
            const EdgeId e = static_cast<EdgeId>(b.edges_.size());
            b.incident_.push_back({e});
            b.incident_[v].push_back(e);
            b.edges_.push_back({v, w});
            b.depth_.push_back(b.depth_[v] + 1);
            b.parent_.push_back(v);
            if (typed) b.types_.push_back(child_type(t));
            queue.push_back(w);
        }
    }
    b.root_ = 0;
    b.finalize(std::move(boundary));

    std::ostringstream id;
    if (spec.is_regular()) {
        id << "tree-regular-d" << spec.d << "-h" << h;
    } else {
        id << "tree-biregular-a" << spec.a << "-b" << spec.b << "-"
           << (spec.root_type == VertexType::TypeII ? "II" : "I") << "-h" << h;
    }
    b.id_ = id.str();
    return b;
}

DualEdgeCoord dual_of(const Board& w, EdgeId e) {
    if (w.kind() != BoardKind::LatticeWindow || w.dimension() != 2)
        throw BoardError("dual coordinates need a 2-D lattice window");
    const Edge& ed = w.edge(e);
    const Coord& a = w.coord(ed.u);
    const Coord& b = w.coord(ed.v);
    DualEdgeCoord d;
    d.x2 = a[0] + b[0];
    d.y2 = a[1] + b[1];
    d.orientation = (a[1] == b[1]) ? DualEdgeCoord::Orientation::Horizontal
                                   : DualEdgeCoord::Orientation::Vertical;
    return d;
}

EdgeId edge_from_dual(const Board& w, const DualEdgeCoord& d) {
    if (w.kind() != BoardKind::LatticeWindow || w.dimension() != 2)
        throw BoardError("dual coordinates need a 2-D lattice window");
    const bool hx = (d.x2 & 1) != 0;
    const bool hy = (d.y2 & 1) != 0;
    if (hx == hy) throw BoardError("dual coordinate must have exactly one half-integer component");
    Coord a, b;
    if (hx) {
        a = Coord{(d.x2 - 1) / 2, d.y2 / 2};
        b = Coord{(d.x2 + 1) / 2, d.y2 / 2};
    } else {
        a = Coord{d.x2 / 2, (d.y2 - 1) / 2};
        b = Coord{d.x2 / 2, (d.y2 + 1) / 2};
    }
    auto va = w.vertex_at(a);
    auto vb = w.vertex_at(b);
    if (!va || !vb) throw BoardError("dual coordinate outside the window");
    return *w.edge_between(*va, *vb);
}

Board contract_boundary(const Board& b, std::vector<EdgeId>* origin) {
    if (b.boundary().empty()) throw BoardError("cannot contract an empty boundary");
    std::vector<VertexId> map(b.num_vertices(), kNoVertex);
    int next = 0;
    for (VertexId v = 0; v < b.num_vertices(); ++v)
        if (!b.is_boundary(v)) map[v] = next++;
    const VertexId u0 = next;
    for (VertexId v : b.boundary()) map[v] = u0;
    std::vector<Edge> edges;
    if (origin) origin->clear();
    for (EdgeId e = 0; e < b.num_edges(); ++e) {
        const VertexId x = map[b.edge(e).u], y = map[b.edge(e).v];
        if (x == y) continue;
        edges.push_back({x, y});
        if (origin) origin->push_back(e);
    }
    return Board::generic(u0 + 1, std::move(edges), map[b.root()], {u0});
}

}  // namespace perc
