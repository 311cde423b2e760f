#include <doctest.h>

#include <cmath>
#include <set>

#include "perc/board.hpp"
#include "perc/board_io.hpp"

using namespace perc;

namespace {

long ipow(long b, int e) {
    long r = 1;
    while (e-- > 0) r *= b;
    return r;
}

}  // namespace

TEST_CASE("lattice window sizes match the counting formulas") {
    for (int d = 1; d <= 3; ++d)
        for (int r = 1; r <= 3; ++r) {
            Board w = build_lattice_window(d, r, Coord(std::vector<int>(d, 0)));
            const long side = 2 * r + 1;
            CHECK(w.num_vertices() == ipow(side, d));
            CHECK(w.num_edges() == d * ipow(side, d - 1) * (side - 1));
            CHECK(static_cast<long>(w.boundary().size()) == ipow(side, d) - ipow(side - 2, d));
            CHECK(w.coord(w.root()) == Coord(std::vector<int>(d, 0)));
        }
}

TEST_CASE("window edges join lattice neighbours and the boundary is the sup-norm sphere") {
    Board w = build_lattice_window(2, 2, Coord{0, 0});
    for (const Edge& e : w.edges()) {
        const Coord& a = w.coord(e.u);
        const Coord& b = w.coord(e.v);
        CHECK(std::abs(a[0] - b[0]) + std::abs(a[1] - b[1]) == 1);
    }
    for (VertexId v = 0; v < w.num_vertices(); ++v) CHECK(w.is_boundary(v) == (w.coord(v).norm_inf() == 2));
}

TEST_CASE("off-centre root is accepted inside the window") {
    Board w = build_lattice_window(2, 2, Coord{1, 0});
    CHECK(w.coord(w.root()) == Coord{1, 0});
    CHECK_THROWS_AS(build_lattice_window(2, 2, Coord{3, 0}), BoardError);
}

TEST_CASE("regular tree truncation sizes") {
    for (int d = 3; d <= 4; ++d)
        for (int h = 1; h <= 4; ++h) {
            Board t = build_tree(TreeSpec::regular(d), h);
            // d (d-1)^{k-1} vertices at depth k.
            long edges = 0;
            for (int k = 1; k <= h; ++k) edges += d * ipow(d - 1, k - 1);
            CHECK(t.num_edges() == edges);
            CHECK(static_cast<long>(t.boundary().size()) == d * ipow(d - 1, h - 1));
            for (VertexId v = 1; v < t.num_vertices(); ++v) CHECK(t.edge(t.parent_edge(v)).other(v) == t.parent(v));
        }
}

TEST_CASE("bi-regular tree alternates vertex types") {
    Board t = build_tree(TreeSpec::bi_regular(2, 3, VertexType::TypeI), 4);
    CHECK(t.degree(t.root()) == 2);
    for (VertexId v = 1; v < t.num_vertices(); ++v) {
        CHECK(t.vertex_type(v) != t.vertex_type(t.parent(v)));
        if (!t.is_boundary(v)) CHECK(t.degree(v) == (t.vertex_type(v) == VertexType::TypeI ? 2 : 3));
    }
}

TEST_CASE("board json round trip keeps ids and structure") {
    for (const Board& b : {build_lattice_window(2, 2, Coord{0, 0}), build_tree(TreeSpec::regular(3), 3),
                           Board::generic(3, {{0, 1}, {1, 2}, {0, 2}, {0, 2}}, 0, {2})}) {
        Board c = board_from_json(board_to_json(b));
        CHECK(c.id() == b.id());
        CHECK(c.num_edges() == b.num_edges());
        for (EdgeId e = 0; e < b.num_edges(); ++e) {
            CHECK(c.edge(e).u == b.edge(e).u);
            CHECK(c.edge(e).v == b.edge(e).v);
        }
        CHECK(c.boundary() == b.boundary());
    }
}

TEST_CASE("malformed boards name the offending field") {
    auto msg = [](const nlohmann::json& j) {
        try {
            board_from_json(j);
        } catch (const BoardError& e) {
            return std::string(e.what());
        }
        return std::string();
    };
    CHECK(msg(nlohmann::json::object()).find("kind") != std::string::npos);
    CHECK(msg({{"kind", "lattice-window"}, {"params", {{"d", 2}}}}).find("'r'") != std::string::npos);
    CHECK(msg({{"kind", "generic"}, {"vertices", 2}, {"edges", {{0, 5}}}, {"root", 0}, {"boundary", {1}}}) != "");
}

TEST_CASE("generic boards reject a boundary root and loops") {
    CHECK_THROWS_AS(Board::generic(2, {{0, 1}}, 0, {0}), BoardError);
    CHECK_THROWS_AS(Board::generic(2, {{0, 0}, {0, 1}}, 0, {1}), BoardError);
}

TEST_CASE("dual coordinates are edge midpoints and invert") {
    Board w = build_lattice_window(2, 2, Coord{0, 0});
    std::set<std::pair<int, int>> seen;
    for (EdgeId e = 0; e < w.num_edges(); ++e) {
        DualEdgeCoord d = dual_of(w, e);
        const Coord& a = w.coord(w.edge(e).u);
        const Coord& b = w.coord(w.edge(e).v);
        CHECK(d.x2 == a[0] + b[0]);
        CHECK(d.y2 == a[1] + b[1]);
        CHECK(edge_from_dual(w, d) == e);
        CHECK(seen.insert({d.x2, d.y2}).second);
    }
}

TEST_CASE("contract_boundary merges the boundary and keeps parallel edges") {
    Board w = build_lattice_window(2, 1, Coord{0, 0});
    std::vector<EdgeId> origin;
    Board c = contract_boundary(w, &origin);
    // Only the four root edges survive; edges inside the boundary become loops.
    CHECK(c.num_vertices() == 2);
    CHECK(c.num_edges() == 4);
    CHECK(c.boundary().size() == 1);
    for (EdgeId e = 0; e < c.num_edges(); ++e) CHECK(w.is_boundary(w.edge(origin[e]).other(w.root())));
}
