#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace perc {

using VertexId = int;
using EdgeId = int;

// Thrown for malformed boards and violated construction preconditions.
struct BoardError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct Coord {
    std::vector<int> c;

    Coord() = default;
    Coord(std::initializer_list<int> v) : c(v) {}
    explicit Coord(std::vector<int> v) : c(std::move(v)) {}

    int dim() const { return static_cast<int>(c.size()); }
    int operator[](int i) const { return c[i]; }
    int norm_inf() const;
    bool operator==(const Coord&) const = default;
    auto operator<=>(const Coord&) const = default;
};

struct Edge {
    VertexId u = 0;
    VertexId v = 0;
    VertexId other(VertexId x) const { return x == u ? v : u; }
};

enum class BoardKind { LatticeWindow, Tree, Generic };

enum class VertexType : std::uint8_t { None, TypeI, TypeII };

struct TreeSpec {
    enum class Shape { Regular, BiRegular } shape = Shape::Regular;
    int d = 3;          // regular degree
    int a = 2, b = 3;   // Type I vertices have degree a, Type II degree b
    VertexType root_type = VertexType::TypeI;

    static TreeSpec regular(int d);
    static TreeSpec bi_regular(int a, int b, VertexType root_type);

    bool is_regular() const { return shape == Shape::Regular; }
    int degree(VertexType t) const;
    void validate() const;
};

// Immutable rooted multigraph with a boundary vertex set.
class Board {
public:
    static Board generic(int num_vertices, std::vector<Edge> edges, VertexId root,
                         std::vector<VertexId> boundary);

    BoardKind kind() const { return kind_; }
    const std::string& id() const { return id_; }

    int num_vertices() const { return static_cast<int>(incident_.size()); }
    int num_edges() const { return static_cast<int>(edges_.size()); }
    const Edge& edge(EdgeId e) const { return edges_.at(e); }
    const std::vector<Edge>& edges() const { return edges_; }
    std::span<const EdgeId> incident(VertexId v) const { return incident_.at(v); }
    int degree(VertexId v) const { return static_cast<int>(incident_.at(v).size()); }

    VertexId root() const { return root_; }
    const std::vector<VertexId>& boundary() const { return boundary_; }
    bool is_boundary(VertexId v) const { return is_boundary_.at(v) != 0; }

    // Lattice windows.
    int dimension() const { return dim_; }
    int radius() const { return radius_; }
    const Coord& coord(VertexId v) const { return coords_.at(v); }
    std::optional<VertexId> vertex_at(const Coord& x) const;
    std::optional<EdgeId> edge_between(VertexId a, VertexId b) const;

    // Trees.
    const std::optional<TreeSpec>& tree_spec() const { return tree_; }
    int tree_height() const { return radius_; }
    int depth(VertexId v) const { return depth_.at(v); }
    VertexType vertex_type(VertexId v) const { return types_.empty() ? VertexType::None : types_.at(v); }
    VertexId parent(VertexId v) const { return parent_.at(v); }
    // Edge joining v to its parent (trees only).
    EdgeId parent_edge(VertexId v) const { return v == root_ ? -1 : v - 1; }

private:
    friend Board build_lattice_window(int, int, const Coord&);
    friend Board build_tree(const TreeSpec&, int);

    Board() = default;
    void finalize(std::vector<VertexId> boundary);
    void validate() const;

    BoardKind kind_ = BoardKind::Generic;
    std::string id_;
    std::vector<Edge> edges_;
    std::vector<std::vector<EdgeId>> incident_;
    VertexId root_ = 0;
    std::vector<VertexId> boundary_;
    std::vector<char> is_boundary_;

    int dim_ = 0;
    int radius_ = 0;
    std::vector<Coord> coords_;
    std::optional<TreeSpec> tree_;
    std::vector<int> depth_;
    std::vector<VertexType> types_;
    std::vector<VertexId> parent_;
};

// Vertices {‖v‖∞ ≤ r} in row-major order (last coordinate fastest); edges are
// emitted per vertex, axis ascending, towards the +e_i neighbour.
Board build_lattice_window(int d, int r, const Coord& root);

// BFS-ordered truncation at height h; edge i joins vertex i+1 to its parent.
Board build_tree(const TreeSpec& spec, int h);

struct DualEdgeCoord {
    enum class Orientation { Horizontal, Vertical } orientation = Orientation::Horizontal;
    // Doubled midpoint coordinates, so half-integers become odd integers.
    int x2 = 0, y2 = 0;

    double x() const { return x2 / 2.0; }
    double y() const { return y2 / 2.0; }
    bool operator==(const DualEdgeCoord&) const = default;
};

DualEdgeCoord dual_of(const Board& window, EdgeId e);
EdgeId edge_from_dual(const Board& window, const DualEdgeCoord& d);

// Merge the boundary into one vertex u0 (the last vertex); loops are dropped and
// parallel edges kept. `origin[i]` receives the source edge of result edge i.
Board contract_boundary(const Board& b, std::vector<EdgeId>* origin = nullptr);

inline constexpr VertexId kNoVertex = -1;

}  // namespace perc
