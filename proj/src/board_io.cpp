#include "perc/board_io.hpp"

#include <fstream>
#include <sstream>

namespace perc {

using nlohmann::json;

namespace {

const char* kind_name(BoardKind k) {
    switch (k) {
        case BoardKind::LatticeWindow: return "lattice-window";
        case BoardKind::Tree: return "tree";
        case BoardKind::Generic: return "generic";
    }
    return "generic";
}

template <class T>
T field(const json& j, const char* name, const char* where) {
    if (!j.contains(name)) throw BoardError(std::string(where) + ": missing field '" + name + "'");
    try {
        return j.at(name).get<T>();
    } catch (const json::exception& e) {
        throw BoardError(std::string(where) + ": field '" + name + "' has the wrong type");
    }
}

}  // namespace

json board_to_json(const Board& b) {
    json j;
    j["kind"] = kind_name(b.kind());
    j["id"] = b.id();
    json params = json::object();
    if (b.kind() == BoardKind::LatticeWindow) {
        params["d"] = b.dimension();
        params["r"] = b.radius();
        params["root"] = b.coord(b.root()).c;
        json coords = json::array();
        for (VertexId v = 0; v < b.num_vertices(); ++v) coords.push_back(b.coord(v).c);
        j["coords"] = coords;
    } else if (b.kind() == BoardKind::Tree) {
        const TreeSpec& s = *b.tree_spec();
        params["h"] = b.tree_height();
        if (s.is_regular()) {
            params["shape"] = "regular";
            params["d"] = s.d;
        } else {
            params["shape"] = "bi-regular";
            params["a"] = s.a;
            params["b"] = s.b;
            params["root_type"] = s.root_type == VertexType::TypeII ? "II" : "I";
        }
    }
    j["params"] = params;
    j["vertices"] = b.num_vertices();
    json edges = json::array();
    for (const Edge& e : b.edges()) edges.push_back({e.u, e.v});
    j["edges"] = edges;
    j["root"] = b.root();
    j["boundary"] = b.boundary();
    return j;
}

Board board_from_json(const json& j) {
    if (!j.is_object()) throw BoardError("board: expected an object");
    const std::string kind = field<std::string>(j, "kind", "board");
    Board b = [&]() -> Board {
        if (kind == "lattice-window") {
            const json& p = j.contains("params") ? j["params"] : json::object();
            const int d = field<int>(p, "d", "board.params");
            const int r = field<int>(p, "r", "board.params");
            std::vector<int> root = p.contains("root") ? field<std::vector<int>>(p, "root", "board.params")
                                                       : std::vector<int>(d, 0);
            return build_lattice_window(d, r, Coord(root));
        }
        if (kind == "tree") {
            const json& p = j.contains("params") ? j["params"] : json::object();
            const int h = field<int>(p, "h", "board.params");
            const std::string shape = p.value("shape", std::string("regular"));
            if (shape == "regular") return build_tree(TreeSpec::regular(field<int>(p, "d", "board.params")), h);
            if (shape == "bi-regular") {
                const std::string rt = p.value("root_type", std::string("I"));
                if (rt != "I" && rt != "II") throw BoardError("board.params: root_type must be \"I\" or \"II\"");
                return build_tree(TreeSpec::bi_regular(field<int>(p, "a", "board.params"),
                                                       field<int>(p, "b", "board.params"),
                                                       rt == "II" ? VertexType::TypeII : VertexType::TypeI),
                                  h);
            }
            throw BoardError("board.params: unknown tree shape '" + shape + "'");
        }
        if (kind == "generic") {
            const int n = field<int>(j, "vertices", "board");
            std::vector<Edge> edges;
            const json& je = j.contains("edges") ? j["edges"] : json();
            if (!je.is_array()) throw BoardError("board: missing field 'edges'");
            for (std::size_t i = 0; i < je.size(); ++i) {
                const json& e = je[i];
                if (!e.is_array() || e.size() != 2 || !e[0].is_number_integer() || !e[1].is_number_integer())
                    throw BoardError("board.edges[" + std::to_string(i) + "]: expected a pair of vertex indices");
                edges.push_back({e[0].get<int>(), e[1].get<int>()});
            }
            return Board::generic(n, std::move(edges), field<int>(j, "root", "board"),
                                  field<std::vector<int>>(j, "boundary", "board"));
        }
        throw BoardError("board: unknown kind '" + kind + "'");
    }();

    if (kind != "generic" && j.contains("edges")) {
        const json& je = j["edges"];
        bool same = je.is_array() && static_cast<int>(je.size()) == b.num_edges();
        for (int i = 0; same && i < b.num_edges(); ++i)
            same = je[i].is_array() && je[i].size() == 2 && je[i][0] == b.edge(i).u && je[i][1] == b.edge(i).v;
        if (!same) throw BoardError("board.edges: listed edges disagree with the generated " + kind);
    }
    return b;
}

Board load_board_file(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) throw BoardError("cannot open board file " + path.string());
    json j;
    try {
        j = json::parse(in);
    } catch (const json::parse_error& e) {
        throw BoardError(path.string() + ": " + e.what());
    }
    try {
        return board_from_json(j);
    } catch (const BoardError& e) {
        throw BoardError(path.string() + ": " + e.what());
    }
}

void save_board_file(const Board& b, const std::filesystem::path& path) {
    std::ofstream out(path);
    if (!out) throw BoardError("cannot write board file " + path.string());
    out << board_to_json(b).dump(2) << "\n";
}

}  // namespace perc
