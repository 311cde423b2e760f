#pragma once

#include <filesystem>

#include <json.hpp>

#include "perc/board.hpp"

namespace perc {

// Board files: {"kind", "params", "vertices", "edges", "root", "boundary"}.
// Generated kinds ("lattice-window", "tree") may omit everything but kind+params.
nlohmann::json board_to_json(const Board& b);
Board board_from_json(const nlohmann::json& j);

Board load_board_file(const std::filesystem::path& path);
void save_board_file(const Board& b, const std::filesystem::path& path);

}  // namespace perc
