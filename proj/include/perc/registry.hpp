#pragma once

#include <memory>
#include <string>
#include <string_view>
#include <vector>

#include "perc/strategies.hpp"

namespace perc {

// Parsed strategy name: `base` or `base(arg)`.
struct StrategySpec {
    std::string base;
    std::string arg;
};
StrategySpec parse_strategy_name(std::string_view name);

// Names accepted by make_strategy.
std::vector<std::string> strategy_names();

// Throws std::invalid_argument for unknown names and BoardError when the board
// or config does not fit the strategy.
std::unique_ptr<Strategy> make_strategy(std::string_view name, std::shared_ptr<const Board> board,
                                        const GameConfig& cfg, Player role);

// Strategies for the H player of the double-response game: "double-response-h"
// (exact search, the default) and "min-cut-h".
std::unique_ptr<HStrategy> make_h_strategy(std::string_view name, const StripGraph& g, int q);

}  // namespace perc
