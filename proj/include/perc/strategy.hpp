#pragma once

#include <memory>
#include <span>
#include <string>
#include <vector>

#include "perc/engine.hpp"

namespace perc {

struct TurnContext {
    Player role = Player::Maker;
    int quota = 0;                        // edges to return: min(turn quota, unclaimed)
    std::span<const EdgeId> adversary;    // opponent's last batch, possibly empty
};

// A strategy returns `ctx.quota` distinct unclaimed edges for the current turn.
// Instances may keep state and are bound to one match at a time.
class Strategy {
public:
    virtual ~Strategy() = default;
    virtual std::string name() const = 0;
    virtual std::vector<EdgeId> next_edges(const GameState& s, const TurnContext& ctx) = 0;
};

}  // namespace perc
