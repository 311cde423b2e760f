#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "perc/engine.hpp"
#include "perc/strategy.hpp"

namespace perc {

struct TranscriptError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct TranscriptEntry {
    int time = 0;  // t after the move; for a forfeit, t at the forfeit
    Player player = Player::Maker;
    EdgeId edge = -1;
    bool forfeit = false;
};

struct Transcript {
    std::string board_id;
    GameConfig config;
    std::vector<EdgeId> head_start;
    std::vector<TranscriptEntry> entries;

    std::vector<EdgeId> edges_of(Player who) const;
};

// Header: `board=<id> p=<int> q=<int> [first=<M|B>] [head=<e,e,...>]`;
// moves: `t=<int> <M|B> e=<idx>`; forfeits: `t=<int> <M|B> forfeit`; '#' comments.
std::string to_text(const Transcript& t);
Transcript parse_transcript(std::string_view text);
Transcript read_transcript_file(const std::string& path);

Transcript transcript_of(const GameState& s);

// Replays all moves (stopping at a forfeit); checks the board id.
GameState replay(std::shared_ptr<const Board> board, const Transcript& t);

struct MatchResult {
    Transcript transcript;
    std::optional<Player> winner;
    std::string reason;  // "maker-path", "breaker-cut", "forfeit", "horizon", "exhausted"
    int rounds = 0;
    std::optional<GameState> final_state;
};

// Alternates turns until a win predicate fires, a forfeit, exhaustion, or
// `horizon` rounds (one round = one turn of each player) have been played.
MatchResult play_match(Strategy& maker, Strategy& breaker, const GameConfig& cfg,
                       std::shared_ptr<const Board> board, int horizon,
                       std::span<const EdgeId> head_start = {});

}  // namespace perc
