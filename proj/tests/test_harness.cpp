#include <doctest.h>

#include "perc/harness.hpp"
#include "perc/strategies.hpp"
#include "perc/transcript.hpp"

using namespace perc;

namespace {

// Unmemoized count of adversary-to-move nodes with a deterministic strategy.
std::uint64_t count_nodes(Strategy& st, Player role, GameState s) {
    while (!s.decided() && !s.exhausted() && s.to_move() == role) {
        TurnContext ctx;
        ctx.role = role;
        ctx.quota = std::min(s.remaining_in_turn(), s.num_unclaimed());
        const auto adv = s.last_batch(opponent(role));
        ctx.adversary = adv;
        for (EdgeId e : st.next_edges(s, ctx)) {
            if (s.decided()) break;
            s.apply(role, e);
        }
    }
    if (s.decided() || s.exhausted()) return 0;
    std::uint64_t n = 1;
    const auto pool = s.unclaimed();
    const int quota = std::min(s.remaining_in_turn(), s.num_unclaimed());
    const int m = static_cast<int>(pool.size());
    for (std::uint64_t mask = 0; mask < (1ULL << m); ++mask) {
        if (std::popcount(mask) != quota) continue;
        GameState t = s;
        for (int i = 0; i < m; ++i)
            if ((mask >> i & 1) && !t.decided()) t.apply(opponent(role), pool[i]);
        n += count_nodes(st, role, t);
    }
    return n;
}

}  // namespace

TEST_CASE("tree node count matches an unmemoized enumeration") {
    auto b = std::make_shared<const Board>(Board::generic(5, {{0, 1}, {1, 4}, {0, 2}, {2, 4}, {1, 2}, {0, 3}, {3, 4}}, 0, {4}));
    int compared = 0;
    for (int p = 1; p <= 2; ++p)
        for (int q = 1; q <= 2; ++q) {
            const GameConfig cfg{p, q, Player::Maker};
            GreedyPath g;
            StrategyCheck r = check_strategy_vs_exhaustive(g, Player::Maker, b, cfg);
            if (!r.never_lost) continue;  // the search stops at the first loss
            GreedyPath g2;
            CHECK(r.tree_nodes == count_nodes(g2, Player::Maker, GameState(b, cfg)));
            CHECK(r.positions <= static_cast<std::int64_t>(r.tree_nodes));
            ++compared;
        }
    CHECK(compared > 0);
}

TEST_CASE("a losing strategy yields a replayable counterexample") {
    auto w = std::make_shared<const Board>(build_lattice_window(2, 1, Coord{0, 0}));
    FirstUnclaimed f;
    StrategyCheck r = check_strategy_vs_exhaustive(f, Player::Breaker, w, GameConfig{1, 1, Player::Maker});
    CHECK_FALSE(r.never_lost);
    REQUIRE_FALSE(r.counterexample.empty());
    GameState s = replay(w, parse_transcript(r.counterexample));
    CHECK(s.maker_won());
}

TEST_CASE("position cap marks the check incomplete") {
    auto w = std::make_shared<const Board>(build_lattice_window(2, 2, Coord{0, 0}));
    SolverOptimal so;
    ExhaustiveOptions opt;
    opt.max_positions = 3;
    StrategyCheck r = check_strategy_vs_exhaustive(so, Player::Maker, w, GameConfig{1, 1, Player::Maker}, opt);
    CHECK_FALSE(r.complete);
    CHECK(r.cut_lines > 0);
}

TEST_CASE("suite output is deterministic for a seed and independent of jobs") {
    const nlohmann::json grid = {{"cells", {{{"radius", 3}, {"samples", 500}}, {{"radius", 2}, {"samples", 300}}}}};
    auto a = run_suite("dual-cycle", grid, 42, 1).to_json();
    auto b = run_suite("dual-cycle", grid, 42, 4).to_json();
    auto c = run_suite("dual-cycle", grid, 43, 1).to_json();
    CHECK(a == b);
    CHECK(a["pass"] == true);
    CHECK(a != c);
    const nlohmann::json cr = {{"cells", {{{"radius", 3}, {"steps", 2000}}}}};
    CHECK(run_suite("colour-repair", cr, 7, 1).to_json() == run_suite("colour-repair", cr, 7, 2).to_json());
}

TEST_CASE("every suite has a default grid and bad grids are rejected") {
    for (const std::string& s : suite_names()) CHECK(default_grid(s).at("cells").size() > 0);
    CHECK_THROWS_AS(default_grid("nope"), std::invalid_argument);
    CHECK_THROWS_AS(run_suite("tree-formula", nlohmann::json{{"cells", {{{"d", 3}}}}}, 1, 1), std::invalid_argument);
    CHECK_THROWS_AS(run_suite("tree-formula", nlohmann::json{{"cells", 3}}, 1, 1), std::invalid_argument);
}

TEST_CASE("small cells of each property pass") {
    CHECK(check_box_game(1, 1, 12, BoxMode{}).all_pass());
    CHECK(check_biregular(2, 3, 1, 1, AdversaryMode::Exhaustive, 20).all_pass());
    CHECK(check_lehman(4, {1}).all_pass());
    CHECK(check_monotonicity(4, 2, 2).all_pass());
    CHECK(check_double_response(1, 2, 3).all_pass());
    CHECK(check_annulus(1, 2, 5, "straight-line").all_pass());
    CHECK(check_path_colouring(2, 1, 1, 5).all_pass());
}

TEST_CASE("arena replay reproduces the final frontier") {
    const TreeSpec spec = TreeSpec::bi_regular(2, 3, VertexType::TypeI);
    ArenaRun run = play_arena(spec, 2, 2, arena_random(3), arena_greedy(), 30);
    TreeArena ar = replay_arena(spec, run.transcript);
    CHECK(ar.breaker_won() == run.breaker_won);
    CHECK(run.transcript.board_id == arena_id(spec));
    CHECK(arena_id(spec) == "arena-biregular-a2-b3-I");
}
