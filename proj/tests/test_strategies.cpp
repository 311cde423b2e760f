#include <doctest.h>

#include <set>

#include "perc/harness.hpp"
#include "perc/registry.hpp"
#include "perc/strategies.hpp"
#include "perc/transcript.hpp"

using namespace perc;

namespace {

std::shared_ptr<const Board> window(int r) {
    return std::make_shared<const Board>(build_lattice_window(2, r, Coord{0, 0}));
}

}  // namespace

TEST_CASE("registry builds every named strategy that fits the board") {
    auto w = window(3);
    const GameConfig cfg{1, 2, Player::Maker};
    for (const char* n : {"first-unclaimed", "greedy", "random(7)", "solver-optimal", "straight-line", "spiral"}) {
        CAPTURE(n);
        CHECK(make_strategy(n, w, cfg, Player::Maker));
    }
    CHECK(make_strategy("breaker-annulus(1)", window(4), GameConfig{1, 2, Player::Maker}, Player::Breaker));
    CHECK_THROWS_AS(make_strategy("nope", w, cfg, Player::Maker), std::invalid_argument);
    CHECK_THROWS_AS(make_strategy("random(x)", w, cfg, Player::Maker), std::invalid_argument);
    CHECK_THROWS_AS(make_strategy("maker-column", w, cfg, Player::Breaker), std::invalid_argument);
    CHECK_THROWS_AS(make_strategy("tree-greedy", w, cfg, Player::Maker), BoardError);
    CHECK_THROWS_AS(make_strategy("box-maker", w, cfg, Player::Maker), std::invalid_argument);
    const StrategySpec s = parse_strategy_name("breaker-annulus(3)");
    CHECK(s.base == "breaker-annulus");
    CHECK(s.arg == "3");
}

TEST_CASE("random strategy is deterministic per seed") {
    auto w = window(3);
    const GameConfig cfg{1, 1, Player::Maker};
    RandomStrategy a(5), b(5), c(6);
    GreedyPath g1, g2;
    MatchResult m1 = play_match(a, g1, cfg, w, 200);
    MatchResult m2 = play_match(b, g2, cfg, w, 200);
    CHECK(to_text(m1.transcript) == to_text(m2.transcript));
    GreedyPath g3;
    MatchResult m3 = play_match(c, g3, cfg, w, 200);
    CHECK(to_text(m1.transcript) != to_text(m3.transcript));
}

TEST_CASE("scripts follow rays and spirals from the root") {
    Board w = build_lattice_window(2, 3, Coord{0, 0});
    auto line = straight_line_script(w);
    CHECK(line.size() == 3);
    VertexId v = w.root();
    for (EdgeId e : line) {
        VertexId u = w.edge(e).other(v);
        CHECK(w.coord(u)[0] == w.coord(v)[0] + 1);
        v = u;
    }
    CHECK(w.is_boundary(v));
    auto sp = spiral_script(w);
    std::set<EdgeId> distinct(sp.begin(), sp.end());
    CHECK(distinct.size() == sp.size());
    CHECK(sp.size() > line.size());
}

TEST_CASE("greedy Maker wins a (1,1) game on a 3x3 window against first-unclaimed") {
    GreedyPath g;
    FirstUnclaimed f;
    MatchResult m = play_match(g, f, GameConfig{1, 1, Player::Maker}, window(1), 100);
    REQUIRE(m.winner);
    CHECK(*m.winner == Player::Maker);
}

TEST_CASE("tree-greedy Breaker beats every Maker on a 3-regular tree at (1,2)") {
    auto t = std::make_shared<const Board>(build_tree(TreeSpec::regular(3), 4));
    TreeGreedy tg;
    StrategyCheck r = check_strategy_vs_exhaustive(tg, Player::Breaker, t, GameConfig{1, 2, Player::Maker});
    CHECK(r.never_lost);
    CHECK(r.complete);
    const auto dec = decide_tree(TreeSpec::regular(3), 1, 2);
    REQUIRE(dec.round_bound);
    CHECK(r.max_rounds_to_win <= *dec.round_bound);
}

TEST_CASE("solver-optimal never loses a won position") {
    auto w = window(1);
    SolverOptimal so;
    StrategyCheck r = check_strategy_vs_exhaustive(so, Player::Maker, w, GameConfig{1, 1, Player::Maker});
    CHECK(r.never_lost);
    CHECK(r.complete);
}

TEST_CASE("maker-column wins against every Breaker on a small window") {
    auto w = window(2);
    const GameConfig cfg{2, 1, Player::Maker};
    MakerColumn mc(*w, cfg);
    CHECK(mc.column().size() == 2);
    StrategyCheck r = check_strategy_vs_exhaustive(mc, Player::Maker, w, cfg);
    CHECK(r.never_lost);
    CHECK(r.complete);
}

TEST_CASE("path-colouring keeps its invariant against every short Breaker line") {
    auto w = window(2);
    const GameConfig cfg{1, 1, Player::Maker};
    PathColouringMaker pc(*w, cfg);
    ExhaustiveOptions opt;
    opt.max_time = 7;
    opt.invariant = [](const GameState& s) { return PathColouringMaker::colouring_of(s).invariant_holds(); };
    StrategyCheck r = check_strategy_vs_exhaustive(pc, Player::Maker, w, cfg, opt);
    CHECK(r.never_lost);
    CHECK(r.positions > 0);
}

TEST_CASE("path-colouring rejects q >= d") {
    auto w = window(2);
    CHECK_THROWS(PathColouringMaker(*w, GameConfig{2, 2, Player::Maker}));
}

TEST_CASE("breaker-annulus answers with its full quota") {
    auto w = window(5);
    const GameConfig cfg{1, 2, Player::Maker};
    BreakerAnnulus ba(*w, cfg, 2);
    CHECK(ba.geometry().outer_radius() == 4);
    ScriptedStrategy mk("straight-line", straight_line_script(*w));
    MatchResult m = play_match(mk, ba, cfg, w, 400);
    REQUIRE(m.winner);
    CHECK(*m.winner == Player::Breaker);
    CHECK(m.reason != "forfeit");
}
