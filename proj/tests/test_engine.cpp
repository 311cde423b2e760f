#include <doctest.h>

#include "perc/engine.hpp"
#include "perc/strategies.hpp"
#include "perc/transcript.hpp"

using namespace perc;

namespace {

std::shared_ptr<const Board> path3() {
    // 0 - 1 - 2 with 2 on the boundary, plus a detour 0 - 3 - 2.
    return std::make_shared<const Board>(Board::generic(4, {{0, 1}, {1, 2}, {0, 3}, {3, 2}}, 0, {2}));
}

}  // namespace

TEST_CASE("mover is a function of t with quotas p and q") {
    auto b = std::make_shared<const Board>(build_lattice_window(2, 2, Coord{0, 0}));
    GameState s(b, GameConfig{2, 3, Player::Maker});
    const char* expect = "MMBBBMMBBB";
    for (int t = 0; t < 10; ++t) CHECK(player_letter(s.mover_at(t)) == expect[t]);
    GameState r(b, GameConfig{2, 3, Player::Breaker});
    const char* expect_b = "BBBMMBBBMM";
    for (int t = 0; t < 10; ++t) CHECK(player_letter(r.mover_at(t)) == expect_b[t]);
}

TEST_CASE("remaining_in_turn counts down inside a turn") {
    auto b = std::make_shared<const Board>(build_lattice_window(2, 2, Coord{0, 0}));
    GameState s(b, GameConfig{2, 3, Player::Maker});
    std::vector<int> seen;
    for (int t = 0; t < 5; ++t) {
        seen.push_back(s.remaining_in_turn());
        s.apply(s.to_move(), s.unclaimed().front());
    }
    CHECK(seen == std::vector<int>{2, 1, 3, 2, 1});
}

TEST_CASE("illegal moves are rejected without changing the state") {
    GameState s(path3(), GameConfig{1, 1, Player::Maker});
    CHECK_THROWS_AS(s.apply(Player::Breaker, 0), IllegalMove);
    s.apply(Player::Maker, 0);
    CHECK_THROWS_AS(s.apply(Player::Breaker, 0), IllegalMove);
    CHECK_THROWS_AS(s.apply(Player::Breaker, 9), IllegalMove);
    CHECK(s.time() == 1);
    CHECK(s.claim(0) == Claim::Safe);
}

TEST_CASE("win predicates follow Safe paths and Destroyed cuts") {
    GameState s(path3(), GameConfig{1, 1, Player::Maker});
    s.apply(Player::Maker, 0);
    s.apply(Player::Breaker, 2);
    CHECK_FALSE(s.decided());
    s.apply(Player::Maker, 1);
    CHECK(s.maker_won());
    CHECK_FALSE(s.breaker_won());

    GameState c(path3(), GameConfig{1, 1, Player::Maker});
    c.apply(Player::Maker, 0);
    c.apply(Player::Breaker, 1);
    c.apply(Player::Maker, 2);
    c.apply(Player::Breaker, 3);
    CHECK(c.breaker_won());
}

TEST_CASE("head start edges are Safe before t = 0") {
    const std::vector<EdgeId> head{0};
    GameState s(path3(), GameConfig{1, 1, Player::Maker}, head);
    CHECK(s.time() == 0);
    CHECK(s.claim(0) == Claim::Safe);
    CHECK(s.num_unclaimed() == 3);
    const std::vector<EdgeId> dup{0, 0};
    CHECK_THROWS_AS(GameState(path3(), GameConfig{1, 1, Player::Maker}, dup), IllegalMove);
}

TEST_CASE("last_batch returns the most recent turn of a player") {
    auto b = std::make_shared<const Board>(build_lattice_window(2, 2, Coord{0, 0}));
    GameState s(b, GameConfig{1, 2, Player::Maker});
    s.apply(Player::Maker, 5);
    s.apply(Player::Breaker, 7);
    CHECK(s.last_batch(Player::Breaker) == std::vector<EdgeId>{7});
    s.apply(Player::Breaker, 9);
    CHECK(s.last_batch(Player::Breaker) == std::vector<EdgeId>{7, 9});
    CHECK(s.last_batch(Player::Maker) == std::vector<EdgeId>{5});
}

TEST_CASE("reduced graph contracts Safe and drops Destroyed edges") {
    GameState s(path3(), GameConfig{1, 1, Player::Maker});
    s.apply(Player::Maker, 0);
    s.apply(Player::Breaker, 3);
    ReducedGraph g(s);
    CHECK(g.class_of(0) == g.class_of(1));
    CHECK(g.num_classes() == 3);
    CHECK(g.live_edges() == std::vector<EdgeId>{1, 2});
    Board rb = g.as_board();
    CHECK(rb.num_vertices() == 3);
    CHECK(rb.num_edges() == 2);
}

TEST_CASE("transcripts round trip through text") {
    auto b = path3();
    GameState s(b, GameConfig{1, 1, Player::Maker});
    s.apply(Player::Maker, 0);
    s.apply(Player::Breaker, 3);
    s.apply(Player::Maker, 1);
    Transcript t = transcript_of(s);
    Transcript u = parse_transcript(to_text(t));
    CHECK(u.board_id == b->id());
    CHECK(u.entries.size() == 3);
    GameState r = replay(b, u);
    CHECK(r.claims() == s.claims());
    CHECK(r.maker_won());
}

TEST_CASE("transcript errors carry the line number") {
    auto msg = [](std::string_view text) {
        try {
            parse_transcript(text);
        } catch (const TranscriptError& e) {
            return std::string(e.what());
        }
        return std::string();
    };
    CHECK(msg("board=x p=1\n").find("line 1") != std::string::npos);
    CHECK(msg("board=x p=1 q=1\nt=1 M e=0\nt=2 Q e=1\n").find("line 3") != std::string::npos);
    CHECK(msg("").find("header") != std::string::npos);
}

TEST_CASE("replay rejects a transcript for another board") {
    Transcript t;
    t.board_id = "something-else";
    CHECK_THROWS_AS(replay(path3(), t), TranscriptError);
}

TEST_CASE("play_match forfeits a strategy that returns an illegal edge") {
    struct Repeat : Strategy {
        std::string name() const override { return "repeat"; }
        std::vector<EdgeId> next_edges(const GameState&, const TurnContext&) override { return {0}; }
    } rep;
    FirstUnclaimed fu;
    MatchResult m = play_match(fu, rep, GameConfig{1, 1, Player::Maker}, path3(), 10);
    CHECK(m.reason == "forfeit");
    REQUIRE(m.winner);
    CHECK(*m.winner == Player::Maker);
}

TEST_CASE("claim-all-remaining when fewer edges than the quota are left") {
    auto b = std::make_shared<const Board>(Board::generic(2, {{0, 1}, {0, 1}, {0, 1}}, 0, {1}));
    FirstUnclaimed mk, br;
    MatchResult m = play_match(mk, br, GameConfig{1, 5, Player::Breaker}, b, 10);
    REQUIRE(m.winner);
    CHECK(*m.winner == Player::Breaker);
    CHECK(m.transcript.entries.size() == 3);
}
