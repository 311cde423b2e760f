#include <doctest.h>

#include <algorithm>

#include "perc/harness.hpp"
#include "perc/solver.hpp"
#include "perc/tree_arena.hpp"
#include "perc/tree_theory.hpp"
#include "perc/vector_game.hpp"

using namespace perc;

namespace {

// Plain recursion: Breaker greedy (Type II side first), Maker any sequence.
// Returns Breaker turns until the frontier is empty, or -1 past `cap` turns.
long brute_longest(int a, int b, int p, int q, long X, long Y, int cap) {
    if (cap == 0) return -1;
    const long dy = std::min<long>(q, Y);
    const long dx = std::min<long>(q - dy, X);
    X -= dx;
    Y -= dy;
    if (X == 0 && Y == 0) return 1;
    long best = 1;
    std::vector<std::pair<long, long>> cur{{X, Y}};
    for (int i = 0; i < p; ++i) {
        std::vector<std::pair<long, long>> next;
        for (auto [x, y] : cur) {
            if (x > 0) next.push_back({x - 1, y + a - 1});
            if (y > 0) next.push_back({x + b - 1, y - 1});
            if (x == 0 && y == 0) next.push_back({0, 0});
        }
        cur = std::move(next);
    }
    for (auto [x, y] : cur) {
        long sub = brute_longest(a, b, p, q, x, y, cap - 1);
        if (sub < 0) return -1;
        best = std::max(best, 1 + sub);
    }
    return best;
}

}  // namespace

TEST_CASE("regular tree decisions match the solver on truncations") {
    for (int d = 3; d <= 4; ++d)
        for (int p = 1; p <= 2; ++p)
            for (int q = 1; q <= 3; ++q) {
                CAPTURE(d);
                CAPTURE(p);
                CAPTURE(q);
                const TreeDecision dec = decide_tree(TreeSpec::regular(d), p, q);
                CHECK((dec.winner == Player::Maker) == (p * (d - 2) >= q));
                if (d == 4 && p == 2) continue;  // truncations too large for a unit test
                const int depth = dec.round_bound ? static_cast<int>(*dec.round_bound) * p + 1 : 3;
                if (depth > 5) continue;
                auto t = std::make_shared<const Board>(build_tree(TreeSpec::regular(d), depth));
                SolveResult r = solve_escape(t, GameConfig{p, q, Player::Maker});
                REQUIRE(r.solved());
                CHECK(*r.winner == dec.winner);
            }
}

TEST_CASE("greedy recurrence and tree formula properties hold on small cells") {
    CHECK(check_tree_recurrence(3, 1, 1, 30).all_pass());
    CHECK(check_tree_recurrence(3, 1, 2, 30).all_pass());
    CHECK(check_tree_recurrence(4, 2, 1, 30).all_pass());
    CHECK(check_tree_formula(3, 1, 2, 4).all_pass());
}

TEST_CASE("phase length bounds") {
    CHECK(phase_length_bound(2, 5, 1) == 10);
    CHECK(phase_length_bound(2, 5, 3) == 4);
    CHECK(phase_length_bound(3, 5, 1) == 3);
    CHECK(phase_length_bound_exact(2, 5, 1) == 30);
    CHECK(phase_length_bound_exact(3, 5, 1) == 12);
    for (int a = 2; a <= 5; ++a)
        for (long d = 1; d <= 20; ++d) CHECK(phase_length_bound_exact(a, d, 1) >= phase_length_bound(a, d, 1));
}

TEST_CASE("a (3,4) greedy line outlasts the short phase bound") {
    const TreeSpec spec = TreeSpec::bi_regular(3, 4, VertexType::TypeI);
    ArenaRun run = play_arena(spec, 1, 2, arena_greedy(), arena_greedy(), 100);
    CHECK(run.breaker_won);
    TranscriptStats st = extract_stats(spec, 1, 2, run.transcript);
    REQUIRE(st.phases.size() == 1);
    const PhaseStats& ph = st.phases[0];
    CHECK(ph.d_start == 5);
    CHECK(ph.length == 4);
    CHECK(ph.maker_type_i == 3);
    CHECK(ph.theta == doctest::Approx(0.75));
    CHECK(ph.n0_bound == 3);
    CHECK(ph.length > ph.n0_bound);
    CHECK(ph.length <= ph.n0_exact);
    CHECK(ph.theta_bounds_hold);
}

TEST_CASE("winner flips at flip_q for bi-regular trees") {
    for (auto [a, b] : {std::pair{2, 3}, std::pair{2, 4}, std::pair{3, 4}})
        for (int p = 1; p <= 3; ++p) {
            const BiRegularParams bp{a, b, p, 1};
            const int f = bp.flip_q();
            CAPTURE(a);
            CAPTURE(b);
            CAPTURE(p);
            if (f >= 1) {
                CHECK(decide_tree(TreeSpec::bi_regular(a, b, VertexType::TypeI), p, f).winner == Player::Maker);
                CHECK(longest_breaker_win(a, b, p, f, 0, 12, 300) == -1);
            }
            CHECK(decide_tree(TreeSpec::bi_regular(a, b, VertexType::TypeI), p, f + 1).winner == Player::Breaker);
            CHECK(longest_breaker_win(a, b, p, f + 1, 0, 6, 100000) > 0);
        }
}

TEST_CASE("longest Breaker win matches plain recursion") {
    for (auto [a, b] : {std::pair{2, 3}, std::pair{3, 4}})
        for (int p = 1; p <= 2; ++p) {
            const int q = BiRegularParams{a, b, p, 1}.flip_q() + 1;
            for (long X = 0; X <= 3; ++X)
                for (long Y = 0; Y <= 3; ++Y) {
                    if (X + Y == 0) continue;
                    CAPTURE(X);
                    CAPTURE(Y);
                    CHECK(longest_breaker_win(a, b, p, q, X, Y, 60) == brute_longest(a, b, p, q, X, Y, 60));
                }
        }
}

TEST_CASE("vector game moves and arena correspondence") {
    VectorGameState s{0, 2, 1, 2, 1, 1};
    CHECK_THROWS_AS(vector_game_step(s, Player::Maker, VectorMove::MakerTypeI), IllegalMove);
    CHECK_THROWS_AS(vector_game_step(s, Player::Breaker, VectorMove::MakerTypeII), IllegalMove);
    VectorGameState t = vector_game_step(s, Player::Maker, VectorMove::MakerTypeII);
    CHECK(t.X == 2);
    CHECK(t.Y == 1);
    t = vector_game_step(t, Player::Breaker, VectorMove::BreakerY);
    t = vector_game_step(t, Player::Breaker, VectorMove::BreakerX);
    CHECK(t.X == 1);
    CHECK(t.Y == 0);

    TreeArena ar(TreeSpec::bi_regular(2, 3, VertexType::TypeI));
    VectorGameState v = to_vector_state(ar, 1, 1);
    CHECK(v.X == 0);
    CHECK(v.Y == 2);
    CHECK(v.a_prime == 1);
    CHECK(v.b_prime == 2);
    const EdgeId e = ar.greedy_pick();
    const VectorMove m = vector_move_of(ar, Player::Maker, e);
    ar.claim_edge(Player::Maker, e);
    v = vector_game_step(v, Player::Maker, m);
    CHECK(v.X == ar.x_size());
    CHECK(v.Y == ar.y_size());
}

TEST_CASE("type II root starts at (b, 0)") {
    TreeArena ar(TreeSpec::bi_regular(2, 3, VertexType::TypeII));
    CHECK(ar.x_size() == 3);
    CHECK(ar.y_size() == 0);
}
