#pragma once

#include <optional>

#include "perc/board.hpp"
#include "perc/engine.hpp"

namespace perc {

inline long ceil_div(long a, long b) { return (a + b - 1) / b; }

struct BiRegularParams {
    int a = 2, b = 3, p = 1, q = 1;

    int r_star() const { return static_cast<int>(ceil_div(p, a)); }
    int delta() const { return p * (b - 2) - r_star() * (b - a) - q; }
    // Largest q for which Maker still wins.
    int flip_q() const { return p * (b - 2) - r_star() * (b - a); }
    // Breaker-side assumption of the phase argument: q = p(b-2) - r*(b-a) + 1.
    bool breaker_bound_applies() const { return b == a + 1 && q == flip_q() + 1; }
};

struct TreeDecision {
    Player winner = Player::Maker;
    std::optional<long> round_bound;  // Breaker wins within this many rounds
};

TreeDecision decide_tree(const TreeSpec& spec, int p, int q);

// Phase length bound N0 = ceil(a d0 / (p (a^2 - a - 1))).
long phase_length_bound(int a, long d0, int p);
// ceil(a (a+1) d0 / (p (a^2 - a - 1))): the inversion of 1/(a+1) - 1/a^2 with the
// (a+1) factor kept. The shorter form above drops it and fails for a = 3.
long phase_length_bound_exact(int a, long d0, int p);
// 1000 d^2 / (p a) Breaker turns.
double breaker_turn_bound(long d, int p, int a);

}  // namespace perc
