#pragma once

#include <cstdint>
#include <vector>

namespace perc {

struct Box {
    int claimed = 0;
    bool removed = false;
};

// (q, M, N) double-response box game: BoxBreaker removes r <= q surviving
// boxes, BoxMaker answers with 2r items; BoxMaker wins on a full surviving box.
class BoxGameState {
public:
    BoxGameState(int q, int M, int N);

    int q() const { return q_; }
    int M() const { return M_; }
    int N() const { return static_cast<int>(boxes_.size()); }
    const std::vector<Box>& boxes() const { return boxes_; }
    const Box& box(int i) const { return boxes_.at(i); }

    int count_exact(int k) const;
    int surviving() const;
    bool maker_won() const;
    bool breaker_won() const { return !maker_won() && surviving() == 0; }

    void remove_box(int i);
    void claim_item(int i);
    // Box counts per claimed level (surviving boxes only), indexed 0..M.
    std::vector<int> level_counts() const;

private:
    int q_, M_;
    std::vector<Box> boxes_;
};

// Phase strategy. In phase k, r removals are answered with one item in each of
// 2r surviving boxes holding exactly k items (lowest index first). With fewer
// than 2r such boxes it places 2r items by the order below and ends the phase:
// k-boxes, then boxes with >= k+2 items (fullest first), then boxes below k,
// and (k+1)-boxes last.
class BoxMakerStrategy {
public:
    int phase() const { return phase_; }
    std::vector<int> respond(const BoxGameState& s, int r);

    // S = 2A + B for phase k, A = boxes with k+1 items, B = boxes with k items.
    static long potential(const BoxGameState& s, int k);
    static long required_at_entry(int q, int M, int k);

private:
    int phase_ = 0;
};

struct BoxCheckResult {
    bool maker_always_wins = true;
    bool phase_conditions_hold = true;
    bool potential_monotone = true;
    std::int64_t positions = 0;     // distinct (level counts, phase) states visited
    std::uint64_t tree_nodes = 0;   // size of the unmemoized BoxBreaker-move tree (saturating)
    std::vector<std::vector<int>> counterexample;  // BoxBreaker removals (box ids) per turn
};

// Every BoxBreaker policy, up to symmetry between boxes with equal item counts.
BoxCheckResult check_box_game_exhaustive(int q, int M, int N);

}  // namespace perc
