#pragma once

#include <cstdint>
#include <functional>
#include <memory>
#include <string>
#include <vector>

#include <json.hpp>

#include "perc/strategy.hpp"
#include "perc/transcript.hpp"
#include "perc/tree_arena.hpp"
#include "perc/tree_theory.hpp"

namespace perc {

struct PropertyCell {
    nlohmann::json params;
    bool pass = true;
    std::string detail;
    std::string counterexample;  // replayable transcript text; empty when passing
    nlohmann::json data = nlohmann::json::object();
};

struct PropertyReport {
    std::string property;
    std::string coverage = "exhaustive";  // "exhaustive", "sampled" or "partial"
    std::vector<PropertyCell> cells;

    bool all_pass() const;
    nlohmann::json to_json() const;
};

// ---- Tree arena matches -------------------------------------------------

// Chooses one frontier edge for `who`; returns -1 to claim nothing.
using ArenaPolicy = std::function<EdgeId(const TreeArena&, Player who)>;

ArenaPolicy arena_greedy();                 // Type II first, lowest index
ArenaPolicy arena_type_i_first();           // the opposite preference
ArenaPolicy arena_random(std::uint64_t seed);

std::string arena_id(const TreeSpec& spec);

struct ArenaRun {
    Transcript transcript;     // arena edge ids; board id from arena_id
    std::vector<long> d;       // frontier size at each Maker-turn start
    std::vector<int> x, y;     // |X|, |Y| at each Maker-turn start
    long d_first_breaker = 0;  // frontier size at the start of Breaker's first turn
    bool breaker_won = false;
    int breaker_turns = 0;     // Breaker turns played
    int maker_turns = 0;
};

// Maker first; head_start edges are Maker claims before t = 0.
ArenaRun play_arena(const TreeSpec& spec, int p, int q, const ArenaPolicy& maker, const ArenaPolicy& breaker,
                    int max_rounds, const std::vector<EdgeId>& head_start = {});
TreeArena replay_arena(const TreeSpec& spec, const Transcript& t);

struct PhaseStats {
    int first_turn = 0;       // Maker turn index where the phase starts
    int length = 0;           // Breaker turns in the phase
    long d_start = 0;         // |X|+|Y| at the phase start (Breaker's first turn for phase 0)
    long x_start = 0;         // |X|, |Y| at the Maker turn that opens the phase
    long y_start = 0;
    int claims = 0;           // claims by both players during the phase
    int maker_type_i = 0;     // Maker claims to Type I vertices during the phase
    double theta = 0;         // maker_type_i / (length * p)
    int q_prime = 0;          // Breaker's Type I claims in the phase's last turn
    long n0_bound = 0;        // ceil(a d_start / (p (a^2 - a - 1)))
    long n0_exact = 0;        // phase_length_bound_exact(a, d_start, p)
    bool complete = false;    // ended by a Breaker Type I claim
    // theta bounds over every prefix of full-quota, Type-II-only Breaker turns (b = a+1 only).
    bool theta_bounds_hold = true;
};

struct TranscriptStats {
    std::vector<long> d;
    std::vector<PhaseStats> phases;
};

// Throws TranscriptError for transcripts that are not bi-regular arena matches.
TranscriptStats extract_stats(const TreeSpec& spec, int p, int q, const Transcript& t);

// ---- Property checks ----------------------------------------------------

// delta at Maker-turn starts equals d + N(p(d-2) - q) under greedy play, N <= rounds.
PropertyReport check_tree_recurrence(int d, int p, int q, int rounds);

// decide_tree against the exact solver on the depth-h truncation.
PropertyReport check_tree_formula(int d, int p, int q, int depth);

struct BoxMode {
    enum class Kind { Exhaustive, Random, Greedy } kind = Kind::Exhaustive;
    std::uint64_t seed = 1;
    int trials = 100;
};
PropertyReport check_box_game(int q, int M, int N, BoxMode mode);

enum class AdversaryMode { Exhaustive, Sampled };
// Greedy d-growth bounds (Maker gains at least Delta, Breaker holds it to Delta)
// over the vector-state space within `horizon` turns, plus the winner flip.
// When q = flip_q + 1 the Breaker turn bounds are checked as well.
PropertyReport check_biregular(int a, int b, int p, int q, AdversaryMode mode, int horizon, std::uint64_t seed = 1);

// Longest Breaker-greedy game (in Breaker turns) over all Maker policies from a
// Breaker-to-move vector state; -1 if some Maker policy avoids defeat for `cap` turns.
long longest_breaker_win(int a, int b, int p, int q, long X, long Y, long cap);

struct ExhaustiveOptions {
    int max_time = 1 << 30;                // stop expanding lines at this many claims
    std::int64_t max_positions = 50'000'000;
    // Checked after each of the strategy's turns; false counts as a loss.
    std::function<bool(const GameState&)> invariant;
};

struct StrategyCheck {
    bool never_lost = true;
    bool complete = true;               // no line was cut by a cap
    std::int64_t positions = 0;         // distinct adversary-to-move positions
    std::uint64_t tree_nodes = 0;       // adversary-to-move nodes of the unmemoized tree
    std::int64_t cut_lines = 0;
    int max_rounds_to_win = 0;          // for Breaker-role checks
    std::string counterexample;         // transcript text
};

// The strategy must depend only on (position, adversary batch). Adversary batches
// are tried as ascending edge sets of the full quota.
StrategyCheck check_strategy_vs_exhaustive(Strategy& st, Player role, std::shared_ptr<const Board> board,
                                           const GameConfig& cfg, const ExhaustiveOptions& opt = {});

// lehman_decide against solve_escape on the multigraph catalogue and contracted windows.
PropertyReport check_lehman(int max_edges, const std::vector<int>& window_radii);

// No Maker win turns into a Breaker win when p grows, nor the reverse when q grows.
PropertyReport check_monotonicity(int max_edges, int max_p, int max_q);

// Random (delete, repair, contract) steps on an axis-coloured 2-D window.
PropertyReport check_colour_repair(int radius, long steps, std::uint64_t seed);

PropertyReport check_double_response(int q, int n, int m, const std::string& h_name = "double-response-h");

// breaker-annulus against a scripted Maker ("straight-line" or "spiral") on a
// window of the given radius; checks dual-cycle certification of the result.
PropertyReport check_annulus(int p, int N, int radius, const std::string& maker);

// detect_dual_cycle against root_cut_off on random destroyed sets.
PropertyReport check_dual_cycle(int radius, long samples, std::uint64_t seed, bool parallel = true);

// path-colouring against every Breaker line up to `max_time` claims.
PropertyReport check_path_colouring(int radius, int p, int q, int max_time);

// ---- Suites -------------------------------------------------------------

std::vector<std::string> suite_names();
nlohmann::json default_grid(const std::string& suite);
// Runs every grid cell (in parallel when jobs != 1) and merges in grid order.
PropertyReport run_suite(const std::string& suite, const nlohmann::json& grid, std::uint64_t seed, int jobs);

}  // namespace perc
