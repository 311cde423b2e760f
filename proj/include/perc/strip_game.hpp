#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <unordered_map>
#include <vector>

#include "perc/graph_util.hpp"

namespace perc {

// Arena of the q-double-response game. H claims edges trying to join `left` to
// `right`; V claims edges trying to separate them. On a grid strip that
// separation is exactly a top-bottom crossing in the planar dual.
struct StripGraph {
    int num_vertices = 0;
    std::vector<Arc> edges;
    std::vector<int> left, right;
    int rows = 0;
    int columns = 0;

    int num_edges() const { return static_cast<int>(edges.size()); }
};

// P_m x P_n with vertex (x, y) = y * m + x; horizontal edges first (row by row),
// then vertical edges. Left = column 0, right = column m-1.
StripGraph make_grid_strip(int m, int n);

enum class StripClaim : std::uint8_t { None, V, H };

class StripGameState {
public:
    explicit StripGameState(const StripGraph& g);

    const StripGraph& graph() const { return *g_; }
    StripClaim claim(int e) const { return claims_[e]; }
    void claim_edge(int e, StripClaim who);
    std::uint64_t mask(StripClaim who) const;
    int unclaimed_count() const;

    // V has separated left from right in the graph minus V's edges.
    bool v_won() const;
    // H's edges already join left to right.
    bool h_won() const;

private:
    const StripGraph* g_;
    std::vector<StripClaim> claims_;
};

class HStrategy {
public:
    virtual ~HStrategy() = default;
    virtual std::string name() const = 0;
    // Answer V's last batch of r edges with min(2r, unclaimed) edges.
    virtual std::vector<int> respond(const StripGameState& s, std::span<const int> v_batch) = 0;
};

// Greedy H: each pick maximizes the left-right min-cut of the graph with V
// deleted and H contracted; lowest index on ties.
class MinCutH : public HStrategy {
public:
    std::string name() const override { return "min-cut"; }
    std::vector<int> respond(const StripGameState& s, std::span<const int> v_batch) override;
    static int pick(const StripGraph& g, std::uint64_t vmask, std::uint64_t hmask);
};

// Exact memoized search over (V mask, H mask, sub-move phase). Picks the lowest
// index winning edge; falls back to MinCutH when the position is lost or the
// per-call node budget runs out. Supports at most 64 edges.
class ExactSearchH : public HStrategy {
public:
    ExactSearchH(const StripGraph& g, int q, std::int64_t node_budget = 2'000'000);
    std::string name() const override { return "exact"; }
    std::vector<int> respond(const StripGameState& s, std::span<const int> v_batch) override;

    // Value of the position where H must still place `h_left` edges of the current
    // response, or V starts a new batch when h_left == 0. Empty on budget exhaustion.
    std::optional<bool> h_wins(std::uint64_t vmask, std::uint64_t hmask, int h_left);
    std::int64_t fallbacks() const { return fallbacks_; }

private:
    struct Key {
        std::uint64_t v, h;
        int phase;
        bool operator==(const Key&) const = default;
    };
    struct KeyHash {
        std::size_t operator()(const Key& k) const {
            std::uint64_t x = k.v * 0x9e3779b97f4a7c15ULL ^ (k.h + 0x7f4a7c159e3779b9ULL) * 0xbf58476d1ce4e5b9ULL;
            return static_cast<std::size_t>(x ^ (x >> 29) ^ static_cast<std::uint64_t>(k.phase) * 0x94d049bb133111ebULL);
        }
    };
    struct Budget {};

    // phase >= 0: H places `phase` more edges; phase < 0: V has placed -phase-1 edges.
    bool search(std::uint64_t v, std::uint64_t h, int phase);
    std::vector<int> relevant(std::uint64_t v, std::uint64_t h) const;
    bool v_sep(std::uint64_t v) const;
    bool h_conn(std::uint64_t h) const;

    const StripGraph& g_;
    int q_;
    std::int64_t budget_;
    std::int64_t nodes_ = 0;
    std::int64_t fallbacks_ = 0;
    std::unordered_map<Key, bool, KeyHash> memo_;
};

std::unique_ptr<HStrategy> make_double_response_h(const StripGraph& g, int q);

// Exhaustive V adversary against a fixed H. Every V batch of 1..q unclaimed edges
// is tried; H answers deterministically. `nodes` counts V decision nodes with a
// memo on V-to-move positions; `tree_nodes` is the unmemoized tree size.
struct StripCheckResult {
    bool h_always_wins = true;
    std::vector<std::vector<int>> counterexample;  // alternating V / H batches
    std::int64_t positions = 0;
    std::uint64_t tree_nodes = 0;
};
StripCheckResult check_h_exhaustive(const StripGraph& g, int q, HStrategy& h);

}  // namespace perc
