#include <doctest.h>

#include <algorithm>
#include <numeric>
#include <set>

#include "perc/catalogue.hpp"
#include "perc/lehman.hpp"
#include "perc/solver.hpp"
#include "perc/union_find.hpp"

using namespace perc;

namespace {

bool is_forest(int n, const std::vector<Arc>& arcs, const std::vector<int>& pick, int which) {
    UnionFind uf(n);
    for (std::size_t i = 0; i < arcs.size(); ++i)
        if (pick[i] == which && !uf.unite(arcs[i].first, arcs[i].second)) return false;
    return true;
}

int brute_packing(int n, const std::vector<Arc>& arcs) {
    const int m = static_cast<int>(arcs.size());
    std::vector<int> pick(m, -1);
    int best = 0;
    int total = 1;
    for (int i = 0; i < m; ++i) total *= 3;
    for (int code = 0; code < total; ++code) {
        int c = code, used = 0;
        for (int i = 0; i < m; ++i) {
            pick[i] = c % 3 - 1;
            c /= 3;
            used += pick[i] >= 0;
        }
        if (used > best && is_forest(n, arcs, pick, 0) && is_forest(n, arcs, pick, 1)) best = used;
    }
    return best;
}

// Isomorphism classes of connected loopless multigraphs with m edges and two
// fixed marks, by minimizing the sorted edge list over all relabellings.
std::size_t naive_class_count(int m) {
    std::set<std::vector<std::pair<int, int>>> classes;
    for (int n = 2; n <= m + 1; ++n) {
        std::vector<std::pair<int, int>> pairs;
        for (int u = 0; u < n; ++u)
            for (int v = u + 1; v < n; ++v) pairs.push_back({u, v});
        std::vector<int> idx(m, 0);
        while (true) {
            std::vector<std::pair<int, int>> edges;
            for (int i : idx) edges.push_back(pairs[i]);
            UnionFind uf(n);
            int comps = n;
            for (auto [u, v] : edges) comps -= uf.unite(u, v) ? 1 : 0;
            if (comps == 1) {
                std::vector<int> perm(n);
                std::iota(perm.begin(), perm.end(), 0);
                std::vector<std::pair<int, int>> best;
                do {
                    std::vector<std::pair<int, int>> e2;
                    for (auto [u, v] : edges) e2.push_back(std::minmax(perm[u], perm[v]));
                    std::sort(e2.begin(), e2.end());
                    if (best.empty() || e2 < best) best = e2;
                } while (std::next_permutation(perm.begin() + 2, perm.end()));
                classes.insert(best);
            }
            // Next non-decreasing index tuple.
            int k = m - 1;
            while (k >= 0 && idx[k] == static_cast<int>(pairs.size()) - 1) --k;
            if (k < 0) break;
            ++idx[k];
            for (int j = k + 1; j < m; ++j) idx[j] = idx[k];
        }
    }
    return classes.size();
}

}  // namespace

TEST_CASE("two-forest packing matches exhaustive colouring") {
    const std::vector<std::pair<int, std::vector<Arc>>> graphs{
        {2, {{0, 1}, {0, 1}, {0, 1}}},
        {3, {{0, 1}, {1, 2}, {0, 2}, {0, 1}, {1, 2}}},
        {4, {{0, 1}, {1, 2}, {2, 3}, {3, 0}, {0, 2}, {1, 3}, {0, 1}}},
        {4, {{0, 1}, {0, 1}, {0, 1}, {2, 3}, {2, 3}}},
        {5, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 0}, {0, 2}, {2, 4}, {1, 3}}},
    };
    for (const auto& [n, arcs] : graphs) {
        std::vector<int> forest;
        const int got = two_forest_packing(n, arcs, forest);
        CHECK(got == brute_packing(n, arcs));
        CHECK(is_forest(n, arcs, forest, 0));
        CHECK(is_forest(n, arcs, forest, 1));
        CHECK(std::count_if(forest.begin(), forest.end(), [](int f) { return f >= 0; }) == got);
    }
}

TEST_CASE("catalogue class counts match a permutation canonicalization") {
    std::vector<std::size_t> per_m(6, 0);
    for (const Board& b : catalogue_multigraphs(5)) ++per_m[b.num_edges()];
    for (int m = 1; m <= 5; ++m) {
        CAPTURE(m);
        CHECK(per_m[m] == naive_class_count(m));
    }
}

TEST_CASE("catalogue entries are pairwise non-isomorphic") {
    std::set<std::vector<std::pair<int, int>>> seen;
    for (const Board& b : catalogue_multigraphs(5)) {
        std::vector<std::pair<int, int>> edges;
        for (const Edge& e : b.edges()) edges.push_back({e.u, e.v});
        CHECK(seen.insert(canonical_edges(b.num_vertices(), edges)).second);
    }
}

TEST_CASE("Lehman criterion agrees with the solver and certificates verify") {
    for (const Board& b : catalogue_multigraphs(5)) {
        auto sb = std::make_shared<const Board>(b);
        for (Player first : {Player::Maker, Player::Breaker}) {
            LehmanResult lr = lehman_decide(b, first);
            REQUIRE(lr.winner);
            SolveResult sr = solve_escape(sb, GameConfig{1, 1, first});
            REQUIRE(sr.solved());
            CHECK(*lr.winner == *sr.winner);
            if (*lr.winner == Player::Maker) {
                CHECK(lr.certificate.maker_wins);
                CHECK(verify_lehman_certificate(b, lr.certificate));
            } else {
                CHECK_FALSE(lr.certificate.closures.empty());
            }
        }
    }
}

TEST_CASE("a single edge needs the first move and a double edge does not") {
    Board b = Board::generic(2, {{0, 1}}, 0, {1});
    CHECK(*lehman_decide(b, Player::Maker).winner == Player::Maker);
    CHECK(*lehman_decide(b, Player::Breaker).winner == Player::Breaker);
    Board c = Board::generic(2, {{0, 1}, {0, 1}}, 0, {1});
    CHECK(*lehman_decide(c, Player::Breaker).winner == Player::Maker);
}
