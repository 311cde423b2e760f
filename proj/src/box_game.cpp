#include "perc/box_game.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

namespace perc {

BoxGameState::BoxGameState(int q, int M, int N) : q_(q), M_(M), boxes_(N) {
    if (q < 1 || M < 1 || N < 1) throw std::invalid_argument("box game needs q, M, N >= 1");
}

int BoxGameState::count_exact(int k) const {
    int c = 0;
    for (const Box& b : boxes_) c += (!b.removed && b.claimed == k) ? 1 : 0;
    return c;
}

int BoxGameState::surviving() const {
    int c = 0;
    for (const Box& b : boxes_) c += b.removed ? 0 : 1;
    return c;
}

bool BoxGameState::maker_won() const {
    for (const Box& b : boxes_)
        if (!b.removed && b.claimed == M_) return true;
    return false;
}

void BoxGameState::remove_box(int i) {
    Box& b = boxes_.at(i);
    if (b.removed) throw std::logic_error("box already removed");
    b.removed = true;
}

void BoxGameState::claim_item(int i) {
    Box& b = boxes_.at(i);
    if (b.removed) throw std::logic_error("cannot claim from a removed box");
    if (b.claimed >= M_) throw std::logic_error("box has no items left");
    ++b.claimed;
}

std::vector<int> BoxGameState::level_counts() const {
    std::vector<int> c(M_ + 1, 0);
    for (const Box& b : boxes_)
        if (!b.removed) ++c[b.claimed];
    return c;
}

long BoxMakerStrategy::potential(const BoxGameState& s, int k) {
    return 2L * s.count_exact(k + 1) + s.count_exact(k);
}

long BoxMakerStrategy::required_at_entry(int q, int M, int k) {
    long v = 4;
    for (int i = 0; i < M - k; ++i) v *= (q + 2);
    return v;
}

std::vector<int> BoxMakerStrategy::respond(const BoxGameState& s, int r) {
    const int k = phase_;
    std::vector<int> out;
    std::vector<int> kboxes;
    for (int i = 0; i < s.N(); ++i)
        if (!s.box(i).removed && s.box(i).claimed == k) kboxes.push_back(i);
    if (static_cast<int>(kboxes.size()) >= 2 * r) {
        out.assign(kboxes.begin(), kboxes.begin() + 2 * r);
        return out;
    }
    std::vector<int> level(s.N());
    for (int i = 0; i < s.N(); ++i) level[i] = s.box(i).claimed;
    auto rank = [&](int i) {
        if (level[i] == k) return 0;
        if (level[i] >= k + 2) return 1;
        if (level[i] < k) return 2;
        return 3;
    };
    for (int n = 0; n < 2 * r; ++n) {
        int best = -1;
        for (int i = 0; i < s.N(); ++i) {
            if (s.box(i).removed || level[i] >= s.M()) continue;
            if (best < 0) {
                best = i;
                continue;
            }
            const int ri = rank(i), rb = rank(best);
            if (ri != rb ? ri < rb : (ri == 1 && level[i] > level[best])) best = i;
        }
        if (best < 0) break;
        out.push_back(best);
        ++level[best];
    }
    ++phase_;
    return out;
}

namespace {

struct BoxChecker {
    int q, M, N;
    BoxCheckResult result;
    std::map<std::pair<std::vector<int>, int>, std::uint64_t> done;  // subtree sizes
    std::vector<std::vector<int>> line;

    static constexpr std::uint64_t kSat = ~0ULL;
    static std::uint64_t add(std::uint64_t a, std::uint64_t b) { return (a > kSat - b) ? kSat : a + b; }

    void fail_win() {
        if (result.maker_always_wins) result.counterexample = line;
        result.maker_always_wins = false;
    }

    // BoxBreaker to move. Returns the size of the subtree.
    std::uint64_t visit(const BoxGameState& s, const BoxMakerStrategy& st) {
        if (s.maker_won()) return 1;
        if (s.surviving() == 0) {
            fail_win();
            return 1;
        }
        const auto key = std::make_pair(s.level_counts(), st.phase());
        if (auto it = done.find(key); it != done.end()) return it->second;
        ++result.positions;

        std::uint64_t size = 1;
        const auto counts = key.first;
        std::vector<int> take(M + 1, 0);
        // Enumerate removal multisets level by level.
        auto rec = [&](auto&& self, int level, int r) -> void {
            if (level > M) {
                if (r >= 1) size = add(size, apply(s, st, take, r));
                return;
            }
            for (int c = 0; c <= counts[level] && r + c <= q; ++c) {
                take[level] = c;
                self(self, level + 1, r + c);
            }
            take[level] = 0;
        };
        rec(rec, 0, 0);
        done.emplace(key, size);
        return size;
    }

    std::uint64_t apply(const BoxGameState& s, const BoxMakerStrategy& st, const std::vector<int>& take, int r) {
        BoxGameState t = s;
        BoxMakerStrategy sm = st;
        std::vector<int> removed;
        for (int level = 0; level <= M; ++level) {
            int need = take[level];
            for (int i = 0; i < t.N() && need > 0; ++i)
                if (!t.box(i).removed && t.box(i).claimed == level) {
                    t.remove_box(i);
                    removed.push_back(i);
                    --need;
                }
        }
        const int k = sm.phase();
        const long before = BoxMakerStrategy::potential(s, k);
        const bool enough = t.count_exact(k) >= 2 * r;
        for (int i : sm.respond(t, r)) t.claim_item(i);
        if (enough && sm.phase() == k && BoxMakerStrategy::potential(t, k) < before) result.potential_monotone = false;
        if (sm.phase() != k && !t.maker_won() && sm.phase() < M) {
            const int nk = sm.phase();
            if (t.count_exact(nk) < BoxMakerStrategy::required_at_entry(q, M, nk)) result.phase_conditions_hold = false;
        }
        line.push_back(removed);
        std::uint64_t sub = visit(t, sm);
        line.pop_back();
        return sub;
    }
};

}  // namespace

BoxCheckResult check_box_game_exhaustive(int q, int M, int N) {
    BoxChecker c{q, M, N, {}, {}, {}};
    BoxGameState s(q, M, N);
    BoxMakerStrategy st;
    if (N < BoxMakerStrategy::required_at_entry(q, M, 0)) c.result.phase_conditions_hold = false;
    c.result.tree_nodes = c.visit(s, st);
    return c.result;
}

}  // namespace perc
