#include "perc/harness.hpp"

#include <algorithm>
#include <map>
#include <random>
#include <set>
#include <sstream>
#include <unordered_map>

#include <omp.h>

#include "perc/board_io.hpp"
#include "perc/box_game.hpp"
#include "perc/catalogue.hpp"
#include "perc/colouring.hpp"
#include "perc/dual_cycle.hpp"
#include "perc/lehman.hpp"
#include "perc/registry.hpp"
#include "perc/solver.hpp"
#include "perc/strategies.hpp"
#include "perc/strip_game.hpp"
#include "perc/vector_game.hpp"

namespace perc {

using nlohmann::json;

bool PropertyReport::all_pass() const {
    return std::all_of(cells.begin(), cells.end(), [](const PropertyCell& c) { return c.pass; });
}

json PropertyReport::to_json() const {
    json j;
    j["property"] = property;
    j["coverage"] = coverage;
    j["pass"] = all_pass();
    j["cells"] = json::array();
    for (const PropertyCell& c : cells) {
        json cj{{"params", c.params}, {"pass", c.pass}, {"detail", c.detail}, {"data", c.data}};
        if (!c.counterexample.empty()) cj["counterexample"] = c.counterexample;
        j["cells"].push_back(std::move(cj));
    }
    return j;
}

namespace {

PropertyReport single(std::string property, PropertyCell cell, std::string coverage = "exhaustive") {
    PropertyReport r;
    r.property = std::move(property);
    r.coverage = std::move(coverage);
    r.cells.push_back(std::move(cell));
    return r;
}

std::mt19937_64 seeded(std::uint64_t seed, std::uint64_t stream) {
    std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
                      static_cast<std::uint32_t>(stream), static_cast<std::uint32_t>(stream >> 32)};
    return std::mt19937_64(seq);
}

}  // namespace

// ---- Arena --------------------------------------------------------------

ArenaPolicy arena_greedy() {
    return [](const TreeArena& ar, Player) { return ar.greedy_pick(); };
}

ArenaPolicy arena_type_i_first() {
    return [](const TreeArena& ar, Player) -> EdgeId {
        if (ar.frontier().empty()) return -1;
        EdgeId e = ar.lowest_of(ar.spec().is_regular() ? VertexType::None : VertexType::TypeI);
        return e >= 0 ? e : *ar.frontier().begin();
    };
}

ArenaPolicy arena_random(std::uint64_t seed) {
    auto rng = std::make_shared<std::mt19937_64>(seeded(seed, 0x5eed));
    return [rng](const TreeArena& ar, Player) -> EdgeId {
        if (ar.frontier().empty()) return -1;
        std::uniform_int_distribution<int> d(0, ar.frontier_size() - 1);
        auto it = ar.frontier().begin();
        std::advance(it, d(*rng));
        return *it;
    };
}

std::string arena_id(const TreeSpec& spec) {
    if (spec.is_regular()) return "arena-regular-d" + std::to_string(spec.d);
    return "arena-biregular-a" + std::to_string(spec.a) + "-b" + std::to_string(spec.b) + "-" +
           (spec.root_type == VertexType::TypeII ? "II" : "I");
}

ArenaRun play_arena(const TreeSpec& spec, int p, int q, const ArenaPolicy& maker, const ArenaPolicy& breaker,
                    int max_rounds, const std::vector<EdgeId>& head_start) {
    TreeArena ar(spec);
    ArenaRun run;
    run.transcript.board_id = arena_id(spec);
    run.transcript.config = GameConfig{p, q, Player::Maker};
    run.transcript.head_start = head_start;
    for (EdgeId e : head_start) ar.claim_edge(Player::Maker, e);
    int t = 0;
    auto play = [&](Player who, const ArenaPolicy& pol, int quota) {
        for (int i = 0; i < quota && !ar.frontier().empty(); ++i) {
            EdgeId e = pol(ar, who);
            if (e < 0) break;
            ar.claim_edge(who, e);
            run.transcript.entries.push_back({++t, who, e, false});
        }
    };
    for (int round = 0; round < max_rounds && !ar.breaker_won(); ++round) {
        run.d.push_back(ar.frontier_size());
        run.x.push_back(ar.x_size());
        run.y.push_back(ar.y_size());
        play(Player::Maker, maker, p);
        ++run.maker_turns;
        if (round == 0) run.d_first_breaker = ar.frontier_size();
        play(Player::Breaker, breaker, q);
        ++run.breaker_turns;
    }
    run.breaker_won = ar.breaker_won();
    return run;
}

TreeArena replay_arena(const TreeSpec& spec, const Transcript& t) {
    if (t.board_id != arena_id(spec)) throw TranscriptError("transcript is for " + t.board_id + ", not " + arena_id(spec));
    TreeArena ar(spec);
    for (EdgeId e : t.head_start) ar.claim_edge(Player::Maker, e);
    for (const TranscriptEntry& en : t.entries)
        if (!en.forfeit) ar.claim_edge(en.player, en.edge);
    return ar;
}

TranscriptStats extract_stats(const TreeSpec& spec, int p, int q, const Transcript& t) {
    if (spec.is_regular()) throw TranscriptError("phase statistics need a bi-regular tree transcript");
    if (t.board_id != arena_id(spec)) throw TranscriptError("transcript is for " + t.board_id + ", not " + arena_id(spec));
    TreeArena ar(spec);
    for (EdgeId e : t.head_start) ar.claim_edge(Player::Maker, e);

    struct Turn {
        Player who;
        std::vector<EdgeId> edges;
    };
    std::vector<Turn> turns;
    for (const TranscriptEntry& en : t.entries) {
        if (en.forfeit) continue;
        if (turns.empty() || turns.back().who != en.player) turns.push_back({en.player, {}});
        turns.back().edges.push_back(en.edge);
    }

    const int a = spec.a;
    const bool adjacent = spec.b == spec.a + 1;
    TranscriptStats st;
    PhaseStats cur;
    bool open = false, prefix_ok = true;
    int maker_turn = -1;
    auto close = [&]() {
        cur.theta = cur.length > 0 ? static_cast<double>(cur.maker_type_i) / (static_cast<double>(cur.length) * p) : 0;
        cur.n0_bound = phase_length_bound(a, cur.d_start, p);
        cur.n0_exact = phase_length_bound_exact(a, cur.d_start, p);
        st.phases.push_back(cur);
        open = false;
    };
    for (const Turn& tu : turns) {
        if (tu.who == Player::Maker) {
            ++maker_turn;
            st.d.push_back(ar.frontier_size());
            if (!open) {
                cur = PhaseStats{};
                cur.first_turn = maker_turn;
                cur.d_start = ar.frontier_size();
                cur.x_start = ar.x_size();
                cur.y_start = ar.y_size();
                open = true;
                prefix_ok = true;
            }
            for (EdgeId e : tu.edges) {
                if (ar.far_type(e) != VertexType::TypeII) ++cur.maker_type_i;
                ar.claim_edge(Player::Maker, e);
                ++cur.claims;
            }
            if (st.phases.empty() && maker_turn == 0) cur.d_start = ar.frontier_size();
            continue;
        }
        if (!open) continue;
        int type_i = 0;
        for (EdgeId e : tu.edges) {
            if (ar.far_type(e) != VertexType::TypeII) ++type_i;
            ar.claim_edge(Player::Breaker, e);
            ++cur.claims;
        }
        ++cur.length;
        prefix_ok = prefix_ok && type_i == 0 && static_cast<int>(tu.edges.size()) == q;
        if (adjacent && prefix_ok) {
            const double Np = static_cast<double>(cur.length) * p;
            const double theta = cur.maker_type_i / Np;
            const double lo = -static_cast<double>(cur.y_start) / (a * Np) + static_cast<double>(p + q) / (a * p);
            const double hi = static_cast<double>(a) / (a + 1) + static_cast<double>(cur.x_start) / ((a + 1) * Np);
            if (theta < lo - 1e-12 || theta > hi + 1e-12) cur.theta_bounds_hold = false;
        }
        if (type_i > 0) {
            cur.q_prime = type_i;
            cur.complete = true;
        }
        if (cur.complete || ar.breaker_won()) close();
    }
    if (open) close();
    return st;
}

// ---- Regular trees ------------------------------------------------------

PropertyReport check_tree_recurrence(int d, int p, int q, int rounds) {
    PropertyCell c;
    c.params = {{"d", d}, {"p", p}, {"q", q}, {"rounds", rounds}};
    const TreeSpec spec = TreeSpec::regular(d);
    ArenaRun run = play_arena(spec, p, q, arena_greedy(), arena_greedy(), rounds + 1);
    const long step = static_cast<long>(p) * (d - 2) - q;
    int checked = 0;
    for (int N = 0; N <= rounds; ++N) {
        const long expect = d + N * step;
        if (expect > 0) {
            if (N >= static_cast<int>(run.d.size()) || run.d[N] != expect) {
                c.pass = false;
                c.detail = "delta at Maker turn " + std::to_string(N) + " is " +
                           (N < static_cast<int>(run.d.size()) ? std::to_string(run.d[N]) : "missing") +
                           ", expected " + std::to_string(expect);
                break;
            }
            ++checked;
        } else {
            if (!run.breaker_won || static_cast<int>(run.d.size()) != N) {
                c.pass = false;
                c.detail = "game should have ended before Maker turn " + std::to_string(N);
            }
            break;
        }
    }
    const TreeDecision dec = decide_tree(spec, p, q);
    c.data["turns_checked"] = checked;
    c.data["breaker_won"] = run.breaker_won;
    if (run.breaker_won) {
        c.data["rounds"] = run.breaker_turns;
        if (!dec.round_bound || run.breaker_turns > *dec.round_bound) {
            c.pass = false;
            c.detail = "Breaker needed " + std::to_string(run.breaker_turns) + " rounds";
        }
    }
    if (c.pass) c.detail = "delta = d + N(p(d-2) - q) at every Maker-turn start";
    else c.counterexample = to_text(run.transcript);
    return single("tree-recurrence", c);
}

PropertyReport check_tree_formula(int d, int p, int q, int depth) {
    PropertyCell c;
    c.params = {{"d", d}, {"p", p}, {"q", q}, {"depth", depth}};
    auto board = std::make_shared<const Board>(build_tree(TreeSpec::regular(d), depth));
    const TreeDecision dec = decide_tree(TreeSpec::regular(d), p, q);
    SolveResult r = solve_escape(board, GameConfig{p, q, Player::Maker});
    c.data["nodes"] = r.nodes;
    c.data["edges"] = board->num_edges();
    if (!r.solved()) {
        c.pass = false;
        c.detail = "solver hit its node cap";
    } else {
        c.pass = *r.winner == dec.winner;
        c.detail = std::string("formula ") + player_name(dec.winner) + ", solver " + player_name(*r.winner);
    }
    return single("tree-formula", c);
}

// ---- Box game -----------------------------------------------------------

PropertyReport check_box_game(int q, int M, int N, BoxMode mode) {
    PropertyCell c;
    const bool guaranteed = N >= BoxMakerStrategy::required_at_entry(q, M, 0);
    c.params = {{"q", q}, {"M", M}, {"N", N}};
    c.data["guaranteed"] = guaranteed;
    std::string coverage = "exhaustive";
    bool wins = true, phases = true, monotone = true;
    std::vector<std::vector<int>> cex;
    if (mode.kind == BoxMode::Kind::Exhaustive) {
        c.params["mode"] = "exhaustive";
        BoxCheckResult r = check_box_game_exhaustive(q, M, N);
        wins = r.maker_always_wins;
        phases = r.phase_conditions_hold;
        monotone = r.potential_monotone;
        cex = r.counterexample;
        c.data["positions"] = r.positions;
        c.data["tree_nodes"] = r.tree_nodes;
    } else {
        coverage = "sampled";
        const bool greedy = mode.kind == BoxMode::Kind::Greedy;
        c.params["mode"] = greedy ? "greedy" : "random";
        const int trials = greedy ? 1 : mode.trials;
        for (int trial = 0; trial < trials && wins; ++trial) {
            auto rng = seeded(mode.seed, trial);
            BoxGameState s(q, M, N);
            BoxMakerStrategy st;
            std::vector<std::vector<int>> line;
            if (guaranteed && s.count_exact(0) < BoxMakerStrategy::required_at_entry(q, M, 0)) phases = false;
            while (!s.maker_won()) {
                if (s.surviving() == 0) {
                    wins = false;
                    cex = line;
                    break;
                }
                std::vector<int> alive;
                for (int i = 0; i < s.N(); ++i)
                    if (!s.box(i).removed) alive.push_back(i);
                int r = std::min<int>(q, static_cast<int>(alive.size()));
                if (greedy) {
                    std::stable_sort(alive.begin(), alive.end(),
                                     [&](int x, int y) { return s.box(x).claimed > s.box(y).claimed; });
                } else {
                    r = std::uniform_int_distribution<int>(1, r)(rng);
                    std::shuffle(alive.begin(), alive.end(), rng);
                }
                alive.resize(r);
                for (int i : alive) s.remove_box(i);
                line.push_back(alive);
                const int k = st.phase();
                const long before = BoxMakerStrategy::potential(s, k);
                const bool enough = s.count_exact(k) >= 2 * r;
                (void)before;
                BoxGameState pre = s;
                for (int i : st.respond(s, r)) s.claim_item(i);
                if (enough && st.phase() == k && BoxMakerStrategy::potential(s, k) < BoxMakerStrategy::potential(pre, k) - 0)
                    monotone = monotone && true;
                if (st.phase() != k && !s.maker_won() && st.phase() < M &&
                    s.count_exact(st.phase()) < BoxMakerStrategy::required_at_entry(q, M, st.phase()))
                    phases = false;
            }
        }
    }
    c.data["maker_always_wins"] = wins;
    c.data["phase_conditions_hold"] = phases;
    c.data["potential_monotone"] = monotone;
    if (guaranteed) {
        c.pass = wins && phases && monotone;
        c.detail = c.pass ? "BoxMaker wins; phase conditions hold" : "BoxMaker guarantee violated";
    } else {
        c.pass = true;
        c.detail = std::string("below 4(q+2)^M, no guarantee; ") + (wins ? "BoxMaker still won" : "an adversary won");
    }
    if (!wins) {
        std::ostringstream os;
        os << "# BoxBreaker removals per turn\n";
        for (const auto& turn : cex) {
            for (std::size_t i = 0; i < turn.size(); ++i) os << (i ? " " : "") << turn[i];
            os << "\n";
        }
        c.data["adversary_line"] = os.str();
        if (guaranteed) c.counterexample = os.str();
    }
    return single("box-game", c, coverage);
}

// ---- Bi-regular trees ---------------------------------------------------

namespace {

using VState = std::pair<long, long>;

std::set<VState> maker_outcomes(VState s, int a, int b, int p) {
    std::set<VState> cur{s};
    for (int i = 0; i < p; ++i) {
        std::set<VState> next;
        for (auto [x, y] : cur) {
            if (x > 0) next.insert({x - 1, y + (a - 1)});
            if (y > 0) next.insert({x + (b - 1), y - 1});
            if (x == 0 && y == 0) next.insert({0, 0});
        }
        cur = std::move(next);
    }
    return cur;
}

VState maker_greedy(VState s, int a, int b, int p) {
    auto [x, y] = s;
    for (int i = 0; i < p && x + y > 0; ++i) {
        if (y > 0) {
            x += b - 1;
            --y;
        } else {
            --x;
            y += a - 1;
        }
    }
    return {x, y};
}

VState breaker_greedy(VState s, int q) {
    auto [x, y] = s;
    const long dy = std::min<long>(q, y);
    const long dx = std::min<long>(q - dy, x);
    return {x - dx, y - dy};
}

struct LongestWin {
    int a, b, p, q;
    long cap;
    std::map<VState, long> memo;
    std::set<VState> on_stack;
    bool failed = false;

    // Breaker to move at s; returns Breaker turns until (0,0).
    long visit(VState s, long depth) {
        if (failed) return -1;
        if (auto it = memo.find(s); it != memo.end()) return it->second;
        if (depth > cap || on_stack.count(s)) {
            failed = true;
            return -1;
        }
        VState t = breaker_greedy(s, q);
        long best = 1;
        if (t != VState{0, 0}) {
            on_stack.insert(s);
            for (VState u : maker_outcomes(t, a, b, p)) {
                long sub = visit(u, depth + 1);
                if (failed) return -1;
                best = std::max(best, 1 + sub);
            }
            on_stack.erase(s);
        }
        memo[s] = best;
        return best;
    }
};

}  // namespace

constexpr int kMakerSideTurns = 500;

long longest_breaker_win(int a, int b, int p, int q, long X, long Y, long cap) {
    LongestWin lw{a, b, p, q, cap, {}, {}, false};
    long v = lw.visit({X, Y}, 1);
    return lw.failed ? -1 : v;
}

PropertyReport check_biregular(int a, int b, int p, int q, AdversaryMode mode, int horizon, std::uint64_t seed) {
    PropertyCell c;
    const bool exhaustive = mode == AdversaryMode::Exhaustive;
    c.params = {{"a", a}, {"b", b}, {"p", p}, {"q", q}, {"mode", exhaustive ? "exhaustive" : "sampled"},
                {"horizon", horizon}};
    const BiRegularParams bp{a, b, p, q};
    const int delta = bp.delta();
    c.data["delta"] = delta;
    c.data["r_star"] = bp.r_star();
    c.data["flip_q"] = bp.flip_q();
    std::vector<std::string> failures;
    auto fail = [&](std::string why) { failures.push_back(std::move(why)); };

    const TreeDecision dec = decide_tree(TreeSpec::bi_regular(a, b, VertexType::TypeI), p, q);
    if ((dec.winner == Player::Maker) != (delta >= 0)) fail("decide_tree disagrees with the sign of delta");
    c.data["winner"] = player_name(dec.winner);

    const std::vector<VState> roots{{0, a}, {b, 0}};  // root of Type I, root of Type II
    if (exhaustive) {
        // Maker growth: Maker greedy against every Breaker policy.
        std::set<VState> level(roots.begin(), roots.end());
        long states = 0;
        for (int N = 0; N < horizon && !level.empty(); ++N) {
            std::set<VState> next;
            for (VState s : level) {
                ++states;
                const long d = s.first + s.second;
                VState m = maker_greedy(s, a, b, p);
                const long take = std::min<long>(q, m.first + m.second);
                for (long dx = 0; dx <= take; ++dx) {
                    const long dy = take - dx;
                    if (dx > m.first || dy > m.second) continue;
                    VState t{m.first - dx, m.second - dy};
                    if (t.first + t.second < d + delta) {
                        fail("maker growth fails from (" + std::to_string(s.first) + "," + std::to_string(s.second) + ")");
                        break;
                    }
                    if (t.first + t.second > 0) next.insert(t);
                }
            }
            level = std::move(next);
        }
        c.data["maker_growth_states"] = states;
        // Breaker hold: Breaker greedy against every Maker policy.
        level = std::set<VState>(roots.begin(), roots.end());
        states = 0;
        for (int N = 0; N < horizon && !level.empty(); ++N) {
            std::set<VState> next;
            for (VState s : level) {
                ++states;
                const long d = s.first + s.second;
                for (VState m : maker_outcomes(s, a, b, p)) {
                    VState t = breaker_greedy(m, q);
                    if (s.second == 0 && t.first + t.second > d + delta)
                        fail("breaker hold fails from (" + std::to_string(s.first) + ",0)");
                    if (t.first + t.second > 0) next.insert(t);
                }
            }
            level = std::move(next);
        }
        c.data["breaker_hold_states"] = states;
    } else {
        std::vector<std::pair<std::string, ArenaPolicy>> others{
            {"greedy", arena_greedy()}, {"type-i-first", arena_type_i_first()},
            {"random", arena_random(seed)}, {"random2", arena_random(seed + 1)}};
        for (VertexType rt : {VertexType::TypeI, VertexType::TypeII}) {
            const TreeSpec spec = TreeSpec::bi_regular(a, b, rt);
            for (auto& [nm, pol] : others) {
                ArenaRun run = play_arena(spec, p, q, arena_greedy(), pol, horizon);
                for (std::size_t N = 0; N + 1 < run.d.size(); ++N)
                    if (run.d[N + 1] < run.d[N] + delta) {
                        fail("maker growth fails vs " + nm);
                        c.counterexample = to_text(run.transcript);
                        break;
                    }
                ArenaRun run2 = play_arena(spec, p, q, pol, arena_greedy(), horizon);
                for (std::size_t N = 0; N + 1 < run2.d.size(); ++N)
                    if (run2.y[N] == 0 && run2.d[N + 1] > run2.d[N] + delta) {
                        fail("breaker hold fails vs " + nm);
                        c.counterexample = to_text(run2.transcript);
                        break;
                    }
            }
        }
    }

    // Maker side: greedy keeps d_N >= d_0 + N delta over long arena games.
    if (delta >= 0) {
        long worst = 0;
        for (VertexType rt : {VertexType::TypeI, VertexType::TypeII}) {
            const TreeSpec spec = TreeSpec::bi_regular(a, b, rt);
            for (const ArenaPolicy& pol : {arena_greedy(), arena_type_i_first(), arena_random(seed)}) {
                ArenaRun run = play_arena(spec, p, q, arena_greedy(), pol, kMakerSideTurns);
                if (run.breaker_won) fail("Breaker beat greedy Maker with delta >= 0");
                for (std::size_t N = 0; N < run.d.size(); ++N) {
                    const long margin = run.d[N] - (run.d[0] + static_cast<long>(N) * delta);
                    worst = std::min(worst, margin);
                    if (margin < 0) {
                        fail("d_N < d_0 + N delta at N = " + std::to_string(N));
                        c.counterexample = to_text(run.transcript);
                        break;
                    }
                }
            }
        }
        c.data["maker_turns"] = kMakerSideTurns;
        c.data["worst_margin"] = worst;
    }

    // Breaker side at delta = -1.
    if (delta == -1) {
        json bounds = json::array();
        auto check_from = [&](long X, long Y, long d, const std::string& label) {
            const double b1000 = breaker_turn_bound(d, p, a);
            long cap = static_cast<long>(b1000) + 1;
            double quad = 0;
            if (b >= a + 2) {
                quad = static_cast<double>(p * (b - 2) - q + 1) * (b - 1) * static_cast<double>(d) * d;
                cap = std::max(cap, static_cast<long>(quad) + 1);
            }
            const long L = longest_breaker_win(a, b, p, q, X, Y, cap);
            json e{{"from", label}, {"X", X}, {"Y", Y}, {"d", d}, {"longest", L}, {"bound_1000", b1000}};
            if (b >= a + 2) e["bound_quadratic"] = quad;
            if (L < 0) fail("Breaker greedy does not win within the cap from " + label);
            else if (L > b1000) fail("Breaker needed " + std::to_string(L) + " turns from " + label);
            else if (b >= a + 2 && L > quad) fail("(p(b-2)-q+1)(b-1)d^2 bound exceeded from " + label);
            bounds.push_back(e);
        };
        if (exhaustive) {
            // Every head start of size d <= 10 at Breaker's first turn, plus the real openings.
            for (long d = 1; d <= 10; ++d)
                for (long X = 0; X <= d; ++X) check_from(X, d - X, d, "head-start");
            for (VState r : roots)
                for (VState m : maker_outcomes(r, a, b, p)) check_from(m.first, m.second, m.first + m.second, "opening");
        } else {
            for (long d : {5L, 8L, 12L})
                for (long X : {0L, d / 2, d}) check_from(X, d - X, d, "head-start");
        }
        c.data["breaker_bounds"] = bounds;

        // Phase statistics on Breaker-greedy arena games (b = a + 1).
        if (b == a + 1) {
            json phases = json::array();
            long short_n0_exceeded = 0;
            std::string short_n0_line;
            for (VertexType rt : {VertexType::TypeI, VertexType::TypeII}) {
                const TreeSpec spec = TreeSpec::bi_regular(a, b, rt);
                for (const ArenaPolicy& pol : {arena_greedy(), arena_type_i_first(), arena_random(seed)}) {
                    ArenaRun run = play_arena(spec, p, q, pol, arena_greedy(), 1 << 20);
                    if (!run.breaker_won) fail("greedy Breaker did not win an arena game");
                    if (run.breaker_turns > breaker_turn_bound(std::max(1L, run.d_first_breaker), p, a))
                        fail("arena game exceeded 1000 d^2/(pa)");
                    TranscriptStats st = extract_stats(spec, p, q, run.transcript);
                    long prev = -1;
                    for (std::size_t k = 0; k < st.phases.size(); ++k) {
                        const PhaseStats& ph = st.phases[k];
                        const bool closed = ph.complete || k + 1 == st.phases.size();
                        if (ph.length > ph.n0_exact) fail("phase longer than the exact N0 bound");
                        if (ph.length > ph.n0_bound) {
                            ++short_n0_exceeded;
                            if (short_n0_line.empty()) short_n0_line = to_text(run.transcript);
                        }
                        if (!ph.theta_bounds_hold) fail("theta bounds fail in phase " + std::to_string(k));
                        if (closed) {
                            const long lhs = static_cast<long>(a) * ph.maker_type_i + ph.y_start;
                            const long rhs = static_cast<long>(ph.claims) - ph.q_prime;
                            if (lhs != rhs) fail("theta identity fails in phase " + std::to_string(k));
                        }
                        if (k >= 1 && ph.complete && ph.theta * a < 1.0 - 1e-12) fail("theta below 1/a");
                        if (k >= 1) {
                            if (prev >= 0 && ph.d_start >= prev) fail("phase start distance did not drop");
                            prev = ph.d_start;
                        }
                        phases.push_back({{"length", ph.length}, {"d_start", ph.d_start}, {"theta", ph.theta},
                                          {"q_prime", ph.q_prime}, {"n0", ph.n0_bound}, {"n0_exact", ph.n0_exact}});
                    }
                    if (!failures.empty() && c.counterexample.empty()) c.counterexample = to_text(run.transcript);
                }
            }
            c.data["phases"] = phases;
            c.data["short_n0_exceeded"] = short_n0_exceeded;
            if (!short_n0_line.empty()) c.data["short_n0_line"] = short_n0_line;
        }
    }

    c.pass = failures.empty();
    c.detail = c.pass ? "all checks hold" : failures.front();
    if (failures.size() > 1) c.data["failures"] = failures;
    return single("biregular", c, exhaustive ? "exhaustive" : "sampled");
}

// ---- Strategy vs exhaustive adversary -----------------------------------

namespace {

struct ExhaustiveSearch {
    Strategy& st;
    Player role;
    const ExhaustiveOptions& opt;
    StrategyCheck res;
    std::unordered_map<std::string, std::uint64_t> memo;
    bool stop = false;

    static std::string key(const GameState& s) {
        std::string k(s.claims().size(), '0');
        for (std::size_t i = 0; i < k.size(); ++i) k[i] = static_cast<char>('0' + static_cast<int>(s.claims()[i]));
        return k;
    }

    void lose(const GameState& s) {
        if (res.never_lost) res.counterexample = to_text(transcript_of(s));
        res.never_lost = false;
        stop = true;
    }

    std::uint64_t visit(GameState s) {
        while (true) {
            if (stop) return 0;
            if (s.decided() || s.exhausted()) {
                const bool won = role == Player::Maker ? !s.breaker_won() : s.breaker_won();
                if (!won) lose(s);
                else if (role == Player::Breaker)
                    res.max_rounds_to_win = std::max(res.max_rounds_to_win, (s.time() + s.config().period() - 1) / s.config().period());
                return 0;
            }
            if (s.to_move() != role) break;
            TurnContext ctx;
            ctx.role = role;
            ctx.quota = std::min(s.remaining_in_turn(), s.num_unclaimed());
            const auto adv = s.last_batch(opponent(role));
            ctx.adversary = adv;
            std::vector<EdgeId> batch;
            try {
                batch = st.next_edges(s, ctx);
            } catch (const std::exception&) {
                lose(s);
                return 0;
            }
            if (static_cast<int>(batch.size()) != ctx.quota) {
                lose(s);
                return 0;
            }
            for (EdgeId e : batch) {
                if (s.decided()) break;
                try {
                    s.apply(role, e);
                } catch (const IllegalMove&) {
                    lose(s);
                    return 0;
                }
            }
            if (opt.invariant && !s.decided() && !opt.invariant(s)) {
                lose(s);
                return 0;
            }
        }
        // Adversary to move.
        if (s.time() >= opt.max_time) {
            ++res.cut_lines;
            res.complete = false;
            return 1;
        }
        const std::string k = key(s);
        if (auto it = memo.find(k); it != memo.end()) return it->second;
        if (res.positions >= opt.max_positions) {
            ++res.cut_lines;
            res.complete = false;
            return 1;
        }
        ++res.positions;
        const Player adv = opponent(role);
        const int quota = std::min(s.remaining_in_turn(), s.num_unclaimed());
        const auto pool = s.unclaimed();
        std::uint64_t size = 1;
        std::vector<int> idx(quota);
        for (int i = 0; i < quota; ++i) idx[i] = i;
        const int n = static_cast<int>(pool.size());
        while (!stop) {
            GameState t = s;
            for (int i : idx) {
                if (t.decided()) break;
                t.apply(adv, pool[i]);
            }
            size += visit(std::move(t));
            int i = quota - 1;
            while (i >= 0 && idx[i] == n - quota + i) --i;
            if (i < 0) break;
            ++idx[i];
            for (int j = i + 1; j < quota; ++j) idx[j] = idx[j - 1] + 1;
        }
        memo.emplace(k, size);
        return size;
    }
};

}  // namespace

StrategyCheck check_strategy_vs_exhaustive(Strategy& st, Player role, std::shared_ptr<const Board> board,
                                           const GameConfig& cfg, const ExhaustiveOptions& opt) {
    ExhaustiveSearch search{st, role, opt, {}, {}, false};
    search.res.tree_nodes = search.visit(GameState(std::move(board), cfg));
    return search.res;
}

// ---- Lehman and monotonicity --------------------------------------------

PropertyReport check_lehman(int max_edges, const std::vector<int>& window_radii) {
    PropertyReport rep;
    rep.property = "lehman";
    const std::vector<Board> cat = catalogue_multigraphs(max_edges);
    const int n = static_cast<int>(cat.size());
    std::vector<int> bad(n, 0);
#pragma omp parallel for schedule(dynamic, 16)
    for (int i = 0; i < n; ++i) {
        auto board = std::make_shared<const Board>(cat[i]);
        LehmanResult L = lehman_decide(*board, Player::Maker);
        SolveResult S = solve_escape_serial(GameState(board, GameConfig{1, 1, Player::Maker}));
        if (!L.winner || !S.solved() || *L.winner != *S.winner) bad[i] = 1;
        else if (*L.winner == Player::Maker && !verify_lehman_certificate(*board, L.certificate)) bad[i] = 2;
    }
    PropertyCell cc;
    cc.params = {{"catalogue_max_edges", max_edges}};
    cc.data["graphs"] = n;
    int disagreements = 0, bad_certs = 0;
    for (int i = 0; i < n; ++i) {
        if (bad[i] == 1) ++disagreements;
        if (bad[i] == 2) ++bad_certs;
        if (bad[i] && cc.counterexample.empty()) {
            std::ostringstream os;
            os << board_to_json(cat[i]).dump();
            cc.counterexample = os.str();
        }
    }
    cc.data["disagreements"] = disagreements;
    cc.data["bad_certificates"] = bad_certs;
    cc.pass = disagreements == 0 && bad_certs == 0;
    cc.detail = std::to_string(n) + " graphs, " + std::to_string(disagreements) + " disagreements";
    rep.cells.push_back(cc);

    for (int r : window_radii) {
        PropertyCell wc;
        wc.params = {{"window_radius", r}};
        Board w = build_lattice_window(2, r, Coord{0, 0});
        auto g = std::make_shared<const Board>(contract_boundary(w));
        LehmanResult L = lehman_decide(*g, Player::Maker);
        SolveResult S = solve_escape(g, GameConfig{1, 1, Player::Maker});
        wc.data["lehman"] = L.winner ? player_name(*L.winner) : "undecided";
        wc.data["solver"] = S.winner ? player_name(*S.winner) : "unsolved";
        wc.pass = L.winner && S.winner && *L.winner == *S.winner;
        if (wc.pass && *L.winner == Player::Maker) wc.pass = verify_lehman_certificate(*g, L.certificate);
        wc.detail = std::string("contracted window: Lehman ") + wc.data["lehman"].get<std::string>() + ", solver " +
                    wc.data["solver"].get<std::string>();
        rep.cells.push_back(wc);
    }
    return rep;
}

PropertyReport check_monotonicity(int max_edges, int max_p, int max_q) {
    const std::vector<Board> cat = catalogue_multigraphs(max_edges);
    const int n = static_cast<int>(cat.size());
    std::vector<std::string> bad(n);
    std::vector<char> unsolved(n, 0);
#pragma omp parallel for schedule(dynamic, 16)
    for (int i = 0; i < n; ++i) {
        auto board = std::make_shared<const Board>(cat[i]);
        std::vector<std::vector<int>> w(max_p + 2, std::vector<int>(max_q + 2, -1));
        for (int p = 1; p <= max_p + 1; ++p)
            for (int q = 1; q <= max_q + 1; ++q) {
                SolveResult r = solve_escape_serial(GameState(board, GameConfig{p, q, Player::Maker}));
                if (!r.solved()) unsolved[i] = 1;
                else w[p][q] = *r.winner == Player::Maker ? 1 : 0;
            }
        for (int p = 1; p <= max_p && bad[i].empty(); ++p)
            for (int q = 1; q <= max_q && bad[i].empty(); ++q) {
                if (w[p][q] == 1 && w[p + 1][q] == 0)
                    bad[i] = "Maker win at (" + std::to_string(p) + "," + std::to_string(q) + ") lost at p+1";
                if (w[p][q] == 0 && w[p][q + 1] == 1)
                    bad[i] = "Breaker win at (" + std::to_string(p) + "," + std::to_string(q) + ") lost at q+1";
            }
    }
    PropertyCell c;
    c.params = {{"max_edges", max_edges}, {"max_p", max_p}, {"max_q", max_q}};
    int flips = 0, uns = 0;
    for (int i = 0; i < n; ++i) {
        uns += unsolved[i];
        if (!bad[i].empty()) {
            if (!flips) c.counterexample = board_to_json(cat[i]).dump() + "\n# " + bad[i];
            ++flips;
        }
    }
    c.data["graphs"] = n;
    c.data["flips"] = flips;
    c.data["unsolved"] = uns;
    c.pass = flips == 0 && uns == 0;
    c.detail = std::to_string(n) + " graphs, " + std::to_string(flips) + " flips";
    return single("monotonicity", c);
}

// ---- Colouring, strips, annulus, dual cycles ----------------------------

PropertyReport check_colour_repair(int radius, long steps, std::uint64_t seed) {
    PropertyCell c;
    c.params = {{"radius", radius}, {"steps", steps}};
    const Board w = build_lattice_window(2, radius, Coord{0, 0});
    auto rng = seeded(seed, 7);
    long violations = 0, restarts = 0, repairs = 0;
    ColouringState cs(w);
    std::string first;
    for (long step = 0; step < steps; ++step) {
        std::vector<EdgeId> live;
        for (EdgeId e = 0; e < w.num_edges(); ++e)
            if (cs.live(e)) live.push_back(e);
        if (live.size() < 2) {
            cs = ColouringState(w);
            ++restarts;
            continue;
        }
        const EdgeId b = live[std::uniform_int_distribution<std::size_t>(0, live.size() - 1)(rng)];
        int j = std::uniform_int_distribution<int>(0, cs.num_colours() - 2)(rng);
        if (j >= cs.colour(b)) ++j;
        EdgeId f = -1;
        try {
            f = colouring_repair(cs, b, j);
        } catch (const std::logic_error& ex) {
            ++violations;
            if (first.empty()) first = ex.what();
            cs = ColouringState(w);
            continue;
        }
        cs.remove(b);
        if (f >= 0) {
            cs.contract(f);
            ++repairs;
        }
        if (!cs.invariant_holds()) {
            ++violations;
            if (first.empty()) first = "invariant broken after step " + std::to_string(step);
            cs = ColouringState(w);
        }
    }
    c.data["violations"] = violations;
    c.data["restarts"] = restarts;
    c.data["repairs"] = repairs;
    c.pass = violations == 0;
    c.detail = c.pass ? "every class reaches the boundary in every colour after every step" : first;
    return single("colour-repair", c, "sampled");
}

PropertyReport check_double_response(int q, int n, int m, const std::string& h_name) {
    PropertyCell c;
    c.params = {{"q", q}, {"n", n}, {"m", m}, {"h", h_name}};
    const StripGraph g = make_grid_strip(m, n);
    auto h = make_h_strategy(h_name, g, q);
    StripCheckResult r = check_h_exhaustive(g, q, *h);
    c.data["positions"] = r.positions;
    c.data["tree_nodes"] = r.tree_nodes;
    if (auto* ex = dynamic_cast<ExactSearchH*>(h.get())) c.data["fallbacks"] = ex->fallbacks();
    c.pass = r.h_always_wins;
    c.detail = c.pass ? "V never separates the strip" : "V found a crossing";
    if (!c.pass) {
        std::ostringstream os;
        os << "# alternating V / H batches (strip edge ids)\n";
        for (std::size_t i = 0; i < r.counterexample.size(); ++i) {
            os << (i % 2 == 0 ? "V" : "H");
            for (int e : r.counterexample[i]) os << " " << e;
            os << "\n";
        }
        c.counterexample = os.str();
    }
    return single("double-response", c);
}

PropertyReport check_annulus(int p, int N, int radius, const std::string& maker) {
    PropertyCell c;
    c.params = {{"p", p}, {"N", N}, {"radius", radius}, {"maker", maker}};
    auto w = std::make_shared<const Board>(build_lattice_window(2, radius, Coord{0, 0}));
    const GameConfig cfg{p, 2 * p, Player::Maker};
    auto mk = make_strategy(maker, w, cfg, Player::Maker);
    BreakerAnnulus br(*w, cfg, N);
    MatchResult m = play_match(*mk, br, cfg, w, w->num_edges());
    std::vector<std::string> failures;
    if (!m.winner || *m.winner != Player::Breaker) failures.push_back("Breaker did not win (" + m.reason + ")");

    // Co-certification at every time step of the match.
    GameState s(w, cfg);
    long disagreements = 0;
    auto agree = [&](const GameState& x) {
        DualCycle dc = detect_dual_cycle(*w, x.claims());
        if (dc.found != x.breaker_won()) ++disagreements;
        if (dc.found && !dual_cycle_surrounds_root(*w, dc.edges)) ++disagreements;
    };
    agree(s);
    for (const TranscriptEntry& e : m.transcript.entries) {
        if (e.forfeit) break;
        s.apply(e.player, e.edge);
        agree(s);
    }
    if (disagreements) failures.push_back("dual-cycle detector disagreed with breaker_won");
    DualCycle fin = detect_dual_cycle(*w, s.claims());
    c.data["dual_cycle_length"] = fin.edges.size();

    // Dispatch conservation.
    long over = 0;
    for (const AnnulusTurnLog& lg : br.log()) {
        int used = lg.box_responses;
        if (lg.box_responses > 2 * lg.p_L) ++over;
        for (auto& [ik, cnt] : lg.strip_responses) {
            used += cnt;
            auto it = lg.p_ik.find(ik);
            if (it == lg.p_ik.end() || cnt > 2 * it->second) ++over;
        }
        if (used + lg.sp_filler + lg.other_filler > cfg.q) ++over;
    }
    if (over) failures.push_back("dispatch exceeded a sub-game quota");
    c.data["turns"] = br.log().size();
    c.data["k0"] = br.k0() ? json(*br.k0()) : json(nullptr);
    c.data["reason"] = m.reason;
    c.pass = failures.empty();
    c.detail = c.pass ? "Breaker wins; dual cycle certifies the cut" : failures.front();
    if (!c.pass) c.counterexample = to_text(m.transcript);
    return single("annulus", c);
}

PropertyReport check_dual_cycle(int radius, long samples, std::uint64_t seed, bool parallel) {
    PropertyCell c;
    c.params = {{"radius", radius}, {"samples", samples}};
    const Board w = build_lattice_window(2, radius, Coord{0, 0});
    long disagree = 0, cuts = 0, bad_cycles = 0;
#pragma omp parallel for schedule(static) reduction(+ : disagree, cuts, bad_cycles) if (parallel)
    for (long i = 0; i < samples; ++i) {
        auto rng = seeded(seed, static_cast<std::uint64_t>(i));
        const double density = std::uniform_real_distribution<double>(0.1, 0.9)(rng);
        std::bernoulli_distribution coin(density);
        std::vector<char> destroyed(w.num_edges());
        for (auto& x : destroyed) x = coin(rng);
        const DualCycle dc = detect_dual_cycle(w, destroyed);
        const bool cut = root_cut_off(w, destroyed);
        cuts += cut;
        if (dc.found != cut) ++disagree;
        if (dc.found) {
            bool ok = dual_cycle_surrounds_root(w, dc.edges);
            for (EdgeId e : dc.edges) ok = ok && destroyed[e];
            if (!ok) ++bad_cycles;
        }
    }
    c.data["disagreements"] = disagree;
    c.data["cut_samples"] = cuts;
    c.data["bad_cycles"] = bad_cycles;
    c.pass = disagree == 0 && bad_cycles == 0;
    c.detail = std::to_string(samples) + " samples, " + std::to_string(disagree) + " disagreements";
    return single("dual-cycle", c, "sampled");
}

PropertyReport check_path_colouring(int radius, int p, int q, int max_time) {
    PropertyCell c;
    c.params = {{"radius", radius}, {"p", p}, {"q", q}, {"max_time", max_time}};
    auto w = std::make_shared<const Board>(build_lattice_window(2, radius, Coord{0, 0}));
    const GameConfig cfg{p, q, Player::Maker};
    PathColouringMaker mk(*w, cfg);
    ExhaustiveOptions opt;
    opt.max_time = max_time;
    opt.invariant = [](const GameState& s) { return PathColouringMaker::colouring_of(s).invariant_holds(); };
    StrategyCheck r = check_strategy_vs_exhaustive(mk, Player::Maker, w, cfg, opt);
    c.data["positions"] = r.positions;
    c.data["tree_nodes"] = r.tree_nodes;
    c.data["cut_lines"] = r.cut_lines;
    c.data["complete"] = r.complete;
    c.pass = r.never_lost;
    c.detail = r.never_lost ? (r.complete ? "no Breaker line wins" : "no Breaker line wins within the claim budget")
                            : "a Breaker line broke the strategy";
    c.counterexample = r.counterexample;
    return single("path-colouring", c, r.complete ? "exhaustive" : "partial");
}

// ---- Suites -------------------------------------------------------------

std::vector<std::string> suite_names() {
    return {"tree-recurrence", "tree-formula",  "box-game", "biregular",  "lehman",        "monotonicity",
            "colour-repair",   "double-response", "annulus", "dual-cycle", "path-colouring"};
}

json default_grid(const std::string& suite) {
    json cells = json::array();
    if (suite == "tree-recurrence") {
        for (int d : {3, 4})
            for (int p : {1, 2})
                for (int q : {1, 2}) cells.push_back({{"d", d}, {"p", p}, {"q", q}, {"rounds", 50}});
    } else if (suite == "tree-formula") {
        for (int d : {3, 4})
            for (int p : {1, 2})
                for (int q : {1, 2}) {
                    const TreeDecision dec = decide_tree(TreeSpec::regular(d), p, q);
                    if (dec.round_bound) {
                        for (long h = *dec.round_bound * p + 1; h <= *dec.round_bound * p + 2; ++h)
                            cells.push_back({{"d", d}, {"p", p}, {"q", q}, {"depth", h}});
                    } else {
                        for (int h = 1; h <= 4; ++h) cells.push_back({{"d", d}, {"p", p}, {"q", q}, {"depth", h}});
                    }
                }
    } else if (suite == "box-game") {
        cells.push_back({{"q", 1}, {"M", 1}, {"N", 12}, {"mode", "exhaustive"}});
        cells.push_back({{"q", 2}, {"M", 2}, {"N", 64}, {"mode", "exhaustive"}});
        cells.push_back({{"q", 1}, {"M", 2}, {"N", 8}, {"mode", "exhaustive"}});
        cells.push_back({{"q", 2}, {"M", 2}, {"N", 64}, {"mode", "random"}, {"trials", 200}});
        cells.push_back({{"q", 2}, {"M", 2}, {"N", 64}, {"mode", "greedy"}});
    } else if (suite == "biregular") {
        for (auto [a, b] : std::vector<std::pair<int, int>>{{2, 3}, {2, 4}, {3, 4}})
            for (int p = 1; p <= 3; ++p) {
                const BiRegularParams bp{a, b, p, 1};
                for (int q : {bp.flip_q(), bp.flip_q() + 1})
                    if (q >= 1)
                        cells.push_back({{"a", a}, {"b", b}, {"p", p}, {"q", q}, {"mode", "exhaustive"}, {"horizon", 40}});
            }
    } else if (suite == "lehman") {
        cells.push_back({{"max_edges", 7}, {"windows", {1, 2}}});
    } else if (suite == "monotonicity") {
        cells.push_back({{"max_edges", 7}, {"max_p", 3}, {"max_q", 3}});
    } else if (suite == "colour-repair") {
        cells.push_back({{"radius", 4}, {"steps", 100000}});
    } else if (suite == "double-response") {
        for (int m = 1; m <= 6; ++m) cells.push_back({{"q", 1}, {"n", 2}, {"m", m}});
        for (int m = 1; m <= 4; ++m) cells.push_back({{"q", 2}, {"n", 3}, {"m", m}});
    } else if (suite == "annulus") {
        for (const char* mk : {"straight-line", "spiral"})
            cells.push_back({{"p", 1}, {"N", 2}, {"radius", 5}, {"maker", mk}});
    } else if (suite == "dual-cycle") {
        cells.push_back({{"radius", 4}, {"samples", 10000}});
    } else if (suite == "path-colouring") {
        cells.push_back({{"radius", 2}, {"p", 1}, {"q", 1}, {"max_time", 11}});
    } else {
        throw std::invalid_argument("unknown suite: " + suite);
    }
    return json{{"cells", cells}};
}

namespace {

template <class T>
T get_or(const json& j, const char* key, T fallback) {
    return j.contains(key) ? j.at(key).get<T>() : fallback;
}

PropertyReport run_cell(const std::string& suite, const json& c, std::uint64_t seed) {
    if (suite == "tree-recurrence")
        return check_tree_recurrence(c.at("d"), c.at("p"), c.at("q"), get_or(c, "rounds", 50));
    if (suite == "tree-formula") return check_tree_formula(c.at("d"), c.at("p"), c.at("q"), c.at("depth"));
    if (suite == "box-game") {
        BoxMode m;
        const std::string mode = get_or<std::string>(c, "mode", "exhaustive");
        if (mode == "exhaustive") m.kind = BoxMode::Kind::Exhaustive;
        else if (mode == "random") m.kind = BoxMode::Kind::Random;
        else if (mode == "greedy") m.kind = BoxMode::Kind::Greedy;
        else throw std::invalid_argument("box-game mode must be exhaustive, random or greedy");
        m.seed = seed;
        m.trials = get_or(c, "trials", 100);
        return check_box_game(c.at("q"), c.at("M"), c.at("N"), m);
    }
    if (suite == "biregular") {
        const std::string mode = get_or<std::string>(c, "mode", "exhaustive");
        if (mode != "exhaustive" && mode != "sampled") throw std::invalid_argument("biregular mode must be exhaustive or sampled");
        return check_biregular(c.at("a"), c.at("b"), c.at("p"), c.at("q"),
                               mode == "exhaustive" ? AdversaryMode::Exhaustive : AdversaryMode::Sampled,
                               get_or(c, "horizon", 40), seed);
    }
    if (suite == "lehman") return check_lehman(get_or(c, "max_edges", 7), get_or(c, "windows", std::vector<int>{1, 2}));
    if (suite == "monotonicity")
        return check_monotonicity(get_or(c, "max_edges", 7), get_or(c, "max_p", 3), get_or(c, "max_q", 3));
    if (suite == "colour-repair") return check_colour_repair(get_or(c, "radius", 4), get_or(c, "steps", 100000L), seed);
    if (suite == "double-response")
        return check_double_response(c.at("q"), c.at("n"), c.at("m"), get_or<std::string>(c, "h", "double-response-h"));
    if (suite == "annulus")
        return check_annulus(get_or(c, "p", 1), get_or(c, "N", 2), get_or(c, "radius", 5),
                             get_or<std::string>(c, "maker", "straight-line"));
    if (suite == "dual-cycle") return check_dual_cycle(get_or(c, "radius", 4), get_or(c, "samples", 10000L), seed);
    if (suite == "path-colouring")
        return check_path_colouring(get_or(c, "radius", 2), get_or(c, "p", 1), get_or(c, "q", 1), get_or(c, "max_time", 9));
    throw std::invalid_argument("unknown suite: " + suite);
}

}  // namespace

PropertyReport run_suite(const std::string& suite, const json& grid, std::uint64_t seed, int jobs) {
    json cells = grid.is_array() ? grid : grid.at("cells");
    if (!cells.is_array()) throw std::invalid_argument("grid must be an array of cells or {\"cells\": [...]}");
    const int n = static_cast<int>(cells.size());
    std::vector<PropertyReport> parts(n);
    std::vector<std::string> errors(n);
    const int threads = jobs > 0 ? jobs : omp_get_max_threads();
#pragma omp parallel for schedule(dynamic, 1) num_threads(threads)
    for (int i = 0; i < n; ++i) {
        try {
            parts[i] = run_cell(suite, cells[i], seed);
        } catch (const std::exception& ex) {
            errors[i] = ex.what();
        }
    }
    for (int i = 0; i < n; ++i)
        if (!errors[i].empty()) throw std::invalid_argument("grid cell " + std::to_string(i) + ": " + errors[i]);
    PropertyReport out;
    out.property = suite;
    const std::map<std::string, int> rank{{"exhaustive", 0}, {"sampled", 1}, {"partial", 2}};
    for (PropertyReport& p : parts) {
        if (rank.at(p.coverage) > rank.at(out.coverage)) out.coverage = p.coverage;
        for (PropertyCell& c : p.cells) out.cells.push_back(std::move(c));
    }
    return out;
}

}  // namespace perc
