// Acceptance criteria AC1-AC10: one PASS/FAIL line each; exit status 1 if any fails.
#include <chrono>
#include <cstdio>
#include <functional>
#include <string>

#include "perc/harness.hpp"
#include "perc/solver.hpp"

using namespace perc;
using nlohmann::json;

namespace {

struct Outcome {
    bool pass = false;
    std::string detail;
};

int failures = 0;

void criterion(int n, const char* what, double limit_s, const std::function<Outcome()>& body) {
    const auto t0 = std::chrono::steady_clock::now();
    Outcome o;
    try {
        o = body();
    } catch (const std::exception& e) {
        o = {false, std::string("exception: ") + e.what()};
    }
    const double s = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    if (limit_s > 0 && s > limit_s) {
        o.pass = false;
        o.detail += " (over the " + std::to_string(static_cast<int>(limit_s)) + " s limit)";
    }
    if (!o.pass) ++failures;
    std::printf("AC%-2d %s  %-48s %8.2f s  %s\n", n, o.pass ? "PASS" : "FAIL", what, s, o.detail.c_str());
    std::fflush(stdout);
}

std::string first_failure(const PropertyReport& r) {
    for (const PropertyCell& c : r.cells)
        if (!c.pass) return c.params.dump() + ": " + c.detail;
    return {};
}

Outcome suite(const std::string& name, const json& grid = {}) {
    PropertyReport r = run_suite(name, grid.is_null() ? default_grid(name) : grid, 1, 0);
    Outcome o{r.all_pass(), std::to_string(r.cells.size()) + " cells, coverage " + r.coverage};
    if (!o.pass) o.detail += "; " + first_failure(r);
    return o;
}

}  // namespace

int main() {
    criterion(1, "tree formula vs exhaustive solver", 60, [] { return suite("tree-formula"); });

    criterion(2, "delta recurrence under greedy play", 0, [] { return suite("tree-recurrence"); });

    criterion(3, "bi-regular winner flip and turn bounds", 300, [] {
        PropertyReport r = run_suite("biregular", default_grid("biregular"), 1, 0);
        Outcome o{r.all_pass(), std::to_string(r.cells.size()) + " cells"};
        long max_turns = 0, short_n0 = 0;
        for (const PropertyCell& c : r.cells) {
            const int q = c.params["q"], flip = c.data["flip_q"];
            const std::string want = q <= flip ? "Maker" : "Breaker";
            if (c.data["winner"] != want) {
                o.pass = false;
                o.detail += "; winner at " + c.params.dump() + " is " + c.data["winner"].get<std::string>();
            }
            if (c.data.contains("breaker_bounds"))
                for (const json& b : c.data["breaker_bounds"]) max_turns = std::max(max_turns, b["longest"].get<long>());
            if (c.data.contains("short_n0_exceeded")) short_n0 += c.data["short_n0_exceeded"].get<long>();
        }
        o.detail += ", longest Breaker win " + std::to_string(max_turns) + " turns";
        o.detail += ", short N0 exceeded " + std::to_string(short_n0) + "x (exact N0 holds)";
        if (!r.all_pass()) o.detail += "; " + first_failure(r);
        return o;
    });

    criterion(4, "box game vs exhaustive BoxBreaker", 120, [] {
        json cells = json::array({{{"q", 1}, {"M", 1}, {"N", 12}, {"mode", "exhaustive"}},
                                  {{"q", 2}, {"M", 2}, {"N", 64}, {"mode", "exhaustive"}}});
        return suite("box-game", json{{"cells", cells}});
    });

    criterion(5, "Lehman criterion vs solver (<= 7 edges, r=1,2)", 0, [] {
        PropertyReport r = run_suite("lehman", json{{"cells", {{{"max_edges", 7}, {"windows", {1, 2}}}}}}, 1, 0);
        Outcome o{r.all_pass(), std::to_string(r.cells.front().data.value("graphs", 0)) + " catalogue graphs"};
        if (!o.pass) o.detail += "; " + first_failure(r);
        return o;
    });

    criterion(6, "(1,1) on Z^2 windows r=1,2 and path-colouring", 0, [] {
        Outcome o{true, ""};
        for (int r = 1; r <= 2; ++r) {
            auto w = std::make_shared<const Board>(build_lattice_window(2, r, Coord{0, 0}));
            SolveResult s = solve_escape(w, GameConfig{1, 1, Player::Maker});
            const bool ok = s.solved() && *s.winner == Player::Maker;
            o.pass = o.pass && ok;
            o.detail += "r=" + std::to_string(r) + (ok ? " Maker" : " not Maker") + ", ";
        }
        PropertyReport pc = check_path_colouring(2, 1, 1, 11);
        o.pass = o.pass && pc.all_pass();
        const PropertyCell& c = pc.cells.front();
        o.detail += "path-colouring never lost up to 11 claims";
        if (c.data.contains("tree_nodes")) o.detail += " (" + c.data["tree_nodes"].dump() + " tree nodes)";
        if (!pc.all_pass()) o.detail += "; " + c.detail;
        return o;
    });

    criterion(7, "colour-repair invariant, 1e5 steps on 9x9", 0, [] {
        return suite("colour-repair", json{{"cells", {{{"radius", 4}, {"steps", 100000}}}}});
    });

    criterion(8, "double-response H vs exhaustive V", 0, [] {
        json cells = json::array();
        for (int m = 1; m <= 6; ++m) cells.push_back({{"q", 1}, {"n", 2}, {"m", m}});
        for (int m = 1; m <= 4; ++m) cells.push_back({{"q", 2}, {"n", 3}, {"m", m}});
        return suite("double-response", json{{"cells", cells}});
    });

    criterion(9, "annulus Breaker and dual-cycle certification", 0, [] {
        Outcome a = suite("annulus", json{{"cells", {{{"p", 1}, {"N", 2}, {"radius", 5}, {"maker", "straight-line"}},
                                                     {{"p", 1}, {"N", 2}, {"radius", 5}, {"maker", "spiral"}}}}});
        Outcome d = suite("dual-cycle", json{{"cells", {{{"radius", 4}, {"samples", 10000}}}}});
        return Outcome{a.pass && d.pass, "annulus: " + a.detail + "; dual-cycle: " + d.detail};
    });

    criterion(10, "monotonicity in p and q (<= 7 edges)", 0, [] {
        return suite("monotonicity", json{{"cells", {{{"max_edges", 7}, {"max_p", 3}, {"max_q", 3}}}}});
    });

    std::printf("%d of 10 criteria failed\n", failures);
    return failures == 0 ? 0 : 1;
}
