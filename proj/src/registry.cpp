#include "perc/registry.hpp"

#include <stdexcept>

#include "perc/transcript.hpp"

namespace perc {

StrategySpec parse_strategy_name(std::string_view name) {
    StrategySpec s;
    const auto open = name.find('(');
    if (open == std::string_view::npos) {
        s.base = std::string(name);
        return s;
    }
    if (name.back() != ')') throw std::invalid_argument("malformed strategy name: " + std::string(name));
    s.base = std::string(name.substr(0, open));
    s.arg = std::string(name.substr(open + 1, name.size() - open - 2));
    return s;
}

std::vector<std::string> strategy_names() {
    return {"first-unclaimed", "greedy",        "random(<seed>)", "scripted(<file>)",  "solver-optimal",
            "tree-greedy",     "path-colouring", "maker-column",  "breaker-annulus(<N>)", "straight-line",
            "spiral"};
}

namespace {

long parse_int_arg(const StrategySpec& s, long fallback) {
    if (s.arg.empty()) return fallback;
    std::size_t used = 0;
    long v = 0;
    try {
        v = std::stol(s.arg, &used);
    } catch (const std::exception&) {
        used = 0;
    }
    if (used != s.arg.size()) throw std::invalid_argument("bad argument for " + s.base + ": " + s.arg);
    return v;
}

void need_role(const StrategySpec& s, Player role, Player want) {
    if (role != want)
        throw std::invalid_argument(s.base + " is a " + player_name(want) + " strategy");
}

}  // namespace

std::unique_ptr<Strategy> make_strategy(std::string_view name, std::shared_ptr<const Board> board,
                                        const GameConfig& cfg, Player role) {
    const StrategySpec s = parse_strategy_name(name);
    if (s.base == "first-unclaimed") return std::make_unique<FirstUnclaimed>();
    if (s.base == "greedy") return std::make_unique<GreedyPath>();
    if (s.base == "random") return std::make_unique<RandomStrategy>(static_cast<std::uint64_t>(parse_int_arg(s, 0)));
    if (s.base == "scripted") {
        if (s.arg.empty()) throw std::invalid_argument("scripted needs a transcript file: scripted(<file>)");
        Transcript t = read_transcript_file(s.arg);
        return std::make_unique<ScriptedStrategy>("scripted(" + s.arg + ")", t.edges_of(role));
    }
    if (s.base == "solver-optimal") {
        SolveOptions opt;
        if (!s.arg.empty()) opt.max_nodes = parse_int_arg(s, opt.max_nodes);
        return std::make_unique<SolverOptimal>(opt);
    }
    if (s.base == "tree-greedy") {
        if (board->kind() != BoardKind::Tree) throw BoardError("tree-greedy needs a tree board");
        return std::make_unique<TreeGreedy>();
    }
    if (s.base == "path-colouring") {
        need_role(s, role, Player::Maker);
        return std::make_unique<PathColouringMaker>(*board, cfg);
    }
    if (s.base == "maker-column") {
        need_role(s, role, Player::Maker);
        return std::make_unique<MakerColumn>(*board, cfg);
    }
    if (s.base == "breaker-annulus") {
        need_role(s, role, Player::Breaker);
        const long N = parse_int_arg(s, 2);
        if (N < 1) throw std::invalid_argument("breaker-annulus needs N >= 1");
        return std::make_unique<BreakerAnnulus>(*board, cfg, static_cast<int>(N));
    }
    if (s.base == "straight-line") return std::make_unique<ScriptedStrategy>("straight-line", straight_line_script(*board));
    if (s.base == "spiral") return std::make_unique<ScriptedStrategy>("spiral", spiral_script(*board));
    if (s.base == "box-maker" || s.base == "double-response-h")
        throw std::invalid_argument(s.base + " plays a sub-game; run it through `verify`");
    throw std::invalid_argument("unknown strategy: " + std::string(name));
}

std::unique_ptr<HStrategy> make_h_strategy(std::string_view name, const StripGraph& g, int q) {
    if (name == "double-response-h" || name == "exact") return make_double_response_h(g, q);
    if (name == "min-cut-h" || name == "min-cut") return std::make_unique<MinCutH>();
    throw std::invalid_argument("unknown H strategy: " + std::string(name));
}

}  // namespace perc
