#include <csignal>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "perc/board_io.hpp"
#include "perc/harness.hpp"
#include "perc/registry.hpp"
#include "perc/session.hpp"
#include "perc/solver.hpp"
#include "perc/transcript.hpp"

using namespace perc;
using nlohmann::json;

namespace {

struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

Player parse_side(const std::string& s) {
    if (s == "Maker" || s == "maker" || s == "M") return Player::Maker;
    if (s == "Breaker" || s == "breaker" || s == "B") return Player::Breaker;
    throw UsageError("expected Maker or Breaker, got '" + s + "'");
}

std::vector<EdgeId> parse_edge_list(const std::string& s) {
    std::vector<EdgeId> out;
    std::stringstream in(s);
    std::string item;
    while (std::getline(in, item, ','))
        if (!item.empty()) out.push_back(std::stoi(item));
    return out;
}

std::vector<int> parse_coord(const std::string& s) {
    std::vector<int> out;
    for (EdgeId v : parse_edge_list(s)) out.push_back(v);
    return out;
}

struct BoardOpts {
    std::string kind = "window";
    int d = 2, r = 2, h = 3, a = 2, b = 3;
    std::string root;
    std::string root_type = "I";
    std::string out;
};

int cmd_board(const BoardOpts& o) {
    Board b = [&]() -> Board {
        if (o.kind == "window") {
            std::vector<int> root = o.root.empty() ? std::vector<int>(o.d, 0) : parse_coord(o.root);
            return build_lattice_window(o.d, o.r, Coord(root));
        }
        if (o.kind == "tree") return build_tree(TreeSpec::regular(o.d), o.h);
        if (o.kind == "biregular")
            return build_tree(TreeSpec::bi_regular(o.a, o.b, o.root_type == "II" ? VertexType::TypeII : VertexType::TypeI), o.h);
        throw UsageError("--kind must be window, tree or biregular");
    }();
    if (o.out.empty()) std::cout << board_to_json(b).dump(2) << "\n";
    else {
        save_board_file(b, o.out);
        std::cout << "board=" << b.id() << " vertices=" << b.num_vertices() << " edges=" << b.num_edges() << "\n";
    }
    return 0;
}

struct SolveOpts {
    std::string board, from_transcript;
    int p = 1, q = 1;
    std::int64_t max_nodes = 50'000'000;
    int threads = 0;
};

int cmd_solve(const SolveOpts& o) {
    auto board = std::make_shared<const Board>(load_board_file(o.board));
    GameState s(board, GameConfig{o.p, o.q, Player::Maker});
    if (!o.from_transcript.empty()) {
        Transcript t = read_transcript_file(o.from_transcript);
        if (t.config.p != o.p || t.config.q != o.q)
            throw TranscriptError("transcript was played with p=" + std::to_string(t.config.p) +
                                  " q=" + std::to_string(t.config.q));
        s = replay(board, t);
    }
    SolveOptions opt;
    opt.max_nodes = o.max_nodes;
    opt.threads = o.threads;
    SolveResult r = solve_escape(s, opt);
    if (!r.solved()) {
        std::cout << "winner=unknown nodes=" << r.nodes << "\n";
        std::cerr << "error: node cap " << o.max_nodes << " reached\n";
        return 1;
    }
    std::cout << "winner=" << player_name(*r.winner);
    if (r.best_move) std::cout << " best=e" << *r.best_move;
    std::cout << " nodes=" << r.nodes << "\n";
    return 0;
}

struct SimOpts {
    std::string board, maker, breaker, first = "Maker", head, transcript_out;
    int p = 1, q = 1, horizon = 1000;
    bool print_transcript = false;
};

int cmd_simulate(const SimOpts& o) {
    auto board = std::make_shared<const Board>(load_board_file(o.board));
    const GameConfig cfg{o.p, o.q, parse_side(o.first)};
    cfg.validate();
    auto mk = make_strategy(o.maker, board, cfg, Player::Maker);
    auto br = make_strategy(o.breaker, board, cfg, Player::Breaker);
    const std::vector<EdgeId> head = parse_edge_list(o.head);
    MatchResult m = play_match(*mk, *br, cfg, board, o.horizon, head);
    std::cout << "winner=" << (m.winner ? player_name(*m.winner) : "none") << " reason=" << m.reason
              << " rounds=" << m.rounds << " t=" << m.transcript.entries.size() << "\n";
    const std::string text = to_text(m.transcript);
    if (o.print_transcript) std::cout << text;
    if (!o.transcript_out.empty()) {
        std::ofstream out(o.transcript_out);
        if (!out) throw std::runtime_error("cannot write " + o.transcript_out);
        out << text;
    }
    return 0;
}

struct VerifyOpts {
    std::string suite, grid;
    std::uint64_t seed = 1;
    int jobs = 0;
};

int cmd_verify(const VerifyOpts& o) {
    const auto names = suite_names();
    if (std::find(names.begin(), names.end(), o.suite) == names.end()) throw UsageError("unknown suite '" + o.suite + "'");
    json grid;
    if (o.grid.empty() || o.grid == "default") {
        grid = default_grid(o.suite);
    } else {
        std::ifstream in(o.grid);
        if (!in) throw std::runtime_error("cannot open grid file " + o.grid);
        try {
            grid = json::parse(in);
        } catch (const json::parse_error& e) {
            throw std::runtime_error(o.grid + ": " + e.what());
        }
    }
    PropertyReport r = run_suite(o.suite, grid, o.seed, o.jobs);
    json j = r.to_json();
    j["seed"] = o.seed;
    std::cout << j.dump(2) << "\n";
    return r.all_pass() ? 0 : 1;
}

struct PlayOpts {
    std::string board, human = "Breaker", engine = "solver-optimal", first = "Maker";
    int p = 1, q = 1;
};

void print_play_state(const json& st) {
    std::cout << "t=" << st["t"].get<int>() << " status=" << st["status"].get<std::string>();
    if (!st["to_move"].is_null())
        std::cout << " to_move=" << st["to_move"].get<std::string>() << " (" << st["remaining_in_turn"].get<int>() << " left)";
    std::cout << "\n";
    const json& claims = st["claims"];
    std::cout << "safe:";
    for (std::size_t e = 0; e < claims.size(); ++e)
        if (claims[e] == "safe") std::cout << " e" << e;
    std::cout << "\ndestroyed:";
    for (std::size_t e = 0; e < claims.size(); ++e)
        if (claims[e] == "destroyed") std::cout << " e" << e;
    std::cout << "\n";
}

int cmd_play(const PlayOpts& o) {
    SessionStore store;
    const std::string human = player_name(parse_side(o.human));
    json body{{"board", board_to_json(load_board_file(o.board))},
              {"config", {{"p", o.p}, {"q", o.q}, {"first", o.first}}},
              {"human", human},
              {"engine", o.engine}};
    ApiReply r = store.create(body);
    if (r.status != 201) throw std::runtime_error(r.body.value("message", "cannot create session"));
    const std::string id = r.body["id"];
    json st = r.body;
    std::cout << "commands: <edge id> | undo <t> | show | transcript | quit\n";
    print_play_state(st);
    std::string line;
    while (st["status"] == "in-progress") {
        if (st["to_move"] != human) {
            ApiReply er = store.engine_move(id);
            if (er.status != 200) throw std::runtime_error("engine: " + er.body.dump());
            std::cout << "engine plays:";
            for (const auto& e : er.body["edges"]) std::cout << " e" << e.get<int>();
            std::cout << "\n";
            st = er.body["state"];
            print_play_state(st);
            continue;
        }
        std::cout << "> " << std::flush;
        if (!std::getline(std::cin, line)) break;
        std::istringstream in(line);
        std::string cmd;
        in >> cmd;
        if (cmd.empty()) continue;
        if (cmd == "quit") break;
        if (cmd == "show") {
            print_play_state(st);
        } else if (cmd == "transcript") {
            std::cout << store.transcript(id).body["transcript"].get<std::string>();
        } else if (cmd == "undo") {
            int t = 0;
            in >> t;
            ApiReply u = store.undo(id, json{{"t", t}});
            if (u.status != 200) std::cout << "rejected: " << u.body.value("reason", u.body.value("message", "")) << "\n";
            st = u.body.contains("state") ? u.body["state"] : st;
            print_play_state(st);
        } else {
            int e = -1;
            try {
                e = std::stoi(cmd[0] == 'e' ? cmd.substr(1) : cmd);
            } catch (const std::exception&) {
                std::cout << "unknown command\n";
                continue;
            }
            ApiReply mv = store.move(id, json{{"edge", e}});
            if (mv.status != 200) std::cout << "rejected: " << mv.body.value("reason", mv.body.value("message", "")) << "\n";
            if (mv.body.contains("state")) st = mv.body["state"];
        }
    }
    std::cout << "final status=" << st["status"].get<std::string>() << "\n";
    return 0;
}

ApiServer* g_server = nullptr;

int cmd_serve(int port, const std::string& host, std::string state_dir) {
    if (state_dir.empty())
        if (const char* env = std::getenv("PERC_ARENA_STATE_DIR")) state_dir = env;
    SessionStore store(state_dir.empty() ? std::nullopt : std::optional<std::filesystem::path>(state_dir));
    ApiServer server(store);
    const int bound = server.bind(host, port);
    if (bound < 0) {
        std::cerr << "error: cannot bind " << host << ":" << port << "\n";
        return 1;
    }
    g_server = &server;
    std::signal(SIGINT, [](int) {
        if (g_server) g_server->stop();
    });
    std::signal(SIGTERM, [](int) {
        if (g_server) g_server->stop();
    });
    std::cout << "listening on " << host << ":" << bound << " sessions=" << store.size() << std::endl;
    server.listen();
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Maker-Breaker escape games on lattices and trees"};
    app.require_subcommand(1);

    BoardOpts bo;
    auto* board = app.add_subcommand("board", "build a board file");
    board->add_option("--kind", bo.kind, "window, tree or biregular")->capture_default_str();
    board->add_option("--d", bo.d, "window dimension or tree degree")->capture_default_str();
    board->add_option("--r", bo.r, "window radius")->capture_default_str();
    board->add_option("--root", bo.root, "window root coordinates, comma separated");
    board->add_option("--height", bo.h, "tree height")->capture_default_str();
    board->add_option("--a", bo.a, "Type I child count")->capture_default_str();
    board->add_option("--b", bo.b, "Type II child count")->capture_default_str();
    board->add_option("--root-type", bo.root_type, "I or II")->check(CLI::IsMember({"I", "II"}));
    board->add_option("--out", bo.out, "output file (default: stdout)");

    SolveOpts so;
    auto* solve = app.add_subcommand("solve", "exact winner and best move");
    solve->add_option("--board", so.board)->required()->check(CLI::ExistingFile);
    solve->add_option("--p", so.p)->required()->check(CLI::PositiveNumber);
    solve->add_option("--q", so.q)->required()->check(CLI::PositiveNumber);
    solve->add_option("--from-transcript", so.from_transcript)->check(CLI::ExistingFile);
    solve->add_option("--max-nodes", so.max_nodes)->capture_default_str();
    solve->add_option("--threads", so.threads, "0: OpenMP default");

    SimOpts sm;
    auto* sim = app.add_subcommand("simulate", "play two strategies against each other");
    sim->add_option("--board", sm.board)->required()->check(CLI::ExistingFile);
    sim->add_option("--p", sm.p)->required()->check(CLI::PositiveNumber);
    sim->add_option("--q", sm.q)->required()->check(CLI::PositiveNumber);
    sim->add_option("--maker", sm.maker)->required();
    sim->add_option("--breaker", sm.breaker)->required();
    sim->add_option("--first", sm.first)->capture_default_str();
    sim->add_option("--head", sm.head, "Maker head-start edges, comma separated");
    sim->add_option("--horizon", sm.horizon, "rounds")->capture_default_str();
    sim->add_option("--transcript", sm.transcript_out, "write the transcript here");
    sim->add_flag("--print-transcript", sm.print_transcript);

    VerifyOpts vo;
    auto* verify = app.add_subcommand("verify", "run a property suite");
    verify->add_option("--suite", vo.suite)->required();
    verify->add_option("--grid", vo.grid, "grid file, or 'default'")->required();
    verify->add_option("--seed", vo.seed)->capture_default_str();
    verify->add_option("--jobs", vo.jobs, "0: OpenMP default")->capture_default_str();

    PlayOpts po;
    auto* play = app.add_subcommand("play", "interactive terminal game against an engine");
    play->add_option("--board", po.board)->required()->check(CLI::ExistingFile);
    play->add_option("--p", po.p)->capture_default_str();
    play->add_option("--q", po.q)->capture_default_str();
    play->add_option("--human", po.human)->capture_default_str();
    play->add_option("--engine", po.engine)->capture_default_str();
    play->add_option("--first", po.first)->capture_default_str();

    int port = 8080;
    std::string host = "127.0.0.1", state_dir;
    auto* serve = app.add_subcommand("serve", "serve the /v1 session API");
    serve->add_option("--port", port)->capture_default_str();
    serve->add_option("--host", host)->capture_default_str();
    serve->add_option("--state-dir", state_dir, "defaults to $PERC_ARENA_STATE_DIR");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    try {
        if (*board) return cmd_board(bo);
        if (*solve) return cmd_solve(so);
        if (*sim) return cmd_simulate(sm);
        if (*verify) return cmd_verify(vo);
        if (*play) return cmd_play(po);
        if (*serve) return cmd_serve(port, host, state_dir);
    } catch (const UsageError& e) {
        std::cerr << "usage error: " << e.what() << "\n";
        return 2;
    } catch (const std::invalid_argument& e) {
        std::cerr << "usage error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 2;
}
