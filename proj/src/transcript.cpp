#include "perc/transcript.hpp"

#include <charconv>
#include <fstream>
#include <sstream>

namespace perc {

std::vector<EdgeId> Transcript::edges_of(Player who) const {
    std::vector<EdgeId> out;
    for (const auto& e : entries)
        if (!e.forfeit && e.player == who) out.push_back(e.edge);
    return out;
}

std::string to_text(const Transcript& t) {
    std::ostringstream out;
    out << "board=" << t.board_id << " p=" << t.config.p << " q=" << t.config.q;
    if (t.config.first == Player::Breaker) out << " first=B";
    if (!t.head_start.empty()) {
        out << " head=";
        for (std::size_t i = 0; i < t.head_start.size(); ++i) out << (i ? "," : "") << t.head_start[i];
    }
    out << "\n";
    for (const auto& e : t.entries) {
        out << "t=" << e.time << " " << player_letter(e.player);
        if (e.forfeit)
            out << " forfeit\n";
        else
            out << " e=" << e.edge << "\n";
    }
    return out.str();
}

namespace {

[[noreturn]] void fail(int line, const std::string& msg) {
    throw TranscriptError("line " + std::to_string(line) + ": " + msg);
}

int parse_int(std::string_view s, int line, const char* what) {
    int v = 0;
    auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
    if (ec != std::errc() || ptr != s.data() + s.size())
        fail(line, std::string("bad integer for ") + what + ": '" + std::string(s) + "'");
    return v;
}

std::vector<std::string_view> tokens(std::string_view s) {
    std::vector<std::string_view> out;
    std::size_t i = 0;
    while (i < s.size()) {
        while (i < s.size() && (s[i] == ' ' || s[i] == '\t' || s[i] == '\r')) ++i;
        std::size_t j = i;
        while (j < s.size() && s[j] != ' ' && s[j] != '\t' && s[j] != '\r') ++j;
        if (j > i) out.push_back(s.substr(i, j - i));
        i = j;
    }
    return out;
}

Player parse_player(std::string_view s, int line) {
    if (s == "M") return Player::Maker;
    if (s == "B") return Player::Breaker;
    fail(line, "expected M or B, got '" + std::string(s) + "'");
}

}  // namespace

Transcript parse_transcript(std::string_view text) {
    Transcript t;
    bool header = false;
    int line_no = 0;
    std::size_t pos = 0;
    while (pos <= text.size()) {
        std::size_t end = text.find('\n', pos);
        if (end == std::string_view::npos) end = text.size();
        std::string_view line = text.substr(pos, end - pos);
        pos = end + 1;
        ++line_no;
        auto tok = tokens(line);
        if (tok.empty() || tok[0].front() == '#') {
            if (end == text.size()) break;
            continue;
        }
        if (!header) {
            bool have_board = false, have_p = false, have_q = false;
            for (auto kv : tok) {
                auto eq = kv.find('=');
                if (eq == std::string_view::npos) fail(line_no, "expected key=value in header, got '" + std::string(kv) + "'");
                auto key = kv.substr(0, eq), val = kv.substr(eq + 1);
                if (key == "board") {
                    t.board_id = std::string(val);
                    have_board = true;
                } else if (key == "p") {
                    t.config.p = parse_int(val, line_no, "p");
                    have_p = true;
                } else if (key == "q") {
                    t.config.q = parse_int(val, line_no, "q");
                    have_q = true;
                } else if (key == "first") {
                    t.config.first = parse_player(val, line_no);
                } else if (key == "head") {
                    std::size_t i = 0;
                    while (i < val.size()) {
                        std::size_t j = val.find(',', i);
                        if (j == std::string_view::npos) j = val.size();
                        t.head_start.push_back(parse_int(val.substr(i, j - i), line_no, "head"));
                        i = j + 1;
                    }
                } else {
                    fail(line_no, "unknown header key '" + std::string(key) + "'");
                }
            }
            if (!have_board || !have_p || !have_q) fail(line_no, "header needs board=, p= and q=");
            if (t.config.p < 1 || t.config.q < 1) fail(line_no, "p and q must be >= 1");
            header = true;
        } else {
            if (tok.size() != 3) fail(line_no, "expected 't=<int> <M|B> e=<idx>'");
            if (tok[0].substr(0, 2) != "t=") fail(line_no, "expected t=<int>");
            TranscriptEntry e;
            e.time = parse_int(tok[0].substr(2), line_no, "t");
            e.player = parse_player(tok[1], line_no);
            if (tok[2] == "forfeit") {
                e.forfeit = true;
            } else {
                if (tok[2].substr(0, 2) != "e=") fail(line_no, "expected e=<idx> or forfeit");
                e.edge = parse_int(tok[2].substr(2), line_no, "e");
            }
            t.entries.push_back(e);
        }
        if (end == text.size()) break;
    }
    if (!header) throw TranscriptError("line 1: missing header");
    return t;
}

Transcript read_transcript_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw TranscriptError("cannot open transcript " + path);
    std::stringstream ss;
    ss << in.rdbuf();
    try {
        return parse_transcript(ss.str());
    } catch (const TranscriptError& e) {
        throw TranscriptError(path + ": " + e.what());
    }
}

Transcript transcript_of(const GameState& s) {
    Transcript t;
    t.board_id = s.board().id();
    t.config = s.config();
    t.head_start = s.head_start();
    for (const Move& m : s.history()) t.entries.push_back({m.time, m.player, m.edge, false});
    return t;
}

GameState replay(std::shared_ptr<const Board> board, const Transcript& t) {
    if (t.board_id != board->id())
        throw TranscriptError("transcript is for board '" + t.board_id + "', not '" + board->id() + "'");
    GameState s(std::move(board), t.config, t.head_start);
    for (const auto& e : t.entries) {
        if (e.forfeit) break;
        if (e.time != s.time() + 1)
            throw TranscriptError("entry t=" + std::to_string(e.time) + " out of sequence");
        try {
            s.apply(e.player, e.edge);
        } catch (const IllegalMove& ex) {
            throw TranscriptError("entry t=" + std::to_string(e.time) + ": " + ex.what());
        }
    }
    return s;
}

MatchResult play_match(Strategy& maker, Strategy& breaker, const GameConfig& cfg,
                       std::shared_ptr<const Board> board, int horizon, std::span<const EdgeId> head_start) {
    if (horizon < 1) throw std::invalid_argument("horizon must be >= 1");
    GameState s(std::move(board), cfg, head_start);
    MatchResult r;
    auto finish = [&](std::optional<Player> w, const char* why) {
        r.winner = w;
        r.reason = why;
    };
    while (true) {
        if (s.maker_won()) {
            finish(Player::Maker, "maker-path");
            break;
        }
        if (s.breaker_won()) {
            finish(Player::Breaker, "breaker-cut");
            break;
        }
        if (s.exhausted()) {
            finish(std::nullopt, "exhausted");
            break;
        }
        if (s.time() / cfg.period() >= horizon) {
            finish(std::nullopt, "horizon");
            break;
        }
        const Player mover = s.to_move();
        TurnContext ctx;
        ctx.role = mover;
        ctx.quota = std::min(s.remaining_in_turn(), s.num_unclaimed());
        const auto adversary = s.last_batch(opponent(mover));
        ctx.adversary = adversary;
        Strategy& st = mover == Player::Maker ? maker : breaker;

        bool ok = true;
        GameState next = s;
        try {
            auto edges = st.next_edges(s, ctx);
            if (static_cast<int>(edges.size()) != ctx.quota) ok = false;
            for (std::size_t i = 0; ok && i < edges.size(); ++i) {
                next.apply(mover, edges[i]);
                if (next.maker_won() || next.breaker_won()) break;
            }
        } catch (const std::exception&) {
            ok = false;
        }
        if (!ok) {
            r.transcript = transcript_of(s);
            r.transcript.entries.push_back({s.time(), mover, -1, true});
            r.winner = opponent(mover);
            r.reason = "forfeit";
            r.rounds = (s.time() + cfg.period() - 1) / cfg.period();
            r.final_state = s;
            return r;
        }
        s = std::move(next);
    }
    r.transcript = transcript_of(s);
    r.rounds = (s.time() + cfg.period() - 1) / cfg.period();
    r.final_state = s;
    return r;
}

}  // namespace perc
