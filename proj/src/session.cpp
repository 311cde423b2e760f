#include "perc/session.hpp"

#include <fstream>

#include <httplib.h>

#include "perc/annulus.hpp"
#include "perc/board_io.hpp"
#include "perc/colouring.hpp"
#include "perc/dual_cycle.hpp"
#include "perc/registry.hpp"
#include "perc/strategies.hpp"

namespace perc {

using nlohmann::json;

namespace {

struct BadRequest : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

Player parse_player(const std::string& s) {
    if (s == "Maker" || s == "maker" || s == "M") return Player::Maker;
    if (s == "Breaker" || s == "breaker" || s == "B") return Player::Breaker;
    throw BadRequest("expected Maker or Breaker, got '" + s + "'");
}

const char* claim_name(Claim c) {
    switch (c) {
        case Claim::Safe: return "safe";
        case Claim::Destroyed: return "destroyed";
        default: return "unclaimed";
    }
}

json overlays(const GameState& s) {
    const Board& b = s.board();
    json o = json::object();
    if (b.kind() != BoardKind::LatticeWindow) return o;

    json dual = json::array();
    if (b.dimension() == 2)
        for (EdgeId e = 0; e < b.num_edges(); ++e) {
            if (s.claim(e) != Claim::Destroyed) continue;
            DualEdgeCoord d = dual_of(b, e);
            dual.push_back({{"edge", e},
                            {"orientation", d.orientation == DualEdgeCoord::Orientation::Horizontal ? "horizontal" : "vertical"},
                            {"x2", d.x2},
                            {"y2", d.y2}});
        }
    o["dual_edges"] = dual;

    ColouringState cs = PathColouringMaker::colouring_of(s);
    json colour = json::array(), cls = json::array();
    for (EdgeId e = 0; e < b.num_edges(); ++e) colour.push_back(cs.colour(e));
    for (VertexId v = 0; v < b.num_vertices(); ++v) cls.push_back(cs.class_of(v));
    o["colour_classes"] = {{"edge_colour", colour}, {"vertex_class", cls}};

    if (b.dimension() == 2) {
        DualCycle dc = detect_dual_cycle(b, s.claims());
        o["dual_cycle"] = dc.found ? json(dc.edges) : json(nullptr);
        const int width = s.config().p + 1;
        const int N = b.radius() / width;
        if (N >= 1) {
            AnnulusGeometry geo(s.config().p, N);
            BoundAnnulus bound = bind_annulus(geo, b);
            json roles = json::array();
            for (const EdgeRole& r : bound.role) {
                const char* region = r.region == AnnulusRegion::Strip    ? "strip"
                                     : r.region == AnnulusRegion::Corner ? "corner"
                                     : r.region == AnnulusRegion::FreeSp ? "free"
                                                                         : "outside";
                roles.push_back({{"region", region}, {"k", r.k}, {"strip", r.strip}});
            }
            o["annuli"] = {{"p", geo.p()}, {"N", N}, {"width", width}, {"edge_roles", roles}};
        }
    }
    return o;
}

}  // namespace

std::unique_ptr<Session> Session::create(std::string id, const json& body) {
    if (!body.is_object()) throw BadRequest("request body must be an object");
    if (!body.contains("board")) throw BadRequest("missing field 'board'");
    std::unique_ptr<Session> s(new Session);
    s->id_ = std::move(id);
    s->board_json_ = body.at("board");
    try {
        s->board_ = std::make_shared<const Board>(board_from_json(s->board_json_));
    } catch (const std::exception& ex) {
        throw BadRequest(std::string("board: ") + ex.what());
    }
    GameConfig cfg;
    const json c = body.value("config", json::object());
    cfg.p = c.value("p", 1);
    cfg.q = c.value("q", 1);
    cfg.first = parse_player(c.value("first", std::string("Maker")));
    try {
        cfg.validate();
    } catch (const std::exception& ex) {
        throw BadRequest(std::string("config: ") + ex.what());
    }
    const std::string human = body.value("human", std::string("none"));
    if (human != "none") s->human_ = parse_player(human);
    if (body.contains("engines")) {
        const json& en = body.at("engines");
        if (en.contains("maker")) s->engine_names_[Player::Maker] = en.at("maker").get<std::string>();
        if (en.contains("breaker")) s->engine_names_[Player::Breaker] = en.at("breaker").get<std::string>();
    }
    if (body.contains("engine")) {
        if (!s->human_) throw BadRequest("'engine' needs a human side; use 'engines' otherwise");
        s->engine_names_[opponent(*s->human_)] = body.at("engine").get<std::string>();
    }
    std::vector<EdgeId> head = body.value("head_start", std::vector<EdgeId>{});
    try {
        s->state_.emplace(s->board_, cfg, head);
    } catch (const IllegalMove& ex) {
        throw BadRequest(std::string("head_start: ") + ex.what());
    }
    for (auto& [who, name] : s->engine_names_) {
        try {
            s->engines_[who] = make_strategy(name, s->board_, cfg, who);
        } catch (const std::exception& ex) {
            throw BadRequest(std::string("engine ") + name + ": " + ex.what());
        }
    }
    return s;
}

std::unique_ptr<Session> Session::from_record(const json& rec) {
    json body = rec.at("create");
    std::unique_ptr<Session> s = create(rec.at("id").get<std::string>(), body);
    const Transcript t = parse_transcript(rec.at("transcript").get<std::string>());
    s->state_.emplace(replay(s->board_, t));
    return s;
}

json Session::record() const {
    json create{{"board", board_json_},
                {"config", {{"p", state_->config().p}, {"q", state_->config().q}, {"first", player_name(state_->config().first)}}},
                {"human", human_ ? player_name(*human_) : "none"},
                {"head_start", state_->head_start()}};
    json engines = json::object();
    for (auto& [who, name] : engine_names_) engines[who == Player::Maker ? "maker" : "breaker"] = name;
    create["engines"] = engines;
    return {{"id", id_}, {"create", create}, {"transcript", transcript_text()}};
}

std::string Session::status() const {
    if (state_->maker_won()) return "maker-won";
    if (state_->breaker_won()) return "breaker-won";
    return "in-progress";
}

json Session::state_json() const {
    const GameState& s = *state_;
    json j;
    j["id"] = id_;
    j["board"] = board_to_json(s.board());
    j["config"] = {{"p", s.config().p}, {"q", s.config().q}, {"first", player_name(s.config().first)}};
    j["human"] = human_ ? player_name(*human_) : "none";
    json engines = json::object();
    for (auto& [who, name] : engine_names_) engines[who == Player::Maker ? "maker" : "breaker"] = name;
    j["engines"] = engines;
    j["t"] = s.time();
    j["status"] = status();
    const bool over = s.decided() || s.exhausted();
    j["to_move"] = over ? json(nullptr) : json(player_name(s.to_move()));
    j["remaining_in_turn"] = over ? 0 : std::min(s.remaining_in_turn(), s.num_unclaimed());
    json claims = json::array();
    for (Claim c : s.claims()) claims.push_back(claim_name(c));
    j["claims"] = claims;
    j["legal_edges"] = over ? std::vector<EdgeId>{} : s.unclaimed();
    json hist = json::array();
    for (const Move& m : s.history()) hist.push_back({{"t", m.time}, {"player", player_name(m.player)}, {"edge", m.edge}});
    j["history"] = hist;
    j["head_start"] = s.head_start();
    j["overlays"] = overlays(s);
    return j;
}

Strategy* Session::engine_for(Player who) {
    auto it = engines_.find(who);
    return it == engines_.end() ? nullptr : it->second.get();
}

std::optional<std::string> Session::human_move(EdgeId e) {
    GameState& s = *state_;
    if (s.decided() || s.exhausted()) return "game-over";
    if (!human_ || s.to_move() != *human_) return "not-your-turn";
    if (e < 0 || e >= s.board().num_edges()) return "no-such-edge";
    if (s.claim(e) != Claim::Unclaimed) return "edge-claimed";
    s.apply(*human_, e);
    return std::nullopt;
}

std::optional<std::string> Session::engine_move() {
    GameState& s = *state_;
    if (s.decided() || s.exhausted()) return "game-over";
    const Player who = s.to_move();
    Strategy* st = engine_for(who);
    if (!st) return "not-engine-turn";
    TurnContext ctx;
    ctx.role = who;
    ctx.quota = std::min(s.remaining_in_turn(), s.num_unclaimed());
    const std::vector<EdgeId> adv = s.last_batch(opponent(who));
    ctx.adversary = adv;
    std::vector<EdgeId> batch = st->next_edges(s, ctx);
    GameState next = s;
    for (EdgeId e : batch) {
        if (next.decided()) break;
        try {
            next.apply(who, e);
        } catch (const IllegalMove&) {
            return "engine-illegal-move";
        }
    }
    s = std::move(next);
    return std::nullopt;
}

std::optional<std::string> Session::undo(int t) {
    if (t < 0 || t > state_->time()) return "bad-time";
    Transcript tr = transcript_of(*state_);
    tr.entries.resize(t);
    state_.emplace(replay(board_, tr));
    for (auto& [who, name] : engine_names_) engines_[who] = make_strategy(name, board_, state_->config(), who);
    return std::nullopt;
}

// ---- Store --------------------------------------------------------------

namespace {

ApiReply error_reply(int status, const std::string& code, const std::string& message) {
    return {status, {{"error", code}, {"message", message}}};
}

ApiReply not_found(const std::string& id) { return error_reply(404, "not-found", "no session '" + id + "'"); }

}  // namespace

SessionStore::SessionStore(std::optional<std::filesystem::path> dir) : dir_(std::move(dir)) {
    if (!dir_) return;
    std::filesystem::create_directories(*dir_);
    for (const auto& entry : std::filesystem::directory_iterator(*dir_)) {
        if (entry.path().extension() != ".json") continue;
        std::ifstream in(entry.path());
        json rec = json::parse(in);
        auto s = std::shared_ptr<Session>(Session::from_record(rec));
        const std::string& id = s->id();
        if (id.size() > 1 && id[0] == 's') {
            try {
                next_id_ = std::max(next_id_, std::stol(id.substr(1)) + 1);
            } catch (const std::exception&) {
            }
        }
        sessions_[id] = std::move(s);
    }
}

std::size_t SessionStore::size() const {
    std::shared_lock lk(mutex_);
    return sessions_.size();
}

std::shared_ptr<Session> SessionStore::find(const std::string& id) const {
    std::shared_lock lk(mutex_);
    auto it = sessions_.find(id);
    return it == sessions_.end() ? nullptr : it->second;
}

void SessionStore::persist(const Session& s) const {
    if (!dir_) return;
    const auto path = *dir_ / (s.id() + ".json");
    const auto tmp = path.string() + ".tmp";
    {
        std::ofstream out(tmp);
        out << s.record().dump(2) << "\n";
    }
    std::filesystem::rename(tmp, path);
}

ApiReply SessionStore::create(const json& body) {
    std::string id;
    {
        std::unique_lock lk(mutex_);
        id = "s" + std::to_string(next_id_++);
    }
    std::shared_ptr<Session> s;
    try {
        s = Session::create(id, body);
    } catch (const BadRequest& ex) {
        return error_reply(400, "bad-request", ex.what());
    } catch (const json::exception& ex) {
        return error_reply(400, "bad-request", ex.what());
    }
    {
        std::unique_lock lk(mutex_);
        sessions_[id] = s;
    }
    std::shared_lock lk(s->mutex);
    persist(*s);
    return {201, s->state_json()};
}

ApiReply SessionStore::get(const std::string& id) const {
    auto s = find(id);
    if (!s) return not_found(id);
    std::shared_lock lk(s->mutex);
    return {200, s->state_json()};
}

ApiReply SessionStore::move(const std::string& id, const json& body) {
    auto s = find(id);
    if (!s) return not_found(id);
    if (!body.is_object() || !body.contains("edge") || !body.at("edge").is_number_integer())
        return error_reply(400, "bad-request", "body must be {\"edge\": <int>}");
    std::unique_lock lk(s->mutex);
    if (auto why = s->human_move(body.at("edge").get<EdgeId>()))
        return {409, {{"accepted", false}, {"reason", *why}, {"state", s->state_json()}}};
    persist(*s);
    return {200, {{"accepted", true}, {"state", s->state_json()}}};
}

ApiReply SessionStore::engine_move(const std::string& id) {
    auto s = find(id);
    if (!s) return not_found(id);
    std::unique_lock lk(s->mutex);
    const int before = s->state().time();
    std::optional<std::string> why;
    try {
        why = s->engine_move();
    } catch (const std::exception& ex) {
        return error_reply(500, "engine-error", ex.what());
    }
    if (why) return {409, {{"accepted", false}, {"reason", *why}, {"state", s->state_json()}}};
    persist(*s);
    json played = json::array();
    for (int t = before; t < s->state().time(); ++t) played.push_back(s->state().history()[t].edge);
    return {200, {{"accepted", true}, {"edges", played}, {"state", s->state_json()}}};
}

ApiReply SessionStore::undo(const std::string& id, const json& body) {
    auto s = find(id);
    if (!s) return not_found(id);
    if (!body.is_object() || !body.contains("t") || !body.at("t").is_number_integer())
        return error_reply(400, "bad-request", "body must be {\"t\": <int>}");
    std::unique_lock lk(s->mutex);
    if (auto why = s->undo(body.at("t").get<int>()))
        return {409, {{"accepted", false}, {"reason", *why}, {"state", s->state_json()}}};
    persist(*s);
    return {200, {{"accepted", true}, {"state", s->state_json()}}};
}

ApiReply SessionStore::transcript(const std::string& id) const {
    auto s = find(id);
    if (!s) return not_found(id);
    std::shared_lock lk(s->mutex);
    return {200, {{"id", id}, {"board_id", s->state().board().id()}, {"transcript", s->transcript_text()}}};
}

// ---- HTTP ---------------------------------------------------------------

struct ApiServer::Impl {
    httplib::Server server;
};

namespace {

void send(httplib::Response& res, const ApiReply& r) {
    res.status = r.status;
    res.set_content(r.body.dump(), "application/json");
}

json parse_body(const httplib::Request& req, bool& ok) {
    ok = true;
    if (req.body.empty()) return json::object();
    try {
        return json::parse(req.body);
    } catch (const json::exception&) {
        ok = false;
        return {};
    }
}

}  // namespace

ApiServer::ApiServer(SessionStore& store) : impl_(std::make_unique<Impl>()) {
    auto& srv = impl_->server;
    auto with_body = [](auto fn) {
        return [fn](const httplib::Request& req, httplib::Response& res) {
            bool ok = true;
            json body = parse_body(req, ok);
            if (!ok) return send(res, error_reply(400, "bad-request", "body is not valid JSON"));
            send(res, fn(req, body));
        };
    };
    srv.Post("/v1/sessions", with_body([&store](const httplib::Request&, const json& b) { return store.create(b); }));
    srv.Get(R"(/v1/sessions/([^/]+))",
            [&store](const httplib::Request& req, httplib::Response& res) { send(res, store.get(req.matches[1])); });
    srv.Post(R"(/v1/sessions/([^/]+)/moves)", with_body([&store](const httplib::Request& req, const json& b) {
                 return store.move(req.matches[1], b);
             }));
    srv.Post(R"(/v1/sessions/([^/]+)/engine-move)", with_body([&store](const httplib::Request& req, const json&) {
                 return store.engine_move(req.matches[1]);
             }));
    srv.Post(R"(/v1/sessions/([^/]+)/undo)", with_body([&store](const httplib::Request& req, const json& b) {
                 return store.undo(req.matches[1], b);
             }));
    srv.Get(R"(/v1/sessions/([^/]+)/transcript)", [&store](const httplib::Request& req, httplib::Response& res) {
        send(res, store.transcript(req.matches[1]));
    });
    srv.set_error_handler([](const httplib::Request&, httplib::Response& res) {
        if (res.body.empty()) send(res, error_reply(res.status, res.status == 404 ? "not-found" : "error", "no such route"));
    });
}

ApiServer::~ApiServer() = default;

int ApiServer::bind(const std::string& host, int port) {
    if (port == 0) return impl_->server.bind_to_any_port(host);
    return impl_->server.bind_to_port(host, port) ? port : -1;
}

void ApiServer::listen() { impl_->server.listen_after_bind(); }

void ApiServer::stop() { impl_->server.stop(); }

}  // namespace perc
