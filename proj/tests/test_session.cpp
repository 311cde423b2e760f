#include <doctest.h>

#include <chrono>
#include <filesystem>
#include <random>
#include <thread>

#include <httplib.h>

#include "perc/board_io.hpp"
#include "perc/session.hpp"

using namespace perc;
using nlohmann::json;

namespace {

json window_create(const std::string& human, const std::string& engine) {
    return {{"board", board_to_json(build_lattice_window(2, 2, Coord{0, 0}))},
            {"config", {{"p", 1}, {"q", 1}, {"first", "Maker"}}},
            {"human", human},
            {"engine", engine}};
}

std::filesystem::path temp_dir(const std::string& tag) {
    std::random_device rd;
    auto p = std::filesystem::temp_directory_path() / ("perc-" + tag + "-" + std::to_string(rd()));
    std::filesystem::remove_all(p);
    return p;
}

}  // namespace

TEST_CASE("create returns a session at t = 0") {
    SessionStore store;
    ApiReply r = store.create(window_create("Breaker", "path-colouring"));
    CHECK(r.status == 201);
    CHECK(r.body["t"] == 0);
    CHECK(r.body["status"] == "in-progress");
    CHECK(r.body["to_move"] == "Maker");
    CHECK(r.body["human"] == "Breaker");
    CHECK(r.body["engines"]["maker"] == "path-colouring");
    CHECK(r.body["legal_edges"].size() == 40);
    CHECK(r.body["overlays"].contains("dual_edges"));
    CHECK(r.body["overlays"].contains("colour_classes"));
    CHECK(store.get(r.body["id"]).status == 200);
}

TEST_CASE("moves are validated with structured rejections") {
    SessionStore store;
    const std::string id = store.create(window_create("Breaker", "path-colouring")).body["id"];
    ApiReply early = store.move(id, {{"edge", 0}});
    CHECK(early.status == 409);
    CHECK(early.body["reason"] == "not-your-turn");
    ApiReply eng = store.engine_move(id);
    REQUIRE(eng.status == 200);
    REQUIRE(eng.body["edges"].size() == 1);
    const int claimed = eng.body["edges"][0];
    ApiReply dup = store.move(id, {{"edge", claimed}});
    CHECK(dup.status == 409);
    CHECK(dup.body["accepted"] == false);
    CHECK(dup.body["reason"] == "edge-claimed");
    CHECK(dup.body["state"]["t"] == 1);
    CHECK(store.move(id, {{"edge", 999}}).body["reason"] == "no-such-edge");
    CHECK(store.move(id, {{"edge", "x"}}).status == 400);
    CHECK(store.engine_move(id).body["reason"] == "not-engine-turn");
    CHECK(store.get("s999").status == 404);
    CHECK(store.get("s999").body["error"] == "not-found");
    CHECK(store.move("s999", {{"edge", 0}}).status == 404);
}

TEST_CASE("bad create bodies are rejected") {
    SessionStore store;
    CHECK(store.create(json::object()).status == 400);
    json b = window_create("Breaker", "no-such-engine");
    CHECK(store.create(b).status == 400);
    json c = window_create("Somebody", "greedy");
    CHECK(store.create(c).status == 400);
}

TEST_CASE("undo restores an earlier time") {
    SessionStore store;
    const std::string id = store.create(window_create("Breaker", "greedy")).body["id"];
    store.engine_move(id);
    const int e = store.get(id).body["legal_edges"][0];
    REQUIRE(store.move(id, {{"edge", e}}).status == 200);
    ApiReply u = store.undo(id, {{"t", 1}});
    CHECK(u.status == 200);
    CHECK(u.body["state"]["t"] == 1);
    CHECK(u.body["state"]["to_move"] == "Breaker");
    CHECK(store.undo(id, {{"t", 5}}).body["reason"] == "bad-time");
    CHECK(store.undo(id, {{"t", 0}}).body["state"]["history"].empty());
}

TEST_CASE("a full game replays offline to the same final state") {
    SessionStore store;
    const std::string id = store.create(window_create("Breaker", "path-colouring")).body["id"];
    json st = store.get(id).body;
    int guard = 0;
    while (st["status"] == "in-progress" && guard++ < 200) {
        if (st["to_move"] == "Maker") {
            st = store.engine_move(id).body["state"];
        } else {
            const auto& legal = st["legal_edges"];
            st = store.move(id, {{"edge", legal[legal.size() / 2]}}).body["state"];
        }
    }
    REQUIRE(st["status"] != "in-progress");
    auto board = std::make_shared<const Board>(board_from_json(st["board"]));
    GameState offline = replay(board, parse_transcript(store.transcript(id).body["transcript"].get<std::string>()));
    CHECK(st["status"] == (offline.maker_won() ? "maker-won" : "breaker-won"));
    json claims = json::array();
    for (Claim c : offline.claims()) claims.push_back(c == Claim::Safe ? "safe" : c == Claim::Destroyed ? "destroyed" : "unclaimed");
    CHECK(claims == st["claims"]);
    CHECK(st["status"] == "maker-won");
}

TEST_CASE("engine versus engine sessions and a tree board") {
    SessionStore store;
    json body = {{"board", board_to_json(build_tree(TreeSpec::regular(3), 4))},
                 {"config", {{"p", 1}, {"q", 2}, {"first", "Maker"}}},
                 {"human", "none"},
                 {"engines", {{"maker", "tree-greedy"}, {"breaker", "tree-greedy"}}}};
    ApiReply r = store.create(body);
    REQUIRE(r.status == 201);
    const std::string id = r.body["id"];
    json st = r.body;
    while (st["status"] == "in-progress") st = store.engine_move(id).body["state"];
    CHECK(st["status"] == "breaker-won");
    CHECK(store.engine_move(id).body["reason"] == "game-over");
}

TEST_CASE("sessions persist to the state directory") {
    const auto dir = temp_dir("store");
    std::string id;
    json before;
    {
        SessionStore store(dir);
        id = store.create(window_create("Breaker", "greedy")).body["id"];
        store.engine_move(id);
        before = store.get(id).body;
    }
    SessionStore again(dir);
    CHECK(again.size() == 1);
    ApiReply r = again.get(id);
    CHECK(r.status == 200);
    CHECK(r.body == before);
    std::filesystem::remove_all(dir);
}

TEST_CASE("HTTP routes serve the session API") {
    SessionStore store;
    ApiServer server(store);
    const int port = server.bind("127.0.0.1", 0);
    REQUIRE(port > 0);
    std::thread th([&] { server.listen(); });
    httplib::Client cli("127.0.0.1", port);
    cli.set_connection_timeout(5);
    auto created = cli.Post("/v1/sessions", window_create("Breaker", "greedy").dump(), "application/json");
    REQUIRE(created);
    CHECK(created->status == 201);
    const std::string id = json::parse(created->body)["id"];
    auto got = cli.Get("/v1/sessions/" + id);
    REQUIRE(got);
    CHECK(got->status == 200);
    auto eng = cli.Post("/v1/sessions/" + id + "/engine-move", "", "application/json");
    REQUIRE(eng);
    CHECK(eng->status == 200);
    const int e = json::parse(eng->body)["edges"][0];
    auto bad = cli.Post("/v1/sessions/" + id + "/moves", json{{"edge", e}}.dump(), "application/json");
    REQUIRE(bad);
    CHECK(bad->status == 409);
    CHECK(json::parse(bad->body)["reason"] == "edge-claimed");
    auto undo = cli.Post("/v1/sessions/" + id + "/undo", json{{"t", 0}}.dump(), "application/json");
    REQUIRE(undo);
    CHECK(undo->status == 200);
    auto tr = cli.Get("/v1/sessions/" + id + "/transcript");
    REQUIRE(tr);
    CHECK(tr->status == 200);
    auto missing = cli.Get("/v1/sessions/nope");
    REQUIRE(missing);
    CHECK(missing->status == 404);
    auto junk = cli.Post("/v1/sessions", "{not json", "application/json");
    REQUIRE(junk);
    CHECK(junk->status == 400);
    server.stop();
    th.join();
}
