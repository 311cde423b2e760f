#pragma once

#include <filesystem>
#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <shared_mutex>
#include <string>

#include <json.hpp>

#include "perc/engine.hpp"
#include "perc/strategy.hpp"
#include "perc/transcript.hpp"

namespace perc {

// An API answer: HTTP status plus a JSON body.
struct ApiReply {
    int status = 200;
    nlohmann::json body;
};

class Session {
public:
    // body: {"board": <board file json>, "config": {"p","q","first"}, "human": "Maker"|"Breaker"|"none",
    //        "engine": <name>} or "engines": {"maker": <name>, "breaker": <name>}; optional "head_start".
    static std::unique_ptr<Session> create(std::string id, const nlohmann::json& body);
    static std::unique_ptr<Session> from_record(const nlohmann::json& rec);

    const std::string& id() const { return id_; }
    const GameState& state() const { return *state_; }
    std::string status() const;

    nlohmann::json state_json() const;
    nlohmann::json record() const;
    std::string transcript_text() const { return to_text(transcript_of(*state_)); }

    // One edge for the human side; returns a rejection reason on failure.
    std::optional<std::string> human_move(EdgeId e);
    // The engine plays the rest of its current turn.
    std::optional<std::string> engine_move();
    std::optional<std::string> undo(int t);

    mutable std::shared_mutex mutex;

private:
    Session() = default;
    Strategy* engine_for(Player who);

    std::string id_;
    nlohmann::json board_json_;
    std::optional<Player> human_;
    std::map<Player, std::string> engine_names_;
    std::map<Player, std::unique_ptr<Strategy>> engines_;
    std::shared_ptr<const Board> board_;
    std::optional<GameState> state_;
};

// Thread-safe store. With a state directory, every change is written to
// <dir>/<id>.json and existing files are loaded on construction.
class SessionStore {
public:
    explicit SessionStore(std::optional<std::filesystem::path> dir = std::nullopt);

    ApiReply create(const nlohmann::json& body);
    ApiReply get(const std::string& id) const;
    ApiReply move(const std::string& id, const nlohmann::json& body);
    ApiReply engine_move(const std::string& id);
    ApiReply undo(const std::string& id, const nlohmann::json& body);
    ApiReply transcript(const std::string& id) const;

    std::size_t size() const;

private:
    std::shared_ptr<Session> find(const std::string& id) const;
    void persist(const Session& s) const;

    std::optional<std::filesystem::path> dir_;
    mutable std::shared_mutex mutex_;
    std::map<std::string, std::shared_ptr<Session>> sessions_;
    long next_id_ = 1;
};

// HTTP front end for the /v1 session API.
class ApiServer {
public:
    explicit ApiServer(SessionStore& store);
    ~ApiServer();
    // Binds to `port`, or to a free port when port == 0; returns the bound port or -1.
    int bind(const std::string& host, int port);
    void listen();  // blocks until stop()
    void stop();

private:
    struct Impl;
    std::unique_ptr<Impl> impl_;
};

}  // namespace perc
