#pragma once

#include <cstdint>
#include <filesystem>
#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <random>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include <nlohmann/json.hpp>

#include "arbor/game.hpp"
#include "arbor/tree.hpp"

namespace arbor::service {

enum class ApiErrc {
  BadRequest,
  InvalidTree,
  NotYourTurn,
  NotACandidate,
  SessionFinished,
  UnknownSession,
  TooLarge,
  TooComplex,
};

const char* to_string(ApiErrc code);

class ApiError : public std::runtime_error {
 public:
  ApiError(ApiErrc code, const std::string& what) : std::runtime_error(what), code_(code) {}
  ApiErrc code() const { return code_; }
  int http_status() const;
  nlohmann::json to_json() const;

 private:
  ApiErrc code_;
};

enum class Role { First, Second };
enum class BotKind { Optimal, Random };
enum class Actor { Human, Bot };
enum class Status { InProgress, HumanWon, BotWon };

const char* to_string(Role r);
const char* to_string(BotKind b);
const char* to_string(Actor a);
const char* to_string(Status s);
std::optional<Role> parse_role(std::string_view s);
std::optional<BotKind> parse_bot_kind(std::string_view s);

struct MoveRecord {
  Actor actor;
  Vertex vertex;
  bool hit;
  int candidates_after;
};

/// One live game. The target and every random bot move are drawn from a
/// single mt19937_64 stream seeded at creation, so (tree, roles, seed, human
/// guesses) determine the whole game.
class Session {
 public:
  Session(std::string id, Tree tree, Role human_role, BotKind bot_kind, std::uint64_t seed, GameSolver& solver);

  /// Applies a human guess and the bot's reply (if the game continues).
  void human_guess(Vertex v, GameSolver& solver);

  const std::string& id() const { return id_; }
  const Tree& tree() const { return tree_; }
  Role human_role() const { return human_role_; }
  BotKind bot_kind() const { return bot_kind_; }
  std::uint64_t seed() const { return seed_; }
  Status status() const { return status_; }
  Vertex target() const { return target_; }
  Actor to_move() const { return to_move_; }
  const std::vector<Vertex>& candidates() const { return candidates_; }
  const std::vector<MoveRecord>& history() const { return history_; }
  std::vector<Vertex> human_guesses() const;

  /// Client view; target and seed appear only once the game is over.
  nlohmann::json view() const;
  /// Persistence snapshot: enough to rebuild the session by replay.
  nlohmann::json snapshot() const;

  static Session replay(std::string id, const Tree& tree, Role human_role, BotKind bot_kind, std::uint64_t seed,
                        const std::vector<Vertex>& human_guesses, GameSolver& solver);

 private:
  void apply(Actor actor, Vertex v);
  void bot_move(GameSolver& solver);
  Vertex draw(std::uint64_t bound);

  std::string id_;
  Tree tree_;
  Role human_role_;
  BotKind bot_kind_;
  std::uint64_t seed_;
  std::mt19937_64 rng_;
  Vertex target_ = 0;
  Status status_ = Status::InProgress;
  Actor to_move_ = Actor::Human;
  std::vector<Vertex> candidates_;
  std::vector<MoveRecord> history_;
};

/// The optimal bot's pick on a candidate set: argmax of the optimal-first vs.
/// random value on the induced subtree, smallest original label on ties.
Vertex optimal_bot_move(const Tree& tree, const std::vector<Vertex>& candidates, GameSolver& solver);

struct ServiceConfig {
  int analysis_cap = 64;
  /// Cache-miss budget per analysis request; guards trees with many distinct subtrees.
  std::size_t analysis_budget = 250'000;
  std::optional<std::filesystem::path> persist_dir;
};

struct CreateRequest {
  std::string tree_spec;
  Role human_role = Role::First;
  BotKind bot_kind = BotKind::Optimal;
  std::optional<std::uint64_t> seed;
};

/// Session registry behind the HTTP API. Distinct sessions may be driven
/// concurrently; operations on one session are serialized.
class GameService {
 public:
  explicit GameService(ServiceConfig config = {});

  nlohmann::json create(const CreateRequest& req);
  nlohmann::json guess(const std::string& id, Vertex v);
  nlohmann::json get(const std::string& id) const;
  nlohmann::json list() const;
  void remove(const std::string& id);
  nlohmann::json analyze(std::string_view tree_spec) const;

  /// Parses the JSON body of POST /api/games.
  static CreateRequest parse_create(const nlohmann::json& body);

  const ServiceConfig& config() const { return config_; }

 private:
  struct Slot {
    std::mutex mutex;
    std::unique_ptr<Session> session;
  };
  std::shared_ptr<Slot> find(const std::string& id) const;
  void persist(const Session& s) const;
  void load_persisted();
  std::string new_id();

  ServiceConfig config_;
  std::shared_ptr<MemoTable> memo_;
  mutable std::mutex registry_mutex_;
  std::map<std::string, std::shared_ptr<Slot>> sessions_;
  std::mt19937_64 id_rng_;
};

}  // namespace arbor::service
