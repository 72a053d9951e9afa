#include "arbor/play_service.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>

#include "arbor/json_io.hpp"
#include "arbor/simulate.hpp"
#include "arbor/tree_io.hpp"

namespace arbor::service {

using nlohmann::json;

const char* to_string(ApiErrc code) {
  switch (code) {
    case ApiErrc::BadRequest: return "BadRequest";
    case ApiErrc::InvalidTree: return "InvalidTree";
    case ApiErrc::NotYourTurn: return "NotYourTurn";
    case ApiErrc::NotACandidate: return "NotACandidate";
    case ApiErrc::SessionFinished: return "SessionFinished";
    case ApiErrc::UnknownSession: return "UnknownSession";
    case ApiErrc::TooLarge: return "TooLarge";
    case ApiErrc::TooComplex: return "TooComplex";
  }
  return "Unknown";
}

int ApiError::http_status() const {
  switch (code_) {
    case ApiErrc::BadRequest:
    case ApiErrc::InvalidTree:
    case ApiErrc::NotACandidate: return 400;
    case ApiErrc::UnknownSession: return 404;
    case ApiErrc::NotYourTurn:
    case ApiErrc::SessionFinished: return 409;
    case ApiErrc::TooLarge: return 413;
    case ApiErrc::TooComplex: return 422;
  }
  return 500;
}

json ApiError::to_json() const { return json{{"error", {{"code", to_string(code_)}, {"message", what()}}}}; }

const char* to_string(Role r) { return r == Role::First ? "first" : "second"; }
const char* to_string(BotKind b) { return b == BotKind::Optimal ? "optimal" : "random"; }
const char* to_string(Actor a) { return a == Actor::Human ? "human" : "bot"; }
const char* to_string(Status s) {
  switch (s) {
    case Status::InProgress: return "in_progress";
    case Status::HumanWon: return "human_won";
    case Status::BotWon: return "bot_won";
  }
  return "?";
}

std::optional<Role> parse_role(std::string_view s) {
  if (s == "first") return Role::First;
  if (s == "second") return Role::Second;
  return std::nullopt;
}

std::optional<BotKind> parse_bot_kind(std::string_view s) {
  if (s == "optimal") return BotKind::Optimal;
  if (s == "random") return BotKind::Random;
  return std::nullopt;
}

Vertex optimal_bot_move(const Tree& tree, const std::vector<Vertex>& candidates, GameSolver& solver) {
  Component sub = induced_subtree(tree, candidates);
  ModelValue mv = solver.value_semirandom_first(sub.tree);
  // to_original is increasing, so the smallest local argmax is the smallest original label.
  return sub.to_original[mv.moves.front()];
}

// --- Session -----------------------------------------------------------------

Session::Session(std::string id, Tree tree, Role human_role, BotKind bot_kind, std::uint64_t seed,
                 GameSolver& solver)
    : id_(std::move(id)),
      tree_(std::move(tree)),
      human_role_(human_role),
      bot_kind_(bot_kind),
      seed_(seed),
      rng_(seed) {
  target_ = draw(static_cast<std::uint64_t>(tree_.order()));
  candidates_.resize(tree_.order());
  for (int i = 0; i < tree_.order(); ++i) candidates_[i] = i;
  to_move_ = human_role_ == Role::First ? Actor::Human : Actor::Bot;
  if (to_move_ == Actor::Bot) bot_move(solver);
}

Vertex Session::draw(std::uint64_t bound) { return static_cast<Vertex>(uniform_below(rng_, bound)); }

void Session::apply(Actor actor, Vertex v) {
  bool hit = v == target_;
  if (hit) {
    candidates_ = {v};
    status_ = actor == Actor::Human ? Status::HumanWon : Status::BotWon;
  } else {
    candidates_ = component_within(tree_, candidates_, v, target_);
    to_move_ = actor == Actor::Human ? Actor::Bot : Actor::Human;
  }
  history_.push_back(MoveRecord{actor, v, hit, static_cast<int>(candidates_.size())});
}

void Session::bot_move(GameSolver& solver) {
  Vertex v = bot_kind_ == BotKind::Optimal ? optimal_bot_move(tree_, candidates_, solver)
                                           : candidates_[draw(candidates_.size())];
  apply(Actor::Bot, v);
}

void Session::human_guess(Vertex v, GameSolver& solver) {
  if (status_ != Status::InProgress) throw ApiError(ApiErrc::SessionFinished, "game " + id_ + " is already over");
  if (to_move_ != Actor::Human) throw ApiError(ApiErrc::NotYourTurn, "it is the bot's turn");
  if (!std::binary_search(candidates_.begin(), candidates_.end(), v))
    throw ApiError(ApiErrc::NotACandidate, "vertex " + std::to_string(v) + " is not a candidate");
  apply(Actor::Human, v);
  if (status_ == Status::InProgress) bot_move(solver);
}

std::vector<Vertex> Session::human_guesses() const {
  std::vector<Vertex> out;
  for (const auto& m : history_)
    if (m.actor == Actor::Human) out.push_back(m.vertex);
  return out;
}

json Session::view() const {
  json history = json::array();
  for (const auto& m : history_)
    history.push_back(json{{"actor", to_string(m.actor)},
                           {"vertex", m.vertex},
                           {"outcome", m.hit ? "hit" : "miss"},
                           {"candidates_after", m.candidates_after}});
  json v{{"id", id_},
         {"tree", tree_to_json(tree_)},
         {"human_role", to_string(human_role_)},
         {"bot_kind", to_string(bot_kind_)},
         {"bot_policy", bot_kind_ == BotKind::Optimal ? "argmax semirandom-first" : "uniform over candidates"},
         {"status", to_string(status_)},
         {"candidates", candidates_},
         {"history", std::move(history)}};
  if (status_ == Status::InProgress) {
    v["to_move"] = to_string(to_move_);
  } else {
    v["to_move"] = nullptr;
    v["target"] = target_;
    v["seed"] = std::to_string(seed_);
  }
  return v;
}

json Session::snapshot() const {
  return json{{"id", id_},
              {"tree", format_tree(tree_)},
              {"human_role", to_string(human_role_)},
              {"bot_kind", to_string(bot_kind_)},
              {"seed", std::to_string(seed_)},
              {"human_guesses", human_guesses()}};
}

Session Session::replay(std::string id, const Tree& tree, Role human_role, BotKind bot_kind, std::uint64_t seed,
                        const std::vector<Vertex>& human_guesses, GameSolver& solver) {
  Session s(std::move(id), tree, human_role, bot_kind, seed, solver);
  for (Vertex v : human_guesses) s.human_guess(v, solver);
  return s;
}

// --- GameService -------------------------------------------------------------

GameService::GameService(ServiceConfig config)
    : config_(std::move(config)), memo_(std::make_shared<MemoTable>()), id_rng_(std::random_device{}()) {
  if (config_.persist_dir) load_persisted();
}

std::string GameService::new_id() {
  static const char* hex = "0123456789abcdef";
  std::string id = "g";
  std::uint64_t x = id_rng_();
  for (int i = 0; i < 16; ++i, x >>= 4) id.push_back(hex[x & 0xF]);
  return id;
}

CreateRequest GameService::parse_create(const json& body) {
  if (!body.is_object()) throw ApiError(ApiErrc::BadRequest, "request body must be a JSON object");
  CreateRequest req;
  if (!body.contains("tree") || !body["tree"].is_string())
    throw ApiError(ApiErrc::BadRequest, "missing string field 'tree'");
  req.tree_spec = body["tree"].get<std::string>();
  if (body.contains("human_role")) {
    auto r = body["human_role"].is_string() ? parse_role(body["human_role"].get<std::string>()) : std::nullopt;
    if (!r) throw ApiError(ApiErrc::BadRequest, "human_role must be \"first\" or \"second\"");
    req.human_role = *r;
  }
  if (body.contains("bot_kind")) {
    auto b = body["bot_kind"].is_string() ? parse_bot_kind(body["bot_kind"].get<std::string>()) : std::nullopt;
    if (!b) throw ApiError(ApiErrc::BadRequest, "bot_kind must be \"optimal\" or \"random\"");
    req.bot_kind = *b;
  }
  if (body.contains("seed") && !body["seed"].is_null()) {
    const auto& s = body["seed"];
    if (s.is_number_unsigned()) {
      req.seed = s.get<std::uint64_t>();
    } else if (s.is_number_integer() && s.get<std::int64_t>() >= 0) {
      req.seed = static_cast<std::uint64_t>(s.get<std::int64_t>());
    } else if (s.is_string()) {
      try {
        std::size_t used = 0;
        req.seed = std::stoull(s.get<std::string>(), &used);
        if (used != s.get<std::string>().size()) throw std::invalid_argument("trailing");
      } catch (const std::exception&) {
        throw ApiError(ApiErrc::BadRequest, "seed must be a non-negative 64-bit integer");
      }
    } else {
      throw ApiError(ApiErrc::BadRequest, "seed must be a non-negative 64-bit integer");
    }
  }
  return req;
}

namespace {

Tree parse_or_throw(std::string_view spec) {
  try {
    return parse_tree_spec(spec);
  } catch (const TreeError& e) {
    throw ApiError(ApiErrc::InvalidTree, std::string(to_string(e.code())) + ": " + e.what());
  }
}

}  // namespace

json GameService::create(const CreateRequest& req) {
  Tree tree = parse_or_throw(req.tree_spec);
  std::uint64_t seed = req.seed ? *req.seed : (static_cast<std::uint64_t>(std::random_device{}()) << 32) ^ std::random_device{}();
  auto slot = std::make_shared<Slot>();
  std::string id;
  {
    std::lock_guard lock(registry_mutex_);
    do {
      id = new_id();
    } while (sessions_.count(id));
    sessions_[id] = slot;
  }
  std::lock_guard slot_lock(slot->mutex);
  try {
    GameSolver solver(memo_);
    slot->session = std::make_unique<Session>(id, std::move(tree), req.human_role, req.bot_kind, seed, solver);
  } catch (...) {
    std::lock_guard lock(registry_mutex_);
    sessions_.erase(id);
    throw;
  }
  persist(*slot->session);
  return slot->session->view();
}

std::shared_ptr<GameService::Slot> GameService::find(const std::string& id) const {
  std::lock_guard lock(registry_mutex_);
  auto it = sessions_.find(id);
  if (it == sessions_.end()) throw ApiError(ApiErrc::UnknownSession, "no game with id '" + id + "'");
  return it->second;
}

json GameService::guess(const std::string& id, Vertex v) {
  auto slot = find(id);
  std::lock_guard lock(slot->mutex);
  if (!slot->session) throw ApiError(ApiErrc::UnknownSession, "no game with id '" + id + "'");
  GameSolver solver(memo_);
  slot->session->human_guess(v, solver);
  persist(*slot->session);
  return slot->session->view();
}

json GameService::get(const std::string& id) const {
  auto slot = find(id);
  std::lock_guard lock(slot->mutex);
  if (!slot->session) throw ApiError(ApiErrc::UnknownSession, "no game with id '" + id + "'");
  return slot->session->view();
}

json GameService::list() const {
  std::vector<std::shared_ptr<Slot>> slots;
  {
    std::lock_guard lock(registry_mutex_);
    for (const auto& [id, slot] : sessions_) slots.push_back(slot);
  }
  json out = json::array();
  for (const auto& slot : slots) {
    std::lock_guard lock(slot->mutex);
    if (!slot->session) continue;
    const Session& s = *slot->session;
    out.push_back(json{{"id", s.id()},
                       {"n", s.tree().order()},
                       {"status", to_string(s.status())},
                       {"human_role", to_string(s.human_role())},
                       {"bot_kind", to_string(s.bot_kind())},
                       {"moves", s.history().size()},
                       {"candidates", s.candidates().size()}});
  }
  return out;
}

void GameService::remove(const std::string& id) {
  {
    std::lock_guard lock(registry_mutex_);
    if (sessions_.erase(id) == 0) throw ApiError(ApiErrc::UnknownSession, "no game with id '" + id + "'");
  }
  if (config_.persist_dir) {
    std::error_code ec;
    std::filesystem::remove(*config_.persist_dir / (id + ".json"), ec);
  }
}

json GameService::analyze(std::string_view tree_spec) const {
  Tree tree = parse_or_throw(tree_spec);
  if (tree.order() > config_.analysis_cap)
    throw ApiError(ApiErrc::TooLarge, "tree has " + std::to_string(tree.order()) + " vertices; analysis cap is " +
                                          std::to_string(config_.analysis_cap));
  try {
    GameSolver solver(memo_, SolverLimits{config_.analysis_budget});
    ValueBundle b = solver.bundle(tree);
    StoppingDist d = solver.stopping_time_distribution(tree);
    return bundle_to_json(tree, b, d);
  } catch (const BudgetExceeded& e) {
    throw ApiError(ApiErrc::TooComplex, e.what());
  }
}

void GameService::persist(const Session& s) const {
  if (!config_.persist_dir) return;
  std::filesystem::create_directories(*config_.persist_dir);
  auto final_path = *config_.persist_dir / (s.id() + ".json");
  auto tmp = final_path;
  tmp += ".tmp";
  {
    std::ofstream f(tmp, std::ios::binary);
    f << s.snapshot().dump(2) << "\n";
    if (!f) throw std::runtime_error("cannot write session snapshot " + tmp.string());
  }
  std::filesystem::rename(tmp, final_path);
}

void GameService::load_persisted() {
  const auto& dir = *config_.persist_dir;
  if (!std::filesystem::exists(dir)) return;
  GameSolver solver(memo_);
  for (const auto& entry : std::filesystem::directory_iterator(dir)) {
    if (entry.path().extension() != ".json") continue;
    std::ifstream f(entry.path());
    json j = json::parse(f, nullptr, false);
    if (j.is_discarded()) continue;
    try {
      auto role = parse_role(j.at("human_role").get<std::string>());
      auto bot = parse_bot_kind(j.at("bot_kind").get<std::string>());
      if (!role || !bot) continue;
      Session s = Session::replay(j.at("id").get<std::string>(), parse_tree(j.at("tree").get<std::string>()), *role,
                                  *bot, std::stoull(j.at("seed").get<std::string>()),
                                  j.at("human_guesses").get<std::vector<Vertex>>(), solver);
      auto slot = std::make_shared<Slot>();
      std::string id = s.id();
      slot->session = std::make_unique<Session>(std::move(s));
      sessions_[id] = std::move(slot);
    } catch (const std::exception&) {
      // Skip snapshots that no longer replay cleanly.
    }
  }
}

}  // namespace arbor::service
