#include "troprank/service.hpp"

#include <httplib.h>

#include <fstream>
#include <random>
#include <sstream>

#include "troprank/errors.hpp"

namespace troprank::service {

namespace {

std::size_t checked_index(std::size_t one_based, std::size_t n, const char* what) {
  if (one_based < 1 || one_based > n) {
    throw UsageError(std::string(what) + " index " + std::to_string(one_based) +
                     " out of range 1.." + std::to_string(n));
  }
  return one_based - 1;
}

Json cycle_to_json(const InfeasibleError& e, const std::vector<std::string>& labels) {
  Json cycle = Json::array();
  Json names = Json::array();
  for (auto v : e.cycle()) {
    cycle.push_back(v + 1);
    names.push_back(v < labels.size() ? labels[v] : "alt" + std::to_string(v + 1));
  }
  return {{"error", e.what()},
          {"cycle", std::move(cycle)},
          {"cycle_labels", std::move(names)},
          {"cycle_product", e.cycle_value()}};
}

void send_json(httplib::Response& res, int status, const Json& body) {
  res.status = status;
  res.set_content(body.dump(), "application/json");
}

template <typename Handler>
void guarded(httplib::Response& res, Handler&& handler) {
  try {
    handler();
  } catch (const NotFoundError& e) {
    send_json(res, 404, {{"error", e.what()}});
  } catch (const ConflictError& e) {
    send_json(res, 409,
              {{"error", e.what()}, {"current_revision", e.current_revision()}});
  } catch (const DomainError& e) {
    send_json(res, 422, {{"error", e.what()}});
  } catch (const UsageError& e) {
    send_json(res, 400, {{"error", e.what()}});
  } catch (const ParseError& e) {
    send_json(res, 400, {{"error", e.what()}});
  } catch (const Json::exception& e) {
    send_json(res, 400, {{"error", std::string("malformed JSON: ") + e.what()}});
  }
}

std::optional<std::uint64_t> optional_revision(const Json& body) {
  if (body.contains("revision") && !body.at("revision").is_null()) {
    return body.at("revision").get<std::uint64_t>();
  }
  return std::nullopt;
}

Json parse_body(const httplib::Request& req) {
  try {
    return Json::parse(req.body);
  } catch (const Json::parse_error& e) {
    throw ParseError(std::string("request body is not JSON: ") + e.what());
  }
}

}  // namespace

SessionStore::SessionStore(std::optional<std::filesystem::path> persist_dir)
    : persist_dir_(std::move(persist_dir)) {
  if (persist_dir_) {
    std::filesystem::create_directories(*persist_dir_);
    load_persisted();
  }
}

std::string SessionStore::fresh_id() {
  static thread_local std::mt19937_64 rng{std::random_device{}()};
  std::ostringstream os;
  os << std::hex << rng();
  return os.str();
}

std::string SessionStore::create(const Json& body) {
  auto session = std::make_shared<Session>();
  session->problem = io::problem_from_json(body);
  session->auto_reciprocal = body.value("auto_reciprocal", false);
  std::unique_lock lock(map_mutex_);
  std::string id;
  do {
    id = fresh_id();
  } while (sessions_.count(id));
  sessions_.emplace(id, session);
  lock.unlock();
  std::lock_guard guard(session->mutex);
  persist(id, *session);
  return id;
}

std::shared_ptr<SessionStore::Session> SessionStore::find(const std::string& id) const {
  std::shared_lock lock(map_mutex_);
  const auto it = sessions_.find(id);
  if (it == sessions_.end()) throw NotFoundError("unknown problem id '" + id + "'");
  return it->second;
}

std::uint64_t SessionStore::set_entry(const std::string& id, std::size_t matrix,
                                      std::size_t i, std::size_t j,
                                      const Json& value,
                                      std::optional<std::uint64_t> expected_revision,
                                      std::optional<bool> auto_reciprocal) {
  auto s = find(id);
  std::lock_guard guard(s->mutex);
  if (expected_revision && *expected_revision != s->revision) {
    throw ConflictError("revision " + std::to_string(*expected_revision) +
                            " is stale; current revision is " +
                            std::to_string(s->revision),
                        s->revision);
  }
  if (matrix >= s->problem.matrices.size()) {
    throw UsageError("matrix index " + std::to_string(matrix) + " out of range");
  }
  Matrix updated = s->problem.matrices[matrix];
  const std::size_t n = updated.rows();
  const std::size_t r = checked_index(i, n, "row");
  const std::size_t c = checked_index(j, n, "column");
  const Scalar v = io::scalar_from_json(value, s->problem.field);
  updated.set(r, c, v);
  if (auto_reciprocal.value_or(s->auto_reciprocal) && r != c) {
    updated.set(c, r, inv(v));
  }
  s->problem.matrices[matrix] = std::move(updated);
  if (auto_reciprocal) s->auto_reciprocal = *auto_reciprocal;
  ++s->revision;
  persist(id, *s);
  return s->revision;
}

std::uint64_t SessionStore::set_constraint(const std::string& id, std::size_t i,
                                           std::size_t j, const Json& value,
                                           std::optional<std::uint64_t> expected_revision) {
  auto s = find(id);
  std::lock_guard guard(s->mutex);
  if (expected_revision && *expected_revision != s->revision) {
    throw ConflictError("revision " + std::to_string(*expected_revision) +
                            " is stale; current revision is " +
                            std::to_string(s->revision),
                        s->revision);
  }
  if (s->problem.matrices.size() != 1) {
    throw UsageError(
        "constraints combine with exactly one comparison matrix; this problem "
        "has " + std::to_string(s->problem.matrices.size()));
  }
  const std::size_t n = s->problem.order();
  const std::size_t r = checked_index(i, n, "row");
  const std::size_t c = checked_index(j, n, "column");
  const Scalar v = io::scalar_from_json(value, s->problem.field);
  Matrix constraints =
      s->problem.constraints.value_or(Matrix(s->problem.field, n, n));
  constraints.set(r, c, v);
  if (constraints.is_zero()) {
    s->problem.constraints.reset();
  } else {
    s->problem.constraints = std::move(constraints);
  }
  ++s->revision;
  persist(id, *s);
  return s->revision;
}

Json SessionStore::solve(const std::string& id) {
  auto s = find(id);
  RatingProblem problem;
  std::uint64_t revision = 0;
  {
    std::lock_guard guard(s->mutex);
    if (s->last_result && s->result_revision == s->revision) return *s->last_result;
    problem = s->problem;
    revision = s->revision;
  }
  Json result = io::result_to_json(rate(problem), problem);
  result["revision"] = revision;
  std::lock_guard guard(s->mutex);
  if (s->revision == revision) {
    s->last_result = result;
    s->result_revision = revision;
    persist(id, *s);
  }
  return result;
}

Json SessionStore::state_locked(const std::string& id, const Session& s) const {
  Json last = nullptr;
  if (s.last_result) {
    last = *s.last_result;
    last["stale"] = s.result_revision != s.revision;
  }
  return {{"id", id},
          {"revision", s.revision},
          {"auto_reciprocal", s.auto_reciprocal},
          {"problem", io::problem_to_json(s.problem)},
          {"last_result", std::move(last)}};
}

Json SessionStore::state(const std::string& id) const {
  auto s = find(id);
  std::lock_guard guard(s->mutex);
  return state_locked(id, *s);
}

std::size_t SessionStore::size() const {
  std::shared_lock lock(map_mutex_);
  return sessions_.size();
}

void SessionStore::persist(const std::string& id, const Session& s) const {
  if (!persist_dir_) return;
  const auto path = *persist_dir_ / (id + ".json");
  const auto tmp = *persist_dir_ / (id + ".json.tmp");
  {
    std::ofstream out(tmp, std::ios::trunc);
    out << state_locked(id, s).dump(2);
  }
  std::filesystem::rename(tmp, path);
}

void SessionStore::load_persisted() {
  for (const auto& entry : std::filesystem::directory_iterator(*persist_dir_)) {
    if (entry.path().extension() != ".json") continue;
    std::ifstream in(entry.path());
    const Json j = Json::parse(in);
    auto session = std::make_shared<Session>();
    Json problem = j.at("problem");
    session->problem = io::problem_from_json(problem);
    session->auto_reciprocal = j.value("auto_reciprocal", false);
    session->revision = j.at("revision").get<std::uint64_t>();
    if (j.contains("last_result") && !j.at("last_result").is_null()) {
      Json last = j.at("last_result");
      const bool stale = last.value("stale", false);
      last.erase("stale");
      session->result_revision = last.value("revision", std::uint64_t{0});
      if (!stale) session->last_result = std::move(last);
    }
    sessions_.emplace(j.at("id").get<std::string>(), std::move(session));
  }
}

void install_routes(httplib::Server& server, SessionStore& store,
                    const ServerOptions& options) {
  server.set_default_headers(
      {{"Access-Control-Allow-Origin", options.cors_origin},
       {"Access-Control-Allow-Methods", "GET, POST, PUT, OPTIONS"},
       {"Access-Control-Allow-Headers", "Content-Type"}});

  server.Options(R"(/api/.*)", [](const httplib::Request&, httplib::Response& res) {
    res.status = 204;
  });

  server.Post("/api/problems", [&store](const httplib::Request& req,
                                        httplib::Response& res) {
    guarded(res, [&] {
      const std::string id = store.create(parse_body(req));
      send_json(res, 201, {{"id", id}, {"revision", store.state(id)["revision"]}});
    });
  });

  server.Put(R"(/api/problems/([^/]+)/entry)",
             [&store](const httplib::Request& req, httplib::Response& res) {
               guarded(res, [&] {
                 const Json body = parse_body(req);
                 std::optional<bool> auto_reciprocal;
                 if (body.contains("auto_reciprocal")) {
                   auto_reciprocal = body.at("auto_reciprocal").get<bool>();
                 }
                 const auto rev = store.set_entry(
                     req.matches[1], body.value("matrix", std::size_t{0}),
                     body.at("i").get<std::size_t>(), body.at("j").get<std::size_t>(),
                     body.at("value"), optional_revision(body), auto_reciprocal);
                 send_json(res, 200, {{"revision", rev}});
               });
             });

  server.Put(R"(/api/problems/([^/]+)/constraint)",
             [&store](const httplib::Request& req, httplib::Response& res) {
               guarded(res, [&] {
                 const Json body = parse_body(req);
                 const auto rev = store.set_constraint(
                     req.matches[1], body.at("i").get<std::size_t>(),
                     body.at("j").get<std::size_t>(), body.at("value"),
                     optional_revision(body));
                 send_json(res, 200, {{"revision", rev}});
               });
             });

  server.Post(R"(/api/problems/([^/]+)/solve)",
              [&store](const httplib::Request& req, httplib::Response& res) {
                const std::string id = req.matches[1];
                guarded(res, [&] {
                  try {
                    send_json(res, 200, store.solve(id));
                  } catch (const InfeasibleError& e) {
                    const auto labels = store.state(id)["problem"]["labels"]
                                            .get<std::vector<std::string>>();
                    send_json(res, 422, cycle_to_json(e, labels));
                  }
                });
              });

  server.Get(R"(/api/problems/([^/]+))",
             [&store](const httplib::Request& req, httplib::Response& res) {
               guarded(res, [&] { send_json(res, 200, store.state(req.matches[1])); });
             });
}

}  // namespace troprank::service
