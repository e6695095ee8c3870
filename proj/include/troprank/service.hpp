#pragma once

#include <cstdint>
#include <filesystem>
#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <shared_mutex>
#include <stdexcept>
#include <string>

#include "troprank/io.hpp"

namespace httplib {
class Server;
}

namespace troprank::service {

using Json = io::Json;

class NotFoundError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// A mutation named a revision other than the current one.
class ConflictError : public std::runtime_error {
 public:
  ConflictError(const std::string& what, std::uint64_t current)
      : std::runtime_error(what), current_(current) {}
  std::uint64_t current_revision() const noexcept { return current_; }

 private:
  std::uint64_t current_;
};

/// In-memory store of rating problems keyed by opaque id, with optional
/// JSON-file persistence (one <id>.json per problem).
///
/// Every mutation bumps the problem's revision. Mutations on one problem
/// are serialized; a mutation that carries an expected revision is rejected
/// with ConflictError when another update got there first. Solve results are
/// cached per revision, so repeated solves at one revision return identical
/// bodies.
class SessionStore {
 public:
  explicit SessionStore(std::optional<std::filesystem::path> persist_dir = {});

  // Body: problem JSON plus optional "auto_reciprocal" (default false).
  // Returns the new id.
  std::string create(const Json& body);

  // a_ij of matrix `matrix` (0-based list index) := value, 1-based i, j.
  // In auto-reciprocal mode a_ji := value^{-1} as well.
  std::uint64_t set_entry(const std::string& id, std::size_t matrix,
                          std::size_t i, std::size_t j, const Json& value,
                          std::optional<std::uint64_t> expected_revision,
                          std::optional<bool> auto_reciprocal);

  // c_ij := value (1-based). A zero value removes the constraint.
  std::uint64_t set_constraint(const std::string& id, std::size_t i,
                               std::size_t j, const Json& value,
                               std::optional<std::uint64_t> expected_revision);

  // Result JSON tagged with "revision". Throws the rating errors as-is.
  Json solve(const std::string& id);

  // {"id", "revision", "auto_reciprocal", "problem", "last_result"}; the last
  // result carries "stale": true when computed for an older revision.
  Json state(const std::string& id) const;

  std::size_t size() const;

 private:
  struct Session {
    mutable std::mutex mutex;
    RatingProblem problem;
    bool auto_reciprocal = false;
    std::uint64_t revision = 1;
    std::optional<Json> last_result;
    std::uint64_t result_revision = 0;
  };

  std::shared_ptr<Session> find(const std::string& id) const;
  Json state_locked(const std::string& id, const Session& s) const;
  void persist(const std::string& id, const Session& s) const;
  void load_persisted();
  std::string fresh_id();

  mutable std::shared_mutex map_mutex_;
  std::map<std::string, std::shared_ptr<Session>> sessions_;
  std::optional<std::filesystem::path> persist_dir_;
};

struct ServerOptions {
  std::string cors_origin = "*";
};

/// Registers the HTTP/JSON API on `server`:
///   POST /api/problems                  problem JSON -> {"id", "revision"}
///   PUT  /api/problems/{id}/entry       {"i","j","value"[,"matrix","revision","auto_reciprocal"]}
///   PUT  /api/problems/{id}/constraint  {"i","j","value"[,"revision"]}
///   POST /api/problems/{id}/solve       -> result JSON
///   GET  /api/problems/{id}             -> full state
/// Errors: 400 malformed, 404 unknown id, 409 revision conflict, 422 domain
/// errors; infeasible constraints carry the violating cycle.
void install_routes(httplib::Server& server, SessionStore& store,
                    const ServerOptions& options = {});

}  // namespace troprank::service
