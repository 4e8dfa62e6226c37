#pragma once

#include <cstdint>
#include <filesystem>
#include <functional>
#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "exemplar/engine.hpp"
#include "exemplar/error.hpp"

namespace exemplar::service {

using SessionId = std::string;

struct SessionState {
    SessionId session_id;
    MemberId searcher_id;
    std::vector<MemberId> ideal_candidates;
    query::Query current_query;
    std::int64_t n = 0;  // successful refines since creation
    std::int64_t created_at = 0;  // unix seconds
    std::int64_t updated_at = 0;

    friend bool operator==(const SessionState&, const SessionState&) = default;
};

/// A session together with the results and suggestions of its latest refresh.
struct SessionSnapshot {
    SessionState state;
    std::vector<ranking::RankedResult> results;  // full ranking, best first
    query::Suggestions suggestions;
};

nlohmann::json to_json(const SessionState& s, double decay);
nlohmann::json to_json(const SessionSnapshot& s, double decay, std::size_t offset, std::size_t limit);

/// Raised by refine when the edited query violates a Query invariant.
class InvalidQuery : public InvalidArgument {
public:
    explicit InvalidQuery(std::vector<std::string> problems);
    const std::vector<std::string>& problems() const { return problems_; }

private:
    std::vector<std::string> problems_;
};

using Clock = std::function<std::int64_t()>;

Clock system_clock();

/// Owns all sessions. Requests on different sessions run concurrently; requests on one session
/// are serialized. When a store path is configured every committed change rewrites that file.
class SessionManager {
public:
    SessionManager(std::shared_ptr<const Engine> engine, std::optional<std::filesystem::path> store_path = std::nullopt,
                   Clock clock = system_clock());

    /// Throws NotFound for unknown members and InvalidArgument for an empty, duplicate or oversized set.
    SessionSnapshot start_session(const MemberId& searcher_id, const std::vector<MemberId>& ideal_candidates);

    /// Replaces the query and increments n by one. On any error the session is left untouched.
    SessionSnapshot refine(const SessionId& id, const query::Query& edited);

    SessionSnapshot get_session(const SessionId& id) const;

    std::size_t size() const;
    const Engine& engine() const { return *engine_; }

private:
    struct Entry {
        mutable std::mutex mutex;
        SessionSnapshot snapshot;
    };

    std::shared_ptr<Entry> find(const SessionId& id) const;
    SessionSnapshot refresh(SessionState state) const;
    void persist(const SessionSnapshot& snapshot);
    void load_store();

    std::shared_ptr<const Engine> engine_;
    std::optional<std::filesystem::path> store_path_;
    Clock clock_;

    mutable std::mutex sessions_mutex_;
    std::map<SessionId, std::shared_ptr<Entry>> sessions_;
    std::uint64_t next_id_ = 1;

    std::mutex store_mutex_;
    std::map<SessionId, nlohmann::json> persisted_;
};

}  // namespace exemplar::service
