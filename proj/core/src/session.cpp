#include "exemplar/session.hpp"

#include <chrono>
#include <cstdio>
#include <fstream>
#include <sstream>

#include "exemplar/snapshot.hpp"

namespace exemplar::service {

using nlohmann::json;

namespace {

json state_json(const SessionState& s) {
    return json{{"session_id", s.session_id},
                {"searcher_id", s.searcher_id},
                {"ideal_candidate_ids", s.ideal_candidates},
                {"current_query", query::to_json(s.current_query)},
                {"n", s.n},
                {"created_at", s.created_at},
                {"updated_at", s.updated_at}};
}

SessionState state_from_json(const json& j) {
    SessionState s;
    s.session_id = j.at("session_id").get<std::string>();
    s.searcher_id = j.at("searcher_id").get<std::string>();
    s.ideal_candidates = j.at("ideal_candidate_ids").get<std::vector<MemberId>>();
    s.current_query = query::query_from_json(j.at("current_query"));
    s.n = j.at("n").get<std::int64_t>();
    s.created_at = j.at("created_at").get<std::int64_t>();
    s.updated_at = j.at("updated_at").get<std::int64_t>();
    return s;
}

std::string problem_list(const std::vector<std::string>& problems) {
    std::string out = "invalid query";
    for (const auto& p : problems) out += "; " + p;
    return out;
}

}  // namespace

json to_json(const SessionState& s, double decay) {
    auto j = state_json(s);
    const double w = ranking::trajectory_weight(s.n, decay);
    j["blend_weights"] = json{{"f1", 1.0 / (1.0 + w)}, {"f2", w / (1.0 + w)}};
    return j;
}

json to_json(const SessionSnapshot& s, double decay, std::size_t offset, std::size_t limit) {
    json results = json::array();
    for (std::size_t i = offset; i < s.results.size() && i - offset < limit; ++i) {
        results.push_back(ranking::to_json(s.results[i]));
    }
    return json{{"session", to_json(s.state, decay)},
                {"query", query::to_json(s.state.current_query)},
                {"results", std::move(results)},
                {"total", s.results.size()},
                {"offset", offset},
                {"suggestions", query::to_json(s.suggestions)}};
}

InvalidQuery::InvalidQuery(std::vector<std::string> problems)
    : InvalidArgument(problem_list(problems)), problems_(std::move(problems)) {}

Clock system_clock() {
    return [] {
        return std::chrono::duration_cast<std::chrono::seconds>(std::chrono::system_clock::now().time_since_epoch())
            .count();
    };
}

SessionManager::SessionManager(std::shared_ptr<const Engine> engine, std::optional<std::filesystem::path> store_path,
                               Clock clock)
    : engine_(std::move(engine)), store_path_(std::move(store_path)), clock_(std::move(clock)) {
    if (store_path_ && std::filesystem::exists(*store_path_)) load_store();
}

std::size_t SessionManager::size() const {
    std::lock_guard lock(sessions_mutex_);
    return sessions_.size();
}

SessionSnapshot SessionManager::refresh(SessionState state) const {
    SessionSnapshot snap;
    const auto& cfg = engine_->config().service;
    snap.results = engine_->search(state.current_query, state.searcher_id, state.ideal_candidates, state.n,
                                   cfg.include_ideal_candidates);
    snap.suggestions = engine_->suggest(state.current_query);
    snap.state = std::move(state);
    return snap;
}

SessionSnapshot SessionManager::start_session(const MemberId& searcher_id,
                                              const std::vector<MemberId>& ideal_candidates) {
    const auto& corpus = engine_->corpus();
    const IdealCandidateSet ideal(ideal_candidates, engine_->config().service.max_ideal_candidates);
    if (!corpus.has_member(searcher_id)) throw NotFound("unknown member " + searcher_id);
    for (const auto& id : ideal.ids()) {
        if (!corpus.has_member(id)) throw NotFound("unknown member " + id);
    }

    SessionState state;
    state.searcher_id = searcher_id;
    state.ideal_candidates = ideal.ids();
    state.current_query = engine_->build_query(ideal.ids());
    state.n = 0;
    state.created_at = state.updated_at = clock_();
    auto snapshot = refresh(std::move(state));

    auto entry = std::make_shared<Entry>();
    {
        std::lock_guard lock(sessions_mutex_);
        char buf[32];
        std::snprintf(buf, sizeof buf, "s%06llu", static_cast<unsigned long long>(next_id_++));
        snapshot.state.session_id = buf;
        entry->snapshot = snapshot;
        sessions_.emplace(snapshot.state.session_id, entry);
    }
    persist(snapshot);
    return snapshot;
}

std::shared_ptr<SessionManager::Entry> SessionManager::find(const SessionId& id) const {
    std::lock_guard lock(sessions_mutex_);
    auto it = sessions_.find(id);
    if (it == sessions_.end()) throw NotFound("unknown session " + id);
    return it->second;
}

SessionSnapshot SessionManager::refine(const SessionId& id, const query::Query& edited) {
    auto entry = find(id);
    std::lock_guard lock(entry->mutex);
    auto problems = query::validate_query(edited, engine_->corpus());
    if (!problems.empty()) throw InvalidQuery(std::move(problems));

    SessionState next = entry->snapshot.state;
    next.current_query = edited;
    next.n += 1;
    next.updated_at = clock_();
    auto snapshot = refresh(std::move(next));
    persist(snapshot);
    entry->snapshot = snapshot;
    return snapshot;
}

SessionSnapshot SessionManager::get_session(const SessionId& id) const {
    auto entry = find(id);
    std::lock_guard lock(entry->mutex);
    return entry->snapshot;
}

void SessionManager::persist(const SessionSnapshot& snapshot) {
    if (!store_path_) return;
    std::lock_guard lock(store_mutex_);
    json results = json::array();
    for (const auto& r : snapshot.results) results.push_back(ranking::to_json(r));
    persisted_[snapshot.state.session_id] =
        json{{"state", state_json(snapshot.state)}, {"results", std::move(results)}};

    json store{{"version", snapshot::kFormatVersion}, {"sessions", persisted_}};
    const auto text = store.dump(1) + "\n";
    snapshot::write_bytes(*store_path_, std::vector<std::uint8_t>(text.begin(), text.end()));
}

void SessionManager::load_store() {
    std::ifstream in(*store_path_);
    if (!in) throw IoError("cannot open session store " + store_path_->string());
    json store;
    try {
        store = json::parse(in);
        if (store.at("version").get<int>() != snapshot::kFormatVersion) {
            throw IoError("unsupported session store version in " + store_path_->string());
        }
        for (const auto& [id, record] : store.at("sessions").items()) {
            auto state = state_from_json(record.at("state"));
            auto entry = std::make_shared<Entry>();
            // Results are recomputed from the current snapshots rather than trusted from disk.
            entry->snapshot = refresh(state);
            sessions_.emplace(id, entry);
            persisted_[id] = record;
            const auto numeric = std::strtoull(id.c_str() + 1, nullptr, 10);
            next_id_ = std::max<std::uint64_t>(next_id_, numeric + 1);
        }
    } catch (const json::exception& e) {
        throw IoError("corrupt session store " + store_path_->string() + ": " + e.what());
    }
}

}  // namespace exemplar::service
