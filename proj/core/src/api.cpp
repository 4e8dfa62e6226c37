#include "exemplar/api.hpp"

#include <algorithm>
#include <charconv>

#include "exemplar/serialization.hpp"
#include "exemplar/text.hpp"

namespace exemplar::service {

using nlohmann::json;

namespace {

constexpr std::size_t kTypeaheadLimit = 10;

ApiResponse error(int status, const std::string& message) {
    return {status, json{{"error", message}}};
}

std::vector<std::string> split_path(const std::string& path) {
    std::vector<std::string> parts;
    std::string current;
    for (char c : path) {
        if (c == '/') {
            if (!current.empty()) parts.push_back(std::move(current));
            current.clear();
        } else {
            current.push_back(c);
        }
    }
    if (!current.empty()) parts.push_back(std::move(current));
    return parts;
}

std::size_t count_param(const QueryParams& params, const char* key, std::size_t fallback) {
    auto it = params.find(key);
    if (it == params.end()) return fallback;
    std::size_t value = 0;
    const auto& s = it->second;
    auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), value);
    if (ec != std::errc{} || ptr != s.data() + s.size()) {
        throw InvalidArgument(std::string("query parameter '") + key + "' must be a non-negative integer");
    }
    return value;
}

json entity_list(std::vector<std::pair<std::string, std::string>> matches) {
    std::sort(matches.begin(), matches.end(), [](const auto& a, const auto& b) {
        if (a.second != b.second) return a.second < b.second;
        return a.first < b.first;
    });
    if (matches.size() > kTypeaheadLimit) matches.resize(kTypeaheadLimit);
    json out = json::array();
    for (const auto& [id, name] : matches) out.push_back(json{{"id", id}, {"name", name}});
    return out;
}

}  // namespace

ApiResponse Api::handle(const std::string& method, const std::string& path, const std::string& body,
                        const QueryParams& params) const {
    const auto parts = split_path(path);
    try {
        json payload;
        if (method == "POST") {
            try {
                payload = body.empty() ? json::object() : json::parse(body);
            } catch (const json::parse_error& e) {
                return error(400, std::string("malformed JSON body: ") + e.what());
            }
        }
        if (parts.size() < 2 || parts[0] != "api") return error(404, "no such endpoint");
        if (parts[1] == "sessions") {
            if (parts.size() == 2 && method == "POST") return create_session(payload);
            if (parts.size() == 3 && method == "GET") return get_session(parts[2], params);
            if (parts.size() == 4 && parts[3] == "refine" && method == "POST") return refine(parts[2], payload);
        } else if (parts[1] == "members" && parts.size() == 3 && method == "GET") {
            return get_member(parts[2]);
        } else if (parts[1] == "entities" && parts.size() == 3 && method == "GET") {
            if (parts[2] == "skills") return skills(params);
            if (parts[2] == "companies") return companies(params);
        }
        return error(404, "no such endpoint");
    } catch (const InvalidQuery& e) {
        auto r = error(422, e.what());
        r.body["problems"] = e.problems();
        return r;
    } catch (const NotFound& e) {
        return error(404, e.what());
    } catch (const InvalidArgument& e) {
        return error(400, e.what());
    } catch (const json::exception& e) {
        return error(400, e.what());
    } catch (const std::exception& e) {
        return error(500, e.what());
    }
}

ApiResponse Api::create_session(const json& body) const {
    if (!body.is_object() || !body.contains("searcher_id") || !body.contains("ideal_candidate_ids")) {
        return error(400, "expected {searcher_id, ideal_candidate_ids[]}");
    }
    const auto searcher = body.at("searcher_id").get<std::string>();
    const auto ideal = body.at("ideal_candidate_ids").get<std::vector<std::string>>();
    const auto snapshot = sessions_.start_session(searcher, ideal);
    const auto& cfg = sessions_.engine().config();
    return {201, to_json(snapshot, cfg.ranker.decay, 0, cfg.service.page_size)};
}

ApiResponse Api::refine(const std::string& id, const json& body) const {
    if (!body.is_object() || !body.contains("query")) return error(400, "expected {query}");
    query::Query edited;
    try {
        edited = query::query_from_json(body.at("query"));
    } catch (const InvalidArgument& e) {
        throw InvalidQuery({e.what()});
    }
    const auto snapshot = sessions_.refine(id, edited);
    const auto& cfg = sessions_.engine().config();
    return {200, to_json(snapshot, cfg.ranker.decay, 0, cfg.service.page_size)};
}

ApiResponse Api::get_session(const std::string& id, const QueryParams& params) const {
    const auto& cfg = sessions_.engine().config();
    const auto offset = count_param(params, "offset", 0);
    const auto limit = count_param(params, "limit", cfg.service.page_size);
    return {200, to_json(sessions_.get_session(id), cfg.ranker.decay, offset, limit)};
}

ApiResponse Api::get_member(const std::string& id) const {
    const auto& corpus = sessions_.engine().corpus();
    const auto& profile = corpus.profile(id);
    json j = profile;
    for (auto& pos : j["positions"]) {
        pos["company_name"] = corpus.company_name(pos.at("company_id").get<std::string>());
        pos["title_name"] = corpus.titles.name_of(pos.at("title_id").get<std::string>());
    }
    json skills = json::array();
    for (const auto& s : profile.skill_ids) skills.push_back(json{{"id", s}, {"name", corpus.taxonomy.name_of(s)}});
    j["skills"] = std::move(skills);
    return {200, std::move(j)};
}

ApiResponse Api::skills(const QueryParams& params) const {
    const auto& taxonomy = sessions_.engine().corpus().taxonomy;
    auto it = params.find("prefix");
    const std::string prefix = it == params.end() ? std::string() : it->second;
    std::vector<std::pair<std::string, std::string>> matches;
    for (const auto& [id, entry] : taxonomy.skills) {
        bool hit = text::starts_with_ci(entry.name, prefix);
        for (const auto& alias : entry.aliases) hit = hit || text::starts_with_ci(alias, prefix);
        if (hit) matches.emplace_back(id, entry.name);
    }
    return {200, entity_list(std::move(matches))};
}

ApiResponse Api::companies(const QueryParams& params) const {
    const auto& companies = sessions_.engine().corpus().companies;
    auto it = params.find("prefix");
    const std::string prefix = it == params.end() ? std::string() : it->second;
    std::vector<std::pair<std::string, std::string>> matches;
    for (const auto& [id, name] : companies) {
        if (text::starts_with_ci(name, prefix) || text::starts_with_ci(id, prefix)) matches.emplace_back(id, name);
    }
    return {200, entity_list(std::move(matches))};
}

}  // namespace exemplar::service
