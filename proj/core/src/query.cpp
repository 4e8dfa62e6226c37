#include "exemplar/query.hpp"

#include <algorithm>
#include <map>
#include <set>

#include "exemplar/error.hpp"

namespace exemplar::query {

using nlohmann::json;

bool Query::facets_empty() const {
    return skill_facet.empty() && company_facet.empty() && title_facet.empty() && industry_facet.empty() &&
           location_facet.empty();
}

json to_json(const Query& q) {
    return json{{"company_facet", q.company_facet}, {"industry_facet", q.industry_facet},
                {"keywords", q.keywords},           {"location_facet", q.location_facet},
                {"skill_facet", q.skill_facet},     {"title_facet", q.title_facet}};
}

namespace {

std::vector<std::string> string_list(const json& j, const char* key) {
    auto it = j.find(key);
    if (it == j.end() || it->is_null()) return {};
    if (!it->is_array()) throw InvalidArgument(std::string("field '") + key + "' must be an array");
    std::vector<std::string> out;
    for (const auto& v : *it) {
        if (!v.is_string()) throw InvalidArgument(std::string("field '") + key + "' must hold strings");
        out.push_back(v.get<std::string>());
    }
    return out;
}

template <typename Pred>
void check_facet(const char* name, const std::vector<std::string>& facet, Pred&& known,
                 std::vector<std::string>& problems) {
    std::set<std::string> seen;
    for (const auto& id : facet) {
        if (!seen.insert(id).second) problems.push_back(std::string(name) + ": duplicate " + id);
        if (!known(id)) problems.push_back(std::string(name) + ": unknown " + id);
    }
}

template <typename T>
void push_unique(std::vector<T>& out, const T& value) {
    if (std::find(out.begin(), out.end(), value) == out.end()) out.push_back(value);
}

}  // namespace

Query query_from_json(const json& j) {
    if (!j.is_object()) throw InvalidArgument("query must be a JSON object");
    Query q;
    q.skill_facet = string_list(j, "skill_facet");
    q.company_facet = string_list(j, "company_facet");
    q.title_facet = string_list(j, "title_facet");
    q.industry_facet = string_list(j, "industry_facet");
    q.location_facet = string_list(j, "location_facet");
    auto kw = j.find("keywords");
    if (kw != j.end() && !kw->is_null()) {
        if (!kw->is_string()) throw InvalidArgument("field 'keywords' must be a string");
        q.keywords = kw->get<std::string>();
    }
    return q;
}

std::vector<std::string> validate_query(const Query& q, const Corpus& corpus) {
    std::vector<std::string> problems;
    const auto industries = corpus.industry_ids();
    const auto regions = corpus.region_ids();
    check_facet("skill_facet", q.skill_facet, [&](const auto& id) { return corpus.taxonomy.contains(id); },
                problems);
    check_facet("company_facet", q.company_facet, [&](const auto& id) { return corpus.companies.contains(id); },
                problems);
    check_facet("title_facet", q.title_facet, [&](const auto& id) { return corpus.titles.contains(id); },
                problems);
    check_facet("industry_facet", q.industry_facet, [&](const auto& id) { return industries.contains(id); },
                problems);
    check_facet("location_facet", q.location_facet, [&](const auto& id) { return regions.contains(id); },
                problems);
    return problems;
}

std::vector<ScoredSkill> rank_skills(std::span<const MemberId> ideal, const expertise::ExpertiseMatrix& e1,
                                     std::size_t n) {
    if (ideal.empty()) throw InvalidArgument("empty ideal candidate set");
    std::map<SkillId, double> totals;
    for (const auto& member : ideal) {
        if (const auto* row = e1.row(member)) {
            for (const auto& [skill, score] : *row) totals[skill] += score;
        }
    }
    std::vector<ScoredSkill> ranked;
    for (const auto& [skill, total] : totals) {
        if (total > 0.0) ranked.emplace_back(skill, total);
    }
    std::stable_sort(ranked.begin(), ranked.end(), [](const auto& a, const auto& b) { return a.second > b.second; });
    if (ranked.size() > n) ranked.resize(n);
    return ranked;
}

std::vector<CompanyId> company_facet(std::span<const MemberId> ideal, const Corpus& corpus,
                                     const browsemap::CompanyBrowsemap& map, std::size_t n) {
    if (ideal.empty()) throw InvalidArgument("empty ideal candidate set");
    std::vector<CompanyId> facet;
    for (const auto& member : ideal) {
        for (const auto* pos : corpus.profile(member).current_positions()) push_unique(facet, pos->company_id);
    }
    const std::set<CompanyId> current(facet.begin(), facet.end());

    std::map<CompanyId, double> expanded;
    for (const auto& seed : current) {
        auto it = map.neighbors.find(seed);
        if (it == map.neighbors.end()) continue;
        for (const auto& [company, sim] : it->second) {
            if (current.contains(company)) continue;
            auto& best = expanded[company];
            best = std::max(best, sim);
        }
    }
    std::vector<browsemap::Neighbor> ranked(expanded.begin(), expanded.end());
    std::stable_sort(ranked.begin(), ranked.end(), [](const auto& a, const auto& b) { return a.second > b.second; });
    for (std::size_t i = 0; i < ranked.size() && i < n; ++i) facet.push_back(ranked[i].first);
    return facet;
}

Query build_query(std::span<const MemberId> ideal, const Corpus& corpus, const expertise::ExpertiseMatrix& e1,
                  const browsemap::CompanyBrowsemap& map, const TitleStandardizer& standardizer,
                  const QueryBuilderConfig& config) {
    if (ideal.empty()) throw InvalidArgument("empty ideal candidate set");
    for (const auto& member : ideal) corpus.profile(member);

    Query q;
    for (const auto& [skill, score] : rank_skills(ideal, e1, config.n_skills)) q.skill_facet.push_back(skill);
    q.company_facet = company_facet(ideal, corpus, map, config.n_companies);

    auto add_title = [&](const Position& pos) {
        TitleId id = pos.title_id;
        if (id.empty()) id = standardizer.standardize(pos.raw_title).value_or(TitleId{});
        if (!id.empty() && corpus.titles.contains(id)) push_unique(q.title_facet, id);
    };
    for (const auto& member : ideal) {
        const auto& profile = corpus.profile(member);
        if (config.include_past_titles) {
            for (const auto& pos : profile.positions) add_title(pos);
        } else {
            for (const auto* pos : profile.current_positions()) add_title(*pos);
        }
    }
    for (const auto& member : ideal) {
        const auto& industry = corpus.profile(member).industry_id;
        if (!industry.empty()) push_unique(q.industry_facet, industry);
    }
    return q;
}

json to_json(const Suggestions& s) {
    json skills = json::array();
    for (const auto& [id, score] : s.skills) skills.push_back(json{{"id", id}, {"score", score}});
    json companies = json::array();
    for (const auto& [id, score] : s.companies) companies.push_back(json{{"id", id}, {"score", score}});
    return json{{"companies", std::move(companies)}, {"skills", std::move(skills)}};
}

Suggestions suggest_entities(const Query& q, const expertise::LatentFactors& factors,
                             const browsemap::CompanyBrowsemap& map, std::size_t k) {
    Suggestions out;

    const std::set<SkillId> facet_skills(q.skill_facet.begin(), q.skill_facet.end());
    std::vector<const std::vector<double>*> anchors;
    for (const auto& s : q.skill_facet) {
        auto it = factors.skill_vectors.find(s);
        if (it != factors.skill_vectors.end()) anchors.push_back(&it->second);
    }
    if (!anchors.empty()) {
        for (const auto& [id, v] : factors.skill_vectors) {
            if (facet_skills.contains(id)) continue;
            double total = 0.0;
            for (const auto* anchor : anchors) total += expertise::cosine(*anchor, v);
            if (total > 0.0) out.skills.emplace_back(id, total);
        }
        std::stable_sort(out.skills.begin(), out.skills.end(),
                         [](const auto& a, const auto& b) { return a.second > b.second; });
        if (out.skills.size() > k) out.skills.resize(k);
    }

    const std::set<CompanyId> facet_companies(q.company_facet.begin(), q.company_facet.end());
    std::map<CompanyId, double> best;
    for (const auto& seed : q.company_facet) {
        auto it = map.neighbors.find(seed);
        if (it == map.neighbors.end()) continue;
        for (const auto& [company, sim] : it->second) {
            if (facet_companies.contains(company) || sim <= 0.0) continue;
            best[company] = std::max(best[company], sim);
        }
    }
    out.companies.assign(best.begin(), best.end());
    std::stable_sort(out.companies.begin(), out.companies.end(),
                     [](const auto& a, const auto& b) { return a.second > b.second; });
    if (out.companies.size() > k) out.companies.resize(k);
    return out;
}

}  // namespace exemplar::query
