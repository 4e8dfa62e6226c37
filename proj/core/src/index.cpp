#include "exemplar/index.hpp"

#include <algorithm>
#include <iterator>
#include <optional>

#include "exemplar/error.hpp"
#include "exemplar/snapshot.hpp"
#include "exemplar/text.hpp"

namespace exemplar::index {

using nlohmann::json;

namespace {

const Postings kEmpty;

const char* facet_name(FacetType t) {
    switch (t) {
        case FacetType::Skill: return "skill";
        case FacetType::Company: return "company";
        case FacetType::Title: return "title";
        case FacetType::Industry: return "industry";
        case FacetType::Region: return "region";
    }
    return "?";
}

FacetType facet_from_name(const std::string& name) {
    for (auto t : {FacetType::Skill, FacetType::Company, FacetType::Title, FacetType::Industry, FacetType::Region}) {
        if (name == facet_name(t)) return t;
    }
    throw InvalidArgument("unknown facet type " + name);
}

Postings intersect(const Postings& a, const Postings& b) {
    Postings out;
    std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
    return out;
}

Postings facet_union(const InvertedIndex& index, FacetType type, const std::vector<std::string>& ids) {
    Postings acc;
    for (const auto& id : ids) {
        const auto& list = index.lookup(type, id);
        Postings merged;
        std::set_union(acc.begin(), acc.end(), list.begin(), list.end(), std::back_inserter(merged));
        acc = std::move(merged);
    }
    return acc;
}

}  // namespace

const Postings& InvertedIndex::lookup(FacetType type, const std::string& id) const {
    auto it = postings.find({type, id});
    return it == postings.end() ? kEmpty : it->second;
}

const Postings& InvertedIndex::lookup_token(const std::string& token) const {
    auto it = text_postings.find(token);
    return it == text_postings.end() ? kEmpty : it->second;
}

InvertedIndex build_index(const Corpus& corpus, const expertise::ExpertiseMatrix& e1) {
    // Profiles iterate in member-id order, so appending keeps every list sorted; duplicates are
    // suppressed by checking the tail.
    InvertedIndex index;
    index.corpus_fingerprint = corpus_fingerprint(corpus);
    auto add = [](Postings& list, const MemberId& id) {
        if (list.empty() || list.back() != id) list.push_back(id);
    };
    for (const auto& [id, p] : corpus.profiles) {
        if (const auto* row = e1.row(id)) {
            for (const auto& [skill, score] : *row) add(index.postings[{FacetType::Skill, skill}], id);
        }
        std::set<std::string> tokens = text::token_set(p.headline);
        for (const auto& pos : p.positions) {
            add(index.postings[{FacetType::Company, pos.company_id}], id);
            if (!pos.title_id.empty()) add(index.postings[{FacetType::Title, pos.title_id}], id);
            if (!pos.industry_id.empty()) add(index.postings[{FacetType::Industry, pos.industry_id}], id);
            for (auto& t : text::tokenize(pos.summary)) tokens.insert(std::move(t));
        }
        if (!p.industry_id.empty()) add(index.postings[{FacetType::Industry, p.industry_id}], id);
        if (!p.location.region_id.empty()) add(index.postings[{FacetType::Region, p.location.region_id}], id);
        for (const auto& t : tokens) add(index.text_postings[t], id);
    }
    return index;
}

std::vector<MemberId> retrieve(const InvertedIndex& index, const query::Query& q, const std::set<MemberId>& exclude) {
    const auto tokens = text::token_set(q.keywords);
    if (q.facets_empty() && tokens.empty()) return {};

    std::optional<Postings> result;
    auto narrow = [&](Postings list) {
        result = result ? intersect(*result, list) : std::move(list);
    };
    const std::pair<FacetType, const std::vector<std::string>*> facets[] = {
        {FacetType::Skill, &q.skill_facet},       {FacetType::Company, &q.company_facet},
        {FacetType::Title, &q.title_facet},       {FacetType::Industry, &q.industry_facet},
        {FacetType::Region, &q.location_facet},
    };
    for (const auto& [type, ids] : facets) {
        if (!ids->empty()) narrow(facet_union(index, type, *ids));
    }
    for (const auto& t : tokens) narrow(index.lookup_token(t));

    Postings out;
    for (auto& id : *result) {
        if (!exclude.contains(id)) out.push_back(std::move(id));
    }
    return out;
}

json to_json(const InvertedIndex& index) {
    json postings = json::array();
    for (const auto& [key, list] : index.postings) {
        postings.push_back(json{{"facet", facet_name(key.first)}, {"id", key.second}, {"members", list}});
    }
    return json{{"postings", std::move(postings)},
                {"text_postings", index.text_postings},
                {"corpus_fingerprint", index.corpus_fingerprint}};
}

InvertedIndex from_json(const json& j) {
    InvertedIndex index;
    for (const auto& entry : j.at("postings")) {
        index.postings[{facet_from_name(entry.at("facet").get<std::string>()), entry.at("id").get<std::string>()}] =
            entry.at("members").get<Postings>();
    }
    index.text_postings = j.at("text_postings").get<std::map<std::string, Postings>>();
    index.corpus_fingerprint = j.at("corpus_fingerprint").get<std::uint64_t>();
    return index;
}

void save(const InvertedIndex& index, const std::filesystem::path& path) {
    snapshot::write(path, "index", to_json(index));
}

InvertedIndex read(const std::filesystem::path& path) {
    try {
        return from_json(snapshot::read(path, "index"));
    } catch (const json::exception& e) {
        throw IoError("corrupt index snapshot " + path.string() + ": " + e.what());
    }
}

}  // namespace exemplar::index
