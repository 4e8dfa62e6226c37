#pragma once

#include <span>
#include <string>
#include <utility>
#include <vector>

#include <nlohmann/json.hpp>

#include "exemplar/browsemap.hpp"
#include "exemplar/corpus.hpp"
#include "exemplar/expertise.hpp"
#include "exemplar/title_standardizer.hpp"

namespace exemplar::query {

/// The transparent faceted query shown to (and edited by) the searcher.
struct Query {
    std::vector<SkillId> skill_facet;
    std::vector<CompanyId> company_facet;
    std::vector<TitleId> title_facet;
    std::vector<IndustryId> industry_facet;
    std::vector<RegionId> location_facet;
    std::string keywords;

    bool facets_empty() const;

    friend bool operator==(const Query&, const Query&) = default;
};

/// Field order in the serialized object is fixed (alphabetical), so equal queries dump identically.
nlohmann::json to_json(const Query& q);
/// Throws InvalidArgument on a missing or mistyped field.
Query query_from_json(const nlohmann::json& j);

/// Returns a description of every violated invariant (duplicates within a facet, ids that do not
/// resolve against the corpus); empty when the query is valid.
std::vector<std::string> validate_query(const Query& q, const Corpus& corpus);

struct QueryBuilderConfig {
    std::size_t n_skills = 10;
    std::size_t n_companies = 10;
    std::size_t n_suggestions = 5;
    bool include_past_titles = false;

    friend bool operator==(const QueryBuilderConfig&, const QueryBuilderConfig&) = default;
};

using ScoredSkill = std::pair<SkillId, double>;

/// f(skill) = Σ_{c ∈ ideal} E1(c, skill); descending, ties by id, zero scores dropped, top n.
/// Throws InvalidArgument when `ideal` is empty.
std::vector<ScoredSkill> rank_skills(std::span<const MemberId> ideal, const expertise::ExpertiseMatrix& e1,
                                     std::size_t n);

/// Current companies of the ideal candidates (profile order) followed by up to n browsemap neighbors,
/// merged across seeds by max similarity.
std::vector<CompanyId> company_facet(std::span<const MemberId> ideal, const Corpus& corpus,
                                     const browsemap::CompanyBrowsemap& map, std::size_t n);

Query build_query(std::span<const MemberId> ideal, const Corpus& corpus, const expertise::ExpertiseMatrix& e1,
                  const browsemap::CompanyBrowsemap& map, const TitleStandardizer& standardizer,
                  const QueryBuilderConfig& config);

struct Suggestions {
    std::vector<ScoredSkill> skills;
    std::vector<browsemap::Neighbor> companies;

    friend bool operator==(const Suggestions&, const Suggestions&) = default;
};

nlohmann::json to_json(const Suggestions& s);

/// Skills ranked by summed latent cosine to every facet skill; companies by max browsemap similarity
/// to any facet company. Facet members are never suggested and non-positive scores are dropped.
Suggestions suggest_entities(const Query& q, const expertise::LatentFactors& factors,
                             const browsemap::CompanyBrowsemap& map, std::size_t k);

}  // namespace exemplar::query
