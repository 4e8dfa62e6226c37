#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include <nlohmann/json.hpp>

#include "exemplar/careersim.hpp"
#include "exemplar/corpus.hpp"
#include "exemplar/expertise.hpp"
#include "exemplar/query.hpp"

namespace exemplar::ranking {

/// Personalized-ranker features, each in [0,1].
struct FeatureVector {
    double expertise = 0.0;
    double text = 0.0;
    double geo = 0.0;
    double social = 0.0;

    friend bool operator==(const FeatureVector&, const FeatureVector&) = default;
};

struct RankerConfig {
    double v_expertise = 0.4;
    double v_text = 0.3;
    double v_geo = 0.15;
    double v_social = 0.15;
    double decay = 0.3;  // λ

    void validate() const;

    friend bool operator==(const RankerConfig&, const RankerConfig&) = default;
};

struct RankedResult {
    MemberId member_id;
    double f1 = 0.0;
    double f2 = 0.0;
    double f = 0.0;
    FeatureVector features;

    friend bool operator==(const RankedResult&, const RankedResult&) = default;
};

nlohmann::json to_json(const RankedResult& r);

/// Mean E1 score of the result over the skill facet; 0 for an empty facet.
double feature_expertise(const MemberId& result, const query::Query& q, const expertise::ExpertiseMatrix& e1);

/// Token set of the keywords plus the display names of every facet entity.
std::set<std::string> query_tokens(const query::Query& q, const Corpus& corpus);

/// Mean token Jaccard between the query text and five profile sections: current titles, past titles,
/// current company names, past company names, headline. 0 when the query has no text.
double feature_text(const MemberProfile& result, const query::Query& q, const Corpus& corpus);

double haversine_km(const Coordinates& a, const Coordinates& b);

/// Location facet membership when the facet is set; otherwise proximity to the searcher.
double feature_geo(const MemberProfile& result, const MemberProfile& searcher, const query::Query& q);

/// Mean of connection Jaccard, any shared company, group Jaccard and any shared school.
double feature_social(const MemberProfile& result, const MemberProfile& searcher);

FeatureVector compute_features(const MemberProfile& result, const query::Query& q, const MemberProfile& searcher,
                               const Corpus& corpus, const expertise::ExpertiseMatrix& e1);

/// f1: convex combination of the features.
double personalized_score(const FeatureVector& features, const RankerConfig& config);

/// e^{−λn}: the weight on the trajectory score. Throws InvalidArgument for n < 0.
double trajectory_weight(std::int64_t n, double decay);

/// f = (f1 + e^{−λn} f2) / (1 + e^{−λn}). Throws InvalidArgument for n < 0.
double blend(double f1, double f2, std::int64_t n, double decay);

struct RankingContext {
    const Corpus& corpus;
    const expertise::ExpertiseMatrix& e1;
    RankerConfig ranker;
    careersim::NodeSimWeights node_weights;
    careersim::AlignmentConfig alignment;
};

/// Scores every candidate, sorts by f descending (ties by member id) and keeps the first `limit`.
std::vector<RankedResult> rank_results(std::span<const MemberId> candidates, const query::Query& q,
                                       const MemberId& searcher, std::span<const MemberId> ideal, std::int64_t n,
                                       const RankingContext& context, std::size_t limit);

}  // namespace exemplar::ranking
