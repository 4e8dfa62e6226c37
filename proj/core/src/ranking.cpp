#include "exemplar/ranking.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "exemplar/error.hpp"
#include "exemplar/text.hpp"

namespace exemplar::ranking {

using nlohmann::json;

void RankerConfig::validate() const {
    const double weights[] = {v_expertise, v_text, v_geo, v_social};
    double sum = 0.0;
    for (double v : weights) {
        if (v < 0.0) throw InvalidArgument("ranker weights must be non-negative");
        sum += v;
    }
    if (std::abs(sum - 1.0) > 1e-9) throw InvalidArgument("ranker weights must sum to 1");
    if (!(decay >= 0.0)) throw InvalidArgument("decay rate must be >= 0");
}

json to_json(const RankedResult& r) {
    return json{{"member_id", r.member_id},
                {"f1", r.f1},
                {"f2", r.f2},
                {"f", r.f},
                {"features",
                 json{{"expertise", r.features.expertise},
                      {"text", r.features.text},
                      {"geo", r.features.geo},
                      {"social", r.features.social}}}};
}

double feature_expertise(const MemberId& result, const query::Query& q, const expertise::ExpertiseMatrix& e1) {
    if (q.skill_facet.empty()) return 0.0;
    double total = 0.0;
    for (const auto& skill : q.skill_facet) total += e1.score(result, skill);
    return std::clamp(total / static_cast<double>(q.skill_facet.size()), 0.0, 1.0);
}

std::set<std::string> query_tokens(const query::Query& q, const Corpus& corpus) {
    std::set<std::string> tokens = text::token_set(q.keywords);
    auto add = [&](const std::string& name) {
        for (auto& t : text::tokenize(name)) tokens.insert(std::move(t));
    };
    for (const auto& s : q.skill_facet) add(corpus.taxonomy.name_of(s));
    for (const auto& c : q.company_facet) add(corpus.company_name(c));
    for (const auto& t : q.title_facet) add(corpus.titles.name_of(t));
    for (const auto& i : q.industry_facet) add(i);
    for (const auto& r : q.location_facet) add(r);
    return tokens;
}

double feature_text(const MemberProfile& result, const query::Query& q, const Corpus& corpus) {
    const auto tokens = query_tokens(q, corpus);
    if (tokens.empty()) return 0.0;

    std::set<std::string> sections[5];
    auto add = [](std::set<std::string>& section, const std::string& text) {
        for (auto& t : text::tokenize(text)) section.insert(std::move(t));
    };
    for (const auto* pos : result.current_positions()) {
        add(sections[0], pos->raw_title);
        add(sections[2], corpus.company_name(pos->company_id));
    }
    for (const auto* pos : result.past_positions()) {
        add(sections[1], pos->raw_title);
        add(sections[3], corpus.company_name(pos->company_id));
    }
    add(sections[4], result.headline);

    double total = 0.0;
    for (const auto& section : sections) total += text::jaccard(tokens, section, 0.0);
    return total / 5.0;
}

double haversine_km(const Coordinates& a, const Coordinates& b) {
    constexpr double kEarthRadiusKm = 6371.0;
    constexpr double kRad = std::numbers::pi / 180.0;
    const double dlat = (b.latitude - a.latitude) * kRad;
    const double dlon = (b.longitude - a.longitude) * kRad;
    const double h = std::sin(dlat / 2) * std::sin(dlat / 2) +
                     std::cos(a.latitude * kRad) * std::cos(b.latitude * kRad) * std::sin(dlon / 2) * std::sin(dlon / 2);
    return 2.0 * kEarthRadiusKm * std::asin(std::min(1.0, std::sqrt(h)));
}

double feature_geo(const MemberProfile& result, const MemberProfile& searcher, const query::Query& q) {
    const auto& region = result.location.region_id;
    if (!q.location_facet.empty()) {
        return std::find(q.location_facet.begin(), q.location_facet.end(), region) != q.location_facet.end() ? 1.0
                                                                                                             : 0.0;
    }
    if (!region.empty() && region == searcher.location.region_id) return 1.0;
    if (result.location.coordinates && searcher.location.coordinates) {
        return std::exp(-haversine_km(*result.location.coordinates, *searcher.location.coordinates) / 500.0);
    }
    return 0.0;
}

namespace {

std::set<CompanyId> companies_of(const MemberProfile& p) {
    std::set<CompanyId> out;
    for (const auto& pos : p.positions) out.insert(pos.company_id);
    return out;
}

template <typename Set>
bool intersects(const Set& a, const Set& b) {
    for (const auto& x : a) {
        if (b.contains(x)) return true;
    }
    return false;
}

}  // namespace

double feature_social(const MemberProfile& result, const MemberProfile& searcher) {
    const double connections = text::jaccard(result.connection_ids, searcher.connection_ids, 0.0);
    const double company = intersects(companies_of(result), companies_of(searcher)) ? 1.0 : 0.0;
    const double groups = text::jaccard(result.group_ids, searcher.group_ids, 0.0);
    const double school = intersects(result.school_ids, searcher.school_ids) ? 1.0 : 0.0;
    return (connections + company + groups + school) / 4.0;
}

FeatureVector compute_features(const MemberProfile& result, const query::Query& q, const MemberProfile& searcher,
                               const Corpus& corpus, const expertise::ExpertiseMatrix& e1) {
    return FeatureVector{feature_expertise(result.member_id, q, e1), feature_text(result, q, corpus),
                         feature_geo(result, searcher, q), feature_social(result, searcher)};
}

double personalized_score(const FeatureVector& x, const RankerConfig& c) {
    const double f1 = c.v_expertise * x.expertise + c.v_text * x.text + c.v_geo * x.geo + c.v_social * x.social;
    return std::clamp(f1, 0.0, 1.0);
}

double trajectory_weight(std::int64_t n, double decay) {
    if (n < 0) throw InvalidArgument("edit count must be non-negative");
    return std::exp(-decay * static_cast<double>(n));
}

double blend(double f1, double f2, std::int64_t n, double decay) {
    const double w = trajectory_weight(n, decay);
    return (f1 + w * f2) / (1.0 + w);
}

std::vector<RankedResult> rank_results(std::span<const MemberId> candidates, const query::Query& q,
                                       const MemberId& searcher, std::span<const MemberId> ideal, std::int64_t n,
                                       const RankingContext& context, std::size_t limit) {
    if (ideal.empty()) throw InvalidArgument("empty ideal candidate set");
    if (n < 0) throw InvalidArgument("edit count must be non-negative");
    const auto& corpus = context.corpus;
    const auto& searcher_profile = corpus.profile(searcher);

    std::vector<careersim::Trajectory> ideal_trajectories;
    for (const auto& id : ideal) ideal_trajectories.push_back(careersim::to_trajectory(corpus.profile(id), corpus.as_of));

    std::vector<RankedResult> results;
    results.reserve(candidates.size());
    for (const auto& id : candidates) {
        const auto& profile = corpus.profile(id);
        RankedResult r;
        r.member_id = id;
        r.features = compute_features(profile, q, searcher_profile, corpus, context.e1);
        r.f1 = personalized_score(r.features, context.ranker);
        const auto trajectory = careersim::to_trajectory(profile, corpus.as_of);
        double total = 0.0;
        for (const auto& other : ideal_trajectories) {
            total += careersim::align(trajectory, other, context.node_weights, context.alignment).score;
        }
        r.f2 = total / static_cast<double>(ideal_trajectories.size());
        r.f = blend(r.f1, r.f2, n, context.ranker.decay);
        results.push_back(std::move(r));
    }
    std::sort(results.begin(), results.end(), [](const RankedResult& a, const RankedResult& b) {
        if (a.f != b.f) return a.f > b.f;
        return a.member_id < b.member_id;
    });
    if (results.size() > limit) results.resize(limit);
    return results;
}

}  // namespace exemplar::ranking
