#pragma once

#include <set>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "exemplar/corpus.hpp"
#include "exemplar/domain.hpp"

namespace exemplar::careersim {

/// One career position reduced to the attributes the similarity model compares.
struct TrajectoryNode {
    CompanyId company_id;
    TitleId title_id;
    IndustryId industry_id;
    int duration_months = 0;
    std::set<std::string> summary_tokens;

    friend bool operator==(const TrajectoryNode&, const TrajectoryNode&) = default;
};

using Trajectory = std::vector<TrajectoryNode>;

enum class Link { Identity, Logistic };

/// Node-level generalized linear model. With the identity link the weights must be convex and the
/// output is the weighted sum itself; the logistic link squashes bias + weighted sum.
struct NodeSimWeights {
    double w_company = 0.3;
    double w_title = 0.3;
    double w_industry = 0.15;
    double w_duration = 0.1;
    double w_text = 0.15;
    double bias = 0.0;
    Link link = Link::Identity;

    void validate() const;

    friend bool operator==(const NodeSimWeights&, const NodeSimWeights&) = default;
};

struct AlignmentConfig {
    double gap_penalty = 0.2;  // subtracted once per unaligned node

    void validate() const;

    friend bool operator==(const AlignmentConfig&, const AlignmentConfig&) = default;
};

/// Chronological (oldest first) nodes; ties on start date ordered by company id. Open positions run to `as_of`.
Trajectory to_trajectory(const MemberProfile& profile, YearMonth as_of);

double node_similarity(const TrajectoryNode& a, const TrajectoryNode& b, const NodeSimWeights& weights);

struct Alignment {
    double score = 0.0;  // normalized by max(|A|, |B|) and clamped to [0,1]
    double raw_score = 0.0;
    std::vector<std::pair<std::size_t, std::size_t>> pairs;  // matched (index in A, index in B)
};

/// Global alignment with a linear gap penalty maximizing Σ node similarity over matched pairs
/// minus gap_penalty per unmatched node.
Alignment align(const Trajectory& a, const Trajectory& b, const NodeSimWeights& weights,
                const AlignmentConfig& config);

double career_sim(const MemberProfile& a, const MemberProfile& b, const NodeSimWeights& weights,
                  const AlignmentConfig& config, YearMonth as_of);

/// Mean career similarity of `result` to each ideal candidate. Throws InvalidArgument on an empty set.
double trajectory_score(const MemberProfile& result, std::span<const MemberProfile* const> ideal,
                        const NodeSimWeights& weights, const AlignmentConfig& config, YearMonth as_of);

}  // namespace exemplar::careersim
