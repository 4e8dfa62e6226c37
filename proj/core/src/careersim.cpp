#include "exemplar/careersim.hpp"

#include <algorithm>
#include <cmath>

#include "exemplar/error.hpp"
#include "exemplar/text.hpp"

namespace exemplar::careersim {

void NodeSimWeights::validate() const {
    const double weights[] = {w_company, w_title, w_industry, w_duration, w_text};
    if (link == Link::Logistic) return;
    double sum = 0.0;
    for (double w : weights) {
        if (w < 0.0) throw InvalidArgument("node similarity weights must be non-negative");
        sum += w;
    }
    if (std::abs(sum - 1.0) > 1e-9) throw InvalidArgument("node similarity weights must sum to 1");
    if (bias != 0.0) throw InvalidArgument("identity link requires zero bias");
}

void AlignmentConfig::validate() const {
    if (!(gap_penalty >= 0.0)) throw InvalidArgument("gap penalty must be >= 0");
}

Trajectory to_trajectory(const MemberProfile& profile, YearMonth as_of) {
    std::vector<const Position*> ordered;
    for (const auto& pos : profile.positions) ordered.push_back(&pos);
    std::stable_sort(ordered.begin(), ordered.end(), [](const Position* x, const Position* y) {
        if (x->start != y->start) return x->start < y->start;
        return x->company_id < y->company_id;
    });
    Trajectory nodes;
    nodes.reserve(ordered.size());
    for (const auto* pos : ordered) {
        TrajectoryNode node;
        node.company_id = pos->company_id;
        node.title_id = pos->title_id;
        node.industry_id = pos->industry_id;
        node.duration_months = std::max(0, months_between(pos->start, pos->end.value_or(as_of)));
        node.summary_tokens = text::token_set(pos->summary);
        nodes.push_back(std::move(node));
    }
    return nodes;
}

double node_similarity(const TrajectoryNode& a, const TrajectoryNode& b, const NodeSimWeights& w) {
    const double da = a.duration_months;
    const double db = b.duration_months;
    const double duration = 1.0 - std::abs(da - db) / std::max({da, db, 1.0});
    const double linear = w.bias + w.w_company * (a.company_id == b.company_id ? 1.0 : 0.0) +
                          w.w_title * (a.title_id == b.title_id ? 1.0 : 0.0) +
                          w.w_industry * (a.industry_id == b.industry_id ? 1.0 : 0.0) + w.w_duration * duration +
                          w.w_text * text::jaccard(a.summary_tokens, b.summary_tokens, 1.0);
    if (w.link == Link::Logistic) return 1.0 / (1.0 + std::exp(-linear));
    // Dividing by the (unit) weight total, summed in the same order, makes identical nodes exactly 1.
    const double total = w.bias + w.w_company + w.w_title + w.w_industry + w.w_duration + w.w_text;
    return total > 0.0 ? std::clamp(linear / total, 0.0, 1.0) : 0.0;
}

Alignment align(const Trajectory& a, const Trajectory& b, const NodeSimWeights& weights,
                const AlignmentConfig& config) {
    Alignment result;
    const std::size_t n = a.size();
    const std::size_t m = b.size();
    if (n == 0 && m == 0) return result;

    const double g = config.gap_penalty;
    const std::size_t cols = m + 1;
    std::vector<double> dp((n + 1) * cols, 0.0);
    auto at = [&](std::size_t i, std::size_t j) -> double& { return dp[i * cols + j]; };
    for (std::size_t i = 1; i <= n; ++i) at(i, 0) = at(i - 1, 0) - g;
    for (std::size_t j = 1; j <= m; ++j) at(0, j) = at(0, j - 1) - g;
    for (std::size_t i = 1; i <= n; ++i) {
        for (std::size_t j = 1; j <= m; ++j) {
            const double match = at(i - 1, j - 1) + node_similarity(a[i - 1], b[j - 1], weights);
            const double skip_a = at(i - 1, j) - g;
            const double skip_b = at(i, j - 1) - g;
            at(i, j) = std::max({match, skip_a, skip_b});
        }
    }

    // Traceback prefers the diagonal, then a gap in B, then a gap in A.
    std::size_t i = n;
    std::size_t j = m;
    while (i > 0 && j > 0) {
        const double here = at(i, j);
        if (here == at(i - 1, j - 1) + node_similarity(a[i - 1], b[j - 1], weights)) {
            result.pairs.emplace_back(i - 1, j - 1);
            --i;
            --j;
        } else if (here == at(i - 1, j) - g) {
            --i;
        } else {
            --j;
        }
    }
    std::reverse(result.pairs.begin(), result.pairs.end());

    result.raw_score = at(n, m);
    result.score = std::clamp(result.raw_score / static_cast<double>(std::max(n, m)), 0.0, 1.0);
    return result;
}

double career_sim(const MemberProfile& a, const MemberProfile& b, const NodeSimWeights& weights,
                  const AlignmentConfig& config, YearMonth as_of) {
    return align(to_trajectory(a, as_of), to_trajectory(b, as_of), weights, config).score;
}

double trajectory_score(const MemberProfile& result, std::span<const MemberProfile* const> ideal,
                        const NodeSimWeights& weights, const AlignmentConfig& config, YearMonth as_of) {
    if (ideal.empty()) throw InvalidArgument("empty ideal candidate set");
    const auto trajectory = to_trajectory(result, as_of);
    double total = 0.0;
    for (const auto* candidate : ideal) {
        total += align(trajectory, to_trajectory(*candidate, as_of), weights, config).score;
    }
    return total / static_cast<double>(ideal.size());
}

}  // namespace exemplar::careersim
