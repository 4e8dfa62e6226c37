#include <gtest/gtest.h>

#include <algorithm>
#include <random>

#include "exemplar/error.hpp"
#include "exemplar/careersim.hpp"
#include "exemplar/synthetic.hpp"
#include "fixtures.hpp"
#include "oracles.hpp"

namespace exemplar::careersim {
namespace {

using testing::member;
using testing::position;

const YearMonth kAsOf = YearMonth::parse("2016-01");

TrajectoryNode node(std::string company, std::string title, std::string industry, int months,
                    std::set<std::string> tokens) {
    return TrajectoryNode{std::move(company), std::move(title), std::move(industry), months, std::move(tokens)};
}

std::vector<TrajectoryNode> alphabet() {
    return {node("linkedin", "engineer", "internet", 24, {"search", "ranking"}),
            node("google", "engineer", "internet", 36, {"search", "ads"}),
            node("acme", "sales", "retail", 12, {"deals"})};
}

TEST(Trajectory, ChronologicalWithOpenDuration) {
    EXPECT_TRUE(to_trajectory(member("a", {}), kAsOf).empty());
    const auto m = member("a", {}, {position("c3", "lead", "2014-01"), position("c2", "dev", "2011-01", "2013-12"),
                                    position("c1", "intern", "2010-06", "2010-12")});
    const auto t = to_trajectory(m, kAsOf);
    ASSERT_EQ(t.size(), 3u);
    EXPECT_EQ(t[0].company_id, "c1");
    EXPECT_EQ(t[1].company_id, "c2");
    EXPECT_EQ(t[2].company_id, "c3");
    EXPECT_EQ(t[2].duration_months, 24);
    EXPECT_EQ(t[0].duration_months, 6);
}

TEST(Trajectory, StartTiesOrderedByCompany) {
    const auto m = member("a", {}, {position("zeta", "x", "2014-01"), position("alpha", "y", "2014-01")});
    const auto t = to_trajectory(m, kAsOf);
    EXPECT_EQ(t[0].company_id, "alpha");
}

TEST(NodeSimilarity, IdenticalIsOne) {
    for (const auto& n : alphabet()) EXPECT_EQ(node_similarity(n, n, NodeSimWeights{}), 1.0);
}

TEST(NodeSimilarity, NothingSharedZeroDurations) {
    const auto a = node("a", "t1", "i1", 0, {"x"});
    const auto b = node("b", "t2", "i2", 0, {"y"});
    EXPECT_NEAR(node_similarity(a, b, NodeSimWeights{}), 0.1, 1e-15);
}

TEST(NodeSimilarity, SymmetricAndBounded) {
    std::mt19937_64 rng(2);
    const auto alpha = alphabet();
    for (int i = 0; i < 200; ++i) {
        auto a = alpha[rng() % 3];
        auto b = alpha[rng() % 3];
        a.duration_months = static_cast<int>(rng() % 60);
        b.duration_months = static_cast<int>(rng() % 60);
        const double ab = node_similarity(a, b, NodeSimWeights{});
        EXPECT_EQ(ab, node_similarity(b, a, NodeSimWeights{}));
        EXPECT_GE(ab, 0.0);
        EXPECT_LE(ab, 1.0);
    }
}

TEST(NodeSimilarity, LogisticLink) {
    NodeSimWeights w;
    w.link = Link::Logistic;
    w.bias = -0.5;
    const auto n = alphabet()[0];
    EXPECT_NEAR(node_similarity(n, n, w), 1.0 / (1.0 + std::exp(-0.5)), 1e-15);
    EXPECT_NO_THROW(w.validate());
    NodeSimWeights bad;
    bad.w_company = 0.5;
    EXPECT_THROW(bad.validate(), InvalidArgument);
}

TEST(Align, SelfAlignmentIsOne) {
    const auto alpha = alphabet();
    const Trajectory t{alpha[0], alpha[2], alpha[1], alpha[0]};
    const auto r = align(t, t, NodeSimWeights{}, AlignmentConfig{});
    EXPECT_EQ(r.score, 1.0);
    EXPECT_EQ(r.pairs.size(), 4u);
    for (std::size_t i = 0; i < 4; ++i) EXPECT_EQ(r.pairs[i], std::make_pair(i, i));
}

TEST(Align, EmptyCases) {
    const Trajectory t{alphabet()[0], alphabet()[1]};
    EXPECT_EQ(align({}, {}, NodeSimWeights{}, AlignmentConfig{}).score, 0.0);
    EXPECT_EQ(align(t, {}, NodeSimWeights{}, AlignmentConfig{}).score, 0.0);
    EXPECT_EQ(align({}, t, NodeSimWeights{}, AlignmentConfig{}).score, 0.0);
}

void all_sequences(const std::vector<TrajectoryNode>& alpha, std::size_t max_len, Trajectory& cur,
                   std::vector<Trajectory>& out) {
    out.push_back(cur);
    if (cur.size() == max_len) return;
    for (const auto& n : alpha) {
        cur.push_back(n);
        all_sequences(alpha, max_len, cur, out);
        cur.pop_back();
    }
}

TEST(Align, MatchesExhaustiveEnumeration) {
    std::vector<Trajectory> seqs;
    Trajectory cur;
    all_sequences(alphabet(), 3, cur, seqs);
    for (const auto& a : seqs) {
        for (const auto& b : seqs) {
            const auto r = align(a, b, NodeSimWeights{}, AlignmentConfig{});
            ASSERT_NEAR(r.score, oracle::exhaustive_alignment(a, b, NodeSimWeights{}, 0.2), 1e-12);
            // The reported pairs reproduce the raw score.
            double raw = 0.0;
            for (const auto& [i, j] : r.pairs) raw += node_similarity(a[i], b[j], NodeSimWeights{});
            raw -= 0.2 * static_cast<double>(a.size() + b.size() - 2 * r.pairs.size());
            ASSERT_NEAR(raw, r.raw_score, 1e-12);
        }
    }
}

TEST(Align, SymmetricScore) {
    std::vector<Trajectory> seqs;
    Trajectory cur;
    all_sequences(alphabet(), 3, cur, seqs);
    for (const auto& a : seqs) {
        for (const auto& b : seqs) {
            ASSERT_NEAR(align(a, b, NodeSimWeights{}, AlignmentConfig{}).score,
                        align(b, a, NodeSimWeights{}, AlignmentConfig{}).score, 1e-12);
        }
    }
}

TEST(CareerSim, SelfAndSymmetry) {
    const auto corpus = generate_synthetic_corpus(3, 40, 24, 12);
    const MemberProfile* prev = nullptr;
    for (const auto& [id, p] : corpus.profiles) {
        EXPECT_EQ(career_sim(p, p, NodeSimWeights{}, AlignmentConfig{}, corpus.as_of), 1.0);
        if (prev) {
            EXPECT_NEAR(career_sim(p, *prev, NodeSimWeights{}, AlignmentConfig{}, corpus.as_of),
                        career_sim(*prev, p, NodeSimWeights{}, AlignmentConfig{}, corpus.as_of), 1e-12);
        }
        prev = &p;
    }
}

TEST(CareerSim, ArchetypeMatesScoreHigher) {
    const auto synth = generate_synthetic(7, 200, 48, 30);
    std::vector<const MemberProfile*> members;
    for (const auto& [id, p] : synth.corpus.profiles) members.push_back(&p);
    std::mt19937_64 rng(5);
    std::vector<double> same, cross;
    while (same.size() < 50 || cross.size() < 50) {
        const auto* a = members[rng() % members.size()];
        const auto* b = members[rng() % members.size()];
        if (a == b) continue;
        const bool mates = synth.archetype_of.at(a->member_id) == synth.archetype_of.at(b->member_id);
        auto& bucket = mates ? same : cross;
        if (bucket.size() < 50) {
            bucket.push_back(career_sim(*a, *b, NodeSimWeights{}, AlignmentConfig{}, synth.corpus.as_of));
        }
    }
    auto median = [](std::vector<double> v) {
        std::sort(v.begin(), v.end());
        return (v[24] + v[25]) / 2.0;
    };
    EXPECT_GT(median(same), median(cross));
}

TEST(TrajectoryScore, MeanOverCandidates) {
    const auto corpus = generate_synthetic_corpus(4, 30, 24, 12);
    const auto& r = corpus.profile("m0000");
    const auto& c1 = corpus.profile("m0001");
    const auto& c2 = corpus.profile("m0002");
    const NodeSimWeights w;
    const AlignmentConfig g;
    const double s1 = career_sim(r, c1, w, g, corpus.as_of);
    const double s2 = career_sim(r, c2, w, g, corpus.as_of);
    const std::vector<const MemberProfile*> both{&c1, &c2};
    const std::vector<const MemberProfile*> swapped{&c2, &c1};
    const std::vector<const MemberProfile*> one{&c1};
    EXPECT_NEAR(trajectory_score(r, both, w, g, corpus.as_of), (s1 + s2) / 2.0, 1e-12);
    EXPECT_NEAR(trajectory_score(r, swapped, w, g, corpus.as_of), (s1 + s2) / 2.0, 1e-12);
    EXPECT_EQ(trajectory_score(r, one, w, g, corpus.as_of), s1);
    EXPECT_THROW(trajectory_score(r, std::span<const MemberProfile* const>{}, w, g, corpus.as_of), InvalidArgument);
}

TEST(TrajectoryScore, SwapBoundedByOneOverM) {
    const auto corpus = generate_synthetic_corpus(8, 40, 24, 12);
    std::vector<const MemberProfile*> all;
    for (const auto& [id, p] : corpus.profiles) all.push_back(&p);
    std::mt19937_64 rng(8);
    for (int trial = 0; trial < 50; ++trial) {
        const auto* r = all[rng() % all.size()];
        std::vector<const MemberProfile*> ic{all[rng() % all.size()], all[rng() % all.size()], all[rng() % all.size()]};
        const double before = trajectory_score(*r, ic, {}, {}, corpus.as_of);
        ic[rng() % 3] = all[rng() % all.size()];
        const double after = trajectory_score(*r, ic, {}, {}, corpus.as_of);
        EXPECT_LE(std::abs(after - before), 1.0 / 3.0 + 1e-12);
    }
}

}  // namespace
}  // namespace exemplar::careersim
