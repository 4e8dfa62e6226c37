#include <gtest/gtest.h>

#include <cmath>

#include "exemplar/error.hpp"
#include "exemplar/expertise.hpp"
#include "exemplar/synthetic.hpp"
#include "fixtures.hpp"
#include "oracles.hpp"

namespace exemplar::expertise {
namespace {

using testing::member;
using testing::position;

TEST(Pagerank, IsolatedMemberScoresZero) {
    const auto scores = endorsement_pagerank({}, "java", ExpertiseConfig{});
    EXPECT_TRUE(scores.empty());
    EXPECT_EQ(scores.count("a"), 0u);
}

TEST(Pagerank, MutualEndorsement) {
    const auto g = EndorsementGraph::from_edges({{"a", "b", "java"}, {"b", "a", "java"}, {"a", "b", "go"}});
    const auto scores = endorsement_pagerank(g, "java", ExpertiseConfig{});
    ASSERT_EQ(scores.size(), 2u);
    EXPECT_DOUBLE_EQ(scores.at("a"), 1.0);
    EXPECT_DOUBLE_EQ(scores.at("b"), 1.0);
}

TEST(Pagerank, ChainMatchesDenseOracle) {
    const std::vector<std::pair<std::string, std::string>> chain{{"a", "b"}, {"b", "c"}, {"c", "d"}};
    std::vector<Endorsement> edges;
    for (const auto& [x, y] : chain) edges.push_back({x, y, "s"});
    const auto got = endorsement_pagerank(EndorsementGraph::from_edges(edges), "s", ExpertiseConfig{});
    const auto want = oracle::dense_pagerank(chain, 0.85, 50);
    ASSERT_EQ(got.size(), 4u);
    for (const auto& [id, v] : want) EXPECT_NEAR(got.at(id), v, 1e-9) << id;
    EXPECT_DOUBLE_EQ(got.at("d"), 1.0);
}

TEST(Pagerank, RandomGraphsMatchDenseOracle) {
    std::mt19937_64 rng(11);
    for (int trial = 0; trial < 20; ++trial) {
        std::vector<std::pair<std::string, std::string>> pairs;
        std::vector<Endorsement> edges;
        for (int e = 0; e < 12; ++e) {
            const auto x = "m" + std::to_string(rng() % 7);
            const auto y = "m" + std::to_string(rng() % 7);
            if (x == y) continue;
            pairs.emplace_back(x, y);
            edges.push_back({x, y, "s"});
        }
        const auto got = endorsement_pagerank(EndorsementGraph::from_edges(edges), "s", ExpertiseConfig{});
        const auto want = oracle::dense_pagerank(pairs, 0.85, 50);
        ASSERT_EQ(got.size(), want.size());
        for (const auto& [id, v] : want) EXPECT_NEAR(got.at(id), v, 1e-9);
    }
}

Corpus single_member_corpus(std::initializer_list<std::string> skills, std::string headline = "engineer") {
    auto m = member("a", skills, {position("c1", "dev", "2008-07")});
    m.headline = std::move(headline);
    SkillTaxonomy t;
    t.skills["haskell"] = {"Haskell", {}};
    t.skills["search"] = {"Search", {"information retrieval"}};
    return assemble_corpus({m}, t, {}, {}, YearMonth::parse("2016-01")).corpus;
}

TEST(RawExpertise, HandEvaluatedHeuristic) {
    // 90 months of experience is seniority 0.5; nothing else contributes.
    const auto corpus = single_member_corpus({"haskell"});
    EXPECT_DOUBLE_EQ(seniority(corpus.profile("a"), corpus.as_of), 0.5);
    const auto e0 = compute_raw_expertise(corpus, ExpertiseConfig{});
    EXPECT_NEAR(e0.score("a", "haskell"), 0.1, 1e-15);
    EXPECT_EQ(e0.cell_count(), 1u);
}

TEST(RawExpertise, NoSkillsNoRow) {
    const auto corpus = single_member_corpus({});
    EXPECT_EQ(compute_raw_expertise(corpus, ExpertiseConfig{}).cell_count(), 0u);
}

TEST(RawExpertise, TextSimilarityFraction) {
    const auto corpus = single_member_corpus({"search"}, "retrieval engineer");
    // Tokens {search, information, retrieval}; one present.
    EXPECT_NEAR(text_similarity(corpus.profile("a"), corpus.taxonomy.skills.at("search")), 1.0 / 3.0, 1e-15);
}

TEST(RawExpertise, SeniorityUsesIntervalUnion) {
    auto m = member("a", {}, {position("c2", "x", "2010-01", "2012-01"), position("c1", "y", "2009-01", "2011-01")});
    EXPECT_NEAR(seniority(m, YearMonth::parse("2016-01")), 36.0 / 180.0, 1e-15);
    m.positions = {position("c1", "y", "1990-01")};
    EXPECT_DOUBLE_EQ(seniority(m, YearMonth::parse("2016-01")), 1.0);
}

TEST(RawExpertise, ScoresInUnitInterval) {
    const auto corpus = generate_synthetic_corpus(4, 120, 48, 30);
    const auto e0 = compute_raw_expertise(corpus, ExpertiseConfig{});
    for (const auto& [m, row] : e0.rows) {
        for (const auto& [s, v] : row) {
            EXPECT_GE(v, 0.0);
            EXPECT_LE(v, 1.0);
        }
    }
}

ExpertiseMatrix rank_one(std::size_t members, std::size_t skills, double density, std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    std::uniform_real_distribution<double> u(0.2, 1.0);
    std::vector<double> a(members);
    std::vector<double> b(skills);
    for (auto& x : a) x = u(rng);
    for (auto& x : b) x = u(rng);
    ExpertiseMatrix e0;
    for (std::size_t i = 0; i < members; ++i) {
        for (std::size_t j = 0; j < skills; ++j) {
            if (j == i % skills || std::uniform_real_distribution<double>(0, 1)(rng) < density) {
                e0.set("m" + std::to_string(i), "s" + std::to_string(j), a[i] * b[j]);
            }
        }
    }
    return e0;
}

TEST(Factorize, RankOneRecovery) {
    const auto e0 = rank_one(30, 8, 0.5, 3);
    ExpertiseConfig cfg;
    cfg.latent_dim = 1;
    cfg.regularization = 0.0;
    cfg.factorization_iterations = 200;
    const auto f = factorize(e0, cfg);
    const double rmse = std::sqrt(factorization_objective(e0, f.factors, 0.0) / static_cast<double>(e0.cell_count()));
    EXPECT_LT(rmse, 1e-6);
}

TEST(Factorize, ObjectiveNonIncreasing) {
    const auto corpus = generate_synthetic_corpus(9, 150, 48, 30);
    const auto e0 = compute_raw_expertise(corpus, ExpertiseConfig{});
    const auto f = factorize(e0, ExpertiseConfig{});
    ASSERT_EQ(f.objective_history.size(), 51u);
    for (std::size_t i = 1; i < f.objective_history.size(); ++i) {
        EXPECT_LE(f.objective_history[i], f.objective_history[i - 1] * (1.0 + 1e-12)) << "iteration " << i;
    }
    EXPECT_NEAR(f.objective_history.back(), factorization_objective(e0, f.factors, 0.1),
                1e-9 * f.objective_history.back());
}

TEST(Factorize, ZeroMatrixReconstructsZero) {
    ExpertiseMatrix e0;
    e0.set("a", "x", 0.0);
    e0.set("b", "y", 0.0);
    const auto f = factorize(e0, ExpertiseConfig{});
    EXPECT_NEAR(factorization_objective(e0, f.factors, 0.0), 0.0, 1e-20);
}

TEST(Factorize, EmptyMatrixThrows) {
    EXPECT_THROW(factorize(ExpertiseMatrix{}, ExpertiseConfig{}), InvalidArgument);
}

TEST(Factorize, DeterministicForSeed) {
    const auto e0 = rank_one(20, 6, 0.4, 5);
    EXPECT_EQ(factorize(e0, ExpertiseConfig{}).factors, factorize(e0, ExpertiseConfig{}).factors);
    ExpertiseConfig other;
    other.seed = 43;
    EXPECT_NE(factorize(e0, ExpertiseConfig{}).factors, factorize(e0, other).factors);
}

TEST(Infer, OrthogonalFactorsAndUnitThresholdKeepE0) {
    ExpertiseMatrix e0;
    e0.set("a", "x", 0.4);
    e0.set("b", "y", 0.7);
    LatentFactors f;
    f.latent_dim = 2;
    f.member_vectors = {{"a", {0.0, 0.0}}, {"b", {0.0, 0.0}}};
    f.skill_vectors = {{"x", {1.0, 0.0}}, {"y", {0.0, 1.0}}};
    ExpertiseConfig cfg;
    cfg.inference_threshold = 1.0;
    auto e1 = infer_expertise(e0, f, cfg);
    EXPECT_EQ(e1.rows, e0.rows);
    EXPECT_EQ(e1.stage, Stage::E1);
}

TEST(Infer, SupersetAndClamped) {
    const auto corpus = generate_synthetic_corpus(2, 150, 48, 30);
    const auto model = build_expertise(corpus, ExpertiseConfig{});
    EXPECT_GE(model.e1.cell_count(), model.e0.cell_count());
    for (const auto& [m, row] : model.e0.rows) {
        for (const auto& [s, v] : row) {
            ASSERT_TRUE(model.e1.has(m, s));
            EXPECT_GE(model.e1.score(m, s), v);
        }
    }
    for (const auto& [m, row] : model.e1.rows) {
        for (const auto& [s, v] : row) {
            EXPECT_GE(v, 0.0);
            EXPECT_LE(v, 1.0);
        }
    }
}

TEST(Infer, GainsLearningToRankFromNeighbours) {
    const auto corpus = generate_synthetic_corpus(1, 300, 48, 30);
    const auto model = build_expertise(corpus, ExpertiseConfig{});
    const auto dense = oracle::dense_e1_cells(model.e0, model.factors, model.config.inference_threshold);

    std::set<std::pair<std::string, std::string>> got;
    for (const auto& [m, row] : model.e1.rows) {
        for (const auto& [s, v] : row) got.insert({m, s});
    }
    EXPECT_EQ(got, dense);

    std::size_t candidates = 0;
    std::size_t gained = 0;
    for (const auto& [id, p] : corpus.profiles) {
        if (p.skill_ids.contains("machine-learning") && p.skill_ids.contains("information-retrieval") &&
            !p.skill_ids.contains("learning-to-rank")) {
            ++candidates;
            gained += model.e1.has(id, "learning-to-rank") ? 1 : 0;
        }
    }
    ASSERT_GT(candidates, 0u);
    EXPECT_GT(gained, 0u);
}

TEST(Infer, InsertionOrderIrrelevant) {
    const auto corpus = generate_synthetic_corpus(6, 80, 24, 12);
    std::vector<MemberProfile> reversed;
    for (auto it = corpus.profiles.rbegin(); it != corpus.profiles.rend(); ++it) reversed.push_back(it->second);
    const auto again = assemble_corpus(reversed, corpus.taxonomy, corpus.endorsements.edges, corpus.coviews.events,
                                       corpus.as_of, corpus.titles, corpus.companies)
                           .corpus;
    EXPECT_EQ(build_expertise(corpus, ExpertiseConfig{}).e1, build_expertise(again, ExpertiseConfig{}).e1);
}

TEST(SkillSimilarity, OrderingAndSelfExclusion) {
    LatentFactors f;
    f.latent_dim = 2;
    f.skill_vectors = {{"a", {1.0, 0.0}}, {"b", {2.0, 0.0}}, {"c", {0.0, 1.0}}, {"d", {1.0, 1.0}}, {"e", {1.0, 0.0}}};
    const auto sims = skill_similarity(f, "a", 10);
    ASSERT_EQ(sims.size(), 4u);
    EXPECT_EQ(sims[0], (std::pair<SkillId, double>{"b", 1.0}));
    EXPECT_EQ(sims[1].first, "e");
    EXPECT_EQ(sims[2].first, "d");
    EXPECT_EQ(sims[3].first, "c");
    EXPECT_THROW(skill_similarity(f, "zz", 3), NotFound);
    EXPECT_EQ(skill_similarity(f, "a", 1).size(), 1u);
}

TEST(SkillSimilarity, MatchesPairwiseOracle) {
    std::mt19937_64 rng(21);
    std::normal_distribution<double> g;
    LatentFactors f;
    f.latent_dim = 3;
    for (const char* s : {"s1", "s2", "s3", "s4", "s5"}) f.skill_vectors[s] = {g(rng), g(rng), g(rng)};
    for (const auto& [s, v] : f.skill_vectors) {
        std::vector<std::pair<SkillId, double>> want;
        for (const auto& [t, w] : f.skill_vectors) {
            if (t == s) continue;
            double dot = 0, na = 0, nb = 0;
            for (int k = 0; k < 3; ++k) {
                dot += v[k] * w[k];
                na += v[k] * v[k];
                nb += w[k] * w[k];
            }
            want.emplace_back(t, dot / std::sqrt(na * nb));
        }
        std::sort(want.begin(), want.end(), [](auto& x, auto& y) { return x.second > y.second; });
        const auto got = skill_similarity(f, s, 4);
        ASSERT_EQ(got.size(), 4u);
        for (std::size_t i = 0; i < 4; ++i) {
            EXPECT_EQ(got[i].first, want[i].first);
            EXPECT_NEAR(got[i].second, want[i].second, 1e-12);
        }
    }
}

TEST(ExpertiseModel, SnapshotRoundTrip) {
    const auto corpus = generate_synthetic_corpus(8, 40, 24, 12);
    const auto model = build_expertise(corpus, ExpertiseConfig{});
    testing::TempDir dir;
    save_model(model, dir / "expertise.bin");
    EXPECT_EQ(read_model(dir / "expertise.bin"), model);
    EXPECT_EQ(model.corpus_fingerprint, corpus_fingerprint(corpus));
}

TEST(ExpertiseConfig, Validation) {
    ExpertiseConfig c;
    EXPECT_NO_THROW(c.validate());
    c.latent_dim = 0;
    EXPECT_THROW(c.validate(), InvalidArgument);
    c = {};
    c.inference_threshold = 1.0;
    EXPECT_THROW(c.validate(), InvalidArgument);
    c = {};
    c.w_text = 0.4;
    EXPECT_THROW(c.validate(), InvalidArgument);
}

}  // namespace
}  // namespace exemplar::expertise
