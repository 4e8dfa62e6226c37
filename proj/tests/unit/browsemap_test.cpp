#include <gtest/gtest.h>

#include <random>

#include "exemplar/browsemap.hpp"
#include "fixtures.hpp"
#include "oracles.hpp"

namespace exemplar::browsemap {
namespace {

CoViewLog log_of(const std::map<std::string, std::vector<std::string>>& viewers) {
    std::vector<CoView> events;
    for (const auto& [company, users] : viewers) {
        for (const auto& u : users) events.push_back({u, company});
    }
    return CoViewLog::from_events(events);
}

double sim(const CompanyBrowsemap& map, const std::string& a, const std::string& b) {
    for (const auto& [c, s] : similar_companies(map, a, 1000)) {
        if (c == b) return s;
    }
    return 0.0;
}

TEST(Browsemap, HandComputedJaccard) {
    const auto map = build_browsemap(log_of({{"A", {"u1", "u2", "u3"}}, {"B", {"u2", "u3", "u4"}}}), 2, 25);
    EXPECT_DOUBLE_EQ(sim(map, "A", "B"), 0.5);
    EXPECT_DOUBLE_EQ(sim(map, "B", "A"), 0.5);
}

TEST(Browsemap, IdenticalAndDisjoint) {
    const auto map = build_browsemap(
        log_of({{"A", {"u1", "u2"}}, {"B", {"u1", "u2"}}, {"C", {"u3", "u4"}}}), 2, 25);
    EXPECT_DOUBLE_EQ(sim(map, "A", "B"), 1.0);
    for (const auto& [c, s] : similar_companies(map, "A", 10)) EXPECT_NE(c, "C");
}

TEST(Browsemap, MinViewersExcludes) {
    const auto map = build_browsemap(log_of({{"A", {"u1", "u2"}}, {"B", {"u1"}}}), 2, 25);
    EXPECT_TRUE(similar_companies(map, "A", 10).empty());
    EXPECT_TRUE(similar_companies(map, "B", 10).empty());
}

TEST(Browsemap, EmptyLogAndLookups) {
    const auto map = build_browsemap(CoViewLog{}, 2, 25);
    EXPECT_TRUE(map.neighbors.empty());
    const auto full = build_browsemap(log_of({{"A", {"u1", "u2"}}, {"B", {"u1", "u2"}}}), 2, 25);
    EXPECT_TRUE(similar_companies(full, "unknown", 5).empty());
    EXPECT_TRUE(similar_companies(full, "A", 0).empty());
}

TEST(Browsemap, TruncatesAndBreaksTiesById) {
    const auto map = build_browsemap(
        log_of({{"A", {"u1", "u2"}}, {"D", {"u1", "u2"}}, {"C", {"u1", "u2"}}, {"B", {"u1", "u2"}}}), 2, 2);
    const auto n = similar_companies(map, "A", 10);
    ASSERT_EQ(n.size(), 2u);
    EXPECT_EQ(n[0].first, "B");
    EXPECT_EQ(n[1].first, "C");
}

TEST(Browsemap, FourCompanyOracleOrdering) {
    const auto log = log_of({{"A", {"u1", "u2", "u3", "u4"}},
                             {"B", {"u1", "u2", "u5"}},
                             {"C", {"u3", "u6"}},
                             {"D", {"u1", "u2", "u3", "u7", "u8"}}});
    const auto map = build_browsemap(log, 2, 25);
    const auto oracle = oracle::pairwise_jaccard(log, 2);
    for (const std::string a : {"A", "B", "C", "D"}) {
        std::vector<std::pair<std::string, double>> want;
        for (const auto& [pair, s] : oracle) {
            if (pair.first == a && s > 0.0) want.emplace_back(pair.second, s);
        }
        std::sort(want.begin(), want.end(), [](auto& x, auto& y) {
            return x.second != y.second ? x.second > y.second : x.first < y.first;
        });
        const auto got = similar_companies(map, a, 25);
        ASSERT_EQ(got.size(), want.size()) << a;
        for (std::size_t i = 0; i < want.size(); ++i) {
            EXPECT_EQ(got[i].first, want[i].first);
            EXPECT_NEAR(got[i].second, want[i].second, 1e-15);
        }
    }
}

TEST(Browsemap, AddingSharedViewerNeverLowersSimilarity) {
    std::mt19937_64 rng(4);
    for (int trial = 0; trial < 100; ++trial) {
        std::map<std::string, std::vector<std::string>> viewers;
        for (int e = 0; e < 20; ++e) {
            viewers["c" + std::to_string(rng() % 5)].push_back("u" + std::to_string(rng() % 10));
        }
        const auto before = build_browsemap(log_of(viewers), 1, 25);
        viewers["c0"].push_back("fresh");
        viewers["c1"].push_back("fresh");
        const auto after = build_browsemap(log_of(viewers), 1, 25);
        EXPECT_GE(sim(after, "c0", "c1"), sim(before, "c0", "c1"));
    }
}

TEST(Browsemap, CosineSwitch) {
    BrowsemapConfig cfg;
    cfg.similarity = Similarity::Cosine;
    const auto map = build_browsemap(log_of({{"A", {"u1", "u2", "u3"}}, {"B", {"u2", "u3", "u4"}}}), cfg);
    EXPECT_NEAR(sim(map, "A", "B"), 2.0 / 3.0, 1e-15);
}

TEST(Browsemap, SnapshotRoundTrip) {
    const auto map = build_browsemap(log_of({{"A", {"u1", "u2", "u3"}}, {"B", {"u2", "u3", "u4"}}}), 2, 25);
    testing::TempDir dir;
    save(map, dir / "browsemap.bin");
    EXPECT_EQ(read(dir / "browsemap.bin"), map);
}

}  // namespace
}  // namespace exemplar::browsemap
