#include <gtest/gtest.h>

#include <fstream>

#include "exemplar/serialization.hpp"
#include "exemplar/synthetic.hpp"
#include "exemplar/validate.hpp"
#include "fixtures.hpp"

namespace exemplar {
namespace {

using testing::member;
using testing::position;
using testing::TempDir;

void write_lines(const std::filesystem::path& path, const std::vector<std::string>& lines) {
    std::ofstream out(path);
    for (const auto& l : lines) out << l << '\n';
}

CorpusPaths write_three(const TempDir& dir, const std::vector<std::string>& endorsement_lines) {
    std::vector<std::string> profiles;
    for (const char* id : {"a", "b", "c"}) {
        const nlohmann::json j = member(id, {"java"}, {position("c1", "Engineer", "2012-01")});
        profiles.push_back(j.dump());
    }
    write_lines(dir / "profiles.jsonl", profiles);
    write_lines(dir / "taxonomy.jsonl", {R"({"skill_id":"java","name":"Java","aliases":["jdk"]})"});
    write_lines(dir / "endorsements.jsonl", endorsement_lines);
    write_lines(dir / "coviews.jsonl", {R"({"viewer_member_id":"a","company_id":"c1"})"});
    return CorpusPaths{dir / "profiles.jsonl", dir / "taxonomy.jsonl", dir / "endorsements.jsonl",
                       dir / "coviews.jsonl", std::nullopt, std::nullopt};
}

TEST(LoadCorpus, EmptyProfileFile) {
    TempDir dir;
    auto paths = write_three(dir, {});
    write_lines(paths.profiles, {});
    try {
        load_corpus(paths, YearMonth::parse("2016-01"));
        FAIL();
    } catch (const InvalidArgument& e) {
        EXPECT_STREQ(e.what(), "empty corpus");
    }
}

TEST(LoadCorpus, DanglingEndorsementIsPruned) {
    TempDir dir;
    const auto paths =
        write_three(dir, {R"({"endorser_member_id":"a","endorsed_member_id":"zz","skill_id":"java"})"});
    const auto loaded = load_corpus(paths, YearMonth::parse("2016-01"));
    EXPECT_EQ(loaded.corpus.profiles.size(), 3u);
    EXPECT_TRUE(loaded.corpus.endorsements.edges.empty());
    EXPECT_EQ(loaded.summary.pruned_endorsements, 1u);
    EXPECT_EQ(loaded.summary.warnings.size(), 1u);
}

TEST(LoadCorpus, MalformedRecordReportsLine) {
    TempDir dir;
    const auto paths = write_three(dir, {R"({"endorser_member_id":"a","endorsed_member_id":"b","skill_id":"java"})",
                                         R"({"endorser_member_id": oops})"});
    try {
        load_corpus(paths, YearMonth::parse("2016-01"));
        FAIL();
    } catch (const MalformedRecord& e) {
        EXPECT_EQ(e.line(), 2u);
    }
}

TEST(LoadCorpus, MissingFileIsIoError) {
    TempDir dir;
    auto paths = write_three(dir, {});
    paths.coviews = dir / "absent.jsonl";
    EXPECT_THROW(load_corpus(paths, YearMonth::parse("2016-01")), IoError);
}

TEST(LoadCorpus, ValidationFailureRejects) {
    TempDir dir;
    const auto paths =
        write_three(dir, {R"({"endorser_member_id":"a","endorsed_member_id":"a","skill_id":"java"})"});
    try {
        load_corpus(paths, YearMonth::parse("2016-01"));
        FAIL();
    } catch (const CorpusRejected& e) {
        EXPECT_TRUE(e.report().has("self endorsement"));
    }
}

TEST(LoadCorpus, TitlesAreStandardized) {
    TempDir dir;
    const auto loaded = load_corpus(write_three(dir, {}), YearMonth::parse("2016-01"));
    EXPECT_EQ(loaded.corpus.profile("a").positions[0].title_id, "engineer");
    EXPECT_THROW(loaded.corpus.profile("nobody"), NotFound);
}

TEST(Corpus, PersistedFormsRoundTrip) {
    const auto corpus = generate_synthetic_corpus(3, 40, 24, 12);
    TempDir dir;
    const auto paths = write_corpus_jsonl(corpus, dir.path());
    const auto reloaded = load_corpus(paths, corpus.as_of);
    EXPECT_EQ(reloaded.corpus, corpus);
    EXPECT_TRUE(reloaded.summary.warnings.empty());

    save_corpus(corpus, dir / "corpus.bin");
    EXPECT_EQ(read_corpus(dir / "corpus.bin"), corpus);
    EXPECT_EQ(corpus_fingerprint(read_corpus(dir / "corpus.bin")), corpus_fingerprint(corpus));
}

TEST(Synthetic, SameSeedSameBytes) {
    const auto a = generate_synthetic_corpus(1, 60, 24, 12);
    const auto b = generate_synthetic_corpus(1, 60, 24, 12);
    EXPECT_EQ(corpus_to_json(a).dump(), corpus_to_json(b).dump());
    const auto c = generate_synthetic_corpus(2, 60, 24, 12);
    EXPECT_NE(corpus_to_json(a).dump(), corpus_to_json(c).dump());
}

TEST(Synthetic, SingleMember) {
    const auto corpus = generate_synthetic_corpus(1, 1, 24, 12);
    EXPECT_EQ(corpus.profiles.size(), 1u);
    EXPECT_TRUE(corpus.endorsements.edges.empty());
}

TEST(Synthetic, InvalidSizes) {
    EXPECT_THROW(generate_synthetic(1, 0, 10, 10), InvalidArgument);
    EXPECT_THROW(generate_synthetic(1, 10, 0, 10), InvalidArgument);
    EXPECT_THROW(generate_synthetic(1, 10, 10, 0), InvalidArgument);
}

TEST(Synthetic, ClusterSizesNearUniform) {
    const auto s = generate_synthetic(1, 100, 48, 30);
    ASSERT_EQ(s.archetypes, 6u);
    std::vector<std::size_t> counts(s.archetypes, 0);
    for (const auto& [id, a] : s.archetype_of) ++counts[a];
    const double uniform = 100.0 / static_cast<double>(s.archetypes);
    for (auto c : counts) {
        EXPECT_GE(static_cast<double>(c), uniform / 2.0);
        EXPECT_LE(static_cast<double>(c), uniform * 2.0);
    }
}

TEST(Synthetic, PassesValidation) {
    const auto corpus = generate_synthetic_corpus(5, 200, 48, 30);
    std::vector<MemberProfile> profiles;
    std::set<CompanyId> companies;
    for (const auto& [id, p] : corpus.profiles) profiles.push_back(p);
    for (const auto& [id, name] : corpus.companies) companies.insert(id);
    const auto report = validate_corpus(profiles, corpus.taxonomy, corpus.endorsements, corpus.coviews, companies);
    EXPECT_TRUE(report.accepted()) << report.to_string();
}

}  // namespace
}  // namespace exemplar
