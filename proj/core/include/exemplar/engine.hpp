#pragma once

#include <cstdint>
#include <filesystem>
#include <memory>
#include <set>
#include <span>
#include <vector>

#include "exemplar/browsemap.hpp"
#include "exemplar/config.hpp"
#include "exemplar/corpus.hpp"
#include "exemplar/expertise.hpp"
#include "exemplar/index.hpp"
#include "exemplar/query.hpp"
#include "exemplar/ranking.hpp"
#include "exemplar/title_standardizer.hpp"

namespace exemplar {

/// Immutable bundle of one corpus snapshot and everything derived from it.
class Engine {
public:
    Engine(Corpus corpus, expertise::ExpertiseModel model, browsemap::CompanyBrowsemap map,
           index::InvertedIndex index, config::EngineConfig config);

    /// Runs every offline pipeline over `corpus`.
    static std::shared_ptr<const Engine> build(Corpus corpus, const config::EngineConfig& config);

    /// Reads persisted snapshots. Throws InvalidArgument when a derived snapshot was built from a
    /// different corpus.
    static std::shared_ptr<const Engine> open(const std::filesystem::path& corpus_path,
                                              const std::filesystem::path& expertise_path,
                                              const std::filesystem::path& browsemap_path,
                                              const std::filesystem::path& index_path,
                                              const config::EngineConfig& config);

    const Corpus& corpus() const { return corpus_; }
    const expertise::ExpertiseModel& model() const { return model_; }
    const browsemap::CompanyBrowsemap& browsemap() const { return browsemap_; }
    const index::InvertedIndex& index() const { return index_; }
    const query::TitleStandardizer& standardizer() const { return standardizer_; }
    const config::EngineConfig& config() const { return config_; }

    query::Query build_query(std::span<const MemberId> ideal) const;
    query::Suggestions suggest(const query::Query& q) const;

    /// Retrieval followed by ranking of every match at edit count n.
    std::vector<ranking::RankedResult> search(const query::Query& q, const MemberId& searcher,
                                              std::span<const MemberId> ideal, std::int64_t n,
                                              bool include_ideal) const;

    ranking::RankingContext ranking_context() const;

private:
    Corpus corpus_;
    expertise::ExpertiseModel model_;
    browsemap::CompanyBrowsemap browsemap_;
    index::InvertedIndex index_;
    query::TitleStandardizer standardizer_;
    config::EngineConfig config_;
};

}  // namespace exemplar
