#include "exemplar/engine.hpp"

#include <limits>

#include "exemplar/error.hpp"

namespace exemplar {

Engine::Engine(Corpus corpus, expertise::ExpertiseModel model, browsemap::CompanyBrowsemap map,
               index::InvertedIndex index, config::EngineConfig config)
    : corpus_(std::move(corpus)),
      model_(std::move(model)),
      browsemap_(std::move(map)),
      index_(std::move(index)),
      standardizer_(corpus_.titles),
      config_(std::move(config)) {
    config_.validate();
}

std::shared_ptr<const Engine> Engine::build(Corpus corpus, const config::EngineConfig& config) {
    auto model = expertise::build_expertise(corpus, config.expertise);
    auto map = browsemap::build_browsemap(corpus.coviews, config.browsemap);
    auto idx = index::build_index(corpus, model.e1);
    return std::make_shared<const Engine>(std::move(corpus), std::move(model), std::move(map), std::move(idx), config);
}

std::shared_ptr<const Engine> Engine::open(const std::filesystem::path& corpus_path,
                                           const std::filesystem::path& expertise_path,
                                           const std::filesystem::path& browsemap_path,
                                           const std::filesystem::path& index_path,
                                           const config::EngineConfig& config) {
    auto corpus = read_corpus(corpus_path);
    auto model = expertise::read_model(expertise_path);
    auto map = browsemap::read(browsemap_path);
    auto idx = index::read(index_path);
    const auto fingerprint = corpus_fingerprint(corpus);
    if (model.corpus_fingerprint != fingerprint) {
        throw InvalidArgument(expertise_path.string() + " was built from a different corpus");
    }
    if (idx.corpus_fingerprint != fingerprint) {
        throw InvalidArgument(index_path.string() + " was built from a different corpus");
    }
    return std::make_shared<const Engine>(std::move(corpus), std::move(model), std::move(map), std::move(idx), config);
}

query::Query Engine::build_query(std::span<const MemberId> ideal) const {
    return query::build_query(ideal, corpus_, model_.e1, browsemap_, standardizer_, config_.query);
}

query::Suggestions Engine::suggest(const query::Query& q) const {
    return query::suggest_entities(q, model_.factors, browsemap_, config_.query.n_suggestions);
}

ranking::RankingContext Engine::ranking_context() const {
    return ranking::RankingContext{corpus_, model_.e1, config_.ranker, config_.node_weights, config_.alignment};
}

std::vector<ranking::RankedResult> Engine::search(const query::Query& q, const MemberId& searcher,
                                                  std::span<const MemberId> ideal, std::int64_t n,
                                                  bool include_ideal) const {
    std::set<MemberId> exclude;
    if (!include_ideal) exclude.insert(ideal.begin(), ideal.end());
    const auto candidates = index::retrieve(index_, q, exclude);
    return ranking::rank_results(candidates, q, searcher, ideal, n, ranking_context(),
                                 std::numeric_limits<std::size_t>::max());
}

}  // namespace exemplar
