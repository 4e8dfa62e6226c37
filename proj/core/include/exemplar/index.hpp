#pragma once

#include <cstdint>
#include <filesystem>
#include <map>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include <nlohmann/json.hpp>

#include "exemplar/corpus.hpp"
#include "exemplar/expertise.hpp"
#include "exemplar/query.hpp"

namespace exemplar::index {

enum class FacetType { Skill, Company, Title, Industry, Region };

using AttributeKey = std::pair<FacetType, std::string>;
using Postings = std::vector<MemberId>;  // ascending, duplicate-free

struct InvertedIndex {
    std::map<AttributeKey, Postings> postings;
    std::map<std::string, Postings> text_postings;
    std::uint64_t corpus_fingerprint = 0;

    const Postings& lookup(FacetType type, const std::string& id) const;
    const Postings& lookup_token(const std::string& token) const;

    friend bool operator==(const InvertedIndex&, const InvertedIndex&) = default;
};

/// Postings for skills (every E1 cell, so inferred skills match), companies and standardized titles
/// of all positions, industries (profile and positions) and regions. Text postings cover the
/// headline and position summaries.
InvertedIndex build_index(const Corpus& corpus, const expertise::ExpertiseMatrix& e1);

/// OR within each non-empty facet, AND across facets and across keyword tokens, minus `exclude`.
/// A query with no facet entries and no keyword tokens matches nothing.
std::vector<MemberId> retrieve(const InvertedIndex& index, const query::Query& q,
                               const std::set<MemberId>& exclude = {});

nlohmann::json to_json(const InvertedIndex& index);
InvertedIndex from_json(const nlohmann::json& j);
void save(const InvertedIndex& index, const std::filesystem::path& path);
InvertedIndex read(const std::filesystem::path& path);

}  // namespace exemplar::index
