#pragma once

#include <cstdint>
#include <filesystem>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "exemplar/domain.hpp"

namespace exemplar {

/// The immutable, validated corpus every pipeline reads from.
struct Corpus {
    std::map<MemberId, MemberProfile> profiles;
    SkillTaxonomy taxonomy;
    EndorsementGraph endorsements;
    CoViewLog coviews;
    YearMonth as_of;
    TitleCatalog titles;
    std::map<CompanyId, std::string> companies;  // display names; every position company is present

    const MemberProfile& profile(const MemberId& id) const;  // throws NotFound
    const MemberProfile* find(const MemberId& id) const;
    bool has_member(const MemberId& id) const { return profiles.contains(id); }

    const std::string& company_name(const CompanyId& id) const;
    std::set<IndustryId> industry_ids() const;
    std::set<RegionId> region_ids() const;

    friend bool operator==(const Corpus&, const Corpus&) = default;
};

struct LoadSummary {
    std::size_t profiles = 0;
    std::size_t pruned_connections = 0;
    std::size_t pruned_endorsements = 0;
    std::size_t pruned_coviews = 0;
    std::vector<std::string> warnings;
};

struct LoadedCorpus {
    Corpus corpus;
    LoadSummary summary;
};

struct CorpusPaths {
    std::filesystem::path profiles;
    std::filesystem::path taxonomy;
    std::filesystem::path endorsements;
    std::filesystem::path coviews;
    std::optional<std::filesystem::path> titles;     // titles.jsonl; derived from raw titles when absent
    std::optional<std::filesystem::path> companies;  // companies.jsonl; ids double as names when absent
};

/// Reads the line-delimited JSON files, prunes dangling references (counted as warnings), assigns
/// standardized title ids, and validates. Throws IoError, MalformedRecord, or CorpusRejected.
LoadedCorpus load_corpus(const CorpusPaths& paths, YearMonth as_of);

/// In-memory counterpart of load_corpus over already-decoded records.
LoadedCorpus assemble_corpus(std::vector<MemberProfile> profiles,
                             SkillTaxonomy taxonomy,
                             std::vector<Endorsement> endorsements,
                             std::vector<CoView> coviews,
                             YearMonth as_of,
                             TitleCatalog titles = {},
                             std::map<CompanyId, std::string> companies = {});

/// Writes profiles.jsonl, taxonomy.jsonl, endorsements.jsonl, coviews.jsonl, titles.jsonl and
/// companies.jsonl into `dir`, and returns the paths for load_corpus.
CorpusPaths write_corpus_jsonl(const Corpus& corpus, const std::filesystem::path& dir);

nlohmann::json corpus_to_json(const Corpus& corpus);
Corpus corpus_from_json(const nlohmann::json& j);

/// Versioned binary snapshot (kind "corpus").
void save_corpus(const Corpus& corpus, const std::filesystem::path& path);
Corpus read_corpus(const std::filesystem::path& path);
std::uint64_t corpus_fingerprint(const Corpus& corpus);

}  // namespace exemplar
