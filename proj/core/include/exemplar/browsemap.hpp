#pragma once

#include <filesystem>
#include <map>
#include <utility>
#include <vector>

#include <nlohmann/json.hpp>

#include "exemplar/domain.hpp"

namespace exemplar::browsemap {

enum class Similarity { Jaccard, Cosine };

struct BrowsemapConfig {
    std::size_t min_viewers = 2;
    std::size_t k_neighbors = 25;
    Similarity similarity = Similarity::Jaccard;

    friend bool operator==(const BrowsemapConfig&, const BrowsemapConfig&) = default;
};

using Neighbor = std::pair<CompanyId, double>;

/// Company → similar companies, each list sorted by similarity descending then id.
struct CompanyBrowsemap {
    std::map<CompanyId, std::vector<Neighbor>> neighbors;
    std::size_t min_viewers = 2;

    friend bool operator==(const CompanyBrowsemap&, const CompanyBrowsemap&) = default;
};

/// Co-view similarity between companies. Companies with fewer than `min_viewers` viewers are
/// excluded and zero-similarity pairs are dropped.
CompanyBrowsemap build_browsemap(const CoViewLog& coviews, const BrowsemapConfig& config);

inline CompanyBrowsemap build_browsemap(const CoViewLog& coviews, std::size_t min_viewers, std::size_t k_neighbors) {
    return build_browsemap(coviews, BrowsemapConfig{min_viewers, k_neighbors, Similarity::Jaccard});
}

/// First min(k, available) neighbors; unknown company yields an empty list.
std::vector<Neighbor> similar_companies(const CompanyBrowsemap& map, const CompanyId& company, std::size_t k);

nlohmann::json to_json(const CompanyBrowsemap& map);
CompanyBrowsemap from_json(const nlohmann::json& j);
void save(const CompanyBrowsemap& map, const std::filesystem::path& path);
CompanyBrowsemap read(const std::filesystem::path& path);

}  // namespace exemplar::browsemap
