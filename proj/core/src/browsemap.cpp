#include "exemplar/browsemap.hpp"

#include <algorithm>
#include <cmath>
#include <set>

#include "exemplar/error.hpp"
#include "exemplar/snapshot.hpp"

namespace exemplar::browsemap {

using nlohmann::json;

CompanyBrowsemap build_browsemap(const CoViewLog& coviews, const BrowsemapConfig& config) {
    std::map<CompanyId, std::set<MemberId>> viewers;
    for (const auto& v : coviews.events) viewers[v.company_id].insert(v.viewer);
    std::erase_if(viewers, [&](const auto& entry) { return entry.second.size() < config.min_viewers; });

    // Count shared viewers through the viewer → companies inversion.
    std::map<MemberId, std::vector<CompanyId>> viewed;
    for (const auto& [company, members] : viewers) {
        for (const auto& m : members) viewed[m].push_back(company);
    }
    std::map<std::pair<CompanyId, CompanyId>, std::size_t> shared;
    for (const auto& [m, companies] : viewed) {
        for (std::size_t i = 0; i < companies.size(); ++i) {
            for (std::size_t j = i + 1; j < companies.size(); ++j) ++shared[{companies[i], companies[j]}];
        }
    }

    CompanyBrowsemap map;
    map.min_viewers = config.min_viewers;
    for (const auto& [pair, common] : shared) {
        const double a = static_cast<double>(viewers.at(pair.first).size());
        const double b = static_cast<double>(viewers.at(pair.second).size());
        const double c = static_cast<double>(common);
        const double sim = config.similarity == Similarity::Jaccard ? c / (a + b - c) : c / std::sqrt(a * b);
        map.neighbors[pair.first].emplace_back(pair.second, sim);
        map.neighbors[pair.second].emplace_back(pair.first, sim);
    }
    for (auto& [company, list] : map.neighbors) {
        std::sort(list.begin(), list.end(), [](const Neighbor& x, const Neighbor& y) {
            if (x.second != y.second) return x.second > y.second;
            return x.first < y.first;
        });
        if (list.size() > config.k_neighbors) list.resize(config.k_neighbors);
    }
    std::erase_if(map.neighbors, [](const auto& entry) { return entry.second.empty(); });
    return map;
}

std::vector<Neighbor> similar_companies(const CompanyBrowsemap& map, const CompanyId& company, std::size_t k) {
    auto it = map.neighbors.find(company);
    if (it == map.neighbors.end() || k == 0) return {};
    const auto n = std::min(k, it->second.size());
    return {it->second.begin(), it->second.begin() + static_cast<std::ptrdiff_t>(n)};
}

json to_json(const CompanyBrowsemap& map) {
    return json{{"min_viewers", map.min_viewers}, {"neighbors", map.neighbors}};
}

CompanyBrowsemap from_json(const json& j) {
    CompanyBrowsemap map;
    map.min_viewers = j.at("min_viewers").get<std::size_t>();
    map.neighbors = j.at("neighbors").get<std::map<CompanyId, std::vector<Neighbor>>>();
    return map;
}

void save(const CompanyBrowsemap& map, const std::filesystem::path& path) {
    snapshot::write(path, "browsemap", to_json(map));
}

CompanyBrowsemap read(const std::filesystem::path& path) {
    try {
        return from_json(snapshot::read(path, "browsemap"));
    } catch (const json::exception& e) {
        throw IoError("corrupt browsemap snapshot " + path.string() + ": " + e.what());
    }
}

}  // namespace exemplar::browsemap
