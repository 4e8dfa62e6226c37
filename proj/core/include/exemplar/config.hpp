#pragma once

#include <filesystem>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "exemplar/browsemap.hpp"
#include "exemplar/careersim.hpp"
#include "exemplar/expertise.hpp"
#include "exemplar/query.hpp"
#include "exemplar/ranking.hpp"

namespace exemplar::config {

/// Flat TOML subset: `[section]` headers, `key = value` lines, `#` comments. Values are
/// numbers, booleans or quoted strings. Keys are stored as "section.key" ("key" at top level).
class ConfigTable {
public:
    using Value = std::variant<double, bool, std::string>;

    /// Throws InvalidArgument with the line number on a syntax error.
    static ConfigTable parse(std::string_view text, const std::string& origin = "<config>");
    static ConfigTable load(const std::filesystem::path& path);

    bool has(const std::string& key) const { return values_.contains(key); }
    /// nullopt when the key is absent; InvalidArgument when it holds another type.
    std::optional<double> number(const std::string& key) const;
    std::optional<bool> boolean(const std::string& key) const;
    std::optional<std::string> string(const std::string& key) const;

    std::vector<std::string> sections() const;
    std::vector<std::string> keys_in(const std::string& section) const;

private:
    std::map<std::string, Value> values_;
    std::string origin_;
};

struct ServiceConfig {
    std::size_t page_size = 25;
    std::size_t max_ideal_candidates = 3;
    bool include_ideal_candidates = false;
    std::optional<std::filesystem::path> session_store;

    friend bool operator==(const ServiceConfig&, const ServiceConfig&) = default;
};

/// Every tunable of the pipeline in one place; the merged config file has one section per field.
struct EngineConfig {
    expertise::ExpertiseConfig expertise;
    browsemap::BrowsemapConfig browsemap;
    query::QueryBuilderConfig query;
    ranking::RankerConfig ranker;
    careersim::NodeSimWeights node_weights;
    careersim::AlignmentConfig alignment;
    ServiceConfig service;

    void validate() const;
};

// Section readers. With `top_level` set, keys outside any section are read too, which is how the
// single-purpose files (expertise.toml, ranker.toml, careersim weights) are laid out.
expertise::ExpertiseConfig read_expertise(const ConfigTable& t, bool top_level = false);
browsemap::BrowsemapConfig read_browsemap(const ConfigTable& t, bool top_level = false);
query::QueryBuilderConfig read_query(const ConfigTable& t, bool top_level = false);
ranking::RankerConfig read_ranker(const ConfigTable& t, bool top_level = false);
careersim::NodeSimWeights read_node_weights(const ConfigTable& t, bool top_level = false);
careersim::AlignmentConfig read_alignment(const ConfigTable& t, bool top_level = false);
ServiceConfig read_service(const ConfigTable& t, bool top_level = false);

/// Reads every section of a merged config. Unknown sections or keys are rejected.
EngineConfig read_engine_config(const ConfigTable& t);

/// Loads `path` if given, else the file named by EXEMPLAR_CONFIG, else defaults.
EngineConfig load_engine_config(const std::optional<std::filesystem::path>& path = std::nullopt);

}  // namespace exemplar::config
