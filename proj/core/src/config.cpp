#include "exemplar/config.hpp"

#include <cstdlib>
#include <fstream>
#include <set>
#include <sstream>

#include "exemplar/error.hpp"

namespace exemplar::config {

namespace {

std::string_view trim(std::string_view s) {
    const auto first = s.find_first_not_of(" \t\r");
    if (first == std::string_view::npos) return {};
    const auto last = s.find_last_not_of(" \t\r");
    return s.substr(first, last - first + 1);
}

bool bare_key(std::string_view key) {
    if (key.empty()) return false;
    for (char c : key) {
        if (!(std::isalnum(static_cast<unsigned char>(c)) || c == '_' || c == '-')) return false;
    }
    return true;
}

// Strips a trailing comment that is not inside a quoted string.
std::string_view strip_comment(std::string_view line) {
    char quote = 0;
    for (std::size_t i = 0; i < line.size(); ++i) {
        const char c = line[i];
        if (quote) {
            if (c == '\\' && quote == '"') {
                ++i;
            } else if (c == quote) {
                quote = 0;
            }
        } else if (c == '"' || c == '\'') {
            quote = c;
        } else if (c == '#') {
            return line.substr(0, i);
        }
    }
    return line;
}

ConfigTable::Value parse_value(std::string_view raw) {
    if (raw == "true") return true;
    if (raw == "false") return false;
    if (raw.size() >= 2 && raw.front() == '\'' && raw.back() == '\'') return std::string(raw.substr(1, raw.size() - 2));
    if (raw.size() >= 2 && raw.front() == '"' && raw.back() == '"') {
        std::string out;
        for (std::size_t i = 1; i + 1 < raw.size(); ++i) {
            char c = raw[i];
            if (c == '\\' && i + 2 < raw.size()) {
                const char next = raw[++i];
                switch (next) {
                    case 'n': c = '\n'; break;
                    case 't': c = '\t'; break;
                    case '"': c = '"'; break;
                    case '\\': c = '\\'; break;
                    default: throw InvalidArgument(std::string("unsupported escape \\") + next);
                }
            }
            out.push_back(c);
        }
        return out;
    }
    std::string digits;
    for (char c : raw) {
        if (c != '_') digits.push_back(c);
    }
    char* end = nullptr;
    const double value = std::strtod(digits.c_str(), &end);
    if (digits.empty() || end != digits.c_str() + digits.size()) {
        throw InvalidArgument("cannot parse value '" + std::string(raw) + "'");
    }
    return value;
}

}  // namespace

ConfigTable ConfigTable::parse(std::string_view text, const std::string& origin) {
    ConfigTable table;
    table.origin_ = origin;
    std::string section;
    std::size_t line_no = 0;
    std::istringstream in{std::string(text)};
    std::string line_buf;
    while (std::getline(in, line_buf)) {
        ++line_no;
        const auto line = trim(strip_comment(line_buf));
        if (line.empty()) continue;
        auto fail = [&](const std::string& what) {
            throw InvalidArgument(origin + ":" + std::to_string(line_no) + ": " + what);
        };
        if (line.front() == '[') {
            if (line.back() != ']') fail("unterminated section header");
            section = std::string(trim(line.substr(1, line.size() - 2)));
            if (!bare_key(section)) fail("invalid section name '" + section + "'");
            continue;
        }
        const auto eq = line.find('=');
        if (eq == std::string_view::npos) fail("expected key = value");
        const auto key = trim(line.substr(0, eq));
        const auto raw = trim(line.substr(eq + 1));
        if (!bare_key(key)) fail("invalid key '" + std::string(key) + "'");
        const std::string full = section.empty() ? std::string(key) : section + "." + std::string(key);
        if (table.values_.contains(full)) fail("duplicate key '" + full + "'");
        try {
            table.values_.emplace(full, parse_value(raw));
        } catch (const InvalidArgument& e) {
            fail(e.what());
        }
    }
    return table;
}

ConfigTable ConfigTable::load(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) throw IoError("cannot open config " + path.string());
    std::stringstream buf;
    buf << in.rdbuf();
    return parse(buf.str(), path.string());
}

std::optional<double> ConfigTable::number(const std::string& key) const {
    auto it = values_.find(key);
    if (it == values_.end()) return std::nullopt;
    if (const auto* v = std::get_if<double>(&it->second)) return *v;
    throw InvalidArgument(origin_ + ": '" + key + "' must be a number");
}

std::optional<bool> ConfigTable::boolean(const std::string& key) const {
    auto it = values_.find(key);
    if (it == values_.end()) return std::nullopt;
    if (const auto* v = std::get_if<bool>(&it->second)) return *v;
    throw InvalidArgument(origin_ + ": '" + key + "' must be true or false");
}

std::optional<std::string> ConfigTable::string(const std::string& key) const {
    auto it = values_.find(key);
    if (it == values_.end()) return std::nullopt;
    if (const auto* v = std::get_if<std::string>(&it->second)) return *v;
    throw InvalidArgument(origin_ + ": '" + key + "' must be a string");
}

std::vector<std::string> ConfigTable::sections() const {
    std::set<std::string> out;
    for (const auto& [key, value] : values_) {
        const auto dot = key.find('.');
        out.insert(dot == std::string::npos ? std::string() : key.substr(0, dot));
    }
    return {out.begin(), out.end()};
}

std::vector<std::string> ConfigTable::keys_in(const std::string& section) const {
    std::vector<std::string> out;
    for (const auto& [key, value] : values_) {
        const auto dot = key.find('.');
        if (section.empty() ? dot == std::string::npos : (dot != std::string::npos && key.substr(0, dot) == section)) {
            out.push_back(section.empty() ? key : key.substr(dot + 1));
        }
    }
    return out;
}

namespace {

/// Looks a key up in `section`, falling back to the top level when allowed.
class SectionReader {
public:
    SectionReader(const ConfigTable& t, std::string section, bool top_level)
        : table_(t), section_(std::move(section)), top_level_(top_level) {}

    void number(const char* key, double& out) const {
        if (auto v = find(key, &ConfigTable::number)) out = *v;
    }
    void count(const char* key, std::size_t& out) const {
        if (auto v = find(key, &ConfigTable::number)) {
            if (*v < 0 || *v != static_cast<double>(static_cast<std::size_t>(*v))) {
                throw InvalidArgument(std::string("'") + key + "' must be a non-negative integer");
            }
            out = static_cast<std::size_t>(*v);
        }
    }
    void seed(const char* key, std::uint64_t& out) const {
        std::size_t v = out;
        count(key, v);
        out = v;
    }
    void boolean(const char* key, bool& out) const {
        if (auto v = find(key, &ConfigTable::boolean)) out = *v;
    }
    std::optional<std::string> string(const char* key) const { return find(key, &ConfigTable::string); }

private:
    template <typename T>
    std::optional<T> find(const char* key, std::optional<T> (ConfigTable::*get)(const std::string&) const) const {
        if (auto v = (table_.*get)(section_ + "." + key)) return v;
        if (top_level_) return (table_.*get)(key);
        return std::nullopt;
    }

    const ConfigTable& table_;
    std::string section_;
    bool top_level_;
};

}  // namespace

expertise::ExpertiseConfig read_expertise(const ConfigTable& t, bool top_level) {
    expertise::ExpertiseConfig c;
    const SectionReader r(t, "expertise", top_level);
    r.count("K", c.latent_dim);
    r.count("factorization_iterations", c.factorization_iterations);
    r.number("regularization", c.regularization);
    r.number("inference_threshold", c.inference_threshold);
    r.number("pagerank_damping", c.pagerank_damping);
    r.count("pagerank_iterations", c.pagerank_iterations);
    r.number("w_pagerank", c.w_pagerank);
    r.number("w_text", c.w_text);
    r.number("w_seniority", c.w_seniority);
    r.seed("seed", c.seed);
    c.validate();
    return c;
}

browsemap::BrowsemapConfig read_browsemap(const ConfigTable& t, bool top_level) {
    browsemap::BrowsemapConfig c;
    const SectionReader r(t, "browsemap", top_level);
    r.count("min_viewers", c.min_viewers);
    r.count("k_neighbors", c.k_neighbors);
    if (auto s = r.string("similarity")) {
        if (*s == "jaccard") {
            c.similarity = browsemap::Similarity::Jaccard;
        } else if (*s == "cosine") {
            c.similarity = browsemap::Similarity::Cosine;
        } else {
            throw InvalidArgument("browsemap similarity must be \"jaccard\" or \"cosine\"");
        }
    }
    return c;
}

query::QueryBuilderConfig read_query(const ConfigTable& t, bool top_level) {
    query::QueryBuilderConfig c;
    const SectionReader r(t, "query", top_level);
    r.count("n_skills", c.n_skills);
    r.count("n_companies", c.n_companies);
    r.count("n_suggestions", c.n_suggestions);
    r.boolean("include_past_titles", c.include_past_titles);
    return c;
}

ranking::RankerConfig read_ranker(const ConfigTable& t, bool top_level) {
    ranking::RankerConfig c;
    const SectionReader r(t, "ranker", top_level);
    r.number("v_expertise", c.v_expertise);
    r.number("v_text", c.v_text);
    r.number("v_geo", c.v_geo);
    r.number("v_social", c.v_social);
    r.number("decay", c.decay);
    c.validate();
    return c;
}

careersim::NodeSimWeights read_node_weights(const ConfigTable& t, bool top_level) {
    careersim::NodeSimWeights c;
    const SectionReader r(t, "careersim", top_level);
    r.number("w_company", c.w_company);
    r.number("w_title", c.w_title);
    r.number("w_industry", c.w_industry);
    r.number("w_duration", c.w_duration);
    r.number("w_text", c.w_text);
    r.number("bias", c.bias);
    if (auto s = r.string("link")) {
        if (*s == "identity") {
            c.link = careersim::Link::Identity;
        } else if (*s == "logistic") {
            c.link = careersim::Link::Logistic;
        } else {
            throw InvalidArgument("careersim link must be \"identity\" or \"logistic\"");
        }
    }
    c.validate();
    return c;
}

careersim::AlignmentConfig read_alignment(const ConfigTable& t, bool top_level) {
    careersim::AlignmentConfig c;
    const SectionReader r(t, "careersim", top_level);
    r.number("gap_penalty", c.gap_penalty);
    c.validate();
    return c;
}

ServiceConfig read_service(const ConfigTable& t, bool top_level) {
    ServiceConfig c;
    const SectionReader r(t, "service", top_level);
    r.count("page_size", c.page_size);
    r.count("max_ideal_candidates", c.max_ideal_candidates);
    r.boolean("include_ideal_candidates", c.include_ideal_candidates);
    if (auto s = r.string("session_store")) c.session_store = *s;
    return c;
}

void EngineConfig::validate() const {
    expertise.validate();
    ranker.validate();
    node_weights.validate();
    alignment.validate();
    if (service.max_ideal_candidates < 1) throw InvalidArgument("max_ideal_candidates must be >= 1");
}

EngineConfig read_engine_config(const ConfigTable& t) {
    static const std::map<std::string, std::set<std::string>> known = {
        {"expertise",
         {"K", "factorization_iterations", "regularization", "inference_threshold", "pagerank_damping",
          "pagerank_iterations", "w_pagerank", "w_text", "w_seniority", "seed"}},
        {"browsemap", {"min_viewers", "k_neighbors", "similarity"}},
        {"query", {"n_skills", "n_companies", "n_suggestions", "include_past_titles"}},
        {"ranker", {"v_expertise", "v_text", "v_geo", "v_social", "decay"}},
        {"careersim", {"w_company", "w_title", "w_industry", "w_duration", "w_text", "bias", "link", "gap_penalty"}},
        {"service", {"page_size", "max_ideal_candidates", "include_ideal_candidates", "session_store"}},
    };
    for (const auto& section : t.sections()) {
        auto it = known.find(section);
        if (it == known.end()) {
            throw InvalidArgument(section.empty() ? "merged config keys must live in a section"
                                                  : "unknown config section [" + section + "]");
        }
        for (const auto& key : t.keys_in(section)) {
            if (!it->second.contains(key)) throw InvalidArgument("unknown config key " + section + "." + key);
        }
    }
    EngineConfig c;
    c.expertise = read_expertise(t);
    c.browsemap = read_browsemap(t);
    c.query = read_query(t);
    c.ranker = read_ranker(t);
    c.node_weights = read_node_weights(t);
    c.alignment = read_alignment(t);
    c.service = read_service(t);
    c.validate();
    return c;
}

EngineConfig load_engine_config(const std::optional<std::filesystem::path>& path) {
    if (path) return read_engine_config(ConfigTable::load(*path));
    if (const char* env = std::getenv("EXEMPLAR_CONFIG"); env != nullptr && *env != '\0') {
        return read_engine_config(ConfigTable::load(env));
    }
    return EngineConfig{};
}

}  // namespace exemplar::config
