#include "exemplar/corpus.hpp"

#include <fstream>

#include "exemplar/error.hpp"
#include "exemplar/serialization.hpp"
#include "exemplar/snapshot.hpp"
#include "exemplar/title_standardizer.hpp"
#include "exemplar/validate.hpp"

namespace exemplar {

using nlohmann::json;

const MemberProfile& Corpus::profile(const MemberId& id) const {
    auto it = profiles.find(id);
    if (it == profiles.end()) throw NotFound("unknown member " + id);
    return it->second;
}

const MemberProfile* Corpus::find(const MemberId& id) const {
    auto it = profiles.find(id);
    return it == profiles.end() ? nullptr : &it->second;
}

const std::string& Corpus::company_name(const CompanyId& id) const {
    auto it = companies.find(id);
    return it == companies.end() ? id : it->second;
}

std::set<IndustryId> Corpus::industry_ids() const {
    std::set<IndustryId> out;
    for (const auto& [id, p] : profiles) {
        if (!p.industry_id.empty()) out.insert(p.industry_id);
        for (const auto& pos : p.positions) {
            if (!pos.industry_id.empty()) out.insert(pos.industry_id);
        }
    }
    return out;
}

std::set<RegionId> Corpus::region_ids() const {
    std::set<RegionId> out;
    for (const auto& [id, p] : profiles) {
        if (!p.location.region_id.empty()) out.insert(p.location.region_id);
    }
    return out;
}

namespace {

template <typename Fn>
std::size_t for_each_record(const std::filesystem::path& path, Fn&& fn) {
    std::ifstream in(path);
    if (!in) throw IoError("cannot open " + path.string());
    std::string line;
    std::size_t line_no = 0;
    std::size_t records = 0;
    while (std::getline(in, line)) {
        ++line_no;
        if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
        try {
            fn(json::parse(line));
        } catch (const json::exception& e) {
            throw MalformedRecord(path.string(), line_no, e.what());
        } catch (const InvalidArgument& e) {
            throw MalformedRecord(path.string(), line_no, e.what());
        }
        ++records;
    }
    if (in.bad()) throw IoError("read failure on " + path.string());
    return records;
}

void write_lines(const std::filesystem::path& path, const std::vector<json>& records) {
    std::ofstream out(path, std::ios::trunc);
    if (!out) throw IoError("cannot write " + path.string());
    for (const auto& r : records) out << r.dump() << '\n';
    if (!out) throw IoError("short write to " + path.string());
}

}  // namespace

LoadedCorpus assemble_corpus(std::vector<MemberProfile> profiles,
                             SkillTaxonomy taxonomy,
                             std::vector<Endorsement> endorsements,
                             std::vector<CoView> coviews,
                             YearMonth as_of,
                             TitleCatalog titles,
                             std::map<CompanyId, std::string> companies) {
    if (profiles.empty()) throw InvalidArgument("empty corpus");

    LoadSummary summary;
    summary.profiles = profiles.size();

    for (const auto& p : profiles) {
        for (const auto& pos : p.positions) {
            if (!pos.company_id.empty()) companies.try_emplace(pos.company_id, pos.company_id);
        }
    }

    if (titles.titles.empty()) {
        std::vector<std::string> raw;
        for (const auto& p : profiles) {
            for (const auto& pos : p.positions) raw.push_back(pos.raw_title);
        }
        titles = query::catalog_from_raw_titles(raw);
    }
    const query::TitleStandardizer standardizer(titles);
    for (auto& p : profiles) {
        for (auto& pos : p.positions) {
            if (!pos.title_id.empty() && titles.contains(pos.title_id)) continue;
            if (!pos.title_id.empty()) {
                summary.warnings.push_back("member " + p.member_id + ": unknown title_id " + pos.title_id +
                                           " re-standardized from raw title");
            }
            pos.title_id = standardizer.standardize(pos.raw_title).value_or(TitleId{});
        }
    }

    std::set<MemberId> members;
    for (const auto& p : profiles) members.insert(p.member_id);

    for (auto& p : profiles) {
        for (auto it = p.connection_ids.begin(); it != p.connection_ids.end();) {
            if (members.contains(*it)) {
                ++it;
                continue;
            }
            summary.warnings.push_back("member " + p.member_id + ": dropped dangling connection " + *it);
            ++summary.pruned_connections;
            it = p.connection_ids.erase(it);
        }
    }

    auto graph = EndorsementGraph::from_edges(std::move(endorsements));
    std::erase_if(graph.edges, [&](const Endorsement& e) {
        if (members.contains(e.endorser) && members.contains(e.endorsed)) return false;
        summary.warnings.push_back("dropped endorsement " + e.endorser + " -> " + e.endorsed + " (" + e.skill_id +
                                   "): unknown member");
        ++summary.pruned_endorsements;
        return true;
    });

    auto log = CoViewLog::from_events(std::move(coviews));
    std::erase_if(log.events, [&](const CoView& v) {
        if (companies.contains(v.company_id)) return false;
        summary.warnings.push_back("dropped co-view " + v.viewer + " -> " + v.company_id + ": unknown company");
        ++summary.pruned_coviews;
        return true;
    });

    std::set<CompanyId> known_companies;
    for (const auto& [id, name] : companies) known_companies.insert(id);
    auto report = validate_corpus(profiles, taxonomy, graph, log, known_companies);
    if (!report.accepted()) throw CorpusRejected(std::move(report));

    Corpus corpus;
    for (auto& p : profiles) corpus.profiles.emplace(p.member_id, std::move(p));
    corpus.taxonomy = std::move(taxonomy);
    corpus.endorsements = std::move(graph);
    corpus.coviews = std::move(log);
    corpus.as_of = as_of;
    corpus.titles = std::move(titles);
    corpus.companies = std::move(companies);
    return {std::move(corpus), std::move(summary)};
}

LoadedCorpus load_corpus(const CorpusPaths& paths, YearMonth as_of) {
    std::vector<MemberProfile> profiles;
    for_each_record(paths.profiles, [&](const json& j) { profiles.push_back(j.get<MemberProfile>()); });
    if (profiles.empty()) throw InvalidArgument("empty corpus");

    SkillTaxonomy taxonomy;
    for_each_record(paths.taxonomy, [&](const json& j) {
        auto [id, entry] = parse_skill_record(j);
        if (!taxonomy.skills.emplace(id, std::move(entry)).second) {
            throw InvalidArgument("duplicate skill_id " + id);
        }
    });

    std::vector<Endorsement> endorsements;
    for_each_record(paths.endorsements, [&](const json& j) { endorsements.push_back(j.get<Endorsement>()); });

    std::vector<CoView> coviews;
    for_each_record(paths.coviews, [&](const json& j) { coviews.push_back(j.get<CoView>()); });

    TitleCatalog titles;
    if (paths.titles) {
        for_each_record(*paths.titles, [&](const json& j) {
            auto [id, entry] = parse_title_record(j);
            if (!titles.titles.emplace(id, std::move(entry)).second) {
                throw InvalidArgument("duplicate title_id " + id);
            }
        });
    }

    std::map<CompanyId, std::string> companies;
    if (paths.companies) {
        for_each_record(*paths.companies, [&](const json& j) {
            companies[j.at("company_id").get<std::string>()] = j.at("name").get<std::string>();
        });
    }

    return assemble_corpus(std::move(profiles), std::move(taxonomy), std::move(endorsements), std::move(coviews),
                           as_of, std::move(titles), std::move(companies));
}

CorpusPaths write_corpus_jsonl(const Corpus& corpus, const std::filesystem::path& dir) {
    std::filesystem::create_directories(dir);
    CorpusPaths paths{dir / "profiles.jsonl",      dir / "taxonomy.jsonl", dir / "endorsements.jsonl",
                      dir / "coviews.jsonl",       dir / "titles.jsonl",   dir / "companies.jsonl"};

    std::vector<json> records;
    for (const auto& [id, p] : corpus.profiles) records.emplace_back(p);
    write_lines(paths.profiles, records);

    records.clear();
    for (const auto& [id, entry] : corpus.taxonomy.skills) records.push_back(skill_record(id, entry));
    write_lines(paths.taxonomy, records);

    records.clear();
    for (const auto& e : corpus.endorsements.edges) records.emplace_back(e);
    write_lines(paths.endorsements, records);

    records.clear();
    for (const auto& v : corpus.coviews.events) records.emplace_back(v);
    write_lines(paths.coviews, records);

    records.clear();
    for (const auto& [id, entry] : corpus.titles.titles) records.push_back(title_record(id, entry));
    write_lines(*paths.titles, records);

    records.clear();
    for (const auto& [id, name] : corpus.companies) records.push_back(json{{"company_id", id}, {"name", name}});
    write_lines(*paths.companies, records);
    return paths;
}

json corpus_to_json(const Corpus& corpus) {
    json profiles = json::array();
    for (const auto& [id, p] : corpus.profiles) profiles.push_back(p);
    json taxonomy = json::array();
    for (const auto& [id, entry] : corpus.taxonomy.skills) taxonomy.push_back(skill_record(id, entry));
    json titles = json::array();
    for (const auto& [id, entry] : corpus.titles.titles) titles.push_back(title_record(id, entry));
    return json{{"profiles", std::move(profiles)},
                {"taxonomy", std::move(taxonomy)},
                {"endorsements", corpus.endorsements.edges},
                {"coviews", corpus.coviews.events},
                {"as_of", corpus.as_of},
                {"titles", std::move(titles)},
                {"companies", corpus.companies}};
}

Corpus corpus_from_json(const json& j) {
    Corpus corpus;
    for (const auto& p : j.at("profiles")) {
        auto profile = p.get<MemberProfile>();
        auto id = profile.member_id;
        corpus.profiles.emplace(std::move(id), std::move(profile));
    }
    for (const auto& s : j.at("taxonomy")) corpus.taxonomy.skills.insert(parse_skill_record(s));
    corpus.endorsements.edges = j.at("endorsements").get<std::vector<Endorsement>>();
    corpus.coviews.events = j.at("coviews").get<std::vector<CoView>>();
    corpus.as_of = j.at("as_of").get<YearMonth>();
    for (const auto& t : j.at("titles")) corpus.titles.titles.insert(parse_title_record(t));
    corpus.companies = j.at("companies").get<std::map<CompanyId, std::string>>();
    return corpus;
}

void save_corpus(const Corpus& corpus, const std::filesystem::path& path) {
    snapshot::write(path, "corpus", corpus_to_json(corpus));
}

Corpus read_corpus(const std::filesystem::path& path) {
    try {
        return corpus_from_json(snapshot::read(path, "corpus"));
    } catch (const json::exception& e) {
        throw IoError("corrupt corpus snapshot " + path.string() + ": " + e.what());
    }
}

std::uint64_t corpus_fingerprint(const Corpus& corpus) {
    return snapshot::fingerprint(snapshot::encode("corpus", corpus_to_json(corpus)));
}

}  // namespace exemplar
