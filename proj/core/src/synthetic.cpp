#include "exemplar/synthetic.hpp"

#include <algorithm>
#include <array>
#include <random>
#include <set>

#include "exemplar/error.hpp"

namespace exemplar {

namespace {

struct NamedEntity {
    const char* name;
    std::vector<const char*> aliases;
};

struct Archetype {
    const char* tag;
    const char* industry;
    std::vector<NamedEntity> skills;
    std::vector<const char*> companies;
    std::vector<NamedEntity> titles;  // ordered junior to senior
    std::vector<const char*> schools;
    std::vector<const char*> groups;
};

const std::vector<Archetype>& archetype_pool() {
    static const std::vector<Archetype> pool = {
        {"search",
         "internet",
         {{"machine learning", {"ml"}},
          {"information retrieval", {"ir"}},
          {"learning to rank", {"ltr"}},
          {"search", {}},
          {"python", {}},
          {"scalability", {}},
          {"natural language processing", {"nlp"}},
          {"recommender systems", {}}},
         {"LinkedIn", "Google", "Facebook", "Twitter", "Microsoft"},
         {{"software engineer", {"swe", "software developer"}},
          {"senior software engineer", {"sr. software engineer"}},
          {"tech lead", {"technical lead", "tech-lead"}},
          {"staff software engineer", {"staff engineer"}}},
         {"stanford", "cmu"},
         {"sigir-community", "ml-practitioners"}},
        {"backend",
         "enterprise-software",
         {{"java", {}},
          {"distributed systems", {}},
          {"scala", {}},
          {"kafka", {"apache kafka"}},
          {"databases", {}},
          {"microservices", {}},
          {"c++", {"cpp"}},
          {"linux", {}}},
         {"Amazon", "Oracle", "IBM", "SAP", "VMware"},
         {{"backend engineer", {"back end engineer", "server engineer"}},
          {"platform engineer", {}},
          {"principal engineer", {}},
          {"engineering manager", {"eng manager"}}},
         {"uiuc", "georgia-tech"},
         {"jvm-users", "distributed-systems-meetup"}},
        {"frontend",
         "consumer-web",
         {{"javascript", {"js"}},
          {"react", {"reactjs"}},
          {"css", {}},
          {"html", {}},
          {"typescript", {}},
          {"web accessibility", {"a11y"}},
          {"node.js", {"nodejs"}},
          {"web performance", {}}},
         {"Airbnb", "Shopify", "Spotify", "Pinterest", "Dropbox"},
         {{"web developer", {"web dev"}},
          {"frontend engineer", {"front end engineer", "front-end developer"}},
          {"ui engineer", {"user interface engineer"}},
          {"frontend lead", {}}},
         {"uw", "ucla"},
         {"react-meetup", "web-perf"}},
        {"analytics",
         "analytics",
         {{"sql", {}},
          {"statistics", {}},
          {"tableau", {}},
          {"excel", {"microsoft excel"}},
          {"data visualization", {"dataviz"}},
          {"r", {"r language"}},
          {"a/b testing", {"ab testing"}},
          {"forecasting", {}}},
         {"Nielsen", "Gartner", "Deloitte", "Accenture", "Palantir"},
         {{"data analyst", {}},
          {"business analyst", {}},
          {"data scientist", {}},
          {"analytics manager", {}}},
         {"nyu", "columbia"},
         {"data-viz-society", "analytics-leaders"}},
        {"sales",
         "sales-services",
         {{"sales", {}},
          {"negotiation", {}},
          {"account management", {}},
          {"crm", {"customer relationship management"}},
          {"lead generation", {}},
          {"salesforce.com", {}},
          {"b2b", {"business to business"}},
          {"cold calling", {}}},
         {"Salesforce", "HubSpot", "Zendesk", "Workday", "Zoho"},
         {{"sales development representative", {"sdr"}},
          {"account executive", {"ae"}},
          {"sales manager", {}},
          {"vp sales", {"vice president sales"}}},
         {"babson", "bentley"},
         {"saas-sales", "revenue-leaders"}},
        {"design",
         "design-services",
         {{"user research", {}},
          {"figma", {}},
          {"prototyping", {}},
          {"interaction design", {}},
          {"visual design", {}},
          {"typography", {}},
          {"illustration", {}},
          {"branding", {}}},
         {"Adobe", "IDEO", "Frog", "Pentagram", "Canva"},
         {{"ux designer", {"user experience designer"}},
          {"product designer", {}},
          {"senior product designer", {"sr product designer"}},
          {"design lead", {}}},
         {"risd", "parsons"},
         {"aiga", "ux-collective"}},
    };
    return pool;
}

struct Region {
    const char* id;
    double latitude;
    double longitude;
};

constexpr std::array<Region, 5> kRegions = {{{"sf-bay", 37.7749, -122.4194},
                                             {"nyc", 40.7128, -74.0060},
                                             {"seattle", 47.6062, -122.3321},
                                             {"montreal", 45.5019, -73.5674},
                                             {"london", 51.5074, -0.1278}}};

std::string slug(std::string_view name) {
    std::string out;
    bool dash = false;
    for (char c : name) {
        const auto u = static_cast<unsigned char>(c);
        if (std::isalnum(u) || c == '+') {
            if (dash && !out.empty()) out.push_back('-');
            dash = false;
            out.push_back(static_cast<char>(std::tolower(u)));
        } else {
            dash = true;
        }
    }
    return out;
}

/// Distribution-free draws so output is identical across standard libraries.
class Draw {
public:
    explicit Draw(std::uint64_t seed) : rng_(seed) {}

    std::size_t below(std::size_t n) { return static_cast<std::size_t>(rng_() % n); }
    double unit() { return static_cast<double>(rng_() >> 11) * 0x1.0p-53; }
    bool chance(double p) { return unit() < p; }
    int between(int lo, int hi) { return lo + static_cast<int>(below(static_cast<std::size_t>(hi - lo + 1))); }

    template <typename T>
    const T& pick(const std::vector<T>& items) {
        return items[below(items.size())];
    }

private:
    std::mt19937_64 rng_;
};

std::string member_id(std::size_t i) {
    char buf[16];
    std::snprintf(buf, sizeof buf, "m%04zu", i);
    return buf;
}

YearMonth minus_months(YearMonth ym, int months) {
    const int ordinal = ym.ordinal() - months;
    return YearMonth{ordinal / 12, ordinal % 12 + 1};
}

}  // namespace

SyntheticCorpus generate_synthetic(std::uint64_t seed, std::size_t n_members, std::size_t n_skills,
                                   std::size_t n_companies) {
    if (n_members == 0) throw InvalidArgument("n_members must be >= 1");
    if (n_skills == 0) throw InvalidArgument("n_skills must be >= 1");
    if (n_companies == 0) throw InvalidArgument("n_companies must be >= 1");

    const auto& pool = archetype_pool();
    const std::size_t n_arch = std::clamp<std::size_t>(std::min(n_skills / 4, n_companies / 2), 1, pool.size());

    Draw draw(seed);
    SyntheticCorpus out;
    out.archetypes = n_arch;
    out.archetype_skills.resize(n_arch);
    out.archetype_companies.resize(n_arch);

    SkillTaxonomy taxonomy;
    for (std::size_t idx = 0; idx < n_skills; ++idx) {
        const std::size_t a = idx % n_arch;
        const std::size_t rank = idx / n_arch;
        SkillEntry entry;
        if (rank < pool[a].skills.size()) {
            entry.name = pool[a].skills[rank].name;
            for (const char* alias : pool[a].skills[rank].aliases) entry.aliases.emplace_back(alias);
        } else {
            entry.name = std::string(pool[a].tag) + " skill " + std::to_string(rank);
        }
        const auto id = slug(entry.name);
        out.archetype_skills[a].push_back(id);
        taxonomy.skills.emplace(id, std::move(entry));
    }

    std::map<CompanyId, std::string> companies;
    for (std::size_t idx = 0; idx < n_companies; ++idx) {
        const std::size_t a = idx % n_arch;
        const std::size_t rank = idx / n_arch;
        std::string name = rank < pool[a].companies.size()
                               ? std::string(pool[a].companies[rank])
                               : std::string(pool[a].tag) + " Company " + std::to_string(rank);
        const auto id = slug(name);
        out.archetype_companies[a].push_back(id);
        companies.emplace(id, std::move(name));
    }

    TitleCatalog titles;
    for (std::size_t a = 0; a < n_arch; ++a) {
        for (const auto& t : pool[a].titles) {
            TitleEntry entry{t.name, {}};
            for (const char* alias : t.aliases) entry.aliases.emplace_back(alias);
            titles.titles.emplace(slug(t.name), std::move(entry));
        }
    }

    const YearMonth as_of{2016, 1};
    std::vector<MemberProfile> profiles(n_members);
    std::vector<std::size_t> arch(n_members);
    for (std::size_t i = 0; i < n_members; ++i) {
        const std::size_t a = draw.below(n_arch);
        arch[i] = a;
        const auto& archetype = pool[a];
        auto& p = profiles[i];
        p.member_id = member_id(i);
        out.archetype_of[p.member_id] = a;
        p.name = "Member " + std::to_string(i);
        p.industry_id = archetype.industry;

        const auto& own_skills = out.archetype_skills[a];
        for (const auto& s : own_skills) {
            if (draw.chance(0.7)) p.skill_ids.insert(s);
        }
        while (p.skill_ids.size() < std::min<std::size_t>(2, own_skills.size())) {
            p.skill_ids.insert(draw.pick(own_skills));
        }
        if (n_arch > 1 && draw.chance(0.3)) {
            const std::size_t other = (a + 1 + draw.below(n_arch - 1)) % n_arch;
            p.skill_ids.insert(draw.pick(out.archetype_skills[other]));
        }

        const auto& region = kRegions[draw.below(kRegions.size())];
        p.location.region_id = region.id;
        if (draw.chance(0.9)) p.location.coordinates = Coordinates{region.latitude, region.longitude};

        const int n_positions = draw.between(1, 4);
        YearMonth cursor = as_of;
        const std::size_t seniority_base = draw.below(2);
        for (int k = 0; k < n_positions; ++k) {
            Position pos;
            const bool in_archetype = n_arch == 1 || draw.chance(0.85);
            const std::size_t company_arch = in_archetype ? a : draw.below(n_arch);
            pos.company_id = draw.pick(out.archetype_companies[company_arch]);
            const std::size_t title_rank =
                std::min(archetype.titles.size() - 1,
                         seniority_base + static_cast<std::size_t>(n_positions - 1 - k));
            const auto& title = archetype.titles[title_rank];
            pos.raw_title = title.name;
            if (!title.aliases.empty() && draw.chance(0.3)) pos.raw_title = draw.pick(title.aliases);
            if (draw.chance(0.3)) pos.raw_title[0] = static_cast<char>(std::toupper(pos.raw_title[0]));
            pos.industry_id = pool[company_arch].industry;
            const int duration = draw.between(6, 48);
            if (k > 0) {
                pos.end = minus_months(cursor, draw.between(0, 3));
                pos.start = minus_months(*pos.end, duration);
            } else {
                pos.start = minus_months(cursor, duration);
            }
            cursor = pos.start;
            std::string summary = "Worked on";
            for (int w = 0; w < 2; ++w) {
                summary += " " + taxonomy.name_of(draw.pick(own_skills));
                summary += w == 0 ? " and" : "";
            }
            summary += " at " + companies.at(pos.company_id) + ".";
            pos.summary = std::move(summary);
            p.positions.push_back(std::move(pos));
        }
        const std::size_t current_rank =
            std::min(archetype.titles.size() - 1, seniority_base + static_cast<std::size_t>(n_positions - 1));
        p.headline = std::string(archetype.titles[current_rank].name) + " at " +
                     companies.at(p.positions.front().company_id);

        p.school_ids.insert(draw.chance(0.8) ? archetype.schools[draw.below(archetype.schools.size())]
                                             : pool[draw.below(n_arch)].schools[0]);
        if (draw.chance(0.6)) p.group_ids.insert(archetype.groups[draw.below(archetype.groups.size())]);
    }

    if (n_members > 1) {
        for (std::size_t i = 0; i < n_members; ++i) {
            const int wanted = draw.between(1, 3);
            for (int c = 0; c < wanted; ++c) {
                const std::size_t j = draw.below(n_members);
                if (j == i) continue;
                if (arch[j] != arch[i] && draw.chance(0.7)) continue;
                profiles[i].connection_ids.insert(profiles[j].member_id);
                profiles[j].connection_ids.insert(profiles[i].member_id);
            }
        }
    }

    std::vector<Endorsement> endorsements;
    for (std::size_t i = 0; i < n_members; ++i) {
        for (const auto& friend_id : profiles[i].connection_ids) {
            const auto j = static_cast<std::size_t>(std::stoul(friend_id.substr(1)));
            const auto& skills = profiles[j].skill_ids;
            if (skills.empty() || !draw.chance(0.8)) continue;
            auto it = skills.begin();
            std::advance(it, static_cast<std::ptrdiff_t>(draw.below(skills.size())));
            endorsements.push_back({profiles[i].member_id, profiles[j].member_id, *it});
        }
    }

    std::vector<CoView> coviews;
    for (std::size_t i = 0; i < n_members; ++i) {
        for (int v = 0; v < 3; ++v) {
            const std::size_t company_arch = draw.chance(0.8) ? arch[i] : draw.below(n_arch);
            coviews.push_back({profiles[i].member_id, draw.pick(out.archetype_companies[company_arch])});
        }
        for (const auto& pos : profiles[i].positions) coviews.push_back({profiles[i].member_id, pos.company_id});
    }

    auto loaded = assemble_corpus(std::move(profiles), std::move(taxonomy), std::move(endorsements),
                                  std::move(coviews), as_of, std::move(titles), std::move(companies));
    out.corpus = std::move(loaded.corpus);
    return out;
}

}  // namespace exemplar
