#pragma once

#include <compare>
#include <cstddef>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <vector>

namespace exemplar {

using MemberId = std::string;
using SkillId = std::string;
using CompanyId = std::string;
using TitleId = std::string;
using IndustryId = std::string;
using RegionId = std::string;

/// Calendar month, e.g. 2016-01.
struct YearMonth {
    int year = 1970;
    int month = 1;

    /// Parses "YYYY-MM"; throws InvalidArgument otherwise.
    static YearMonth parse(std::string_view text);
    std::string to_string() const;

    /// Months since year 0, so differences are month counts.
    int ordinal() const { return year * 12 + (month - 1); }

    friend auto operator<=>(const YearMonth&, const YearMonth&) = default;
};

int months_between(const YearMonth& from, const YearMonth& to);

struct Coordinates {
    double latitude = 0.0;
    double longitude = 0.0;

    friend bool operator==(const Coordinates&, const Coordinates&) = default;
};

struct LocationTag {
    RegionId region_id;
    std::optional<Coordinates> coordinates;

    friend bool operator==(const LocationTag&, const LocationTag&) = default;
};

struct Position {
    CompanyId company_id;
    std::string raw_title;
    TitleId title_id;  // empty until standardized
    IndustryId industry_id;
    YearMonth start;
    std::optional<YearMonth> end;  // nullopt is an open (current) position
    std::string summary;

    bool is_open() const { return !end.has_value(); }

    friend bool operator==(const Position&, const Position&) = default;
};

struct MemberProfile {
    MemberId member_id;
    std::string name;
    std::string headline;
    LocationTag location;
    IndustryId industry_id;
    std::set<SkillId> skill_ids;
    std::vector<Position> positions;  // most recent first
    std::set<std::string> school_ids;
    std::set<std::string> group_ids;
    std::set<MemberId> connection_ids;

    /// Open-ended positions; falls back to the most recent position when none is open.
    std::vector<const Position*> current_positions() const;
    std::vector<const Position*> past_positions() const;

    friend bool operator==(const MemberProfile&, const MemberProfile&) = default;
};

struct SkillEntry {
    std::string name;
    std::vector<std::string> aliases;

    friend bool operator==(const SkillEntry&, const SkillEntry&) = default;
};

struct SkillTaxonomy {
    std::map<SkillId, SkillEntry> skills;

    bool contains(const SkillId& id) const { return skills.contains(id); }
    /// Canonical name, or the id itself when unknown.
    const std::string& name_of(const SkillId& id) const;

    friend bool operator==(const SkillTaxonomy&, const SkillTaxonomy&) = default;
};

/// Canonical title entities plus their raw-title variants.
struct TitleEntry {
    std::string name;
    std::vector<std::string> aliases;

    friend bool operator==(const TitleEntry&, const TitleEntry&) = default;
};

struct TitleCatalog {
    std::map<TitleId, TitleEntry> titles;

    bool contains(const TitleId& id) const { return titles.contains(id); }
    const std::string& name_of(const TitleId& id) const;

    friend bool operator==(const TitleCatalog&, const TitleCatalog&) = default;
};

struct Endorsement {
    MemberId endorser;
    MemberId endorsed;
    SkillId skill_id;

    friend auto operator<=>(const Endorsement&, const Endorsement&) = default;
};

/// Edges are kept sorted and duplicate-free.
struct EndorsementGraph {
    std::vector<Endorsement> edges;

    static EndorsementGraph from_edges(std::vector<Endorsement> edges);

    friend bool operator==(const EndorsementGraph&, const EndorsementGraph&) = default;
};

struct CoView {
    MemberId viewer;
    CompanyId company_id;

    friend auto operator<=>(const CoView&, const CoView&) = default;
};

/// Binary viewer→company relation; events sorted and duplicate-free.
struct CoViewLog {
    std::vector<CoView> events;

    static CoViewLog from_events(std::vector<CoView> events);

    friend bool operator==(const CoViewLog&, const CoViewLog&) = default;
};

struct Searcher {
    MemberId member_id;
};

/// Ordered 1..cap distinct member ids. Construction enforces the invariants.
class IdealCandidateSet {
public:
    static constexpr std::size_t kDefaultCap = 3;

    explicit IdealCandidateSet(std::vector<MemberId> ids, std::size_t cap = kDefaultCap);

    const std::vector<MemberId>& ids() const { return ids_; }
    std::size_t size() const { return ids_.size(); }
    bool contains(const MemberId& id) const;

private:
    std::vector<MemberId> ids_;
};

}  // namespace exemplar
