#include "exemplar/serialization.hpp"

#include "exemplar/error.hpp"

namespace exemplar {

using nlohmann::json;

namespace {

template <typename T>
T optional_field(const json& j, const char* key, T fallback = {}) {
    auto it = j.find(key);
    if (it == j.end() || it->is_null()) return fallback;
    return it->get<T>();
}

std::string required_string(const json& j, const char* key) {
    auto it = j.find(key);
    if (it == j.end() || !it->is_string()) {
        throw InvalidArgument(std::string("missing or non-string field '") + key + "'");
    }
    return it->get<std::string>();
}

}  // namespace

void to_json(json& j, const YearMonth& v) { j = v.to_string(); }

void from_json(const json& j, YearMonth& v) { v = YearMonth::parse(j.get<std::string>()); }

void to_json(json& j, const LocationTag& v) {
    j = json{{"region_id", v.region_id}};
    if (v.coordinates) {
        j["coordinates"] = json{{"latitude", v.coordinates->latitude}, {"longitude", v.coordinates->longitude}};
    } else {
        j["coordinates"] = nullptr;
    }
}

void from_json(const json& j, LocationTag& v) {
    v.region_id = optional_field<std::string>(j, "region_id");
    v.coordinates.reset();
    auto it = j.find("coordinates");
    if (it != j.end() && !it->is_null()) {
        v.coordinates = Coordinates{it->at("latitude").get<double>(), it->at("longitude").get<double>()};
    }
}

void to_json(json& j, const Position& v) {
    j = json{{"company_id", v.company_id},
             {"raw_title", v.raw_title},
             {"title_id", v.title_id},
             {"industry_id", v.industry_id},
             {"start", v.start},
             {"end", v.end ? json(v.end->to_string()) : json("OPEN")},
             {"summary", v.summary}};
}

void from_json(const json& j, Position& v) {
    v.company_id = required_string(j, "company_id");
    v.raw_title = optional_field<std::string>(j, "raw_title");
    v.title_id = optional_field<std::string>(j, "title_id");
    v.industry_id = optional_field<std::string>(j, "industry_id");
    v.start = YearMonth::parse(required_string(j, "start"));
    const auto end = optional_field<std::string>(j, "end", "OPEN");
    if (end == "OPEN") {
        v.end.reset();
    } else {
        v.end = YearMonth::parse(end);
    }
    v.summary = optional_field<std::string>(j, "summary");
}

void to_json(json& j, const MemberProfile& v) {
    j = json{{"member_id", v.member_id},
             {"name", v.name},
             {"headline", v.headline},
             {"location", v.location},
             {"industry_id", v.industry_id},
             {"skill_ids", v.skill_ids},
             {"positions", v.positions},
             {"school_ids", v.school_ids},
             {"group_ids", v.group_ids},
             {"connection_ids", v.connection_ids}};
}

void from_json(const json& j, MemberProfile& v) {
    v.member_id = required_string(j, "member_id");
    v.name = optional_field<std::string>(j, "name");
    v.headline = optional_field<std::string>(j, "headline");
    v.location = optional_field<LocationTag>(j, "location");
    v.industry_id = optional_field<std::string>(j, "industry_id");
    v.skill_ids = optional_field<std::set<SkillId>>(j, "skill_ids");
    v.positions = optional_field<std::vector<Position>>(j, "positions");
    v.school_ids = optional_field<std::set<std::string>>(j, "school_ids");
    v.group_ids = optional_field<std::set<std::string>>(j, "group_ids");
    v.connection_ids = optional_field<std::set<MemberId>>(j, "connection_ids");
}

void to_json(json& j, const Endorsement& v) {
    j = json{{"endorser_member_id", v.endorser}, {"endorsed_member_id", v.endorsed}, {"skill_id", v.skill_id}};
}

void from_json(const json& j, Endorsement& v) {
    v.endorser = required_string(j, "endorser_member_id");
    v.endorsed = required_string(j, "endorsed_member_id");
    v.skill_id = required_string(j, "skill_id");
}

void to_json(json& j, const CoView& v) {
    j = json{{"viewer_member_id", v.viewer}, {"company_id", v.company_id}};
}

void from_json(const json& j, CoView& v) {
    v.viewer = required_string(j, "viewer_member_id");
    v.company_id = required_string(j, "company_id");
}

json skill_record(const SkillId& id, const SkillEntry& entry) {
    return json{{"skill_id", id}, {"name", entry.name}, {"aliases", entry.aliases}};
}

std::pair<SkillId, SkillEntry> parse_skill_record(const json& j) {
    return {required_string(j, "skill_id"),
            SkillEntry{required_string(j, "name"), optional_field<std::vector<std::string>>(j, "aliases")}};
}

json title_record(const TitleId& id, const TitleEntry& entry) {
    return json{{"title_id", id}, {"name", entry.name}, {"aliases", entry.aliases}};
}

std::pair<TitleId, TitleEntry> parse_title_record(const json& j) {
    return {required_string(j, "title_id"),
            TitleEntry{required_string(j, "name"), optional_field<std::vector<std::string>>(j, "aliases")}};
}

}  // namespace exemplar
