#pragma once

#include <nlohmann/json.hpp>

#include "exemplar/domain.hpp"

// JSON mappings for the domain types. Field names match the struct members; an open position
// end is written as "OPEN" and year-months as "YYYY-MM".
namespace exemplar {

void to_json(nlohmann::json& j, const YearMonth& v);
void from_json(const nlohmann::json& j, YearMonth& v);

void to_json(nlohmann::json& j, const LocationTag& v);
void from_json(const nlohmann::json& j, LocationTag& v);

void to_json(nlohmann::json& j, const Position& v);
void from_json(const nlohmann::json& j, Position& v);

void to_json(nlohmann::json& j, const MemberProfile& v);
void from_json(const nlohmann::json& j, MemberProfile& v);

void to_json(nlohmann::json& j, const Endorsement& v);
void from_json(const nlohmann::json& j, Endorsement& v);

void to_json(nlohmann::json& j, const CoView& v);
void from_json(const nlohmann::json& j, CoView& v);

/// One taxonomy line: {"skill_id", "name", "aliases"}.
nlohmann::json skill_record(const SkillId& id, const SkillEntry& entry);
std::pair<SkillId, SkillEntry> parse_skill_record(const nlohmann::json& j);

/// One title catalog line: {"title_id", "name", "aliases"}.
nlohmann::json title_record(const TitleId& id, const TitleEntry& entry);
std::pair<TitleId, TitleEntry> parse_title_record(const nlohmann::json& j);

}  // namespace exemplar
