#pragma once

#include <filesystem>
#include <initializer_list>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "exemplar/corpus.hpp"

namespace exemplar::testing {

inline Position position(std::string company, std::string title, std::string start,
                         std::optional<std::string> end = std::nullopt, std::string industry = "software",
                         std::string summary = "") {
    Position p;
    p.company_id = std::move(company);
    p.raw_title = std::move(title);
    p.industry_id = std::move(industry);
    p.start = YearMonth::parse(start);
    if (end) p.end = YearMonth::parse(*end);
    p.summary = std::move(summary);
    return p;
}

inline MemberProfile member(std::string id, std::initializer_list<std::string> skills,
                            std::vector<Position> positions = {}, std::string region = "sf-bay") {
    MemberProfile m;
    m.member_id = id;
    m.name = "Member " + id;
    m.headline = "engineer";
    m.location.region_id = std::move(region);
    m.industry_id = "software";
    m.skill_ids = skills;
    m.positions = std::move(positions);
    return m;
}

inline SkillTaxonomy taxonomy(std::initializer_list<std::string> ids) {
    SkillTaxonomy t;
    for (const auto& id : ids) t.skills[id] = SkillEntry{id, {}};
    return t;
}

/// Scratch directory removed on destruction.
class TempDir {
public:
    TempDir() {
        std::random_device rd;
        path_ = std::filesystem::temp_directory_path() / ("exemplar-test-" + std::to_string(rd()) + std::to_string(rd()));
        std::filesystem::create_directories(path_);
    }
    ~TempDir() {
        std::error_code ec;
        std::filesystem::remove_all(path_, ec);
    }
    TempDir(const TempDir&) = delete;
    TempDir& operator=(const TempDir&) = delete;

    const std::filesystem::path& path() const { return path_; }
    std::filesystem::path operator/(const std::string& name) const { return path_ / name; }

private:
    std::filesystem::path path_;
};

}  // namespace exemplar::testing
