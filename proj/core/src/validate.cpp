#include "exemplar/validate.hpp"

#include <map>
#include <sstream>

#include "exemplar/text.hpp"

namespace exemplar {

bool ValidationReport::has(const std::string& message) const {
    for (const auto& e : errors) {
        if (e.message == message) return true;
    }
    return false;
}

std::string ValidationReport::to_string() const {
    std::ostringstream out;
    for (const auto& e : errors) out << e.locator << ": " << e.message << '\n';
    return out.str();
}

namespace {

std::string profile_locator(std::size_t i, const MemberProfile& p) {
    return "profiles[" + std::to_string(i) + "] " + p.member_id;
}

void check_taxonomy(const SkillTaxonomy& taxonomy, std::vector<ValidationIssue>& errors) {
    std::map<std::string, SkillId> canonical;
    for (const auto& [id, entry] : taxonomy.skills) {
        const auto form = text::normal_form(entry.name);
        if (form.empty()) {
            errors.push_back({"taxonomy " + id, "empty canonical name"});
            continue;
        }
        auto [it, inserted] = canonical.emplace(form, id);
        if (!inserted) errors.push_back({"taxonomy " + id, "duplicate canonical name"});
    }
    std::map<std::string, SkillId> alias_owner = canonical;
    for (const auto& [id, entry] : taxonomy.skills) {
        for (const auto& alias : entry.aliases) {
            const auto form = text::normal_form(alias);
            auto [it, inserted] = alias_owner.emplace(form, id);
            if (!inserted && it->second != id) {
                errors.push_back({"taxonomy " + id, "ambiguous alias"});
            }
        }
    }
}

void check_coordinates(const std::string& where, const LocationTag& loc, std::vector<ValidationIssue>& errors) {
    if (!loc.coordinates) return;
    const auto& c = *loc.coordinates;
    if (!(c.latitude >= -90.0 && c.latitude <= 90.0)) errors.push_back({where, "latitude out of range"});
    if (!(c.longitude >= -180.0 && c.longitude <= 180.0)) errors.push_back({where, "longitude out of range"});
}

}  // namespace

ValidationReport validate_corpus(const std::vector<MemberProfile>& profiles,
                                 const SkillTaxonomy& taxonomy,
                                 const EndorsementGraph& endorsements,
                                 const CoViewLog& coviews,
                                 const std::set<CompanyId>& extra_companies) {
    ValidationReport report;
    auto& errors = report.errors;

    check_taxonomy(taxonomy, errors);

    std::set<MemberId> members;
    std::set<CompanyId> companies = extra_companies;
    for (std::size_t i = 0; i < profiles.size(); ++i) {
        const auto& p = profiles[i];
        const auto where = profile_locator(i, p);
        if (p.member_id.empty()) errors.push_back({where, "missing member_id"});
        if (!members.insert(p.member_id).second) errors.push_back({where, "duplicate member_id"});
        for (const auto& skill : p.skill_ids) {
            if (!taxonomy.contains(skill)) errors.push_back({where + " skill " + skill, "unknown skill"});
        }
        check_coordinates(where, p.location, errors);
        for (std::size_t k = 0; k < p.positions.size(); ++k) {
            const auto& pos = p.positions[k];
            const auto pos_where = where + " positions[" + std::to_string(k) + "]";
            companies.insert(pos.company_id);
            if (pos.company_id.empty()) errors.push_back({pos_where, "missing company_id"});
            if (pos.end && *pos.end < pos.start) errors.push_back({pos_where, "end before start"});
            if (k > 0 && p.positions[k - 1].start < pos.start) {
                errors.push_back({pos_where, "positions not ordered by start date"});
            }
        }
    }

    for (std::size_t i = 0; i < profiles.size(); ++i) {
        const auto& p = profiles[i];
        for (const auto& c : p.connection_ids) {
            if (!members.contains(c)) {
                errors.push_back({profile_locator(i, p) + " connection " + c, "dangling reference"});
            }
        }
    }

    for (std::size_t i = 0; i < endorsements.edges.size(); ++i) {
        const auto& e = endorsements.edges[i];
        const auto where = "endorsements[" + std::to_string(i) + "]";
        if (e.endorser == e.endorsed) errors.push_back({where, "self endorsement"});
        if (!taxonomy.contains(e.skill_id)) errors.push_back({where, "unknown skill"});
        if (!members.contains(e.endorser) || !members.contains(e.endorsed)) {
            errors.push_back({where, "dangling reference"});
        }
    }

    for (std::size_t i = 0; i < coviews.events.size(); ++i) {
        const auto& v = coviews.events[i];
        if (!companies.contains(v.company_id)) {
            errors.push_back({"coviews[" + std::to_string(i) + "]", "dangling reference"});
        }
    }
    return report;
}

}  // namespace exemplar
