#include "exemplar/domain.hpp"

#include <algorithm>
#include <charconv>
#include <cstdio>

#include "exemplar/error.hpp"

namespace exemplar {

namespace {

int parse_int(std::string_view digits, std::string_view whole) {
    int value = 0;
    const auto* first = digits.data();
    const auto* last = digits.data() + digits.size();
    auto [ptr, ec] = std::from_chars(first, last, value);
    if (ec != std::errc{} || ptr != last) {
        throw InvalidArgument("invalid year-month '" + std::string(whole) + "'");
    }
    return value;
}

}  // namespace

YearMonth YearMonth::parse(std::string_view text) {
    if (text.size() != 7 || text[4] != '-') {
        throw InvalidArgument("invalid year-month '" + std::string(text) + "', expected YYYY-MM");
    }
    YearMonth ym{parse_int(text.substr(0, 4), text), parse_int(text.substr(5, 2), text)};
    if (ym.month < 1 || ym.month > 12) {
        throw InvalidArgument("month out of range in '" + std::string(text) + "'");
    }
    return ym;
}

std::string YearMonth::to_string() const {
    char buf[16];
    std::snprintf(buf, sizeof buf, "%04d-%02d", year, month);
    return buf;
}

int months_between(const YearMonth& from, const YearMonth& to) {
    return to.ordinal() - from.ordinal();
}

std::vector<const Position*> MemberProfile::current_positions() const {
    std::vector<const Position*> out;
    for (const auto& p : positions) {
        if (p.is_open()) out.push_back(&p);
    }
    if (out.empty() && !positions.empty()) out.push_back(&positions.front());
    return out;
}

std::vector<const Position*> MemberProfile::past_positions() const {
    const auto current = current_positions();
    std::vector<const Position*> out;
    for (const auto& p : positions) {
        if (std::find(current.begin(), current.end(), &p) == current.end()) out.push_back(&p);
    }
    return out;
}

const std::string& SkillTaxonomy::name_of(const SkillId& id) const {
    auto it = skills.find(id);
    return it == skills.end() ? id : it->second.name;
}

const std::string& TitleCatalog::name_of(const TitleId& id) const {
    auto it = titles.find(id);
    return it == titles.end() ? id : it->second.name;
}

EndorsementGraph EndorsementGraph::from_edges(std::vector<Endorsement> edges) {
    std::sort(edges.begin(), edges.end());
    edges.erase(std::unique(edges.begin(), edges.end()), edges.end());
    return EndorsementGraph{std::move(edges)};
}

CoViewLog CoViewLog::from_events(std::vector<CoView> events) {
    std::sort(events.begin(), events.end());
    events.erase(std::unique(events.begin(), events.end()), events.end());
    return CoViewLog{std::move(events)};
}

IdealCandidateSet::IdealCandidateSet(std::vector<MemberId> ids, std::size_t cap) : ids_(std::move(ids)) {
    if (ids_.empty()) throw InvalidArgument("empty ideal candidate set");
    if (ids_.size() > cap) throw InvalidArgument("too many ideal candidates");
    for (std::size_t i = 0; i < ids_.size(); ++i) {
        for (std::size_t j = i + 1; j < ids_.size(); ++j) {
            if (ids_[i] == ids_[j]) throw InvalidArgument("duplicate ideal candidate " + ids_[i]);
        }
    }
}

bool IdealCandidateSet::contains(const MemberId& id) const {
    return std::find(ids_.begin(), ids_.end(), id) != ids_.end();
}

}  // namespace exemplar
