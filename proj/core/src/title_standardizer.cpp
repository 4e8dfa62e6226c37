#include "exemplar/title_standardizer.hpp"

#include <algorithm>

#include "exemplar/error.hpp"
#include "exemplar/text.hpp"

namespace exemplar::query {

TitleStandardizer::TitleStandardizer(const TitleCatalog& catalog) {
    for (const auto& [id, entry] : catalog.titles) {
        add_alias(entry.name, id);
        for (const auto& alias : entry.aliases) add_alias(alias, id);
    }
}

void TitleStandardizer::add_alias(std::string_view raw_title, const TitleId& title_id) {
    auto form = text::normal_form(raw_title);
    if (form.empty()) return;
    auto [it, inserted] = aliases_.emplace(std::move(form), title_id);
    if (!inserted && it->second != title_id) {
        throw InvalidArgument("title alias '" + std::string(raw_title) + "' maps to both " + it->second +
                              " and " + title_id);
    }
}

std::optional<TitleId> TitleStandardizer::standardize(std::string_view raw_title) const {
    auto it = aliases_.find(text::normal_form(raw_title));
    if (it == aliases_.end()) return std::nullopt;
    return it->second;
}

TitleCatalog catalog_from_raw_titles(const std::vector<std::string>& raw_titles) {
    TitleCatalog catalog;
    for (const auto& raw : raw_titles) {
        auto form = text::normal_form(raw);
        if (form.empty()) continue;
        TitleId id = form;
        std::replace(id.begin(), id.end(), ' ', '-');
        catalog.titles.try_emplace(id, TitleEntry{form, {}});
    }
    return catalog;
}

}  // namespace exemplar::query
