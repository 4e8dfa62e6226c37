#pragma once

#include <map>
#include <optional>
#include <string>
#include <string_view>

#include "exemplar/domain.hpp"

namespace exemplar::query {

/// Maps raw title variants ("Tech Lead.", "technical lead") onto one title entity via their normal form.
class TitleStandardizer {
public:
    TitleStandardizer() = default;

    /// Registers each entry's canonical name and aliases. Throws InvalidArgument when one normal form
    /// would map to two different title ids.
    explicit TitleStandardizer(const TitleCatalog& catalog);

    void add_alias(std::string_view raw_title, const TitleId& title_id);

    /// nullopt is UNKNOWN.
    std::optional<TitleId> standardize(std::string_view raw_title) const;

    const std::map<std::string, TitleId>& aliases() const { return aliases_; }

private:
    std::map<std::string, TitleId> aliases_;
};

/// Builds a catalog with one title entity per distinct normal form of the given raw titles.
TitleCatalog catalog_from_raw_titles(const std::vector<std::string>& raw_titles);

}  // namespace exemplar::query
