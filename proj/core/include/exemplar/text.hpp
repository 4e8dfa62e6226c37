#pragma once

#include <set>
#include <string>
#include <string_view>
#include <vector>

namespace exemplar::text {

/// Lowercases ASCII and splits on every non-alphanumeric byte. Empty tokens are dropped.
std::vector<std::string> tokenize(std::string_view text);

std::set<std::string> token_set(std::string_view text);

/// Lowercase, punctuation replaced by spaces, whitespace collapsed and trimmed.
std::string normal_form(std::string_view text);

std::string to_lower(std::string_view text);

bool starts_with_ci(std::string_view text, std::string_view prefix);

/// |a ∩ b| / |a ∪ b|. Both empty yields `empty_value`.
double jaccard(const std::set<std::string>& a, const std::set<std::string>& b, double empty_value);

}  // namespace exemplar::text
