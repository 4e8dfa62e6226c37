#include "exemplar/text.hpp"

#include <algorithm>
#include <cctype>

namespace exemplar::text {

namespace {

char lower(char c) {
    return static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
}

bool is_alnum(char c) {
    return std::isalnum(static_cast<unsigned char>(c)) != 0;
}

}  // namespace

std::vector<std::string> tokenize(std::string_view text) {
    std::vector<std::string> tokens;
    std::string current;
    for (char c : text) {
        if (is_alnum(c)) {
            current.push_back(lower(c));
        } else if (!current.empty()) {
            tokens.push_back(std::move(current));
            current.clear();
        }
    }
    if (!current.empty()) tokens.push_back(std::move(current));
    return tokens;
}

std::set<std::string> token_set(std::string_view text) {
    auto tokens = tokenize(text);
    return {std::make_move_iterator(tokens.begin()), std::make_move_iterator(tokens.end())};
}

std::string normal_form(std::string_view text) {
    std::string out;
    out.reserve(text.size());
    bool pending_space = false;
    for (char c : text) {
        if (is_alnum(c) || static_cast<unsigned char>(c) >= 0x80) {
            if (pending_space && !out.empty()) out.push_back(' ');
            pending_space = false;
            out.push_back(lower(c));
        } else {
            pending_space = true;
        }
    }
    return out;
}

std::string to_lower(std::string_view text) {
    std::string out(text);
    std::transform(out.begin(), out.end(), out.begin(), lower);
    return out;
}

bool starts_with_ci(std::string_view text, std::string_view prefix) {
    if (prefix.size() > text.size()) return false;
    for (std::size_t i = 0; i < prefix.size(); ++i) {
        if (lower(text[i]) != lower(prefix[i])) return false;
    }
    return true;
}

double jaccard(const std::set<std::string>& a, const std::set<std::string>& b, double empty_value) {
    if (a.empty() && b.empty()) return empty_value;
    std::size_t shared = 0;
    auto ia = a.begin();
    auto ib = b.begin();
    while (ia != a.end() && ib != b.end()) {
        if (*ia < *ib) {
            ++ia;
        } else if (*ib < *ia) {
            ++ib;
        } else {
            ++shared;
            ++ia;
            ++ib;
        }
    }
    const std::size_t unioned = a.size() + b.size() - shared;
    return static_cast<double>(shared) / static_cast<double>(unioned);
}

}  // namespace exemplar::text
