#pragma once

#include <cstdint>
#include <map>
#include <vector>

#include "exemplar/corpus.hpp"

namespace exemplar {

/// A generated corpus plus the archetype labels it was generated from.
struct SyntheticCorpus {
    Corpus corpus;
    std::size_t archetypes = 0;
    std::map<MemberId, std::size_t> archetype_of;
    std::vector<std::vector<SkillId>> archetype_skills;
    std::vector<std::vector<CompanyId>> archetype_companies;
};

/// Desk-scale corpus drawn from clustered career archetypes (search/ML, backend, frontend, analytics,
/// sales, design) so skill co-occurrence, co-views and careers carry similarity structure.
/// Deterministic for a fixed seed. Throws InvalidArgument when any size is zero.
SyntheticCorpus generate_synthetic(std::uint64_t seed, std::size_t n_members, std::size_t n_skills,
                                   std::size_t n_companies);

inline Corpus generate_synthetic_corpus(std::uint64_t seed, std::size_t n_members, std::size_t n_skills,
                                        std::size_t n_companies) {
    return generate_synthetic(seed, n_members, n_skills, n_companies).corpus;
}

}  // namespace exemplar
