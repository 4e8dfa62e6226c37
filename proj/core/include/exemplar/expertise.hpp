#pragma once

#include <cstdint>
#include <filesystem>
#include <map>
#include <utility>
#include <vector>

#include <nlohmann/json.hpp>

#include "exemplar/corpus.hpp"

namespace exemplar::expertise {

struct ExpertiseConfig {
    std::size_t latent_dim = 16;  // K
    std::size_t factorization_iterations = 50;
    double regularization = 0.1;  // λ_f
    double inference_threshold = 0.3;  // τ
    double pagerank_damping = 0.85;
    std::size_t pagerank_iterations = 50;
    double w_pagerank = 0.5;
    double w_text = 0.3;
    double w_seniority = 0.2;
    std::uint64_t seed = 42;

    /// Throws InvalidArgument on K = 0, τ or damping outside (0,1), negative λ_f,
    /// or heuristic weights that are negative or do not sum to 1.
    void validate() const;

    friend bool operator==(const ExpertiseConfig&, const ExpertiseConfig&) = default;
};

enum class Stage { E0, E1 };

/// Sparse member × skill scores in [0,1], stored row-wise.
struct ExpertiseMatrix {
    Stage stage = Stage::E0;
    std::map<MemberId, std::map<SkillId, double>> rows;

    double score(const MemberId& member, const SkillId& skill) const;
    bool has(const MemberId& member, const SkillId& skill) const;
    const std::map<SkillId, double>* row(const MemberId& member) const;
    std::size_t cell_count() const;
    void set(const MemberId& member, const SkillId& skill, double value);

    friend bool operator==(const ExpertiseMatrix&, const ExpertiseMatrix&) = default;
};

struct LatentFactors {
    std::size_t latent_dim = 0;
    std::map<MemberId, std::vector<double>> member_vectors;
    std::map<SkillId, std::vector<double>> skill_vectors;

    friend bool operator==(const LatentFactors&, const LatentFactors&) = default;
};

/// Factors plus the regularized objective before the first sweep and after every ALS iteration.
struct Factorization {
    LatentFactors factors;
    std::vector<double> objective_history;
};

/// Damped pagerank over the endorsement digraph restricted to `skill`, normalized so the maximum is 1.
/// Members outside that subgraph are absent from the result (score 0). Dangling mass is spread uniformly.
std::map<MemberId, double> endorsement_pagerank(const EndorsementGraph& graph, const SkillId& skill,
                                                const ExpertiseConfig& config);

/// Fraction of distinct skill-name and alias tokens present in the headline and position summaries.
double text_similarity(const MemberProfile& profile, const SkillEntry& skill);

/// min(1, years covered by the union of position intervals / 15). Open positions run to `as_of`.
double seniority(const MemberProfile& profile, YearMonth as_of);

/// E0: one cell per explicitly listed (member, skill), scored by the weighted heuristic.
ExpertiseMatrix compute_raw_expertise(const Corpus& corpus, const ExpertiseConfig& config);

/// Alternating least squares on the observed cells of E0. Throws InvalidArgument on an empty matrix.
Factorization factorize(const ExpertiseMatrix& e0, const ExpertiseConfig& config);

/// Regularized objective Σ_observed (score − m·s)² + λ_f (Σ‖m‖² + Σ‖s‖²).
double factorization_objective(const ExpertiseMatrix& e0, const LatentFactors& factors, double regularization);

/// E1: clamp(m·s, 0, 1) kept where ≥ τ; every E0 cell is kept with max(E0 score, clamped product).
ExpertiseMatrix infer_expertise(const ExpertiseMatrix& e0, const LatentFactors& factors,
                                const ExpertiseConfig& config);

double cosine(const std::vector<double>& a, const std::vector<double>& b);

/// Top-k skills by cosine in the skill latent space, self excluded, ties by skill id.
/// Throws NotFound when `skill` has no factor vector.
std::vector<std::pair<SkillId, double>> skill_similarity(const LatentFactors& factors, const SkillId& skill,
                                                         std::size_t k);

/// Everything the query builder, index and ranker need from the offline pipeline.
struct ExpertiseModel {
    ExpertiseConfig config;
    ExpertiseMatrix e0;
    ExpertiseMatrix e1;
    LatentFactors factors;
    std::uint64_t corpus_fingerprint = 0;

    friend bool operator==(const ExpertiseModel&, const ExpertiseModel&) = default;
};

ExpertiseModel build_expertise(const Corpus& corpus, const ExpertiseConfig& config);

nlohmann::json model_to_json(const ExpertiseModel& model);
ExpertiseModel model_from_json(const nlohmann::json& j);
void save_model(const ExpertiseModel& model, const std::filesystem::path& path);
ExpertiseModel read_model(const std::filesystem::path& path);

}  // namespace exemplar::expertise
