#include "exemplar/expertise.hpp"

#include <algorithm>
#include <cmath>
#include <random>

#include <Eigen/Dense>

#include "exemplar/error.hpp"
#include "exemplar/snapshot.hpp"
#include "exemplar/text.hpp"

namespace exemplar::expertise {

using nlohmann::json;

void ExpertiseConfig::validate() const {
    if (latent_dim < 1) throw InvalidArgument("K must be >= 1");
    if (!(inference_threshold > 0.0 && inference_threshold < 1.0)) {
        throw InvalidArgument("inference threshold must lie in (0,1)");
    }
    if (!(pagerank_damping > 0.0 && pagerank_damping < 1.0)) {
        throw InvalidArgument("pagerank damping must lie in (0,1)");
    }
    if (!(regularization >= 0.0)) throw InvalidArgument("regularization must be >= 0");
    if (w_pagerank < 0.0 || w_text < 0.0 || w_seniority < 0.0) {
        throw InvalidArgument("heuristic weights must be non-negative");
    }
    if (std::abs(w_pagerank + w_text + w_seniority - 1.0) > 1e-9) {
        throw InvalidArgument("heuristic weights must sum to 1");
    }
}

double ExpertiseMatrix::score(const MemberId& member, const SkillId& skill) const {
    auto r = rows.find(member);
    if (r == rows.end()) return 0.0;
    auto c = r->second.find(skill);
    return c == r->second.end() ? 0.0 : c->second;
}

bool ExpertiseMatrix::has(const MemberId& member, const SkillId& skill) const {
    auto r = rows.find(member);
    return r != rows.end() && r->second.contains(skill);
}

const std::map<SkillId, double>* ExpertiseMatrix::row(const MemberId& member) const {
    auto r = rows.find(member);
    return r == rows.end() ? nullptr : &r->second;
}

std::size_t ExpertiseMatrix::cell_count() const {
    std::size_t n = 0;
    for (const auto& [m, row] : rows) n += row.size();
    return n;
}

void ExpertiseMatrix::set(const MemberId& member, const SkillId& skill, double value) {
    rows[member][skill] = value;
}

std::map<MemberId, double> endorsement_pagerank(const EndorsementGraph& graph, const SkillId& skill,
                                                const ExpertiseConfig& config) {
    std::map<MemberId, std::size_t> index;
    std::vector<std::pair<std::size_t, std::size_t>> edges;
    auto node = [&](const MemberId& id) {
        return index.try_emplace(id, index.size()).first->second;
    };
    for (const auto& e : graph.edges) {
        if (e.skill_id != skill || e.endorser == e.endorsed) continue;
        const auto from = node(e.endorser);
        const auto to = node(e.endorsed);
        edges.emplace_back(from, to);
    }
    std::map<MemberId, double> scores;
    const std::size_t n = index.size();
    if (n == 0) return scores;

    std::vector<double> out_degree(n, 0.0);
    for (const auto& [from, to] : edges) out_degree[from] += 1.0;

    const double d = config.pagerank_damping;
    const double uniform = 1.0 / static_cast<double>(n);
    std::vector<double> rank(n, uniform);
    std::vector<double> next(n);
    for (std::size_t iter = 0; iter < config.pagerank_iterations; ++iter) {
        double dangling = 0.0;
        for (std::size_t v = 0; v < n; ++v) {
            if (out_degree[v] == 0.0) dangling += rank[v];
        }
        std::fill(next.begin(), next.end(), (1.0 - d) * uniform + d * dangling * uniform);
        for (const auto& [from, to] : edges) next[to] += d * rank[from] / out_degree[from];
        rank.swap(next);
    }

    const double top = *std::max_element(rank.begin(), rank.end());
    for (const auto& [id, v] : index) scores[id] = top > 0.0 ? rank[v] / top : 0.0;
    return scores;
}

double text_similarity(const MemberProfile& profile, const SkillEntry& skill) {
    std::set<std::string> skill_tokens = text::token_set(skill.name);
    for (const auto& alias : skill.aliases) {
        for (auto& t : text::tokenize(alias)) skill_tokens.insert(std::move(t));
    }
    if (skill_tokens.empty()) return 0.0;
    std::set<std::string> profile_tokens = text::token_set(profile.headline);
    for (const auto& pos : profile.positions) {
        for (auto& t : text::tokenize(pos.summary)) profile_tokens.insert(std::move(t));
    }
    std::size_t hits = 0;
    for (const auto& t : skill_tokens) hits += profile_tokens.contains(t) ? 1 : 0;
    return static_cast<double>(hits) / static_cast<double>(skill_tokens.size());
}

double seniority(const MemberProfile& profile, YearMonth as_of) {
    std::vector<std::pair<int, int>> spans;
    for (const auto& pos : profile.positions) {
        const int begin = pos.start.ordinal();
        const int end = std::max(begin, pos.end ? pos.end->ordinal() : as_of.ordinal());
        spans.emplace_back(begin, end);
    }
    std::sort(spans.begin(), spans.end());
    int months = 0;
    int covered_until = std::numeric_limits<int>::min();
    for (const auto& [begin, end] : spans) {
        const int from = std::max(begin, covered_until);
        if (end > from) months += end - from;
        covered_until = std::max(covered_until, end);
    }
    return std::min(1.0, static_cast<double>(months) / 12.0 / 15.0);
}

ExpertiseMatrix compute_raw_expertise(const Corpus& corpus, const ExpertiseConfig& config) {
    config.validate();
    std::set<SkillId> listed;
    for (const auto& [id, p] : corpus.profiles) listed.insert(p.skill_ids.begin(), p.skill_ids.end());

    std::map<SkillId, std::map<MemberId, double>> pagerank;
    for (const auto& skill : listed) pagerank[skill] = endorsement_pagerank(corpus.endorsements, skill, config);

    ExpertiseMatrix e0;
    e0.stage = Stage::E0;
    for (const auto& [id, p] : corpus.profiles) {
        if (p.skill_ids.empty()) continue;
        const double senior = seniority(p, corpus.as_of);
        for (const auto& skill : p.skill_ids) {
            const auto& ranks = pagerank[skill];
            auto it = ranks.find(id);
            const double pr = it == ranks.end() ? 0.0 : it->second;
            const double textual = text_similarity(p, corpus.taxonomy.skills.at(skill));
            const double value = config.w_pagerank * pr + config.w_text * textual + config.w_seniority * senior;
            e0.set(id, skill, std::clamp(value, 0.0, 1.0));
        }
    }
    return e0;
}

namespace {

using Matrix = Eigen::MatrixXd;
using Vector = Eigen::VectorXd;

struct Observations {
    std::vector<MemberId> members;
    std::vector<SkillId> skills;
    std::vector<std::vector<std::pair<std::size_t, double>>> by_member;
    std::vector<std::vector<std::pair<std::size_t, double>>> by_skill;
};

Observations gather(const ExpertiseMatrix& e0) {
    Observations obs;
    std::map<SkillId, std::size_t> skill_index;
    for (const auto& [m, row] : e0.rows) {
        for (const auto& [s, v] : row) skill_index.emplace(s, 0);
    }
    for (auto& [s, idx] : skill_index) {
        idx = obs.skills.size();
        obs.skills.push_back(s);
    }
    obs.by_skill.resize(obs.skills.size());
    for (const auto& [m, row] : e0.rows) {
        const std::size_t u = obs.members.size();
        obs.members.push_back(m);
        auto& cells = obs.by_member.emplace_back();
        for (const auto& [s, v] : row) {
            const std::size_t j = skill_index.at(s);
            cells.emplace_back(j, v);
            obs.by_skill[j].emplace_back(u, v);
        }
    }
    return obs;
}

// Solves (λI + Σ x xᵀ) w = Σ y x for one row. With λ = 0 the system may be singular; the
// minimum-norm least-squares solution is used then.
void solve_row(const std::vector<std::pair<std::size_t, double>>& cells, const Matrix& other, double lambda,
               Eigen::Ref<Vector> out) {
    const auto k = other.cols();
    Matrix gram = Matrix::Identity(k, k) * lambda;
    Vector rhs = Vector::Zero(k);
    for (const auto& [idx, y] : cells) {
        const auto x = other.row(static_cast<Eigen::Index>(idx)).transpose();
        gram.noalias() += x * x.transpose();
        rhs.noalias() += y * x;
    }
    if (lambda > 0.0) {
        out = gram.llt().solve(rhs);
    } else {
        out = gram.completeOrthogonalDecomposition().solve(rhs);
    }
}

double objective(const Observations& obs, const Matrix& members, const Matrix& skills, double lambda) {
    double loss = 0.0;
    for (std::size_t u = 0; u < obs.members.size(); ++u) {
        for (const auto& [j, y] : obs.by_member[u]) {
            const double r = y - members.row(static_cast<Eigen::Index>(u)).dot(skills.row(static_cast<Eigen::Index>(j)));
            loss += r * r;
        }
    }
    return loss + lambda * (members.squaredNorm() + skills.squaredNorm());
}

std::vector<double> to_std(const Eigen::Ref<const Vector>& v) {
    return {v.data(), v.data() + v.size()};
}

}  // namespace

Factorization factorize(const ExpertiseMatrix& e0, const ExpertiseConfig& config) {
    if (e0.cell_count() == 0) throw InvalidArgument("cannot factorize an empty expertise matrix");
    if (config.latent_dim < 1) throw InvalidArgument("K must be >= 1");
    const auto obs = gather(e0);
    const auto k = static_cast<Eigen::Index>(config.latent_dim);
    const double lambda = config.regularization;

    Matrix members = Matrix::Zero(static_cast<Eigen::Index>(obs.members.size()), k);
    Matrix skills(static_cast<Eigen::Index>(obs.skills.size()), k);
    std::mt19937_64 rng(config.seed);
    const double scale = 1.0 / std::sqrt(static_cast<double>(config.latent_dim));
    for (Eigen::Index j = 0; j < skills.rows(); ++j) {
        for (Eigen::Index c = 0; c < k; ++c) {
            skills(j, c) = static_cast<double>(rng() >> 11) * 0x1.0p-53 * scale;
        }
    }

    Factorization result;
    result.objective_history.push_back(objective(obs, members, skills, lambda));
    Vector scratch(k);
    for (std::size_t iter = 0; iter < config.factorization_iterations; ++iter) {
        for (std::size_t u = 0; u < obs.members.size(); ++u) {
            solve_row(obs.by_member[u], skills, lambda, scratch);
            members.row(static_cast<Eigen::Index>(u)) = scratch.transpose();
        }
        for (std::size_t j = 0; j < obs.skills.size(); ++j) {
            solve_row(obs.by_skill[j], members, lambda, scratch);
            skills.row(static_cast<Eigen::Index>(j)) = scratch.transpose();
        }
        result.objective_history.push_back(objective(obs, members, skills, lambda));
    }

    auto& f = result.factors;
    f.latent_dim = config.latent_dim;
    for (std::size_t u = 0; u < obs.members.size(); ++u) {
        f.member_vectors[obs.members[u]] = to_std(members.row(static_cast<Eigen::Index>(u)).transpose());
    }
    for (std::size_t j = 0; j < obs.skills.size(); ++j) {
        f.skill_vectors[obs.skills[j]] = to_std(skills.row(static_cast<Eigen::Index>(j)).transpose());
    }
    return result;
}

namespace {

double dot(const std::vector<double>& a, const std::vector<double>& b) {
    double sum = 0.0;
    for (std::size_t i = 0; i < a.size() && i < b.size(); ++i) sum += a[i] * b[i];
    return sum;
}

}  // namespace

double factorization_objective(const ExpertiseMatrix& e0, const LatentFactors& factors, double regularization) {
    static const std::vector<double> zero;
    double loss = 0.0;
    for (const auto& [m, row] : e0.rows) {
        auto mv = factors.member_vectors.find(m);
        for (const auto& [s, y] : row) {
            auto sv = factors.skill_vectors.find(s);
            const double pred = (mv == factors.member_vectors.end() || sv == factors.skill_vectors.end())
                                    ? 0.0
                                    : dot(mv->second, sv->second);
            loss += (y - pred) * (y - pred);
        }
    }
    double norms = 0.0;
    for (const auto& [m, v] : factors.member_vectors) norms += dot(v, v);
    for (const auto& [s, v] : factors.skill_vectors) norms += dot(v, v);
    return loss + regularization * norms;
}

ExpertiseMatrix infer_expertise(const ExpertiseMatrix& e0, const LatentFactors& factors,
                                const ExpertiseConfig& config) {
    ExpertiseMatrix e1;
    e1.stage = Stage::E1;
    for (const auto& [m, mv] : factors.member_vectors) {
        for (const auto& [s, sv] : factors.skill_vectors) {
            const double predicted = std::clamp(dot(mv, sv), 0.0, 1.0);
            if (e0.has(m, s)) {
                e1.set(m, s, std::max(e0.score(m, s), predicted));
            } else if (predicted >= config.inference_threshold) {
                e1.set(m, s, predicted);
            }
        }
    }
    // Known cells without factors (cannot happen for factors built from this E0) still survive.
    for (const auto& [m, row] : e0.rows) {
        for (const auto& [s, v] : row) {
            if (!e1.has(m, s)) e1.set(m, s, v);
        }
    }
    return e1;
}

double cosine(const std::vector<double>& a, const std::vector<double>& b) {
    const double na = std::sqrt(dot(a, a));
    const double nb = std::sqrt(dot(b, b));
    if (na == 0.0 || nb == 0.0) return 0.0;
    return dot(a, b) / (na * nb);
}

std::vector<std::pair<SkillId, double>> skill_similarity(const LatentFactors& factors, const SkillId& skill,
                                                         std::size_t k) {
    auto self = factors.skill_vectors.find(skill);
    if (self == factors.skill_vectors.end()) throw NotFound("unknown skill " + skill);
    std::vector<std::pair<SkillId, double>> out;
    for (const auto& [id, v] : factors.skill_vectors) {
        if (id == skill) continue;
        out.emplace_back(id, cosine(self->second, v));
    }
    std::stable_sort(out.begin(), out.end(), [](const auto& a, const auto& b) { return a.second > b.second; });
    if (out.size() > k) out.resize(k);
    return out;
}

ExpertiseModel build_expertise(const Corpus& corpus, const ExpertiseConfig& config) {
    config.validate();
    ExpertiseModel model;
    model.config = config;
    model.corpus_fingerprint = corpus_fingerprint(corpus);
    model.e0 = compute_raw_expertise(corpus, config);
    if (model.e0.cell_count() == 0) {
        model.e1 = model.e0;
        model.e1.stage = Stage::E1;
        model.factors.latent_dim = config.latent_dim;
        return model;
    }
    model.factors = factorize(model.e0, config).factors;
    model.e1 = infer_expertise(model.e0, model.factors, config);
    return model;
}

namespace {

json config_to_json(const ExpertiseConfig& c) {
    return json{{"K", c.latent_dim},
                {"factorization_iterations", c.factorization_iterations},
                {"regularization", c.regularization},
                {"inference_threshold", c.inference_threshold},
                {"pagerank_damping", c.pagerank_damping},
                {"pagerank_iterations", c.pagerank_iterations},
                {"w_pagerank", c.w_pagerank},
                {"w_text", c.w_text},
                {"w_seniority", c.w_seniority},
                {"seed", c.seed}};
}

ExpertiseConfig config_from_json(const json& j) {
    ExpertiseConfig c;
    c.latent_dim = j.at("K").get<std::size_t>();
    c.factorization_iterations = j.at("factorization_iterations").get<std::size_t>();
    c.regularization = j.at("regularization").get<double>();
    c.inference_threshold = j.at("inference_threshold").get<double>();
    c.pagerank_damping = j.at("pagerank_damping").get<double>();
    c.pagerank_iterations = j.at("pagerank_iterations").get<std::size_t>();
    c.w_pagerank = j.at("w_pagerank").get<double>();
    c.w_text = j.at("w_text").get<double>();
    c.w_seniority = j.at("w_seniority").get<double>();
    c.seed = j.at("seed").get<std::uint64_t>();
    return c;
}

json matrix_to_json(const ExpertiseMatrix& m) {
    return json{{"stage", m.stage == Stage::E0 ? "E0" : "E1"}, {"rows", m.rows}};
}

ExpertiseMatrix matrix_from_json(const json& j) {
    ExpertiseMatrix m;
    m.stage = j.at("stage").get<std::string>() == "E0" ? Stage::E0 : Stage::E1;
    m.rows = j.at("rows").get<std::map<MemberId, std::map<SkillId, double>>>();
    return m;
}

}  // namespace

json model_to_json(const ExpertiseModel& model) {
    return json{{"config", config_to_json(model.config)},
                {"e0", matrix_to_json(model.e0)},
                {"e1", matrix_to_json(model.e1)},
                {"factors",
                 json{{"K", model.factors.latent_dim},
                      {"members", model.factors.member_vectors},
                      {"skills", model.factors.skill_vectors}}},
                {"corpus_fingerprint", model.corpus_fingerprint}};
}

ExpertiseModel model_from_json(const json& j) {
    ExpertiseModel model;
    model.config = config_from_json(j.at("config"));
    model.e0 = matrix_from_json(j.at("e0"));
    model.e1 = matrix_from_json(j.at("e1"));
    const auto& f = j.at("factors");
    model.factors.latent_dim = f.at("K").get<std::size_t>();
    model.factors.member_vectors = f.at("members").get<std::map<MemberId, std::vector<double>>>();
    model.factors.skill_vectors = f.at("skills").get<std::map<SkillId, std::vector<double>>>();
    model.corpus_fingerprint = j.at("corpus_fingerprint").get<std::uint64_t>();
    return model;
}

void save_model(const ExpertiseModel& model, const std::filesystem::path& path) {
    snapshot::write(path, "expertise", model_to_json(model));
}

ExpertiseModel read_model(const std::filesystem::path& path) {
    try {
        return model_from_json(snapshot::read(path, "expertise"));
    } catch (const json::exception& e) {
        throw IoError("corrupt expertise snapshot " + path.string() + ": " + e.what());
    }
}

}  // namespace exemplar::expertise
