#include <cstdio>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "exemplar/api.hpp"
#include "exemplar/browsemap.hpp"
#include "exemplar/careersim.hpp"
#include "exemplar/config.hpp"
#include "exemplar/corpus.hpp"
#include "exemplar/engine.hpp"
#include "exemplar/error.hpp"
#include "exemplar/expertise.hpp"
#include "exemplar/index.hpp"
#include "exemplar/session.hpp"
#include "exemplar/synthetic.hpp"

namespace fs = std::filesystem;
using namespace exemplar;

namespace {

config::EngineConfig engine_config(const std::string& path) {
    return config::load_engine_config(path.empty() ? std::nullopt : std::optional<fs::path>(path));
}

struct Snapshots {
    std::string corpus, expertise, browsemap, index, config;

    void add_to(CLI::App* cmd) {
        cmd->add_option("--corpus", corpus, "corpus snapshot")->required();
        cmd->add_option("--expertise", expertise, "expertise snapshot")->required();
        cmd->add_option("--browsemap", browsemap, "browsemap snapshot")->required();
        cmd->add_option("--index", index, "index snapshot")->required();
        cmd->add_option("--config", config, "merged config file (default: $EXEMPLAR_CONFIG)");
    }

    std::shared_ptr<const Engine> open() const {
        return Engine::open(corpus, expertise, browsemap, index, engine_config(config));
    }
};

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Query-by-example people search"};
    app.require_subcommand(1);

    // generate
    std::string gen_out;
    std::uint64_t gen_seed = 1;
    std::size_t gen_members = 200, gen_skills = 48, gen_companies = 30;
    auto* generate = app.add_subcommand("generate", "write a synthetic corpus as JSONL files");
    generate->add_option("--out", gen_out, "output directory")->required();
    generate->add_option("--seed", gen_seed);
    generate->add_option("--members", gen_members);
    generate->add_option("--skills", gen_skills);
    generate->add_option("--companies", gen_companies);

    // ingest
    CorpusPaths paths;
    std::string titles, companies, as_of, ingest_out;
    auto* ingest = app.add_subcommand("ingest", "validate JSONL inputs into a corpus snapshot");
    ingest->add_option("--profiles", paths.profiles)->required();
    ingest->add_option("--taxonomy", paths.taxonomy)->required();
    ingest->add_option("--endorsements", paths.endorsements)->required();
    ingest->add_option("--coviews", paths.coviews)->required();
    ingest->add_option("--titles", titles);
    ingest->add_option("--companies", companies);
    ingest->add_option("--as-of", as_of, "YYYY-MM")->required();
    ingest->add_option("--out", ingest_out)->required();

    // build-expertise
    std::string ex_corpus, ex_config, ex_out;
    auto* build_expertise = app.add_subcommand("build-expertise", "compute E0, factorize and infer E1");
    build_expertise->add_option("--corpus", ex_corpus)->required();
    build_expertise->add_option("--config", ex_config, "expertise settings (top-level keys or [expertise])");
    build_expertise->add_option("--out", ex_out)->required();

    // build-browsemap
    std::string bm_corpus, bm_out, bm_similarity = "jaccard";
    browsemap::BrowsemapConfig bm_config;
    auto* build_browsemap = app.add_subcommand("build-browsemap", "company similarity from co-views");
    build_browsemap->add_option("--corpus", bm_corpus)->required();
    build_browsemap->add_option("--min-viewers", bm_config.min_viewers);
    build_browsemap->add_option("--k", bm_config.k_neighbors);
    build_browsemap->add_option("--similarity", bm_similarity)->check(CLI::IsMember({"jaccard", "cosine"}));
    build_browsemap->add_option("--out", bm_out)->required();

    // build-index
    std::string ix_corpus, ix_expertise, ix_out;
    auto* build_index = app.add_subcommand("build-index", "inverted index over facets and text");
    build_index->add_option("--corpus", ix_corpus)->required();
    build_index->add_option("--expertise", ix_expertise)->required();
    build_index->add_option("--out", ix_out)->required();

    // careersim
    std::string cs_corpus, cs_a, cs_b, cs_weights;
    auto* careersim_cmd = app.add_subcommand("careersim", "align two career trajectories");
    careersim_cmd->add_option("--corpus", cs_corpus)->required();
    careersim_cmd->add_option("--a", cs_a)->required();
    careersim_cmd->add_option("--b", cs_b)->required();
    careersim_cmd->add_option("--weights", cs_weights, "node weights and gap_penalty");

    // search
    Snapshots search_snap;
    std::vector<std::string> search_ic;
    std::string search_searcher;
    std::int64_t search_n = 0;
    std::size_t search_limit = 10;
    bool search_include = false, search_json = false;
    auto* search = app.add_subcommand("search", "one-shot query by example");
    search_snap.add_to(search);
    search->add_option("--ic", search_ic, "ideal candidate ids")->required()->delimiter(',');
    search->add_option("--searcher", search_searcher)->required();
    search->add_option("--n", search_n, "edit count used for the blend");
    search->add_option("--limit", search_limit);
    search->add_flag("--include-ic", search_include, "keep ideal candidates in the results");
    search->add_flag("--json", search_json);

    // serve
    Snapshots serve_snap;
    std::string serve_host = "127.0.0.1";
    int serve_port = 8080;
    auto* serve = app.add_subcommand("serve", "HTTP+JSON API");
    serve_snap.add_to(serve);
    serve->add_option("--host", serve_host);
    serve->add_option("--port", serve_port);

    CLI11_PARSE(app, argc, argv);

    try {
        if (generate->parsed()) {
            fs::create_directories(gen_out);
            const auto corpus = generate_synthetic_corpus(gen_seed, gen_members, gen_skills, gen_companies);
            write_corpus_jsonl(corpus, gen_out);
            std::printf("wrote %zu profiles to %s\n", corpus.profiles.size(), gen_out.c_str());
        } else if (ingest->parsed()) {
            if (!titles.empty()) paths.titles = titles;
            if (!companies.empty()) paths.companies = companies;
            const auto loaded = load_corpus(paths, YearMonth::parse(as_of));
            for (const auto& w : loaded.summary.warnings) std::fprintf(stderr, "warning: %s\n", w.c_str());
            save_corpus(loaded.corpus, ingest_out);
            std::printf("profiles %zu, pruned connections %zu, endorsements %zu, coviews %zu\n",
                        loaded.summary.profiles, loaded.summary.pruned_connections,
                        loaded.summary.pruned_endorsements, loaded.summary.pruned_coviews);
        } else if (build_expertise->parsed()) {
            expertise::ExpertiseConfig cfg;
            if (!ex_config.empty()) {
                const auto t = config::ConfigTable::load(ex_config);
                const auto sections = t.sections();
                const bool sectioned = std::find(sections.begin(), sections.end(), "expertise") != sections.end();
                cfg = config::read_expertise(t, !sectioned);
            }
            const auto model = expertise::build_expertise(read_corpus(ex_corpus), cfg);
            expertise::save_model(model, ex_out);
            std::printf("E0 cells %zu, E1 cells %zu, K %zu\n", model.e0.cell_count(), model.e1.cell_count(),
                        model.factors.latent_dim);
        } else if (build_browsemap->parsed()) {
            bm_config.similarity = bm_similarity == "cosine" ? browsemap::Similarity::Cosine : browsemap::Similarity::Jaccard;
            const auto map = browsemap::build_browsemap(read_corpus(bm_corpus).coviews, bm_config);
            browsemap::save(map, bm_out);
            std::printf("companies with neighbors %zu\n", map.neighbors.size());
        } else if (build_index->parsed()) {
            const auto corpus = read_corpus(ix_corpus);
            const auto model = expertise::read_model(ix_expertise);
            if (model.corpus_fingerprint != corpus_fingerprint(corpus)) {
                throw InvalidArgument("expertise snapshot was built from a different corpus");
            }
            const auto idx = index::build_index(corpus, model.e1);
            index::save(idx, ix_out);
            std::printf("attribute keys %zu, text tokens %zu\n", idx.postings.size(), idx.text_postings.size());
        } else if (careersim_cmd->parsed()) {
            careersim::NodeSimWeights w;
            careersim::AlignmentConfig g;
            if (!cs_weights.empty()) {
                const auto t = config::ConfigTable::load(cs_weights);
                const auto sections = t.sections();
                const bool sectioned = std::find(sections.begin(), sections.end(), "careersim") != sections.end();
                w = config::read_node_weights(t, !sectioned);
                g = config::read_alignment(t, !sectioned);
            }
            const auto corpus = read_corpus(cs_corpus);
            const auto ta = careersim::to_trajectory(corpus.profile(cs_a), corpus.as_of);
            const auto tb = careersim::to_trajectory(corpus.profile(cs_b), corpus.as_of);
            const auto r = careersim::align(ta, tb, w, g);
            std::printf("score %.6f\n", r.score);
            for (const auto& [i, j] : r.pairs) {
                std::printf("%zu:%s/%s <-> %zu:%s/%s  %.4f\n", i, ta[i].company_id.c_str(), ta[i].title_id.c_str(), j,
                            tb[j].company_id.c_str(), tb[j].title_id.c_str(), careersim::node_similarity(ta[i], tb[j], w));
            }
        } else if (search->parsed()) {
            const auto engine = search_snap.open();
            const IdealCandidateSet ic(search_ic, engine->config().service.max_ideal_candidates);
            engine->corpus().profile(search_searcher);
            for (const auto& id : ic.ids()) engine->corpus().profile(id);
            const auto q = engine->build_query(ic.ids());
            auto results = engine->search(q, search_searcher, ic.ids(), search_n, search_include);
            if (results.size() > search_limit) results.resize(search_limit);
            if (search_json) {
                nlohmann::json out{{"query", query::to_json(q)}, {"suggestions", query::to_json(engine->suggest(q))}};
                out["results"] = nlohmann::json::array();
                for (const auto& r : results) out["results"].push_back(ranking::to_json(r));
                std::cout << out.dump(2) << "\n";
            } else {
                std::cout << "query " << query::to_json(q).dump() << "\n";
                std::printf("%-4s %-10s %8s %8s %8s  %s\n", "rank", "member", "f", "f1", "f2", "headline");
                for (std::size_t i = 0; i < results.size(); ++i) {
                    const auto& r = results[i];
                    std::printf("%-4zu %-10s %8.4f %8.4f %8.4f  %s\n", i + 1, r.member_id.c_str(), r.f, r.f1, r.f2,
                                engine->corpus().profile(r.member_id).headline.c_str());
                }
            }
        } else if (serve->parsed()) {
            const auto engine = serve_snap.open();
            service::SessionManager sessions(engine, engine->config().service.session_store);
            service::Api api(sessions);
            service::HttpServer server(api);
            const int port = server.bind(serve_host, serve_port);
            std::printf("listening on http://%s:%d\n", serve_host.c_str(), port);
            std::fflush(stdout);
            server.listen();
        }
    } catch (const Error& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return 1;
    } catch (const std::exception& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return 1;
    }
    return 0;
}
