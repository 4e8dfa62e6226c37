#pragma once

#include <map>
#include <memory>
#include <string>

#include <nlohmann/json.hpp>

#include "exemplar/session.hpp"

namespace exemplar::service {

struct ApiResponse {
    int status = 200;
    nlohmann::json body;
};

using QueryParams = std::map<std::string, std::string>;

/// Transport-independent HTTP+JSON API. The HTTP server forwards every request here, and tests
/// call it directly.
///
///   POST /api/sessions                 {searcher_id, ideal_candidate_ids[]} -> 201
///   POST /api/sessions/{id}/refine     {query}                              -> 200 | 404 | 422
///   GET  /api/sessions/{id}            ?offset=&limit=                      -> 200 | 404
///   GET  /api/members/{id}                                                  -> 200 | 404
///   GET  /api/entities/skills          ?prefix=                             -> 200
///   GET  /api/entities/companies       ?prefix=                             -> 200
class Api {
public:
    explicit Api(SessionManager& sessions) : sessions_(sessions) {}

    ApiResponse handle(const std::string& method, const std::string& path, const std::string& body,
                       const QueryParams& params = {}) const;

private:
    ApiResponse create_session(const nlohmann::json& body) const;
    ApiResponse refine(const std::string& id, const nlohmann::json& body) const;
    ApiResponse get_session(const std::string& id, const QueryParams& params) const;
    ApiResponse get_member(const std::string& id) const;
    ApiResponse skills(const QueryParams& params) const;
    ApiResponse companies(const QueryParams& params) const;

    SessionManager& sessions_;
};

/// Blocking HTTP server around an Api instance.
class HttpServer {
public:
    explicit HttpServer(Api& api);
    ~HttpServer();
    HttpServer(const HttpServer&) = delete;
    HttpServer& operator=(const HttpServer&) = delete;

    /// Binds `host:port`; port 0 picks a free port. Returns the bound port.
    int bind(const std::string& host, int port);
    /// Serves until stop() is called.
    void listen();
    void stop();

private:
    struct Impl;
    std::unique_ptr<Impl> impl_;
};

}  // namespace exemplar::service
