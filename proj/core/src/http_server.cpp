#include <httplib.h>

#include "exemplar/api.hpp"
#include "exemplar/error.hpp"

namespace exemplar::service {

struct HttpServer::Impl {
    Api& api;
    httplib::Server server;

    explicit Impl(Api& a) : api(a) {
        auto forward = [this](const httplib::Request& req, httplib::Response& res) {
            QueryParams params;
            for (const auto& [key, value] : req.params) params.emplace(key, value);
            const auto reply = api.handle(req.method, req.path, req.body, params);
            res.status = reply.status;
            res.set_content(reply.body.dump(), "application/json");
        };
        server.Get(R"(/api/.*)", forward);
        server.Post(R"(/api/.*)", forward);
    }
};

HttpServer::HttpServer(Api& api) : impl_(std::make_unique<Impl>(api)) {}

HttpServer::~HttpServer() { stop(); }

int HttpServer::bind(const std::string& host, int port) {
    if (port == 0) {
        const int bound = impl_->server.bind_to_any_port(host);
        if (bound < 0) throw IoError("cannot bind " + host);
        return bound;
    }
    if (!impl_->server.bind_to_port(host, port)) throw IoError("cannot bind " + host + ":" + std::to_string(port));
    return port;
}

void HttpServer::listen() { impl_->server.listen_after_bind(); }

void HttpServer::stop() {
    if (impl_ && impl_->server.is_running()) impl_->server.stop();
}

}  // namespace exemplar::service
