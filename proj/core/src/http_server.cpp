/*
    Licensed under the Apache License, Version 2.0 (the "License");
    you may not use this file except in compliance with the License.
    You may obtain a copy of the License at

        https://www.apache.org/licenses/LICENSE-2.0

    Unless required by applicable law or agreed to in writing, software
    distributed under the License is distributed on an "AS IS" BASIS,
    WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
    See the License for the specific language governing permissions and
    limitations under the License.
*/

#include <hills/api_service.hpp>

#include <httplib.h>

namespace hills
{

struct HttpServer::Impl
{
    Impl(const ApiService& s, ServeOptions o) : service(s), options(std::move(o)) {}

    const ApiService& service;
    ServeOptions options;
    httplib::Server server;
    int port = -1;
};

HttpServer::HttpServer(const ApiService& service, ServeOptions options)
    : impl_(std::make_unique<Impl>(service, std::move(options)))
{
    auto& server = impl_->server;
    const auto origin = impl_->options.cors_origin;
    server.set_default_headers({{"Access-Control-Allow-Origin", origin}, {"Vary", "Origin"}});
    server.Options(R"(/api/.*)", [](const httplib::Request&, httplib::Response& res) {
        res.set_header("Access-Control-Allow-Methods", "GET, POST, OPTIONS");
        res.set_header("Access-Control-Allow-Headers", "Content-Type");
        res.status = 204;
    });
    auto forward = [this](const httplib::Request& req, httplib::Response& res) {
        auto out = impl_->service.handle(req.method, req.path, req.body);
        res.status = out.status;
        res.set_content(out.body, "application/json");
    };
    server.Get(R"(/api/.*)", forward);
    server.Post(R"(/api/.*)", forward);
    if (impl_->options.static_dir)
    {
        server.set_mount_point("/", *impl_->options.static_dir);
    }
}

HttpServer::~HttpServer()
{
    stop();
}

int HttpServer::bind()
{
    if (impl_->options.port == 0)
    {
        impl_->port = impl_->server.bind_to_any_port(impl_->options.host);
    }
    else
    {
        impl_->port = impl_->server.bind_to_port(impl_->options.host, impl_->options.port) ? impl_->options.port : -1;
    }
    return impl_->port;
}

bool HttpServer::listen()
{
    return impl_->server.listen_after_bind();
}

void HttpServer::stop()
{
    if (impl_->server.is_running())
    {
        impl_->server.stop();
    }
}

}
