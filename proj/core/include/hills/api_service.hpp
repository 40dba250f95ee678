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

#pragma once

#include <hills/bayes_net.hpp>
#include <hills/bn_links.hpp>
#include <hills/linker.hpp>
#include <hills/study.hpp>

#include <cstdint>
#include <memory>
#include <mutex>
#include <optional>
#include <string>
#include <string_view>

namespace hills
{

struct ApiResponse
{
    int status = 200;
    std::string body; ///< JSON text
};

/// Read-mostly facade over one loaded study, its link set and a BN.
///
/// State lives in an immutable snapshot. Readers grab the current snapshot
/// and never block writers; a mutation builds a new snapshot under the writer
/// lock and publishes it in one step, bumping the version. Every response body
/// carries the "version" of the snapshot it was computed from.
class ApiService
{
public:
    /// No study: every /api route answers 503.
    ApiService();
    /// `network`, when given, is the CPT-filled BN used for queries; otherwise
    /// queries run against the skeleton built from confirmed links.
    ApiService(Study study, GuideWordRelationTable relations, std::optional<BayesNet> network = std::nullopt,
               BnDefaults defaults = {});

    ApiResponse handle(std::string_view method, std::string_view path, std::string_view body = {}) const;

    ApiResponse get_study() const;
    ApiResponse get_worksheet(int level_rank) const;
    ApiResponse get_links() const;
    ApiResponse get_bn() const;
    ApiResponse post_link_status(std::string_view link_id, std::string_view body) const;
    ApiResponse post_bn_query(std::string_view body) const;

    [[nodiscard]] std::uint64_t version() const;
    /// Current link set, e.g. for export on shutdown.
    [[nodiscard]] LinkSet links() const;

    struct Snapshot;

private:
    std::shared_ptr<const Snapshot> snapshot() const;
    void publish(std::shared_ptr<const Snapshot> next) const;

    BnDefaults defaults_;
    mutable std::mutex read_mutex_;
    mutable std::mutex write_mutex_;
    mutable std::shared_ptr<const Snapshot> current_;
};

struct ServeOptions
{
    std::string host = "127.0.0.1";
    int port = 8080;
    std::optional<std::string> static_dir;
    std::string cors_origin = "http://localhost:5173";
};

/// HTTP/1.1 binding of an ApiService.
class HttpServer
{
public:
    HttpServer(const ApiService& service, ServeOptions options);
    ~HttpServer();
    HttpServer(const HttpServer&) = delete;
    HttpServer& operator=(const HttpServer&) = delete;

    /// Binds the socket; with port 0 an ephemeral port is chosen. Returns the bound port or -1.
    int bind();
    /// Serves until stop(); call after bind().
    bool listen();
    void stop();

private:
    struct Impl;
    std::unique_ptr<Impl> impl_;
};

}
