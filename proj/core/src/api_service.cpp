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

#include "json_codec.hpp"

#include <hills/api_service.hpp>
#include <hills/error.hpp>
#include <hills/report.hpp>

#include <charconv>

namespace hills
{

using codec::json;

struct ApiService::Snapshot
{
    std::shared_ptr<const Study> study;
    GuideWordRelationTable relations;
    LinkSet links;
    std::shared_ptr<const BayesNet> file_network;
    std::optional<BayesNet> skeleton;
    std::string skeleton_error;
    std::vector<std::string> skipped;
    std::uint64_t version = 0;

    [[nodiscard]] const BayesNet* network() const
    {
        if (file_network)
        {
            return file_network.get();
        }
        return skeleton ? &*skeleton : nullptr;
    }
};

namespace
{

ApiResponse respond(int status, json body, std::uint64_t version)
{
    body["version"] = version;
    return ApiResponse{status, body.dump(2) + "\n"};
}

ApiResponse error_response(int status, std::string_view code, const std::string& message, std::uint64_t version)
{
    return respond(status, json{{"error", {{"code", code}, {"message", message}}}}, version);
}

void rebuild_skeleton(ApiService::Snapshot& snap, const BnDefaults& defaults)
{
    snap.skeleton.reset();
    snap.skeleton_error.clear();
    snap.skipped.clear();
    try
    {
        auto confirmed = snap.links.with_status(LinkStatus::Confirmed);
        auto projection = project_links(*snap.study, confirmed);
        snap.skipped = std::move(projection.skipped);
        snap.skeleton = bn_from_links(*snap.study, projection.links, defaults);
    }
    catch (const Error& e)
    {
        snap.skeleton_error = std::string(to_string(e.code())) + ": " + e.what();
    }
}

std::vector<std::string_view> segments(std::string_view path)
{
    if (auto q = path.find('?'); q != std::string_view::npos)
    {
        path = path.substr(0, q);
    }
    std::vector<std::string_view> out;
    while (!path.empty())
    {
        auto slash = path.find('/');
        auto part = path.substr(0, slash);
        if (!part.empty())
        {
            out.push_back(part);
        }
        if (slash == std::string_view::npos)
        {
            break;
        }
        path.remove_prefix(slash + 1);
    }
    return out;
}

}

ApiService::ApiService() : current_(std::make_shared<const Snapshot>()) { }

ApiService::ApiService(Study study, GuideWordRelationTable relations, std::optional<BayesNet> network, BnDefaults defaults)
    : defaults_(defaults)
{
    auto snap = std::make_shared<Snapshot>();
    snap->study = std::make_shared<const Study>(std::move(study));
    snap->relations = std::move(relations);
    snap->links = LinkSet(derive_links(*snap->study, snap->relations));
    if (network)
    {
        snap->file_network = std::make_shared<const BayesNet>(std::move(*network));
    }
    rebuild_skeleton(*snap, defaults_);
    snap->version = 1;
    current_ = std::move(snap);
}

std::shared_ptr<const ApiService::Snapshot> ApiService::snapshot() const
{
    std::lock_guard lock(read_mutex_);
    return current_;
}

void ApiService::publish(std::shared_ptr<const Snapshot> next) const
{
    std::lock_guard lock(read_mutex_);
    current_ = std::move(next);
}

std::uint64_t ApiService::version() const
{
    return snapshot()->version;
}

LinkSet ApiService::links() const
{
    return snapshot()->links;
}

ApiResponse ApiService::handle(std::string_view method, std::string_view path, std::string_view body) const
{
    auto parts = segments(path);
    if (parts.empty() || parts[0] != "api")
    {
        return error_response(404, "NotFound", "no such route", version());
    }
    if (method == "GET" && parts.size() == 2 && parts[1] == "study")
    {
        return get_study();
    }
    if (method == "GET" && parts.size() == 4 && parts[1] == "levels" && parts[3] == "worksheet")
    {
        int rank = 0;
        auto [ptr, ec] = std::from_chars(parts[2].data(), parts[2].data() + parts[2].size(), rank);
        if (ec != std::errc{} || ptr != parts[2].data() + parts[2].size())
        {
            return error_response(404, "UnknownLevel", "level rank must be an integer", version());
        }
        return get_worksheet(rank);
    }
    if (method == "GET" && parts.size() == 2 && parts[1] == "links")
    {
        return get_links();
    }
    if (method == "GET" && parts.size() == 2 && parts[1] == "bn")
    {
        return get_bn();
    }
    if (method == "POST" && parts.size() == 4 && parts[1] == "links" && parts[3] == "status")
    {
        return post_link_status(parts[2], body);
    }
    if (method == "POST" && parts.size() == 3 && parts[1] == "bn" && parts[2] == "query")
    {
        return post_bn_query(body);
    }
    return error_response(404, "NotFound", "no such route", version());
}

ApiResponse ApiService::get_study() const
{
    auto snap = snapshot();
    if (!snap->study)
    {
        return error_response(503, "NoStudy", "no study loaded", snap->version);
    }
    return respond(200, codec::to_json(*snap->study), snap->version);
}

ApiResponse ApiService::get_worksheet(int level_rank) const
{
    auto snap = snapshot();
    if (!snap->study)
    {
        return error_response(503, "NoStudy", "no study loaded", snap->version);
    }
    if (snap->study->find_level(level_rank) == nullptr)
    {
        return error_response(404, "UnknownLevel", "unknown level " + std::to_string(level_rank), snap->version);
    }
    return respond(200, json::parse(emit_worksheet(*snap->study, level_rank, ReportFormat::Json)), snap->version);
}

ApiResponse ApiService::get_links() const
{
    auto snap = snapshot();
    if (!snap->study)
    {
        return error_response(503, "NoStudy", "no study loaded", snap->version);
    }
    return respond(200, json::parse(emit_link_report(*snap->study, snap->links.links(), ReportFormat::Json)), snap->version);
}

ApiResponse ApiService::get_bn() const
{
    auto snap = snapshot();
    if (!snap->study)
    {
        return error_response(503, "NoStudy", "no study loaded", snap->version);
    }
    const auto* bn = snap->network();
    json body{{"source", snap->file_network ? "file" : "links"},
              {"complete", bn != nullptr && bn->is_complete()},
              {"network", bn != nullptr ? codec::to_json(bn->spec()) : json(nullptr)},
              {"skeleton_error", snap->skeleton_error.empty() ? json(nullptr) : json(snap->skeleton_error)},
              {"skipped_links", snap->skipped}};
    return respond(200, std::move(body), snap->version);
}

ApiResponse ApiService::post_link_status(std::string_view link_id, std::string_view body) const
{
    std::lock_guard writer(write_mutex_);
    auto snap = snapshot();
    if (!snap->study)
    {
        return error_response(503, "NoStudy", "no study loaded", snap->version);
    }
    if (snap->links.find(link_id) == nullptr)
    {
        return error_response(404, "UnknownLink", "unknown link '" + std::string(link_id) + "'", snap->version);
    }
    json request;
    try
    {
        request = json::parse(body);
    }
    catch (const json::exception&)
    {
        return error_response(400, "BadRequest", "request body must be JSON", snap->version);
    }
    if (!request.is_object() || !request.contains("status") || !request["status"].is_string())
    {
        return error_response(422, "BadStatus", "body must carry a string 'status'", snap->version);
    }
    auto status = parse_link_status(request["status"].get<std::string>());
    if (!status)
    {
        return error_response(422, "BadStatus", "status must be candidate, confirmed or rejected", snap->version);
    }
    std::optional<LinkDirection> direction;
    if (request.contains("direction") && !request["direction"].is_null())
    {
        if (!request["direction"].is_string() || !(direction = parse_link_direction(request["direction"].get<std::string>())))
        {
            return error_response(422, "BadDirection", "direction must be none, higher_explains_lower or lower_explains_higher",
                                  snap->version);
        }
    }

    auto next = std::make_shared<Snapshot>(*snap);
    next->links = set_link_status(snap->links, link_id, *status, direction);
    rebuild_skeleton(*next, defaults_);
    next->version = snap->version + 1;
    const auto* link = next->links.find(link_id);
    auto link_json = codec::to_json(*link);
    link_json["justification"] = explain_link(*link, *next->study);
    auto version = next->version;
    publish(std::move(next));
    return respond(200, json{{"link", std::move(link_json)}}, version);
}

ApiResponse ApiService::post_bn_query(std::string_view body) const
{
    auto snap = snapshot();
    if (!snap->study)
    {
        return error_response(503, "NoStudy", "no study loaded", snap->version);
    }
    json request;
    try
    {
        request = json::parse(body);
    }
    catch (const json::exception&)
    {
        return error_response(400, "BadRequest", "request body must be JSON", snap->version);
    }
    if (!request.is_object() || !request.contains("target") || !request["target"].is_string())
    {
        return error_response(400, "BadRequest", "body must carry a string 'target'", snap->version);
    }
    Evidence evidence;
    if (request.contains("evidence") && !request["evidence"].is_null())
    {
        if (!request["evidence"].is_object())
        {
            return error_response(400, "BadRequest", "'evidence' must map variable ids to states", snap->version);
        }
        for (const auto& [id, state] : request["evidence"].items())
        {
            if (!state.is_string())
            {
                return error_response(400, "BadRequest", "evidence state of '" + id + "' must be a string", snap->version);
            }
            evidence[id] = state.get<std::string>();
        }
    }
    const auto* bn = snap->network();
    if (bn == nullptr)
    {
        return error_response(409, "NoNetwork", "no BN available: " + snap->skeleton_error, snap->version);
    }
    if (!bn->is_complete())
    {
        return error_response(409, "IncompleteCpt", "BN skeleton lacks CPTs; fill them in a BN JSON file", snap->version);
    }
    try
    {
        auto posterior = marginal(*bn, request["target"].get<std::string>(), evidence);
        auto out = codec::to_json(posterior);
        json echoed = json::object();
        for (const auto& [id, state] : evidence)
        {
            echoed[id] = state;
        }
        out["evidence"] = std::move(echoed);
        return respond(200, std::move(out), snap->version);
    }
    catch (const Error& e)
    {
        int status = 422;
        if (e.code() == ErrorCode::UnknownVariable)
        {
            status = 404;
        }
        else if (e.code() == ErrorCode::IncompleteCpt)
        {
            status = 409;
        }
        return error_response(status, to_string(e.code()), e.what(), snap->version);
    }
}

}
