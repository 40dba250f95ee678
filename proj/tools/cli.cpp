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

#include "cli.hpp"

#include <hills/api_service.hpp>
#include <hills/bn_links.hpp>
#include <hills/error.hpp>
#include <hills/json_io.hpp>
#include <hills/report.hpp>
#include <hills/study_format.hpp>

#include <CLI11.hpp>

#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>

#include <fmt/format.h>

namespace hills::cli
{

namespace
{

constexpr int kOk = 0;
constexpr int kFailed = 1;
constexpr int kUsage = 2;

/// Usage-class failure (bad flag values, unreadable inputs).
struct UsageError : std::runtime_error
{
    using std::runtime_error::runtime_error;
};

struct Context
{
    std::ostream& out;
    std::ostream& err;
    RunOptions options;

    std::string paint(std::string_view text, std::string_view ansi) const
    {
        return options.color ? fmt::format("\x1b[{}m{}\x1b[0m", ansi, text) : std::string(text);
    }
};

struct Flags
{
    std::string study_path;
    std::optional<int> level;
    std::string format = "markdown";
    std::optional<std::string> out_path;
    std::optional<std::string> relations_path;
    std::optional<std::string> bn_path;
    std::optional<std::string> links_path;
    std::string evidence;
    std::vector<std::string> targets;
    std::optional<int> stop_at_level;
    int port = 8080;
    std::string host = "127.0.0.1";
    std::optional<std::string> static_dir;
    std::string cors_origin = ServeOptions{}.cors_origin;
    std::optional<double> root_prior;
    bool no_root_prior = false;
};

std::string read_file(const std::string& path)
{
    std::ifstream in(path, std::ios::binary);
    if (!in)
    {
        throw UsageError("cannot read '" + path + "'");
    }
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return buffer.str();
}

ReportFormat report_format(const Flags& flags)
{
    auto format = parse_report_format(flags.format);
    if (!format)
    {
        throw UsageError("--format must be markdown, csv or json");
    }
    return *format;
}

void emit_output(const Context& ctx, const Flags& flags, const std::string& text)
{
    if (flags.out_path)
    {
        std::ofstream file(*flags.out_path, std::ios::binary | std::ios::trunc);
        if (!file)
        {
            throw UsageError("cannot write '" + *flags.out_path + "'");
        }
        file << text;
        return;
    }
    ctx.out << text;
}

/// Parses the study; prints diagnostics. Returns nullopt on errors.
std::optional<Study> load_study(const Context& ctx, const Flags& flags)
{
    auto doc = parse_study(read_file(flags.study_path), flags.study_path);
    for (const auto& d : doc.diagnostics)
    {
        ctx.err << format_diagnostic(d, flags.study_path) << "\n";
    }
    return std::move(doc.study);
}

GuideWordRelationTable effective_relations(const Study& study, const Flags& flags)
{
    auto relations = default_relations();
    relations.merge(study.relations());
    if (flags.relations_path)
    {
        auto doc = parse_relations(read_file(*flags.relations_path));
        if (!doc.ok())
        {
            std::string message = "invalid relations file:";
            for (const auto& d : doc.diagnostics)
            {
                message += "\n  " + format_diagnostic(d, *flags.relations_path);
            }
            throw Error(ErrorCode::ParseError, message);
        }
        relations.merge(doc.relations);
    }
    // The merged table must still be acyclic.
    Study probe = study;
    probe.set_relations(relations);
    for (const auto& v : validate_study(probe))
    {
        if (v.code == "RelationCycle")
        {
            throw Error(ErrorCode::RelationCycle, "merged relation table: " + v.message);
        }
    }
    return relations;
}

Evidence parse_evidence(std::string_view text)
{
    Evidence evidence;
    while (!text.empty())
    {
        auto comma = text.find(',');
        auto item = text.substr(0, comma);
        auto eq = item.find('=');
        if (eq == std::string_view::npos || eq == 0 || eq + 1 == item.size())
        {
            throw UsageError("--evidence expects id=state pairs separated by commas, got '" + std::string(item) + "'");
        }
        evidence[std::string(item.substr(0, eq))] = std::string(item.substr(eq + 1));
        text = comma == std::string_view::npos ? std::string_view{} : text.substr(comma + 1);
    }
    return evidence;
}

BnDefaults bn_defaults(const Flags& flags)
{
    BnDefaults defaults;
    if (flags.no_root_prior)
    {
        defaults.root_threat_prior.reset();
    }
    else if (flags.root_prior)
    {
        defaults.root_threat_prior = flags.root_prior;
    }
    return defaults;
}

BayesNet load_network(const Flags& flags)
{
    if (!flags.bn_path)
    {
        throw UsageError("--bn <path> is required");
    }
    return build_bn(bn_spec_from_json(read_file(*flags.bn_path)));
}

std::vector<int> levels_to_emit(const Study& study, const Flags& flags)
{
    if (flags.level)
    {
        return {*flags.level};
    }
    std::vector<int> ranks;
    for (const auto& level : study.levels())
    {
        if (!flags.stop_at_level || level.rank <= *flags.stop_at_level)
        {
            ranks.push_back(level.rank);
        }
    }
    return ranks;
}

int cmd_validate(const Context& ctx, const Flags& flags)
{
    auto doc = parse_study(read_file(flags.study_path), flags.study_path);
    for (const auto& d : doc.diagnostics)
    {
        ctx.err << format_diagnostic(d, flags.study_path) << "\n";
    }
    if (!doc.ok())
    {
        ctx.out << ctx.paint(fmt::format("FAILED: {} errors", doc.error_count()), "31") << "\n";
        return kFailed;
    }
    auto violations = validate_study(*doc.study);
    for (const auto& v : violations)
    {
        ctx.err << fmt::format("{}: {}[{}]: {}\n", flags.study_path, v.location, v.code, v.message);
    }
    if (!violations.empty())
    {
        ctx.out << ctx.paint(fmt::format("FAILED: {} violations", violations.size()), "31") << "\n";
        return kFailed;
    }
    ctx.out << ctx.paint("OK: 0 violations", "32") << "\n";
    return kOk;
}

int cmd_worksheet(const Context& ctx, const Flags& flags)
{
    auto format = report_format(flags);
    auto study = load_study(ctx, flags);
    if (!study)
    {
        return kFailed;
    }
    auto ranks = levels_to_emit(*study, flags);
    std::string text;
    if (format == ReportFormat::Json && ranks.size() != 1)
    {
        text = "{\"worksheets\": [\n";
        for (std::size_t i = 0; i < ranks.size(); ++i)
        {
            auto doc = emit_worksheet(*study, ranks[i], format);
            doc.pop_back();
            text += doc + (i + 1 < ranks.size() ? ",\n" : "\n");
        }
        text += "]}\n";
    }
    else
    {
        for (std::size_t i = 0; i < ranks.size(); ++i)
        {
            text += (i > 0 ? "\n" : "") + emit_worksheet(*study, ranks[i], format);
        }
    }
    emit_output(ctx, flags, text);
    return kOk;
}

int cmd_link(const Context& ctx, const Flags& flags)
{
    auto format = report_format(flags);
    auto study = load_study(ctx, flags);
    if (!study)
    {
        return kFailed;
    }
    auto links = derive_links(*study, effective_relations(*study, flags));
    if (flags.stop_at_level)
    {
        std::erase_if(links, [&](const Link& l) {
            return l.first.level_rank > *flags.stop_at_level || l.second.level_rank > *flags.stop_at_level;
        });
    }
    emit_output(ctx, flags, emit_link_report(*study, links, format));
    return kOk;
}

int cmd_bn_skeleton(const Context& ctx, const Flags& flags)
{
    auto study = load_study(ctx, flags);
    if (!study)
    {
        return kFailed;
    }
    LinkSet links;
    if (flags.links_path)
    {
        links = links_from_json(read_file(*flags.links_path));
    }
    auto projection = project_links(*study, links.with_status(LinkStatus::Confirmed));
    for (const auto& skipped : projection.skipped)
    {
        ctx.err << "skipped " << skipped << "\n";
    }
    auto bn = bn_from_links(*study, projection.links, bn_defaults(flags));
    emit_output(ctx, flags, bn_to_json(bn));
    return kOk;
}

int cmd_bn_check(const Context& ctx, const Flags& flags)
{
    auto study = load_study(ctx, flags);
    if (!study)
    {
        return kFailed;
    }
    auto bn = load_network(flags);
    std::size_t filled = 0;
    for (const auto& v : bn.variables())
    {
        filled += v.has_cpt() ? 1 : 0;
    }
    auto line = fmt::format("{} variables, {} edges, {}/{} CPTs filled", bn.size(), bn.edges().size(), filled, bn.size());
    if (!bn.is_complete())
    {
        ctx.out << ctx.paint("INCOMPLETE: " + line, "33") << "\n";
        return kFailed;
    }
    ctx.out << ctx.paint("OK: " + line, "32") << "\n";
    return kOk;
}

int cmd_query(const Context& ctx, const Flags& flags)
{
    auto format = report_format(flags);
    auto study = load_study(ctx, flags);
    if (!study)
    {
        return kFailed;
    }
    auto bn = load_network(flags);
    if (flags.targets.empty())
    {
        throw UsageError("--target <id> is required");
    }
    auto evidence = parse_evidence(flags.evidence);
    std::vector<BnQuery> queries;
    for (const auto& target : flags.targets)
    {
        queries.push_back(BnQuery{target, evidence});
    }
    emit_output(ctx, flags, emit_bn_report(bn, queries, format));
    return kOk;
}

int cmd_serve(const Context& ctx, const Flags& flags)
{
    auto study = load_study(ctx, flags);
    if (!study)
    {
        return kFailed;
    }
    auto relations = effective_relations(*study, flags);
    std::optional<BayesNet> network;
    if (flags.bn_path)
    {
        network = load_network(flags);
    }
    ApiService service(std::move(*study), std::move(relations), std::move(network), bn_defaults(flags));
    if (flags.links_path)
    {
        // Restore earlier review decisions by replaying statuses.
        for (const auto& link : links_from_json(read_file(*flags.links_path)).links())
        {
            if (link.status != LinkStatus::Candidate)
            {
                service.post_link_status(link.id, fmt::format(R"({{"status":"{}","direction":"{}"}})", to_string(link.status),
                                                              to_string(link.direction)));
            }
        }
    }
    ServeOptions options;
    options.host = flags.host;
    options.port = flags.port;
    options.static_dir = flags.static_dir;
    options.cors_origin = flags.cors_origin;
    HttpServer server(service, options);
    int port = server.bind();
    if (port < 0)
    {
        ctx.err << fmt::format("cannot bind {}:{}\n", flags.host, flags.port);
        return kFailed;
    }
    ctx.err << fmt::format("serving {} on http://{}:{}\n", flags.study_path, flags.host, port);
    return server.listen() ? kOk : kFailed;
}

}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err, RunOptions options)
{
    Context ctx{out, err, options};
    Flags flags;

    CLI::App app{"hills: hierarchical HAZOP-style safety analysis for learning-enabled systems", "hills"};
    app.require_subcommand(1);
    app.set_help_all_flag("--help-all", "Show help for all subcommands");

    auto add_study = [&](CLI::App* sub) {
        sub->add_option("study", flags.study_path, "Study file (.hills)")->required();
    };
    auto add_format = [&](CLI::App* sub) {
        sub->add_option("--format", flags.format, "Output format: markdown, csv or json")->capture_default_str();
        sub->add_option("--out", flags.out_path, "Write the report to this path instead of stdout");
    };
    auto add_prior = [&](CLI::App* sub) {
        auto* prior = sub->add_option("--root-prior", flags.root_prior, "P(present) for parentless threats (default 1.0)")
                          ->check(CLI::Range(0.0, 1.0));
        sub->add_flag("--no-root-prior", flags.no_root_prior, "Leave parentless threats without a prior")->excludes(prior);
    };

    auto* validate = app.add_subcommand("validate", "Parse and validate a study");
    add_study(validate);

    auto* worksheet = app.add_subcommand("worksheet", "Emit level worksheets, system level first");
    add_study(worksheet);
    worksheet->add_option("--level", flags.level, "Only this level rank");
    worksheet->add_option("--stop-at-level", flags.stop_at_level, "Stop after this level rank");
    add_format(worksheet);

    auto* link = app.add_subcommand("link", "Derive candidate links from guide-word relations");
    add_study(link);
    link->add_option("--relations", flags.relations_path, "Extra [relations] file");
    link->add_option("--stop-at-level", flags.stop_at_level, "Ignore entries below this level rank");
    add_format(link);

    auto* bn = app.add_subcommand("bn", "Bayesian network construction");
    bn->require_subcommand(1);
    auto* skeleton = bn->add_subcommand("skeleton", "Build a BN skeleton from confirmed links");
    add_study(skeleton);
    skeleton->add_option("--links", flags.links_path, "Link set JSON with review statuses");
    skeleton->add_option("--out", flags.out_path, "Write the skeleton to this path");
    add_prior(skeleton);
    auto* check = bn->add_subcommand("check", "Validate a CPT-filled BN JSON document");
    add_study(check);
    check->add_option("--bn", flags.bn_path, "BN JSON document")->required();

    auto* query = app.add_subcommand("query", "Posterior of target variables given evidence");
    add_study(query);
    query->add_option("--bn", flags.bn_path, "BN JSON document")->required();
    query->add_option("--target", flags.targets, "Target variable id (repeatable)")->required();
    query->add_option("--evidence", flags.evidence, "Observed states: id=state,id=state");
    add_format(query);

    auto* serve = app.add_subcommand("serve", "Run the HTTP API for the what-if tool");
    add_study(serve);
    serve->add_option("--port", flags.port, "TCP port")->capture_default_str();
    serve->add_option("--host", flags.host, "Bind address")->capture_default_str();
    serve->add_option("--bn", flags.bn_path, "CPT-filled BN JSON document for queries");
    serve->add_option("--relations", flags.relations_path, "Extra [relations] file");
    serve->add_option("--links", flags.links_path, "Link set JSON whose statuses are restored at startup");
    serve->add_option("--static", flags.static_dir, "Directory of UI assets served at /");
    serve->add_option("--cors-origin", flags.cors_origin, "Value of Access-Control-Allow-Origin")->capture_default_str();
    add_prior(serve);

    std::vector<const char*> argv;
    for (const auto& a : args)
    {
        argv.push_back(a.c_str());
    }
    try
    {
        app.parse(static_cast<int>(argv.size()), argv.data());
    }
    catch (const CLI::CallForHelp&)
    {
        out << app.help();
        return kOk;
    }
    catch (const CLI::CallForAllHelp&)
    {
        out << app.help("", CLI::AppFormatMode::All);
        return kOk;
    }
    catch (const CLI::ParseError& e)
    {
        err << "error: " << e.what() << "\n\n" << app.help();
        return kUsage;
    }

    try
    {
        if (validate->parsed())
        {
            return cmd_validate(ctx, flags);
        }
        if (worksheet->parsed())
        {
            return cmd_worksheet(ctx, flags);
        }
        if (link->parsed())
        {
            return cmd_link(ctx, flags);
        }
        if (skeleton->parsed())
        {
            return cmd_bn_skeleton(ctx, flags);
        }
        if (check->parsed())
        {
            return cmd_bn_check(ctx, flags);
        }
        if (query->parsed())
        {
            return cmd_query(ctx, flags);
        }
        if (serve->parsed())
        {
            return cmd_serve(ctx, flags);
        }
    }
    catch (const UsageError& e)
    {
        err << "error: " << e.what() << "\n";
        return kUsage;
    }
    catch (const Error& e)
    {
        err << ctx.paint("error", "31") << "[" << to_string(e.code()) << "]: " << e.what() << "\n";
        return kFailed;
    }
    err << app.help();
    return kUsage;
}

}
