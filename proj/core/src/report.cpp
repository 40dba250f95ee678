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

#include <hills/error.hpp>
#include <hills/report.hpp>

#include <fmt/format.h>

namespace hills
{

namespace
{

using codec::json;

std::string markdown_cell(std::string_view text)
{
    std::string out;
    for (char c : text)
    {
        switch (c)
        {
            case '\\': out += "\\\\"; break;
            case '|': out += "\\|"; break;
            case '\n': out += "<br>"; break;
            case '\r': break;
            default: out += c;
        }
    }
    return out;
}

class Table
{
public:
    explicit Table(std::vector<std::string> header) : header_(std::move(header)) { }

    void add(std::vector<std::string> row) { rows_.push_back(std::move(row)); }

    [[nodiscard]] std::string markdown(std::string_view title) const
    {
        std::string out = fmt::format("## {}\n\n", title);
        out += line(header_);
        std::vector<std::string> rule(header_.size(), "---");
        out += line(rule);
        for (const auto& row : rows_)
        {
            out += line(row);
        }
        return out;
    }

    [[nodiscard]] std::string csv() const
    {
        std::string out = csv_row(header_);
        for (const auto& row : rows_)
        {
            out += csv_row(row);
        }
        return out;
    }

private:
    std::vector<std::string> header_;
    std::vector<std::vector<std::string>> rows_;

    static std::string line(const std::vector<std::string>& cells)
    {
        std::string out = "|";
        for (const auto& cell : cells)
        {
            out += " " + markdown_cell(cell) + " |";
        }
        return out + "\n";
    }
};

double rounded(double p)
{
    return std::stod(format_probability(p));
}

std::string evidence_text(const Evidence& evidence)
{
    std::string out;
    for (const auto& [id, state] : evidence)
    {
        out += (out.empty() ? "" : "; ") + id + "=" + state;
    }
    return out;
}

}

std::string_view to_string(ReportFormat format)
{
    switch (format)
    {
        case ReportFormat::Markdown: return "markdown";
        case ReportFormat::Csv: return "csv";
        case ReportFormat::Json: return "json";
    }
    return "markdown";
}

std::optional<ReportFormat> parse_report_format(std::string_view text)
{
    for (auto f : {ReportFormat::Markdown, ReportFormat::Csv, ReportFormat::Json})
    {
        if (to_string(f) == text)
        {
            return f;
        }
    }
    return std::nullopt;
}

void ReportSpec::check() const
{
    if (kind == ReportKind::Worksheet && !level_rank)
    {
        throw Error(ErrorCode::InvalidArgument, "a worksheet report needs a level rank");
    }
}

std::string format_probability(double p)
{
    // fmt rounds the exact binary value; exact decimal ties go to even.
    return fmt::format("{:.6f}", p);
}

std::string csv_row(std::span<const std::string> cells)
{
    std::string out;
    for (std::size_t i = 0; i < cells.size(); ++i)
    {
        if (i > 0)
        {
            out += ',';
        }
        out += '"';
        for (char c : cells[i])
        {
            if (c == '"')
            {
                out += '"';
            }
            out += c;
        }
        out += '"';
    }
    out += '\n';
    return out;
}

std::vector<std::string> worksheet_columns(int level_rank)
{
    return {"Node", "Deviation", level_rank == 1 ? "Hazard" : "Latent-hazard & Threat", "Cause", "Mitigation"};
}

std::string emit_worksheet(const Study& study, int level_rank, ReportFormat format)
{
    const auto* level = study.find_level(level_rank);
    if (level == nullptr)
    {
        throw Error(ErrorCode::UnknownLevel, fmt::format("unknown level {}", level_rank));
    }
    auto text_of = [&](const ElementId& id) {
        const auto* e = study.find_element(id);
        return e != nullptr ? e->text : id.str();
    };
    Table table(worksheet_columns(level_rank));
    json rows = json::array();
    for (const auto& entry : study.entries())
    {
        const auto* node = study.find_node(entry.node_id);
        if (node == nullptr || node->level_rank != level_rank)
        {
            continue;
        }
        std::vector<std::string> cells{node->name, study.deviation_text(entry.deviation), text_of(entry.element), text_of(entry.cause),
                                       text_of(entry.mitigation)};
        if (format == ReportFormat::Json)
        {
            rows.push_back({{"entry_id", entry.id},
                            {"node", cells[0]},
                            {"deviation", cells[1]},
                            {"element", cells[2]},
                            {"cause", cells[3]},
                            {"mitigation", cells[4]},
                            {"node_id", entry.node_id},
                            {"element_id", entry.element.str()},
                            {"cause_id", entry.cause.str()},
                            {"mitigation_id", entry.mitigation.str()}});
        }
        table.add(std::move(cells));
    }
    switch (format)
    {
        case ReportFormat::Markdown:
            return table.markdown(fmt::format("{} level analysis (level {})", level->name, level_rank));
        case ReportFormat::Csv: return table.csv();
        case ReportFormat::Json:
            return json{{"level_rank", level_rank}, {"level_name", level->name}, {"columns", worksheet_columns(level_rank)}, {"rows", std::move(rows)}}
                       .dump(2)
                + "\n";
    }
    return {};
}

std::string emit_link_report(const Study& study, std::span<const Link> links, ReportFormat format)
{
    Table table({"Link", "Rule", "First level", "First entry", "First deviation", "Second level", "Second entry", "Second deviation",
                 "Suggested direction", "Direction", "Status", "Justification"});
    json records = json::array();
    auto deviation_of = [&](const std::string& entry_id) {
        const auto* e = study.find_entry(entry_id);
        return e != nullptr ? study.deviation_text(e->deviation) : std::string{};
    };
    for (const auto& link : links)
    {
        auto justification = explain_link(link, study);
        if (format == ReportFormat::Json)
        {
            auto j = codec::to_json(link);
            j["justification"] = justification;
            records.push_back(std::move(j));
        }
        table.add({link.id, std::string(to_string(link.rule)), std::to_string(link.first.level_rank), link.first.entry_id,
                   deviation_of(link.first.entry_id), std::to_string(link.second.level_rank), link.second.entry_id,
                   deviation_of(link.second.entry_id), std::string(to_string(link.suggested_direction)),
                   std::string(to_string(link.direction)), std::string(to_string(link.status)), std::move(justification)});
    }
    switch (format)
    {
        case ReportFormat::Markdown: return table.markdown("Candidate links");
        case ReportFormat::Csv: return table.csv();
        case ReportFormat::Json: return json{{"links", std::move(records)}}.dump(2) + "\n";
    }
    return {};
}

std::string emit_bn_report(const BayesNet& bn, std::span<const BnQuery> queries, ReportFormat format)
{
    Table table({"Target", "Evidence", "Posterior"});
    json records = json::array();
    for (const auto& query : queries)
    {
        auto posterior = marginal(bn, query.target, query.evidence);
        std::string dist;
        json probs = json::array();
        for (std::size_t i = 0; i < posterior.states.size(); ++i)
        {
            dist += fmt::format("{}{}={}", i == 0 ? "" : "; ", posterior.states[i], format_probability(posterior.probabilities[i]));
            probs.push_back({{"state", posterior.states[i]}, {"probability", rounded(posterior.probabilities[i])}});
        }
        json evidence = json::object();
        for (const auto& [id, state] : query.evidence)
        {
            evidence[id] = state;
        }
        records.push_back({{"target", query.target}, {"evidence", std::move(evidence)}, {"posterior", std::move(probs)}});
        table.add({query.target, evidence_text(query.evidence), std::move(dist)});
    }
    switch (format)
    {
        case ReportFormat::Markdown: return table.markdown("Posterior queries");
        case ReportFormat::Csv: return table.csv();
        case ReportFormat::Json: return json{{"queries", std::move(records)}}.dump(2) + "\n";
    }
    return {};
}

std::string emit(const ReportSpec& spec, const Study& study)
{
    spec.check();
    switch (spec.kind)
    {
        case ReportKind::Worksheet: return emit_worksheet(study, *spec.level_rank, spec.format);
        case ReportKind::Links:
        {
            auto relations = default_relations();
            relations.merge(study.relations());
            auto links = derive_links(study, relations);
            return emit_link_report(study, links, spec.format);
        }
        case ReportKind::BnQuery:
            throw Error(ErrorCode::InvalidArgument, "BN query reports need a network; use emit_bn_report");
    }
    return {};
}

}
