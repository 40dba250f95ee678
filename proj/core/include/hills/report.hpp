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
#include <hills/linker.hpp>
#include <hills/study.hpp>

#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace hills
{

enum class ReportFormat
{
    Markdown,
    Csv,
    Json,
};

enum class ReportKind
{
    Worksheet,
    Links,
    BnQuery,
};

std::string_view to_string(ReportFormat format);
std::optional<ReportFormat> parse_report_format(std::string_view text);

struct ReportSpec
{
    ReportKind kind = ReportKind::Worksheet;
    std::optional<int> level_rank; ///< required for worksheets
    ReportFormat format = ReportFormat::Markdown;

    /// Throws Error(InvalidArgument) when a worksheet report lacks a level.
    void check() const;
};

struct BnQuery
{
    std::string target;
    Evidence evidence;
};

/// Column headers of a level's worksheet: [Node, Deviation, Hazard, Cause,
/// Mitigation] at rank 1, "Latent-hazard & Threat" in place of "Hazard" below.
std::vector<std::string> worksheet_columns(int level_rank);

/// Throws Error(UnknownLevel).
std::string emit_worksheet(const Study& study, int level_rank, ReportFormat format);
std::string emit_link_report(const Study& study, std::span<const Link> links, ReportFormat format);
/// Propagates marginal()'s errors.
std::string emit_bn_report(const BayesNet& bn, std::span<const BnQuery> queries, ReportFormat format);
std::string emit(const ReportSpec& spec, const Study& study);

/// Fixed six decimals, ties to even.
std::string format_probability(double p);

/// RFC-4180 style: every cell quoted, quotes doubled, comma separated, LF ended.
std::string csv_row(std::span<const std::string> cells);

}
