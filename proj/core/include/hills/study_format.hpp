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

#include <hills/study.hpp>

#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace hills
{

enum class Severity
{
    Error,
    Warning,
};

struct Diagnostic
{
    Severity severity = Severity::Error;
    std::string code; ///< e.g. "E-CELLS", "W-RELATION-WORD"
    int line = 0;     ///< 1-based
    int column = 0;   ///< 1-based byte column
    std::string message;
};

/// Result of reading a `.hills` file. `study` is set iff there are no
/// error-severity diagnostics.
struct StudyDocument
{
    std::string source_name;
    std::vector<std::string> lines;
    std::optional<Study> study;
    std::vector<Diagnostic> diagnostics;

    [[nodiscard]] bool ok() const { return study.has_value(); }
    [[nodiscard]] std::size_t error_count() const;
};

/// Parses the line-oriented `.hills` study format. Never throws on bad input;
/// every problem becomes a diagnostic carrying its line and column.
StudyDocument parse_study(std::string_view text, std::string_view source_name = "<input>");

/// Canonical text: sections in the order levels, guide-words, relations, nodes,
/// attributes, elements, worksheet; records in insertion order; LF line ends.
/// Empty sections other than [levels] are omitted.
std::string serialize_study(const Study& study);

/// Parses a file holding only a [relations] section (the `--relations` input).
struct RelationsDocument
{
    GuideWordRelationTable relations;
    std::vector<Diagnostic> diagnostics;

    [[nodiscard]] bool ok() const;
};
RelationsDocument parse_relations(std::string_view text);

/// "source:line:column: error[code]: message"
std::string format_diagnostic(const Diagnostic& diagnostic, std::string_view source_name);

/// Escapes a cell for the pipe-separated format: `\\`, `\|`, `\n`, `\r`, `\t`,
/// plus `\s` for leading/trailing spaces and `\#`, `\[` at the start of a cell.
std::string escape_cell(std::string_view text);

}
