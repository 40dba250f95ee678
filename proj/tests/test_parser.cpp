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

#include "support/fixtures.hpp"
#include "support/generators.hpp"

#include <hills/study_format.hpp>

#include <gtest/gtest.h>

#include <algorithm>
#include <sstream>

using namespace hills;

namespace
{

constexpr const char* kMinimal = R"(# minimal
[levels]
1 | System
2 | ML-Lifecycle
3 | Inner-ML

[nodes]
data-transmission | 1 | component | Data transmission
)";

std::vector<std::string> split_lines(const std::string& text)
{
    std::vector<std::string> lines;
    std::istringstream in(text);
    for (std::string line; std::getline(in, line);)
    {
        lines.push_back(line);
    }
    return lines;
}

std::string join_lines(const std::vector<std::string>& lines)
{
    std::string out;
    for (const auto& l : lines)
    {
        out += l + "\n";
    }
    return out;
}

bool has_diagnostic_at(const StudyDocument& doc, int line)
{
    return std::ranges::any_of(doc.diagnostics, [&](const Diagnostic& d) { return d.line == line && d.severity == Severity::Error; });
}

std::string dump(const StudyDocument& doc)
{
    std::string out;
    for (const auto& d : doc.diagnostics)
    {
        out += format_diagnostic(d, doc.source_name) + "\n";
    }
    return out;
}

}

TEST(Parser, MinimalFile)
{
    auto doc = parse_study(kMinimal, "min.hills");
    ASSERT_TRUE(doc.ok()) << dump(doc);
    EXPECT_EQ(doc.study->levels().size(), 3u);
    ASSERT_EQ(doc.study->nodes().size(), 1u);
    EXPECT_EQ(doc.study->nodes()[0].name, "Data transmission");
    EXPECT_EQ(doc.source_name, "min.hills");
}

TEST(Parser, EmptyStudySerializesToLevelsOnly)
{
    auto text = serialize_study(new_study(default_level_names()));
    EXPECT_EQ(text, "# HILLS study\n[levels]\n1 | System\n2 | ML-Lifecycle\n3 | Inner-ML\n");
    auto doc = parse_study(text);
    ASSERT_TRUE(doc.ok());
    EXPECT_EQ(*doc.study, new_study(default_level_names()));
}

TEST(Parser, UndeclaredGuideWordIsReportedAtItsLine)
{
    std::string text = std::string(kMinimal) + R"(
[attributes]
data-transmission | action

[elements]
H1.1 | Erratic trajectory
C1.a | No data from sensor (transient)
M1.a | Acoustic guidance system

[worksheet]
data-transmission | Sideways | action | H1.1 | C1.a | M1.a
)";
    auto doc = parse_study(text);
    ASSERT_FALSE(doc.ok());
    ASSERT_EQ(doc.error_count(), 1u) << dump(doc);
    EXPECT_EQ(doc.diagnostics[0].line, 19);
    EXPECT_EQ(doc.diagnostics[0].code, "E-GUIDEWORD");
    EXPECT_EQ(doc.diagnostics[0].column, 21);
}

TEST(Parser, NotApplicableGuideWord)
{
    std::string text = R"([levels]
1 | System
[guide-words]
Perturbed | new | 2 | Data was perturbed by external attackers
[nodes]
n | 1 | component | N
[attributes]
n | a
[elements]
H1.1 | h
C1.a | c
M1.a | m
[worksheet]
n | perturbed | a | H1.1 | C1.a | M1.a
)";
    auto doc = parse_study(text);
    ASSERT_FALSE(doc.ok());
    // Applicability at an undeclared rank is harmless; only the row is at fault.
    ASSERT_EQ(doc.error_count(), 1u) << dump(doc);
    EXPECT_TRUE(has_diagnostic_at(doc, 14)) << dump(doc);
}

TEST(Parser, ToleratesCrlfBomAndComments)
{
    std::string text = "\xEF\xBB\xBF# c\r\n[levels]\r\n  1 |\tSystem  \r\n# trailing comment\r\n";
    auto doc = parse_study(text);
    ASSERT_TRUE(doc.ok()) << dump(doc);
    EXPECT_EQ(doc.study->levels()[0].name, "System");
}

TEST(Parser, RejectsInvalidUtf8)
{
    auto doc = parse_study("[levels]\n1 | Sys\xff\n");
    ASSERT_FALSE(doc.ok());
    EXPECT_EQ(doc.diagnostics[0].code, "E-ENCODING");
    EXPECT_EQ(doc.diagnostics[0].line, 2);
}

TEST(Parser, UnknownSectionsAndOrderAreErrors)
{
    auto unknown = parse_study("[levels]\n1 | S\n[colours]\nred\n");
    ASSERT_FALSE(unknown.ok());
    EXPECT_EQ(unknown.diagnostics[0].code, "E-SECTION");
    EXPECT_EQ(unknown.diagnostics[0].line, 3);

    auto order = parse_study("[levels]\n1 | S\n[worksheet]\n[nodes]\n");
    ASSERT_FALSE(order.ok());
    EXPECT_EQ(order.diagnostics[0].code, "E-SECTION-ORDER");
    EXPECT_EQ(order.diagnostics[0].line, 4);

    auto outside = parse_study("1 | S\n");
    ASSERT_FALSE(outside.ok());
    EXPECT_EQ(outside.diagnostics[0].code, "E-OUTSIDE");
}

TEST(Parser, EscapesRoundTrip)
{
    const std::vector<std::string> cells{"a|b", "back\\slash", " lead", "trail ", "#hash", "[bracket", "multi\nline", "tab\there",
                                         "cr\rhere", "x > X", "ünï→code", "mid # and [ ok"};
    for (const auto& cell : cells)
    {
        auto study = new_study({"System"});
        study.add_node(1, cell, Granularity::Component, cell, "n");
        auto text = serialize_study(study);
        auto doc = parse_study(text);
        ASSERT_TRUE(doc.ok()) << text << dump(doc);
        EXPECT_EQ(doc.study->nodes()[0].name, cell);
        EXPECT_EQ(doc.study->nodes()[0].description, cell);
        EXPECT_EQ(escape_cell(cell).find('\n'), std::string::npos);
    }
}

TEST(Parser, BadEscapeIsReported)
{
    auto doc = parse_study("[levels]\n1 | Sys\\qtem\n");
    ASSERT_FALSE(doc.ok());
    EXPECT_EQ(doc.diagnostics[0].code, "E-ESCAPE");
    EXPECT_EQ(doc.diagnostics[0].line, 2);
    EXPECT_EQ(doc.diagnostics[0].column, 8);
}

TEST(Parser, DiagnosticFormat)
{
    Diagnostic d{Severity::Error, "E-CELLS", 4, 2, "expected 2 cells"};
    EXPECT_EQ(format_diagnostic(d, "f.hills"), "f.hills:4:2: error[E-CELLS]: expected 2 cells");
    d.severity = Severity::Warning;
    EXPECT_EQ(format_diagnostic(d, "f.hills"), "f.hills:4:2: warning[E-CELLS]: expected 2 cells");
}

TEST(Parser, RelationCycleIsAnError)
{
    auto doc = parse_study(R"([levels]
1 | S
[guide-words]
No | classic | 1 | none
Part of | redefined | 1 | part | orig
[relations]
includes | No | Part of
includes | Part of | No
)");
    ASSERT_FALSE(doc.ok());
    EXPECT_EQ(doc.diagnostics[0].code, "E-RELATION-CYCLE");
    EXPECT_EQ(doc.diagnostics[0].line, 8);
}

TEST(Parser, RelationsFile)
{
    auto ok = parse_relations("# extra\n[relations]\nsimilar | Invalid | Incompatible\nincludes | More | Less\n");
    ASSERT_TRUE(ok.ok());
    EXPECT_TRUE(ok.relations.similar("invalid", "incompatible"));
    EXPECT_TRUE(ok.relations.includes("more", "less"));
    auto bad = parse_relations("[relations]\nsimilar | Invalid\n");
    ASSERT_FALSE(bad.ok());
    EXPECT_EQ(bad.diagnostics[0].line, 2);
    auto other = parse_relations("[levels]\n1 | S\n");
    EXPECT_FALSE(other.ok());
}

TEST(Parser, CorpusReproducesNodeTable)
{
    auto study = test::load_corpus();
    std::vector<std::pair<int, std::string>> nodes;
    for (const auto& n : study.nodes())
    {
        nodes.emplace_back(n.level_rank, n.name);
    }
    const std::vector<std::pair<int, std::string>> expected{
        {1, "User"},
        {1, "Hardware components"},
        {1, "Data transmission"},
        {2, "Data collection"},
        {2, "Labeling"},
        {2, "Data preprocessing"},
        {2, "Hyperparameter setting"},
        {2, "Model deployment"},
        {3, "Feature extracting"},
        {3, "Object Detection"},
        {2, "Localisation"},
    };
    EXPECT_EQ(nodes, expected);
}

TEST(Parser, CorpusIsAFixedPoint)
{
    auto text = test::read_file(test::data_path("solitude.hills"));
    auto first = parse_study(text);
    ASSERT_TRUE(first.ok());
    auto canonical = serialize_study(*first.study);
    auto second = parse_study(canonical);
    ASSERT_TRUE(second.ok()) << dump(second);
    EXPECT_EQ(*second.study, *first.study);
    EXPECT_EQ(serialize_study(*second.study), canonical);
}

TEST(Parser, ProgrammaticTableRowSerializesVerbatim)
{
    auto study = test::fixture_study({{1, "Data transmission", "No", "action"}});
    auto text = serialize_study(study);
    EXPECT_NE(text.find("data-transmission | No | action | H1.1 | C1.a | M1.a"), std::string::npos) << text;

    auto corpus = test::load_corpus();
    auto corpus_text = serialize_study(corpus);
    EXPECT_NE(corpus_text.find("| Acoustic guidance system\n"), std::string::npos);
}

TEST(Parser, RoundTripOnRandomStudies)
{
    test::Rng rng(2024);
    for (int i = 0; i < 100; ++i)
    {
        auto study = test::random_study(rng);
        auto text = serialize_study(study);
        auto doc = parse_study(text, "random");
        ASSERT_TRUE(doc.ok()) << "study " << i << "\n" << text << dump(doc);
        EXPECT_EQ(*doc.study, study) << "study " << i << "\n" << text;
        EXPECT_EQ(serialize_study(*doc.study), text);
        EXPECT_TRUE(validate_study(*doc.study).empty());
    }
}

namespace
{

/// Breaks one record line so it cannot parse. Returns the replacement line.
std::string corrupt(const std::string& line, int how)
{
    switch (how % 5)
    {
        case 0: return line + " | x | y | z | w | v";     // too many cells
        case 1: return "lonely";                           // too few cells everywhere
        case 2: return line + " \\q";                     // unknown escape
        case 3: return line + "\\";                        // dangling escape
        default: return " | " + line.substr(line.find('|') + 1); // empty key cell
    }
}

}

TEST(Parser, EveryCorruptedLineIsPinpointed)
{
    test::Rng rng(77);
    int trials = 0;
    for (int i = 0; i < 100; ++i)
    {
        auto study = test::random_study(rng);
        auto lines = split_lines(serialize_study(study));
        std::vector<std::size_t> records;
        for (std::size_t k = 0; k < lines.size(); ++k)
        {
            if (!lines[k].empty() && lines[k][0] != '#' && lines[k][0] != '[')
            {
                records.push_back(k);
            }
        }
        for (int how = 0; how < 5; ++how)
        {
            auto target = records[rng() % records.size()];
            auto broken = lines;
            broken[target] = corrupt(lines[target], how);
            auto doc = parse_study(join_lines(broken), "corrupt");
            int line_no = static_cast<int>(target) + 1;
            ASSERT_FALSE(doc.ok()) << broken[target];
            EXPECT_TRUE(has_diagnostic_at(doc, line_no)) << "line " << line_no << ": " << broken[target] << "\n" << dump(doc);
            // Nothing before the damage is blamed.
            EXPECT_GE(doc.diagnostics.front().line, line_no) << dump(doc);
            ++trials;
        }
        // Several damaged lines at once: each one is reported.
        auto broken = lines;
        std::vector<int> hit;
        for (auto k : records)
        {
            if (rng() % 4 == 0)
            {
                broken[k] = corrupt(lines[k], static_cast<int>(rng() % 4));
                hit.push_back(static_cast<int>(k) + 1);
            }
        }
        auto doc = parse_study(join_lines(broken));
        for (int line_no : hit)
        {
            EXPECT_TRUE(has_diagnostic_at(doc, line_no)) << "line " << line_no << "\n" << dump(doc);
        }
    }
    EXPECT_EQ(trials, 500);
}

TEST(Parser, DiagnosticsAlwaysCarryPositions)
{
    test::Rng rng(3);
    for (int i = 0; i < 200; ++i)
    {
        std::string text;
        for (std::size_t n = rng() % 200; n > 0; --n)
        {
            static const char alphabet[] = "[]|\\#\n abcLHTCM123.-,";
            text += alphabet[rng() % (sizeof(alphabet) - 1)];
        }
        auto doc = parse_study(text);
        auto n_lines = static_cast<int>(std::ranges::count(text, '\n')) + 1;
        for (const auto& d : doc.diagnostics)
        {
            EXPECT_GE(d.line, 1);
            EXPECT_LE(d.line, n_lines);
            EXPECT_GE(d.column, 1);
        }
        EXPECT_EQ(doc.ok(), doc.error_count() == 0);
    }
}
