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

#include <hills/error.hpp>
#include <hills/study_format.hpp>

#include <algorithm>
#include <array>
#include <charconv>
#include <functional>
#include <map>
#include <set>

#include <fmt/format.h>

namespace hills
{

namespace
{

struct Cell
{
    std::string text; ///< unescaped
    int column = 1;   ///< 1-based column of the first significant byte
};

enum class Section
{
    None,
    Levels,
    GuideWords,
    Relations,
    Nodes,
    Attributes,
    Elements,
    Worksheet,
};

constexpr std::array section_names{
    std::pair{Section::Levels, std::string_view{"levels"}},
    std::pair{Section::GuideWords, std::string_view{"guide-words"}},
    std::pair{Section::Relations, std::string_view{"relations"}},
    std::pair{Section::Nodes, std::string_view{"nodes"}},
    std::pair{Section::Attributes, std::string_view{"attributes"}},
    std::pair{Section::Elements, std::string_view{"elements"}},
    std::pair{Section::Worksheet, std::string_view{"worksheet"}},
};

bool is_blank(char c)
{
    return c == ' ' || c == '\t';
}

bool valid_utf8(std::string_view s)
{
    std::size_t i = 0;
    while (i < s.size())
    {
        auto c = static_cast<unsigned char>(s[i]);
        int extra = 0;
        if (c < 0x80)
        {
            ++i;
            continue;
        }
        if ((c & 0xE0) == 0xC0 && c >= 0xC2)
        {
            extra = 1;
        }
        else if ((c & 0xF0) == 0xE0)
        {
            extra = 2;
        }
        else if ((c & 0xF8) == 0xF0 && c <= 0xF4)
        {
            extra = 3;
        }
        else
        {
            return false;
        }
        if (i + extra >= s.size())
        {
            return false;
        }
        for (int k = 1; k <= extra; ++k)
        {
            if ((static_cast<unsigned char>(s[i + k]) & 0xC0) != 0x80)
            {
                return false;
            }
        }
        i += extra + 1;
    }
    return true;
}

class Parser
{
public:
    explicit Parser(StudyDocument& doc) : doc_(doc) { }

    void run(bool relations_only)
    {
        relations_only_ = relations_only;
        for (std::size_t i = 0; i < doc_.lines.size(); ++i)
        {
            line_no_ = static_cast<int>(i) + 1;
            handle_line(doc_.lines[i]);
        }
        if (!relations_only_ && !seen_.contains(Section::Levels) && !has_error())
        {
            line_no_ = std::max(line_no_, 1);
            error("E-NO-LEVELS", 1, "study declares no [levels] section");
        }
        if (!has_error() && !relations_only_)
        {
            finish();
        }
    }

    Study& study() { return study_; }
    GuideWordRelationTable& relations() { return relations_; }

private:
    StudyDocument& doc_;
    Study study_;
    GuideWordRelationTable relations_;
    Section section_ = Section::None;
    std::set<Section> seen_;
    bool relations_only_ = false;
    int line_no_ = 0;
    std::map<std::string, int> relation_lines_;

    bool has_error() const
    {
        return std::ranges::any_of(doc_.diagnostics, [](const Diagnostic& d) { return d.severity == Severity::Error; });
    }

    void error(std::string code, int column, std::string message)
    {
        doc_.diagnostics.push_back(Diagnostic{Severity::Error, std::move(code), line_no_, column, std::move(message)});
    }

    void warning(std::string code, int column, std::string message)
    {
        doc_.diagnostics.push_back(Diagnostic{Severity::Warning, std::move(code), line_no_, column, std::move(message)});
    }

    void handle_line(std::string_view line)
    {
        if (!valid_utf8(line))
        {
            error("E-ENCODING", 1, "line is not valid UTF-8");
            return;
        }
        auto first = std::ranges::find_if_not(line, is_blank);
        if (first == line.end())
        {
            return;
        }
        int column = static_cast<int>(first - line.begin()) + 1;
        if (*first == '#')
        {
            return;
        }
        if (*first == '[')
        {
            handle_header(line.substr(static_cast<std::size_t>(column - 1)), column);
            return;
        }
        if (section_ == Section::None)
        {
            error("E-OUTSIDE", column, "record outside of any section");
            return;
        }
        std::vector<Cell> cells;
        if (!split(line, cells))
        {
            return;
        }
        handle_record(cells);
    }

    void handle_header(std::string_view text, int column)
    {
        auto end = text.find_last_not_of(" \t");
        text = text.substr(0, end + 1);
        if (text.size() < 3 || text.back() != ']')
        {
            error("E-SECTION", column, "malformed section header '" + std::string(text) + "'");
            section_ = Section::None;
            return;
        }
        auto name = text.substr(1, text.size() - 2);
        auto it = std::ranges::find(section_names, name, &std::pair<Section, std::string_view>::second);
        if (it == section_names.end())
        {
            error("E-SECTION", column + 1, "unknown section '" + std::string(name) + "'");
            section_ = Section::None;
            return;
        }
        if (relations_only_ && it->first != Section::Relations)
        {
            error("E-SECTION", column + 1, "a relations file may only hold a [relations] section");
            section_ = Section::None;
            return;
        }
        if (seen_.contains(it->first))
        {
            error("E-SECTION", column + 1, "section [" + std::string(name) + "] appears twice");
            section_ = Section::None;
            return;
        }
        if (!seen_.empty() && *seen_.rbegin() > it->first)
        {
            error("E-SECTION-ORDER", column + 1,
                  "section [" + std::string(name) + "] must come before [" + std::string(section_name(*seen_.rbegin())) + "]");
        }
        seen_.insert(it->first);
        section_ = it->first;
    }

    static std::string_view section_name(Section s)
    {
        auto it = std::ranges::find(section_names, s, &std::pair<Section, std::string_view>::first);
        return it == section_names.end() ? "?" : it->second;
    }

    bool split(std::string_view line, std::vector<Cell>& cells)
    {
        std::size_t start = 0;
        for (std::size_t i = 0; i <= line.size(); ++i)
        {
            // A trailing backslash stays in the cell so unescape can report it.
            if (i + 1 < line.size() && line[i] == '\\')
            {
                ++i;
                continue;
            }
            if (i == line.size() || line[i] == '|')
            {
                auto raw = line.substr(start, i - start);
                auto lead = raw.find_first_not_of(" \t");
                Cell cell;
                if (lead == std::string_view::npos)
                {
                    cell.column = static_cast<int>(start) + 1;
                }
                else
                {
                    auto trail = raw.find_last_not_of(" \t");
                    auto body = raw.substr(lead, trail - lead + 1);
                    cell.column = static_cast<int>(start + lead) + 1;
                    auto unescaped = unescape(body, cell.column);
                    if (!unescaped)
                    {
                        return false;
                    }
                    cell.text = std::move(*unescaped);
                }
                cells.push_back(std::move(cell));
                start = i + 1;
            }
        }
        return true;
    }

    std::optional<std::string> unescape(std::string_view body, int column)
    {
        std::string out;
        for (std::size_t i = 0; i < body.size(); ++i)
        {
            if (body[i] != '\\')
            {
                out += body[i];
                continue;
            }
            if (i + 1 == body.size())
            {
                error("E-ESCAPE", column + static_cast<int>(i), "dangling escape character at end of cell");
                return std::nullopt;
            }
            switch (body[++i])
            {
                case '\\': out += '\\'; break;
                case '|': out += '|'; break;
                case 'n': out += '\n'; break;
                case 'r': out += '\r'; break;
                case 't': out += '\t'; break;
                case 's': out += ' '; break;
                case '#': out += '#'; break;
                case '[': out += '['; break;
                default:
                    error("E-ESCAPE", column + static_cast<int>(i) - 1,
                          fmt::format("unknown escape sequence '\\{}'", body[i]));
                    return std::nullopt;
            }
        }
        return out;
    }

    bool arity(const std::vector<Cell>& cells, std::size_t min, std::size_t max, std::string_view shape)
    {
        if (cells.size() < min || cells.size() > max)
        {
            error("E-CELLS", cells.front().column,
                  fmt::format("expected {} cells ({}), found {}", min == max ? std::to_string(min) : fmt::format("{}-{}", min, max),
                              shape, cells.size()));
            return false;
        }
        return true;
    }

    bool require_text(const Cell& cell, std::string_view what)
    {
        if (cell.text.empty())
        {
            error("E-EMPTY", cell.column, std::string(what) + " must not be empty");
            return false;
        }
        return true;
    }

    std::optional<int> integer(const Cell& cell, std::string_view what)
    {
        int value = 0;
        const auto* first = cell.text.data();
        const auto* last = first + cell.text.size();
        auto [ptr, ec] = std::from_chars(first, last, value);
        if (cell.text.empty() || ec != std::errc{} || ptr != last)
        {
            error("E-NUMBER", cell.column, fmt::format("{} must be an integer, found '{}'", what, cell.text));
            return std::nullopt;
        }
        return value;
    }

    std::optional<ElementId> element_id(const Cell& cell)
    {
        auto id = ElementId::try_parse(cell.text);
        if (!id)
        {
            error("E-ID", cell.column, "malformed element id '" + cell.text + "' (expected e.g. H1.1, T2.1, C2.a)");
        }
        return id;
    }

    static std::optional<std::string> optional_cell(const std::vector<Cell>& cells, std::size_t i)
    {
        if (i < cells.size() && !cells[i].text.empty())
        {
            return cells[i].text;
        }
        return std::nullopt;
    }

    void handle_record(const std::vector<Cell>& cells)
    {
        try
        {
            switch (section_)
            {
                case Section::Levels: return level(cells);
                case Section::GuideWords: return guide_word(cells);
                case Section::Relations: return relation(cells);
                case Section::Nodes: return node(cells);
                case Section::Attributes: return attribute(cells);
                case Section::Elements: return element(cells);
                case Section::Worksheet: return entry(cells);
                case Section::None: return;
            }
        }
        catch (const Error& e)
        {
            error(fmt::format("E-{}", to_string(e.code())), cells.front().column, e.what());
        }
    }

    void level(const std::vector<Cell>& cells)
    {
        if (!arity(cells, 2, 2, "rank | name"))
        {
            return;
        }
        auto rank = integer(cells[0], "level rank");
        if (!rank || !require_text(cells[1], "level name"))
        {
            return;
        }
        int expected = static_cast<int>(study_.levels().size()) + 1;
        if (*rank != expected)
        {
            error("E-LEVEL", cells[0].column, fmt::format("levels must be declared in order; expected rank {}, found {}", expected, *rank));
            return;
        }
        if (std::ranges::find(study_.levels(), cells[1].text, &Level::name) != study_.levels().end())
        {
            error("E-DUPLICATE", cells[1].column, "duplicate level name '" + cells[1].text + "'");
            return;
        }
        study_.add_level(cells[1].text);
    }

    void guide_word(const std::vector<Cell>& cells)
    {
        if (!arity(cells, 4, 5, "word | provenance | ranks | meaning | original meaning"))
        {
            return;
        }
        if (!require_text(cells[0], "guide word"))
        {
            return;
        }
        auto provenance = parse_provenance(cells[1].text);
        if (!provenance)
        {
            error("E-ENUM", cells[1].column, "provenance must be classic, redefined or new; found '" + cells[1].text + "'");
            return;
        }
        std::set<int> ranks;
        std::string_view list = cells[2].text;
        while (!list.empty())
        {
            auto comma = list.find(',');
            auto item = list.substr(0, comma);
            auto b = item.find_first_not_of(' ');
            auto e = item.find_last_not_of(' ');
            Cell piece{b == std::string_view::npos ? std::string{} : std::string(item.substr(b, e - b + 1)), cells[2].column};
            auto value = integer(piece, "applicable level rank");
            if (!value)
            {
                return;
            }
            if (*value < 1)
            {
                error("E-LEVEL", cells[2].column, "level ranks start at 1");
                return;
            }
            ranks.insert(*value);
            list = comma == std::string_view::npos ? std::string_view{} : list.substr(comma + 1);
        }
        if (ranks.empty())
        {
            error("E-EMPTY", cells[2].column, "guide word needs at least one applicable level rank");
            return;
        }
        if (study_.find_guide_word(cells[0].text) != nullptr)
        {
            error("E-DUPLICATE", cells[0].column, "guide word '" + cells[0].text + "' declared twice");
            return;
        }
        auto original = optional_cell(cells, 4);
        if (*provenance == Provenance::Redefined && !original)
        {
            error("E-CELLS", cells[0].column, "redefined guide word needs its original meaning in the fifth cell");
            return;
        }
        study_.add_guide_word(GuideWord{cells[0].text, original, cells[3].text, std::move(ranks), *provenance});
    }

    void relation(const std::vector<Cell>& cells)
    {
        if (!arity(cells, 3, 3, "includes|similar | word | word"))
        {
            return;
        }
        if (!require_text(cells[1], "guide word") || !require_text(cells[2], "guide word"))
        {
            return;
        }
        auto a = guide_word_key(cells[1].text);
        auto b = guide_word_key(cells[2].text);
        if (a == b)
        {
            error("E-RELATION", cells[2].column, "a guide word cannot be related to itself");
            return;
        }
        if (cells[0].text == "includes")
        {
            if (reaches(b, a))
            {
                error("E-RELATION-CYCLE", cells[0].column, fmt::format("inclusion ({}, {}) closes a cycle", a, b));
                return;
            }
            relations_.add_inclusion(a, b);
        }
        else if (cells[0].text == "similar")
        {
            relations_.add_similarity(a, b);
        }
        else
        {
            error("E-ENUM", cells[0].column, "relation kind must be 'includes' or 'similar', found '" + cells[0].text + "'");
            return;
        }
        if (!relations_only_)
        {
            for (const auto& cell : {cells[1], cells[2]})
            {
                if (study_.find_guide_word(cell.text) == nullptr)
                {
                    warning("W-RELATION-WORD", cell.column, "relation names unregistered guide word '" + cell.text + "'");
                }
            }
        }
    }

    bool reaches(const std::string& from, const std::string& to) const
    {
        std::vector<std::string> stack{from};
        std::set<std::string> seen{from};
        while (!stack.empty())
        {
            auto word = stack.back();
            stack.pop_back();
            if (word == to)
            {
                return true;
            }
            for (const auto& [broader, narrower] : relations_.inclusions)
            {
                if (broader == word && seen.insert(narrower).second)
                {
                    stack.push_back(narrower);
                }
            }
        }
        return false;
    }

    void node(const std::vector<Cell>& cells)
    {
        if (!arity(cells, 4, 5, "id | level | granularity | name | description"))
        {
            return;
        }
        if (cells[0].text.empty() || slugify(cells[0].text) != cells[0].text)
        {
            error("E-ID", cells[0].column, "node id '" + cells[0].text + "' must be a lowercase hyphenated token");
            return;
        }
        if (study_.find_node(cells[0].text) != nullptr)
        {
            error("E-DUPLICATE", cells[0].column, "duplicate node id '" + cells[0].text + "'");
            return;
        }
        auto rank = integer(cells[1], "node level");
        if (!rank)
        {
            return;
        }
        if (study_.find_level(*rank) == nullptr)
        {
            error("E-LEVEL", cells[1].column, fmt::format("unknown level {}", *rank));
            return;
        }
        auto granularity = parse_granularity(cells[2].text);
        if (!granularity)
        {
            error("E-ENUM", cells[2].column, "granularity must be component, lifecycle-stage, layer or block; found '" + cells[2].text + "'");
            return;
        }
        if (!require_text(cells[3], "node name"))
        {
            return;
        }
        study_.add_node(*rank, cells[3].text, *granularity, cells.size() > 4 ? cells[4].text : std::string{}, cells[0].text);
    }

    void attribute(const std::vector<Cell>& cells)
    {
        if (!arity(cells, 2, 3, "node | name | description"))
        {
            return;
        }
        if (study_.find_node(cells[0].text) == nullptr)
        {
            error("E-REF", cells[0].column, "unknown node '" + cells[0].text + "'");
            return;
        }
        if (!require_text(cells[1], "attribute name"))
        {
            return;
        }
        if (study_.find_attribute(cells[0].text, cells[1].text) != nullptr)
        {
            error("E-DUPLICATE", cells[1].column, "attribute '" + cells[1].text + "' declared twice on node '" + cells[0].text + "'");
            return;
        }
        study_.add_attribute(Attribute{cells[0].text, cells[1].text, cells.size() > 2 ? cells[2].text : std::string{}});
    }

    void element(const std::vector<Cell>& cells)
    {
        if (!arity(cells, 2, 3, "id | text | threshold"))
        {
            return;
        }
        auto id = element_id(cells[0]);
        if (!id || !require_text(cells[1], "element text"))
        {
            return;
        }
        if (study_.find_level(id->level()) == nullptr)
        {
            error("E-LEVEL", cells[0].column, fmt::format("element {} names unknown level {}", id->str(), id->level()));
            return;
        }
        if (!element_kind_allowed_at(id->kind(), id->level()))
        {
            error("E-KIND-LEVEL", cells[0].column,
                  fmt::format("{} elements are not allowed at level {}", to_string(id->kind()), id->level()));
            return;
        }
        if (study_.find_element(*id) != nullptr)
        {
            error("E-DUPLICATE", cells[0].column, "duplicate element id " + id->str());
            return;
        }
        study_.add_element(SafetyElement{*id, cells[1].text, optional_cell(cells, 2)});
    }

    void entry(const std::vector<Cell>& cells)
    {
        if (!arity(cells, 6, 7, "node | guide word | attribute | element | cause | mitigation | label"))
        {
            return;
        }
        const auto* node = study_.find_node(cells[0].text);
        if (node == nullptr)
        {
            error("E-REF", cells[0].column, "unknown node '" + cells[0].text + "'");
            return;
        }
        const auto* word = study_.find_guide_word(cells[1].text);
        if (word == nullptr)
        {
            error("E-GUIDEWORD", cells[1].column, "undeclared guide word '" + cells[1].text + "'");
            return;
        }
        if (!word->applies_at(node->level_rank))
        {
            error("E-NOT-APPLICABLE", cells[1].column,
                  fmt::format("guide word '{}' is not applicable at level {}", word->word, node->level_rank));
            return;
        }
        if (study_.find_attribute(node->id, cells[2].text) == nullptr)
        {
            error("E-REF", cells[2].column, "node '" + node->id + "' has no attribute '" + cells[2].text + "'");
            return;
        }
        std::vector<ElementId> ids;
        for (std::size_t i = 3; i < 6; ++i)
        {
            auto id = element_id(cells[i]);
            if (!id)
            {
                return;
            }
            if (study_.find_element(*id) == nullptr)
            {
                error("E-REF", cells[i].column, id->str() + " is not in the element catalog");
                return;
            }
            ids.push_back(*id);
        }
        study_.add_entry(WorksheetEntry{{}, node->id, Deviation{word->key(), cells[2].text, optional_cell(cells, 6)}, ids[0], ids[1], ids[2]});
    }

    void finish()
    {
        study_.set_relations(relations_);
        for (const auto& violation : validate_study(study_))
        {
            line_no_ = 1;
            error("E-" + violation.code, 1, violation.location + ": " + violation.message);
        }
    }
};

std::vector<std::string> split_lines(std::string_view text)
{
    if (text.starts_with("\xEF\xBB\xBF"))
    {
        text.remove_prefix(3);
    }
    std::vector<std::string> lines;
    std::size_t start = 0;
    while (start <= text.size())
    {
        auto nl = text.find('\n', start);
        auto line = text.substr(start, nl == std::string_view::npos ? std::string_view::npos : nl - start);
        if (line.ends_with('\r'))
        {
            line.remove_suffix(1);
        }
        if (nl == std::string_view::npos)
        {
            if (!line.empty())
            {
                lines.emplace_back(line);
            }
            break;
        }
        lines.emplace_back(line);
        start = nl + 1;
    }
    return lines;
}

std::string join(std::vector<std::string> cells)
{
    while (cells.size() > 1 && cells.back().empty())
    {
        cells.pop_back();
    }
    std::string out;
    for (std::size_t i = 0; i < cells.size(); ++i)
    {
        if (i > 0)
        {
            out += " | ";
        }
        out += escape_cell(cells[i]);
    }
    out += '\n';
    return out;
}

}

std::size_t StudyDocument::error_count() const
{
    return static_cast<std::size_t>(
        std::ranges::count_if(diagnostics, [](const Diagnostic& d) { return d.severity == Severity::Error; }));
}

bool RelationsDocument::ok() const
{
    return std::ranges::none_of(diagnostics, [](const Diagnostic& d) { return d.severity == Severity::Error; });
}

StudyDocument parse_study(std::string_view text, std::string_view source_name)
{
    StudyDocument doc;
    doc.source_name = std::string(source_name);
    doc.lines = split_lines(text);
    Parser parser(doc);
    parser.run(false);
    if (doc.error_count() == 0)
    {
        doc.study = std::move(parser.study());
    }
    std::ranges::stable_sort(doc.diagnostics, {}, &Diagnostic::line);
    return doc;
}

RelationsDocument parse_relations(std::string_view text)
{
    StudyDocument doc;
    doc.lines = split_lines(text);
    Parser parser(doc);
    parser.run(true);
    return RelationsDocument{std::move(parser.relations()), std::move(doc.diagnostics)};
}

std::string escape_cell(std::string_view text)
{
    std::string out;
    for (std::size_t i = 0; i < text.size(); ++i)
    {
        char c = text[i];
        bool edge = i == 0 || i + 1 == text.size();
        switch (c)
        {
            case '\\': out += "\\\\"; break;
            case '|': out += "\\|"; break;
            case '\n': out += "\\n"; break;
            case '\r': out += "\\r"; break;
            case '\t': out += "\\t"; break;
            case ' ': out += edge ? "\\s" : " "; break;
            case '#':
            case '[': out += i == 0 ? std::string{'\\', c} : std::string{c}; break;
            default: out += c;
        }
    }
    return out;
}

std::string serialize_study(const Study& study)
{
    std::string out = "# HILLS study\n[levels]\n";
    for (const auto& level : study.levels())
    {
        out += join({std::to_string(level.rank), level.name});
    }
    if (!study.guide_words().empty())
    {
        out += "\n[guide-words]\n# word | provenance | ranks | meaning | original meaning\n";
        for (const auto& word : study.guide_words())
        {
            std::string ranks;
            for (int rank : word.applicable_level_ranks)
            {
                ranks += (ranks.empty() ? "" : ",") + std::to_string(rank);
            }
            out += join({word.word, std::string(to_string(word.provenance)), ranks, word.meaning, word.original_meaning.value_or("")});
        }
    }
    const auto& relations = study.relations();
    if (!relations.empty())
    {
        auto display = [&](const std::string& key) {
            const auto* word = study.find_guide_word(key);
            return word != nullptr ? word->word : key;
        };
        out += "\n[relations]\n";
        for (const auto& [broader, narrower] : relations.inclusions)
        {
            out += join({"includes", display(broader), display(narrower)});
        }
        for (const auto& [a, b] : relations.similarities)
        {
            out += join({"similar", display(a), display(b)});
        }
    }
    if (!study.nodes().empty())
    {
        out += "\n[nodes]\n# id | level | granularity | name | description\n";
        for (const auto& node : study.nodes())
        {
            out += join({node.id, std::to_string(node.level_rank), std::string(to_string(node.granularity)), node.name, node.description});
        }
    }
    if (!study.attributes().empty())
    {
        out += "\n[attributes]\n# node | name | description\n";
        for (const auto& attribute : study.attributes())
        {
            out += join({attribute.node_id, attribute.name, attribute.description});
        }
    }
    if (!study.elements().empty())
    {
        out += "\n[elements]\n# id | text | threshold\n";
        for (const auto& element : study.elements())
        {
            out += join({element.id.str(), element.text, element.threshold.value_or("")});
        }
    }
    if (!study.entries().empty())
    {
        out += "\n[worksheet]\n# node | guide word | attribute | element | cause | mitigation | label\n";
        for (const auto& entry : study.entries())
        {
            const auto* word = study.find_guide_word(entry.deviation.guide_word);
            out += join({entry.node_id, word != nullptr ? word->word : entry.deviation.guide_word, entry.deviation.attribute,
                         entry.element.str(), entry.cause.str(), entry.mitigation.str(), entry.deviation.label.value_or("")});
        }
    }
    return out;
}

std::string format_diagnostic(const Diagnostic& diagnostic, std::string_view source_name)
{
    return fmt::format("{}:{}:{}: {}[{}]: {}", source_name, diagnostic.line, diagnostic.column,
                       diagnostic.severity == Severity::Error ? "error" : "warning", diagnostic.code, diagnostic.message);
}

}
