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

#include <hills/study.hpp>

#include <algorithm>
#include <map>
#include <set>

namespace hills
{

namespace
{

class Collector
{
public:
    void add(std::string code, std::string location, std::string message)
    {
        out_.push_back(Violation{std::move(code), std::move(location), std::move(message)});
    }

    std::vector<Violation> take() { return std::move(out_); }

private:
    std::vector<Violation> out_;
};

void check_levels(const Study& study, Collector& out)
{
    std::set<std::string> names;
    for (std::size_t i = 0; i < study.levels().size(); ++i)
    {
        const auto& level = study.levels()[i];
        auto where = "level " + std::to_string(level.rank);
        if (level.rank != static_cast<int>(i) + 1)
        {
            out.add("UnknownLevel", where, "level ranks must be contiguous from 1; position " + std::to_string(i + 1)
                        + " holds rank " + std::to_string(level.rank));
        }
        if (level.name.empty())
        {
            out.add("InvalidArgument", where, "level name is empty");
        }
        if (!names.insert(level.name).second)
        {
            out.add("DuplicateName", where, "duplicate level name '" + level.name + "'");
        }
    }
}

void check_guide_words(const Study& study, Collector& out)
{
    std::set<std::string> keys;
    for (const auto& word : study.guide_words())
    {
        auto where = "guide word '" + word.word + "'";
        if (!keys.insert(word.key()).second)
        {
            out.add("DuplicateName", where, "guide word registered twice");
        }
        if (word.provenance == Provenance::Redefined && !word.original_meaning)
        {
            out.add("InvalidArgument", where, "redefined guide word lacks its original meaning");
        }
    }
}

bool has_inclusion_cycle(const GuideWordRelationTable& table)
{
    std::map<std::string, std::vector<std::string>> next;
    for (const auto& [broader, narrower] : table.inclusions)
    {
        next[broader].push_back(narrower);
    }
    enum class Mark
    {
        None,
        Active,
        Done
    };
    std::map<std::string, Mark> marks;
    // Iterative DFS; relation tables are small but user supplied.
    for (const auto& [start, unused] : next)
    {
        if (marks[start] != Mark::None)
        {
            continue;
        }
        std::vector<std::pair<std::string, std::size_t>> stack{{start, 0}};
        marks[start] = Mark::Active;
        while (!stack.empty())
        {
            auto& [word, child] = stack.back();
            const auto& children = next[word];
            if (child == children.size())
            {
                marks[word] = Mark::Done;
                stack.pop_back();
                continue;
            }
            const auto target = children[child++];
            auto& mark = marks[target];
            if (mark == Mark::Active)
            {
                return true;
            }
            if (mark == Mark::None)
            {
                mark = Mark::Active;
                stack.emplace_back(target, 0);
            }
        }
    }
    return false;
}

void check_relations(const Study& study, Collector& out)
{
    const auto& table = study.relations();
    for (const auto& [a, b] : table.inclusions)
    {
        if (a == b)
        {
            out.add("RelationCycle", "inclusion '" + a + "'", "a guide word cannot include itself");
        }
    }
    for (const auto& [a, b] : table.similarities)
    {
        if (a == b)
        {
            out.add("InvalidArgument", "similarity '" + a + "'", "a guide word cannot be similar to itself");
        }
    }
    if (has_inclusion_cycle(table))
    {
        out.add("RelationCycle", "relations", "inclusion relation contains a cycle");
    }
}

void check_nodes(const Study& study, Collector& out)
{
    std::set<std::string> ids;
    for (const auto& node : study.nodes())
    {
        auto where = "node " + node.id;
        if (!ids.insert(node.id).second)
        {
            out.add("DuplicateName", where, "duplicate node id");
        }
        if (study.find_level(node.level_rank) == nullptr)
        {
            out.add("UnknownLevel", where, "node sits on unknown level " + std::to_string(node.level_rank));
        }
    }
    std::set<std::pair<std::string, std::string>> attributes;
    for (const auto& attribute : study.attributes())
    {
        auto where = "attribute " + attribute.node_id + "/" + attribute.name;
        if (study.find_node(attribute.node_id) == nullptr)
        {
            out.add("DanglingReference", where, "attribute belongs to unknown node");
        }
        if (!attributes.emplace(attribute.node_id, attribute.name).second)
        {
            out.add("DuplicateName", where, "attribute declared twice on the node");
        }
    }
}

void check_elements(const Study& study, Collector& out)
{
    std::set<ElementId> ids;
    for (const auto& element : study.elements())
    {
        auto where = "element " + element.id.str();
        if (!ids.insert(element.id).second)
        {
            out.add("DuplicateName", where, "duplicate element id");
        }
        if (study.find_level(element.level_rank()) == nullptr)
        {
            out.add("UnknownLevel", where, "element names unknown level " + std::to_string(element.level_rank()));
        }
        if (!element_kind_allowed_at(element.kind(), element.level_rank()))
        {
            out.add("KindLevelMismatch", where,
                    std::string(to_string(element.kind())) + " is not allowed at level " + std::to_string(element.level_rank()));
        }
    }
}

void check_entries(const Study& study, Collector& out)
{
    std::set<std::string> ids;
    for (const auto& entry : study.entries())
    {
        auto where = "entry " + entry.id;
        if (!ids.insert(entry.id).second)
        {
            out.add("DuplicateName", where, "duplicate entry id");
        }
        const auto* node = study.find_node(entry.node_id);
        if (node == nullptr)
        {
            out.add("DanglingReference", where, "unknown node '" + entry.node_id + "'");
            continue;
        }
        const auto* word = study.find_guide_word(entry.deviation.guide_word);
        if (word == nullptr)
        {
            out.add("DanglingReference", where, "undeclared guide word '" + entry.deviation.guide_word + "'");
        }
        else if (!word->applies_at(node->level_rank))
        {
            out.add("GuideWordNotApplicable", where,
                    "guide word '" + word->word + "' is not applicable at level " + std::to_string(node->level_rank));
        }
        if (study.find_attribute(entry.node_id, entry.deviation.attribute) == nullptr)
        {
            out.add("DanglingReference", where, "unknown attribute '" + entry.deviation.attribute + "'");
        }
        for (const auto* id : {&entry.element, &entry.cause, &entry.mitigation})
        {
            if (study.find_element(*id) == nullptr)
            {
                out.add("DanglingReference", where, id->str() + " is not in the element catalog");
            }
            else if (id->level() != node->level_rank)
            {
                out.add("KindLevelMismatch", where, id->str() + " is not on the node's level");
            }
        }
        bool row_kind_ok = node->level_rank == 1
            ? entry.element.kind() == ElementKind::Hazard
            : entry.element.kind() == ElementKind::LatentHazard || entry.element.kind() == ElementKind::Threat;
        if (!row_kind_ok)
        {
            out.add("KindLevelMismatch", where, entry.element.str() + " cannot head a row at level " + std::to_string(node->level_rank));
        }
        if (entry.cause.kind() != ElementKind::Cause)
        {
            out.add("KindMismatch", where, "cause column holds " + entry.cause.str());
        }
        if (entry.mitigation.kind() != ElementKind::Mitigation)
        {
            out.add("KindMismatch", where, "mitigation column holds " + entry.mitigation.str());
        }
    }
}

}

std::vector<Violation> validate_study(const Study& study)
{
    Collector out;
    check_levels(study, out);
    check_guide_words(study, out);
    check_relations(study, out);
    check_nodes(study, out);
    check_elements(study, out);
    check_entries(study, out);
    return out.take();
}

}
