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
#include <hills/study.hpp>

#include <algorithm>
#include <cctype>

namespace hills
{

std::string_view to_string(Granularity granularity)
{
    switch (granularity)
    {
        case Granularity::Component: return "component";
        case Granularity::LifecycleStage: return "lifecycle-stage";
        case Granularity::Layer: return "layer";
        case Granularity::Block: return "block";
    }
    return "component";
}

std::string_view to_string(Provenance provenance)
{
    switch (provenance)
    {
        case Provenance::Classic: return "classic";
        case Provenance::Redefined: return "redefined";
        case Provenance::New: return "new";
    }
    return "classic";
}

std::optional<Granularity> parse_granularity(std::string_view text)
{
    for (auto g : {Granularity::Component, Granularity::LifecycleStage, Granularity::Layer, Granularity::Block})
    {
        if (to_string(g) == text)
        {
            return g;
        }
    }
    return std::nullopt;
}

std::optional<Provenance> parse_provenance(std::string_view text)
{
    for (auto p : {Provenance::Classic, Provenance::Redefined, Provenance::New})
    {
        if (to_string(p) == text)
        {
            return p;
        }
    }
    return std::nullopt;
}

std::string guide_word_key(std::string_view word)
{
    std::string key;
    bool pending_space = false;
    for (char c : word)
    {
        if (std::isspace(static_cast<unsigned char>(c)) != 0)
        {
            pending_space = !key.empty();
            continue;
        }
        if (pending_space)
        {
            key += ' ';
            pending_space = false;
        }
        key += static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
    }
    return key;
}

std::string slugify(std::string_view name)
{
    std::string slug;
    for (char c : name)
    {
        auto u = static_cast<unsigned char>(c);
        if (std::isalnum(u) != 0)
        {
            slug += static_cast<char>(std::tolower(u));
        }
        else if (!slug.empty() && slug.back() != '-')
        {
            slug += '-';
        }
    }
    while (!slug.empty() && slug.back() == '-')
    {
        slug.pop_back();
    }
    return slug.empty() ? std::string("node") : slug;
}

bool element_kind_allowed_at(ElementKind kind, int rank)
{
    switch (kind)
    {
        case ElementKind::Hazard: return rank == 1;
        case ElementKind::LatentHazard:
        case ElementKind::Threat: return rank > 1;
        case ElementKind::Cause:
        case ElementKind::Mitigation: return rank >= 1;
    }
    return false;
}

void GuideWordRelationTable::add_inclusion(std::string_view broader, std::string_view narrower)
{
    inclusions.emplace(guide_word_key(broader), guide_word_key(narrower));
}

void GuideWordRelationTable::add_similarity(std::string_view a, std::string_view b)
{
    auto ka = guide_word_key(a);
    auto kb = guide_word_key(b);
    if (kb < ka)
    {
        std::swap(ka, kb);
    }
    similarities.emplace(std::move(ka), std::move(kb));
}

void GuideWordRelationTable::merge(const GuideWordRelationTable& other)
{
    inclusions.insert(other.inclusions.begin(), other.inclusions.end());
    similarities.insert(other.similarities.begin(), other.similarities.end());
}

bool GuideWordRelationTable::includes(std::string_view broader, std::string_view narrower) const
{
    return inclusions.contains({guide_word_key(broader), guide_word_key(narrower)});
}

bool GuideWordRelationTable::similar(std::string_view a, std::string_view b) const
{
    auto ka = guide_word_key(a);
    auto kb = guide_word_key(b);
    if (kb < ka)
    {
        std::swap(ka, kb);
    }
    return similarities.contains({ka, kb});
}

const Level* Study::find_level(int rank) const
{
    auto it = std::ranges::find(levels_, rank, &Level::rank);
    return it == levels_.end() ? nullptr : &*it;
}

const GuideWord* Study::find_guide_word(std::string_view word) const
{
    auto key = guide_word_key(word);
    auto it = std::ranges::find_if(guide_words_, [&](const GuideWord& g) { return g.key() == key; });
    return it == guide_words_.end() ? nullptr : &*it;
}

const Node* Study::find_node(std::string_view id) const
{
    auto it = std::ranges::find(nodes_, id, &Node::id);
    return it == nodes_.end() ? nullptr : &*it;
}

const Attribute* Study::find_attribute(std::string_view node_id, std::string_view name) const
{
    auto it = std::ranges::find_if(attributes_, [&](const Attribute& a) { return a.node_id == node_id && a.name == name; });
    return it == attributes_.end() ? nullptr : &*it;
}

const SafetyElement* Study::find_element(const ElementId& id) const
{
    auto it = std::ranges::find(elements_, id, &SafetyElement::id);
    return it == elements_.end() ? nullptr : &*it;
}

const WorksheetEntry* Study::find_entry(std::string_view id) const
{
    auto it = std::ranges::find(entries_, id, &WorksheetEntry::id);
    return it == entries_.end() ? nullptr : &*it;
}

std::optional<std::size_t> Study::entry_index(std::string_view id) const
{
    auto it = std::ranges::find(entries_, id, &WorksheetEntry::id);
    if (it == entries_.end())
    {
        return std::nullopt;
    }
    return static_cast<std::size_t>(it - entries_.begin());
}

std::string Study::deviation_text(const Deviation& deviation) const
{
    if (deviation.label)
    {
        return *deviation.label;
    }
    const auto* word = find_guide_word(deviation.guide_word);
    return (word != nullptr ? word->word : deviation.guide_word) + " " + deviation.attribute;
}

int Study::entry_level(const WorksheetEntry& entry) const
{
    const auto* node = find_node(entry.node_id);
    return node != nullptr ? node->level_rank : 0;
}

void Study::add_level(std::string name)
{
    if (name.empty())
    {
        throw Error(ErrorCode::InvalidArgument, "level name must not be empty");
    }
    if (std::ranges::find(levels_, name, &Level::name) != levels_.end())
    {
        throw Error(ErrorCode::DuplicateName, "duplicate level name '" + name + "'");
    }
    levels_.push_back(Level{static_cast<int>(levels_.size()) + 1, std::move(name)});
}

void Study::add_guide_word(GuideWord word)
{
    if (word.key().empty())
    {
        throw Error(ErrorCode::InvalidArgument, "guide word must not be empty");
    }
    if (find_guide_word(word.word) != nullptr)
    {
        throw Error(ErrorCode::DuplicateName, "duplicate guide word '" + word.word + "'");
    }
    if (word.provenance == Provenance::Redefined && !word.original_meaning)
    {
        throw Error(ErrorCode::InvalidArgument, "redefined guide word '" + word.word + "' needs its original meaning");
    }
    guide_words_.push_back(std::move(word));
}

void Study::set_relations(GuideWordRelationTable relations)
{
    relations_ = std::move(relations);
}

std::string Study::add_node(int level_rank, std::string name, Granularity granularity, std::string description,
                            std::optional<std::string> explicit_id)
{
    if (find_level(level_rank) == nullptr)
    {
        throw Error(ErrorCode::UnknownLevel, "unknown level " + std::to_string(level_rank));
    }
    if (name.empty())
    {
        throw Error(ErrorCode::InvalidArgument, "node name must not be empty");
    }
    std::string id;
    if (explicit_id)
    {
        id = std::move(*explicit_id);
        if (id.empty() || slugify(id) != id)
        {
            throw Error(ErrorCode::InvalidArgument, "node id '" + id + "' is not a lowercase hyphenated token");
        }
        if (find_node(id) != nullptr)
        {
            throw Error(ErrorCode::DuplicateName, "duplicate node id '" + id + "'");
        }
    }
    else
    {
        auto base = slugify(name);
        id = base;
        for (int suffix = 2; find_node(id) != nullptr; ++suffix)
        {
            id = base + "-" + std::to_string(suffix);
        }
    }
    nodes_.push_back(Node{id, level_rank, std::move(name), std::move(description), granularity});
    return id;
}

void Study::add_attribute(Attribute attribute)
{
    if (find_node(attribute.node_id) == nullptr)
    {
        throw Error(ErrorCode::UnknownNode, "unknown node '" + attribute.node_id + "'");
    }
    if (attribute.name.empty())
    {
        throw Error(ErrorCode::InvalidArgument, "attribute name must not be empty");
    }
    if (find_attribute(attribute.node_id, attribute.name) != nullptr)
    {
        throw Error(ErrorCode::DuplicateName,
                    "duplicate attribute '" + attribute.name + "' on node '" + attribute.node_id + "'");
    }
    attributes_.push_back(std::move(attribute));
}

void Study::add_element(SafetyElement element)
{
    if (find_level(element.level_rank()) == nullptr)
    {
        throw Error(ErrorCode::UnknownLevel, "element " + element.id.str() + " names unknown level");
    }
    if (find_element(element.id) != nullptr)
    {
        throw Error(ErrorCode::DuplicateName, "duplicate element id " + element.id.str());
    }
    elements_.push_back(std::move(element));
}

std::string Study::add_entry(WorksheetEntry entry)
{
    const auto* node = find_node(entry.node_id);
    if (node == nullptr)
    {
        throw Error(ErrorCode::DanglingReference, "unknown node '" + entry.node_id + "'");
    }
    const auto* word = find_guide_word(entry.deviation.guide_word);
    if (word == nullptr)
    {
        throw Error(ErrorCode::DanglingReference, "undeclared guide word '" + entry.deviation.guide_word + "'");
    }
    if (find_attribute(entry.node_id, entry.deviation.attribute) == nullptr)
    {
        throw Error(ErrorCode::DanglingReference,
                    "node '" + entry.node_id + "' has no attribute '" + entry.deviation.attribute + "'");
    }
    if (!word->applies_at(node->level_rank))
    {
        throw Error(ErrorCode::GuideWordNotApplicable,
                    "guide word '" + word->word + "' is not applicable at level " + std::to_string(node->level_rank));
    }
    struct Ref
    {
        const ElementId* id;
        const char* column;
    };
    for (auto [id, column] : {Ref{&entry.element, "element"}, Ref{&entry.cause, "cause"}, Ref{&entry.mitigation, "mitigation"}})
    {
        if (find_element(*id) == nullptr)
        {
            throw Error(ErrorCode::DanglingReference, std::string(column) + " " + id->str() + " is not in the element catalog");
        }
        if (id->level() != node->level_rank)
        {
            throw Error(ErrorCode::KindLevelMismatch,
                        std::string(column) + " " + id->str() + " belongs to level " + std::to_string(id->level())
                            + " but node '" + node->id + "' is at level " + std::to_string(node->level_rank));
        }
    }
    auto element_kind = entry.element.kind();
    bool row_kind_ok = node->level_rank == 1
        ? element_kind == ElementKind::Hazard
        : element_kind == ElementKind::LatentHazard || element_kind == ElementKind::Threat;
    if (!row_kind_ok)
    {
        throw Error(ErrorCode::KindLevelMismatch,
                    "element " + entry.element.str() + " (" + std::string(to_string(element_kind)) + ") cannot head a row at level "
                        + std::to_string(node->level_rank));
    }
    if (entry.cause.kind() != ElementKind::Cause)
    {
        throw Error(ErrorCode::KindMismatch, "cause column holds " + entry.cause.str());
    }
    if (entry.mitigation.kind() != ElementKind::Mitigation)
    {
        throw Error(ErrorCode::KindMismatch, "mitigation column holds " + entry.mitigation.str());
    }
    entry.deviation.guide_word = word->key();
    entry.id = "e" + std::to_string(entries_.size() + 1);
    entries_.push_back(std::move(entry));
    return entries_.back().id;
}

Study new_study(const std::vector<std::string>& level_names)
{
    if (level_names.empty())
    {
        throw Error(ErrorCode::InvalidArgument, "a study needs at least one level");
    }
    Study study;
    for (const auto& name : level_names)
    {
        study.add_level(name);
    }
    return study;
}

std::vector<std::string> default_level_names()
{
    return {"System", "ML-Lifecycle", "Inner-ML"};
}

}
