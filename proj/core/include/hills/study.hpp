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

#include <hills/element_id.hpp>

#include <cstddef>
#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace hills
{

enum class Granularity
{
    Component,
    LifecycleStage,
    Layer,
    Block,
};

enum class Provenance
{
    Classic,
    Redefined,
    New,
};

std::string_view to_string(Granularity granularity);
std::string_view to_string(Provenance provenance);
std::optional<Granularity> parse_granularity(std::string_view text);
std::optional<Provenance> parse_provenance(std::string_view text);

/// Lowercased, whitespace-collapsed form used as the registry key of a guide word.
std::string guide_word_key(std::string_view word);

struct Level
{
    int rank = 0; ///< 1 = system level; larger ranks are more latent.
    std::string name;

    friend bool operator==(const Level&, const Level&) = default;
};

struct Node
{
    std::string id;
    int level_rank = 0;
    std::string name;
    std::string description;
    Granularity granularity = Granularity::Component;

    friend bool operator==(const Node&, const Node&) = default;
};

struct Attribute
{
    std::string node_id;
    std::string name;
    std::string description;

    friend bool operator==(const Attribute&, const Attribute&) = default;
};

struct GuideWord
{
    std::string word; ///< display form, e.g. "Part of"
    std::optional<std::string> original_meaning;
    std::string meaning;
    std::set<int> applicable_level_ranks;
    Provenance provenance = Provenance::Classic;

    [[nodiscard]] std::string key() const { return guide_word_key(word); }
    [[nodiscard]] bool applies_at(int rank) const { return applicable_level_ranks.contains(rank); }

    friend bool operator==(const GuideWord&, const GuideWord&) = default;
};

struct SafetyElement
{
    ElementId id;
    std::string text;
    /// Verbatim parameter of a parameterised mitigation, e.g. the "X" in "> X".
    std::optional<std::string> threshold;

    [[nodiscard]] ElementKind kind() const noexcept { return id.kind(); }
    [[nodiscard]] int level_rank() const noexcept { return id.level(); }

    friend bool operator==(const SafetyElement&, const SafetyElement&) = default;
};

struct Deviation
{
    std::string guide_word; ///< registry key
    std::string attribute;  ///< attribute name on the entry's node
    /// Replaces the rendered "<guide word> <attribute>" cell when the analyst
    /// recorded the deviation under another name ("Attacked").
    std::optional<std::string> label;

    friend bool operator==(const Deviation&, const Deviation&) = default;
};

struct WorksheetEntry
{
    std::string id; ///< "e<n>", assigned in insertion order
    std::string node_id;
    Deviation deviation;
    ElementId element;
    ElementId cause;
    ElementId mitigation;

    friend bool operator==(const WorksheetEntry&, const WorksheetEntry&) = default;
};

/// Inclusion pairs are ordered (broader, narrower); similarity pairs are
/// stored with the smaller key first. All words are registry keys.
struct GuideWordRelationTable
{
    std::set<std::pair<std::string, std::string>> inclusions;
    std::set<std::pair<std::string, std::string>> similarities;

    void add_inclusion(std::string_view broader, std::string_view narrower);
    void add_similarity(std::string_view a, std::string_view b);
    void merge(const GuideWordRelationTable& other);

    [[nodiscard]] bool includes(std::string_view broader, std::string_view narrower) const;
    [[nodiscard]] bool similar(std::string_view a, std::string_view b) const;
    [[nodiscard]] bool empty() const { return inclusions.empty() && similarities.empty(); }

    friend bool operator==(const GuideWordRelationTable&, const GuideWordRelationTable&) = default;
};

/// A complete HILLS study: ranked levels, the guide-word registry, nodes with
/// their attributes, the element catalog and the per-level worksheets.
///
/// The mutators check what they can locally and throw hills::Error. Elements
/// are admitted without the kind-vs-level rule so that validate_study can
/// report it; worksheet entries are checked in full.
class Study
{
public:
    Study() = default;

    [[nodiscard]] const std::vector<Level>& levels() const noexcept { return levels_; }
    [[nodiscard]] const std::vector<GuideWord>& guide_words() const noexcept { return guide_words_; }
    [[nodiscard]] const GuideWordRelationTable& relations() const noexcept { return relations_; }
    [[nodiscard]] const std::vector<Node>& nodes() const noexcept { return nodes_; }
    [[nodiscard]] const std::vector<Attribute>& attributes() const noexcept { return attributes_; }
    [[nodiscard]] const std::vector<SafetyElement>& elements() const noexcept { return elements_; }
    [[nodiscard]] const std::vector<WorksheetEntry>& entries() const noexcept { return entries_; }

    [[nodiscard]] const Level* find_level(int rank) const;
    [[nodiscard]] const GuideWord* find_guide_word(std::string_view word) const;
    [[nodiscard]] const Node* find_node(std::string_view id) const;
    [[nodiscard]] const Attribute* find_attribute(std::string_view node_id, std::string_view name) const;
    [[nodiscard]] const SafetyElement* find_element(const ElementId& id) const;
    [[nodiscard]] const WorksheetEntry* find_entry(std::string_view id) const;
    [[nodiscard]] std::optional<std::size_t> entry_index(std::string_view id) const;

    /// Rendered deviation cell: the label when present, else "<Word> <attribute>".
    [[nodiscard]] std::string deviation_text(const Deviation& deviation) const;
    /// Level rank hosting an entry (its node's level).
    [[nodiscard]] int entry_level(const WorksheetEntry& entry) const;

    void add_level(std::string name);
    void add_guide_word(GuideWord word);
    void set_relations(GuideWordRelationTable relations);
    /// Registers a node. The id is the slug of `name` de-duplicated with a
    /// numeric suffix unless `explicit_id` is given.
    std::string add_node(int level_rank, std::string name, Granularity granularity, std::string description = {},
                         std::optional<std::string> explicit_id = std::nullopt);
    void add_attribute(Attribute attribute);
    void add_element(SafetyElement element);
    /// Validates references, kind-vs-level and guide-word applicability; the
    /// entry's id is ignored and reassigned. Returns the assigned id.
    std::string add_entry(WorksheetEntry entry);

    friend bool operator==(const Study&, const Study&) = default;

private:
    std::vector<Level> levels_;
    std::vector<GuideWord> guide_words_;
    GuideWordRelationTable relations_;
    std::vector<Node> nodes_;
    std::vector<Attribute> attributes_;
    std::vector<SafetyElement> elements_;
    std::vector<WorksheetEntry> entries_;
};

/// Builds a study with ranks 1..n named after `level_names`.
Study new_study(const std::vector<std::string>& level_names);

/// Lowercase, hyphen-separated slug; non-alphanumerics collapse to one hyphen.
/// A name with no alphanumerics yields "node".
std::string slugify(std::string_view name);

/// Conventional element kind for a worksheet row's element column at `rank`.
bool element_kind_allowed_at(ElementKind kind, int rank);

struct Violation
{
    std::string code;     ///< mirrors ErrorCode names, e.g. "KindLevelMismatch"
    std::string location; ///< e.g. "element T1.1", "entry e3"
    std::string message;

    friend bool operator==(const Violation&, const Violation&) = default;
};

/// Checks every structural invariant of a study. Deterministic and side-effect free.
std::vector<Violation> validate_study(const Study& study);

/// Default registry: classic HAZOP words plus the redefined and new words for ML levels.
std::vector<GuideWord> default_guide_words();
/// Default relation table: inclusion(no, part of), similarity(invalid, incompatible).
GuideWordRelationTable default_relations();
/// The three-level layout "System", "ML-Lifecycle", "Inner-ML".
std::vector<std::string> default_level_names();

}
