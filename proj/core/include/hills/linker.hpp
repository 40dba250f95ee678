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
#include <utility>
#include <vector>

namespace hills
{

enum class LinkRule
{
    SameWordIntraLevel,
    SameWordCrossLevel,
    Inclusion,
    Similarity,
};

enum class LinkDirection
{
    None,
    HigherExplainsLower,
    LowerExplainsHigher,
};

enum class LinkStatus
{
    Candidate,
    Confirmed,
    Rejected,
};

std::string_view to_string(LinkRule rule);
std::string_view to_string(LinkDirection direction);
std::string_view to_string(LinkStatus status);
std::optional<LinkRule> parse_link_rule(std::string_view text);
std::optional<LinkDirection> parse_link_direction(std::string_view text);
std::optional<LinkStatus> parse_link_status(std::string_view text);

struct LinkEndpoint
{
    int level_rank = 0;
    std::string entry_id;

    friend bool operator==(const LinkEndpoint&, const LinkEndpoint&) = default;
};

/// A candidate association between two worksheet entries.
///
/// For cross-level links `first` is the entry on the higher level (smaller
/// rank); for intra-level links it is the earlier entry.
struct Link
{
    std::string id;
    LinkRule rule = LinkRule::SameWordIntraLevel;
    LinkEndpoint first;
    LinkEndpoint second;
    LinkDirection suggested_direction = LinkDirection::None;
    /// Direction accepted by the analyst; starts as the suggestion.
    LinkDirection direction = LinkDirection::None;
    LinkStatus status = LinkStatus::Candidate;
    /// Relation-table pair that fired (Inclusion: broader, narrower; Similarity: sorted pair).
    std::optional<std::pair<std::string, std::string>> relation;

    friend bool operator==(const Link&, const Link&) = default;
};

class LinkSet
{
public:
    LinkSet() = default;
    explicit LinkSet(std::vector<Link> links) : links_(std::move(links)) { }

    [[nodiscard]] const std::vector<Link>& links() const noexcept { return links_; }
    [[nodiscard]] const Link* find(std::string_view id) const;
    [[nodiscard]] std::vector<Link> with_status(LinkStatus status) const;

    friend bool operator==(const LinkSet&, const LinkSet&) = default;

private:
    friend LinkSet set_link_status(LinkSet, std::string_view, LinkStatus, std::optional<LinkDirection>);
    std::vector<Link> links_;
};

/// Derives every candidate link implied by the four guide-word rules, ordered
/// by rule and then by the endpoints' entry order. Pure function of its inputs.
std::vector<Link> derive_links(const Study& study, const GuideWordRelationTable& relations);

/// The rule predicate for an ordered entry pair (a before b in entry order).
/// Returns the link it implies, if any, without an id.
std::vector<Link> link_candidates_for_pair(const Study& study, const GuideWordRelationTable& relations,
                                           const WorksheetEntry& a, const WorksheetEntry& b);

/// Human-readable justification. Throws Error(StaleLink) when the link's
/// endpoints or rule do not hold in `study`.
std::string explain_link(const Link& link, const Study& study);

/// Returns a copy with the status (and optionally the direction) of `id` updated.
/// Throws Error(UnknownLink).
LinkSet set_link_status(LinkSet links, std::string_view id, LinkStatus status,
                        std::optional<LinkDirection> direction = std::nullopt);

/// Stable id: "<rule code>-<first entry>-<second entry>", e.g. "inc-e1-e5".
std::string make_link_id(LinkRule rule, std::string_view first_entry, std::string_view second_entry);

}
