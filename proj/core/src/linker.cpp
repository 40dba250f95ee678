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
#include <hills/linker.hpp>

#include <algorithm>
#include <array>
#include <map>
#include <tuple>
#include <unordered_map>

#include <fmt/format.h>

namespace hills
{

namespace
{

constexpr std::array rule_names{
    std::pair{LinkRule::SameWordIntraLevel, std::string_view{"same_word_intra_level"}},
    std::pair{LinkRule::SameWordCrossLevel, std::string_view{"same_word_cross_level"}},
    std::pair{LinkRule::Inclusion, std::string_view{"inclusion"}},
    std::pair{LinkRule::Similarity, std::string_view{"similarity"}},
};

constexpr std::array direction_names{
    std::pair{LinkDirection::None, std::string_view{"none"}},
    std::pair{LinkDirection::HigherExplainsLower, std::string_view{"higher_explains_lower"}},
    std::pair{LinkDirection::LowerExplainsHigher, std::string_view{"lower_explains_higher"}},
};

constexpr std::array status_names{
    std::pair{LinkStatus::Candidate, std::string_view{"candidate"}},
    std::pair{LinkStatus::Confirmed, std::string_view{"confirmed"}},
    std::pair{LinkStatus::Rejected, std::string_view{"rejected"}},
};

template <typename E, std::size_t N>
std::string_view name_of(const std::array<std::pair<E, std::string_view>, N>& table, E value)
{
    for (const auto& [e, name] : table)
    {
        if (e == value)
        {
            return name;
        }
    }
    return "?";
}

template <typename E, std::size_t N>
std::optional<E> value_of(const std::array<std::pair<E, std::string_view>, N>& table, std::string_view text)
{
    for (const auto& [e, name] : table)
    {
        if (name == text)
        {
            return e;
        }
    }
    return std::nullopt;
}

std::string_view rule_code(LinkRule rule)
{
    switch (rule)
    {
        case LinkRule::SameWordIntraLevel: return "swi";
        case LinkRule::SameWordCrossLevel: return "swx";
        case LinkRule::Inclusion: return "inc";
        case LinkRule::Similarity: return "sim";
    }
    return "lnk";
}

struct EntryView
{
    const WorksheetEntry* entry;
    std::size_t index;
    int level;
};

bool same_deviation(const WorksheetEntry& a, const WorksheetEntry& b)
{
    return a.node_id == b.node_id && a.deviation.guide_word == b.deviation.guide_word
        && a.deviation.attribute == b.deviation.attribute;
}

Link make_link(LinkRule rule, const EntryView& a, const EntryView& b, std::optional<std::pair<std::string, std::string>> relation)
{
    // Higher level (smaller rank) first; ties keep entry order.
    bool a_first = a.level < b.level || (a.level == b.level && a.index < b.index);
    const EntryView& first = a_first ? a : b;
    const EntryView& second = a_first ? b : a;
    Link link;
    link.rule = rule;
    link.first = LinkEndpoint{first.level, first.entry->id};
    link.second = LinkEndpoint{second.level, second.entry->id};
    link.suggested_direction = (rule == LinkRule::SameWordCrossLevel || rule == LinkRule::Inclusion)
        ? LinkDirection::HigherExplainsLower
        : LinkDirection::None;
    link.direction = link.suggested_direction;
    link.relation = std::move(relation);
    link.id = make_link_id(rule, link.first.entry_id, link.second.entry_id);
    return link;
}

void pair_links(const GuideWordRelationTable& relations, const EntryView& a, const EntryView& b, std::vector<Link>& out)
{
    const auto& wa = a.entry->deviation.guide_word;
    const auto& wb = b.entry->deviation.guide_word;
    if (wa == wb)
    {
        if (a.level == b.level)
        {
            if (!same_deviation(*a.entry, *b.entry))
            {
                out.push_back(make_link(LinkRule::SameWordIntraLevel, a, b, std::nullopt));
            }
        }
        else
        {
            out.push_back(make_link(LinkRule::SameWordCrossLevel, a, b, std::nullopt));
        }
        return;
    }
    if (a.level != b.level)
    {
        if (relations.includes(wa, wb))
        {
            out.push_back(make_link(LinkRule::Inclusion, a, b, std::pair{wa, wb}));
        }
        else if (relations.includes(wb, wa))
        {
            out.push_back(make_link(LinkRule::Inclusion, a, b, std::pair{wb, wa}));
        }
    }
    if (relations.similar(wa, wb))
    {
        out.push_back(make_link(LinkRule::Similarity, a, b, wa < wb ? std::pair{wa, wb} : std::pair{wb, wa}));
    }
}

}

std::string_view to_string(LinkRule rule) { return name_of(rule_names, rule); }
std::string_view to_string(LinkDirection direction) { return name_of(direction_names, direction); }
std::string_view to_string(LinkStatus status) { return name_of(status_names, status); }
std::optional<LinkRule> parse_link_rule(std::string_view text) { return value_of(rule_names, text); }
std::optional<LinkDirection> parse_link_direction(std::string_view text) { return value_of(direction_names, text); }
std::optional<LinkStatus> parse_link_status(std::string_view text) { return value_of(status_names, text); }

std::string make_link_id(LinkRule rule, std::string_view first_entry, std::string_view second_entry)
{
    return fmt::format("{}-{}-{}", rule_code(rule), first_entry, second_entry);
}

const Link* LinkSet::find(std::string_view id) const
{
    auto it = std::ranges::find(links_, id, &Link::id);
    return it == links_.end() ? nullptr : &*it;
}

std::vector<Link> LinkSet::with_status(LinkStatus status) const
{
    std::vector<Link> out;
    std::ranges::copy_if(links_, std::back_inserter(out), [&](const Link& l) { return l.status == status; });
    return out;
}

std::vector<Link> link_candidates_for_pair(const Study& study, const GuideWordRelationTable& relations,
                                           const WorksheetEntry& a, const WorksheetEntry& b)
{
    std::vector<Link> out;
    auto ia = study.entry_index(a.id);
    auto ib = study.entry_index(b.id);
    if (!ia || !ib || *ia == *ib)
    {
        return out;
    }
    pair_links(relations, EntryView{&a, *ia, study.entry_level(a)}, EntryView{&b, *ib, study.entry_level(b)}, out);
    return out;
}

std::vector<Link> derive_links(const Study& study, const GuideWordRelationTable& relations)
{
    const auto& entries = study.entries();
    std::map<std::string, std::vector<EntryView>> by_word;
    for (std::size_t i = 0; i < entries.size(); ++i)
    {
        by_word[entries[i].deviation.guide_word].push_back(EntryView{&entries[i], i, study.entry_level(entries[i])});
    }

    std::vector<Link> links;
    for (const auto& [word, group] : by_word)
    {
        for (std::size_t i = 0; i < group.size(); ++i)
        {
            for (std::size_t j = i + 1; j < group.size(); ++j)
            {
                pair_links(relations, group[i], group[j], links);
            }
        }
    }
    auto cross = [&](const std::string& wa, const std::string& wb, auto&& emit) {
        auto ga = by_word.find(wa);
        auto gb = by_word.find(wb);
        if (ga == by_word.end() || gb == by_word.end())
        {
            return;
        }
        for (const auto& a : ga->second)
        {
            for (const auto& b : gb->second)
            {
                emit(a, b);
            }
        }
    };
    for (const auto& [broader, narrower] : relations.inclusions)
    {
        cross(broader, narrower, [&](const EntryView& a, const EntryView& b) {
            if (a.level != b.level)
            {
                links.push_back(make_link(LinkRule::Inclusion, a, b, std::pair{broader, narrower}));
            }
        });
    }
    for (const auto& [wa, wb] : relations.similarities)
    {
        if (wa == wb)
        {
            continue;
        }
        cross(wa, wb, [&](const EntryView& a, const EntryView& b) {
            links.push_back(make_link(LinkRule::Similarity, a, b, std::pair{wa, wb}));
        });
    }

    std::unordered_map<std::string_view, std::size_t> index_of;
    for (std::size_t i = 0; i < entries.size(); ++i)
    {
        index_of.emplace(entries[i].id, i);
    }
    using Key = std::tuple<LinkRule, std::size_t, std::size_t>;
    std::vector<std::pair<Key, std::size_t>> order;
    order.reserve(links.size());
    for (std::size_t k = 0; k < links.size(); ++k)
    {
        auto i = index_of.at(links[k].first.entry_id);
        auto j = index_of.at(links[k].second.entry_id);
        order.emplace_back(Key{links[k].rule, std::min(i, j), std::max(i, j)}, k);
    }
    std::ranges::sort(order);
    std::vector<Link> sorted;
    sorted.reserve(links.size());
    for (const auto& [key, k] : order)
    {
        sorted.push_back(std::move(links[k]));
    }
    links = std::move(sorted);
    auto dup = std::ranges::unique(links, [](const Link& x, const Link& y) { return x.id == y.id; });
    links.erase(dup.begin(), dup.end());
    return links;
}

std::string explain_link(const Link& link, const Study& study)
{
    const auto* a = study.find_entry(link.first.entry_id);
    const auto* b = study.find_entry(link.second.entry_id);
    if (a == nullptr || b == nullptr || a == b)
    {
        throw Error(ErrorCode::StaleLink, "link " + link.id + " references entries that are not in this study");
    }
    int la = study.entry_level(*a);
    int lb = study.entry_level(*b);
    if (la != link.first.level_rank || lb != link.second.level_rank)
    {
        throw Error(ErrorCode::StaleLink, "link " + link.id + " endpoint levels do not match this study");
    }
    const auto& wa = a->deviation.guide_word;
    const auto& wb = b->deviation.guide_word;
    bool holds = false;
    switch (link.rule)
    {
        case LinkRule::SameWordIntraLevel: holds = wa == wb && la == lb && !same_deviation(*a, *b); break;
        case LinkRule::SameWordCrossLevel: holds = wa == wb && la != lb; break;
        case LinkRule::Inclusion:
            holds = link.relation && la != lb
                && ((link.relation->first == wa && link.relation->second == wb)
                    || (link.relation->first == wb && link.relation->second == wa));
            break;
        case LinkRule::Similarity:
            holds = link.relation && wa != wb
                && ((link.relation->first == wa && link.relation->second == wb)
                    || (link.relation->first == wb && link.relation->second == wa));
            break;
    }
    if (!holds)
    {
        throw Error(ErrorCode::StaleLink, "link " + link.id + " does not satisfy its rule in this study");
    }

    auto describe = [&](const WorksheetEntry& e, int level) {
        const auto* lv = study.find_level(level);
        const auto* node = study.find_node(e.node_id);
        return fmt::format("\"{}\" on node \"{}\" ({} level, rank {}, entry {})", study.deviation_text(e.deviation),
                           node != nullptr ? node->name : e.node_id, lv != nullptr ? lv->name : "?", level, e.id);
    };
    auto display = [&](const std::string& key) {
        const auto* word = study.find_guide_word(key);
        return word != nullptr ? word->word : key;
    };

    std::string reason;
    switch (link.rule)
    {
        case LinkRule::SameWordIntraLevel:
            reason = fmt::format("both deviations use guide word \"{}\" at the same level", display(wa));
            break;
        case LinkRule::SameWordCrossLevel:
            reason = fmt::format("both deviations use guide word \"{}\" on different levels", display(wa));
            break;
        case LinkRule::Inclusion:
            reason = fmt::format("guide words are related by inclusion ({}, {})", link.relation->first, link.relation->second);
            break;
        case LinkRule::Similarity:
            reason = fmt::format("guide words are declared similar ({}, {})", link.relation->first, link.relation->second);
            break;
    }
    return fmt::format("{} [{}]: {} and {}; {}. Suggested direction: {}; status: {}.", link.id, to_string(link.rule),
                       describe(*a, la), describe(*b, lb), reason, to_string(link.suggested_direction), to_string(link.status));
}

LinkSet set_link_status(LinkSet links, std::string_view id, LinkStatus status, std::optional<LinkDirection> direction)
{
    auto it = std::ranges::find(links.links_, id, &Link::id);
    if (it == links.links_.end())
    {
        throw Error(ErrorCode::UnknownLink, "unknown link '" + std::string(id) + "'");
    }
    it->status = status;
    if (direction)
    {
        it->direction = *direction;
    }
    return links;
}

}
