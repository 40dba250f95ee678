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

#include <hills/bn_links.hpp>
#include <hills/error.hpp>

#include <algorithm>
#include <set>

#include <fmt/format.h>

namespace hills
{

namespace
{

bool orientation_ok(ElementKind from, ElementKind to)
{
    return (from == ElementKind::Threat && to == ElementKind::Cause)
        || (from == ElementKind::Cause && to == ElementKind::Mitigation);
}

bool bn_kind(ElementKind kind)
{
    return kind == ElementKind::Threat || kind == ElementKind::Cause || kind == ElementKind::Mitigation;
}

}

BayesNet bn_from_links(const Study& study, std::span<const BnLink> links, const BnDefaults& defaults)
{
    if (defaults.root_threat_prior && (*defaults.root_threat_prior < 0.0 || *defaults.root_threat_prior > 1.0))
    {
        throw Error(ErrorCode::InvalidArgument, "root threat prior must lie in [0, 1]");
    }
    BnSpec spec;
    std::vector<ElementId> order;
    std::set<std::pair<ElementId, ElementId>> edges;
    auto add_variable = [&](const ElementId& id) {
        if (std::ranges::find(order, id) == order.end())
        {
            order.push_back(id);
        }
    };
    for (const auto& link : links)
    {
        auto label = fmt::format("{} -> {}", link.from.str(), link.to.str());
        if (link.status != LinkStatus::Confirmed || !link.directed)
        {
            throw Error(ErrorCode::UndirectedLink, "link " + label + " is not a confirmed, directed link");
        }
        for (const auto* id : {&link.from, &link.to})
        {
            if (study.find_element(*id) == nullptr)
            {
                throw Error(ErrorCode::DanglingReference, id->str() + " is not in the element catalog");
            }
            if (!bn_kind(id->kind()))
            {
                throw Error(ErrorCode::NonBnElement,
                            id->str() + " is a " + std::string(to_string(id->kind())) + "; only threats, causes and mitigations enter a BN");
            }
        }
        if (!orientation_ok(link.from.kind(), link.to.kind()))
        {
            throw Error(ErrorCode::BadOrientation, "link " + label + " must run threat -> cause or cause -> mitigation");
        }
        add_variable(link.from);
        add_variable(link.to);
        if (edges.emplace(link.from, link.to).second)
        {
            spec.edges.emplace_back(link.from.str(), link.to.str());
        }
    }
    for (const auto& id : order)
    {
        BnVariableSpec var;
        var.id = id.str();
        bool root = std::ranges::none_of(edges, [&](const auto& e) { return e.second == id; });
        if (root && id.kind() == ElementKind::Threat && defaults.root_threat_prior)
        {
            var.cpt = Cpt{{}, {{*defaults.root_threat_prior, 1.0 - *defaults.root_threat_prior}}};
        }
        spec.variables.push_back(std::move(var));
    }
    return build_bn(spec);
}

LinkProjection project_links(const Study& study, std::span<const Link> links)
{
    LinkProjection out;
    std::set<std::pair<ElementId, ElementId>> seen;
    auto emit = [&](const ElementId& from, const ElementId& to, bool directed) {
        if (seen.emplace(from, to).second)
        {
            out.links.push_back(BnLink{from, to, LinkStatus::Confirmed, directed});
        }
    };
    auto row_chain = [&](const WorksheetEntry& e) {
        if (e.element.kind() == ElementKind::Threat)
        {
            emit(e.element, e.cause, true);
        }
        emit(e.cause, e.mitigation, true);
    };
    for (const auto& link : links)
    {
        if (link.status != LinkStatus::Confirmed)
        {
            continue;
        }
        const auto* first = study.find_entry(link.first.entry_id);
        const auto* second = study.find_entry(link.second.entry_id);
        if (first == nullptr || second == nullptr)
        {
            throw Error(ErrorCode::StaleLink, "link " + link.id + " references entries that are not in this study");
        }
        bool cross = link.first.level_rank != link.second.level_rank;
        if (link.direction == LinkDirection::None || !cross)
        {
            // Surface as undirected so the builder reports it.
            out.links.push_back(BnLink{first->element, second->cause, LinkStatus::Confirmed, false});
            continue;
        }
        // `first` is always the higher level.
        const auto& source = link.direction == LinkDirection::HigherExplainsLower ? *first : *second;
        const auto& target = link.direction == LinkDirection::HigherExplainsLower ? *second : *first;
        if (source.element.kind() != ElementKind::Threat)
        {
            out.skipped.push_back(fmt::format("{}: source element {} is a {}, not a threat", link.id, source.element.str(),
                                              to_string(source.element.kind())));
            continue;
        }
        row_chain(source);
        emit(source.element, target.cause, true);
        row_chain(target);
    }
    return out;
}

}
