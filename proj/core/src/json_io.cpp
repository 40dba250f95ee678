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

#include "json_codec.hpp"

#include <hills/error.hpp>
#include <hills/json_io.hpp>

#include <set>

namespace hills
{

namespace codec
{

namespace
{

json optional_text(const std::optional<std::string>& value)
{
    return value ? json(*value) : json(nullptr);
}

[[noreturn]] void fail(const std::string& message)
{
    throw Error(ErrorCode::ParseError, message);
}

void only_keys(const json& j, std::initializer_list<std::string_view> allowed, std::string_view where)
{
    if (!j.is_object())
    {
        fail(std::string(where) + " must be a JSON object");
    }
    for (const auto& [key, value] : j.items())
    {
        if (std::find(allowed.begin(), allowed.end(), key) == allowed.end())
        {
            fail("unknown key '" + key + "' in " + std::string(where));
        }
    }
}

const json& field(const json& j, const char* key, std::string_view where)
{
    auto it = j.find(key);
    if (it == j.end())
    {
        fail("missing key '" + std::string(key) + "' in " + std::string(where));
    }
    return *it;
}

std::string text_field(const json& j, const char* key, std::string_view where)
{
    const auto& v = field(j, key, where);
    if (!v.is_string())
    {
        fail("'" + std::string(key) + "' in " + std::string(where) + " must be a string");
    }
    return v.get<std::string>();
}

}

json to_json(const Study& study)
{
    json levels = json::array();
    for (const auto& level : study.levels())
    {
        levels.push_back({{"rank", level.rank}, {"name", level.name}});
    }
    json words = json::array();
    for (const auto& word : study.guide_words())
    {
        words.push_back({{"word", word.word},
                         {"key", word.key()},
                         {"original_meaning", optional_text(word.original_meaning)},
                         {"meaning", word.meaning},
                         {"applicable_level_ranks", word.applicable_level_ranks},
                         {"provenance", to_string(word.provenance)}});
    }
    json inclusions = json::array();
    for (const auto& [a, b] : study.relations().inclusions)
    {
        inclusions.push_back({a, b});
    }
    json similarities = json::array();
    for (const auto& [a, b] : study.relations().similarities)
    {
        similarities.push_back({a, b});
    }
    json nodes = json::array();
    for (const auto& node : study.nodes())
    {
        json attributes = json::array();
        for (const auto& attribute : study.attributes())
        {
            if (attribute.node_id == node.id)
            {
                attributes.push_back({{"name", attribute.name}, {"description", attribute.description}});
            }
        }
        nodes.push_back({{"id", node.id},
                         {"level_rank", node.level_rank},
                         {"name", node.name},
                         {"description", node.description},
                         {"granularity", to_string(node.granularity)},
                         {"attributes", std::move(attributes)}});
    }
    json elements = json::array();
    for (const auto& element : study.elements())
    {
        elements.push_back({{"id", element.id.str()},
                            {"kind", to_string(element.kind())},
                            {"level_rank", element.level_rank()},
                            {"text", element.text},
                            {"threshold", optional_text(element.threshold)}});
    }
    json entries = json::array();
    for (const auto& entry : study.entries())
    {
        entries.push_back({{"id", entry.id},
                           {"node_id", entry.node_id},
                           {"level_rank", study.entry_level(entry)},
                           {"guide_word", entry.deviation.guide_word},
                           {"attribute", entry.deviation.attribute},
                           {"label", optional_text(entry.deviation.label)},
                           {"deviation", study.deviation_text(entry.deviation)},
                           {"element_id", entry.element.str()},
                           {"cause_id", entry.cause.str()},
                           {"mitigation_id", entry.mitigation.str()}});
    }
    return json{{"levels", std::move(levels)},
                {"guide_words", std::move(words)},
                {"relations", {{"inclusions", std::move(inclusions)}, {"similarities", std::move(similarities)}}},
                {"nodes", std::move(nodes)},
                {"elements", std::move(elements)},
                {"entries", std::move(entries)}};
}

json to_json(const Link& link)
{
    json relation = nullptr;
    if (link.relation)
    {
        relation = json::array({link.relation->first, link.relation->second});
    }
    return json{{"id", link.id},
                {"rule", to_string(link.rule)},
                {"endpoints",
                 json::array({{{"level_rank", link.first.level_rank}, {"entry_id", link.first.entry_id}},
                              {{"level_rank", link.second.level_rank}, {"entry_id", link.second.entry_id}}})},
                {"suggested_direction", to_string(link.suggested_direction)},
                {"direction", to_string(link.direction)},
                {"status", to_string(link.status)},
                {"relation", std::move(relation)}};
}

json to_json(const BnSpec& spec)
{
    json variables = json::array();
    for (const auto& v : spec.variables)
    {
        json cpt = nullptr;
        if (v.cpt)
        {
            cpt = {{"parents", v.cpt->parents}, {"rows", v.cpt->rows}};
        }
        variables.push_back({{"id", v.id}, {"states", v.states}, {"cpt", std::move(cpt)}});
    }
    json edges = json::array();
    for (const auto& [p, c] : spec.edges)
    {
        edges.push_back({p, c});
    }
    return json{{"variables", std::move(variables)}, {"edges", std::move(edges)}};
}

json to_json(const Posterior& posterior)
{
    json dist = json::array();
    for (std::size_t i = 0; i < posterior.states.size(); ++i)
    {
        dist.push_back({{"state", posterior.states[i]}, {"probability", posterior.probabilities[i]}});
    }
    return json{{"target", posterior.target}, {"posterior", std::move(dist)}};
}

Link link_from_json(const json& j)
{
    const std::string_view where = "link";
    only_keys(j, {"id", "rule", "endpoints", "suggested_direction", "direction", "status", "relation", "justification"}, where);
    Link link;
    link.id = text_field(j, "id", where);
    auto rule = parse_link_rule(text_field(j, "rule", where));
    auto suggested = parse_link_direction(text_field(j, "suggested_direction", where));
    auto direction = parse_link_direction(text_field(j, "direction", where));
    auto status = parse_link_status(text_field(j, "status", where));
    if (!rule || !suggested || !direction || !status)
    {
        fail("link " + link.id + " has an unknown rule, direction or status");
    }
    link.rule = *rule;
    link.suggested_direction = *suggested;
    link.direction = *direction;
    link.status = *status;
    const auto& endpoints = field(j, "endpoints", where);
    if (!endpoints.is_array() || endpoints.size() != 2)
    {
        fail("link " + link.id + " needs exactly two endpoints");
    }
    for (std::size_t i = 0; i < 2; ++i)
    {
        const auto& e = endpoints[i];
        only_keys(e, {"level_rank", "entry_id"}, "link endpoint");
        const auto& rank = field(e, "level_rank", "link endpoint");
        if (!rank.is_number_integer())
        {
            fail("endpoint level_rank must be an integer");
        }
        LinkEndpoint endpoint{rank.get<int>(), text_field(e, "entry_id", "link endpoint")};
        (i == 0 ? link.first : link.second) = std::move(endpoint);
    }
    if (auto it = j.find("relation"); it != j.end() && !it->is_null())
    {
        if (!it->is_array() || it->size() != 2 || !(*it)[0].is_string() || !(*it)[1].is_string())
        {
            fail("link relation must be a pair of guide words");
        }
        link.relation = std::pair{(*it)[0].get<std::string>(), (*it)[1].get<std::string>()};
    }
    return link;
}

BnSpec bn_spec_from_json(const json& j)
{
    only_keys(j, {"description", "variables", "edges"}, "BN document");
    BnSpec spec;
    const auto& variables = field(j, "variables", "BN document");
    if (!variables.is_array())
    {
        fail("'variables' must be an array");
    }
    for (const auto& v : variables)
    {
        only_keys(v, {"id", "states", "cpt", "description"}, "variable");
        BnVariableSpec var;
        var.id = text_field(v, "id", "variable");
        if (auto it = v.find("states"); it != v.end())
        {
            if (!it->is_array() || !std::all_of(it->begin(), it->end(), [](const json& s) { return s.is_string(); }))
            {
                fail("states of '" + var.id + "' must be an array of strings");
            }
            var.states = it->get<std::vector<std::string>>();
        }
        if (auto it = v.find("cpt"); it != v.end() && !it->is_null())
        {
            only_keys(*it, {"parents", "rows"}, "cpt of '" + var.id + "'");
            Cpt cpt;
            const auto& parents = field(*it, "parents", "cpt");
            const auto& rows = field(*it, "rows", "cpt");
            if (!parents.is_array() || !std::all_of(parents.begin(), parents.end(), [](const json& p) { return p.is_string(); }))
            {
                fail("cpt parents of '" + var.id + "' must be an array of strings");
            }
            cpt.parents = parents.get<std::vector<std::string>>();
            if (!rows.is_array())
            {
                fail("cpt rows of '" + var.id + "' must be an array");
            }
            for (const auto& row : rows)
            {
                if (!row.is_array() || !std::all_of(row.begin(), row.end(), [](const json& p) { return p.is_number(); }))
                {
                    fail("each cpt row of '" + var.id + "' must be an array of numbers");
                }
                cpt.rows.push_back(row.get<std::vector<double>>());
            }
            var.cpt = std::move(cpt);
        }
        spec.variables.push_back(std::move(var));
    }
    if (auto it = j.find("edges"); it != j.end())
    {
        if (!it->is_array())
        {
            fail("'edges' must be an array");
        }
        for (const auto& e : *it)
        {
            if (!e.is_array() || e.size() != 2 || !e[0].is_string() || !e[1].is_string())
            {
                fail("each edge must be a [parent, child] pair of ids");
            }
            spec.edges.emplace_back(e[0].get<std::string>(), e[1].get<std::string>());
        }
    }
    return spec;
}

json parse(std::string_view text)
{
    try
    {
        return json::parse(text);
    }
    catch (const json::exception& e)
    {
        fail(std::string("invalid JSON: ") + e.what());
    }
}

}

std::string study_to_json(const Study& study)
{
    return codec::to_json(study).dump(2) + "\n";
}

std::string links_to_json(std::span<const Link> links)
{
    codec::json arr = codec::json::array();
    for (const auto& link : links)
    {
        arr.push_back(codec::to_json(link));
    }
    return codec::json{{"links", std::move(arr)}}.dump(2) + "\n";
}

LinkSet links_from_json(std::string_view text)
{
    auto j = codec::parse(text);
    if (!j.is_object() || !j.contains("links") || !j["links"].is_array())
    {
        throw Error(ErrorCode::ParseError, "expected an object with a 'links' array");
    }
    std::vector<Link> links;
    std::set<std::string> ids;
    for (const auto& l : j["links"])
    {
        links.push_back(codec::link_from_json(l));
        if (!ids.insert(links.back().id).second)
        {
            throw Error(ErrorCode::ParseError, "duplicate link id '" + links.back().id + "'");
        }
    }
    return LinkSet(std::move(links));
}

std::string bn_to_json(const BayesNet& bn)
{
    return codec::to_json(bn.spec()).dump(2) + "\n";
}

BnSpec bn_spec_from_json(std::string_view text)
{
    return codec::bn_spec_from_json(codec::parse(text));
}

}
