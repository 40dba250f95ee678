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

#include "fixtures.hpp"

#include <hills/study_format.hpp>

#include <algorithm>
#include <fstream>
#include <map>
#include <sstream>
#include <stdexcept>

#ifndef HILLS_DATA_DIR
#error "HILLS_DATA_DIR must point at the repository data directory"
#endif

namespace hills::test
{

std::string data_path(const std::string& name)
{
    return std::string(HILLS_DATA_DIR) + "/" + name;
}

std::string read_file(const std::string& path)
{
    std::ifstream in(path, std::ios::binary);
    if (!in)
    {
        throw std::runtime_error("cannot open " + path);
    }
    std::ostringstream s;
    s << in.rdbuf();
    return s.str();
}

Study load_corpus()
{
    auto doc = parse_study(read_file(data_path("solitude.hills")), "solitude.hills");
    if (!doc.ok())
    {
        std::string message = "corpus does not parse:";
        for (const auto& d : doc.diagnostics)
        {
            message += "\n" + format_diagnostic(d, "solitude.hills");
        }
        throw std::runtime_error(message);
    }
    return std::move(*doc.study);
}

Study fixture_study(const std::vector<FixtureRow>& rows)
{
    auto study = new_study(default_level_names());
    for (auto word : default_guide_words())
    {
        study.add_guide_word(std::move(word));
    }
    std::map<int, int> per_level;
    for (const auto& row : rows)
    {
        auto id = slugify(row.node);
        if (study.find_node(id) == nullptr)
        {
            study.add_node(row.rank, row.node, row.rank == 1 ? Granularity::Component : Granularity::LifecycleStage);
        }
        if (study.find_attribute(id, row.attribute) == nullptr)
        {
            study.add_attribute(Attribute{id, row.attribute, ""});
        }
        int n = ++per_level[row.rank];
        auto index = std::to_string(n);
        auto letter = std::string(1, static_cast<char>('a' + n - 1));
        ElementId head(row.rank == 1 ? ElementKind::Hazard : ElementKind::LatentHazard, row.rank, index);
        ElementId cause(ElementKind::Cause, row.rank, letter);
        ElementId mitigation(ElementKind::Mitigation, row.rank, letter);
        study.add_element(SafetyElement{head, "element " + head.str(), std::nullopt});
        study.add_element(SafetyElement{cause, "cause " + cause.str(), std::nullopt});
        study.add_element(SafetyElement{mitigation, "mitigation " + mitigation.str(), std::nullopt});
        study.add_entry(WorksheetEntry{"", id, Deviation{row.guide_word, row.attribute, std::nullopt}, head, cause, mitigation});
    }
    return study;
}

namespace
{

BnSpec skeleton(std::vector<std::string> ids, std::vector<std::pair<std::string, std::string>> edges)
{
    BnSpec spec;
    for (auto& id : ids)
    {
        spec.variables.push_back(BnVariableSpec{std::move(id), {"present", "absent"}, std::nullopt});
    }
    spec.edges = std::move(edges);
    return spec;
}

}

BnSpec fragment_skeleton()
{
    return skeleton({"T2.1", "C2.a", "C3.a", "C2.b", "M2.a"},
                    {{"T2.1", "C2.a"}, {"T2.1", "C3.a"}, {"C2.a", "M2.a"}, {"C2.b", "M2.a"}});
}

BnSpec chain_skeleton()
{
    return skeleton({"A", "B", "C"}, {{"A", "B"}, {"B", "C"}});
}

BnSpec fork_skeleton()
{
    return skeleton({"A", "B", "C"}, {{"A", "B"}, {"A", "C"}});
}

BnSpec collider_skeleton()
{
    return skeleton({"A", "B", "C"}, {{"A", "C"}, {"B", "C"}});
}

BnSpec with_flat_cpts(BnSpec spec)
{
    for (auto& v : spec.variables)
    {
        Cpt cpt;
        std::size_t rows = 1;
        for (const auto& [parent, child] : spec.edges)
        {
            if (child == v.id)
            {
                cpt.parents.push_back(parent);
                rows *= std::ranges::find(spec.variables, parent, &BnVariableSpec::id)->states.size();
            }
        }
        for (std::size_t r = 0; r < rows; ++r)
        {
            std::vector<double> row(v.states.size(), 1.0 / static_cast<double>(v.states.size()));
            cpt.rows.push_back(std::move(row));
        }
        v.cpt = std::move(cpt);
    }
    return spec;
}

}
