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

#include <hills/linker.hpp>
#include <hills/study.hpp>

#include <benchmark/benchmark.h>

#include <random>
#include <string>

namespace
{

/// Study with `entries` rows spread over three levels and a handful of
/// guide words, so every rule fires.
hills::Study synthetic_study(int entries)
{
    std::mt19937_64 rng(42);
    auto study = hills::new_study(hills::default_level_names());
    for (auto word : hills::default_guide_words())
    {
        study.add_guide_word(std::move(word));
    }
    const std::vector<std::string> words{"No", "Part of", "Wrong", "Invalid", "Incomplete", "More"};
    std::vector<std::string> nodes;
    for (int rank = 1; rank <= 3; ++rank)
    {
        for (int k = 0; k < 4; ++k)
        {
            auto id = study.add_node(rank, "Node " + std::to_string(rank) + "." + std::to_string(k), hills::Granularity::Component);
            study.add_attribute({id, "value", ""});
            study.add_attribute({id, "flow", ""});
            nodes.push_back(id);
        }
    }
    for (int i = 0; i < entries; ++i)
    {
        const auto& node = nodes[rng() % nodes.size()];
        int rank = study.find_node(node)->level_rank;
        // Invalid and Incomplete only apply below the system level.
        auto word = words[rng() % (rank == 1 ? 3 : words.size())];
        auto index = std::to_string(i + 1);
        auto element_kind = rank == 1 ? hills::ElementKind::Hazard : hills::ElementKind::Threat;
        hills::ElementId element(element_kind, rank, index);
        hills::ElementId cause(hills::ElementKind::Cause, rank, "c" + index);
        hills::ElementId mitigation(hills::ElementKind::Mitigation, rank, "m" + index);
        study.add_element({element, "element " + index, std::nullopt});
        study.add_element({cause, "cause " + index, std::nullopt});
        study.add_element({mitigation, "mitigation " + index, std::nullopt});
        study.add_entry({"", node, {hills::guide_word_key(word), rng() % 2 ? "value" : "flow", std::nullopt}, element, cause, mitigation});
    }
    return study;
}

void BM_DeriveLinks(benchmark::State& state)
{
    auto study = synthetic_study(static_cast<int>(state.range(0)));
    auto relations = hills::default_relations();
    relations.add_similarity("invalid", "incomplete");
    std::size_t links = 0;
    for (auto _ : state)
    {
        auto derived = hills::derive_links(study, relations);
        links = derived.size();
        benchmark::DoNotOptimize(derived);
    }
    state.counters["links"] = static_cast<double>(links);
    state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_DeriveLinks)->RangeMultiplier(2)->Range(16, 1024)->Complexity(benchmark::oNSquared);

}
