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

#include <hills/bayes_net.hpp>
#include <hills/study.hpp>

#include <string>
#include <vector>

namespace hills::test
{

std::string data_path(const std::string& name);
std::string read_file(const std::string& path);
/// Parses data/solitude.hills; throws if it does not parse cleanly.
Study load_corpus();

struct FixtureRow
{
    int rank;
    std::string node;
    std::string guide_word;
    std::string attribute;
};

/// Three-level study with the default registry and one worksheet entry per row.
/// Each row gets its own element/cause/mitigation at the row's level.
Study fixture_study(const std::vector<FixtureRow>& rows);

/// The network fragment spanning the ML-lifecycle and inner-ML levels:
/// T2.1 -> C2.a, T2.1 -> C3.a, C2.a -> M2.a, C2.b -> M2.a. Skeleton only.
BnSpec fragment_skeleton();

/// Chain A -> B -> C, fork B <- A -> C and collider A -> C <- B, all binary.
BnSpec chain_skeleton();
BnSpec fork_skeleton();
BnSpec collider_skeleton();

/// Uniform-ish CPTs for every variable so a skeleton becomes buildable.
BnSpec with_flat_cpts(BnSpec spec);

}
