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
#include <hills/linker.hpp>
#include <hills/study.hpp>

#include <span>
#include <string>
#include <string_view>

namespace hills
{

/// Study as JSON (snake_case keys): levels, guide_words, relations, nodes with
/// attributes, elements and worksheet entries.
std::string study_to_json(const Study& study);

/// {"links": [...]} with rule, endpoints, directions, status and relation.
std::string links_to_json(std::span<const Link> links);
/// Inverse of links_to_json. Throws Error(ParseError).
LinkSet links_from_json(std::string_view text);

/// BN document: {"variables": [{"id", "states", "cpt": {"parents", "rows"} | null}], "edges": [[parent, child]]}.
std::string bn_to_json(const BayesNet& bn);
/// Throws Error(ParseError) on malformed documents; semantic checks happen in build_bn.
BnSpec bn_spec_from_json(std::string_view text);

}
