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

#include <json.hpp>

namespace hills::codec
{

using json = nlohmann::ordered_json;

json to_json(const Study& study);
json to_json(const Link& link);
json to_json(const BnSpec& spec);
json to_json(const Posterior& posterior);

Link link_from_json(const json& j);
BnSpec bn_spec_from_json(const json& j);
/// Parses text, converting nlohmann errors into Error(ParseError).
json parse(std::string_view text);

}
