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

#include <hills/study.hpp>

namespace hills
{

std::vector<GuideWord> default_guide_words()
{
    const std::set<int> all{1, 2, 3};
    const std::set<int> ml{2, 3};
    auto classic = [&](std::string word, std::string meaning) {
        return GuideWord{std::move(word), std::nullopt, std::move(meaning), all, Provenance::Classic};
    };
    auto redefined = [&](std::string word, std::string original, std::string meaning) {
        return GuideWord{std::move(word), std::move(original), std::move(meaning), all, Provenance::Redefined};
    };
    auto fresh = [](std::string word, std::string meaning, std::set<int> ranks) {
        return GuideWord{std::move(word), std::nullopt, std::move(meaning), std::move(ranks), Provenance::New};
    };
    return {
        classic("No", "Complete negation of the design intent"),
        classic("As well as", "Qualitative modification or increase"),
        classic("Reverse", "Logical opposite of the design intent"),
        classic("Other than", "Complete substitution"),
        classic("Early", "Relative to clock time, earlier than intended"),
        classic("Late", "Relative to clock time, later than intended"),
        classic("Before", "Relating to order or sequence, sooner than intended"),
        classic("After", "Relating to order or sequence, later than intended"),
        redefined("Part of", "There is a qualitative modification", "Incomplete structure, definition or setting"),
        redefined("Less", "Too little water or additive volume added", "A less amount of data"),
        redefined("More", "Too much water or additive volume added", "A large amount of data"),
        // "Wrong" also appears at the system level ("Wrong value").
        fresh("Wrong", "Wrong setting or data value", all),
        fresh("Invalid", "Invalid data value or data flow, possibly conflicting with other components", ml),
        fresh("Incomplete", "Incomplete data value", ml),
        fresh("Perturbed", "Data was perturbed by external attackers", ml),
        fresh("Incapable", "Part of data can not be labeled", ml),
    };
}

GuideWordRelationTable default_relations()
{
    GuideWordRelationTable table;
    table.add_inclusion("no", "part of");
    table.add_similarity("invalid", "incompatible");
    return table;
}

}
