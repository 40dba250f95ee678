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

#include <compare>
#include <optional>
#include <string>
#include <string_view>

namespace hills
{

enum class ElementKind
{
    Hazard,
    LatentHazard,
    Threat,
    Cause,
    Mitigation,
};

std::string_view to_string(ElementKind kind);
/// Letter prefix used in rendered ids: H, LH, T, C, M.
std::string_view kind_letter(ElementKind kind);

/// Identifier of a safety element, rendered as `<kind letter><level>.<index>`,
/// e.g. "T2.1", "C2.a", "LH3.2". The index is an alphanumeric token because
/// analysts number threats and letter causes.
class ElementId
{
public:
    /// Throws Error(BadElementId) when level < 1 or the index is not alphanumeric.
    ElementId(ElementKind kind, int level, std::string index);

    static ElementId parse(std::string_view text);
    static std::optional<ElementId> try_parse(std::string_view text) noexcept;

    [[nodiscard]] ElementKind kind() const noexcept { return kind_; }
    [[nodiscard]] int level() const noexcept { return level_; }
    [[nodiscard]] const std::string& index() const noexcept { return index_; }

    [[nodiscard]] std::string str() const;

    friend bool operator==(const ElementId&, const ElementId&) = default;
    friend std::strong_ordering operator<=>(const ElementId&, const ElementId&) = default;

private:
    ElementKind kind_;
    int level_;
    std::string index_;
};

}
