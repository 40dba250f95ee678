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

#include <hills/element_id.hpp>
#include <hills/error.hpp>

#include <algorithm>
#include <array>
#include <cctype>
#include <charconv>
#include <utility>

namespace hills
{

std::string_view to_string(ErrorCode code)
{
    switch (code)
    {
        case ErrorCode::InvalidArgument: return "InvalidArgument";
        case ErrorCode::DuplicateName: return "DuplicateName";
        case ErrorCode::UnknownLevel: return "UnknownLevel";
        case ErrorCode::UnknownNode: return "UnknownNode";
        case ErrorCode::UnknownAttribute: return "UnknownAttribute";
        case ErrorCode::KindLevelMismatch: return "KindLevelMismatch";
        case ErrorCode::KindMismatch: return "KindMismatch";
        case ErrorCode::GuideWordNotApplicable: return "GuideWordNotApplicable";
        case ErrorCode::DanglingReference: return "DanglingReference";
        case ErrorCode::BadElementId: return "BadElementId";
        case ErrorCode::RelationCycle: return "RelationCycle";
        case ErrorCode::UnknownLink: return "UnknownLink";
        case ErrorCode::StaleLink: return "StaleLink";
        case ErrorCode::CycleDetected: return "CycleDetected";
        case ErrorCode::CptShapeMismatch: return "CptShapeMismatch";
        case ErrorCode::RowNotNormalized: return "RowNotNormalized";
        case ErrorCode::IncompleteCpt: return "IncompleteCpt";
        case ErrorCode::UnknownVariable: return "UnknownVariable";
        case ErrorCode::UnknownState: return "UnknownState";
        case ErrorCode::ZeroProbabilityEvidence: return "ZeroProbabilityEvidence";
        case ErrorCode::StateSpaceTooLarge: return "StateSpaceTooLarge";
        case ErrorCode::UndirectedLink: return "UndirectedLink";
        case ErrorCode::NonBnElement: return "NonBnElement";
        case ErrorCode::BadOrientation: return "BadOrientation";
        case ErrorCode::ParseError: return "ParseError";
        case ErrorCode::IoError: return "IoError";
    }
    return "Unknown";
}

std::string_view to_string(ElementKind kind)
{
    switch (kind)
    {
        case ElementKind::Hazard: return "hazard";
        case ElementKind::LatentHazard: return "latent_hazard";
        case ElementKind::Threat: return "threat";
        case ElementKind::Cause: return "cause";
        case ElementKind::Mitigation: return "mitigation";
    }
    return "unknown";
}

std::string_view kind_letter(ElementKind kind)
{
    switch (kind)
    {
        case ElementKind::Hazard: return "H";
        case ElementKind::LatentHazard: return "LH";
        case ElementKind::Threat: return "T";
        case ElementKind::Cause: return "C";
        case ElementKind::Mitigation: return "M";
    }
    return "?";
}

namespace
{

bool is_index_token(std::string_view index)
{
    return !index.empty()
        && std::ranges::all_of(index, [](char c) { return std::isalnum(static_cast<unsigned char>(c)) != 0; });
}

}

ElementId::ElementId(ElementKind kind, int level, std::string index) : kind_(kind), level_(level), index_(std::move(index))
{
    if (level_ < 1 || level_ > 9)
    {
        throw Error(ErrorCode::BadElementId, "element level must be a single digit 1-9, got " + std::to_string(level_));
    }
    if (!is_index_token(index_))
    {
        throw Error(ErrorCode::BadElementId, "element index must be alphanumeric, got '" + index_ + "'");
    }
}

std::optional<ElementId> ElementId::try_parse(std::string_view text) noexcept
{
    static constexpr std::array prefixes{
        std::pair{std::string_view{"LH"}, ElementKind::LatentHazard},
        std::pair{std::string_view{"H"}, ElementKind::Hazard},
        std::pair{std::string_view{"T"}, ElementKind::Threat},
        std::pair{std::string_view{"C"}, ElementKind::Cause},
        std::pair{std::string_view{"M"}, ElementKind::Mitigation},
    };
    for (const auto& [prefix, kind] : prefixes)
    {
        if (!text.starts_with(prefix))
        {
            continue;
        }
        auto rest = text.substr(prefix.size());
        if (rest.size() < 3 || rest[0] < '1' || rest[0] > '9' || rest[1] != '.')
        {
            return std::nullopt;
        }
        auto index = rest.substr(2);
        if (!is_index_token(index))
        {
            return std::nullopt;
        }
        return ElementId(kind, rest[0] - '0', std::string(index));
    }
    return std::nullopt;
}

ElementId ElementId::parse(std::string_view text)
{
    if (auto id = try_parse(text))
    {
        return *id;
    }
    throw Error(ErrorCode::BadElementId, "malformed element id '" + std::string(text) + "' (expected e.g. T2.1, C2.a)");
}

std::string ElementId::str() const
{
    std::string out(kind_letter(kind_));
    out += static_cast<char>('0' + level_);
    out += '.';
    out += index_;
    return out;
}

}
