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

#include <stdexcept>
#include <string>
#include <string_view>

namespace hills
{

/// Machine-readable failure category. Every exception thrown by the library
/// carries one, so front ends can map failures to exit codes or HTTP statuses.
enum class ErrorCode
{
    InvalidArgument,
    DuplicateName,
    UnknownLevel,
    UnknownNode,
    UnknownAttribute,
    KindLevelMismatch,
    KindMismatch,
    GuideWordNotApplicable,
    DanglingReference,
    BadElementId,
    RelationCycle,
    UnknownLink,
    StaleLink,
    CycleDetected,
    CptShapeMismatch,
    RowNotNormalized,
    IncompleteCpt,
    UnknownVariable,
    UnknownState,
    ZeroProbabilityEvidence,
    StateSpaceTooLarge,
    UndirectedLink,
    NonBnElement,
    BadOrientation,
    ParseError,
    IoError,
};

std::string_view to_string(ErrorCode code);

class Error : public std::runtime_error
{
public:
    Error(ErrorCode code, const std::string& message) : std::runtime_error(message), code_(code) { }

    [[nodiscard]] ErrorCode code() const noexcept { return code_; }

private:
    ErrorCode code_;
};

}
