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

#include <cstddef>
#include <vector>

namespace hills::detail
{

/// Table over a sorted set of discrete variables; values are row-major with
/// the last variable varying fastest.
class Factor
{
public:
    Factor() : values_{1.0} { }
    Factor(std::vector<std::size_t> vars, std::vector<std::size_t> cards, std::vector<double> values);

    [[nodiscard]] const std::vector<std::size_t>& vars() const noexcept { return vars_; }
    [[nodiscard]] const std::vector<std::size_t>& cards() const noexcept { return cards_; }
    [[nodiscard]] const std::vector<double>& values() const noexcept { return values_; }
    [[nodiscard]] bool contains(std::size_t var) const;

    [[nodiscard]] Factor multiply(const Factor& other) const;
    [[nodiscard]] Factor sum_out(std::size_t var) const;
    /// Fixes `var` to `state` and drops it from the scope.
    [[nodiscard]] Factor reduce(std::size_t var, std::size_t state) const;

private:
    std::vector<std::size_t> vars_;
    std::vector<std::size_t> cards_;
    std::vector<double> values_;
};

}
