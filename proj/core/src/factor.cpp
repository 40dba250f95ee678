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

#include "factor.hpp"

#include <algorithm>
#include <cassert>
#include <iterator>

namespace hills::detail
{

namespace
{

std::vector<std::size_t> strides_for(const std::vector<std::size_t>& cards)
{
    std::vector<std::size_t> strides(cards.size(), 1);
    for (std::size_t i = cards.size(); i-- > 1;)
    {
        strides[i - 1] = strides[i] * cards[i];
    }
    return strides;
}

}

Factor::Factor(std::vector<std::size_t> vars, std::vector<std::size_t> cards, std::vector<double> values)
    : vars_(std::move(vars)), cards_(std::move(cards)), values_(std::move(values))
{
    assert(std::ranges::is_sorted(vars_));
    assert(vars_.size() == cards_.size());
}

bool Factor::contains(std::size_t var) const
{
    return std::ranges::binary_search(vars_, var);
}

Factor Factor::multiply(const Factor& other) const
{
    std::vector<std::size_t> vars;
    std::ranges::set_union(vars_, other.vars_, std::back_inserter(vars));
    std::vector<std::size_t> cards(vars.size());
    // Stride of each result variable inside each operand (0 when absent).
    std::vector<std::size_t> stride_a(vars.size(), 0);
    std::vector<std::size_t> stride_b(vars.size(), 0);
    auto sa = strides_for(cards_);
    auto sb = strides_for(other.cards_);
    for (std::size_t i = 0; i < vars.size(); ++i)
    {
        auto ia = std::ranges::lower_bound(vars_, vars[i]);
        if (ia != vars_.end() && *ia == vars[i])
        {
            auto k = static_cast<std::size_t>(ia - vars_.begin());
            cards[i] = cards_[k];
            stride_a[i] = sa[k];
        }
        auto ib = std::ranges::lower_bound(other.vars_, vars[i]);
        if (ib != other.vars_.end() && *ib == vars[i])
        {
            auto k = static_cast<std::size_t>(ib - other.vars_.begin());
            cards[i] = other.cards_[k];
            stride_b[i] = sb[k];
        }
    }
    std::size_t total = 1;
    for (auto c : cards)
    {
        total *= c;
    }
    std::vector<double> values(total);
    std::vector<std::size_t> counter(vars.size(), 0);
    std::size_t ia = 0;
    std::size_t ib = 0;
    for (std::size_t row = 0; row < total; ++row)
    {
        values[row] = values_[ia] * other.values_[ib];
        // Odometer increment, last variable fastest.
        for (std::size_t d = vars.size(); d-- > 0;)
        {
            if (++counter[d] < cards[d])
            {
                ia += stride_a[d];
                ib += stride_b[d];
                break;
            }
            counter[d] = 0;
            ia -= stride_a[d] * (cards[d] - 1);
            ib -= stride_b[d] * (cards[d] - 1);
        }
    }
    return Factor(std::move(vars), std::move(cards), std::move(values));
}

Factor Factor::sum_out(std::size_t var) const
{
    auto it = std::ranges::lower_bound(vars_, var);
    if (it == vars_.end() || *it != var)
    {
        return *this;
    }
    auto pos = static_cast<std::size_t>(it - vars_.begin());
    auto strides = strides_for(cards_);
    std::size_t inner = strides[pos];
    std::size_t card = cards_[pos];
    std::size_t outer = values_.size() / (inner * card);

    std::vector<double> values(outer * inner, 0.0);
    for (std::size_t o = 0; o < outer; ++o)
    {
        for (std::size_t s = 0; s < card; ++s)
        {
            const double* src = &values_[(o * card + s) * inner];
            double* dst = &values[o * inner];
            for (std::size_t i = 0; i < inner; ++i)
            {
                dst[i] += src[i];
            }
        }
    }
    auto vars = vars_;
    auto cards = cards_;
    vars.erase(vars.begin() + static_cast<std::ptrdiff_t>(pos));
    cards.erase(cards.begin() + static_cast<std::ptrdiff_t>(pos));
    return Factor(std::move(vars), std::move(cards), std::move(values));
}

Factor Factor::reduce(std::size_t var, std::size_t state) const
{
    auto it = std::ranges::lower_bound(vars_, var);
    if (it == vars_.end() || *it != var)
    {
        return *this;
    }
    auto pos = static_cast<std::size_t>(it - vars_.begin());
    auto strides = strides_for(cards_);
    std::size_t inner = strides[pos];
    std::size_t card = cards_[pos];
    std::size_t outer = values_.size() / (inner * card);

    std::vector<double> values(outer * inner);
    for (std::size_t o = 0; o < outer; ++o)
    {
        std::copy_n(&values_[(o * card + state) * inner], inner, &values[o * inner]);
    }
    auto vars = vars_;
    auto cards = cards_;
    vars.erase(vars.begin() + static_cast<std::ptrdiff_t>(pos));
    cards.erase(cards.begin() + static_cast<std::ptrdiff_t>(pos));
    return Factor(std::move(vars), std::move(cards), std::move(values));
}

}
