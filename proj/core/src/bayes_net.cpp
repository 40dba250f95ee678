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

#include <hills/bayes_net.hpp>
#include <hills/error.hpp>

#include <algorithm>
#include <cmath>
#include <queue>
#include <set>

#include <fmt/format.h>

namespace hills
{

std::optional<std::size_t> BayesNet::index_of(std::string_view id) const
{
    auto it = std::ranges::find(variables_, id, &BnVariable::id);
    if (it == variables_.end())
    {
        return std::nullopt;
    }
    return static_cast<std::size_t>(it - variables_.begin());
}

std::size_t BayesNet::require(std::string_view id) const
{
    if (auto i = index_of(id))
    {
        return *i;
    }
    throw Error(ErrorCode::UnknownVariable, "unknown variable '" + std::string(id) + "'");
}

std::optional<std::size_t> BayesNet::state_index(std::size_t var, std::string_view state) const
{
    const auto& states = variables_.at(var).states;
    auto it = std::ranges::find(states, state);
    if (it == states.end())
    {
        return std::nullopt;
    }
    return static_cast<std::size_t>(it - states.begin());
}

bool BayesNet::is_complete() const
{
    return std::ranges::all_of(variables_, &BnVariable::has_cpt);
}

double BayesNet::probability(std::size_t var, std::span<const std::size_t> parent_states, std::size_t state) const
{
    const auto& v = variables_.at(var);
    std::size_t row = 0;
    for (std::size_t k = 0; k < v.parents.size(); ++k)
    {
        row = row * variables_[v.parents[k]].cardinality() + parent_states[k];
    }
    return v.table.at(row * v.cardinality() + state);
}

BnSpec BayesNet::spec() const
{
    BnSpec out;
    for (const auto& v : variables_)
    {
        BnVariableSpec var{v.id, v.states, std::nullopt};
        if (v.has_cpt())
        {
            Cpt cpt;
            for (auto p : v.parents)
            {
                cpt.parents.push_back(variables_[p].id);
            }
            for (std::size_t r = 0; r < v.table.size(); r += v.cardinality())
            {
                cpt.rows.emplace_back(v.table.begin() + static_cast<std::ptrdiff_t>(r),
                                      v.table.begin() + static_cast<std::ptrdiff_t>(r + v.cardinality()));
            }
            var.cpt = std::move(cpt);
        }
        out.variables.push_back(std::move(var));
    }
    for (const auto& [p, c] : edges_)
    {
        out.edges.emplace_back(variables_[p].id, variables_[c].id);
    }
    return out;
}

BayesNet build_bn(const BnSpec& spec)
{
    BayesNet bn;
    std::set<std::string> ids;
    for (const auto& v : spec.variables)
    {
        if (v.id.empty())
        {
            throw Error(ErrorCode::InvalidArgument, "variable id must not be empty");
        }
        if (!ids.insert(v.id).second)
        {
            throw Error(ErrorCode::DuplicateName, "duplicate variable '" + v.id + "'");
        }
        if (v.states.size() < 2)
        {
            throw Error(ErrorCode::CptShapeMismatch, "variable '" + v.id + "' needs at least two states");
        }
        if (std::set(v.states.begin(), v.states.end()).size() != v.states.size())
        {
            throw Error(ErrorCode::DuplicateName, "variable '" + v.id + "' repeats a state name");
        }
        bn.variables_.push_back(BnVariable{v.id, v.states, {}, {}, {}});
    }

    std::set<std::pair<std::size_t, std::size_t>> seen;
    for (const auto& [parent, child] : spec.edges)
    {
        auto p = bn.require(parent);
        auto c = bn.require(child);
        if (p == c)
        {
            throw Error(ErrorCode::CycleDetected, "self-loop on '" + parent + "'");
        }
        if (!seen.emplace(p, c).second)
        {
            throw Error(ErrorCode::DuplicateName, "duplicate edge " + parent + " -> " + child);
        }
        bn.edges_.emplace_back(p, c);
        bn.variables_[c].parents.push_back(p);
        bn.variables_[p].children.push_back(c);
    }

    // Kahn's algorithm; ties resolved by declaration order.
    std::vector<std::size_t> indegree(bn.size(), 0);
    for (const auto& [p, c] : bn.edges_)
    {
        ++indegree[c];
    }
    std::priority_queue<std::size_t, std::vector<std::size_t>, std::greater<>> ready;
    for (std::size_t i = 0; i < bn.size(); ++i)
    {
        if (indegree[i] == 0)
        {
            ready.push(i);
        }
    }
    while (!ready.empty())
    {
        auto v = ready.top();
        ready.pop();
        bn.topo_.push_back(v);
        for (auto c : bn.variables_[v].children)
        {
            if (--indegree[c] == 0)
            {
                ready.push(c);
            }
        }
    }
    if (bn.topo_.size() != bn.size())
    {
        std::string members;
        for (std::size_t i = 0; i < bn.size(); ++i)
        {
            if (indegree[i] > 0)
            {
                members += (members.empty() ? "" : ", ") + bn.variables_[i].id;
            }
        }
        throw Error(ErrorCode::CycleDetected, "edges form a cycle through {" + members + "}");
    }

    for (std::size_t i = 0; i < spec.variables.size(); ++i)
    {
        const auto& vs = spec.variables[i];
        auto& var = bn.variables_[i];
        if (!vs.cpt)
        {
            continue;
        }
        std::vector<std::string> expected;
        for (auto p : var.parents)
        {
            expected.push_back(bn.variables_[p].id);
        }
        if (vs.cpt->parents != expected)
        {
            throw Error(ErrorCode::CptShapeMismatch,
                        fmt::format("CPT of '{}' lists parents [{}] but its in-edges are [{}]", var.id,
                                    fmt::join(vs.cpt->parents, ", "), fmt::join(expected, ", ")));
        }
        std::size_t rows = 1;
        for (auto p : var.parents)
        {
            rows *= bn.variables_[p].cardinality();
        }
        if (vs.cpt->rows.size() != rows)
        {
            throw Error(ErrorCode::CptShapeMismatch,
                        fmt::format("CPT of '{}' has {} rows, expected {}", var.id, vs.cpt->rows.size(), rows));
        }
        var.table.reserve(rows * var.cardinality());
        for (std::size_t r = 0; r < rows; ++r)
        {
            const auto& row = vs.cpt->rows[r];
            if (row.size() != var.cardinality())
            {
                throw Error(ErrorCode::CptShapeMismatch,
                            fmt::format("CPT of '{}' row {} has {} entries, expected {}", var.id, r, row.size(), var.cardinality()));
            }
            double sum = 0.0;
            for (double p : row)
            {
                if (!std::isfinite(p) || p < 0.0 || p > 1.0)
                {
                    throw Error(ErrorCode::RowNotNormalized,
                                fmt::format("CPT of '{}' row {} has entry {} outside [0, 1]", var.id, r, p));
                }
                sum += p;
            }
            if (std::abs(sum - 1.0) > kRowSumTolerance)
            {
                throw Error(ErrorCode::RowNotNormalized,
                            fmt::format("CPT of '{}' row {} sums to {:.12g}, not 1", var.id, r, sum));
            }
            var.table.insert(var.table.end(), row.begin(), row.end());
        }
    }
    return bn;
}

}
