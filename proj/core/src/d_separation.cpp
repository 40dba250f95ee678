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
#include <deque>

namespace hills
{

std::vector<bool> reachable_given(const BayesNet& bn, std::span<const std::size_t> source, std::span<const std::size_t> observed)
{
    const auto n = bn.size();
    std::vector<bool> in_z(n, false);
    for (auto z : observed)
    {
        in_z.at(z) = true;
    }

    // Ancestors of the observed set, observed nodes included: a collider is
    // active iff it is in here.
    std::vector<bool> z_ancestor(n, false);
    std::deque<std::size_t> work(observed.begin(), observed.end());
    while (!work.empty())
    {
        auto v = work.front();
        work.pop_front();
        if (z_ancestor[v])
        {
            continue;
        }
        z_ancestor[v] = true;
        for (auto p : bn.variable(v).parents)
        {
            work.push_back(p);
        }
    }

    enum Dir : std::size_t
    {
        Up = 0,   ///< arrived from a child
        Down = 1, ///< arrived from a parent
    };
    std::vector<bool> visited(2 * n, false);
    std::vector<bool> reachable(n, false);
    std::deque<std::pair<std::size_t, Dir>> queue;
    for (auto x : source)
    {
        queue.emplace_back(x, Up);
    }
    while (!queue.empty())
    {
        auto [v, dir] = queue.front();
        queue.pop_front();
        if (visited[2 * v + dir])
        {
            continue;
        }
        visited[2 * v + dir] = true;
        if (!in_z[v])
        {
            reachable[v] = true;
        }
        const auto& var = bn.variable(v);
        if (dir == Up && !in_z[v])
        {
            for (auto p : var.parents)
            {
                queue.emplace_back(p, Up);
            }
            for (auto c : var.children)
            {
                queue.emplace_back(c, Down);
            }
        }
        else if (dir == Down)
        {
            if (!in_z[v])
            {
                for (auto c : var.children)
                {
                    queue.emplace_back(c, Down);
                }
            }
            if (z_ancestor[v])
            {
                for (auto p : var.parents)
                {
                    queue.emplace_back(p, Up);
                }
            }
        }
    }
    return reachable;
}

bool d_separated(const BayesNet& bn, std::span<const std::size_t> x, std::span<const std::size_t> y, std::span<const std::size_t> z)
{
    std::vector<int> owner(bn.size(), -1);
    int set_no = 0;
    for (auto set : {x, y, z})
    {
        for (auto v : set)
        {
            if (v >= bn.size())
            {
                throw Error(ErrorCode::UnknownVariable, "variable index out of range");
            }
            if (owner[v] != -1 && owner[v] != set_no)
            {
                throw Error(ErrorCode::InvalidArgument, "X, Y and Z must be disjoint; '" + bn.variable(v).id + "' repeats");
            }
            owner[v] = set_no;
        }
        ++set_no;
    }
    auto reachable = reachable_given(bn, x, z);
    return std::ranges::none_of(y, [&](std::size_t v) { return reachable[v]; });
}

bool d_separated(const BayesNet& bn, const std::vector<std::string>& x, const std::vector<std::string>& y,
                 const std::vector<std::string>& z)
{
    auto indices = [&](const std::vector<std::string>& ids) {
        std::vector<std::size_t> out;
        for (const auto& id : ids)
        {
            out.push_back(bn.require(id));
        }
        return out;
    };
    auto xi = indices(x);
    auto yi = indices(y);
    auto zi = indices(z);
    return d_separated(bn, xi, yi, zi);
}

}
