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

#include <hills/bayes_net.hpp>
#include <hills/error.hpp>

#include <algorithm>
#include <numeric>
#include <set>

namespace hills
{

namespace
{

using detail::Factor;

struct ResolvedQuery
{
    std::size_t target;
    std::vector<std::pair<std::size_t, std::size_t>> observed; ///< (variable, state)
};

ResolvedQuery resolve(const BayesNet& bn, std::string_view target, const Evidence& evidence)
{
    ResolvedQuery q{bn.require(target), {}};
    for (const auto& [id, state] : evidence)
    {
        auto var = bn.require(id);
        if (var == q.target)
        {
            throw Error(ErrorCode::InvalidArgument, "target '" + std::string(target) + "' is also observed");
        }
        auto s = bn.state_index(var, state);
        if (!s)
        {
            throw Error(ErrorCode::UnknownState, "variable '" + id + "' has no state '" + state + "'");
        }
        q.observed.emplace_back(var, *s);
    }
    if (!bn.is_complete())
    {
        for (const auto& v : bn.variables())
        {
            if (!v.has_cpt())
            {
                throw Error(ErrorCode::IncompleteCpt, "variable '" + v.id + "' has no CPT; fill the skeleton first");
            }
        }
    }
    return q;
}

Factor cpt_factor(const BayesNet& bn, std::size_t var)
{
    const auto& v = bn.variable(var);
    // CPT scope in declared order: parents..., var.
    std::vector<std::size_t> scope = v.parents;
    scope.push_back(var);
    std::vector<std::size_t> cards;
    for (auto s : scope)
    {
        cards.push_back(bn.variable(s).cardinality());
    }
    std::vector<std::size_t> order(scope.size());
    std::iota(order.begin(), order.end(), 0);
    std::ranges::sort(order, {}, [&](std::size_t k) { return scope[k]; });

    std::vector<std::size_t> sorted_vars;
    std::vector<std::size_t> sorted_cards;
    for (auto k : order)
    {
        sorted_vars.push_back(scope[k]);
        sorted_cards.push_back(cards[k]);
    }
    // Strides of the declared layout, permuted into sorted order.
    std::vector<std::size_t> declared_stride(scope.size(), 1);
    for (std::size_t k = scope.size(); k-- > 1;)
    {
        declared_stride[k - 1] = declared_stride[k] * cards[k];
    }
    std::vector<double> values(v.table.size());
    std::vector<std::size_t> counter(scope.size(), 0);
    for (std::size_t row = 0; row < values.size(); ++row)
    {
        std::size_t src = 0;
        for (std::size_t d = 0; d < order.size(); ++d)
        {
            src += counter[d] * declared_stride[order[d]];
        }
        values[row] = v.table[src];
        for (std::size_t d = order.size(); d-- > 0;)
        {
            if (++counter[d] < sorted_cards[d])
            {
                break;
            }
            counter[d] = 0;
        }
    }
    return Factor(std::move(sorted_vars), std::move(sorted_cards), std::move(values));
}

std::vector<Factor> initial_factors(const BayesNet& bn, const ResolvedQuery& q)
{
    std::vector<Factor> factors;
    factors.reserve(bn.size());
    for (std::size_t v = 0; v < bn.size(); ++v)
    {
        auto f = cpt_factor(bn, v);
        for (const auto& [var, state] : q.observed)
        {
            f = f.reduce(var, state);
        }
        factors.push_back(std::move(f));
    }
    return factors;
}

std::vector<std::size_t> hidden_variables(const BayesNet& bn, const ResolvedQuery& q)
{
    std::vector<bool> fixed(bn.size(), false);
    fixed[q.target] = true;
    for (const auto& [var, state] : q.observed)
    {
        fixed[var] = true;
    }
    std::vector<std::size_t> hidden;
    for (std::size_t v = 0; v < bn.size(); ++v)
    {
        if (!fixed[v])
        {
            hidden.push_back(v);
        }
    }
    return hidden;
}

std::vector<std::size_t> greedy_order(const BayesNet& bn, const ResolvedQuery& q)
{
    auto hidden = hidden_variables(bn, q);
    std::vector<bool> is_hidden(bn.size(), false);
    for (auto h : hidden)
    {
        is_hidden[h] = true;
    }
    // Interaction graph over non-observed variables: CPT scopes become cliques.
    std::vector<std::set<std::size_t>> adj(bn.size());
    std::vector<bool> observed(bn.size(), false);
    for (const auto& [var, state] : q.observed)
    {
        observed[var] = true;
    }
    for (std::size_t v = 0; v < bn.size(); ++v)
    {
        std::vector<std::size_t> scope;
        for (auto p : bn.variable(v).parents)
        {
            if (!observed[p])
            {
                scope.push_back(p);
            }
        }
        if (!observed[v])
        {
            scope.push_back(v);
        }
        for (auto a : scope)
        {
            for (auto b : scope)
            {
                if (a != b)
                {
                    adj[a].insert(b);
                }
            }
        }
    }
    std::vector<std::size_t> order;
    std::vector<bool> done(bn.size(), false);
    while (order.size() < hidden.size())
    {
        std::size_t best = bn.size();
        for (auto h : hidden)
        {
            if (!done[h] && (best == bn.size() || adj[h].size() < adj[best].size()))
            {
                best = h;
            }
        }
        done[best] = true;
        order.push_back(best);
        std::vector<std::size_t> neighbours(adj[best].begin(), adj[best].end());
        for (auto a : neighbours)
        {
            adj[a].erase(best);
            for (auto b : neighbours)
            {
                if (a != b)
                {
                    adj[a].insert(b);
                }
            }
        }
        adj[best].clear();
    }
    return order;
}

Posterior eliminate(const BayesNet& bn, const ResolvedQuery& q, std::span<const std::size_t> order)
{
    auto factors = initial_factors(bn, q);
    for (auto var : order)
    {
        Factor product;
        std::vector<Factor> rest;
        for (auto& f : factors)
        {
            if (f.contains(var))
            {
                product = product.multiply(f);
            }
            else
            {
                rest.push_back(std::move(f));
            }
        }
        rest.push_back(product.sum_out(var));
        factors = std::move(rest);
    }
    Factor result;
    for (const auto& f : factors)
    {
        result = result.multiply(f);
    }
    // Every remaining factor mentions at most the target.
    const auto& values = result.values();
    double z = std::accumulate(values.begin(), values.end(), 0.0);
    if (!(z > 0.0))
    {
        throw Error(ErrorCode::ZeroProbabilityEvidence, "the evidence has probability zero under this network");
    }
    const auto& target = bn.variable(q.target);
    Posterior post{target.id, target.states, std::vector<double>(target.cardinality(), 0.0)};
    if (result.vars().empty())
    {
        // Target factor collapsed; can only happen for a zero-state target, which build_bn forbids.
        throw Error(ErrorCode::InvalidArgument, "target vanished during elimination");
    }
    for (std::size_t s = 0; s < values.size(); ++s)
    {
        post.probabilities[s] = values[s] / z;
    }
    return post;
}

}

std::vector<std::size_t> min_degree_order(const BayesNet& bn, std::size_t target, const Evidence& evidence)
{
    return greedy_order(bn, resolve(bn, bn.variable(target).id, evidence));
}

Posterior marginal(const BayesNet& bn, std::string_view target, const Evidence& evidence)
{
    auto q = resolve(bn, target, evidence);
    auto order = greedy_order(bn, q);
    return eliminate(bn, q, order);
}

Posterior marginal(const BayesNet& bn, std::string_view target, const Evidence& evidence,
                   std::span<const std::size_t> elimination_order)
{
    auto q = resolve(bn, target, evidence);
    auto hidden = hidden_variables(bn, q);
    std::vector<std::size_t> given(elimination_order.begin(), elimination_order.end());
    std::ranges::sort(given);
    if (given != hidden)
    {
        throw Error(ErrorCode::InvalidArgument, "elimination order must list each hidden variable exactly once");
    }
    return eliminate(bn, q, elimination_order);
}

std::vector<std::size_t> JointTable::assignment(std::size_t row) const
{
    std::vector<std::size_t> out(cardinalities.size());
    for (std::size_t d = cardinalities.size(); d-- > 0;)
    {
        out[d] = row % cardinalities[d];
        row /= cardinalities[d];
    }
    return out;
}

JointTable enumerate_joint(const BayesNet& bn)
{
    JointTable joint;
    std::size_t total = 1;
    for (const auto& v : bn.variables())
    {
        if (!v.has_cpt())
        {
            throw Error(ErrorCode::IncompleteCpt, "variable '" + v.id + "' has no CPT");
        }
        joint.cardinalities.push_back(v.cardinality());
        if (total > kMaxJointStates / v.cardinality())
        {
            throw Error(ErrorCode::StateSpaceTooLarge, "joint state space exceeds 2^20 assignments");
        }
        total *= v.cardinality();
    }
    joint.probabilities.resize(total);
    std::vector<std::size_t> parent_states;
    for (std::size_t row = 0; row < total; ++row)
    {
        auto states = joint.assignment(row);
        double p = 1.0;
        for (std::size_t v = 0; v < bn.size(); ++v)
        {
            parent_states.clear();
            for (auto parent : bn.variable(v).parents)
            {
                parent_states.push_back(states[parent]);
            }
            p *= bn.probability(v, parent_states, states[v]);
        }
        joint.probabilities[row] = p;
    }
    return joint;
}

}
