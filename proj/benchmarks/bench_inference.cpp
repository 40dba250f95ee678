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

#include <benchmark/benchmark.h>

#include <random>
#include <string>

namespace
{

/// Layered binary net: each variable draws up to `fan_in` parents from the
/// previous `window` variables, so treewidth stays bounded as n grows.
hills::BayesNet layered_net(int n, int fan_in, int window, std::uint64_t seed)
{
    std::mt19937_64 rng(seed);
    std::uniform_real_distribution<double> unit(0.05, 0.95);
    hills::BnSpec spec;
    for (int v = 0; v < n; ++v)
    {
        hills::BnVariableSpec var;
        var.id = "V" + std::to_string(v);
        hills::Cpt cpt;
        for (int k = 0; k < fan_in && v > 0; ++k)
        {
            auto parent = "V" + std::to_string(v - 1 - static_cast<int>(rng() % std::min(v, window)));
            if (std::ranges::find(cpt.parents, parent) == cpt.parents.end())
            {
                cpt.parents.push_back(parent);
                spec.edges.emplace_back(parent, var.id);
            }
        }
        for (std::size_t r = 0; r < (std::size_t{1} << cpt.parents.size()); ++r)
        {
            double p = unit(rng);
            cpt.rows.push_back({p, 1.0 - p});
        }
        var.cpt = std::move(cpt);
        spec.variables.push_back(std::move(var));
    }
    return hills::build_bn(spec);
}

void BM_MarginalNoEvidence(benchmark::State& state)
{
    auto n = static_cast<int>(state.range(0));
    auto bn = layered_net(n, 2, 4, 7);
    auto target = "V" + std::to_string(n - 1);
    for (auto _ : state)
    {
        benchmark::DoNotOptimize(hills::marginal(bn, target));
    }
    state.SetComplexityN(n);
}
BENCHMARK(BM_MarginalNoEvidence)->RangeMultiplier(2)->Range(8, 512)->Complexity();

void BM_MarginalWithEvidence(benchmark::State& state)
{
    auto n = static_cast<int>(state.range(0));
    auto bn = layered_net(n, 3, 5, 11);
    hills::Evidence evidence;
    for (int v = 1; v < n; v += 7)
    {
        evidence["V" + std::to_string(v)] = "present";
    }
    for (auto _ : state)
    {
        benchmark::DoNotOptimize(hills::marginal(bn, "V0", evidence));
    }
    state.SetComplexityN(n);
}
BENCHMARK(BM_MarginalWithEvidence)->RangeMultiplier(2)->Range(8, 512)->Complexity();

void BM_EnumerateJoint(benchmark::State& state)
{
    auto bn = layered_net(static_cast<int>(state.range(0)), 2, 3, 5);
    for (auto _ : state)
    {
        benchmark::DoNotOptimize(hills::enumerate_joint(bn));
    }
}
BENCHMARK(BM_EnumerateJoint)->DenseRange(4, 16, 4);

void BM_DSeparated(benchmark::State& state)
{
    auto n = static_cast<int>(state.range(0));
    auto bn = layered_net(n, 2, 4, 3);
    std::vector<std::size_t> x{0}, y{static_cast<std::size_t>(n - 1)}, z;
    for (int v = 2; v < n - 1; v += 5)
    {
        z.push_back(static_cast<std::size_t>(v));
    }
    for (auto _ : state)
    {
        benchmark::DoNotOptimize(hills::d_separated(bn, x, y, z));
    }
    state.SetComplexityN(n);
}
BENCHMARK(BM_DSeparated)->RangeMultiplier(4)->Range(16, 4096)->Complexity();

}
