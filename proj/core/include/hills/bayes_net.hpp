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
#include <map>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace hills
{

inline constexpr double kRowSumTolerance = 1e-9;
/// enumerate_joint refuses nets whose joint state space exceeds this.
inline constexpr std::size_t kMaxJointStates = std::size_t{1} << 20;

/// Conditional probability table. Rows enumerate the parents' joint states
/// row-major over `parents` (the last parent varies fastest); each row is a
/// distribution over the child's states. A root has a single prior row.
struct Cpt
{
    std::vector<std::string> parents;
    std::vector<std::vector<double>> rows;

    friend bool operator==(const Cpt&, const Cpt&) = default;
};

struct BnVariableSpec
{
    std::string id;
    std::vector<std::string> states{"present", "absent"};
    std::optional<Cpt> cpt; ///< absent in an unfilled skeleton

    friend bool operator==(const BnVariableSpec&, const BnVariableSpec&) = default;
};

/// Declarative description of a network, as read from JSON.
struct BnSpec
{
    std::vector<BnVariableSpec> variables;
    std::vector<std::pair<std::string, std::string>> edges; ///< (parent, child)

    friend bool operator==(const BnSpec&, const BnSpec&) = default;
};

struct BnVariable
{
    std::string id;
    std::vector<std::string> states;
    std::vector<std::size_t> parents; ///< in-edges in declared edge order
    std::vector<std::size_t> children;
    /// Flattened CPT, row-major: rows[parent config][state]. Empty when unfilled.
    std::vector<double> table;

    [[nodiscard]] bool has_cpt() const noexcept { return !table.empty(); }
    [[nodiscard]] std::size_t cardinality() const noexcept { return states.size(); }
};

/// Validated, immutable Bayesian network over discrete variables.
class BayesNet
{
public:
    BayesNet() = default;

    [[nodiscard]] std::size_t size() const noexcept { return variables_.size(); }
    [[nodiscard]] bool empty() const noexcept { return variables_.empty(); }
    [[nodiscard]] const BnVariable& variable(std::size_t i) const { return variables_.at(i); }
    [[nodiscard]] const std::vector<BnVariable>& variables() const noexcept { return variables_; }
    [[nodiscard]] const std::vector<std::pair<std::size_t, std::size_t>>& edges() const noexcept { return edges_; }
    [[nodiscard]] const std::vector<std::size_t>& topological_order() const noexcept { return topo_; }

    [[nodiscard]] std::optional<std::size_t> index_of(std::string_view id) const;
    /// Throws Error(UnknownVariable).
    [[nodiscard]] std::size_t require(std::string_view id) const;
    [[nodiscard]] std::optional<std::size_t> state_index(std::size_t var, std::string_view state) const;

    /// True when every variable carries a CPT.
    [[nodiscard]] bool is_complete() const;
    /// P(var = state | parents = parent_states), parent_states in parents(var) order.
    [[nodiscard]] double probability(std::size_t var, std::span<const std::size_t> parent_states, std::size_t state) const;

    /// Round-trips back to the declarative form.
    [[nodiscard]] BnSpec spec() const;

private:
    friend BayesNet build_bn(const BnSpec& spec);
    std::vector<BnVariable> variables_;
    std::vector<std::pair<std::size_t, std::size_t>> edges_;
    std::vector<std::size_t> topo_;
};

/// Validates and indexes a network. Throws Error with CycleDetected,
/// CptShapeMismatch, RowNotNormalized, UnknownVariable or DuplicateName.
BayesNet build_bn(const BnSpec& spec);

/// Observed states by variable id.
using Evidence = std::map<std::string, std::string>;

struct Posterior
{
    std::string target;
    std::vector<std::string> states;
    std::vector<double> probabilities;
};

/// Exact posterior of `target` given `evidence` by variable elimination with a
/// greedy min-degree order. Throws ZeroProbabilityEvidence, IncompleteCpt,
/// UnknownVariable, UnknownState.
Posterior marginal(const BayesNet& bn, std::string_view target, const Evidence& evidence = {});

/// Same, eliminating the hidden variables in the given order. The order must
/// list every variable that is neither the target nor observed, exactly once.
Posterior marginal(const BayesNet& bn, std::string_view target, const Evidence& evidence,
                   std::span<const std::size_t> elimination_order);

/// The hidden variables of a query in the order the default heuristic would
/// eliminate them.
std::vector<std::size_t> min_degree_order(const BayesNet& bn, std::size_t target, const Evidence& evidence);

/// Full joint distribution. Assignments are enumerated row-major over the
/// net's variable order (last variable fastest).
struct JointTable
{
    std::vector<std::size_t> cardinalities;
    std::vector<double> probabilities;

    [[nodiscard]] std::vector<std::size_t> assignment(std::size_t row) const;
};

/// Test oracle: product of CPT entries for every joint state. Throws
/// StateSpaceTooLarge above kMaxJointStates, IncompleteCpt on skeletons.
JointTable enumerate_joint(const BayesNet& bn);

/// True iff every trail between X and Y is blocked by Z. Sets must be disjoint.
bool d_separated(const BayesNet& bn, std::span<const std::size_t> x, std::span<const std::size_t> y,
                 std::span<const std::size_t> z);
bool d_separated(const BayesNet& bn, const std::vector<std::string>& x, const std::vector<std::string>& y,
                 const std::vector<std::string>& z);

/// Variables reachable from `source` by an active trail given `observed`.
std::vector<bool> reachable_given(const BayesNet& bn, std::span<const std::size_t> source, std::span<const std::size_t> observed);

}
