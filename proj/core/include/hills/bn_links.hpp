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

#include <hills/bayes_net.hpp>
#include <hills/linker.hpp>
#include <hills/study.hpp>

#include <optional>
#include <span>
#include <string>
#include <vector>

namespace hills
{

/// Directed association between two catalog elements, the unit a BN
/// skeleton is built from.
struct BnLink
{
    ElementId from;
    ElementId to;
    LinkStatus status = LinkStatus::Confirmed;
    bool directed = true;
};

struct BnDefaults
{
    /// P(present) assigned to threat variables without parents. nullopt
    /// leaves them unfilled like every other variable.
    std::optional<double> root_threat_prior = 1.0;
};

/// One binary variable per element mentioned, one edge per link in link order.
/// Throws UndirectedLink (unconfirmed or undirected link), NonBnElement
/// (hazards and latent hazards), BadOrientation (anything but threat->cause
/// or cause->mitigation), DanglingReference, CycleDetected.
BayesNet bn_from_links(const Study& study, std::span<const BnLink> links, const BnDefaults& defaults = {});

struct LinkProjection
{
    std::vector<BnLink> links;
    std::vector<std::string> skipped; ///< "<link id>: <reason>"
};

/// Maps confirmed worksheet-entry links to element links. A link from the
/// explaining entry S to the explained entry D contributes S.element -> D.cause
/// when S's element is a threat, plus the threat -> cause -> mitigation chain of
/// both rows. Confirmed links without a usable direction are passed on
/// undirected so bn_from_links reports them; non-threat sources are skipped.
LinkProjection project_links(const Study& study, std::span<const Link> links);

}
